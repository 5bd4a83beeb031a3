#pragma once

#include <stdexcept>
#include <string>

namespace arclen {

enum class ErrorCode {
    invalid_data,
    degenerate_lens,
    zero_chord,
    length_out_of_range,
    unsupported_query,
    no_root,
    infeasible,
    non_convex,
    numerical,
};

const char* to_string(ErrorCode code);

// Numerical failures (as opposed to bad input) map to CLI exit code 3.
bool is_numerical(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

enum class LengthBound { below_lower, above_upper };

class LengthRangeError : public Error {
public:
    LengthRangeError(LengthBound which, double bound, double length, const std::string& what);
    LengthBound which() const { return which_; }
    double bound() const { return bound_; }
    double length() const { return length_; }

private:
    LengthBound which_;
    double bound_;
    double length_;
};

} // namespace arclen
