#include "arclen/error.hpp"

#include <sstream>

namespace arclen {

const char* to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::invalid_data: return "invalid_data";
    case ErrorCode::degenerate_lens: return "degenerate_lens";
    case ErrorCode::zero_chord: return "zero_chord";
    case ErrorCode::length_out_of_range: return "length_out_of_range";
    case ErrorCode::unsupported_query: return "unsupported_query";
    case ErrorCode::no_root: return "no_root";
    case ErrorCode::infeasible: return "infeasible";
    case ErrorCode::non_convex: return "non_convex";
    case ErrorCode::numerical: return "numerical";
    }
    return "unknown";
}

bool is_numerical(ErrorCode code)
{
    return code == ErrorCode::no_root || code == ErrorCode::numerical;
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code)
{
}

namespace {

std::string length_message(LengthBound which, double bound, double length, const std::string& what)
{
    std::ostringstream os;
    os.precision(17);
    os << "length " << length << (which == LengthBound::below_lower ? " below " : " above ")
       << what << " " << bound;
    return os.str();
}

} // namespace

LengthRangeError::LengthRangeError(LengthBound which, double bound, double length,
                                   const std::string& what)
    : Error(ErrorCode::length_out_of_range, length_message(which, bound, length, what)),
      which_(which), bound_(bound), length_(length)
{
}

} // namespace arclen
