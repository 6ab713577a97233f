#pragma once

#include <string>

namespace gdep {

/// Fixed 6-decimal rendering, locale independent, correctly rounded (ties
/// to even on the exact binary value). Negative zero prints as zero.
std::string fixed6(double value);

}  // namespace gdep
