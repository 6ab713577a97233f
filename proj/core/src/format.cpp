#include "gdep/format.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace gdep {

std::string fixed6(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("fixed6: non-finite value");
  std::array<char, 400> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::fixed, 6);
  if (ec != std::errc{}) throw std::runtime_error("fixed6: formatting failed");
  std::string out(buf.data(), end);
  if (out == "-0.000000") out.erase(0, 1);
  return out;
}

}  // namespace gdep
