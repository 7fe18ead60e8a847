#include "vosa/half_int.hpp"

#include <stdexcept>

namespace vosa {

HalfInt HalfInt::parse(const std::string& text) {
  auto bad = [&] { return std::invalid_argument("not a half-integer: '" + text + "'"); };
  if (text.empty()) throw bad();
  std::size_t used = 0;
  try {
    if (auto slash = text.find('/'); slash != std::string::npos) {
      const int num = std::stoi(text.substr(0, slash), &used);
      if (used != slash) throw bad();
      const std::string den_text = text.substr(slash + 1);
      const int den = std::stoi(den_text, &used);
      if (used != den_text.size()) throw bad();
      if (den == 1) return HalfInt(num);
      if (den == 2) return from_twice(num);
      if (den == -2) return from_twice(-num);
      throw bad();
    }
    const double v = std::stod(text, &used);
    if (used != text.size()) throw bad();
    const double twice = 2 * v;
    if (twice != static_cast<double>(static_cast<int>(twice))) throw bad();
    return from_twice(static_cast<int>(twice));
  } catch (const std::logic_error&) {
    throw bad();
  }
}

std::string HalfInt::to_string() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

}  // namespace vosa
