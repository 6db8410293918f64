#include "gyro/mask.hpp"

namespace gyro {

std::vector<int> elements(Mask m) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(popcount(m)));
  for_each_element(m, [&](int i) { out.push_back(i); });
  return out;
}

Mask mask_of(const std::vector<int>& xs) {
  Mask m = 0;
  for (int x : xs) m |= singleton(x);
  return m;
}

std::string format_set(Mask m) {
  std::string out = "{";
  bool first = true;
  for_each_element(m, [&](int i) {
    if (!first) out += ", ";
    out += std::to_string(i);
    first = false;
  });
  return out + "}";
}

}  // namespace gyro
