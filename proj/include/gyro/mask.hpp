#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace gyro {

// Subsets of a carrier {0..n-1}, n <= 64, packed into one machine word.
using Mask = std::uint64_t;

inline constexpr int kMaxCarrier = 64;

constexpr Mask full_mask(int n) {
  return n >= kMaxCarrier ? ~Mask{0} : (Mask{1} << n) - 1;
}

constexpr Mask singleton(int i) { return Mask{1} << i; }

constexpr bool contains(Mask m, int i) { return (m >> i) & Mask{1}; }

constexpr bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

inline int popcount(Mask m) { return std::popcount(m); }

template <typename F>
void for_each_element(Mask m, F&& f) {
  while (m) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

// image of a subset under an element map i -> f(i)
template <typename F>
Mask image(Mask m, F&& f) {
  Mask r = 0;
  for_each_element(m, [&](int i) { r |= singleton(f(i)); });
  return r;
}

std::vector<int> elements(Mask m);
Mask mask_of(const std::vector<int>& xs);

// "{0, 1, 2}" / "{}" rendering for witnesses and reports
std::string format_set(Mask m);

}  // namespace gyro
