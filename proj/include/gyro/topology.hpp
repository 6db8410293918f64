#pragma once

#include <cstddef>
#include <vector>

#include "gyro/mask.hpp"

namespace gyro {

/// A topology on {0..n-1}: the family of open sets, closed under union and
/// intersection, containing the empty set and the full carrier. Internally a
/// topology is carried by its minimal-neighborhood map (the intersection of
/// all opens containing x, itself open on a finite space); the explicit open
/// family is enumerated whenever its size stays under the cap — large
/// discrete products exceed it, and every operation that would need the full
/// family then falls back to minimal neighborhoods.
class FiniteTopology {
 public:
  static constexpr std::size_t kEnumerationCap = std::size_t{1} << 20;

  // topology generated by the given sets (closure under union/intersection,
  // with the empty and full sets adjoined)
  FiniteTopology(int carrier_size, const std::vector<Mask>& opens);

  static FiniteTopology discrete(int n);
  static FiniteTopology indiscrete(int n);
  // direct construction; validates x in U(x) and the nesting property
  // y in U(x) => U(y) subset of U(x)
  static FiniteTopology from_minimal_neighborhoods(int n,
                                                   std::vector<Mask> nbhd);

  int carrier_size() const { return n_; }
  Mask carrier_mask() const { return full_mask(n_); }

  Mask minimal_neighborhood(int x) const { return min_nbhd_[x]; }
  const std::vector<Mask>& minimal_neighborhoods() const { return min_nbhd_; }

  bool is_open(Mask w) const;
  bool is_closed(Mask w) const { return is_open(carrier_mask() & ~w); }
  Mask interior(Mask s) const;
  Mask closure(Mask s) const;

  bool opens_enumerable() const { return enumerable_; }
  std::size_t open_count() const;                // enumerable only
  const std::vector<Mask>& opens() const;        // enumerable only
  std::vector<Mask> open_neighborhoods(int x) const;  // enumerable only

  friend bool operator==(const FiniteTopology& a, const FiniteTopology& b) {
    return a.n_ == b.n_ && a.min_nbhd_ == b.min_nbhd_;
  }

 private:
  FiniteTopology() = default;
  void enumerate();

  int n_ = 0;
  std::vector<Mask> min_nbhd_;
  std::vector<Mask> opens_;  // sorted; empty when not enumerable
  bool enumerable_ = false;
};

// product topology: minimal neighborhoods are boxes U1(x) x U2(y) on the
// combined carrier indexed by x*n2 + y
FiniteTopology product_topology(const FiniteTopology& t1,
                                const FiniteTopology& t2);

// subspace topology on the listed members, relabeled to 0..k-1 in
// increasing order
FiniteTopology subspace_topology(const FiniteTopology& t, Mask members);

}  // namespace gyro
