#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gyro/core.hpp"
#include "gyro/mask.hpp"
#include "gyro/report.hpp"

namespace gyro {

struct ValidationOutcome;
ValidationOutcome validate(const std::vector<std::vector<int>>& table);

/// A finite gyrogroup given by its Cayley table. The identity element sits at
/// index 0; every instance has been through `validate`, so the full gyration
/// table (derived from the addition, then checked against axioms G3/G4) is
/// cached.
class FiniteGyrogroup {
 public:
  using Element = int;

  int size() const { return n_; }
  int identity() const { return 0; }
  int add(int a, int b) const { return table_[a * n_ + b]; }
  int neg(int a) const { return neg_[a]; }
  bool equal(int a, int b) const { return a == b; }
  double distance(int a, int b) const { return a == b ? 0.0 : 1.0; }
  std::string describe(int a) const { return std::to_string(a); }

  int gyr(int a, int b, int c) const { return gyr_[(a * n_ + b) * n_ + c]; }

  // gyr[a,b] as a permutation of the carrier
  std::vector<int> gyr_permutation(int a, int b) const;

  const std::vector<int>& table() const { return table_; }
  std::vector<std::vector<int>> rows() const;

  Mask carrier_mask() const { return full_mask(n_); }

  // set arithmetic on carrier subsets
  Mask add_sets(Mask a, Mask b) const;
  Mask add_left(int a, Mask b) const;     // a + B
  Mask add_right(Mask a, int b) const;    // A + b
  Mask neg_set(Mask a) const;
  Mask gyr_image(int a, int b, Mask s) const;
  Mask coadd_sets(Mask a, Mask b) const;  // {u boxplus v}
  Mask cosub_sets(Mask a, Mask b) const;  // {u boxminus v}

 private:
  friend struct ValidationOutcome;
  friend ValidationOutcome validate(const std::vector<std::vector<int>>&);
  FiniteGyrogroup() = default;

  int n_ = 0;
  std::vector<int> table_;  // n*n, [a*n+b] = a + b
  std::vector<int> neg_;
  std::vector<int> gyr_;    // n*n*n, [(a*n+b)*n+c] = gyr[a,b](c)
};

/// Result of table validation: either a validated gyrogroup or a report
/// naming the first violated axiom with witnesses. Inputs whose identity sits
/// at an index other than 0 are relabeled and the permutation recorded.
struct ValidationOutcome {
  std::optional<FiniteGyrogroup> group;
  Report report;
  std::optional<std::vector<int>> relabeling;  // old index -> new index

  bool ok() const { return group.has_value(); }
};

// convenience for known-good tables (throws std::invalid_argument otherwise)
FiniteGyrogroup require_valid(const std::vector<std::vector<int>>& table);

bool is_gyrocommutative(const FiniteGyrogroup& g);

bool is_subgyrogroup(const FiniteGyrogroup& g, Mask h);
bool is_L_subgyrogroup(const FiniteGyrogroup& g, Mask h);

// both normality criteria, evaluated independently: the coset characterization
// a+(N+b) = (a+b)+N = (a+N)+b, and the pair gyr[a,b](N) <= N together with
// -(a+b)+((N+a)+b) = N
struct NormalityVerdict {
  bool coset_criterion;
  bool gyration_criterion;
  bool agree() const { return coset_criterion == gyration_criterion; }
  bool value() const { return coset_criterion; }
};

NormalityVerdict normality(const FiniteGyrogroup& g, Mask h);

// shared verdict of both criteria; throws std::logic_error on disagreement
// (must never happen for a validated gyrogroup and a genuine subgyrogroup)
bool is_normal(const FiniteGyrogroup& g, Mask h);

enum class NormalityCriterion { coset, gyration, both };

struct SubgyrogroupInfo {
  Mask members = 0;
  bool is_L = false;
  bool gyr_stable = false;  // gyr[a,b](H) <= H for all a,b in G
  bool is_normal = false;
  NormalityCriterion criterion_used = NormalityCriterion::both;
};

inline constexpr int kSubgroupScanBound = 16;

// exhaustive scan over subsets containing 0; carriers above the bound require
// an explicit override (2^n blowup) — use cyclic subgyrogroups instead
std::vector<SubgyrogroupInfo> enumerate_subgyrogroups(
    const FiniteGyrogroup& g, int bound = kSubgroupScanBound,
    bool override_bound = false);

SubgyrogroupInfo describe_subgyrogroup(const FiniteGyrogroup& g, Mask h);

struct QuotientResult {
  FiniteGyrogroup quotient;
  std::vector<int> projection;   // element -> coset index (coset of 0 first)
  std::vector<Mask> cosets;
};

// quotient by an invariant subgyrogroup; the induced table is checked to be
// representative-independent, re-validated, and the projection is certified a
// homomorphism with kernel N. Gyrocommutativity is asserted to descend.
QuotientResult quotient(const FiniteGyrogroup& g, Mask n);

struct CyclicSubgyrogroup {
  SubgyrogroupInfo info;
  int order = 0;
  std::vector<int> orbit;  // 1.a, 2.a, ... up to the first return to 0
};

// <a> = {m.a : m in Z}, iterated until the orbit closes; the induced
// structure is verified associative and commutative
CyclicSubgyrogroup cyclic_subgyrogroup(const FiniteGyrogroup& g, int a);

// componentwise addition on the index (a1*n2 + a2)
FiniteGyrogroup direct_product(const FiniteGyrogroup& g1,
                               const FiniteGyrogroup& g2);

// all n^3 triples plus the full scalar window (|m|,|k| <= n)
Report identity_suite_exhaustive(const FiniteGyrogroup& g);

}  // namespace gyro
