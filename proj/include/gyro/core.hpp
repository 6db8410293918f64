#pragma once

#include <array>
#include <concepts>
#include <cstdint>
#include <string>
#include <vector>

#include "gyro/report.hpp"

namespace gyro {

// A gyrogroup realization: identity, addition, negation, and an equality
// predicate (exact for finite carriers, tolerance-based for analytic ones).
// `distance` feeds deviation tracking; `describe` renders witnesses.
template <typename M>
concept GyroModel = requires(const M& g, const typename M::Element& a,
                             const typename M::Element& b) {
  typename M::Element;
  { g.identity() } -> std::convertible_to<typename M::Element>;
  { g.add(a, b) } -> std::convertible_to<typename M::Element>;
  { g.neg(a) } -> std::convertible_to<typename M::Element>;
  { g.equal(a, b) } -> std::same_as<bool>;
  { g.distance(a, b) } -> std::same_as<double>;
  { g.describe(a) } -> std::convertible_to<std::string>;
};

template <GyroModel M>
using ElementOf = typename M::Element;

template <GyroModel M>
using Triple = std::array<ElementOf<M>, 3>;

// gyr[a,b](c) derived from the addition alone. Gyrations are never stored as
// primitive input; realizations with a closed-form gyration are cross-checked
// against this derivation.
template <GyroModel M>
ElementOf<M> gyr_of(const M& g, const ElementOf<M>& a, const ElementOf<M>& b,
                    const ElementOf<M>& c) {
  return g.add(g.neg(g.add(a, b)), g.add(a, g.add(b, c)));
}

template <GyroModel M>
ElementOf<M> coadd(const M& g, const ElementOf<M>& a, const ElementOf<M>& b) {
  return g.add(a, gyr_of(g, a, g.neg(b), b));
}

template <GyroModel M>
ElementOf<M> cosub(const M& g, const ElementOf<M>& a, const ElementOf<M>& b) {
  return g.add(a, g.neg(gyr_of(g, a, b, b)));
}

// m.a = a + ((m-1).a), with m.a = (-m).(-a) for m < 0
template <GyroModel M>
ElementOf<M> scalar(const M& g, long long m, ElementOf<M> a) {
  if (m < 0) {
    m = -m;
    a = g.neg(a);
  }
  ElementOf<M> acc = g.identity();
  for (; m > 0; --m) acc = g.add(a, acc);
  return acc;
}

// the mirrored recursion a.m = (a.(m-1)) + a; equals m.a (checked, not assumed)
template <GyroModel M>
ElementOf<M> scalar_right(const M& g, ElementOf<M> a, long long m) {
  if (m < 0) {
    m = -m;
    a = g.neg(a);
  }
  ElementOf<M> acc = g.identity();
  for (; m > 0; --m) acc = g.add(acc, a);
  return acc;
}

// inverse of x -> x + a, expanded as (-a) + ((a + x) + (-a))
template <GyroModel M>
ElementOf<M> right_translation_inverse(const M& g, const ElementOf<M>& a,
                                       const ElementOf<M>& x) {
  const ElementOf<M> na = g.neg(a);
  return g.add(na, g.add(g.add(a, x), na));
}

struct SuiteOptions {
  // |m|,|k| window for the scalar distributivity law; finite carriers pass
  // their size here
  int scalar_window = 4;
  bool check_scalar = true;
};

namespace detail {

template <GyroModel M>
std::string triple_witness(const M& g, const ElementOf<M>& a,
                           const ElementOf<M>& b, const ElementOf<M>& c) {
  return "(" + g.describe(a) + ", " + g.describe(b) + ", " + g.describe(c) +
         ")";
}

}  // namespace detail

// Runs the identity catalog over the supplied triples: the two
// gyroassociative laws, both loop properties, cancellation laws, the
// gyration symmetries, the coaddition laws, and the scalar distributivity
// window. When the gyrocommutative law holds on every sampled pair (the flag
// is computed, never declared) the gyrocommutative consequences are checked
// as well. Reports the first counterexample by identity name.
template <GyroModel M>
Report identity_suite(const M& g, const std::vector<Triple<M>>& triples,
                      SuiteOptions opts = {}) {
  using E = ElementOf<M>;
  Report r;
  if (triples.empty()) {
    r.vacuous = true;
    r.note("samples", "0");
    r.note("verdict", "vacuous pass (no samples drawn)");
    return r;
  }

  const E zero = g.identity();
  auto expect = [&](const char* name, const E& lhs, const E& rhs, const E& a,
                    const E& b, const E& c) {
    r.count();
    r.observe(g.distance(lhs, rhs));
    if (!g.equal(lhs, rhs))
      r.fail(name, detail::triple_witness(g, a, b, c));
  };

  bool gyrocommutative = true;
  for (const auto& [a, b, c] : triples) {
    if (!g.equal(g.add(a, b), gyr_of(g, a, b, g.add(b, a)))) {
      gyrocommutative = false;
      break;
    }
  }
  r.note("gyrocommutative", gyrocommutative ? "true" : "false");

  for (const auto& [a, b, c] : triples) {
    const E ab = g.add(a, b);
    const E na = g.neg(a);
    const E nb = g.neg(b);

    expect("left gyroassociative", g.add(a, g.add(b, c)),
           g.add(ab, gyr_of(g, a, b, c)), a, b, c);
    expect("right gyroassociative", g.add(ab, c),
           g.add(a, g.add(b, gyr_of(g, b, a, c))), a, b, c);
    expect("left loop", gyr_of(g, ab, b, c), gyr_of(g, a, b, c), a, b, c);
    expect("right loop", gyr_of(g, a, g.add(b, a), c), gyr_of(g, a, b, c), a,
           b, c);
    expect("left cancellation", g.add(na, ab), b, a, b, c);
    expect("coaddition right cancellation", coadd(g, g.add(a, nb), b), a, a, b,
           c);
    expect("cosubtraction right cancellation", g.add(cosub(g, a, b), b), a, a,
           b, c);
    expect("gyration of identity (right)", gyr_of(g, a, zero, c), c, a, b, c);
    expect("gyration of identity (left)", gyr_of(g, zero, b, c), c, a, b, c);
    expect("gyration automorphism", gyr_of(g, a, b, g.add(c, a)),
           g.add(gyr_of(g, a, b, c), gyr_of(g, a, b, a)), a, b, c);
    expect("gyration negation", gyr_of(g, a, b, g.neg(c)),
           g.neg(gyr_of(g, a, b, c)), a, b, c);
    expect("inversive symmetry", gyr_of(g, b, a, gyr_of(g, a, b, c)), c, a, b,
           c);
    expect("even symmetry", gyr_of(g, na, nb, c), gyr_of(g, a, b, c), a, b, c);
    expect("gyrosum inversion", g.neg(ab), gyr_of(g, a, b, g.add(nb, na)), a,
           b, c);
    expect("cogyroautomorphic inverse", g.neg(coadd(g, a, b)),
           coadd(g, nb, na), a, b, c);
    expect("coaddition via double translation", coadd(g, a, b),
           g.add(b, g.add(g.add(nb, a), b)), a, b, c);
    expect("right translation inverse",
           right_translation_inverse(g, a, g.add(c, a)), c, a, b, c);

    if (gyrocommutative) {
      expect("gyrocommutative law", ab, gyr_of(g, a, b, g.add(b, a)), a, b, c);
      expect("automorphic inverse", g.neg(ab), g.add(na, nb), a, b, c);
      expect("coaddition commutativity", coadd(g, a, b), coadd(g, b, a), a, b,
             c);
      expect("coaddition symmetric form", coadd(g, a, b),
             g.add(a, g.add(g.add(na, b), a)), a, b, c);
    }
  }

  if (opts.check_scalar && opts.scalar_window > 0) {
    const int w = opts.scalar_window;
    // distinct scalar bases from the first slot of each triple
    std::vector<E> bases;
    for (const auto& t : triples) {
      bool seen = false;
      for (const auto& x : bases)
        if (g.equal(x, t[0])) {
          seen = true;
          break;
        }
      if (!seen) bases.push_back(t[0]);
    }
    for (const E& a : bases) {
      // powers m.a for m in [-2w, 2w], built incrementally
      std::vector<E> pow(4 * w + 1, zero);
      const E na = g.neg(a);
      for (int m = 1; m <= 2 * w; ++m) {
        pow[2 * w + m] = g.add(a, pow[2 * w + m - 1]);
        pow[2 * w - m] = g.add(na, pow[2 * w - m + 1]);
      }
      for (int m = -w; m <= w; ++m) {
        expect("scalar left-right agreement", pow[2 * w + m],
               scalar_right(g, a, m), a, a, a);
        for (int k = -w; k <= w; ++k) {
          expect("scalar distributivity",
                 g.add(pow[2 * w + m], pow[2 * w + k]), pow[2 * w + m + k], a,
                 a, a);
        }
      }
    }
  }

  r.note("samples", std::to_string(triples.size()));
  return r;
}

}  // namespace gyro
