#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "gyro/analytic.hpp"
#include "gyro/core.hpp"

using namespace gyro;
using Complex = std::complex<double>;

TEST_CASE("disk addition closed forms") {
  const MobiusGyrogroup g;
  const Complex b{0.3, -0.4};
  CHECK(std::abs(g.add({0, 0}, b) - b) == 0.0);
  CHECK(g.add({0.5, 0}, {0.5, 0}) == Complex{0.8, 0.0});
  CHECK(std::abs(g.add({0.5, 0}, {-0.5, 0})) == 0.0);
  CHECK(std::abs(g.add(b, g.neg(b))) < 1e-15);

  CHECK_THROWS_AS(g.add({1.0, 0}, {0, 0}), std::domain_error);
  CHECK_THROWS_AS(g.add({0.2, 0}, {0.8, 0.7}), std::domain_error);
  CHECK_THROWS_AS(g.neg({1.5, 0}), std::domain_error);
}

TEST_CASE("disk gyration is a unimodular multiplier") {
  const MobiusGyrogroup g;
  const Complex c{0.1, 0.7};
  CHECK(std::abs(g.gyr({0.4, 0.2}, {0, 0}, c) - c) < 1e-15);

  const SampleOptions opts{.count = 500, .seed = 9};
  for (const auto& [a, b, z] : sample_triples(g, opts)) {
    CHECK(std::abs(std::abs(g.gyr(a, b, z)) - std::abs(z)) < 1e-14);
    // closed sets {|x| <= r} are carried onto themselves
    CHECK(std::abs(g.gyr(a, b, z)) <= std::abs(z) + 1e-14);
  }
}

TEST_CASE("disk closed-form gyration matches the derived one") {
  const MobiusGyrogroup g;
  const Report r = mobius_gyr_agreement(g, 1000, 1);
  CHECK(r.pass);
  CHECK(r.max_deviation < 1e-12);
}

TEST_CASE("ball addition closed forms") {
  const EinsteinGyrogroup g(1.0);
  const Vec3 u{0.5, 0, 0};
  CHECK(norm(g.add(u, {0, 0, 0}) - u) == 0.0);
  CHECK(norm(g.add({0, 0, 0}, u) - u) == 0.0);
  CHECK(g.gamma({0, 0, 0}) == 1.0);
  CHECK(g.gamma(u) == doctest::Approx(1.0 / std::sqrt(0.75)).epsilon(1e-15));

  // collinear case: (u + v) / (1 + uv/c^2)
  const Vec3 sum = g.add({0.5, 0, 0}, {0.5, 0, 0});
  CHECK(std::abs(sum.x - 0.8) < 1e-12);
  CHECK(sum.y == 0.0);
  CHECK(sum.z == 0.0);

  CHECK(norm(g.add(g.neg(u), u)) < 1e-15);
  CHECK_THROWS_AS(g.add({1, 0, 0}, {0, 0, 0}), std::domain_error);
  CHECK_THROWS_AS(g.gamma({0.8, 0.8, 0}), std::domain_error);
  CHECK_THROWS_AS(EinsteinGyrogroup(0.0), std::invalid_argument);
}

TEST_CASE("ball addition against the collinear oracle") {
  // independent oracle for parallel velocities: (u + v)/(1 + uv/c^2)
  for (double c : {1.0, 2.5}) {
    const EinsteinGyrogroup g(c);
    for (double a : {-0.9, -0.3, 0.0, 0.2, 0.7}) {
      for (double b : {-0.8, -0.1, 0.4, 0.9}) {
        const Vec3 u{a * c, 0, 0}, v{b * c, 0, 0};
        const double expected = (a * c + b * c) / (1.0 + a * b);
        const Vec3 got = g.add(u, v);
        CHECK(std::abs(got.x - expected) < 1e-12 * (1.0 + std::abs(expected)));
        CHECK(std::abs(got.y) < 1e-15);
        CHECK(std::abs(got.z) < 1e-15);
      }
    }
  }
}

TEST_CASE("sampling stays inside the radius and is deterministic") {
  const MobiusGyrogroup m;
  const SampleOptions opts{.count = 200, .seed = 123};
  const auto first = sample_triples(m, opts);
  const auto second = sample_triples(m, opts);
  REQUIRE(first.size() == 200);
  for (std::size_t i = 0; i < first.size(); ++i)
    for (int j = 0; j < 3; ++j) {
      CHECK(first[i][j] == second[i][j]);
      CHECK(std::abs(first[i][j]) <= 0.95);
    }

  const EinsteinGyrogroup e(2.0);
  for (const auto& t : sample_triples(e, {.count = 100, .seed = 5}))
    for (const auto& v : t) CHECK(norm(v) <= 0.95 * 2.0);
}

TEST_CASE("analytic suites pass at the default tolerance") {
  const AnalyticOptions opts{.samples = 1000, .seed = 1};
  const Report mob = analytic_suite(MobiusGyrogroup{}, opts);
  CHECK_MESSAGE(mob.pass, mob.check, " at ", mob.witness);
  CHECK(mob.max_deviation < 1e-9);

  const Report ein = analytic_suite(EinsteinGyrogroup{1.0}, opts);
  CHECK_MESSAGE(ein.pass, ein.check, " at ", ein.witness);
  CHECK(ein.max_deviation < 1e-9);

  // a different light speed changes nothing structural
  const Report fast =
      analytic_suite(EinsteinGyrogroup{3.0}, {.samples = 300, .seed = 7});
  CHECK(fast.pass);
}

TEST_CASE("analytic suite with zero samples is a flagged vacuous pass") {
  const Report r = analytic_suite(MobiusGyrogroup{}, {.samples = 0, .seed = 1});
  CHECK(r.pass);
  CHECK(r.vacuous);
}

TEST_CASE("closure under addition away from the boundary") {
  const MobiusGyrogroup m;
  const EinsteinGyrogroup e(1.0);
  const SampleOptions opts{.count = 500, .seed = 31};
  for (const auto& [a, b, c] : sample_triples(m, opts)) {
    CHECK(std::abs(m.add(a, b)) < 1.0);
    CHECK(std::abs(m.add(a, m.add(b, c))) < 1.0);
  }
  for (const auto& [u, v, w] : sample_triples(e, opts)) {
    CHECK(norm(e.add(u, v)) < 1.0);
    CHECK(norm(e.add(u, e.add(v, w))) < 1.0);
  }
}
