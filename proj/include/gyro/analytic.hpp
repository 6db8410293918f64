#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "gyro/core.hpp"
#include "gyro/report.hpp"

namespace gyro {

inline constexpr double kDefaultTolerance = 1e-9;

// absolute-plus-relative comparison; a single knob scales both parts
inline bool within_tolerance(double deviation, double magnitude, double tol) {
  return deviation <= tol * (1.0 + magnitude);
}

/// The complex open unit disk with a + b = (a + b)/(1 + conj(a) b). Elements
/// at or beyond the boundary are rejected.
class MobiusGyrogroup {
 public:
  using Element = std::complex<double>;

  explicit MobiusGyrogroup(double tolerance = kDefaultTolerance)
      : tol_(tolerance) {}

  Element identity() const { return {0.0, 0.0}; }
  bool contains(const Element& a) const { return std::abs(a) < 1.0; }

  Element add(const Element& a, const Element& b) const {
    require_member(a);
    require_member(b);
    return (a + b) / (1.0 + std::conj(a) * b);
  }

  Element neg(const Element& a) const {
    require_member(a);
    return -a;
  }

  // closed form: gyr[a,b](c) = ((1 + a conj(b)) / (1 + conj(a) b)) c,
  // a unimodular multiplier
  Element gyr(const Element& a, const Element& b, const Element& c) const {
    require_member(a);
    require_member(b);
    return ((1.0 + a * std::conj(b)) / (1.0 + std::conj(a) * b)) * c;
  }

  bool equal(const Element& a, const Element& b) const {
    return within_tolerance(std::abs(a - b), std::max(std::abs(a), std::abs(b)),
                            tol_);
  }
  double distance(const Element& a, const Element& b) const {
    return std::abs(a - b);
  }
  std::string describe(const Element& a) const;

  double tolerance() const { return tol_; }

 private:
  void require_member(const Element& a) const;
  double tol_;
};

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  friend Vec3 operator+(const Vec3& a, const Vec3& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
  friend Vec3 operator*(double k, const Vec3& a) {
    return {k * a.x, k * a.y, k * a.z};
  }
  friend bool operator==(const Vec3&, const Vec3&) = default;
};

double dot(const Vec3& a, const Vec3& b);
double norm(const Vec3& a);

/// Velocities of magnitude below c under relativistic addition. The
/// speed-of-light parameter is per instance, never a global.
class EinsteinGyrogroup {
 public:
  using Element = Vec3;

  explicit EinsteinGyrogroup(double light_speed = 1.0,
                             double tolerance = kDefaultTolerance);

  double light_speed() const { return c_; }
  Element identity() const { return {}; }
  bool contains(const Element& v) const { return norm(v) < c_; }

  // gamma factor 1/sqrt(1 - |u|^2/c^2), always >= 1 inside the ball
  double gamma(const Element& u) const;

  Element add(const Element& u, const Element& v) const;

  Element neg(const Element& u) const {
    require_member(u);
    return -u;
  }

  bool equal(const Element& a, const Element& b) const {
    return within_tolerance(norm(a - b), std::max(norm(a), norm(b)), tol_);
  }
  double distance(const Element& a, const Element& b) const {
    return norm(a - b);
  }
  std::string describe(const Element& a) const;

  double tolerance() const { return tol_; }

 private:
  void require_member(const Element& v) const;
  double c_;
  double c2_;
  double tol_;
};

struct SampleOptions {
  std::size_t count = 1000;
  std::uint64_t seed = 1;
  // samples stay inside this fraction of the boundary radius
  double radius_fraction = 0.95;
};

// uniform in modulus-squared over the disk of the given radius fraction
std::vector<Triple<MobiusGyrogroup>> sample_triples(const MobiusGyrogroup& g,
                                                    const SampleOptions& opts);

// uniform over the ball of radius fraction * c
std::vector<Triple<EinsteinGyrogroup>> sample_triples(
    const EinsteinGyrogroup& g, const SampleOptions& opts);

struct AnalyticOptions {
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  int scalar_window = 4;
};

// identity suite plus the (required) gyrocommutative law on seeded random
// triples inside the sampling radius; reports max absolute deviation
Report analytic_suite(const MobiusGyrogroup& g, const AnalyticOptions& opts);
Report analytic_suite(const EinsteinGyrogroup& g, const AnalyticOptions& opts);

// closed-form gyration against its derivation from the addition, pinned at a
// tighter tolerance than the general suites
Report mobius_gyr_agreement(const MobiusGyrogroup& g, std::size_t samples,
                            std::uint64_t seed, double tolerance = 1e-12);

}  // namespace gyro
