#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "gyro/core.hpp"

namespace gyro {

using DiskPoint = std::complex<double>;
using BallVector = std::vector<double>;

/// Deterministic sampling source. Wraps mt19937_64 (whose output sequence
/// the standard pins down) and converts to doubles and small ints without
/// going through library distributions, so a seed reproduces the same
/// stream everywhere.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1), 53-bit resolution.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
  }

  int below(int n) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(n)); }

 private:
  std::mt19937_64 engine_;
};

/// Fraction of the radius kept clear of the boundary when sampling. Sums
/// like a + b land quadratically closer to the boundary than either input,
/// so the law checks compose operations whose conditioning degrades as
/// 1/(1 - |x|/s); 0.2 keeps the worst observed deviation an order of
/// magnitude under the advertised tolerances.
inline constexpr double kBoundaryMargin = 0.2;

/// Complex open unit disk with a + b = (a + b) / (1 + conj(a) b).
class MobiusDisk {
 public:
  using element_type = DiskPoint;

  explicit MobiusDisk(double tolerance = 1e-12) : tolerance_(tolerance) {}

  DiskPoint identity() const { return {0.0, 0.0}; }
  DiskPoint add(const DiskPoint& a, const DiskPoint& b) const;
  DiskPoint neg(const DiskPoint& a) const;
  bool eq(const DiskPoint& a, const DiskPoint& b) const {
    return deviation(a, b) <= tolerance_;
  }

  /// Max per-coordinate absolute difference.
  double deviation(const DiskPoint& a, const DiskPoint& b) const {
    return std::max(std::abs(a.real() - b.real()),
                    std::abs(a.imag() - b.imag()));
  }
  double norm(const DiskPoint& a) const { return std::abs(a); }
  double radius() const { return 1.0; }
  double tolerance() const { return tolerance_; }

  /// Uniform direction, radius uniform in [0, (1 - margin) * radius).
  DiskPoint sample(SampleRng& rng) const;

 private:
  void require_inside(const DiskPoint& p) const;

  double tolerance_;
};

/// gyr[a,b]z = ((1 + a conj(b)) / (1 + conj(a) b)) z, the disk gyration in
/// closed form. Test oracle for the gyrator-identity evaluation.
DiskPoint mobius_disk_gyr(const DiskPoint& a, const DiskPoint& b,
                          const DiskPoint& z);

/// Open ball of radius s in R^d under the Mobius addition
///   a + b = ((1 + 2<a,b>/s^2 + |b|^2/s^2) a + (1 - |a|^2/s^2) b)
///           / (1 + 2<a,b>/s^2 + |a|^2 |b|^2 / s^4).
class MobiusBall {
 public:
  using element_type = BallVector;

  explicit MobiusBall(int dim, double radius = 1.0,
                      double tolerance = 1e-12);

  BallVector identity() const { return BallVector(dim_, 0.0); }
  BallVector add(const BallVector& a, const BallVector& b) const;
  BallVector neg(const BallVector& a) const;
  bool eq(const BallVector& a, const BallVector& b) const {
    return deviation(a, b) <= tolerance_;
  }

  double deviation(const BallVector& a, const BallVector& b) const;
  double norm(const BallVector& a) const;
  double radius() const { return radius_; }
  double tolerance() const { return tolerance_; }
  int dim() const { return dim_; }

  BallVector sample(SampleRng& rng) const;

 private:
  void require_inside(const BallVector& p) const;

  int dim_;
  double radius_;
  double tolerance_;
};

/// Open ball of relativistically admissible velocities, |v| < c, under
/// Einstein velocity addition.
class EinsteinBall {
 public:
  using element_type = BallVector;

  explicit EinsteinBall(int dim, double light_speed = 1.0,
                        double tolerance = 1e-9);

  BallVector identity() const { return BallVector(dim_, 0.0); }
  BallVector add(const BallVector& u, const BallVector& v) const;
  BallVector neg(const BallVector& u) const;
  bool eq(const BallVector& a, const BallVector& b) const {
    return deviation(a, b) <= tolerance_;
  }

  double deviation(const BallVector& a, const BallVector& b) const;
  double norm(const BallVector& a) const;
  double radius() const { return c_; }
  double tolerance() const { return tolerance_; }
  int dim() const { return dim_; }
  double light_speed() const { return c_; }

  /// Lorentz factor 1 / sqrt(1 - |u|^2 / c^2).
  double gamma(const BallVector& u) const;

  BallVector sample(SampleRng& rng) const;

 private:
  void require_inside(const BallVector& p) const;

  int dim_;
  double c_;
  double tolerance_;
};

double gamma_factor(const BallVector& u, double light_speed);

struct LawCheck {
  std::string law;
  double max_deviation = 0.0;
};

struct ModelSuiteReport {
  int samples = 0;
  std::uint64_t seed = 0;
  double boundary_margin = kBoundaryMargin;
  /// Smallest distance of any computed sum to the boundary; negative
  /// would mean a sum escaped the carrier.
  double min_closure_margin = 0.0;
  std::vector<LawCheck> laws;

  double max_deviation() const {
    double m = 0.0;
    for (const auto& l : laws) m = std::max(m, l.max_deviation);
    return m;
  }
  bool within(double tol) const { return max_deviation() <= tol; }
};

/// Samples `samples` seeded triples and measures the worst per-coordinate
/// deviation of each gyrogroup law plus gyrocommutativity. Deviations are
/// reported, not thresholded; callers compare against the model tolerance.
template <typename M>
ModelSuiteReport axiom_suite(const M& model, int samples,
                             std::uint64_t seed) {
  static_assert(GyroCarrier<M>);
  if (samples < 1) throw std::invalid_argument("axiom_suite: samples < 1");

  ModelSuiteReport report;
  report.samples = samples;
  report.seed = seed;

  LawCheck identity_law{"left identity", 0.0};
  LawCheck inverse_law{"left inverse", 0.0};
  LawCheck assoc_law{"left gyroassociativity", 0.0};
  LawCheck loop_law{"left loop", 0.0};
  LawCheck commute_law{"gyrocommutativity", 0.0};

  SampleRng rng(seed);
  const auto zero = model.identity();
  double closure = model.radius();

  for (int i = 0; i < samples; ++i) {
    const auto a = model.sample(rng);
    const auto b = model.sample(rng);
    const auto c = model.sample(rng);

    const auto ab = model.add(a, b);
    closure = std::min(closure, model.radius() - model.norm(ab));

    identity_law.max_deviation = std::max(
        identity_law.max_deviation, model.deviation(model.add(zero, a), a));
    inverse_law.max_deviation =
        std::max(inverse_law.max_deviation,
                 model.deviation(model.add(model.neg(a), a), zero));
    assoc_law.max_deviation = std::max(
        assoc_law.max_deviation,
        model.deviation(model.add(a, model.add(b, c)),
                        model.add(ab, gyr(model, a, b, c))));
    loop_law.max_deviation =
        std::max(loop_law.max_deviation,
                 model.deviation(gyr(model, a, b, c), gyr(model, ab, b, c)));
    commute_law.max_deviation =
        std::max(commute_law.max_deviation,
                 model.deviation(ab, gyr(model, a, b, model.add(b, a))));
  }

  report.min_closure_margin = closure;
  report.laws = {identity_law, inverse_law, assoc_law, loop_law, commute_law};
  return report;
}

}  // namespace gyro
