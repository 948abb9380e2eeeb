#include <cmath>
#include <numbers>

#include "gyro/models.hpp"

namespace gyro {

namespace {

// Guard against catastrophic loss when a computed denominator collapses;
// unreachable for in-domain inputs, also shields NaN propagation.
constexpr double kDenominatorFloor = 1e-15;

double dot(const BallVector& a, const BallVector& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void check_dim(const BallVector& v, int dim, const char* who) {
  if (static_cast<int>(v.size()) != dim)
    throw std::invalid_argument(std::string(who) +
                                ": vector dimension mismatch");
}

BallVector sample_in_ball(SampleRng& rng, int dim, double radius) {
  // Uniform direction from normalized Gaussian coordinates (Box-Muller),
  // radius uniform in [0, (1 - margin) * radius).
  BallVector dir(static_cast<std::size_t>(dim));
  double norm2 = 0.0;
  do {
    for (int i = 0; i < dim; i += 2) {
      double u1 = rng.uniform01();
      while (u1 <= 0.0) u1 = rng.uniform01();
      const double u2 = rng.uniform01();
      const double r = std::sqrt(-2.0 * std::log(u1));
      const double phi = 2.0 * std::numbers::pi * u2;
      dir[static_cast<std::size_t>(i)] = r * std::cos(phi);
      if (i + 1 < dim) dir[static_cast<std::size_t>(i + 1)] = r * std::sin(phi);
    }
    norm2 = dot(dir, dir);
  } while (norm2 == 0.0);

  const double len = rng.uniform01() * (1.0 - kBoundaryMargin) * radius;
  const double scale = len / std::sqrt(norm2);
  for (double& x : dir) x *= scale;
  return dir;
}

}  // namespace

DiskPoint MobiusDisk::add(const DiskPoint& a, const DiskPoint& b) const {
  require_inside(a);
  require_inside(b);
  const DiskPoint den = 1.0 + std::conj(a) * b;
  if (std::abs(den) < kDenominatorFloor)
    throw std::domain_error("disk addition denominator collapsed");
  return (a + b) / den;
}

DiskPoint MobiusDisk::neg(const DiskPoint& a) const {
  require_inside(a);
  return -a;
}

DiskPoint MobiusDisk::sample(SampleRng& rng) const {
  const BallVector v = sample_in_ball(rng, 2, 1.0);
  return {v[0], v[1]};
}

void MobiusDisk::require_inside(const DiskPoint& p) const {
  if (!(std::abs(p) < 1.0))
    throw std::domain_error("point lies outside the open unit disk");
}

DiskPoint mobius_disk_gyr(const DiskPoint& a, const DiskPoint& b,
                          const DiskPoint& z) {
  const DiskPoint den = 1.0 + std::conj(a) * b;
  if (std::abs(den) < kDenominatorFloor)
    throw std::domain_error("disk gyration denominator collapsed");
  return ((1.0 + a * std::conj(b)) / den) * z;
}

MobiusBall::MobiusBall(int dim, double radius, double tolerance)
    : dim_(dim), radius_(radius), tolerance_(tolerance) {
  if (dim < 1) throw std::invalid_argument("MobiusBall: dim must be >= 1");
  if (!(radius > 0.0))
    throw std::invalid_argument("MobiusBall: radius must be positive");
}

BallVector MobiusBall::add(const BallVector& a, const BallVector& b) const {
  require_inside(a);
  require_inside(b);
  const double s2 = radius_ * radius_;
  const double ab = dot(a, b) / s2;
  const double a2 = dot(a, a) / s2;
  const double b2 = dot(b, b) / s2;
  // 1 + 2<a,b> + |a|^2|b|^2 loses every significant digit when a and b are
  // nearly antiparallel close to the boundary. Split it into the squared
  // half-sum plus the Gram determinant |a|^2|b|^2 - <a,b>^2, both
  // nonnegative, with the Gram part accumulated from 2x2 minors so it
  // vanishes smoothly instead of cancelling.
  double gram = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      const double m = a[i] * b[j] - a[j] * b[i];
      gram += m * m;
    }
  gram /= s2 * s2;
  const double half = 1.0 + ab;
  const double den = half * half + gram;
  if (den < kDenominatorFloor)
    throw std::domain_error("ball addition denominator collapsed");
  const double ca = (half * half + b2 * (1.0 - a2) + gram) / den;
  const double cb = (1.0 - a2) / den;
  BallVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = ca * a[i] + cb * b[i];
  return out;
}

BallVector MobiusBall::neg(const BallVector& a) const {
  require_inside(a);
  BallVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

double MobiusBall::deviation(const BallVector& a, const BallVector& b) const {
  check_dim(a, dim_, "MobiusBall::deviation");
  check_dim(b, dim_, "MobiusBall::deviation");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double MobiusBall::norm(const BallVector& a) const {
  return std::sqrt(dot(a, a));
}

BallVector MobiusBall::sample(SampleRng& rng) const {
  return sample_in_ball(rng, dim_, radius_);
}

void MobiusBall::require_inside(const BallVector& p) const {
  check_dim(p, dim_, "MobiusBall");
  if (!(std::sqrt(dot(p, p)) < radius_))
    throw std::domain_error("point lies outside the open ball");
}

EinsteinBall::EinsteinBall(int dim, double light_speed, double tolerance)
    : dim_(dim), c_(light_speed), tolerance_(tolerance) {
  if (dim < 1) throw std::invalid_argument("EinsteinBall: dim must be >= 1");
  if (!(light_speed > 0.0))
    throw std::invalid_argument("EinsteinBall: light speed must be positive");
}

BallVector EinsteinBall::add(const BallVector& u, const BallVector& v) const {
  require_inside(u);
  require_inside(v);
  const double c2 = c_ * c_;
  const double uv = dot(u, v);
  const double den = 1.0 + uv / c2;
  if (den < kDenominatorFloor)
    throw std::domain_error("velocity addition denominator collapsed");
  const double gu = gamma(u);
  const double cu = 1.0 + (gu / (1.0 + gu)) * (uv / c2);
  const double cv = 1.0 / gu;
  BallVector out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    out[i] = (cu * u[i] + cv * v[i]) / den;
  return out;
}

BallVector EinsteinBall::neg(const BallVector& u) const {
  require_inside(u);
  BallVector out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = -u[i];
  return out;
}

double EinsteinBall::deviation(const BallVector& a,
                               const BallVector& b) const {
  check_dim(a, dim_, "EinsteinBall::deviation");
  check_dim(b, dim_, "EinsteinBall::deviation");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double EinsteinBall::norm(const BallVector& a) const {
  return std::sqrt(dot(a, a));
}

double EinsteinBall::gamma(const BallVector& u) const {
  return gamma_factor(u, c_);
}

BallVector EinsteinBall::sample(SampleRng& rng) const {
  return sample_in_ball(rng, dim_, c_);
}

void EinsteinBall::require_inside(const BallVector& p) const {
  check_dim(p, dim_, "EinsteinBall");
  if (!(std::sqrt(dot(p, p)) < c_))
    throw std::domain_error("velocity is not relativistically admissible");
}

double gamma_factor(const BallVector& u, double light_speed) {
  const double beta2 = dot(u, u) / (light_speed * light_speed);
  if (!(beta2 < 1.0))
    throw std::domain_error("velocity is not relativistically admissible");
  return 1.0 / std::sqrt(1.0 - beta2);
}

}  // namespace gyro
