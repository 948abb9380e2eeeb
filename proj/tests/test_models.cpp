#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "gyro/core.hpp"
#include "gyro/models.hpp"

namespace {

using gyro::BallVector;
using gyro::DiskPoint;

double dist(const DiskPoint& a, const DiskPoint& b) { return std::abs(a - b); }

double dist(const BallVector& a, const BallVector& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

}  // namespace

TEST_SUITE("models") {

TEST_CASE("sampling is deterministic in the seed") {
  gyro::SampleRng a(7);
  gyro::SampleRng b(7);
  for (int i = 0; i < 100; ++i) {
    CHECK(a.next_u64() == b.next_u64());
    CHECK(a.uniform01() == b.uniform01());
    CHECK(a.below(13) == b.below(13));
  }
  gyro::SampleRng c(8);
  gyro::SampleRng d(7);
  bool all_equal = true;
  for (int i = 0; i < 10; ++i) all_equal = all_equal && c.next_u64() == d.next_u64();
  CHECK(!all_equal);
}

TEST_CASE("disk addition on the real axis") {
  const gyro::MobiusDisk disk;
  const DiskPoint r = disk.add({0.5, 0.0}, {0.5, 0.0});
  CHECK(dist(r, {0.8, 0.0}) <= 1e-15);

  CHECK(dist(disk.add(disk.identity(), {0.3, 0.4}), {0.3, 0.4}) <= 1e-15);
  CHECK(dist(disk.add(disk.neg({0.3, 0.4}), {0.3, 0.4}), disk.identity()) <=
        1e-15);
  CHECK(disk.eq({0.1, 0.2}, {0.1 + 1e-13, 0.2}));
  CHECK(!disk.eq({0.1, 0.2}, {0.1 + 1e-9, 0.2}));
}

TEST_CASE("disk gyration closed form") {
  // Real a, b commute, so the rotation coefficient is 1.
  for (double z_im : {0.0, 0.3}) {
    const DiskPoint z{0.2, z_im};
    CHECK(dist(gyro::mobius_disk_gyr({0.3, 0.0}, {0.7, 0.0}, z), z) <= 1e-15);
  }

  // a = i/2, b = 1/2: coefficient (1 + i/4)/(1 - i/4) = (15 + 8i)/17.
  const DiskPoint coeff =
      gyro::mobius_disk_gyr({0.0, 0.5}, {0.5, 0.0}, {1.0, 0.0});
  CHECK(dist(coeff, {15.0 / 17.0, 8.0 / 17.0}) <= 1e-15);

  // Gyrations rotate: the modulus never changes.
  gyro::SampleRng rng(5);
  const gyro::MobiusDisk disk;
  for (int i = 0; i < 1000; ++i) {
    const DiskPoint a = disk.sample(rng);
    const DiskPoint b = disk.sample(rng);
    const DiskPoint z = disk.sample(rng);
    CHECK(std::abs(std::abs(gyro::mobius_disk_gyr(a, b, z)) - std::abs(z)) <=
          1e-15);
  }
}

TEST_CASE("generic disk gyration matches the closed form") {
  const gyro::MobiusDisk disk;
  gyro::SampleRng rng(42);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const DiskPoint a = disk.sample(rng);
    const DiskPoint b = disk.sample(rng);
    const DiskPoint z = disk.sample(rng);
    worst = std::max(
        worst, dist(gyro::gyr(disk, a, b, z), gyro::mobius_disk_gyr(a, b, z)));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("disk rejects points on or beyond the boundary") {
  const gyro::MobiusDisk disk;
  CHECK_THROWS_AS(disk.add({1.0, 0.0}, {0.1, 0.0}), std::domain_error);
  CHECK_THROWS_AS(disk.add({0.1, 0.0}, {0.0, 1.5}), std::domain_error);
  CHECK_THROWS_AS(disk.neg({2.0, 0.0}), std::domain_error);
}

TEST_CASE("disk axiom suite stays within tolerance") {
  const gyro::MobiusDisk disk;
  const gyro::ModelSuiteReport r = gyro::axiom_suite(disk, 10000, 42);
  CHECK(r.samples == 10000);
  CHECK(r.seed == 42);
  CHECK(r.laws.size() == 5);
  CHECK(r.within(disk.tolerance()));
  CHECK(r.max_deviation() <= 1e-12);
  CHECK(r.min_closure_margin > 0.0);

  // Gyrocommutativity is among the measured laws.
  bool has_commute = false;
  for (const auto& l : r.laws) has_commute |= l.law == "gyrocommutativity";
  CHECK(has_commute);

  const gyro::ModelSuiteReport again = gyro::axiom_suite(disk, 10000, 42);
  CHECK(again.max_deviation() == r.max_deviation());
  CHECK(again.min_closure_margin == r.min_closure_margin);
  for (std::size_t i = 0; i < r.laws.size(); ++i)
    CHECK(again.laws[i].max_deviation == r.laws[i].max_deviation);

  CHECK_THROWS_AS(gyro::axiom_suite(disk, 0, 1), std::invalid_argument);
}

TEST_CASE("planar ball agrees with the complex disk") {
  const gyro::MobiusDisk disk;
  const gyro::MobiusBall ball(2);
  gyro::SampleRng rng(9);
  for (int i = 0; i < 2000; ++i) {
    const DiskPoint a = disk.sample(rng);
    const DiskPoint b = disk.sample(rng);
    const BallVector va{a.real(), a.imag()};
    const BallVector vb{b.real(), b.imag()};
    const DiskPoint expected = disk.add(a, b);
    const BallVector got = ball.add(va, vb);
    CHECK(dist(got, BallVector{expected.real(), expected.imag()}) <= 1e-12);
  }
}

TEST_CASE("ball axiom suite in three dimensions") {
  const gyro::MobiusBall ball(3);
  const gyro::ModelSuiteReport r = gyro::axiom_suite(ball, 10000, 42);
  CHECK(r.within(1e-12));
  CHECK(r.min_closure_margin > 0.0);
}

TEST_CASE("ball addition scales with the radius") {
  const gyro::MobiusBall unit(3);
  const gyro::MobiusBall wide(3, 2.5);
  gyro::SampleRng rng(11);
  for (int i = 0; i < 2000; ++i) {
    const BallVector a = unit.sample(rng);
    const BallVector b = unit.sample(rng);
    BallVector sa(3), sb(3);
    for (int k = 0; k < 3; ++k) {
      sa[static_cast<std::size_t>(k)] = 2.5 * a[static_cast<std::size_t>(k)];
      sb[static_cast<std::size_t>(k)] = 2.5 * b[static_cast<std::size_t>(k)];
    }
    const BallVector small = unit.add(a, b);
    const BallVector big = wide.add(sa, sb);
    for (int k = 0; k < 3; ++k)
      CHECK(std::abs(big[static_cast<std::size_t>(k)] -
                     2.5 * small[static_cast<std::size_t>(k)]) <= 1e-12);
  }
}

TEST_CASE("ball rejects dimension mismatches and bad parameters") {
  const gyro::MobiusBall ball(3);
  CHECK_THROWS_AS(ball.add({0.1, 0.2}, {0.1, 0.2, 0.3}),
                  std::invalid_argument);
  CHECK_THROWS_AS(gyro::MobiusBall(0), std::invalid_argument);
  CHECK_THROWS_AS(gyro::MobiusBall(3, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(ball.add({1.0, 0.0, 0.0}, {0.1, 0.0, 0.0}),
                  std::domain_error);
}

TEST_CASE("einstein addition of parallel velocities") {
  const gyro::EinsteinBall e(3);
  const BallVector r = e.add({0.5, 0.0, 0.0}, {0.5, 0.0, 0.0});
  CHECK(dist(r, {0.8, 0.0, 0.0}) <= 1e-15);

  const gyro::EinsteinBall wide(3, 2.0);
  const BallVector rw = wide.add({1.0, 0.0, 0.0}, {1.0, 0.0, 0.0});
  CHECK(dist(rw, {1.6, 0.0, 0.0}) <= 1e-14);
}

TEST_CASE("lorentz factor") {
  const gyro::EinsteinBall e(3);
  CHECK(e.gamma({0.0, 0.0, 0.0}) == 1.0);
  CHECK(std::abs(e.gamma({0.5, 0.0, 0.0}) - 2.0 / std::sqrt(3.0)) <= 1e-15);
  CHECK(std::abs(gyro::gamma_factor({0.5, 0.0, 0.0}, 1.0) -
                 1.1547005383792515) <= 1e-15);

  double prev = 1.0;
  for (double v : {0.1, 0.3, 0.5, 0.7, 0.9, 0.99}) {
    const double g = e.gamma({v, 0.0, 0.0});
    CHECK(g > prev);
    prev = g;
  }

  CHECK_THROWS_AS(gyro::gamma_factor({1.0, 0.0, 0.0}, 1.0),
                  std::domain_error);
  CHECK_THROWS_AS(gyro::gamma_factor({1.5, 0.0, 0.0}, 1.0),
                  std::domain_error);
}

TEST_CASE("einstein axiom suite in three dimensions") {
  const gyro::EinsteinBall e(3);
  const gyro::ModelSuiteReport r = gyro::axiom_suite(e, 10000, 42);
  CHECK(r.within(e.tolerance()));
  CHECK(r.max_deviation() <= 1e-9);
  CHECK(r.min_closure_margin > 0.0);
}

TEST_CASE("einstein gyrations preserve speed") {
  const gyro::EinsteinBall e(3);
  gyro::SampleRng rng(13);
  for (int i = 0; i < 1000; ++i) {
    const BallVector u = e.sample(rng);
    const BallVector v = e.sample(rng);
    const BallVector w = e.sample(rng);
    CHECK(std::abs(e.norm(gyro::gyr(e, u, v, w)) - e.norm(w)) <= 1e-9);
  }
}

TEST_CASE("samples respect the boundary margin") {
  gyro::SampleRng rng(17);
  const gyro::MobiusDisk disk;
  const gyro::MobiusBall ball(4, 3.0);
  const gyro::EinsteinBall e(2, 2.0);
  for (int i = 0; i < 1000; ++i) {
    CHECK(std::abs(disk.sample(rng)) <
          (1.0 - gyro::kBoundaryMargin) * disk.radius());
    CHECK(ball.norm(ball.sample(rng)) <
          (1.0 - gyro::kBoundaryMargin) * ball.radius());
    CHECK(e.norm(e.sample(rng)) < (1.0 - gyro::kBoundaryMargin) * e.radius());
  }
}

}  // TEST_SUITE("models")
