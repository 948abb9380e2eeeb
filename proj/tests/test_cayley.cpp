#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include <doctest.h>

#include "gyro/cayley.hpp"
#include "gyro/core.hpp"
#include "gyro/errors.hpp"
#include "k16_data.hpp"

namespace {

const gyro::FiniteGyrogroup& g16() { return gyro::k16(); }

gyro::FiniteGyrogroup cyclic(int n) {
  return gyro::FiniteGyrogroup::from_table(
      gyro::CayleyTable(n, k16data::cyclic_entries(n)));
}

gyro::Permutation random_zero_fixing(int n, unsigned seed) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::mt19937 rng(seed);
  std::shuffle(img.begin() + 1, img.end(), rng);
  return gyro::Permutation(std::move(img));
}

gyro::Permutation random_permutation(int n, unsigned seed) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::mt19937 rng(seed);
  std::shuffle(img.begin(), img.end(), rng);
  return gyro::Permutation(std::move(img));
}

}  // namespace

TEST_SUITE("cayley") {

TEST_CASE("factorization is unique and round-trips") {
  // sigma = L_a * rho with rho(0) = 0, a = sigma(0).
  for (unsigned seed = 1; seed <= 50; ++seed) {
    const gyro::Permutation sigma = random_permutation(16, seed);
    const gyro::SymElement s = gyro::factorize(g16(), sigma);
    CHECK(s.a == sigma(0));
    CHECK(s.rho(0) == 0);
    CHECK(gyro::materialize(g16(), s) == sigma);
  }

  // And the other way: materialize then factorize.
  for (unsigned seed = 51; seed <= 80; ++seed) {
    gyro::SymElement s;
    s.a = static_cast<int>(seed) % 16;
    s.rho = random_zero_fixing(16, seed);
    CHECK(gyro::factorize(g16(), gyro::materialize(g16(), s)) == s);
  }
}

TEST_CASE("left translations factor as themselves") {
  for (int a = 0; a < 16; ++a) {
    const gyro::SymElement s = gyro::factorize(g16(), g16().left_translation(a));
    CHECK(s.a == a);
    CHECK(s.rho.is_identity());
    CHECK(gyro::embed(g16(), a) == s);
  }
}

TEST_CASE("factorize validates its input") {
  CHECK_THROWS_AS(gyro::factorize(g16(), gyro::Permutation::identity(5)),
                  gyro::PreconditionError);
}

TEST_CASE("the embedding is additive") {
  for (int a = 0; a < 16; ++a)
    for (int b = 0; b < 16; ++b)
      CHECK(gyro::sym_add(g16(), gyro::embed(g16(), a),
                          gyro::embed(g16(), b)) ==
            gyro::embed(g16(), g16().add(a, b)));
}

TEST_CASE("identity and inverses under the extended addition") {
  const gyro::SymElement e = gyro::sym_identity(g16());
  CHECK(e.a == 0);
  CHECK(e.rho.is_identity());

  for (unsigned seed = 1; seed <= 30; ++seed) {
    const gyro::SymElement x =
        gyro::factorize(g16(), random_permutation(16, seed));
    CHECK(gyro::sym_add(g16(), e, x) == x);
    CHECK(gyro::sym_add(g16(), x, e) == x);
    const gyro::SymElement nx = gyro::sym_neg(g16(), x);
    CHECK(gyro::sym_add(g16(), nx, x) == e);
    CHECK(gyro::sym_add(g16(), x, nx) == e);
  }
}

TEST_CASE("composition of the underlying permutations picks up a gyration") {
  // L_a after L_b equals L_{a+b} after gyr[a,b]; sym_add deliberately
  // composes the zero-fixing parts instead.
  CHECK(gyro::composition_law_check(g16()));
  CHECK(gyro::composition_law_check(cyclic(4)));

  const std::vector<gyro::Permutation> gyrations = gyro::gyration_table(g16());
  for (int a = 0; a < 16; ++a)
    for (int b = 0; b < 16; ++b) {
      const gyro::Permutation lhs =
          g16().left_translation(a) * g16().left_translation(b);
      const gyro::Permutation rhs =
          g16().left_translation(g16().add(a, b)) * g16().gyration(a, b);
      CHECK(lhs == rhs);
      CHECK(gyrations[static_cast<std::size_t>(a * 16 + b)] ==
            g16().left_translation(g16().add(a, b)).inverse() * lhs);
    }
}

TEST_CASE("left translations invert by negation") {
  for (int a = 0; a < 16; ++a)
    CHECK(g16().left_translation(g16().neg(a)) ==
          g16().left_translation(a).inverse());
}

TEST_CASE("automorphisms slide through left translations") {
  const gyro::Permutation a_perm(std::vector<int>(
      std::begin(k16data::kGyrationA), std::end(k16data::kGyrationA)));
  CHECK(gyro::commutation_check(g16(), a_perm));
  CHECK(gyro::commutation_check(g16(), gyro::Permutation::identity(16)));

  for (int a = 0; a < 16; ++a)
    CHECK(a_perm * g16().left_translation(a) ==
          g16().left_translation(a_perm(a)) * a_perm);

  // Zero-fixing but not additive.
  std::vector<int> swap12(16);
  std::iota(swap12.begin(), swap12.end(), 0);
  std::swap(swap12[1], swap12[2]);
  CHECK_THROWS_AS(gyro::commutation_check(g16(), gyro::Permutation(swap12)),
                  gyro::PreconditionError);
}

TEST_CASE("the closed-form gyration only touches the element part") {
  gyro::SymCarrier sym(g16());
  static_assert(gyro::GyroCarrier<gyro::SymCarrier>);

  for (unsigned seed = 1; seed <= 40; ++seed) {
    const gyro::SymElement x =
        gyro::factorize(g16(), random_permutation(16, 3 * seed));
    const gyro::SymElement y =
        gyro::factorize(g16(), random_permutation(16, 3 * seed + 1));
    const gyro::SymElement z =
        gyro::factorize(g16(), random_permutation(16, 3 * seed + 2));

    const gyro::SymElement closed = gyro::sym_gyr(g16(), x, y, z);
    CHECK(closed.a == gyro::gyr(g16(), x.a, y.a, z.a));
    CHECK(closed.rho == z.rho);

    // The generic evaluation through adds and negations must agree.
    CHECK(gyro::gyr(sym, x, y, z) == closed);
  }
}

TEST_CASE("the extended carrier satisfies the axioms generically") {
  gyro::SymCarrier sym(g16());
  for (unsigned seed = 100; seed <= 120; ++seed) {
    const gyro::SymElement x =
        gyro::factorize(g16(), random_permutation(16, 3 * seed));
    const gyro::SymElement y =
        gyro::factorize(g16(), random_permutation(16, 3 * seed + 1));
    const gyro::SymElement z =
        gyro::factorize(g16(), random_permutation(16, 3 * seed + 2));

    CHECK(sym.add(x, sym.add(y, z)) ==
          sym.add(sym.add(x, y), gyro::gyr(sym, x, y, z)));
    CHECK(gyro::gyr(sym, x, y, z) == gyro::gyr(sym, sym.add(x, y), y, z));
  }
}

TEST_CASE("exhaustive verification of small extended carriers") {
  for (int n : {1, 2, 4}) {
    const gyro::SymVerifyReport r = gyro::verify_sym_exhaustive(cyclic(n));
    CHECK(r.axioms.passed);
    CHECK(r.mode == gyro::SymVerifyMode::kExhaustive);
    std::size_t factorial = 1;
    for (int k = 2; k <= n; ++k) factorial *= static_cast<std::size_t>(k);
    CHECK(r.element_count == factorial);
  }

  const gyro::SymVerifyReport klein = gyro::verify_sym_exhaustive(
      gyro::FiniteGyrogroup::from_table(
          gyro::CayleyTable(4, k16data::klein_entries())));
  CHECK(klein.axioms.passed);
  CHECK(klein.element_count == 24);

  CHECK_THROWS_AS(gyro::verify_sym_exhaustive(cyclic(5)),
                  gyro::CapabilityError);
  CHECK_THROWS_AS(gyro::verify_sym_exhaustive(g16()), gyro::CapabilityError);
}

TEST_CASE("sampled verification is deterministic in the seed") {
  const gyro::SymVerifyReport a = gyro::verify_sym_sampled(g16(), 2000, 42);
  CHECK(a.axioms.passed);
  CHECK(a.axioms.violations.empty());
  CHECK(a.mode == gyro::SymVerifyMode::kSampled);
  CHECK(a.samples == 2000);
  REQUIRE(a.seed.has_value());
  CHECK(*a.seed == 42);

  const gyro::SymVerifyReport b = gyro::verify_sym_sampled(g16(), 2000, 42);
  CHECK(b.axioms.passed == a.axioms.passed);
  CHECK(b.axioms.violations.size() == a.axioms.violations.size());

  CHECK_THROWS_AS(gyro::verify_sym_sampled(g16(), 0, 1),
                  gyro::PreconditionError);
}

}  // TEST_SUITE("cayley")
