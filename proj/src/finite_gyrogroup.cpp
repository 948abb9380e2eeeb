#include <string>
#include <utility>

#include "gyro/core.hpp"
#include "gyro/finite.hpp"

namespace gyro {

namespace {

// Gyration cache is kept for carriers up to this order; above it the
// permutations are recomputed on demand.
constexpr int kGyrationCacheBound = 64;

std::vector<int> gyration_images(const CayleyTable& t,
                                 const std::vector<int>& neg, int a, int b) {
  const int n = t.order;
  std::vector<int> im(static_cast<std::size_t>(n));
  const int minus_ab = neg[static_cast<std::size_t>(t.at(a, b))];
  for (int c = 0; c < n; ++c)
    im[static_cast<std::size_t>(c)] = t.at(minus_ab, t.at(a, t.at(b, c)));
  return im;
}

}  // namespace

NotAGyrogroup::NotAGyrogroup(AxiomReport report)
    : std::runtime_error(
          report.violations.empty()
              ? "table is not a gyrogroup"
              : "table is not a gyrogroup: first violation " +
                    std::string(to_string(report.violations[0].axiom)) + ": " +
                    report.violations[0].detail),
      report_(std::move(report)) {}

FiniteGyrogroup::FiniteGyrogroup(CayleyTable t) : table_(std::move(t)) {
  const int n = table_.order;
  neg_.resize(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (table_.at(b, a) == 0) {
        neg_[static_cast<std::size_t>(a)] = b;
        break;
      }

  if (n <= kGyrationCacheBound) {
    gyr_.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        gyr_.emplace_back(gyration_images(table_, neg_, a, b));
  }
}

FiniteGyrogroup FiniteGyrogroup::from_table(CayleyTable t) {
  AxiomReport report = verify_axioms(t);
  if (!report.passed) throw NotAGyrogroup(std::move(report));
  for (int a = 0; a < t.order; ++a)
    if (t.at(0, a) != a)
      throw std::invalid_argument(
          "from_table: identity must be element 0 (normalize the labeling "
          "first)");
  return FiniteGyrogroup(std::move(t));
}

Permutation FiniteGyrogroup::gyration(int a, int b) const {
  if (!gyr_.empty())
    return gyr_[static_cast<std::size_t>(a) * order() + b];
  return Permutation(gyration_images(table_, neg_, a, b));
}

Permutation FiniteGyrogroup::left_translation(int a) const {
  const int n = order();
  std::vector<int> im(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) im[static_cast<std::size_t>(x)] = add(a, x);
  return Permutation(std::move(im));
}

Permutation FiniteGyrogroup::right_translation(int a) const {
  const int n = order();
  std::vector<int> im(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) im[static_cast<std::size_t>(x)] = add(x, a);
  return Permutation(std::move(im));
}

std::vector<Permutation> gyration_table(const FiniteGyrogroup& g) {
  std::vector<Permutation> out;
  const int n = g.order();
  out.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) out.push_back(g.gyration(a, b));
  return out;
}

bool is_automorphism(const FiniteGyrogroup& g, const Permutation& p) {
  const int n = g.order();
  if (p.size() != n) return false;
  if (p(0) != 0) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (p(g.add(a, b)) != g.add(p(a), p(b))) return false;
  return true;
}

std::optional<std::pair<int, int>> gyrocommutativity_witness(
    const FiniteGyrogroup& g) {
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.add(a, b) != gyr(g, a, b, g.add(b, a)))
        return std::make_pair(a, b);
  return std::nullopt;
}

bool is_gyrocommutative(const FiniteGyrogroup& g) {
  return !gyrocommutativity_witness(g).has_value();
}

namespace {

constexpr int kK16[16][16] = {
    {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15},
    {1, 0, 3, 2, 5, 4, 7, 6, 9, 8, 11, 10, 13, 12, 15, 14},
    {2, 3, 1, 0, 6, 7, 5, 4, 11, 10, 8, 9, 15, 14, 12, 13},
    {3, 2, 0, 1, 7, 6, 4, 5, 10, 11, 9, 8, 14, 15, 13, 12},
    {4, 5, 6, 7, 3, 2, 0, 1, 15, 14, 12, 13, 9, 8, 11, 10},
    {5, 4, 7, 6, 2, 3, 1, 0, 14, 15, 13, 12, 8, 9, 10, 11},
    {6, 7, 5, 4, 0, 1, 2, 3, 13, 12, 15, 14, 10, 11, 9, 8},
    {7, 6, 4, 5, 1, 0, 3, 2, 12, 13, 14, 15, 11, 10, 8, 9},
    {8, 9, 10, 11, 12, 13, 14, 15, 0, 1, 2, 3, 4, 5, 6, 7},
    {9, 8, 11, 10, 13, 12, 15, 14, 1, 0, 3, 2, 5, 4, 7, 6},
    {10, 11, 9, 8, 14, 15, 13, 12, 3, 2, 0, 1, 7, 6, 4, 5},
    {11, 10, 8, 9, 15, 14, 12, 13, 2, 3, 1, 0, 6, 7, 5, 4},
    {12, 13, 14, 15, 11, 10, 8, 9, 6, 7, 5, 4, 0, 1, 2, 3},
    {13, 12, 15, 14, 10, 11, 9, 8, 7, 6, 4, 5, 1, 0, 3, 2},
    {14, 15, 13, 12, 8, 9, 10, 11, 4, 5, 6, 7, 3, 2, 0, 1},
    {15, 14, 12, 13, 9, 8, 11, 10, 5, 4, 7, 6, 2, 3, 1, 0},
};

}  // namespace

const FiniteGyrogroup& k16() {
  static const FiniteGyrogroup instance = [] {
    std::vector<int> entries;
    entries.reserve(256);
    for (const auto& row : kK16)
      for (int v : row) entries.push_back(v);
    return FiniteGyrogroup::from_table(CayleyTable(16, std::move(entries)));
  }();
  return instance;
}

}  // namespace gyro
