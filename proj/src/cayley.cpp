#include <algorithm>
#include <map>
#include <numeric>

#include "gyro/cayley.hpp"
#include "gyro/core.hpp"
#include "gyro/errors.hpp"
#include "gyro/models.hpp"

namespace gyro {

SymElement factorize(const FiniteGyrogroup& g, const Permutation& sigma) {
  if (sigma.size() != g.order())
    throw PreconditionError("factorize: permutation size != carrier order");
  const int a = sigma(0);
  Permutation rho = g.left_translation(g.neg(a)) * sigma;
  if (rho(0) != 0)
    throw InternalError("translation part of the factorization moves 0");
  return SymElement{a, std::move(rho)};
}

Permutation materialize(const FiniteGyrogroup& g, const SymElement& s) {
  return g.left_translation(s.a) * s.rho;
}

SymElement sym_identity(const FiniteGyrogroup& g) {
  return SymElement{0, Permutation::identity(g.order())};
}

SymElement sym_add(const FiniteGyrogroup& g, const SymElement& x,
                   const SymElement& y) {
  return SymElement{g.add(x.a, y.a), x.rho * y.rho};
}

SymElement sym_neg(const FiniteGyrogroup& g, const SymElement& x) {
  return SymElement{g.neg(x.a), x.rho.inverse()};
}

SymElement sym_gyr(const FiniteGyrogroup& g, const SymElement& x,
                   const SymElement& y, const SymElement& z) {
  return SymElement{gyr(g, x.a, y.a, z.a), z.rho};
}

SymElement embed(const FiniteGyrogroup& g, int a) {
  return SymElement{a, Permutation::identity(g.order())};
}

bool composition_law_check(const FiniteGyrogroup& g) {
  for (int a = 0; a < g.order(); ++a) {
    const Permutation la = g.left_translation(a);
    for (int b = 0; b < g.order(); ++b) {
      const Permutation lhs = la * g.left_translation(b);
      const Permutation rhs =
          g.left_translation(g.add(a, b)) * g.gyration(a, b);
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

bool commutation_check(const FiniteGyrogroup& g, const Permutation& rho) {
  if (!is_automorphism(g, rho))
    throw PreconditionError("commutation_check requires an automorphism");
  for (int a = 0; a < g.order(); ++a)
    if (!(rho * g.left_translation(a) ==
          g.left_translation(rho(a)) * rho))
      return false;
  return true;
}

namespace {

constexpr std::size_t kMaxWitnesses = 8;

void record(AxiomReport& report, Axiom axiom, std::vector<int> witness,
            std::string detail) {
  std::size_t count = 0;
  for (const auto& v : report.violations)
    if (v.axiom == axiom) ++count;
  if (count < kMaxWitnesses)
    report.violations.push_back({axiom, std::move(witness), std::move(detail)});
}

}  // namespace

SymVerifyReport verify_sym_exhaustive(const FiniteGyrogroup& g) {
  if (g.order() > kSymExhaustiveMaxOrder)
    throw CapabilityError(
        "exhaustive Sym verification grows factorially; order " +
        std::to_string(g.order()) + " exceeds " +
        std::to_string(kSymExhaustiveMaxOrder));

  SymCarrier sym(g);
  std::vector<SymElement> elems;
  std::vector<int> images(static_cast<std::size_t>(g.order()));
  std::iota(images.begin(), images.end(), 0);
  do {
    elems.push_back(factorize(g, Permutation(images)));
  } while (std::next_permutation(images.begin(), images.end()));

  SymVerifyReport report;
  report.mode = SymVerifyMode::kExhaustive;
  report.element_count = elems.size();

  std::map<std::pair<int, std::vector<int>>, int> index;
  for (std::size_t i = 0; i < elems.size(); ++i)
    index[{elems[i].a, elems[i].rho.images()}] = static_cast<int>(i);
  auto index_of = [&](const SymElement& s) {
    return index.at({s.a, s.rho.images()});
  };

  const SymElement zero = sym.identity();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (!(sym.add(zero, elems[i]) == elems[i]))
      record(report.axioms, Axiom::kG1, {static_cast<int>(i)},
             "0 + a != a");
    if (!(sym.add(sym.neg(elems[i]), elems[i]) == zero))
      record(report.axioms, Axiom::kG2, {static_cast<int>(i)},
             "-a + a != 0");
  }

  const int m = static_cast<int>(elems.size());

  std::vector<std::vector<int>> sum_idx(
      static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
  for (int ic = 0; ic < m; ++ic)
    for (int id = 0; id < m; ++id)
      sum_idx[static_cast<std::size_t>(ic)][static_cast<std::size_t>(id)] =
          index_of(sym.add(elems[static_cast<std::size_t>(ic)],
                           elems[static_cast<std::size_t>(id)]));

  for (int ia = 0; ia < m; ++ia) {
    const SymElement& a = elems[static_cast<std::size_t>(ia)];
    for (int ib = 0; ib < m; ++ib) {
      const SymElement& b = elems[static_cast<std::size_t>(ib)];

      // gyr[a,b] tabulated once per pair: bijectivity, then preservation
      // of + on every argument pair, then the triple laws.
      std::vector<int> image(elems.size());
      std::vector<bool> hit(elems.size(), false);
      for (int ic = 0; ic < m; ++ic) {
        const int img = index_of(
            gyr(sym, a, b, elems[static_cast<std::size_t>(ic)]));
        image[static_cast<std::size_t>(ic)] = img;
        if (hit[static_cast<std::size_t>(img)])
          record(report.axioms, Axiom::kG3Auto, {ia, ib},
                 "gyr[a,b] is not injective");
        hit[static_cast<std::size_t>(img)] = true;
      }

      for (int ic = 0; ic < m; ++ic)
        for (int id = 0; id < m; ++id) {
          const int mapped_sum =
              image[static_cast<std::size_t>(sum_idx[static_cast<std::size_t>(
                  ic)][static_cast<std::size_t>(id)])];
          const int sum_of_mapped =
              sum_idx[static_cast<std::size_t>(
                  image[static_cast<std::size_t>(ic)])]
                     [static_cast<std::size_t>(
                         image[static_cast<std::size_t>(id)])];
          if (mapped_sum != sum_of_mapped) {
            record(report.axioms, Axiom::kG3Auto, {ia, ib, ic, id},
                   "gyr[a,b] does not preserve +");
            ic = m;  // one witness per pair is enough
            break;
          }
        }

      for (int ic = 0; ic < m; ++ic) {
        const SymElement& c = elems[static_cast<std::size_t>(ic)];
        if (!(sym.add(a, sym.add(b, c)) ==
              sym.add(sym.add(a, b),
                      elems[static_cast<std::size_t>(
                          image[static_cast<std::size_t>(ic)])])))
          record(report.axioms, Axiom::kG3Assoc, {ia, ib, ic},
                 "a+(b+c) != (a+b)+gyr[a,b]c");
        if (!(elems[static_cast<std::size_t>(
                  image[static_cast<std::size_t>(ic)])] ==
              gyr(sym, sym.add(a, b), b, c)))
          record(report.axioms, Axiom::kG4, {ia, ib, ic},
                 "gyr[a,b] != gyr[a+b,b]");
        if (!(sym_gyr(g, a, b, c) ==
              elems[static_cast<std::size_t>(
                  image[static_cast<std::size_t>(ic)])]))
          record(report.axioms, Axiom::kInternal, {ia, ib, ic},
                 "closed-form gyration disagrees with the gyrator identity");
      }
    }
  }

  report.axioms.passed = report.axioms.violations.empty();
  return report;
}

SymVerifyReport verify_sym_sampled(const FiniteGyrogroup& g, int samples,
                                   std::uint64_t seed) {
  if (samples < 1)
    throw PreconditionError("verify_sym_sampled: samples < 1");

  SymCarrier sym(g);
  SampleRng rng(seed);
  const int n = g.order();

  auto random_element = [&] {
    // Uniform 0-fixing translation part via Fisher-Yates on 1..n-1.
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 0);
    for (int i = n - 1; i >= 2; --i)
      std::swap(images[static_cast<std::size_t>(i)],
                images[static_cast<std::size_t>(1 + rng.below(i))]);
    return SymElement{rng.below(n), Permutation(std::move(images))};
  };

  SymVerifyReport report;
  report.mode = SymVerifyMode::kSampled;
  report.samples = samples;
  report.seed = seed;

  const SymElement zero = sym.identity();
  std::vector<SymElement> triple;
  for (int s = 0; s < samples; ++s) {
    const SymElement a = random_element();
    const SymElement b = random_element();
    const SymElement c = random_element();

    if (!(sym.add(zero, a) == a))
      record(report.axioms, Axiom::kG1, {s}, "0 + a != a");
    if (!(sym.add(sym.neg(a), a) == zero))
      record(report.axioms, Axiom::kG2, {s}, "-a + a != 0");
    if (!(sym.add(a, sym.add(b, c)) ==
          sym.add(sym.add(a, b), gyr(sym, a, b, c))))
      record(report.axioms, Axiom::kG3Assoc, {s},
             "a+(b+c) != (a+b)+gyr[a,b]c");
    if (!(gyr(sym, a, b, sym.add(c, a)) ==
          sym.add(gyr(sym, a, b, c), gyr(sym, a, b, a))))
      record(report.axioms, Axiom::kG3Auto, {s},
             "gyr[a,b] does not preserve +");
    if (!(gyr(sym, a, b, c) == gyr(sym, sym.add(a, b), b, c)))
      record(report.axioms, Axiom::kG4, {s}, "gyr[a,b] != gyr[a+b,b]");
    if (!(sym_gyr(g, a, b, c) == gyr(sym, a, b, c)))
      record(report.axioms, Axiom::kInternal, {s},
             "closed-form gyration disagrees with the gyrator identity");
  }

  report.axioms.passed = report.axioms.violations.empty();
  return report;
}

}  // namespace gyro
