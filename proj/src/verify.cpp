#include <string>

#include "gyro/finite.hpp"

namespace gyro {

namespace {

constexpr std::size_t kMaxWitnessesPerAxiom = 8;

class Recorder {
 public:
  explicit Recorder(std::vector<AxiomViolation>& out) : out_(&out) {}

  // True when the axiom can take more witnesses.
  bool add(Axiom axiom, std::vector<int> witness, std::string detail) {
    std::size_t& count = counts_[static_cast<std::size_t>(axiom)];
    if (count < kMaxWitnessesPerAxiom)
      out_->push_back({axiom, std::move(witness), std::move(detail)});
    ++count;
    return count < kMaxWitnessesPerAxiom;
  }

  bool seen(Axiom axiom) const {
    return counts_[static_cast<std::size_t>(axiom)] > 0;
  }

 private:
  std::vector<AxiomViolation>* out_;
  std::size_t counts_[8] = {};
};

}  // namespace

std::string_view to_string(Axiom a) {
  switch (a) {
    case Axiom::kRange: return "range";
    case Axiom::kRowBijective: return "row-bijective";
    case Axiom::kG1: return "G1";
    case Axiom::kG2: return "G2";
    case Axiom::kG3Auto: return "G3-auto";
    case Axiom::kG3Assoc: return "G3-assoc";
    case Axiom::kG4: return "G4";
    case Axiom::kInternal: return "internal";
  }
  return "unknown";
}

AxiomReport verify_axioms(const CayleyTable& t) {
  AxiomReport report;
  Recorder rec(report.violations);
  const int n = t.order;

  if (n < 1 || t.entries.size() != static_cast<std::size_t>(n) *
                                       static_cast<std::size_t>(n))
    throw std::invalid_argument("verify_axioms: malformed table shape");

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int v = t.at(a, b);
      if (v < 0 || v >= n)
        rec.add(Axiom::kRange, {a, b, v},
                "entry outside 0.." + std::to_string(n - 1));
    }
  if (rec.seen(Axiom::kRange)) {
    // Nothing further can be evaluated safely.
    report.passed = false;
    return report;
  }

  for (int a = 0; a < n; ++a) {
    std::vector<int> first_col(static_cast<std::size_t>(n), -1);
    for (int b = 0; b < n; ++b) {
      const int v = t.at(a, b);
      if (first_col[static_cast<std::size_t>(v)] >= 0)
        rec.add(Axiom::kRowBijective,
                {a, first_col[static_cast<std::size_t>(v)], b},
                "row " + std::to_string(a) + " repeats entry " +
                    std::to_string(v));
      else
        first_col[static_cast<std::size_t>(v)] = b;
    }
  }

  // The verifier is label-agnostic: it searches for the identity rather
  // than assuming index 0, so transported tables verify unchanged.
  int e = -1;
  for (int cand = 0; cand < n && e < 0; ++cand) {
    bool left_identity = true;
    for (int a = 0; a < n && left_identity; ++a)
      left_identity = t.at(cand, a) == a;
    if (left_identity) e = cand;
  }
  if (e < 0) {
    rec.add(Axiom::kG1, {}, "no left identity element");
    report.passed = false;
    return report;
  }
  for (int a = 0; a < n; ++a)
    if (t.at(a, e) != a) {
      if (!rec.add(Axiom::kInternal, {a},
                   "right identity fails: " + std::to_string(a) + " + " +
                       std::to_string(e) + " = " + std::to_string(t.at(a, e))))
        break;
    }

  std::vector<int> linv(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (t.at(b, a) == e) {
        linv[static_cast<std::size_t>(a)] = b;
        break;
      }
    if (linv[static_cast<std::size_t>(a)] < 0)
      rec.add(Axiom::kG2, {a}, "no left inverse for " + std::to_string(a));
  }
  if (rec.seen(Axiom::kG2)) {
    // Without total inverses the gyrations below are not defined.
    report.passed = false;
    return report;
  }
  for (int a = 0; a < n; ++a) {
    const int la = linv[static_cast<std::size_t>(a)];
    if (t.at(a, la) != e)
      if (!rec.add(Axiom::kInternal, {a, la},
                   "left inverse of " + std::to_string(a) +
                       " is not a right inverse"))
        break;
  }

  // gyr[a,b]c = -(a+b) + (a + (b+c)), tabulated per pair.
  auto gyr_row = [&](int a, int b) {
    std::vector<int> im(static_cast<std::size_t>(n));
    const int minus_ab = linv[static_cast<std::size_t>(t.at(a, b))];
    for (int c = 0; c < n; ++c)
      im[static_cast<std::size_t>(c)] = t.at(minus_ab, t.at(a, t.at(b, c)));
    return im;
  };

  bool g3auto_open = true;
  bool g3assoc_open = true;
  bool g4_open = true;
  bool internal_open = true;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const std::vector<int> w = gyr_row(a, b);

      if (g3auto_open && !is_bijection(w))
        g3auto_open = rec.add(Axiom::kG3Auto, {a, b},
                              "gyr[" + std::to_string(a) + "," +
                                  std::to_string(b) + "] is not bijective");
      if (g3auto_open)
        for (int c = 0; c < n && g3auto_open; ++c)
          for (int d = 0; d < n; ++d) {
            const int lhs = w[static_cast<std::size_t>(t.at(c, d))];
            const int rhs = t.at(w[static_cast<std::size_t>(c)],
                                 w[static_cast<std::size_t>(d)]);
            if (lhs != rhs) {
              g3auto_open =
                  rec.add(Axiom::kG3Auto, {a, b, c, d},
                          "gyr[" + std::to_string(a) + "," +
                              std::to_string(b) + "] does not preserve +");
              break;
            }
          }

      if (g3assoc_open)
        for (int c = 0; c < n; ++c) {
          const int lhs = t.at(a, t.at(b, c));
          const int rhs = t.at(t.at(a, b), w[static_cast<std::size_t>(c)]);
          if (lhs != rhs) {
            g3assoc_open = rec.add(Axiom::kG3Assoc, {a, b, c},
                                   "a+(b+c) != (a+b)+gyr[a,b]c");
            break;
          }
        }

      if (g4_open && w != gyr_row(t.at(a, b), b))
        g4_open = rec.add(Axiom::kG4, {a, b}, "gyr[a,b] != gyr[a+b,b]");

      // Right-hand counterparts; these follow from G1..G4, so failures
      // are reported as internal diagnostics rather than axiom breaks.
      if (internal_open) {
        const std::vector<int> wr = gyr_row(b, a);
        for (int c = 0; c < n; ++c) {
          const int lhs = t.at(t.at(a, b), c);
          const int rhs = t.at(a, t.at(b, wr[static_cast<std::size_t>(c)]));
          if (lhs != rhs) {
            internal_open = rec.add(Axiom::kInternal, {a, b, c},
                                    "(a+b)+c != a+(b+gyr[b,a]c)");
            break;
          }
        }
        if (internal_open && w != gyr_row(a, t.at(b, a)))
          internal_open =
              rec.add(Axiom::kInternal, {a, b}, "gyr[a,b] != gyr[a,b+a]");
      }
    }
  }

  report.passed = report.violations.empty();
  return report;
}

}  // namespace gyro
