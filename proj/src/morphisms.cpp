#include <algorithm>
#include <string>

#include "gyro/core.hpp"
#include "gyro/errors.hpp"
#include "gyro/morphisms.hpp"

namespace gyro {

namespace {

std::string pair_string(int a, int b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

}  // namespace

std::string_view to_string(NormalityStage s) {
  switch (s) {
    case NormalityStage::kLSubgyrogroup: return "L-subgyrogroup";
    case NormalityStage::kWellDefined: return "coset operation well-defined";
    case NormalityStage::kQuotientAxioms: return "quotient axioms";
    case NormalityStage::kProjectionKernel: return "projection kernel";
    case NormalityStage::kNormal: return "normal";
  }
  return "unknown";
}

std::optional<std::pair<int, int>> homomorphism_violation(
    const FiniteGyrogroup& source, const FiniteGyrogroup& target,
    const std::vector<int>& map) {
  for (int a = 0; a < source.order(); ++a)
    for (int b = 0; b < source.order(); ++b)
      if (map[static_cast<std::size_t>(source.add(a, b))] !=
          target.add(map[static_cast<std::size_t>(a)],
                     map[static_cast<std::size_t>(b)]))
        return std::make_pair(a, b);
  return std::nullopt;
}

GyroHomomorphism make_homomorphism(const FiniteGyrogroup& source,
                                   const FiniteGyrogroup& target,
                                   std::vector<int> map) {
  if (static_cast<int>(map.size()) != source.order())
    throw PreconditionError("homomorphism map has wrong length");
  for (int v : map)
    if (v < 0 || v >= target.order())
      throw PreconditionError("homomorphism map leaves the target carrier");
  if (auto w = homomorphism_violation(source, target, map))
    throw PreconditionError("map is not additive at " +
                            pair_string(w->first, w->second));

  // Derived preservation laws; violations would contradict theorems.
  const auto f = [&map](int a) { return map[static_cast<std::size_t>(a)]; };
  if (f(0) != 0)
    throw InternalError("additive map does not preserve the identity");
  for (int a = 0; a < source.order(); ++a)
    if (f(source.neg(a)) != target.neg(f(a)))
      throw InternalError("additive map does not preserve negation");
  for (int a = 0; a < source.order(); ++a)
    for (int b = 0; b < source.order(); ++b) {
      if (f(coadd(source, a, b)) != coadd(target, f(a), f(b)))
        throw InternalError("additive map does not preserve coaddition");
      for (int c = 0; c < source.order(); ++c)
        if (f(gyr(source, a, b, c)) != gyr(target, f(a), f(b), f(c)))
          throw InternalError("additive map does not preserve gyrations");
    }

  return GyroHomomorphism{&source, &target, std::move(map)};
}

Subgyrogroup kernel(const GyroHomomorphism& f) {
  ElementSet k = 0;
  for (int a = 0; a < f.source->order(); ++a)
    if (f(a) == f.target->identity()) k = set_insert(k, a);

  if (!is_subgyrogroup(*f.source, k))
    throw InternalError("kernel is not a subgyrogroup");
  Subgyrogroup sub{f.source, k};
  if (!is_l_subgyrogroup(sub))
    throw InternalError("kernel is not an L-subgyrogroup");
  return sub;
}

Subgyrogroup image(const GyroHomomorphism& f) {
  ElementSet im = 0;
  for (int a = 0; a < f.source->order(); ++a) im = set_insert(im, f(a));
  if (!is_subgyrogroup(*f.target, im))
    throw InternalError("image is not a subgyrogroup");
  return Subgyrogroup{f.target, im};
}

namespace {

struct QuotientBuild {
  NormalityReport report;
  // Meaningful only when report.normal:
  CosetDecomposition cosets;
  std::vector<int> coset_index;
  CayleyTable table;
};

QuotientBuild build_quotient(const FiniteGyrogroup& g, ElementSet n) {
  QuotientBuild out;

  if (!is_subgyrogroup(g, n)) {
    out.report = {false, NormalityStage::kLSubgyrogroup,
                  set_string(n) + " is not a subgyrogroup"};
    return out;
  }
  Subgyrogroup sub{&g, n};
  if (auto w = l_subgyrogroup_witness(sub)) {
    out.report = {false, NormalityStage::kLSubgyrogroup,
                  "gyr[" + std::to_string(w->a) + ", " + std::to_string(w->h) +
                      "] maps " + set_string(n) + " to " +
                      set_string(w->image)};
    return out;
  }

  out.cosets = cosets_partition(sub);
  if (!out.cosets.is_partition) {
    out.report = {false, NormalityStage::kLSubgyrogroup,
                  "cosets of an L-subgyrogroup failed to partition"};
    return out;
  }

  const int q = static_cast<int>(out.cosets.classes.size());
  out.coset_index.assign(static_cast<std::size_t>(g.order()), -1);
  for (int i = 0; i < q; ++i)
    for (int x : set_elements(out.cosets.classes[static_cast<std::size_t>(i)]))
      out.coset_index[static_cast<std::size_t>(x)] = i;

  // Representative independence of coset addition.
  std::vector<int> table(static_cast<std::size_t>(q) *
                             static_cast<std::size_t>(q),
                         -1);
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y) {
      const int cx = out.coset_index[static_cast<std::size_t>(x)];
      const int cy = out.coset_index[static_cast<std::size_t>(y)];
      const int cz = out.coset_index[static_cast<std::size_t>(g.add(x, y))];
      int& cell = table[static_cast<std::size_t>(cx) * q + cy];
      if (cell < 0) {
        cell = cz;
      } else if (cell != cz) {
        out.report = {false, NormalityStage::kWellDefined,
                      "sum of cosets " + std::to_string(cx) + " and " +
                          std::to_string(cy) +
                          " depends on representatives, e.g. " +
                          pair_string(x, y)};
        return out;
      }
    }

  out.table = CayleyTable(q, std::move(table));
  AxiomReport axioms = verify_axioms(out.table);
  if (!axioms.passed) {
    out.report = {false, NormalityStage::kQuotientAxioms,
                  "coset table violates " +
                      std::string(to_string(axioms.violations[0].axiom))};
    return out;
  }

  if (out.cosets.classes[0] != n) {
    out.report = {false, NormalityStage::kProjectionKernel,
                  "kernel of the projection is " +
                      set_string(out.cosets.classes[0]) + ", not " +
                      set_string(n)};
    return out;
  }

  out.report = {true, NormalityStage::kNormal, ""};
  return out;
}

}  // namespace

NormalityReport check_normal(const FiniteGyrogroup& g, ElementSet n) {
  return build_quotient(g, n).report;
}

bool is_normal(const FiniteGyrogroup& g, ElementSet n) {
  return check_normal(g, n).normal;
}

GyroHomomorphism QuotientGyrogroup::projection() const {
  return GyroHomomorphism{parent, &group, coset_index};
}

QuotientGyrogroup quotient(const FiniteGyrogroup& g, ElementSet n) {
  QuotientBuild b = build_quotient(g, n);
  if (!b.report.normal)
    throw PreconditionError("quotient requires a normal subgyrogroup; " +
                            set_string(n) + " fails at stage '" +
                            std::string(to_string(b.report.stage)) +
                            "': " + b.report.detail);

  QuotientGyrogroup q{FiniteGyrogroup::from_table(std::move(b.table)), &g,
                      Subgyrogroup{&g, n}, std::move(b.cosets),
                      std::move(b.coset_index)};

  // gyr[[a],[b]][c] = [gyr[a,b]c], the quotient gyration law.
  const int order = g.order();
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      const Permutation qgyr =
          q.group.gyration(q.coset_index[static_cast<std::size_t>(a)],
                           q.coset_index[static_cast<std::size_t>(b)]);
      for (int c = 0; c < order; ++c)
        if (qgyr(q.coset_index[static_cast<std::size_t>(c)]) !=
            q.coset_index[static_cast<std::size_t>(gyr(g, a, b, c))])
          throw InternalError("quotient gyration law failed at (" +
                              std::to_string(a) + ", " + std::to_string(b) +
                              ", " + std::to_string(c) + ")");
    }

  return q;
}

FirstIsoResult first_iso_check(const GyroHomomorphism& f) {
  const FiniteGyrogroup& g = *f.source;
  Subgyrogroup ker = kernel(f);
  if (!is_normal(g, ker.members))
    throw InternalError("kernel fails the normality test");

  FirstIsoResult r{quotient(g, ker.members), as_gyrogroup(image(f)), {}};

  const int q = r.quotient_group.group.order();
  r.iso.assign(static_cast<std::size_t>(q), -1);
  for (int a = 0; a < g.order(); ++a) {
    const int qa =
        r.quotient_group.coset_index[static_cast<std::size_t>(a)];
    const int ia = r.image_group.from_parent[static_cast<std::size_t>(f(a))];
    int& cell = r.iso[static_cast<std::size_t>(qa)];
    if (cell < 0)
      cell = ia;
    else if (cell != ia)
      throw InternalError("induced map on cosets is not well-defined");
  }

  if (!is_bijection(r.iso))
    throw InternalError("induced map on cosets is not bijective");
  if (auto w =
          homomorphism_violation(r.quotient_group.group, r.image_group.group, r.iso))
    throw InternalError("induced map on cosets is not additive at " +
                        pair_string(w->first, w->second));
  return r;
}

ElementSet oplus_set(const FiniteGyrogroup& g, ElementSet a, ElementSet b) {
  if (!is_subgyrogroup(g, a))
    throw PreconditionError("oplus_set: " + set_string(a) +
                            " is not a subgyrogroup");
  if (!is_normal(g, b))
    throw PreconditionError("oplus_set: " + set_string(b) + " is not normal");

  ElementSet out = 0;
  for (int x : set_elements(a))
    for (int y : set_elements(b)) out = set_insert(out, g.add(x, y));

  if (!is_subgyrogroup(g, out))
    throw InternalError("A + B is not a subgyrogroup");
  Subgyrogroup bsub{&g, b};
  for (int x = 0; x < g.order(); ++x) {
    ElementSet right = 0;
    for (int y : set_elements(b)) right = set_insert(right, g.add(y, x));
    if (right != left_coset(bsub, x))
      throw InternalError("B + a != a + B at a = " + std::to_string(x));
  }
  return out;
}

namespace {

ElementSet translate_mask(const std::vector<int>& from_parent, ElementSet s) {
  ElementSet out = 0;
  for (int x : set_elements(s))
    out = set_insert(out, from_parent[static_cast<std::size_t>(x)]);
  return out;
}

/// Certify `candidate` as an isomorphism, falling back to a search.
bool certify_iso(const FiniteGyrogroup& from, const FiniteGyrogroup& to,
                 std::vector<int> candidate, bool candidate_defined,
                 IsoPath& path, std::vector<int>& iso) {
  if (candidate_defined && is_bijection(candidate) &&
      !homomorphism_violation(from, to, candidate)) {
    path = IsoPath::kExplicitMap;
    iso = std::move(candidate);
    return true;
  }
  if (auto found = find_isomorphism(from, to)) {
    path = IsoPath::kSearch;
    iso = std::move(*found);
    return true;
  }
  return false;
}

}  // namespace

SecondIsoResult second_iso_check(const FiniteGyrogroup& g, ElementSet a,
                                 ElementSet b) {
  SecondIsoResult r;
  r.ab = oplus_set(g, a, b);  // validates both preconditions
  r.intersection = a & b;

  MaterializedSubgroup ab = as_gyrogroup(Subgyrogroup{&g, r.ab});
  MaterializedSubgroup asub = as_gyrogroup(Subgyrogroup{&g, a});

  const ElementSet b_in_ab = translate_mask(ab.from_parent, b);
  const ElementSet i_in_a = translate_mask(asub.from_parent, r.intersection);
  if (!is_normal(ab.group, b_in_ab))
    throw InternalError("B is not normal in A + B");
  if (!is_normal(asub.group, i_in_a))
    throw InternalError("A ^ B is not normal in A");

  QuotientGyrogroup q1 = quotient(ab.group, b_in_ab);
  QuotientGyrogroup q2 = quotient(asub.group, i_in_a);

  // Witness map x + B -> a + (A ^ B) for any decomposition x = a + b.
  std::vector<int> psi(static_cast<std::size_t>(q1.group.order()), -1);
  bool defined = true;
  for (int x_ab = 0; x_ab < ab.group.order() && defined; ++x_ab) {
    const int x = ab.to_parent[static_cast<std::size_t>(x_ab)];
    const int q1x = q1.coset_index[static_cast<std::size_t>(x_ab)];
    for (int y : set_elements(a)) {
      if (!set_contains(b, g.add(g.neg(y), x))) continue;  // x != y + B
      const int q2y = q2.coset_index[static_cast<std::size_t>(
          asub.from_parent[static_cast<std::size_t>(y)])];
      int& cell = psi[static_cast<std::size_t>(q1x)];
      if (cell < 0)
        cell = q2y;
      else if (cell != q2y)
        defined = false;
    }
  }
  defined = defined && std::none_of(psi.begin(), psi.end(),
                                    [](int v) { return v < 0; });

  r.ok = certify_iso(q1.group, q2.group, std::move(psi), defined, r.path,
                     r.iso);
  return r;
}

ThirdIsoResult third_iso_check(const FiniteGyrogroup& g, ElementSet h,
                               ElementSet k) {
  if ((h & k) != h)
    throw PreconditionError("third_iso_check requires H within K");
  if (!is_normal(g, h))
    throw PreconditionError("third_iso_check: H is not normal");
  if (!is_normal(g, k))
    throw PreconditionError("third_iso_check: K is not normal");

  ThirdIsoResult r;
  QuotientGyrogroup qh = quotient(g, h);
  QuotientGyrogroup qk = quotient(g, k);

  ElementSet k_over_h = 0;
  for (int x : set_elements(k))
    k_over_h =
        set_insert(k_over_h, qh.coset_index[static_cast<std::size_t>(x)]);
  if (!is_normal(qh.group, k_over_h))
    throw InternalError("K / H is not normal in G / H");

  QuotientGyrogroup qq = quotient(qh.group, k_over_h);

  // Witness map (a + H) + K/H -> a + K.
  std::vector<int> chi(static_cast<std::size_t>(qq.group.order()), -1);
  bool defined = true;
  for (int x = 0; x < g.order() && defined; ++x) {
    const int qqx = qq.coset_index[static_cast<std::size_t>(
        qh.coset_index[static_cast<std::size_t>(x)])];
    const int qkx = qk.coset_index[static_cast<std::size_t>(x)];
    int& cell = chi[static_cast<std::size_t>(qqx)];
    if (cell < 0)
      cell = qkx;
    else if (cell != qkx)
      defined = false;
  }
  defined = defined && std::none_of(chi.begin(), chi.end(),
                                    [](int v) { return v < 0; });

  r.ok = certify_iso(qq.group, qk.group, std::move(chi), defined, r.path,
                     r.iso);
  return r;
}

LatticeCorrespondence lattice_check(const FiniteGyrogroup& g, ElementSet n) {
  if (!is_normal(g, n))
    throw PreconditionError("lattice_check requires a normal subgyrogroup");

  LatticeCorrespondence r;
  QuotientGyrogroup q = quotient(g, n);

  std::vector<ElementSet> over_n;
  for (const Subgyrogroup& s : enumerate_subgyrogroups(g))
    if ((s.members & n) == n) over_n.push_back(s.members);

  for (ElementSet s : over_n) {
    ElementSet mapped = 0;
    for (int x : set_elements(s))
      mapped = set_insert(mapped, q.coset_index[static_cast<std::size_t>(x)]);
    if (!is_subgyrogroup(q.group, mapped))
      throw InternalError("K / N is not a subgyrogroup of G / N");
    r.pairs.emplace_back(s, mapped);
  }

  std::vector<ElementSet> mapped_all;
  for (const auto& [s, m] : r.pairs) mapped_all.push_back(m);
  std::sort(mapped_all.begin(), mapped_all.end());
  const bool injective =
      std::adjacent_find(mapped_all.begin(), mapped_all.end()) ==
      mapped_all.end();

  std::vector<ElementSet> quotient_subs;
  for (const Subgyrogroup& s : enumerate_subgyrogroups(q.group))
    quotient_subs.push_back(s.members);
  std::sort(quotient_subs.begin(), quotient_subs.end());
  r.bijective = injective && mapped_all == quotient_subs;

  r.inclusion_preserved = true;
  for (const auto& [s1, m1] : r.pairs)
    for (const auto& [s2, m2] : r.pairs) {
      const bool sub_incl = (s1 & s2) == s1;
      const bool quot_incl = (m1 & m2) == m1;
      if (sub_incl != quot_incl) r.inclusion_preserved = false;
    }

  r.l_property_preserved = true;
  r.normality_preserved = true;
  for (const auto& [s, m] : r.pairs) {
    if (is_l_subgyrogroup(Subgyrogroup{&g, s}) !=
        is_l_subgyrogroup(Subgyrogroup{&q.group, m}))
      r.l_property_preserved = false;
    if (is_normal(g, s) != is_normal(q.group, m))
      r.normality_preserved = false;
  }

  r.ok = r.bijective && r.inclusion_preserved && r.l_property_preserved &&
         r.normality_preserved;
  return r;
}

namespace {

// Depth-first enumeration of additive maps with forward closure: each new
// assignment forces map[a + b] = map[a] + map[b] for every assigned pair,
// and contradictions prune the branch.
class HomSearch {
 public:
  HomSearch(const FiniteGyrogroup& g, const FiniteGyrogroup& h,
            bool bijective_only, bool first_only)
      : g_(g), h_(h), bijective_only_(bijective_only), first_only_(first_only) {}

  std::vector<std::vector<int>> run() {
    std::vector<int> map(static_cast<std::size_t>(g_.order()), -1);
    map[0] = 0;
    if (propagate(map)) dfs(map);
    std::sort(results_.begin(), results_.end());
    return std::move(results_);
  }

 private:
  bool propagate(std::vector<int>& map) {
    for (bool changed = true; changed;) {
      changed = false;
      for (int a = 0; a < g_.order(); ++a) {
        if (map[static_cast<std::size_t>(a)] < 0) continue;
        for (int b = 0; b < g_.order(); ++b) {
          if (map[static_cast<std::size_t>(b)] < 0) continue;
          const int c = g_.add(a, b);
          const int v = h_.add(map[static_cast<std::size_t>(a)],
                               map[static_cast<std::size_t>(b)]);
          int& cell = map[static_cast<std::size_t>(c)];
          if (cell < 0) {
            cell = v;
            changed = true;
          } else if (cell != v) {
            return false;
          }
        }
      }
    }
    if (bijective_only_) {
      ElementSet used = 0;
      for (int v : map) {
        if (v < 0) continue;
        if (set_contains(used, v)) return false;
        used = set_insert(used, v);
      }
    }
    return true;
  }

  void dfs(std::vector<int>& map) {
    if (first_only_ && !results_.empty()) return;

    int next = -1;
    for (int a = 0; a < g_.order(); ++a)
      if (map[static_cast<std::size_t>(a)] < 0) {
        next = a;
        break;
      }

    if (next < 0) {
      if (!homomorphism_violation(g_, h_, map) &&
          (!bijective_only_ || is_bijection(map)))
        results_.push_back(map);
      return;
    }

    for (int v = 0; v < h_.order(); ++v) {
      std::vector<int> child = map;
      child[static_cast<std::size_t>(next)] = v;
      if (propagate(child)) dfs(child);
      if (first_only_ && !results_.empty()) return;
    }
  }

  const FiniteGyrogroup& g_;
  const FiniteGyrogroup& h_;
  bool bijective_only_;
  bool first_only_;
  std::vector<std::vector<int>> results_;
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const FiniteGyrogroup& g1,
                                                 const FiniteGyrogroup& g2) {
  if (g1.order() != g2.order()) return std::nullopt;
  if (g1.order() > 64)
    throw CapabilityError("find_isomorphism is limited to order 64");
  auto found = HomSearch(g1, g2, true, true).run();
  if (found.empty()) return std::nullopt;
  return std::move(found.front());
}

std::vector<std::vector<int>> enumerate_homomorphisms(
    const FiniteGyrogroup& g, const FiniteGyrogroup& h) {
  if (g.order() * h.order() > 256)
    throw CapabilityError(
        "enumerate_homomorphisms is limited to |G| * |H| <= 256");
  return HomSearch(g, h, false, false).run();
}

}  // namespace gyro
