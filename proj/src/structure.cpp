#include <algorithm>
#include <set>

#include "gyro/errors.hpp"
#include "gyro/structure.hpp"

namespace gyro {

namespace {

void require_desk_scale(const FiniteGyrogroup& g) {
  if (g.order() > 64)
    throw CapabilityError(
        "structural analysis uses 64-bit element sets; order " +
        std::to_string(g.order()) + " exceeds 64");
}

void require_member_range(const FiniteGyrogroup& g, ElementSet s) {
  if (s != 0 && (s & full_set(g.order())) != s)
    throw PreconditionError("element set mentions labels outside the carrier");
}

}  // namespace

ElementSet set_of(std::initializer_list<int> elements) {
  ElementSet s = 0;
  for (int a : elements) s = set_insert(s, a);
  return s;
}

ElementSet set_of(const std::vector<int>& elements) {
  ElementSet s = 0;
  for (int a : elements) s = set_insert(s, a);
  return s;
}

std::vector<int> set_elements(ElementSet s) {
  std::vector<int> out;
  for (int a = 0; a < 64; ++a)
    if (set_contains(s, a)) out.push_back(a);
  return out;
}

std::string set_string(ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (int a : set_elements(s)) {
    if (!first) out += ", ";
    out += std::to_string(a);
    first = false;
  }
  out += '}';
  return out;
}

bool is_subgyrogroup(const FiniteGyrogroup& g, ElementSet s) {
  require_desk_scale(g);
  require_member_range(g, s);
  if (s == 0) throw PreconditionError("the empty set is not a subgyrogroup");

  const auto elems = set_elements(s);
  for (int a : elems)
    if (!set_contains(s, g.neg(a))) return false;
  for (int a : elems)
    for (int b : elems)
      if (!set_contains(s, g.add(a, b))) return false;
  return true;
}

Subgyrogroup subgyrogroup(const FiniteGyrogroup& g, ElementSet s) {
  if (!is_subgyrogroup(g, s))
    throw PreconditionError("set " + set_string(s) +
                            " is not closed under + and -");
  return Subgyrogroup{&g, s};
}

ElementSet closure(const FiniteGyrogroup& g, ElementSet seed) {
  require_desk_scale(g);
  require_member_range(g, seed);
  ElementSet s = set_insert(seed, 0);
  for (;;) {
    ElementSet grown = s;
    const auto elems = set_elements(s);
    for (int a : elems) grown = set_insert(grown, g.neg(a));
    for (int a : elems)
      for (int b : elems) grown = set_insert(grown, g.add(a, b));
    if (grown == s) return s;
    s = grown;
  }
}

std::vector<Subgyrogroup> enumerate_subgyrogroups(const FiniteGyrogroup& g) {
  require_desk_scale(g);
  const int n = g.order();

  std::set<ElementSet> found;
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      found.insert(closure(g, set_of({a, b})));

  // Close the family under union-then-close until nothing new appears;
  // with the two-generator seeds this reaches every subgyrogroup.
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<ElementSet> snapshot(found.begin(), found.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i)
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        ElementSet u = closure(g, snapshot[i] | snapshot[j]);
        if (found.insert(u).second) grew = true;
      }
  }

  std::vector<Subgyrogroup> out;
  out.reserve(found.size());
  for (ElementSet s : found) out.push_back(Subgyrogroup{&g, s});
  std::sort(out.begin(), out.end(),
            [](const Subgyrogroup& x, const Subgyrogroup& y) {
              if (x.size() != y.size()) return x.size() < y.size();
              return x.members < y.members;
            });
  return out;
}

ElementSet gyr_image(const FiniteGyrogroup& g, int a, int b, ElementSet s) {
  require_desk_scale(g);
  require_member_range(g, s);
  const Permutation p = g.gyration(a, b);
  ElementSet out = 0;
  for (int x : set_elements(s)) out = set_insert(out, p(x));
  return out;
}

std::optional<LFailure> l_subgyrogroup_witness(const Subgyrogroup& h) {
  const FiniteGyrogroup& g = *h.parent;
  const auto members = set_elements(h.members);
  for (int a = 0; a < g.order(); ++a)
    for (int x : members) {
      ElementSet image = gyr_image(g, a, x, h.members);
      if (image != h.members) return LFailure{a, x, image};
    }
  return std::nullopt;
}

bool is_l_subgyrogroup(const Subgyrogroup& h) {
  return !l_subgyrogroup_witness(h).has_value();
}

bool sim_h(const Subgyrogroup& h, int a, int b) {
  const FiniteGyrogroup& g = *h.parent;
  const int na = g.neg(a);
  if (!set_contains(h.members, g.add(na, b))) return false;
  return gyr_image(g, na, b, h.members) == h.members;
}

ElementSet left_coset(const Subgyrogroup& h, int a) {
  const FiniteGyrogroup& g = *h.parent;
  ElementSet out = 0;
  for (int x : set_elements(h.members)) out = set_insert(out, g.add(a, x));
  return out;
}

namespace {

CosetDecomposition finish_decomposition(const Subgyrogroup& h,
                                        std::vector<ElementSet> classes) {
  std::sort(classes.begin(), classes.end(), [](ElementSet x, ElementSet y) {
    const int rx = set_elements(x).front();
    const int ry = set_elements(y).front();
    if (rx != ry) return rx < ry;
    return x < y;
  });

  CosetDecomposition d;
  d.subgroup = h;
  d.classes = std::move(classes);
  for (ElementSet c : d.classes)
    d.representatives.push_back(set_elements(c).front());

  ElementSet covered = 0;
  for (std::size_t i = 0; i < d.classes.size(); ++i) {
    for (std::size_t j = i + 1; j < d.classes.size(); ++j) {
      ElementSet common = d.classes[i] & d.classes[j];
      if (common)
        d.overlaps.push_back({static_cast<int>(i), static_cast<int>(j),
                              common});
    }
    covered |= d.classes[i];
  }
  d.is_partition =
      d.overlaps.empty() && covered == full_set(h.parent->order());
  return d;
}

}  // namespace

CosetDecomposition equivalence_classes(const Subgyrogroup& h) {
  const FiniteGyrogroup& g = *h.parent;
  const int n = g.order();

  std::vector<ElementSet> classes;
  ElementSet assigned = 0;
  for (int a = 0; a < n; ++a) {
    if (set_contains(assigned, a)) continue;
    ElementSet cls = 0;
    for (int b = 0; b < n; ++b)
      if (sim_h(h, a, b)) cls = set_insert(cls, b);
    classes.push_back(cls);
    assigned |= cls;
  }
  return finish_decomposition(h, std::move(classes));
}

CosetDecomposition cosets_partition(const Subgyrogroup& h) {
  const FiniteGyrogroup& g = *h.parent;
  const int n = g.order();

  std::vector<ElementSet> classes;
  for (int a = 0; a < n; ++a) {
    ElementSet c = left_coset(h, a);
    if (std::find(classes.begin(), classes.end(), c) == classes.end())
      classes.push_back(c);
  }
  return finish_decomposition(h, std::move(classes));
}

LagrangeResult lagrange_check(const Subgyrogroup& h) {
  if (!is_l_subgyrogroup(h))
    throw PreconditionError(
        "lagrange_check requires an L-subgyrogroup; " +
        set_string(h.members) + " is not one");

  const CosetDecomposition d = cosets_partition(h);
  if (!d.is_partition)
    throw InternalError(
        "cosets of an L-subgyrogroup failed to partition the carrier");

  LagrangeResult r;
  r.order = h.parent->order();
  r.subgroup = h.size();
  r.index = static_cast<int>(d.classes.size());
  r.divides = r.subgroup != 0 && r.order % r.subgroup == 0;
  r.product_ok = r.order == r.index * r.subgroup;
  return r;
}

MaterializedSubgroup as_gyrogroup(const Subgyrogroup& h) {
  const FiniteGyrogroup& g = *h.parent;
  if (!is_subgyrogroup(g, h.members))
    throw PreconditionError("as_gyrogroup: set is not a subgyrogroup");

  const std::vector<int> to_parent = set_elements(h.members);
  std::vector<int> from_parent(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < to_parent.size(); ++i)
    from_parent[static_cast<std::size_t>(to_parent[i])] =
        static_cast<int>(i);

  const int m = static_cast<int>(to_parent.size());
  CayleyTable t;
  t.order = m;
  t.entries.resize(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      t.at(i, j) = from_parent[static_cast<std::size_t>(
          g.add(to_parent[static_cast<std::size_t>(i)],
                to_parent[static_cast<std::size_t>(j)]))];

  return MaterializedSubgroup{FiniteGyrogroup::from_table(std::move(t)),
                              to_parent, std::move(from_parent)};
}

}  // namespace gyro
