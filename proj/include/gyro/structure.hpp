#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "gyro/finite.hpp"

namespace gyro {

/// Subset of a carrier of order <= 64, one bit per element.
using ElementSet = std::uint64_t;

constexpr bool set_contains(ElementSet s, int a) {
  return (s >> a) & UINT64_C(1);
}
constexpr ElementSet set_insert(ElementSet s, int a) {
  return s | (UINT64_C(1) << a);
}
constexpr int set_size(ElementSet s) { return std::popcount(s); }
constexpr ElementSet full_set(int n) {
  return n >= 64 ? ~UINT64_C(0) : (UINT64_C(1) << n) - 1;
}

ElementSet set_of(std::initializer_list<int> elements);
ElementSet set_of(const std::vector<int>& elements);
std::vector<int> set_elements(ElementSet s);

/// "{0, 8}" with elements ascending.
std::string set_string(ElementSet s);

/// A subset verified to be closed under + and - in its parent.
struct Subgyrogroup {
  const FiniteGyrogroup* parent = nullptr;
  ElementSet members = 0;

  int size() const { return set_size(members); }
  friend bool operator==(const Subgyrogroup&, const Subgyrogroup&) = default;
};

/// Nonempty and closed under negation and addition. Throws
/// PreconditionError on an empty set, CapabilityError above order 64.
bool is_subgyrogroup(const FiniteGyrogroup& g, ElementSet s);

/// Validating constructor; throws PreconditionError when `s` is not closed.
Subgyrogroup subgyrogroup(const FiniteGyrogroup& g, ElementSet s);

/// Smallest subgyrogroup containing `seed`.
ElementSet closure(const FiniteGyrogroup& g, ElementSet seed);

/// Every subgyrogroup, sorted by (size, members). Complete: seeds all
/// one- and two-generator closures and then closes the family under the
/// union-then-close operation until a fixpoint.
std::vector<Subgyrogroup> enumerate_subgyrogroups(const FiniteGyrogroup& g);

/// Image of s under gyr[a, b].
ElementSet gyr_image(const FiniteGyrogroup& g, int a, int b, ElementSet s);

struct LFailure {
  int a;
  int h;
  ElementSet image;  // gyr[a, h](H), differs from H
};

/// First (a, h) with gyr[a, h](H) != H, scanning a then h ascending.
std::optional<LFailure> l_subgyrogroup_witness(const Subgyrogroup& h);

/// H is an L-subgyrogroup: gyr[a, h](H) = H for every a in G, h in H.
bool is_l_subgyrogroup(const Subgyrogroup& h);

/// a ~ b iff -a + b lies in H and gyr[-a, b](H) = H.
bool sim_h(const Subgyrogroup& h, int a, int b);

/// a + H.
ElementSet left_coset(const Subgyrogroup& h, int a);

struct CosetDecomposition {
  Subgyrogroup subgroup;
  std::vector<ElementSet> classes;   // ordered by (representative, members)
  std::vector<int> representatives;  // minimal element of each class
  bool is_partition = false;

  struct Overlap {
    int first;   // indices into classes
    int second;
    ElementSet common;
  };
  std::vector<Overlap> overlaps;  // empty exactly when is_partition
};

/// Classes of the ~ relation above. For an L-subgyrogroup these coincide
/// with the left cosets; in general each class is contained in one.
CosetDecomposition equivalence_classes(const Subgyrogroup& h);

/// The distinct left cosets a + H. These need not partition the carrier
/// when H is not an L-subgyrogroup; coverage and overlaps are reported,
/// never assumed.
CosetDecomposition cosets_partition(const Subgyrogroup& h);

struct LagrangeResult {
  int order;        // |G|
  int subgroup;     // |H|
  int index;        // number of left cosets
  bool divides;     // |H| divides |G|
  bool product_ok;  // |G| == index * |H|
};

/// Requires an L-subgyrogroup (PreconditionError otherwise): its cosets
/// partition the carrier, so |G| = index * |H|.
LagrangeResult lagrange_check(const Subgyrogroup& h);

/// A subgyrogroup materialized as a gyrogroup in its own right, with the
/// index maps between the two labelings. Element i corresponds to parent
/// element to_parent[i]; to_parent is ascending, so 0 maps to 0.
struct MaterializedSubgroup {
  FiniteGyrogroup group;
  std::vector<int> to_parent;
  std::vector<int> from_parent;  // -1 for parent elements outside H
};

MaterializedSubgroup as_gyrogroup(const Subgyrogroup& h);

}  // namespace gyro
