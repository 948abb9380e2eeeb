#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gyro/structure.hpp"

namespace gyro {

/// Map between two finite gyrogroups with f(a + b) = f(a) + f(b).
/// Non-owning: both carriers must outlive the homomorphism.
struct GyroHomomorphism {
  const FiniteGyrogroup* source = nullptr;
  const FiniteGyrogroup* target = nullptr;
  std::vector<int> map;

  int operator()(int a) const { return map[static_cast<std::size_t>(a)]; }
};

/// First (a, b) with f(a + b) != f(a) + f(b), if any.
std::optional<std::pair<int, int>> homomorphism_violation(
    const FiniteGyrogroup& source, const FiniteGyrogroup& target,
    const std::vector<int>& map);

/// Validates additivity (PreconditionError with a witness pair otherwise),
/// then asserts the derived preservation laws: identity, negation,
/// gyrations and coaddition all map through f. Their failure would
/// contradict a theorem, so it raises InternalError.
GyroHomomorphism make_homomorphism(const FiniteGyrogroup& source,
                                   const FiniteGyrogroup& target,
                                   std::vector<int> map);

/// Preimage of the target identity; always an L-subgyrogroup of the source
/// (asserted, InternalError on failure).
Subgyrogroup kernel(const GyroHomomorphism& f);

/// f(G) as a subgyrogroup of the target (closure asserted).
Subgyrogroup image(const GyroHomomorphism& f);

enum class NormalityStage {
  kLSubgyrogroup,    // N is an L-subgyrogroup
  kWellDefined,      // coset addition is representative-independent
  kQuotientAxioms,   // the coset table verifies as a gyrogroup
  kProjectionKernel, // a -> a + N is a homomorphism with kernel N
  kNormal,
};

std::string_view to_string(NormalityStage s);

struct NormalityReport {
  bool normal = false;
  NormalityStage stage = NormalityStage::kNormal;  // first failing stage
  std::string detail;                              // witness description
};

/// Operational normality test: N is normal iff the canonical projection
/// onto its cosets is a homomorphism with kernel N. The four stages run in
/// order and the first failure is reported.
NormalityReport check_normal(const FiniteGyrogroup& g, ElementSet n);

bool is_normal(const FiniteGyrogroup& g, ElementSet n);

/// G/N for a normal N. Quotient element i is the coset classes[i], sorted
/// by minimal representative, so the kernel coset is element 0.
struct QuotientGyrogroup {
  FiniteGyrogroup group;
  const FiniteGyrogroup* parent = nullptr;
  Subgyrogroup kernel_sub;
  CosetDecomposition cosets;
  std::vector<int> coset_index;  // parent element -> quotient element

  /// The canonical projection a -> [a]. Valid while this object is alive.
  GyroHomomorphism projection() const;
};

/// Throws PreconditionError (with the failing stage) when N is not normal.
/// Postcondition, asserted: gyr[[a], [b]][c] = [gyr[a, b]c] for all a, b, c.
QuotientGyrogroup quotient(const FiniteGyrogroup& g, ElementSet n);

/// How an isomorphism claim was certified: by the theorem's explicit
/// witness map, or by backtracking search.
enum class IsoPath { kExplicitMap, kSearch };

struct FirstIsoResult {
  QuotientGyrogroup quotient_group;   // G / ker f
  MaterializedSubgroup image_group;   // f(G)
  std::vector<int> iso;               // quotient element -> image element
};

/// G / ker f is isomorphic to f(G) via [a] -> f(a). The induced map is
/// checked to be well defined, bijective and additive; any failure raises
/// InternalError.
FirstIsoResult first_iso_check(const GyroHomomorphism& f);

/// {a + b : a in A, b in B} for a subgyrogroup A and normal B: again a
/// subgyrogroup. Closure and B + a = a + B are asserted.
ElementSet oplus_set(const FiniteGyrogroup& g, ElementSet a, ElementSet b);

struct SecondIsoResult {
  bool ok = false;
  IsoPath path = IsoPath::kExplicitMap;
  ElementSet ab;                 // A + B
  ElementSet intersection;       // A and B
  std::vector<int> iso;          // (A+B)/B element -> A/(A and B) element
};

/// (A + B) / B is isomorphic to A / (A and B), for A a subgyrogroup and B
/// normal in G. Preconditions raise PreconditionError; the witness map
/// a + B -> a + (A and B) is tried first and a search is the fallback.
SecondIsoResult second_iso_check(const FiniteGyrogroup& g, ElementSet a,
                                 ElementSet b);

struct ThirdIsoResult {
  bool ok = false;
  IsoPath path = IsoPath::kExplicitMap;
  std::vector<int> iso;  // (G/H)/(K/H) element -> G/K element
};

/// (G/H) / (K/H) is isomorphic to G/K for normal H within normal K.
ThirdIsoResult third_iso_check(const FiniteGyrogroup& g, ElementSet h,
                               ElementSet k);

struct LatticeCorrespondence {
  bool ok = false;
  /// (K, K/N) for every subgyrogroup K of G containing the normal N;
  /// second components are subgyrogroups of G/N by quotient element index.
  std::vector<std::pair<ElementSet, ElementSet>> pairs;
  bool bijective = false;
  bool inclusion_preserved = false;
  bool l_property_preserved = false;
  bool normality_preserved = false;
};

/// The subgyrogroups of G containing a normal N correspond bijectively to
/// the subgyrogroups of G/N, preserving inclusion, the L-property and
/// normality.
LatticeCorrespondence lattice_check(const FiniteGyrogroup& g, ElementSet n);

/// Backtracking search for a bijective homomorphism; fixes 0 -> 0 and
/// propagates products, so the identity map is found first when G1 = G2.
std::optional<std::vector<int>> find_isomorphism(const FiniteGyrogroup& g1,
                                                 const FiniteGyrogroup& g2);

/// Every homomorphism G -> H in deterministic order. Exhaustive search
/// with closure pruning; requires |G| * |H| <= 256 (CapabilityError).
std::vector<std::vector<int>> enumerate_homomorphisms(
    const FiniteGyrogroup& g, const FiniteGyrogroup& h);

}  // namespace gyro
