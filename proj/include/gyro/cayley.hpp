#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gyro/finite.hpp"

namespace gyro {

/// An element of Sym(G) in left-translation form: the permutation
/// L_a * rho where rho fixes 0. The factorization is unique, so (a, rho)
/// is a faithful representation of the permutation.
struct SymElement {
  int a = 0;
  Permutation rho;

  friend bool operator==(const SymElement&, const SymElement&) = default;
};

/// Unique factorization sigma = L_a * rho with rho(0) = 0:
/// a = sigma(0) and rho = L_{-a} * sigma.
SymElement factorize(const FiniteGyrogroup& g, const Permutation& sigma);

/// L_a * rho back as a plain permutation.
Permutation materialize(const FiniteGyrogroup& g, const SymElement& s);

SymElement sym_identity(const FiniteGyrogroup& g);

/// (L_a * gamma) + (L_b * delta) = L_{a + b} * (gamma * delta). Extends G:
/// the embedding a -> L_a is additive. Distinct from composition of the
/// underlying permutations, which picks up a gyration (composition law).
SymElement sym_add(const FiniteGyrogroup& g, const SymElement& x,
                   const SymElement& y);

/// -(L_a * gamma) = L_{-a} * gamma^{-1}, the inverse under sym_add
/// (not the inverse permutation unless gamma is an automorphism).
SymElement sym_neg(const FiniteGyrogroup& g, const SymElement& x);

/// Closed form of the Sym(G) gyration: element part gyr[a, b]c, where
/// a, b, c are the element parts of x, y, z.
SymElement sym_gyr(const FiniteGyrogroup& g, const SymElement& x,
                   const SymElement& y, const SymElement& z);

/// a -> L_a, the embedding of G into Sym(G).
SymElement embed(const FiniteGyrogroup& g, int a);

/// Carrier adaptor so the generic operations run on Sym(G).
class SymCarrier {
 public:
  using element_type = SymElement;

  explicit SymCarrier(const FiniteGyrogroup& g) : g_(&g) {}

  SymElement identity() const { return sym_identity(*g_); }
  SymElement add(const SymElement& x, const SymElement& y) const {
    return sym_add(*g_, x, y);
  }
  SymElement neg(const SymElement& x) const { return sym_neg(*g_, x); }
  bool eq(const SymElement& x, const SymElement& y) const { return x == y; }

  const FiniteGyrogroup& base() const { return *g_; }

 private:
  const FiniteGyrogroup* g_;
};

/// L_a * L_b = L_{a + b} * gyr[a, b] for all a, b (exhaustive).
bool composition_law_check(const FiniteGyrogroup& g);

/// rho * L_a = L_{rho(a)} * rho for every a, for an automorphism rho
/// (PreconditionError when rho is not an automorphism).
bool commutation_check(const FiniteGyrogroup& g, const Permutation& rho);

enum class SymVerifyMode { kExhaustive, kSampled };

struct SymVerifyReport {
  AxiomReport axioms;
  SymVerifyMode mode = SymVerifyMode::kExhaustive;
  std::size_t element_count = 0;  // |Sym(G)| when exhaustive
  int samples = 0;
  std::optional<std::uint64_t> seed;
};

/// Largest carrier whose full Sym(G) is still verified exhaustively.
inline constexpr int kSymExhaustiveMaxOrder = 4;

/// Checks the gyrogroup axioms on all of Sym(G) under sym_add. Factorial
/// growth: requires order <= kSymExhaustiveMaxOrder (CapabilityError above).
SymVerifyReport verify_sym_exhaustive(const FiniteGyrogroup& g);

/// Axiom spot-check on seeded random triples of Sym(G) elements.
SymVerifyReport verify_sym_sampled(const FiniteGyrogroup& g, int samples,
                                   std::uint64_t seed);

}  // namespace gyro
