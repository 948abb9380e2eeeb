#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gyro/permutation.hpp"

namespace gyro {

/// Square addition table over elements 0..order-1; at(i, j) = i + j.
/// Entries are public so broken tables can be built for negative tests;
/// the constructor only enforces shape and entry range.
struct CayleyTable {
  int order = 0;
  std::vector<int> entries;  // row-major, order * order

  CayleyTable() = default;
  CayleyTable(int n, std::vector<int> e);

  int at(int i, int j) const {
    return entries[static_cast<std::size_t>(i) * order + j];
  }
  int& at(int i, int j) {
    return entries[static_cast<std::size_t>(i) * order + j];
  }

  friend bool operator==(const CayleyTable&, const CayleyTable&) = default;
};

enum class ParseErrorKind {
  kEmptyInput,
  kBadOrder,
  kNonIntegerToken,
  kWrongRowCount,
  kWrongColumnCount,
  kOutOfRange,
  kNoIdentity,
  kRowNotPermutation,
};

std::string_view to_string(ParseErrorKind k);

/// Rejection of a table file, with 1-based line/column of the offending
/// token where that makes sense (0 when it does not).
class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, int line, int column,
             const std::string& message);

  ParseErrorKind kind() const { return kind_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  ParseErrorKind kind_;
  int line_;
  int column_;
};

/// Parsed table plus the relabeling that moved the identity to index 0,
/// when the file used a different label for it.
struct LoadedTable {
  CayleyTable table;
  std::optional<Permutation> relabeling;
};

/// Text format: first significant line is the order n, the next n lines are
/// the table rows (n integers each). '#' starts a comment; blank lines are
/// ignored.
///
/// parse_table checks shape and entry range only, so structurally broken
/// tables can still be fed to verify_axioms for a diagnostic report.
CayleyTable parse_table(std::string_view text);

/// parse_table plus format strictness: every row must be a permutation and
/// the table must have a two-sided identity, which is relabeled to 0 when
/// the file puts it elsewhere.
LoadedTable load_table(std::string_view text);

std::string save_table(const CayleyTable& t);

/// Table conjugated through phi : new labels -> old labels,
/// new(i, j) = phi_inv(old(phi(i), phi(j))).
CayleyTable transport_table(const CayleyTable& t, const Permutation& phi);

enum class Axiom {
  kRange,         // entries within 0..n-1
  kRowBijective,  // every left translation a permutation
  kG1,            // left identity
  kG2,            // left inverses
  kG3Auto,        // gyrations are automorphisms
  kG3Assoc,       // left gyroassociative law
  kG4,            // left loop property
  kInternal,      // derived right-hand counterparts, reported as diagnostics
};

std::string_view to_string(Axiom a);

struct AxiomViolation {
  Axiom axiom;
  std::vector<int> witness;
  std::string detail;
};

struct AxiomReport {
  bool passed = false;
  std::vector<AxiomViolation> violations;
};

/// Exhaustive axiom check. Label-agnostic: the identity is searched for, so
/// relabeled tables verify identically. At most 8 witnesses are recorded per
/// axiom; `passed` is true exactly when there is no violation at all.
AxiomReport verify_axioms(const CayleyTable& t);

/// Thrown by FiniteGyrogroup::from_table when verification fails.
class NotAGyrogroup : public std::runtime_error {
 public:
  explicit NotAGyrogroup(AxiomReport report);
  const AxiomReport& report() const { return report_; }

 private:
  AxiomReport report_;
};

/// A verified finite gyrogroup with identity 0. Immutable after
/// construction; all accessors are safe for concurrent reads.
class FiniteGyrogroup {
 public:
  using element_type = int;

  /// Verifies the axioms and requires the identity at index 0; throws
  /// NotAGyrogroup or std::invalid_argument accordingly.
  static FiniteGyrogroup from_table(CayleyTable t);

  int order() const { return table_.order; }
  int identity() const { return 0; }
  int add(int a, int b) const { return table_.at(a, b); }
  int neg(int a) const { return neg_[static_cast<std::size_t>(a)]; }
  bool eq(int a, int b) const { return a == b; }

  const CayleyTable& table() const { return table_; }

  /// gyr[a, b] as a permutation (cached for order <= 64).
  Permutation gyration(int a, int b) const;

  Permutation left_translation(int a) const;

  /// x -> x + a; bijective on any finite gyrogroup carrier.
  Permutation right_translation(int a) const;

 private:
  explicit FiniteGyrogroup(CayleyTable t);

  CayleyTable table_;
  std::vector<int> neg_;
  std::vector<Permutation> gyr_;  // row-major cache, empty above order 64
};

/// All n*n gyrations, row-major.
std::vector<Permutation> gyration_table(const FiniteGyrogroup& g);

bool is_automorphism(const FiniteGyrogroup& g, const Permutation& p);

/// First pair with a + b != gyr[a,b](b + a), if any (exhaustive).
std::optional<std::pair<int, int>> gyrocommutativity_witness(
    const FiniteGyrogroup& g);

bool is_gyrocommutative(const FiniteGyrogroup& g);

/// A 16-element gyrogroup whose gyrations are the identity and one
/// involutive automorphism. Not a group and not gyrocommutative; the
/// worked example used throughout the test suites.
const FiniteGyrogroup& k16();

}  // namespace gyro
