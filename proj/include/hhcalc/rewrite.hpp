#pragma once

#include <cstddef>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "hhcalc/linalg.hpp"
#include "hhcalc/presentation.hpp"

namespace hhcalc {

/// Length first; equal lengths compare left to right in written order by
/// arrow precedence.
class PathOrder {
 public:
  PathOrder(const OrderPolicy& policy, std::size_t arrow_count);
  bool greater(const Path& a, const Path& b) const;
  /// Largest path of a nonzero element.
  Path leading(const AlgebraElement& e) const;

 private:
  std::vector<std::size_t> rank_;  // larger rank = higher precedence
};

/// leading -> rest; rest is parallel to leading.
struct Rule {
  Path leading;
  AlgebraElement rest;
};

struct Ambiguity {
  enum class Kind { overlap, inclusion };
  Kind kind;
  std::size_t first;   // rule index
  std::size_t second;  // rule index
  Path word;
  /// Written-order offset of the second rule's leading path inside `word`.
  std::size_t offset;
  AlgebraElement left;   // normal form via `first`
  AlgebraElement right;  // normal form via `second`
  bool resolved() const { return left == right; }
};

struct ConfluenceReport {
  bool confluent = true;
  std::vector<Ambiguity> ambiguities;
  std::size_t unresolved() const;
};

class ReductionSystem {
 public:
  /// Leading coefficients are normalized to 1. Under deglex the leading term of
  /// each relation is its order-largest path; under explicit order it is the
  /// designated one. Relations that reduce to zero against earlier rules are
  /// dropped, with a note in `warnings`.
  static ReductionSystem from_presentation(const BoundQuiverPresentation& pres,
                                           std::vector<std::string>* warnings = nullptr);

  const Quiver& quiver() const { return quiver_; }
  const Field& field() const { return field_; }
  const OrderPolicy& order() const { return order_; }
  const std::vector<Rule>& rules() const { return rules_; }

  /// Index of some rule whose leading path is a factor of p, with its offset.
  bool find_reducible(const Path& p, std::size_t& rule, std::size_t& offset) const;
  bool is_irreducible(const Path& p) const;

  /// Rewrites the largest reducible term at its leftmost match until none is
  /// left. Throws NonConfluentError when the rules do not terminate.
  AlgebraElement normal_form(const AlgebraElement& e) const;
  /// Same, but picks term, rule and position at random each step.
  AlgebraElement normal_form(const AlgebraElement& e, std::mt19937_64& rng) const;

  ConfluenceReport check_confluence(std::ostream* trace = nullptr) const;

  /// Buchberger-style completion. Explicit-order systems are never altered:
  /// they must already be confluent or NonConfluentError is thrown. Deglex
  /// systems gain rules until confluent; a new leading path longer than
  /// `length_bound` throws NonConfluentError.
  ReductionSystem complete(std::size_t length_bound, std::ostream* trace = nullptr) const;

 private:
  ReductionSystem(Quiver quiver, Field field, OrderPolicy order)
      : quiver_(std::move(quiver)), field_(field), order_(std::move(order)) {}
  AlgebraElement rewrite_once(const AlgebraElement& e, const Path& term, std::size_t rule,
                              std::size_t offset) const;
  /// Adds leading -> rest after normalizing; returns false if e was zero.
  bool add_relation(const AlgebraElement& e, const PathOrder& ord);
  void interreduce();

  Quiver quiver_;
  Field field_;
  OrderPolicy order_;
  std::vector<Rule> rules_;
};

/// The algebra spanned by irreducible paths with structure constants computed
/// by normal forms. Basis order: trivial paths by vertex, then by length.
class QuotientAlgebra {
 public:
  /// Completes the presentation's system first (bound: longest path length,
  /// or 64 for cyclic quivers). Throws InfiniteDimensionalError if irreducible
  /// paths of length > 64 exist.
  static QuotientAlgebra from_presentation(const BoundQuiverPresentation& pres);
  static QuotientAlgebra from_system(ReductionSystem sys);

  const ReductionSystem& system() const { return sys_; }
  const Quiver& quiver() const { return sys_.quiver(); }
  const Field& field() const { return sys_.field(); }

  std::size_t dim() const { return basis_.size(); }
  const std::vector<Path>& basis() const { return basis_; }
  const Path& basis_path(std::size_t i) const { return basis_.at(i); }
  /// Throws DomainError for reducible paths.
  std::size_t index_of(const Path& p) const;
  std::size_t idempotent(std::size_t vertex) const { return idempotents_.at(vertex); }
  bool is_radical(std::size_t i) const { return !basis_[i].is_trivial(); }
  std::vector<std::size_t> radical_basis() const;
  /// Basis indices of paths from `source` to `target`.
  const std::vector<std::size_t>& parallel(std::size_t source, std::size_t target) const;
  /// Number of basis paths of each length.
  std::vector<std::size_t> grading() const;

  /// b_i * b_j (b_j traversed first), in basis coordinates.
  const SparseVector& product(std::size_t i, std::size_t j) const;
  SparseVector multiply(const SparseVector& a, const SparseVector& b) const;
  SparseVector coordinates(const AlgebraElement& e) const;
  AlgebraElement element(const SparseVector& v) const;
  SparseVector unit() const;

  /// Diagnostics from building the reduction system.
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  explicit QuotientAlgebra(ReductionSystem sys) : sys_(std::move(sys)) {}
  std::vector<std::string> warnings_;

  ReductionSystem sys_;
  std::vector<Path> basis_;
  std::map<Path, std::size_t> index_;
  std::vector<std::size_t> idempotents_;
  std::vector<std::vector<std::size_t>> parallel_;  // source * n + target
  std::vector<SparseVector> table_;                 // i * dim + j
  SparseVector empty_;
};

}  // namespace hhcalc
