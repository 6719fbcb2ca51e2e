#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "hhcalc/linalg.hpp"
#include "hhcalc/rewrite.hpp"

namespace hhcalc {

/// Cohomology of a finite cochain complex C^0 -> ... -> C^top, in degrees
/// 0..nmax (nmax < top, or nmax = top when the complex ends there).
class Cohomology {
 public:
  Cohomology(const std::vector<std::size_t>& term_dims, const std::vector<SparseMatrix>& d,
             std::size_t nmax, Field field);

  std::size_t max_degree() const { return dims_.size() - 1; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t dim(std::size_t n) const { return dims_.at(n); }
  std::size_t rank(std::size_t n) const { return ranks_.at(n); }

  /// Canonical basis of H^n: cocycles reduced modulo coboundaries, in RREF.
  std::vector<SparseVector> classes(std::size_t n) const { return classes_.at(n).vectors(); }
  /// Coordinates of the class of z. Throws DomainError unless z is a cocycle.
  std::vector<Scalar> coordinates(std::size_t n, const SparseVector& z) const;
  bool is_coboundary(std::size_t n, const SparseVector& z) const;

 private:
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> ranks_;  // rank of d^n
  std::vector<SubspaceBasis> images_;
  std::vector<SubspaceBasis> classes_;
};

/// Cochains relative to E = span of the vertex idempotents, on the radical:
/// C^n has basis (x_1, ..., x_n ; b) with x_i radical basis paths,
/// source(x_i) = target(x_{i+1}), and b a basis path parallel to x_1...x_n.
/// C^0 has basis (v ; b) with b a basis loop at v.
class BarComplex {
 public:
  struct Tuple {
    std::vector<std::size_t> elems;  // basis indices, empty in degree 0
    std::size_t source;
    std::size_t target;
  };

  /// Builds C^0 .. C^{nmax+1} and d^0 .. d^nmax.
  BarComplex(std::shared_ptr<const QuotientAlgebra> algebra, std::size_t nmax);

  const QuotientAlgebra& algebra() const { return *algebra_; }
  const std::shared_ptr<const QuotientAlgebra>& algebra_ptr() const { return algebra_; }
  std::size_t top() const { return tuples_.size() - 1; }
  std::size_t dim(std::size_t n) const { return offsets_.at(n).back(); }
  std::vector<std::size_t> term_dims() const;
  const std::vector<Tuple>& tuples(std::size_t n) const { return tuples_.at(n); }
  const SparseMatrix& differential(std::size_t n) const { return d_.at(n); }
  const std::vector<SparseMatrix>& differentials() const { return d_; }
  /// Replaces d^n; used by fault-injection fixtures.
  void set_differential(std::size_t n, SparseMatrix m) { d_.at(n) = std::move(m); }

  /// Index of the cochain (t ; b) in C^n.
  std::size_t cochain_index(std::size_t n, std::size_t tuple, std::size_t basis) const;
  std::optional<std::size_t> find_tuple(std::size_t n, const std::vector<std::size_t>& elems,
                                        std::size_t vertex = 0) const;

  /// f(t) as an element of A.
  SparseVector evaluate(std::size_t n, const SparseVector& f, std::size_t tuple) const;
  SparseVector apply_differential(std::size_t n, const SparseVector& f) const;

  /// (f ∪ g)(x_1..x_{p+q}) = f(x_1..x_p) g(x_{p+1}..x_{p+q}).
  SparseVector cup(std::size_t p, const SparseVector& f, std::size_t q,
                   const SparseVector& g) const;
  /// f ∘ g = Σ_i (-1)^{i(q-1)} f(x_1..x_i, g(x_{i+1}..x_{i+q}), ..), inner values
  /// projected to the radical. Lands in degree p+q-1.
  SparseVector circle(std::size_t p, const SparseVector& f, std::size_t q,
                      const SparseVector& g) const;
  /// [f,g] = f∘g - (-1)^{(p-1)(q-1)} g∘f.
  SparseVector bracket(std::size_t p, const SparseVector& f, std::size_t q,
                       const SparseVector& g) const;

 private:
  std::size_t vertex_before(std::size_t n, std::size_t tuple, std::size_t i) const;

  std::shared_ptr<const QuotientAlgebra> algebra_;
  std::vector<std::vector<Tuple>> tuples_;
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> tuple_index_;
  std::vector<std::vector<std::size_t>> offsets_;  // per degree, size tuples+1
  std::vector<std::size_t> parallel_pos_;          // basis index -> slot in its parallel list
  std::vector<SparseMatrix> d_;
};

/// The three-term complex Q0‖Q0 -> Q1‖Q1 -> L2‖N2 for quadratic systems on
/// quivers without paths of length 3. Terms are spanned by pairs (cell ; b),
/// b a basis path parallel to the cell (vertex, arrow, or leading path).
class SmallComplex {
 public:
  static bool applicable(const QuotientAlgebra& a);
  /// Throws DomainError when not applicable.
  explicit SmallComplex(std::shared_ptr<const QuotientAlgebra> algebra);

  std::vector<std::size_t> term_dims() const { return dims_; }
  const SparseMatrix& differential(std::size_t n) const { return d_.at(n); }
  const std::vector<SparseMatrix>& differentials() const { return d_; }
  /// Offset of the pairs (rule r ; *) inside term 2.
  std::size_t relation_offset(std::size_t rule) const { return rel_offsets_.at(rule); }

 private:
  std::shared_ptr<const QuotientAlgebra> algebra_;
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> rel_offsets_;
  std::vector<SparseMatrix> d_;
};

struct CohomologyClass {
  std::size_t degree;
  SparseVector representative;
  std::vector<Scalar> coordinates;
};

/// HH^n(A,A) for n <= nmax on bar representatives, with products.
class Hochschild {
 public:
  Hochschild(std::shared_ptr<const QuotientAlgebra> algebra, std::size_t nmax);

  const QuotientAlgebra& algebra() const { return bar_.algebra(); }
  const BarComplex& bar() const { return bar_; }
  const Cohomology& cohomology() const { return coh_; }
  std::size_t nmax() const { return coh_.max_degree(); }

  std::vector<CohomologyClass> classes(std::size_t n) const;
  CohomologyClass class_of(std::size_t n, const SparseVector& cocycle) const;
  CohomologyClass cup(const CohomologyClass& a, const CohomologyClass& b) const;
  CohomologyClass bracket(const CohomologyClass& a, const CohomologyClass& b) const;

  /// Dimension of the span of all cups HH^p x HH^q -> HH^{p+q}.
  std::size_t cup_rank(std::size_t p = 1, std::size_t q = 1) const;
  /// Dimension of the span of all brackets HH^p x HH^q -> HH^{p+q-1}.
  std::size_t bracket_rank(std::size_t p = 1, std::size_t q = 1) const;

  /// Perturbs one bar differential so that d∘d ≠ 0. Negative-control fixture;
  /// returns false when the complex has no room for such a fault.
  bool inject_fault();

 private:
  BarComplex bar_;
  Cohomology coh_;
};

struct HHReport {
  std::vector<std::size_t> bar_dims;  // C^0 .. C^{nmax+1}
  std::vector<std::size_t> hh;        // h^0 .. h^nmax
  std::optional<std::vector<std::size_t>> small_dims;
  std::optional<std::vector<std::size_t>> small_hh;
  std::optional<long long> small_euler;
  long long euler_terms = 0;  // alternating sum over the complex used
  long long euler_hh = 0;
  bool euler_ok = false;
  bool d_squared_zero = false;
  bool complexes_agree = true;  // vacuous without a small complex
};

/// d^{n+1} d^n = 0 for every consecutive pair.
bool differentials_square_to_zero(const std::vector<SparseMatrix>& d);

/// Throws ConsistencyError when the small and bar complexes disagree, when
/// d∘d ≠ 0, or when the Euler identity fails.
HHReport hh_report(const Hochschild& hh);
HHReport hh_report(const BoundQuiverPresentation& pres, std::size_t nmax = 3);

}  // namespace hhcalc
