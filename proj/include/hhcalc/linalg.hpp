#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <vector>

#include "hhcalc/field.hpp"

namespace hhcalc {

/// A vector with finitely many nonzero coordinates; zeros are never stored.
class SparseVector {
 public:
  using Entries = std::map<std::size_t, Scalar>;

  Scalar get(std::size_t i, const Field& field) const;
  void add(std::size_t i, const Scalar& c);
  void set(std::size_t i, const Scalar& c);
  /// this += c * o
  void axpy(const Scalar& c, const SparseVector& o);
  void scale(const Scalar& c);

  bool is_zero() const { return entries_.empty(); }
  std::size_t nonzeros() const { return entries_.size(); }
  /// Smallest index with a nonzero entry; requires !is_zero().
  std::size_t leading() const { return entries_.begin()->first; }
  const Entries& entries() const { return entries_; }
  Entries::const_iterator begin() const { return entries_.begin(); }
  Entries::const_iterator end() const { return entries_.end(); }

  bool operator==(const SparseVector&) const = default;

 private:
  Entries entries_;
};

/// Column-major sparse matrix over one field.
class SparseMatrix {
 public:
  SparseMatrix(std::size_t rows, std::size_t cols, Field field);
  static SparseMatrix from_columns(std::size_t rows, Field field,
                                   std::vector<SparseVector> columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  const Field& field() const { return field_; }
  const SparseVector& column(std::size_t j) const { return columns_.at(j); }
  std::size_t nonzeros() const;

  void add(std::size_t r, std::size_t c, const Scalar& v);
  Scalar at(std::size_t r, std::size_t c) const;

  SparseMatrix transpose() const;
  SparseVector apply(const SparseVector& v) const;
  SparseMatrix operator*(const SparseMatrix& o) const;
  bool is_zero() const;

  /// One `row col value` line per nonzero, column-major, 0-based.
  void write_triplets(std::ostream& out) const;

 private:
  std::size_t rows_;
  Field field_;
  std::vector<SparseVector> columns_;
};

/// A subspace held in reduced row-echelon form: every basis vector has leading
/// coefficient 1 at its pivot and zeros at all other pivots. The form is
/// unique for the subspace.
class SubspaceBasis {
 public:
  SubspaceBasis(std::size_t ambient, Field field) : ambient_(ambient), field_(field) {}

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const Field& field() const { return field_; }
  /// Basis vectors ordered by pivot.
  std::vector<SparseVector> vectors() const;
  std::vector<std::size_t> pivots() const;

  /// Returns false (and changes nothing) when v already lies in the span.
  bool insert(const SparseVector& v);
  /// v minus its projection onto the span along the pivot coordinates.
  SparseVector reduce(const SparseVector& v) const;
  bool contains(const SparseVector& v) const { return reduce(v).is_zero(); }
  /// Coefficients of v in the basis (indexed like vectors()). Throws DomainError
  /// when v is outside the span.
  std::vector<Scalar> coordinates(const SparseVector& v) const;

 private:
  void check_ambient(const SparseVector& v) const;

  std::size_t ambient_;
  Field field_;
  std::map<std::size_t, SparseVector> rows_;  // pivot -> row
};

struct EchelonResult {
  std::size_t rank;
  SubspaceBasis row_space;
  /// {v : m·v = 0}, as a subspace of the column index space.
  SubspaceBasis kernel;
};

EchelonResult echelon(const SparseMatrix& m);
std::size_t rank(const SparseMatrix& m);

/// Canonical representative of v modulo `image`; zero iff v lies in it.
SparseVector quotient_coords(const SparseVector& v, const SubspaceBasis& image);

}  // namespace hhcalc
