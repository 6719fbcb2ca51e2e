#include "hhcalc/linalg.hpp"

namespace hhcalc {

Scalar SparseVector::get(std::size_t i, const Field& field) const {
  auto it = entries_.find(i);
  return it == entries_.end() ? field.zero() : it->second;
}

void SparseVector::add(std::size_t i, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace(i, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) entries_.erase(it);
}

void SparseVector::set(std::size_t i, const Scalar& c) {
  if (c.is_zero()) {
    entries_.erase(i);
  } else {
    entries_.insert_or_assign(i, c);
  }
}

void SparseVector::axpy(const Scalar& c, const SparseVector& o) {
  if (c.is_zero()) return;
  for (const auto& [i, x] : o.entries_) add(i, c * x);
}

void SparseVector::scale(const Scalar& c) {
  if (c.is_zero()) {
    entries_.clear();
    return;
  }
  for (auto& [i, x] : entries_) x *= c;
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), field_(field), columns_(cols) {}

SparseMatrix SparseMatrix::from_columns(std::size_t rows, Field field,
                                        std::vector<SparseVector> columns) {
  SparseMatrix m(rows, 0, field);
  for (const auto& c : columns) {
    if (!c.is_zero() && c.entries().rbegin()->first >= rows) {
      throw DomainError("column entry outside the row range");
    }
  }
  m.columns_ = std::move(columns);
  return m;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.nonzeros();
  return n;
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Scalar& v) {
  if (r >= rows_ || c >= columns_.size()) throw DomainError("matrix index out of range");
  columns_[c].add(r, v);
}

Scalar SparseMatrix::at(std::size_t r, std::size_t c) const {
  return columns_.at(c).get(r, field_);
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols(), rows_, field_);
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    for (const auto& [i, x] : columns_[j]) t.columns_[i].set(j, x);
  }
  return t;
}

SparseVector SparseMatrix::apply(const SparseVector& v) const {
  SparseVector out;
  for (const auto& [j, x] : v) {
    if (j >= columns_.size()) throw DomainError("vector length does not match matrix");
    out.axpy(x, columns_[j]);
  }
  return out;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
  if (cols() != o.rows_) throw DomainError("matrix shapes do not compose");
  SparseMatrix out(rows_, o.cols(), field_);
  for (std::size_t j = 0; j < o.cols(); ++j) out.columns_[j] = apply(o.columns_[j]);
  return out;
}

bool SparseMatrix::is_zero() const {
  for (const auto& c : columns_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

void SparseMatrix::write_triplets(std::ostream& out) const {
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    for (const auto& [i, x] : columns_[j]) out << i << ' ' << j << ' ' << x.to_string() << '\n';
  }
}

std::vector<SparseVector> SubspaceBasis::vectors() const {
  std::vector<SparseVector> out;
  out.reserve(rows_.size());
  for (const auto& [p, r] : rows_) out.push_back(r);
  return out;
}

std::vector<std::size_t> SubspaceBasis::pivots() const {
  std::vector<std::size_t> out;
  out.reserve(rows_.size());
  for (const auto& [p, r] : rows_) out.push_back(p);
  return out;
}

void SubspaceBasis::check_ambient(const SparseVector& v) const {
  if (!v.is_zero() && v.entries().rbegin()->first >= ambient_) {
    throw DomainError("vector outside the ambient space");
  }
}

SparseVector SubspaceBasis::reduce(const SparseVector& v) const {
  check_ambient(v);
  SparseVector out = v;
  // Rows are fully reduced, so one pass over the pivots suffices.
  for (const auto& [p, row] : rows_) {
    auto it = out.entries().find(p);
    if (it != out.entries().end()) out.axpy(-it->second, row);
  }
  return out;
}

bool SubspaceBasis::insert(const SparseVector& v) {
  SparseVector r = reduce(v);
  if (r.is_zero()) return false;
  const std::size_t p = r.leading();
  r.scale(r.get(p, field_).inverse());
  for (auto& [q, row] : rows_) {
    auto it = row.entries().find(p);
    if (it != row.entries().end()) row.axpy(-it->second, r);
  }
  rows_.emplace(p, std::move(r));
  return true;
}

std::vector<Scalar> SubspaceBasis::coordinates(const SparseVector& v) const {
  if (!contains(v)) throw DomainError("vector is not in the subspace");
  std::vector<Scalar> out;
  out.reserve(rows_.size());
  for (const auto& [p, row] : rows_) out.push_back(v.get(p, field_));
  return out;
}

EchelonResult echelon(const SparseMatrix& m) {
  const SparseMatrix t = m.transpose();
  SubspaceBasis rows(m.cols(), m.field());
  for (std::size_t i = 0; i < t.cols(); ++i) rows.insert(t.column(i));

  // Kernel vectors from free columns: e_f - sum over pivots p of row_p[f] e_p.
  SubspaceBasis kernel(m.cols(), m.field());
  const auto pivots = rows.pivots();
  const auto vecs = rows.vectors();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<SparseVector> kernel_vecs(m.cols());
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (!is_pivot[f]) kernel_vecs[f].set(f, m.field().one());
  }
  for (std::size_t k = 0; k < vecs.size(); ++k) {
    for (const auto& [j, x] : vecs[k]) {
      if (j != pivots[k]) kernel_vecs[j].set(pivots[k], -x);
    }
  }
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (!is_pivot[f]) kernel.insert(kernel_vecs[f]);
  }
  const std::size_t r = rows.dim();
  return {r, std::move(rows), std::move(kernel)};
}

std::size_t rank(const SparseMatrix& m) {
  const bool tall = m.rows() > m.cols();
  SubspaceBasis basis(tall ? m.rows() : m.cols(), m.field());
  if (tall) {
    for (std::size_t j = 0; j < m.cols(); ++j) basis.insert(m.column(j));
  } else {
    const SparseMatrix t = m.transpose();
    for (std::size_t i = 0; i < t.cols(); ++i) basis.insert(t.column(i));
  }
  return basis.dim();
}

SparseVector quotient_coords(const SparseVector& v, const SubspaceBasis& image) {
  return image.reduce(v);
}

}  // namespace hhcalc
