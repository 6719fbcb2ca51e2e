#include "hhcalc/hochschild.hpp"

#include <algorithm>

namespace hhcalc {

namespace {

Scalar sign(const Field& f, long long e) { return (e % 2 == 0) ? f.one() : -f.one(); }

std::string dims_text(const std::vector<std::size_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

}  // namespace

Cohomology::Cohomology(const std::vector<std::size_t>& term_dims,
                       const std::vector<SparseMatrix>& d, std::size_t nmax, Field field) {
  if (term_dims.empty() || d.size() + 1 != term_dims.size() || nmax >= term_dims.size()) {
    throw DomainError("cohomology degree range does not fit the complex");
  }
  for (std::size_t n = 0; n <= nmax; ++n) {
    SubspaceBasis image(term_dims[n], field);
    if (n > 0) {
      for (std::size_t j = 0; j < d[n - 1].cols(); ++j) image.insert(d[n - 1].column(j));
    }
    SubspaceBasis cls(term_dims[n], field);
    std::size_t rank_n = 0;
    if (n < d.size()) {
      EchelonResult e = echelon(d[n]);
      rank_n = e.rank;
      for (const auto& k : e.kernel.vectors()) cls.insert(image.reduce(k));
    } else {
      for (std::size_t i = 0; i < term_dims[n]; ++i) {
        SparseVector v;
        v.set(i, field.one());
        cls.insert(image.reduce(v));
      }
    }
    if (cls.dim() + image.dim() + rank_n != term_dims[n]) {
      throw ConsistencyError("rank-nullity failed in degree " + std::to_string(n));
    }
    dims_.push_back(cls.dim());
    ranks_.push_back(rank_n);
    images_.push_back(std::move(image));
    classes_.push_back(std::move(cls));
  }
}

std::vector<Scalar> Cohomology::coordinates(std::size_t n, const SparseVector& z) const {
  return classes_.at(n).coordinates(images_.at(n).reduce(z));
}

bool Cohomology::is_coboundary(std::size_t n, const SparseVector& z) const {
  return images_.at(n).contains(z);
}

BarComplex::BarComplex(std::shared_ptr<const QuotientAlgebra> algebra, std::size_t nmax)
    : algebra_(std::move(algebra)) {
  const QuotientAlgebra& a = *algebra_;
  const Quiver& q = a.quiver();
  const std::size_t nv = q.vertex_count();
  const Field& field = a.field();

  parallel_pos_.assign(a.dim(), 0);
  for (std::size_t s = 0; s < nv; ++s) {
    for (std::size_t t = 0; t < nv; ++t) {
      const auto& par = a.parallel(s, t);
      for (std::size_t k = 0; k < par.size(); ++k) parallel_pos_[par[k]] = k;
    }
  }
  std::vector<std::vector<std::size_t>> rad_by_target(nv);
  for (std::size_t x : a.radical_basis()) rad_by_target[a.basis_path(x).target()].push_back(x);

  tuples_.resize(nmax + 2);
  tuple_index_.resize(nmax + 2);
  for (std::size_t v = 0; v < nv; ++v) tuples_[0].push_back({{}, v, v});
  for (std::size_t n = 1; n <= nmax + 1; ++n) {
    for (const Tuple& t : tuples_[n - 1]) {
      for (std::size_t x : rad_by_target[t.source]) {
        Tuple u{t.elems, a.basis_path(x).source(), t.target};
        u.elems.push_back(x);
        tuple_index_[n].emplace(u.elems, tuples_[n].size());
        tuples_[n].push_back(std::move(u));
      }
    }
  }
  offsets_.resize(nmax + 2);
  for (std::size_t n = 0; n <= nmax + 1; ++n) {
    offsets_[n].push_back(0);
    for (const Tuple& t : tuples_[n]) {
      offsets_[n].push_back(offsets_[n].back() + a.parallel(t.source, t.target).size());
    }
  }

  for (std::size_t n = 0; n <= nmax; ++n) {
    SparseMatrix m(dim(n + 1), dim(n), field);
    for (std::size_t ti = 0; ti < tuples_[n + 1].size(); ++ti) {
      const Tuple& big = tuples_[n + 1][ti];
      const auto& x = big.elems;
      const std::size_t row0 = offsets_[n + 1][ti];
      // x_1 · f(x_2, ..., x_{n+1})
      {
        std::vector<std::size_t> tail(x.begin() + 1, x.end());
        const std::size_t t = *find_tuple(n, tail, a.basis_path(x[0]).source());
        const Tuple& small = tuples_[n][t];
        for (std::size_t b : a.parallel(small.source, small.target)) {
          const std::size_t col = cochain_index(n, t, b);
          for (const auto& [r, c] : a.product(x[0], b)) m.add(row0 + parallel_pos_[r], col, c);
        }
      }
      // Σ (-1)^i f(..., x_i x_{i+1}, ...)
      for (std::size_t i = 1; i <= n; ++i) {
        for (const auto& [r, c] : a.product(x[i - 1], x[i])) {
          std::vector<std::size_t> merged(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(i - 1));
          merged.push_back(r);
          merged.insert(merged.end(), x.begin() + static_cast<std::ptrdiff_t>(i + 1), x.end());
          const std::size_t t = *find_tuple(n, merged);
          const Scalar s = sign(field, static_cast<long long>(i)) * c;
          for (std::size_t b : a.parallel(big.source, big.target)) {
            m.add(row0 + parallel_pos_[b], cochain_index(n, t, b), s);
          }
        }
      }
      // (-1)^{n+1} f(x_1, ..., x_n) · x_{n+1}
      {
        std::vector<std::size_t> head(x.begin(), x.end() - 1);
        const std::size_t t = *find_tuple(n, head, a.basis_path(x[0]).target());
        const Tuple& small = tuples_[n][t];
        const Scalar s = sign(field, static_cast<long long>(n + 1));
        for (std::size_t b : a.parallel(small.source, small.target)) {
          const std::size_t col = cochain_index(n, t, b);
          for (const auto& [r, c] : a.product(b, x[n])) m.add(row0 + parallel_pos_[r], col, s * c);
        }
      }
    }
    d_.push_back(std::move(m));
  }
}

std::vector<std::size_t> BarComplex::term_dims() const {
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n < offsets_.size(); ++n) out.push_back(dim(n));
  return out;
}

std::size_t BarComplex::cochain_index(std::size_t n, std::size_t tuple, std::size_t basis) const {
  return offsets_.at(n).at(tuple) + parallel_pos_.at(basis);
}

std::optional<std::size_t> BarComplex::find_tuple(std::size_t n,
                                                  const std::vector<std::size_t>& elems,
                                                  std::size_t vertex) const {
  if (n == 0) {
    if (vertex >= tuples_[0].size()) return std::nullopt;
    return vertex;
  }
  if (n >= tuple_index_.size()) return std::nullopt;
  auto it = tuple_index_[n].find(elems);
  if (it == tuple_index_[n].end()) return std::nullopt;
  return it->second;
}

SparseVector BarComplex::evaluate(std::size_t n, const SparseVector& f, std::size_t tuple) const {
  const Tuple& t = tuples_.at(n).at(tuple);
  const auto& par = algebra_->parallel(t.source, t.target);
  const std::size_t lo = offsets_[n][tuple];
  const std::size_t hi = offsets_[n][tuple + 1];
  SparseVector out;
  for (auto it = f.entries().lower_bound(lo); it != f.entries().end() && it->first < hi; ++it) {
    out.set(par[it->first - lo], it->second);
  }
  return out;
}

SparseVector BarComplex::apply_differential(std::size_t n, const SparseVector& f) const {
  return d_.at(n).apply(f);
}

std::size_t BarComplex::vertex_before(std::size_t n, std::size_t tuple, std::size_t i) const {
  const Tuple& t = tuples_[n][tuple];
  if (n == 0) return t.source;
  if (i < n) return algebra_->basis_path(t.elems[i]).target();
  return t.source;
}

SparseVector BarComplex::cup(std::size_t p, const SparseVector& f, std::size_t q,
                             const SparseVector& g) const {
  const std::size_t m = p + q;
  if (m > top()) throw DomainError("cup product beyond the computed degree");
  SparseVector out;
  for (std::size_t ti = 0; ti < tuples_[m].size(); ++ti) {
    const Tuple& t = tuples_[m][ti];
    std::vector<std::size_t> head(t.elems.begin(), t.elems.begin() + static_cast<std::ptrdiff_t>(p));
    std::vector<std::size_t> tail(t.elems.begin() + static_cast<std::ptrdiff_t>(p), t.elems.end());
    const std::size_t hv = vertex_before(m, ti, p);
    const SparseVector fv = evaluate(p, f, *find_tuple(p, head, hv));
    if (fv.is_zero()) continue;
    const SparseVector gv = evaluate(q, g, *find_tuple(q, tail, hv));
    for (const auto& [b, c] : algebra_->multiply(fv, gv)) out.add(cochain_index(m, ti, b), c);
  }
  return out;
}

SparseVector BarComplex::circle(std::size_t p, const SparseVector& f, std::size_t q,
                                const SparseVector& g) const {
  if (p == 0) return {};
  const std::size_t m = p + q - 1;
  if (m > top()) throw DomainError("circle product beyond the computed degree");
  const Field& field = algebra_->field();
  SparseVector out;
  for (std::size_t ti = 0; ti < tuples_[m].size(); ++ti) {
    const Tuple& t = tuples_[m][ti];
    for (std::size_t i = 0; i < p; ++i) {
      std::vector<std::size_t> inner(t.elems.begin() + static_cast<std::ptrdiff_t>(i),
                                     t.elems.begin() + static_cast<std::ptrdiff_t>(i + q));
      const SparseVector gv = evaluate(q, g, *find_tuple(q, inner, vertex_before(m, ti, i)));
      const Scalar s = sign(field, static_cast<long long>(i) * (static_cast<long long>(q) - 1));
      for (const auto& [r, c] : gv) {
        if (!algebra_->is_radical(r)) continue;
        std::vector<std::size_t> outer(t.elems.begin(), t.elems.begin() + static_cast<std::ptrdiff_t>(i));
        outer.push_back(r);
        outer.insert(outer.end(), t.elems.begin() + static_cast<std::ptrdiff_t>(i + q), t.elems.end());
        const SparseVector fv = evaluate(p, f, *find_tuple(p, outer));
        for (const auto& [b, k] : fv) out.add(cochain_index(m, ti, b), s * c * k);
      }
    }
  }
  return out;
}

SparseVector BarComplex::bracket(std::size_t p, const SparseVector& f, std::size_t q,
                                 const SparseVector& g) const {
  if (p + q == 0) return {};
  SparseVector out = circle(p, f, q, g);
  const long long e = (static_cast<long long>(p) - 1) * (static_cast<long long>(q) - 1);
  out.axpy(-sign(algebra_->field(), e < 0 ? -e : e), circle(q, g, p, f));
  return out;
}

bool SmallComplex::applicable(const QuotientAlgebra& a) {
  const Quiver& q = a.quiver();
  if (!q.is_acyclic() || q.longest_path_length() > 2) return false;
  return std::all_of(a.system().rules().begin(), a.system().rules().end(),
                     [](const Rule& r) { return r.leading.length() == 2; });
}

SmallComplex::SmallComplex(std::shared_ptr<const QuotientAlgebra> algebra)
    : algebra_(std::move(algebra)) {
  const QuotientAlgebra& a = *algebra_;
  if (!applicable(a)) throw DomainError("small complex needs a quadratic system without paths of length 3");
  const Quiver& q = a.quiver();
  const Field& field = a.field();
  const auto& rules = a.system().rules();

  std::vector<std::size_t> off0{0};
  for (std::size_t v = 0; v < q.vertex_count(); ++v) off0.push_back(off0.back() + a.parallel(v, v).size());
  std::vector<std::size_t> off1{0};
  std::vector<std::size_t> arrow_basis(q.arrow_count());
  for (std::size_t al = 0; al < q.arrow_count(); ++al) {
    const Arrow& arr = q.arrow(al);
    off1.push_back(off1.back() + a.parallel(arr.source, arr.target).size());
    arrow_basis[al] = a.index_of(Path::arrow(q, al));
  }
  rel_offsets_.push_back(0);
  for (const Rule& r : rules) {
    rel_offsets_.push_back(rel_offsets_.back() + a.parallel(r.leading.source(), r.leading.target()).size());
  }
  dims_ = {off0.back(), off1.back(), rel_offsets_.back()};

  auto pos = [&](std::size_t s, std::size_t t, std::size_t b) {
    const auto& par = a.parallel(s, t);
    return static_cast<std::size_t>(std::find(par.begin(), par.end(), b) - par.begin());
  };

  // d^0 (e_v ‖ z) = Σ_{α out of v} α z - Σ_{α into v} z α
  SparseMatrix d0(dims_[1], dims_[0], field);
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    const auto& loops = a.parallel(v, v);
    for (std::size_t k = 0; k < loops.size(); ++k) {
      const std::size_t col = off0[v] + k;
      for (std::size_t al = 0; al < q.arrow_count(); ++al) {
        const Arrow& arr = q.arrow(al);
        if (arr.source == v) {
          for (const auto& [r, c] : a.product(arrow_basis[al], loops[k])) {
            d0.add(off1[al] + pos(arr.source, arr.target, r), col, c);
          }
        }
        if (arr.target == v) {
          for (const auto& [r, c] : a.product(loops[k], arrow_basis[al])) {
            d0.add(off1[al] + pos(arr.source, arr.target, r), col, -c);
          }
        }
      }
    }
  }

  // d^1 φ (m) = D_φ(m - rest(m)), D_φ(a_2 a_1) = a_2 φ(a_1) + φ(a_2) a_1
  SparseMatrix d1(dims_[2], dims_[1], field);
  for (std::size_t ri = 0; ri < rules.size(); ++ri) {
    const Rule& rule = rules[ri];
    AlgebraElement rel = AlgebraElement::monomial(rule.leading, field.one()) - rule.rest;
    const std::size_t s = rule.leading.source();
    const std::size_t t = rule.leading.target();
    for (const auto& [path, c] : rel.terms()) {
      const std::size_t a2 = path.arrows()[0];
      const std::size_t a1 = path.arrows()[1];
      const Arrow& arr1 = q.arrow(a1);
      const Arrow& arr2 = q.arrow(a2);
      const auto& par1 = a.parallel(arr1.source, arr1.target);
      for (std::size_t k = 0; k < par1.size(); ++k) {
        for (const auto& [r, x] : a.product(arrow_basis[a2], par1[k])) {
          d1.add(rel_offsets_[ri] + pos(s, t, r), off1[a1] + k, c * x);
        }
      }
      const auto& par2 = a.parallel(arr2.source, arr2.target);
      for (std::size_t k = 0; k < par2.size(); ++k) {
        for (const auto& [r, x] : a.product(par2[k], arrow_basis[a1])) {
          d1.add(rel_offsets_[ri] + pos(s, t, r), off1[a2] + k, c * x);
        }
      }
    }
  }
  d_.push_back(std::move(d0));
  d_.push_back(std::move(d1));
}

Hochschild::Hochschild(std::shared_ptr<const QuotientAlgebra> algebra, std::size_t nmax)
    : bar_(algebra, nmax),
      coh_(bar_.term_dims(), bar_.differentials(), nmax, algebra->field()) {}

std::vector<CohomologyClass> Hochschild::classes(std::size_t n) const {
  std::vector<CohomologyClass> out;
  const auto reps = coh_.classes(n);
  for (std::size_t k = 0; k < reps.size(); ++k) {
    std::vector<Scalar> coords(reps.size(), algebra().field().zero());
    coords[k] = algebra().field().one();
    out.push_back({n, reps[k], std::move(coords)});
  }
  return out;
}

CohomologyClass Hochschild::class_of(std::size_t n, const SparseVector& cocycle) const {
  if (!bar_.apply_differential(n, cocycle).is_zero()) throw DomainError("cochain is not a cocycle");
  return {n, cocycle, coh_.coordinates(n, cocycle)};
}

CohomologyClass Hochschild::cup(const CohomologyClass& a, const CohomologyClass& b) const {
  const std::size_t n = a.degree + b.degree;
  if (n > nmax()) throw DomainError("cup product lands above the computed degree");
  return class_of(n, bar_.cup(a.degree, a.representative, b.degree, b.representative));
}

CohomologyClass Hochschild::bracket(const CohomologyClass& a, const CohomologyClass& b) const {
  if (a.degree + b.degree == 0) throw DomainError("bracket of two degree-0 classes");
  const std::size_t n = a.degree + b.degree - 1;
  if (n > nmax()) throw DomainError("bracket lands above the computed degree");
  return class_of(n, bar_.bracket(a.degree, a.representative, b.degree, b.representative));
}

namespace {

std::size_t span_rank(const std::vector<std::vector<Scalar>>& rows, std::size_t dim, Field field) {
  SubspaceBasis span(dim, field);
  for (const auto& r : rows) {
    SparseVector v;
    for (std::size_t i = 0; i < r.size(); ++i) v.set(i, r[i]);
    span.insert(v);
  }
  return span.dim();
}

}  // namespace

std::size_t Hochschild::cup_rank(std::size_t p, std::size_t q) const {
  std::vector<std::vector<Scalar>> rows;
  for (const auto& a : classes(p)) {
    for (const auto& b : classes(q)) rows.push_back(cup(a, b).coordinates);
  }
  return span_rank(rows, coh_.dim(p + q), algebra().field());
}

std::size_t Hochschild::bracket_rank(std::size_t p, std::size_t q) const {
  std::vector<std::vector<Scalar>> rows;
  for (const auto& a : classes(p)) {
    for (const auto& b : classes(q)) rows.push_back(bracket(a, b).coordinates);
  }
  return span_rank(rows, coh_.dim(p + q - 1), algebra().field());
}

bool Hochschild::inject_fault() {
  const auto& d = bar_.differentials();
  for (std::size_t n = 0; n + 1 < d.size(); ++n) {
    const SparseMatrix& next = d[n + 1];
    if (d[n].cols() == 0) continue;
    for (std::size_t j = 0; j < next.cols(); ++j) {
      if (next.column(j).is_zero()) continue;
      SparseMatrix m = d[n];
      m.add(j, 0, algebra().field().one());
      bar_.set_differential(n, std::move(m));
      return true;
    }
  }
  return false;
}

bool differentials_square_to_zero(const std::vector<SparseMatrix>& d) {
  for (std::size_t n = 0; n + 1 < d.size(); ++n) {
    if (!(d[n + 1] * d[n]).is_zero()) return false;
  }
  return true;
}

HHReport hh_report(const Hochschild& hh) {
  HHReport r;
  const BarComplex& bar = hh.bar();
  const Cohomology& coh = hh.cohomology();
  const std::size_t nmax = hh.nmax();
  r.bar_dims = bar.term_dims();
  r.hh = coh.dims();
  r.d_squared_zero = differentials_square_to_zero(bar.differentials());
  if (!r.d_squared_zero) throw ConsistencyError("bar differential does not square to zero");

  for (std::size_t i = 0; i <= nmax; ++i) {
    const long long s = (i % 2 == 0) ? 1 : -1;
    r.euler_terms += s * static_cast<long long>(r.bar_dims[i]);
    r.euler_hh += s * static_cast<long long>(r.hh[i]);
  }
  // A truncated complex leaves rank d^nmax unaccounted for.
  const long long tail = (nmax % 2 == 0 ? 1 : -1) * static_cast<long long>(coh.rank(nmax));
  r.euler_ok = r.euler_terms == r.euler_hh + tail;
  if (!r.euler_ok) throw ConsistencyError("Euler identity failed on the bar complex");

  if (SmallComplex::applicable(hh.algebra())) {
    SmallComplex small(bar.algebra_ptr());
    if (!differentials_square_to_zero(small.differentials())) {
      throw ConsistencyError("small complex differential does not square to zero");
    }
    const auto dims = small.term_dims();
    const Cohomology sc(dims, small.differentials(), 2, hh.algebra().field());
    r.small_dims = dims;
    r.small_hh = sc.dims();
    r.small_euler = static_cast<long long>(dims[0]) - static_cast<long long>(dims[1]) +
                    static_cast<long long>(dims[2]);
    const long long small_hh_euler = static_cast<long long>(sc.dim(0)) -
                                     static_cast<long long>(sc.dim(1)) +
                                     static_cast<long long>(sc.dim(2));
    if (*r.small_euler != small_hh_euler) throw ConsistencyError("Euler identity failed on the small complex");
    for (std::size_t n = 0; n <= nmax; ++n) {
      const std::size_t expect = n <= 2 ? sc.dim(n) : 0;
      if (r.hh[n] != expect) r.complexes_agree = false;
    }
    if (!r.complexes_agree) {
      throw ConsistencyError("small complex gives " + dims_text(sc.dims()) +
                             " but bar complex gives " + dims_text(r.hh));
    }
  }
  return r;
}

HHReport hh_report(const BoundQuiverPresentation& pres, std::size_t nmax) {
  auto a = std::make_shared<const QuotientAlgebra>(QuotientAlgebra::from_presentation(pres));
  const Hochschild hh(a, nmax);
  return hh_report(hh);
}

}  // namespace hhcalc
