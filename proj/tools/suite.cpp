#include "suite.hpp"

#include <algorithm>
#include <set>

#include "hhcalc/families.hpp"
#include "hhcalc/sl2.hpp"
#include "sampling.hpp"

namespace hhcalc::tools {

Outcome run_check(const std::string& name, const CheckBody& body) {
  Outcome o;
  o.name = name;
  try {
    const Failure f = body(o.notes);
    o.pass = !f.has_value();
    o.detail = f.value_or("");
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  return o;
}

Computed compute(const BoundQuiverPresentation& pres, std::size_t nmax) {
  Computed c;
  c.algebra = std::make_shared<const QuotientAlgebra>(QuotientAlgebra::from_presentation(pres));
  c.hh = std::make_shared<Hochschild>(c.algebra, nmax);
  c.report = hh_report(*c.hh);
  return c;
}

std::string dims_text(const std::vector<std::size_t>& v, std::size_t count) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size() && i < count; ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

std::vector<std::size_t> hh3(const HHReport& r) {
  return {r.hh.begin(), r.hh.begin() + static_cast<std::ptrdiff_t>(std::min<std::size_t>(3, r.hh.size()))};
}

SparseVector random_cochain(std::mt19937_64& rng, const BarComplex& bar, std::size_t n,
                            std::size_t density) {
  const Field& field = bar.algebra().field();
  SparseVector v;
  const std::size_t dim = bar.dim(n);
  if (dim == 0) return v;
  for (std::size_t k = 0; k < density; ++k) {
    v.add(static_cast<std::size_t>(draw(rng, 0, static_cast<long long>(dim) - 1)),
          field.from_int(draw(rng, -3, 3)));
  }
  return v;
}

Failure leibniz_and_dd(const BarComplex& bar, std::mt19937_64& rng, std::size_t trials) {
  const Field& field = bar.algebra().field();
  const std::size_t top = bar.top();
  for (std::size_t t = 0; t < trials; ++t) {
    for (std::size_t n = 0; n + 1 < top; ++n) {
      const SparseVector f = random_cochain(rng, bar, n, 6);
      if (!bar.apply_differential(n + 1, bar.apply_differential(n, f)).is_zero()) {
        return "d(d f) != 0 in degree " + std::to_string(n);
      }
    }
    for (std::size_t p = 0; p + 1 <= top; ++p) {
      for (std::size_t q = 0; p + q + 1 <= top; ++q) {
        const SparseVector f = random_cochain(rng, bar, p, 6);
        const SparseVector g = random_cochain(rng, bar, q, 6);
        SparseVector lhs = bar.apply_differential(p + q, bar.cup(p, f, q, g));
        SparseVector rhs = bar.cup(p + 1, bar.apply_differential(p, f), q, g);
        const Scalar s = p % 2 == 0 ? field.one() : -field.one();
        rhs.axpy(s, bar.cup(p, f, q + 1, bar.apply_differential(q, g)));
        if (!(lhs == rhs)) {
          return "Leibniz rule fails for p=" + std::to_string(p) + ", q=" + std::to_string(q);
        }
      }
    }
  }
  return std::nullopt;
}

Failure exterior_cup_pattern(const Hochschild& hh) {
  const auto h1 = hh.classes(1);
  const std::size_t h2 = hh.cohomology().dim(2);
  SubspaceBasis span(h2, hh.algebra().field());
  for (std::size_t i = 0; i < h1.size(); ++i) {
    for (std::size_t j = 0; j < h1.size(); ++j) {
      const auto c = hh.cup(h1[i], h1[j]).coordinates;
      const bool zero = std::all_of(c.begin(), c.end(), [](const Scalar& x) { return x.is_zero(); });
      if (i == j && !zero) return "x" + std::to_string(i) + " cup itself is nonzero";
      SparseVector v;
      for (std::size_t k = 0; k < c.size(); ++k) v.set(k, c[k]);
      span.insert(v);
    }
  }
  if (span.dim() != h2) {
    return "HH^1 cups span " + std::to_string(span.dim()) + " of " + std::to_string(h2) +
           " dimensions of HH^2";
  }
  return std::nullopt;
}

namespace {

struct Named {
  std::string name;
  BoundQuiverPresentation pres;
};

std::vector<Named> family_instances() {
  const Field q = Field::rationals();
  const Field f7 = Field::prime(7);
  const Field f13 = Field::prime(13);
  std::vector<Named> out;
  out.push_back({"torus-s q=1", family_presentation("torus-s", q, "1", {})});
  out.push_back({"torus-c q=1", family_presentation("torus-c", q, "1", {})});
  out.push_back({"torus-s fp:7 q=2", family_presentation("torus-s", f7, "2", {})});
  out.push_back({"torus-c fp:13 q=5", family_presentation("torus-c", f13, "5", {})});
  out.push_back({"p1p1 psi=0", family_presentation("p1p1", q, {}, "0")});
  out.push_back({"p1p1 psi=ones", family_presentation("p1p1", q, {}, "ee,eh,ef,he,hh,hf,fe,fh,ff")});
  out.push_back({"pi", family_presentation("pi", q, {}, {})});
  out.push_back({"kronecker", family_presentation("kronecker", q, {}, {})});
  return out;
}

bool all_zero(const std::vector<Scalar>& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x.is_zero(); });
}

std::vector<Scalar> scaled(std::vector<Scalar> v, const Scalar& s) {
  for (auto& x : v) x *= s;
  return v;
}

Scalar random_rational(std::mt19937_64& rng, const Field& field) {
  if (!field.is_rational()) return field.from_int(draw(rng, 0, 1000));
  return field.from_int(draw(rng, -20, 20)) / field.from_int(draw(rng, 1, 9));
}

Mat2 mat_mul(const Mat2& a, const Mat2& b, const Field& field) {
  Mat2 out{{{field.zero(), field.zero()}, {field.zero(), field.zero()}}};
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      for (std::size_t k = 0; k < 2; ++k) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

// v ↦ Ψ⊢(v⊣Ψ) from the Gram matrix of tr(ab), independent of contract().
Mat3 psi_psi_dagger_oracle(const PsiTensor& psi) {
  const Field& f = psi.field();
  const Scalar z = f.zero();
  const Scalar one = f.one();
  const Scalar two = f.from_int(2);
  const Mat3 g = {{{z, z, one}, {z, two, z}, {one, z, z}}};
  const Mat3 ginv = {{{z, z, one}, {z, one / two, z}, {one, z, z}}};
  auto mul = [&](const Mat3& a, const Mat3& b) {
    Mat3 out = {{{z, z, z}, {z, z, z}, {z, z, z}}};
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        for (std::size_t k = 0; k < 3; ++k) out[i][j] += a[i][k] * b[k][j];
      }
    }
    return out;
  };
  Mat3 a = {{{z, z, z}, {z, z, z}, {z, z, z}}};
  Mat3 at = a;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      a[i][j] = psi.at(i, j);
      at[j][i] = psi.at(i, j);
    }
  }
  // Ψ as an endomorphism x ↦ Σ a_ij g_i k(g_j, x) has matrix P = A·G; its
  // k-adjoint is G⁻¹·Pᵀ·G.
  const Mat3 p = mul(a, g);
  const Mat3 dagger = mul(ginv, mul(mul(g, at), g));
  return mul(p, dagger);
}

}  // namespace

std::vector<Outcome> invariant_checks(Scope scope, std::uint64_t seed, bool inject_fault) {
  const bool full = scope == Scope::full;
  const Field Q = Field::rationals();
  std::vector<Outcome> out;
  std::mt19937_64 rng(seed);

  out.push_back(run_check("exact-arith: field axioms", [&](auto&) -> Failure {
    for (const Field& field : {Q, Field::prime(101)}) {
      for (std::size_t t = 0; t < (full ? 200u : 50u); ++t) {
        const Scalar a = random_rational(rng, field);
        const Scalar b = random_rational(rng, field);
        const Scalar c = random_rational(rng, field);
        if (!((a + b) + c == a + (b + c))) return "addition not associative";
        if (!((a * b) * c == a * (b * c))) return "multiplication not associative";
        if (!(a * (b + c) == a * b + a * c)) return "distributivity fails";
        if (!a.is_zero() && !(a * a.inverse()).is_one()) return "inverse fails";
        if (!(field.parse_scalar(a.to_string()) == a)) return "parse(print) != id for " + a.to_string();
      }
    }
    return std::nullopt;
  }));

  out.push_back(run_check("exact-arith: roots of unity", [&](auto&) -> Failure {
    for (std::uint64_t p = 2; p <= 100; ++p) {
      bool prime = true;
      for (std::uint64_t d = 2; d * d <= p; ++d) prime = prime && p % d != 0;
      if (!prime) continue;
      const Field field = Field::prime(p);
      for (std::uint64_t n = 1; n <= 12; ++n) {
        const auto z = primitive_root_of_unity(n, field);
        if (z.has_value() != ((p - 1) % n == 0)) {
          return "existence wrong for n=" + std::to_string(n) + " p=" + std::to_string(p);
        }
        if (!z) continue;
        if (!z->pow(static_cast<long long>(n)).is_one()) return "root is not an n-th root";
        for (std::uint64_t k = 1; k < n; ++k) {
          if (z->pow(static_cast<long long>(k)).is_one()) return "root is not primitive";
        }
      }
    }
    return std::nullopt;
  }));

  out.push_back(run_check("quiver-core: composition", [&](auto&) -> Failure {
    const BoundQuiverPresentation pi = pi_presentation(Q);
    const auto paths = enumerate_paths(pi.quiver, 3);
    for (std::size_t t = 0; t < (full ? 500u : 100u); ++t) {
      const Path& p = paths[static_cast<std::size_t>(draw(rng, 0, static_cast<long long>(paths.size()) - 1))];
      std::vector<const Path*> qs, rs;
      for (const auto& x : paths) if (x.target() == p.source()) qs.push_back(&x);
      const Path& q = *qs[static_cast<std::size_t>(draw(rng, 0, static_cast<long long>(qs.size()) - 1))];
      for (const auto& x : paths) if (x.target() == q.source()) rs.push_back(&x);
      const Path& r = *rs[static_cast<std::size_t>(draw(rng, 0, static_cast<long long>(rs.size()) - 1))];
      const Path left = compose(compose(p, q), r);
      if (!(left == compose(p, compose(q, r)))) return "composition not associative";
      if (left.length() != p.length() + q.length() + r.length()) return "length not additive";
    }
    return std::nullopt;
  }));

  out.push_back(run_check("quiver-core: DSL round trip", [&](auto&) -> Failure {
    for (const auto& inst : family_instances()) {
      const std::string text = serialize_presentation(inst.pres);
      const BoundQuiverPresentation back = parse_presentation(text);
      if (!(back == inst.pres)) return inst.name + ": parse(serialize) differs";
      if (serialize_presentation(back) != text) return inst.name + ": serialization not stable";
    }
    return std::nullopt;
  }));

  out.push_back(run_check("rewrite: ideal membership and strategy independence", [&](auto&) -> Failure {
    for (const auto& inst : family_instances()) {
      const QuotientAlgebra a = QuotientAlgebra::from_presentation(inst.pres);
      const ReductionSystem& sys = a.system();
      for (const auto& r : inst.pres.relations) {
        if (!sys.normal_form(r).is_zero()) return inst.name + ": a relation has nonzero normal form";
      }
      const auto paths = enumerate_paths(inst.pres.quiver, inst.pres.quiver.longest_path_length());
      for (std::size_t t = 0; t < (full ? 100u : 20u); ++t) {
        AlgebraElement e(a.field());
        const long long terms = draw(rng, 1, 4);
        for (long long k = 0; k < terms; ++k) {
          e.add_term(paths[static_cast<std::size_t>(draw(rng, 0, static_cast<long long>(paths.size()) - 1))],
                     a.field().from_int(draw(rng, -3, 3)));
        }
        const AlgebraElement nf = sys.normal_form(e);
        for (int s = 0; s < 5; ++s) {
          if (!(sys.normal_form(e, rng) == nf)) return inst.name + ": normal form depends on strategy";
        }
      }
    }
    return std::nullopt;
  }));

  out.push_back(run_check("rewrite: associativity and grading", [&](auto&) -> Failure {
    for (const auto& inst : family_instances()) {
      const QuotientAlgebra a = QuotientAlgebra::from_presentation(inst.pres);
      const auto n = static_cast<long long>(a.dim());
      for (std::size_t t = 0; t < (full ? 200u : 50u); ++t) {
        SparseVector x, y, z;
        x.set(static_cast<std::size_t>(draw(rng, 0, n - 1)), a.field().one());
        y.set(static_cast<std::size_t>(draw(rng, 0, n - 1)), a.field().one());
        z.set(static_cast<std::size_t>(draw(rng, 0, n - 1)), a.field().one());
        if (!(a.multiply(a.multiply(x, y), z) == a.multiply(x, a.multiply(y, z)))) {
          return inst.name + ": multiplication not associative";
        }
      }
      for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
          const std::size_t len = a.basis_path(i).length() + a.basis_path(j).length();
          for (const auto& [k, c] : a.product(i, j)) {
            if (a.basis_path(k).length() != len) return inst.name + ": product breaks the grading";
          }
        }
      }
      if (!(a.multiply(a.unit(), a.unit()) == a.unit())) return inst.name + ": unit is not idempotent";
    }
    return std::nullopt;
  }));

  out.push_back(run_check("linalg: rank symmetry, field agreement, reduction", [&](auto&) -> Failure {
    const Field big = Field::prime(1000003);
    for (std::size_t t = 0; t < (full ? 60u : 20u); ++t) {
      const auto rows = static_cast<std::size_t>(draw(rng, 1, 9));
      const auto cols = static_cast<std::size_t>(draw(rng, 1, 9));
      SparseMatrix mq(rows, cols, Q);
      SparseMatrix mp(rows, cols, big);
      for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
          if (draw(rng, 0, 2) != 0) continue;
          const long long v = draw(rng, -3, 3);
          mq.add(i, j, Q.from_int(v));
          mp.add(i, j, big.from_int(v));
        }
      }
      const EchelonResult e = echelon(mq);
      if (e.rank != rank(mq.transpose())) return "rank(m) != rank(transpose m)";
      if (e.rank != rank(mp)) return "rank over Q differs from rank over F_p";
      if (e.rank + e.kernel.dim() != cols) return "rank-nullity fails";
      for (const auto& k : e.kernel.vectors()) {
        if (!mq.apply(k).is_zero()) return "kernel vector not annihilated";
      }
      SubspaceBasis image(rows, Q);
      for (std::size_t j = 0; j < cols; ++j) image.insert(mq.column(j));
      SparseVector v, w;
      for (std::size_t i = 0; i < rows; ++i) {
        v.set(i, Q.from_int(draw(rng, -3, 3)));
        w.set(i, Q.from_int(draw(rng, -3, 3)));
      }
      const SparseVector rv = quotient_coords(v, image);
      if (!(quotient_coords(rv, image) == rv)) return "quotient_coords not idempotent";
      SparseVector sum = v;
      sum.axpy(Q.from_int(2), w);
      SparseVector expect = rv;
      expect.axpy(Q.from_int(2), quotient_coords(w, image));
      if (!(quotient_coords(sum, image) == expect)) return "quotient_coords not linear";
    }
    return std::nullopt;
  }));

  std::vector<Named> with_random = family_instances();
  for (std::size_t s = 0; s < (full ? 20u : 5u); ++s) {
    with_random.push_back({"monomial seed " + std::to_string(seed + s), random_monomial_presentation(seed + s)});
  }

  out.push_back(run_check("hochschild: d∘d = 0", [&](auto& notes) -> Failure {
    for (const auto& inst : with_random) {
      auto algebra = std::make_shared<const QuotientAlgebra>(QuotientAlgebra::from_presentation(inst.pres));
      if (!differentials_square_to_zero(BarComplex(algebra, 3).differentials())) {
        return inst.name + ": bar differential does not square to zero";
      }
      if (SmallComplex::applicable(*algebra) &&
          !differentials_square_to_zero(SmallComplex(algebra).differentials())) {
        return inst.name + ": small differential does not square to zero";
      }
    }
    if (inject_fault) {
      auto algebra = std::make_shared<const QuotientAlgebra>(
          QuotientAlgebra::from_presentation(p1p1_presentation(PsiTensor(Q))));
      Hochschild hh(algebra, 3);
      hh.inject_fault();
      notes.push_back("fault injected into the bar differential of p1p1");
      if (!differentials_square_to_zero(hh.bar().differentials())) {
        return std::string("tampered differential: d∘d != 0");
      }
    }
    return std::nullopt;
  }));

  out.push_back(run_check("hochschild: Leibniz rule on random cochains", [&](auto&) -> Failure {
    for (const auto& inst : family_instances()) {
      const Computed c = compute(inst.pres);
      if (auto f = leibniz_and_dd(c.hh->bar(), rng, full ? 3 : 1)) return inst.name + ": " + *f;
    }
    return std::nullopt;
  }));

  out.push_back(run_check("hochschild: Euler identity and complex agreement", [&](auto&) -> Failure {
    for (const auto& inst : with_random) {
      const Computed c = compute(inst.pres);
      if (!c.report.euler_ok) return inst.name + ": Euler identity fails";
      if (c.report.small_hh && hh3(c.report) != *c.report.small_hh) {
        return inst.name + ": small and bar complexes disagree";
      }
    }
    return std::nullopt;
  }));

  out.push_back(run_check("hochschild: graded commutativity and bracket symmetry", [&](auto&) -> Failure {
    for (const auto& inst : family_instances()) {
      const Computed c = compute(inst.pres);
      const Hochschild& hh = *c.hh;
      const Field& field = hh.algebra().field();
      for (std::size_t p = 0; p <= 2; ++p) {
        for (std::size_t q = 0; p + q <= 3 && q <= 2; ++q) {
          for (const auto& a : hh.classes(p)) {
            for (const auto& b : hh.classes(q)) {
              const Scalar s = (p * q) % 2 == 0 ? field.one() : -field.one();
              if (hh.cup(a, b).coordinates != scaled(hh.cup(b, a).coordinates, s)) {
                return inst.name + ": cup not graded commutative in degrees " + std::to_string(p) +
                       "," + std::to_string(q);
              }
              if (p == 0 || q == 0) continue;
              const SparseVector br = hh.bar().bracket(p, a.representative, q, b.representative);
              if (!hh.bar().apply_differential(p + q - 1, br).is_zero()) {
                return inst.name + ": bracket is not a cocycle";
              }
              const Scalar t = ((p + 1) * (q + 1)) % 2 == 0 ? -field.one() : field.one();
              if (hh.bracket(a, b).coordinates != scaled(hh.bracket(b, a).coordinates, t)) {
                return inst.name + ": bracket not graded antisymmetric";
              }
            }
          }
        }
      }
      for (const auto& a : hh.classes(1)) {
        if (!all_zero(hh.bracket(a, a).coordinates)) return inst.name + ": [f,f] != 0 in degree 1";
      }
      for (std::size_t n = 0; n <= 3; ++n) {
        for (const auto& a : hh.classes(n)) {
          SparseVector unit;
          for (std::size_t v = 0; v < hh.algebra().quiver().vertex_count(); ++v) {
            unit.add(hh.bar().cochain_index(0, v, hh.algebra().idempotent(v)), field.one());
          }
          const auto u = hh.class_of(0, unit);
          if (hh.cup(u, a).coordinates != a.coordinates) return inst.name + ": unit law fails";
        }
      }
    }
    return std::nullopt;
  }));

  std::vector<PsiTensor> sample;
  for (std::size_t k = 0; k < (full ? 25u : 5u); ++k) sample.push_back(random_psi(rng, Q));

  out.push_back(run_check("hochschild: random Psi, h2 - h1 = 3 and three-way agreement", [&](auto&) -> Failure {
    for (const auto& psi : sample) {
      const Computed c = compute(p1p1_presentation(psi));
      const auto& h = c.report.hh;
      const KernelModelReport km = kernel_model_dims(psi);
      if (h[0] != 1 || h[2] != h[1] + 3) return psi.to_string() + ": dims " + dims_text(h);
      if (h[1] != km.total || km.total != km.stab + km.jj) {
        return psi.to_string() + ": h1 " + std::to_string(h[1]) + " vs kernel model " +
               std::to_string(km.total);
      }
    }
    return std::nullopt;
  }));

  out.push_back(run_check("families: sl2 identities", [&](auto&) -> Failure {
    for (std::size_t t = 0; t < 50; ++t) {
      const SL2Element a = random_sl2(rng, Q);
      const SL2Element b = random_sl2(rng, Q);
      const Mat2 ab = mat_mul(a.matrix(), b.matrix(), Q);
      const Mat2 ba = mat_mul(b.matrix(), a.matrix(), Q);
      const Scalar k = killing(a, b);
      for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
          if (!(ab[i][j] + ba[i][j] == (i == j ? k : Q.zero()))) return std::string("ab+ba != tr(ab)1");
        }
      }
    }
    for (std::size_t t = 0; t < 20; ++t) {
      const PsiTensor psi = random_psi(rng, Q);
      const Mat3 m = psi_dagger_psi(psi);
      if (!(m == psi_psi_dagger_oracle(psi))) return "contraction matrix differs from the Gram oracle";
      const SL2Element v = random_sl2(rng, Q);
      const SL2Element lhs = contract(psi, contract(psi, v, Side::left), Side::right);
      for (std::size_t i = 0; i < 3; ++i) {
        Scalar s = Q.zero();
        for (std::size_t k = 0; k < 3; ++k) s += m[i][k] * v.c[k];
        if (!(s == lhs.c[i])) return std::string("contraction identity fails");
      }
    }
    return std::nullopt;
  }));

  out.push_back(run_check("families: feasibility of (stab, jj)", [&](auto&) -> Failure {
    static const std::set<std::pair<std::size_t, std::size_t>> allowed = {
        {6, 0}, {3, 3}, {3, 0}, {2, 1}, {2, 0}, {1, 2}, {1, 1}, {1, 0}, {0, 1}, {0, 0}};
    for (std::size_t t = 0; t < (full ? 200u : 50u); ++t) {
      const PsiTensor psi = random_psi(rng, Q);
      const std::pair<std::size_t, std::size_t> pair{stab_dim(psi), jj_dim(psi)};
      if (!allowed.count(pair)) {
        return psi.to_string() + ": (" + std::to_string(pair.first) + "," + std::to_string(pair.second) + ")";
      }
    }
    return std::nullopt;
  }));

  out.push_back(run_check("families: conjugation invariance", [&](auto&) -> Failure {
    for (std::size_t k = 0; k < (full ? 5u : 2u); ++k) {
      const PsiTensor psi = random_psi(rng, Q);
      const auto base = hh3(compute(p1p1_presentation(psi)).report);
      const std::size_t st = stab_dim(psi);
      const std::size_t jj = jj_dim(psi);
      for (std::size_t t = 0; t < (full ? 10u : 3u); ++t) {
        const PsiTensor c = orbit_conjugate(psi, random_unimodular(rng, Q), random_unimodular(rng, Q));
        if (stab_dim(c) != st || jj_dim(c) != jj) return psi.to_string() + ": stab or jj changed";
        if (hh3(compute(p1p1_presentation(c)).report) != base) return psi.to_string() + ": HH changed";
      }
    }
    return std::nullopt;
  }));

  out.push_back(run_check("families: torus cell data and orientation reversal", [&](auto&) -> Failure {
    for (const CellComplexData& cells : {torus_simplicial_complex(), torus_cubical_complex()}) {
      const CellValidation v = validate_cells(cells);
      if (!v.ok() || v.euler != 0) return std::string("torus cell data fails validation");
      for (const char* q : {"1", "2"}) {
        const Scalar qv = Q.parse_scalar(q);
        const auto a = hh3(compute(incidence_presentation(cells, qv)).report);
        const auto b = hh3(compute(incidence_presentation(reverse_orientation(cells), qv)).report);
        if (a != b) return "orientation reversal changes HH at q=" + std::string(q);
      }
    }
    return std::nullopt;
  }));

  out.push_back(run_check("families: undeformed incidence algebras multiply intervals", [&](auto&) -> Failure {
    for (const CellComplexData& cells : {torus_simplicial_complex(), torus_cubical_complex()}) {
      const QuotientAlgebra a = QuotientAlgebra::from_presentation(incidence_presentation(cells, Q.one()));
      const std::size_t nv = a.quiver().vertex_count();
      for (std::size_t s = 0; s < nv; ++s) {
        for (std::size_t t = 0; t < nv; ++t) {
          if (a.parallel(s, t).size() > 1) return std::string("two independent paths between cells");
        }
      }
      for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
          const SparseVector& p = a.product(i, j);
          const bool composable = a.basis_path(i).source() == a.basis_path(j).target();
          if (!composable) {
            if (!p.is_zero()) return std::string("product of non-composable intervals");
            continue;
          }
          const auto& par = a.parallel(a.basis_path(j).source(), a.basis_path(i).target());
          if (par.empty() ? !p.is_zero() : !(p.nonzeros() == 1 && p.get(par[0], Q).is_one())) {
            return std::string("product differs from interval composition");
          }
        }
      }
    }
    return std::nullopt;
  }));

  out.push_back(run_check("families: monomial cup vanishing", [&](auto&) -> Failure {
    for (std::size_t s = 0; s < (full ? 20u : 5u); ++s) {
      const Computed c = compute(random_monomial_presentation(seed + s));
      for (std::size_t p = 1; p <= 2; ++p) {
        for (std::size_t q = 1; p + q <= 3; ++q) {
          if (c.hh->cup_rank(p, q) != 0) return "seed " + std::to_string(seed + s) + ": nonzero cup";
        }
      }
    }
    return std::nullopt;
  }));

  return out;
}

}  // namespace hhcalc::tools
