#include <doctest.h>

#include <random>

#include "hhcalc/errors.hpp"
#include "hhcalc/linalg.hpp"
#include "hhcalc/sl2.hpp"

using namespace hhcalc;

namespace {

Mat2 mat2(const Field& f, long long a, long long b, long long c, long long d) {
  return {{{f.from_int(a), f.from_int(b)}, {f.from_int(c), f.from_int(d)}}};
}

Mat3 mul(const Mat3& x, const Mat3& y, const Field& f) {
  Mat3 out;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      out[i][j] = f.zero();
      for (std::size_t k = 0; k < 3; ++k) out[i][j] += x[i][k] * y[k][j];
    }
  }
  return out;
}

// Gram matrix of tr(ab) on (e, h, f).
Mat3 gram(const Field& f) {
  Mat3 g;
  for (auto& row : g) row.fill(f.zero());
  g[0][2] = g[2][0] = f.one();
  g[1][1] = f.from_int(2);
  return g;
}

PsiTensor random_psi(std::mt19937_64& rng, const Field& f) {
  PsiTensor psi(f);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) psi.set(i, j, f.from_int(static_cast<long long>(rng() % 7) - 3));
  }
  return psi;
}

std::size_t eigenspace_dim(const Mat3& m, const Scalar& lambda) {
  const Field f = lambda.field();
  SparseMatrix s(3, 3, f);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const Scalar x = i == j ? m[i][j] - lambda : m[i][j];
      if (!x.is_zero()) s.add(i, j, x);
    }
  }
  return 3 - rank(s);
}

}  // namespace

TEST_CASE("trace form") {
  const Field Q = Field::rationals();
  const auto e = SL2Element::basis(0, Q), h = SL2Element::basis(1, Q), f = SL2Element::basis(2, Q);
  CHECK(killing(e, f) == Q.one());
  CHECK(killing(h, h) == Q.from_int(2));
  CHECK(killing(e, e).is_zero());
  CHECK(killing(e, h).is_zero());
  // Against tr(ab) of the matrices themselves.
  std::mt19937_64 rng(2);
  for (int t = 0; t < 50; ++t) {
    SL2Element a = SL2Element::zero(Q), b = SL2Element::zero(Q);
    for (auto& c : a.c) c = Q.from_int(static_cast<long long>(rng() % 9) - 4);
    for (auto& c : b.c) c = Q.from_int(static_cast<long long>(rng() % 9) - 4);
    const Mat2 ma = a.matrix(), mb = b.matrix();
    Scalar tr = Q.zero();
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t k = 0; k < 2; ++k) tr += ma[i][k] * mb[k][i];
    }
    CHECK(killing(a, b) == tr);
    CHECK(SL2Element::from_matrix(ma) == a);
  }
  CHECK_THROWS_AS(SL2Element::from_matrix(mat2(Q, 1, 0, 0, 1)), DomainError);
}

TEST_CASE("contractions") {
  const Field Q = Field::rationals();
  const PsiTensor psi = PsiTensor::parse("ef:1", Q);
  const auto e = SL2Element::basis(0, Q), f = SL2Element::basis(2, Q);
  // Ψ = e⊗f: f⊣Ψ = k(e,f) f, Ψ⊢e = e k(f,e).
  CHECK(contract(psi, f, Side::left) == f);
  CHECK(contract(psi, e, Side::right) == e);
  CHECK(contract(psi, e, Side::left) == SL2Element::zero(Q));
  CHECK(contract(psi, f, Side::right) == SL2Element::zero(Q));
}

TEST_CASE("psi_dagger_psi matches A G A^T G") {
  std::mt19937_64 rng(9);
  for (const Field f : {Field::rationals(), Field::prime(7)}) {
    const Mat3 g = gram(f);
    for (int t = 0; t < 40; ++t) {
      const PsiTensor psi = random_psi(rng, f);
      Mat3 a, at;
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
          a[i][j] = psi.at(i, j);
          at[j][i] = psi.at(i, j);
        }
      }
      const Mat3 expect = mul(mul(mul(a, g, f), at, f), g, f);
      CHECK(psi_dagger_psi(psi) == expect);
      CHECK(jj_dim(psi) == eigenspace_dim(expect, f.from_int(4)));
    }
  }
}

TEST_CASE("stabilizer and eigenvalue-4 dimensions on known tensors") {
  const Field Q = Field::rationals();
  struct Row {
    const char* psi;
    std::size_t stab, jj;
  };
  for (const Row& r : {Row{"ee:2,ff:2,hh:1", 3, 3}, Row{"ee:1", 3, 0}, Row{"ee:1,eh:1,he:1,hh:1", 2, 1},
                       Row{"ee:1,ff:1", 1, 0}, Row{"ee:1,hh:2,ef:1,fe:1", 0, 0}}) {
    const PsiTensor psi = PsiTensor::parse(r.psi, Q);
    CHECK(stab_dim(psi) == r.stab);
    CHECK(jj_dim(psi) == r.jj);
    const KernelModelReport k = kernel_model_dims(psi);
    CHECK(k.total == r.stab + r.jj);
    CHECK(k.v_system == r.jj);
  }
  // Ψ = 0: both copies of sl2 stabilize, nothing has eigenvalue 4.
  CHECK(stab_dim(PsiTensor(Q)) == 6);
  CHECK(jj_dim(PsiTensor(Q)) == 0);
}

TEST_CASE("invariance under SL2 x SL2") {
  const Field Q = Field::rationals();
  std::mt19937_64 rng(21);
  const std::vector<Mat2> gs = {mat2(Q, 1, 1, 0, 1), mat2(Q, 1, 0, -2, 1), mat2(Q, 2, 1, 1, 1),
                                mat2(Q, 0, -1, 1, 0)};
  for (int t = 0; t < 20; ++t) {
    const PsiTensor psi = random_psi(rng, Q);
    const Mat2& g = gs[rng() % gs.size()];
    const Mat2& h = gs[rng() % gs.size()];
    const PsiTensor conj = orbit_conjugate(psi, g, h);
    CHECK(stab_dim(conj) == stab_dim(psi));
    CHECK(jj_dim(conj) == jj_dim(psi));
  }
  CHECK_THROWS_AS(orbit_conjugate(PsiTensor(Q), mat2(Q, 2, 0, 0, 1), mat2(Q, 1, 0, 0, 1)), DomainError);
}

TEST_CASE("tensor text and Kronecker matrices") {
  const Field Q = Field::rationals();
  const PsiTensor psi = PsiTensor::parse("hh:1,ee:2,ee:1,ff", Q);
  CHECK(psi.at(0, 0) == Q.from_int(3));
  CHECK(psi.at(2, 2) == Q.one());
  CHECK(PsiTensor::parse(psi.to_string(), Q) == psi);
  CHECK(PsiTensor::parse("0", Q).is_zero());
  CHECK(PsiTensor::parse("", Q).to_string() == "0");
  CHECK_THROWS(PsiTensor::parse("ex:1", Q));
  // h⊗h acts diagonally by (1,-1,-1,1).
  const Mat4 k = PsiTensor::parse("hh:1", Q).kronecker();
  const long long diag[4] = {1, -1, -1, 1};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) CHECK(k[i][j] == Q.from_int(i == j ? diag[i] : 0));
  }
  // e⊗f sends y⊗x (index 2) to x⊗y (index 1).
  const Mat4 ef = PsiTensor::parse("ef:1", Q).kronecker();
  CHECK(ef[1][2] == Q.one());
}
