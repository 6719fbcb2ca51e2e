#include <doctest.h>

#include <memory>
#include <random>

#include "fixtures.hpp"
#include "hhcalc/errors.hpp"
#include "hhcalc/families.hpp"
#include "hhcalc/hochschild.hpp"

using namespace hhcalc;

namespace {

std::shared_ptr<const QuotientAlgebra> algebra(const BoundQuiverPresentation& p) {
  return std::make_shared<const QuotientAlgebra>(QuotientAlgebra::from_presentation(p));
}

// Oracle for HH^0 and HH^1 straight from structure constants: the center,
// and all derivations modulo inner ones (dim Der - dim A + dim Z).
struct LowDegree {
  std::size_t center;
  std::size_t hh1;
};

LowDegree low_degree_oracle(const QuotientAlgebra& a) {
  const std::size_t n = a.dim();
  const Field& f = a.field();
  // Center: unknown z = Σ z_k b_k with z b_i - b_i z = 0.
  SparseMatrix c(n * n, n, f);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      SparseVector diff = a.product(k, i);
      diff.axpy(-f.one(), a.product(i, k));
      for (const auto& [r, x] : diff) c.add(i * n + r, k, x);
    }
  }
  const std::size_t center = n - rank(c);
  // Derivations: unknown D(b_j) = Σ D[k][j] b_k, column index k * n + j.
  // D(b_i b_j) - D(b_i) b_j - b_i D(b_j) = 0 for all i, j.
  SparseMatrix d((n * n) * n, n * n, f);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t row0 = (i * n + j) * n;
      for (const auto& [m, x] : a.product(i, j)) {
        for (std::size_t k = 0; k < n; ++k) d.add(row0 + k, k * n + m, x);
      }
      for (std::size_t k = 0; k < n; ++k) {
        for (const auto& [r, x] : a.product(k, j)) d.add(row0 + r, k * n + i, -x);
        for (const auto& [r, x] : a.product(i, k)) d.add(row0 + r, k * n + j, -x);
      }
    }
  }
  const std::size_t der = n * n - rank(d);
  return {center, der - n + center};
}

std::vector<std::size_t> hh_dims(const BoundQuiverPresentation& p, std::size_t nmax = 2) {
  return hh_report(p, nmax).hh;
}

}  // namespace

TEST_CASE("HH^0 and HH^1 agree with the derivation oracle") {
  const Field Q = Field::rationals();
  const std::vector<BoundQuiverPresentation> cases = {
      kronecker_presentation(Q),
      parse_presentation(read_fixture("a3_radical_square_zero.quiver")),
      family_presentation("p1p1", Q, {}, "0"),
      family_presentation("p1p1", Q, {}, "ee:2,ff:2,hh:1"),
      family_presentation("p1p1", Field::prime(5), {}, "ee:1,ef:1,fe:1,hh:3"),
      pi_presentation(Q),
      random_monomial_presentation(3),
  };
  for (const auto& p : cases) {
    const auto a = algebra(p);
    const LowDegree oracle = low_degree_oracle(*a);
    const Hochschild hh(a, 1);
    CHECK(hh.cohomology().dim(0) == oracle.center);
    CHECK(hh.cohomology().dim(1) == oracle.hh1);
  }
}

TEST_CASE("small examples") {
  const Field Q = Field::rationals();
  CHECK(hh_dims(kronecker_presentation(Q)) == std::vector<std::size_t>{1, 3, 0});
  CHECK(hh_dims(parse_presentation(read_fixture("a3_radical_square_zero.quiver"))) ==
        std::vector<std::size_t>{1, 0, 0});
  const HHReport r = hh_report(family_presentation("p1p1", Q, {}, "0"), 2);
  CHECK(r.hh == std::vector<std::size_t>{1, 6, 9});
  REQUIRE(r.small_dims.has_value());
  CHECK(*r.small_dims == std::vector<std::size_t>{4, 16, 16});
  CHECK(r.d_squared_zero);
  CHECK(r.euler_ok);
  CHECK(r.complexes_agree);
}

TEST_CASE("bar complex dimensions") {
  const Field Q = Field::rationals();
  const auto a = algebra(kronecker_presentation(Q));
  const BarComplex bar(a, 2);
  // C^0: two vertices, C^1: arrows x, y each parallel to two paths,
  // no composable radical pairs beyond that.
  CHECK(bar.term_dims() == std::vector<std::size_t>{2, 4, 0, 0});
  CHECK(differentials_square_to_zero(bar.differentials()));
  const BarComplex pi(algebra(pi_presentation(Q)), 3);
  CHECK(pi.term_dims() == std::vector<std::size_t>{4, 80, 128, 48, 0});
}

TEST_CASE("cochain operations") {
  const Field Q = Field::rationals();
  const auto a = algebra(family_presentation("p1p1", Q, {}, "0"));
  const Hochschild hh(a, 2);
  CHECK(hh.cup_rank(1, 1) == 9);
  CHECK(hh.bracket_rank(1, 1) == 6);
  const auto one = hh.classes(1);
  REQUIRE(one.size() == 6);
  for (std::size_t i = 0; i < one.size(); ++i) {
    for (std::size_t j = 0; j < one.size(); ++j) {
      // Graded commutativity in degree (1,1) and bracket antisymmetry.
      const auto ab = hh.cup(one[i], one[j]).coordinates;
      const auto ba = hh.cup(one[j], one[i]).coordinates;
      REQUIRE(ab.size() == ba.size());
      for (std::size_t k = 0; k < ab.size(); ++k) CHECK(ab[k] == -ba[k]);
      const auto lb = hh.bracket(one[i], one[j]).coordinates;
      const auto rb = hh.bracket(one[j], one[i]).coordinates;
      for (std::size_t k = 0; k < lb.size(); ++k) CHECK(lb[k] == -rb[k]);
    }
  }
  // The unit of HH^0 acts trivially.
  const auto zero = hh.classes(0);
  REQUIRE(zero.size() == 1);
  for (const auto& x : one) CHECK(hh.cup(zero[0], x).coordinates == x.coordinates);
}

TEST_CASE("torus cup and bracket") {
  const Field Q = Field::rationals();
  const Hochschild hh(algebra(family_presentation("torus-s", Q, "1", {})), 2);
  CHECK(hh.cohomology().dims() == std::vector<std::size_t>{1, 2, 1});
  CHECK(hh.cup_rank(1, 1) == 1);
  CHECK(hh.bracket_rank(1, 1) == 0);
  for (const auto& x : hh.classes(1)) {
    for (const auto& c : hh.cup(x, x).coordinates) CHECK(c.is_zero());
  }
}

TEST_CASE("the injected fault breaks d∘d") {
  const Field Q = Field::rationals();
  Hochschild hh(algebra(family_presentation("p1p1", Q, {}, "0")), 2);
  CHECK(differentials_square_to_zero(hh.bar().differentials()));
  REQUIRE(hh.inject_fault());
  CHECK_FALSE(differentials_square_to_zero(hh.bar().differentials()));
  CHECK_THROWS_AS(hh_report(hh), ConsistencyError);
}

TEST_CASE("cohomology of a hand-made complex") {
  const Field Q = Field::rationals();
  // k -> k^2 -> k, d0 = (1,1)^T, d1 = (1,-1): exact in the middle.
  SparseMatrix d0(2, 1, Q), d1(1, 2, Q);
  d0.add(0, 0, Q.one());
  d0.add(1, 0, Q.one());
  d1.add(0, 0, Q.one());
  d1.add(0, 1, -Q.one());
  const Cohomology h({1, 2, 1}, {d0, d1}, 2, Q);
  CHECK(h.dims() == std::vector<std::size_t>{0, 0, 0});
  SparseVector z;
  z.add(0, Q.one());
  z.add(1, Q.one());
  CHECK(h.is_coboundary(1, z));
  SparseVector w;
  w.add(0, Q.one());
  CHECK_THROWS_AS(h.coordinates(1, w), DomainError);
}
