#include <doctest.h>

#include <set>

#include "hhcalc/errors.hpp"
#include "hhcalc/families.hpp"
#include "hhcalc/rewrite.hpp"

using namespace hhcalc;

namespace {

// Solves A x = b over Z/p by plain elimination; nullopt when inconsistent.
std::optional<std::vector<long long>> solve_mod(std::vector<std::vector<long long>> a,
                                                std::vector<long long> b, long long p) {
  const std::size_t rows = a.size(), cols = a.at(0).size();
  auto inv = [p](long long x) {
    for (long long y = 1; y < p; ++y) {
      if (x * y % p == 1) return y;
    }
    return 0LL;
  };
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t k = r;
    while (k < rows && a[k][c] % p == 0) ++k;
    if (k == rows) continue;
    std::swap(a[k], a[r]);
    std::swap(b[k], b[r]);
    const long long s = inv(((a[r][c] % p) + p) % p);
    for (auto& x : a[r]) x = ((x * s) % p + p) % p;
    b[r] = ((b[r] * s) % p + p) % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] % p == 0) continue;
      const long long m = ((a[i][c] % p) + p) % p;
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = ((a[i][j] - m * a[r][j]) % p + p) % p;
      b[i] = ((b[i] - m * b[r]) % p + p) % p;
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (b[i] % p != 0) return std::nullopt;
  }
  std::vector<long long> x(cols, 0);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  return x;
}

// Exponent system of a diagonal arrow rescaling a -> g^{x_a} a carrying the
// relations m - n of I_1 onto m - q n: x(n) - x(m) = s, where q = g^s.
struct ExponentSystem {
  std::vector<std::vector<long long>> rows;
  std::vector<long long> rhs;
};

ExponentSystem exponent_system(const BoundQuiverPresentation& pres, long long s) {
  ExponentSystem sys;
  for (std::size_t i = 0; i < pres.relations.size(); ++i) {
    std::vector<long long> row(pres.quiver.arrow_count(), 0);
    for (const auto& [p, c] : pres.relations[i].terms()) {
      const long long sign = p == pres.leading.at(i) ? -1 : 1;
      for (std::size_t a : p.arrows()) row[a] += sign;
    }
    sys.rows.push_back(row);
    sys.rhs.push_back(s);
  }
  return sys;
}

// Applies the rescaling to every relation of `from` and checks that the image
// lies in the ideal of `to`. Equal quotient dimensions then force equality.
bool rescaling_is_isomorphism(const BoundQuiverPresentation& from, const BoundQuiverPresentation& to,
                              const std::vector<Scalar>& lambda) {
  const auto target = QuotientAlgebra::from_presentation(to);
  for (const auto& rel : from.relations) {
    AlgebraElement image(from.field);
    for (const auto& [p, c] : rel.terms()) {
      Scalar w = c;
      for (std::size_t a : p.arrows()) w *= lambda[a];
      image.add_term(p, w);
    }
    if (!target.system().normal_form(image).is_zero()) return false;
  }
  return QuotientAlgebra::from_presentation(from).dim() == target.dim();
}

}  // namespace

TEST_CASE("cell complexes") {
  const CellComplexData s = torus_simplicial_complex();
  CHECK(s.vertices.size() == 7);
  CHECK(s.edges.size() == 21);
  CHECK(s.faces.size() == 14);
  const CellValidation vs = validate_cells(s);
  CHECK(vs.ok());
  CHECK(vs.euler == 0);
  // The 1-skeleton is the complete graph on seven vertices.
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& e : s.edges) pairs.insert(std::minmax(e.u, e.w));
  CHECK(pairs.size() == 21);

  const CellComplexData c = torus_cubical_complex();
  CHECK(c.vertices.size() == 4);
  CHECK(c.edges.size() == 8);
  CHECK(c.faces.size() == 4);
  CHECK(validate_cells(c).ok());
  CHECK(validate_cells(c).euler == 0);

  CHECK(validate_cells(reverse_orientation(s)).ok());
  CellComplexData broken = s;
  std::swap(broken.faces[0].walk[0], broken.faces[0].walk[1]);
  CHECK_FALSE(validate_cells(broken).ok());
  CHECK_THROWS_AS(incidence_presentation(broken, Field::rationals().one()), ValidationError);
}

TEST_CASE("incidence presentations") {
  const Field Q = Field::rationals();
  const auto s = family_presentation("torus-s", Q, "2", {});
  CHECK(s.quiver.arrow_count() == 84);
  CHECK(s.relations.size() == 42);
  CHECK(s.order.kind == OrderPolicy::Kind::explicit_leading);
  const auto c = family_presentation("torus-c", Q, "2", {});
  CHECK(c.quiver.arrow_count() == 32);
  CHECK(c.relations.size() == 16);
  for (const auto& rel : s.relations) {
    CHECK(rel.size() == 2);
    bool has_q = false;
    for (const auto& [p, x] : rel.terms()) has_q = has_q || x == Q.from_int(-2);
    CHECK(has_q);
  }
  CHECK_THROWS_AS(family_presentation("torus-s", Q, "0", {}), DomainError);
  CHECK_THROWS_AS(family_presentation("pi", Q, "2", {}), DomainError);
  CHECK_THROWS_AS(family_presentation("torus-c", Q, {}, "ee:1"), DomainError);
  CHECK_THROWS_AS(family_presentation("sphere", Q, {}, {}), DomainError);
}

TEST_CASE("angle labels drop along walks and across edges") {
  const CellComplexData cells = torus_simplicial_complex();
  const auto labels = angle_labelling(cells);
  REQUIRE(labels.size() == cells.faces.size());
  for (std::size_t f = 0; f < cells.faces.size(); ++f) {
    for (std::size_t k = 0; k < 3; ++k) CHECK((labels[f][k] + 2) % 3 == labels[f][(k + 1) % 3]);
  }
  for (std::size_t f = 0; f < cells.faces.size(); ++f) {
    const auto& w = cells.faces[f].walk;
    for (std::size_t k = 0; k < 3; ++k) {
      const std::size_t u = w[k], v = w[(k + 1) % 3];
      for (std::size_t g = 0; g < cells.faces.size(); ++g) {
        const auto& w2 = cells.faces[g].walk;
        for (std::size_t j = 0; j < 3; ++j) {
          if (w2[j] == v && w2[(j + 1) % 3] == u) CHECK(labels[g][(j + 1) % 3] == (labels[f][k] + 2) % 3);
        }
      }
    }
  }
  CHECK(labels[0][0] == 0);
}

TEST_CASE("angle functional") {
  const AngleFunctionalResult one = angle_functional(Field::rationals().one());
  CHECK(one.generators == 84);
  CHECK(one.annihilates);
  CHECK(angle_functional(Field::prime(7).from_int(2)).generators == 84);
  CHECK_THROWS_AS(angle_functional(Field::rationals().from_int(2)), DomainError);
}

TEST_CASE("diagonal rescaling identifies the simplicial torus algebras over F_7") {
  const Field F = Field::prime(7);
  const auto base = family_presentation("torus-s", F, "1", {});
  // 3 generates F_7^*; 2 = 3^2 and 4 = 3^4.
  for (const auto& [q, s] : {std::pair<long long, long long>{2, 2}, {4, 4}}) {
    const auto target = family_presentation("torus-s", F, std::to_string(q), {});
    const ExponentSystem sys = exponent_system(target, s);
    std::vector<long long> rhs2, rhs3;
    for (long long b : sys.rhs) {
      rhs2.push_back(b % 2);
      rhs3.push_back(b % 3);
    }
    const auto x2 = solve_mod(sys.rows, rhs2, 2);
    const auto x3 = solve_mod(sys.rows, rhs3, 3);
    REQUIRE(x2.has_value());
    REQUIRE(x3.has_value());
    std::vector<Scalar> lambda;
    for (std::size_t a = 0; a < x2->size(); ++a) {
      const long long x = (3 * (*x2)[a] + 4 * (*x3)[a]) % 6;  // CRT to Z/6
      lambda.push_back(F.from_int(3).pow(x));
    }
    CHECK(rescaling_is_isomorphism(base, target, lambda));
  }
}

TEST_CASE("diagonal rescaling identifies q = -1 with q = 1 over the rationals") {
  const Field Q = Field::rationals();
  for (const char* name : {"torus-s", "torus-c"}) {
    const auto base = family_presentation(name, Q, "1", {});
    const auto target = family_presentation(name, Q, "-1", {});
    const ExponentSystem sys = exponent_system(target, 1);
    const auto x = solve_mod(sys.rows, sys.rhs, 2);
    REQUIRE(x.has_value());
    std::vector<Scalar> lambda;
    for (long long e : *x) lambda.push_back(e ? -Q.one() : Q.one());
    CHECK(rescaling_is_isomorphism(base, target, lambda));
  }
}

TEST_CASE("diagonal rescaling cannot reach q = 2 over the rationals") {
  // The exponent system has a left kernel containing the all-ones vector
  // (every arrow occurs once as leading and once as trailing), so s must
  // satisfy 42 s = 0. Over Z this forces s = 0.
  const auto target = family_presentation("torus-s", Field::rationals(), "2", {});
  const ExponentSystem sys = exponent_system(target, 1);
  std::vector<long long> total(sys.rows.at(0).size(), 0);
  for (const auto& r : sys.rows) {
    for (std::size_t a = 0; a < r.size(); ++a) total[a] += r[a];
  }
  for (long long t : total) CHECK(t == 0);
  CHECK(sys.rows.size() == 42);
}

TEST_CASE("characteristic 2 is refused") {
  const Field F2 = Field::prime(2);
  CHECK_THROWS_AS(family_presentation("p1p1", F2, {}, "0"), DomainError);
  CHECK_THROWS_AS(family_presentation("pi", F2, {}, {}), DomainError);
  CHECK_THROWS_AS(family_presentation("kronecker", F2, {}, {}), DomainError);
}

TEST_CASE("random monomial presentations") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto p = random_monomial_presentation(seed);
    CHECK(p == random_monomial_presentation(seed));
    CHECK(p.quiver.is_acyclic());
    CHECK(p.quiver.vertex_count() >= 2);
    CHECK(p.quiver.vertex_count() <= 5);
    CHECK(p.relations.size() <= 3);
    for (const auto& a : p.quiver.arrows()) CHECK(a.source < a.target);
    for (const auto& r : p.relations) CHECK(r.size() == 1);
  }
}
