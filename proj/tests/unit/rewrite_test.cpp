#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "hhcalc/errors.hpp"
#include "hhcalc/families.hpp"
#include "hhcalc/rewrite.hpp"

using namespace hhcalc;

namespace {

Path parse_path(const Quiver& q, const std::vector<std::string>& names) {
  std::vector<std::size_t> idx;
  for (const auto& n : names) idx.push_back(*q.find_arrow(n));
  return Path::from_arrows(q, idx);
}

// Comparable pairs x ≤ y in the face poset, counted straight from the cells.
std::size_t poset_intervals(const CellComplexData& c) {
  std::size_t n = c.vertices.size() + c.edges.size() + c.faces.size();
  n += 2 * c.edges.size();  // vertex < edge
  for (const auto& f : c.faces) {
    n += f.edges.size();                                          // edge < face
    n += std::set<std::size_t>(f.walk.begin(), f.walk.end()).size();  // vertex < face
  }
  return n;
}

}  // namespace

TEST_CASE("deglex order") {
  const auto pres = pi_presentation(Field::rationals());
  const Quiver& q = pres.quiver;
  const PathOrder ord(pres.order, q.arrow_count());
  const Path x1x0 = parse_path(q, {"x1", "x0"});
  const Path y1x0 = parse_path(q, {"y1", "x0"});
  const Path x0 = parse_path(q, {"x0"});
  CHECK(ord.greater(x1x0, x0));
  CHECK_FALSE(ord.greater(x0, x1x0));
  CHECK(ord.greater(x1x0, y1x0) != ord.greater(y1x0, x1x0));
  CHECK_FALSE(ord.greater(x1x0, x1x0));
}

TEST_CASE("Pi normal forms") {
  const auto pres = pi_presentation(Field::rationals());
  const auto a = QuotientAlgebra::from_presentation(pres);
  const Quiver& q = a.quiver();
  const Path lhs = parse_path(q, {"y2", "x1", "x0"});
  const AlgebraElement nf = a.system().normal_form(AlgebraElement::monomial(lhs, a.field().one()));
  CHECK(nf.to_string(q) == "x2*x1*y0");
  CHECK(a.dim() == 24);
  CHECK(a.grading() == std::vector<std::size_t>{4, 6, 8, 6});
  CHECK(a.system().check_confluence().unresolved() == 0);
}

TEST_CASE("normal forms do not depend on the rewriting strategy") {
  const Field Q = Field::rationals();
  std::mt19937_64 rng(5);
  for (const auto& pres : {pi_presentation(Q), family_presentation("torus-s", Q, "2", {}),
                           family_presentation("p1p1", Q, {}, "ee:1,hf:2")}) {
    const auto a = QuotientAlgebra::from_presentation(pres);
    const auto paths = enumerate_paths(a.quiver(), 3);
    for (int t = 0; t < 200; ++t) {
      AlgebraElement e(Q);
      for (int k = 0; k < 3; ++k) {
        const Path& p = paths[rng() % paths.size()];
        e.add_term(p, Q.from_int(static_cast<long long>(rng() % 7) - 3));
      }
      const AlgebraElement fixed = a.system().normal_form(e);
      CHECK(a.system().normal_form(e, rng) == fixed);
      for (const auto& [p, c] : fixed.terms()) CHECK(a.system().is_irreducible(p));
    }
  }
}

TEST_CASE("incidence algebra dimensions match interval counts") {
  const Field Q = Field::rationals();
  const auto ts = QuotientAlgebra::from_presentation(family_presentation("torus-s", Q, "1", {}));
  CHECK(ts.dim() == 168);
  CHECK(ts.dim() == poset_intervals(torus_simplicial_complex()));
  const auto tc = QuotientAlgebra::from_presentation(family_presentation("torus-c", Q, "3", {}));
  CHECK(tc.dim() == 64);
  CHECK(tc.dim() == poset_intervals(torus_cubical_complex()));
  CHECK(ts.system().check_confluence().unresolved() == 0);
  CHECK(tc.system().check_confluence().unresolved() == 0);
  const auto sq = QuotientAlgebra::from_presentation(family_presentation("p1p1", Q, {}, "hh:1"));
  CHECK(sq.dim() == 16);
  CHECK(sq.grading() == std::vector<std::size_t>{4, 8, 4});
}

TEST_CASE("explicit systems are never completed") {
  const auto pres = parse_presentation(read_fixture("nonconfluent.quiver"));
  const auto sys = ReductionSystem::from_presentation(pres);
  const ConfluenceReport rep = sys.check_confluence();
  CHECK_FALSE(rep.confluent);
  CHECK(rep.unresolved() == 1);
  CHECK_THROWS_AS(sys.complete(8), NonConfluentError);
  CHECK_THROWS_AS(QuotientAlgebra::from_presentation(pres), NonConfluentError);
}

TEST_CASE("deglex completion resolves the crafted ambiguity") {
  auto pres = parse_presentation(read_fixture("nonconfluent.quiver"));
  pres.order = OrderPolicy{};
  pres.leading.clear();
  const auto sys = ReductionSystem::from_presentation(pres);
  CHECK(sys.rules().size() == 2);
  std::ostringstream trace;
  const auto done = sys.complete(8, &trace);
  CHECK(done.rules().size() == 3);
  CHECK(done.check_confluence().confluent);
  CHECK_FALSE(trace.str().empty());
  const auto a = QuotientAlgebra::from_system(done);
  CHECK(a.dim() == 10);
  // c*b*a and c*bb*a both vanish in the quotient.
  const Quiver& q = a.quiver();
  for (const auto& w : {std::vector<std::string>{"c", "b", "a"}, {"c", "bb", "a"}}) {
    CHECK(done.normal_form(AlgebraElement::monomial(parse_path(q, w), a.field().one())).is_zero());
  }
}

TEST_CASE("structure constants are associative") {
  const Field F = Field::prime(7);
  const auto a = QuotientAlgebra::from_presentation(family_presentation("torus-c", F, "2", {}));
  std::mt19937_64 rng(3);
  for (int t = 0; t < 400; ++t) {
    const std::size_t i = rng() % a.dim(), j = rng() % a.dim(), k = rng() % a.dim();
    SparseVector bi, bj, bk;
    bi.add(i, F.one());
    bj.add(j, F.one());
    bk.add(k, F.one());
    CHECK(a.multiply(a.multiply(bi, bj), bk) == a.multiply(bi, a.multiply(bj, bk)));
  }
  SparseVector x;
  x.add(rng() % a.dim(), F.from_int(3));
  CHECK(a.multiply(a.unit(), x) == x);
  CHECK(a.multiply(x, a.unit()) == x);
}

TEST_CASE("fixtures") {
  const auto a3 = QuotientAlgebra::from_presentation(parse_presentation(read_fixture("a3_radical_square_zero.quiver")));
  CHECK(a3.dim() == 5);
  CHECK_THROWS_AS(QuotientAlgebra::from_presentation(parse_presentation(read_fixture("loop.quiver"))),
                  InfiniteDimensionalError);
  CHECK_THROWS_AS(parse_presentation(read_fixture("syntax_error.quiver")), ParseError);
  CHECK_THROWS_AS(parse_presentation(read_fixture("nonparallel.quiver")), ParseError);
}

TEST_CASE("relations redundant against earlier rules are dropped") {
  const auto pres = parse_presentation(
      "field rational\nquiver { vertices: 1 2 3 ; arrows: a: 1 -> 2 ; b: 2 -> 3 }\nrelations { b*a ; 2*b*a ; }");
  std::vector<std::string> warnings;
  const auto sys = ReductionSystem::from_presentation(pres, &warnings);
  CHECK(sys.rules().size() == 1);
  CHECK(warnings.size() == 1);
}
