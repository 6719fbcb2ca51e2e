#include <doctest.h>

#include <random>

#include "hhcalc/errors.hpp"
#include "hhcalc/families.hpp"
#include "hhcalc/presentation.hpp"

using namespace hhcalc;

namespace {

// Oracle: count paths by dynamic programming over path length.
std::size_t count_paths(const Quiver& q, std::size_t max_len) {
  std::vector<std::size_t> ending(q.vertex_count(), 1);  // length-0 paths ending at v
  std::size_t total = q.vertex_count();
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::size_t> next(q.vertex_count(), 0);
    for (const auto& a : q.arrows()) next[a.target] += ending[a.source];
    for (std::size_t c : next) total += c;
    ending = std::move(next);
  }
  return total;
}

}  // namespace

TEST_CASE("paths compose right to left") {
  const BoundQuiverPresentation pi = pi_presentation(Field::rationals());
  const Quiver& q = pi.quiver;
  const Path x0 = Path::arrow(q, *q.find_arrow("x0"));
  const Path x1 = Path::arrow(q, *q.find_arrow("x1"));
  const Path p = compose(x1, x0);
  CHECK(p.length() == 2);
  CHECK(q.vertex(p.source()) == "1");
  CHECK(q.vertex(p.target()) == "3");
  CHECK(p.to_string(q) == "x1*x0");
  CHECK_THROWS_AS(compose(x0, x1), ValidationError);
  CHECK(compose(Path::trivial(p.target()), p) == p);
  CHECK(compose(p, Path::trivial(p.source())) == p);
  CHECK_THROWS_AS(Path::from_arrows(q, {*q.find_arrow("x0"), *q.find_arrow("x1")}), ValidationError);
}

TEST_CASE("slices and factors") {
  const BoundQuiverPresentation pi = pi_presentation(Field::rationals());
  const Quiver& q = pi.quiver;
  const Path p = Path::from_arrows(q, {*q.find_arrow("y2"), *q.find_arrow("x1"), *q.find_arrow("x0")});
  const Path mid = p.slice(q, 1, 2);
  CHECK(mid.to_string(q) == "x1");
  CHECK(p.find_factor(mid) == 1u);
  CHECK(p.slice(q, 0, 0) == Path::trivial(p.target()));
  CHECK(p.slice(q, 3, 3) == Path::trivial(p.source()));
  CHECK_FALSE(mid.find_factor(p).has_value());
  CHECK_FALSE(p.find_factor(mid, 5).has_value());
}

TEST_CASE("path enumeration counts") {
  const Field Q = Field::rationals();
  const Quiver kron = kronecker_presentation(Q).quiver;
  CHECK(enumerate_paths(kron, 2).size() == 4);
  const Quiver q4 = pi_presentation(Q).quiver;
  const auto paths = enumerate_paths(q4, 3);
  CHECK(paths.size() == 26);
  CHECK(paths.size() == count_paths(q4, 3));
  std::size_t by_len[4] = {0, 0, 0, 0};
  for (const auto& p : paths) ++by_len[p.length()];
  CHECK(by_len[0] == 4);
  CHECK(by_len[1] == 6);
  CHECK(by_len[2] == 8);
  CHECK(by_len[3] == 8);
  for (std::size_t i = 1; i < paths.size(); ++i) CHECK(paths[i - 1].length() <= paths[i].length());
  const Quiver sq = p1p1_presentation(PsiTensor(Q)).quiver;
  CHECK(enumerate_paths(sq, 2).size() == 20);
  CHECK(enumerate_paths(sq, 2).size() == count_paths(sq, 2));
  const Quiver ts = family_presentation("torus-s", Q, "1", {}).quiver;
  CHECK(enumerate_paths(ts, 5).size() == count_paths(ts, 5));
}

TEST_CASE("composition is associative on random composable triples") {
  const Quiver q = pi_presentation(Field::rationals()).quiver;
  const auto paths = enumerate_paths(q, 3);
  std::mt19937_64 rng(11);
  auto ending_at = [&](std::size_t v) {
    std::vector<const Path*> out;
    for (const auto& p : paths) {
      if (p.target() == v) out.push_back(&p);
    }
    return out;
  };
  int tested = 0;
  for (int t = 0; t < 300; ++t) {
    const Path& a = paths[rng() % paths.size()];
    const auto bs = ending_at(a.source());
    const Path& b = *bs[rng() % bs.size()];
    const auto cs = ending_at(b.source());
    const Path& c = *cs[rng() % cs.size()];
    ++tested;
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(compose(a, compose(b, c)).length() == a.length() + b.length() + c.length());
  }
  CHECK(tested > 50);
}

TEST_CASE("free algebra product is bilinear and adds lengths") {
  const Field Q = Field::rationals();
  const Quiver q = pi_presentation(Q).quiver;
  const Path x0 = Path::arrow(q, *q.find_arrow("x0"));
  const Path y0 = Path::arrow(q, *q.find_arrow("y0"));
  const Path x1 = Path::arrow(q, *q.find_arrow("x1"));
  const Path x2 = Path::arrow(q, *q.find_arrow("x2"));
  const AlgebraElement a = AlgebraElement::monomial(x1, Q.from_int(2));
  const AlgebraElement b = AlgebraElement::monomial(x0, Q.one()) + AlgebraElement::monomial(y0, Q.from_int(3));
  const AlgebraElement ab = a * b;
  CHECK(ab.size() == 2);
  CHECK(ab.coefficient(compose(x1, y0)) == Q.from_int(6));
  for (const auto& [p, c] : ab.terms()) CHECK(p.length() == 2);
  // Non-composable products vanish.
  CHECK((AlgebraElement::monomial(x2, Q.one()) * b).is_zero());
  CHECK(a * (b * Q.from_int(2)) == (a * b) * Q.from_int(2));
  CHECK((a - a).is_zero());
}

TEST_CASE("DSL parses the documented example") {
  const auto pres = parse_presentation(R"(field fp:7
quiver { vertices: v1 v2 v3 ; arrows: a: v1 -> v2 ; b: v1 -> v2 ; c: v2 -> v3 }
relations { c*a - 2*c*b ; }
)");
  CHECK(pres.field == Field::prime(7));
  CHECK(pres.quiver.vertex_count() == 3);
  CHECK(pres.quiver.arrow_count() == 3);
  REQUIRE(pres.relations.size() == 1);
  CHECK(pres.relations[0].size() == 2);
  const Quiver& q = pres.quiver;
  const Path cb = Path::from_arrows(q, {*q.find_arrow("c"), *q.find_arrow("b")});
  CHECK(pres.relations[0].coefficient(cb) == Field::prime(7).from_int(-2));
}

TEST_CASE("DSL errors carry positions") {
  try {
    parse_presentation("field rational\nquiver { vertices: 1 2 ; arrows: a: 1 -> 3 }\n");
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() > 0);
  }
  CHECK_THROWS_AS(parse_presentation("field rational\nquiver { vertices: 1 2 ; arrows: a: 1 -> 2 }\nrelations { z*a ; }"), ParseError);
  CHECK_THROWS_AS(parse_presentation("field rational\nquiver { vertices: 1 2 3 ; arrows: a: 1 -> 2 ; b: 2 -> 3 }\nrelations { a*b ; }"), ParseError);
  CHECK_THROWS_AS(parse_presentation("field rational\nquiver { vertices: 1 1 ; arrows: }"), ParseError);
  CHECK_THROWS_AS(parse_presentation("field fp:9\nquiver { vertices: 1 ; arrows: }"), ParseError);
}

TEST_CASE("Kronecker and Pi presentations") {
  const Field Q = Field::rationals();
  const auto kron = parse_presentation(serialize_presentation(kronecker_presentation(Q)));
  CHECK(kron.quiver.vertex_count() == 2);
  CHECK(kron.quiver.arrow_count() == 2);
  CHECK(kron.relations.empty());
  const auto pi = parse_presentation(serialize_presentation(pi_presentation(Q)));
  CHECK(pi.quiver.vertex_count() == 4);
  CHECK(pi.quiver.arrow_count() == 6);
  CHECK(pi.relations.size() == 2);
  for (const auto& r : pi.relations) {
    for (const auto& [p, c] : r.terms()) CHECK(p.length() == 3);
  }
}

TEST_CASE("serialization round trips every built-in family") {
  const Field Q = Field::rationals();
  std::vector<BoundQuiverPresentation> all = {
      family_presentation("torus-s", Q, "2", {}),
      family_presentation("torus-c", Field::prime(13), "5", {}),
      family_presentation("p1p1", Q, {}, "ee:2,ff:2,hh:1"),
      family_presentation("p1p1", Q, {}, "ee:-1/2,hf:3"),
      pi_presentation(Q),
      kronecker_presentation(Field::prime(5)),
      random_monomial_presentation(4),
  };
  for (const auto& p : all) {
    const std::string text = serialize_presentation(p);
    const auto back = parse_presentation(text);
    CHECK(back == p);
    CHECK(serialize_presentation(back) == text);
  }
}

TEST_CASE("zero relations are dropped with a warning") {
  const auto pres = parse_presentation(
      "field rational\nquiver { vertices: 1 2 3 ; arrows: a: 1 -> 2 ; b: 2 -> 3 }\nrelations { b*a - b*a ; b*a ; }");
  CHECK(pres.relations.size() == 1);
  CHECK(pres.warnings.size() == 1);
}
