#include <doctest.h>

#include <random>

#include "hhcalc/errors.hpp"
#include "hhcalc/field.hpp"

using namespace hhcalc;

TEST_CASE("field descriptors parse and compare") {
  CHECK(parse_field("rational") == Field::rationals());
  CHECK(parse_field("fp:7") == Field::prime(7));
  CHECK(parse_field("fp:7") != Field::prime(11));
  CHECK_THROWS_AS(parse_field("fp:6"), FieldError);
  CHECK_THROWS_AS(parse_field("fp:1"), FieldError);
  CHECK_THROWS_AS(parse_field("real"), ParseError);
  CHECK_THROWS_AS(parse_field("fp:"), ParseError);
  CHECK(Field::prime(7).to_string() == "fp:7");
}

TEST_CASE("scalar arithmetic is exact") {
  const Field q = Field::rationals();
  CHECK(q.parse_scalar("2/3") / q.parse_scalar("1/3") == q.from_int(2));
  CHECK(q.parse_scalar("4/6").to_string() == "2/3");
  CHECK(q.parse_scalar("-6/4").to_string() == "-3/2");
  CHECK_THROWS(q.parse_scalar("1/0"));
  CHECK_THROWS(q.parse_scalar("-3/-1"));
  CHECK_THROWS(q.parse_scalar("1.5"));
  const Field f7 = Field::prime(7);
  CHECK(f7.from_int(3) * f7.from_int(5) == f7.one());
  CHECK(f7.from_int(-1).to_string() == "6");
  CHECK(f7.parse_scalar("10") == f7.from_int(3));
  CHECK_THROWS_AS(q.one() / q.zero(), DivisionByZero);
  CHECK_THROWS_AS(f7.one() / f7.zero(), DivisionByZero);
  CHECK_THROWS_AS(f7.one() + q.one(), FieldError);
}

TEST_CASE("rationals do not overflow") {
  const Field q = Field::rationals();
  Scalar x = q.from_int(3);
  for (int i = 0; i < 6; ++i) x = x * x;  // 3^64
  CHECK(x.to_string() == "3433683820292512484657849089281");
  CHECK((x / x).is_one());
}

TEST_CASE("primitive roots of unity") {
  CHECK(primitive_root_of_unity(3, Field::prime(7)) == Field::prime(7).from_int(2));
  CHECK(primitive_root_of_unity(4, Field::prime(13)) == Field::prime(13).from_int(5));
  CHECK_FALSE(primitive_root_of_unity(3, Field::rationals()).has_value());
  CHECK(primitive_root_of_unity(2, Field::rationals()) == Field::rationals().from_int(-1));
  CHECK_FALSE(primitive_root_of_unity(5, Field::prime(7)).has_value());
}

TEST_CASE("primitive roots exist exactly when n divides p - 1") {
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97}) {
    const Field f = Field::prime(p);
    for (std::uint64_t n = 1; n <= 12; ++n) {
      // Oracle: exhaustive search over the multiplicative group.
      bool exists = false;
      for (std::uint64_t a = 1; a < p && !exists; ++a) {
        std::uint64_t x = 1;
        std::uint64_t order = 0;
        do {
          x = x * a % p;
          ++order;
        } while (x != 1);
        exists = order == n;
      }
      CHECK(primitive_root_of_unity(n, f).has_value() == exists);
      CHECK(exists == ((p - 1) % n == 0));
    }
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(7);
  for (const Field& f : {Field::rationals(), Field::prime(101), Field::prime(1000003)}) {
    for (int t = 0; t < 200; ++t) {
      auto draw = [&] {
        const long long n = static_cast<long long>(rng() % 41) - 20;
        const long long d = static_cast<long long>(rng() % 9) + 1;
        return f.from_int(n) / f.from_int(d);
      };
      const Scalar a = draw(), b = draw(), c = draw();
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == f.zero());
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
      CHECK(f.parse_scalar(a.to_string()) == a);
    }
  }
}

TEST_CASE("powers") {
  const Field f7 = Field::prime(7);
  CHECK(f7.from_int(2).pow(3).is_one());
  CHECK(f7.from_int(3).pow(6).is_one());
  CHECK(f7.from_int(3).pow(-1) == f7.from_int(5));
  CHECK(Field::rationals().from_int(2).pow(-2) == Field::rationals().parse_scalar("1/4"));
}
