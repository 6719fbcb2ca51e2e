#include "hhcalc/field.hpp"

#include <cctype>
#include <charconv>
#include <vector>

namespace hhcalc {

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : Error(line == 0 ? what
                      : what + " (line " + std::to_string(line) + ", column " +
                            std::to_string(column) + ")"),
      line_(line),
      column_(column) {}

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (e > 0) {
    if (e & 1U) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    e >>= 1U;
  }
  return result;
}

// Residue of a signed GMP integer modulo p.
std::uint64_t reduce_mod(const mpz_class& z, std::uint64_t p) {
  mpz_class r;
  mpz_class modulus;
  mpz_import(modulus.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), modulus.get_mpz_t());
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, r.get_mpz_t());
  return out;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL,
                              31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // Deterministic witness set for all 64-bit integers.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL,
                          37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) throw FieldError("modulus " + std::to_string(p) + " is not prime");
  return Field(Kind::prime_field, p);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long n) const {
  if (is_rational()) return Scalar::rational(mpq_class(static_cast<long>(n)));
  return Scalar::residue(reduce_mod(mpz_class(static_cast<long>(n)), p_), p_);
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (std::isdigit(static_cast<unsigned char>(c)) == 0) return false;
  }
  return true;
}

}  // namespace

Scalar Field::parse_scalar(std::string_view text) const {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
    if (!all_digits(den) || den.front() == '0') {
      throw ParseError("malformed scalar literal '" + std::string(text) + "'");
    }
  }
  if (!all_digits(num)) throw ParseError("malformed scalar literal '" + std::string(text) + "'");

  mpz_class n(std::string(num), 10);
  if (negative) n = -n;
  mpz_class d = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
  if (is_rational()) {
    mpq_class q(n, d);
    q.canonicalize();
    return Scalar::rational(q);
  }
  std::uint64_t dr = reduce_mod(d, p_);
  if (dr == 0) throw DivisionByZero();
  return Scalar::residue(reduce_mod(n, p_), p_) / Scalar::residue(dr, p_);
}

std::string Field::to_string() const {
  return is_rational() ? std::string("rational") : "fp:" + std::to_string(p_);
}

Field parse_field(std::string_view text) {
  if (text == "rational") return Field::rationals();
  if (text.starts_with("fp:")) {
    std::string_view digits = text.substr(3);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw ParseError("malformed field '" + std::string(text) + "'");
    }
    return Field::prime(p);
  }
  throw ParseError("unknown field '" + std::string(text) + "' (expected rational or fp:<p>)");
}

Scalar Scalar::rational(mpq_class q) {
  q.canonicalize();
  return Scalar(std::variant<mpq_class, Residue>(std::move(q)));
}

Scalar Scalar::residue(std::uint64_t value, std::uint64_t p) {
  return Scalar(std::variant<mpq_class, Residue>(Residue{value % p, p}));
}

Field Scalar::field() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return Field(Field::Kind::prime_field, r->p);
  return Field::rationals();
}

bool Scalar::is_zero() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 1 % r->p;
  return std::get<mpq_class>(value_) == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
  const auto* a = std::get_if<Residue>(&value_);
  const auto* b = std::get_if<Residue>(&o.value_);
  if ((a == nullptr) != (b == nullptr) || (a != nullptr && a->p != b->p)) {
    throw FieldError("field mismatch in scalar arithmetic");
  }
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  if (const auto* a = std::get_if<Residue>(&value_)) {
    const auto& b = std::get<Residue>(o.value_);
    std::uint64_t s = a->value + b.value;
    if (s >= a->p || s < a->value) s -= a->p;
    return residue(s, a->p);
  }
  return Scalar(mpq_class(std::get<mpq_class>(value_) + std::get<mpq_class>(o.value_)));
}

Scalar Scalar::operator-() const {
  if (const auto* a = std::get_if<Residue>(&value_)) {
    return residue(a->value == 0 ? 0 : a->p - a->value, a->p);
  }
  return Scalar(mpq_class(-std::get<mpq_class>(value_)));
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  if (const auto* a = std::get_if<Residue>(&value_)) {
    const auto& b = std::get<Residue>(o.value_);
    return residue(mul_mod(a->value, b.value, a->p), a->p);
  }
  return Scalar(mpq_class(std::get<mpq_class>(value_) * std::get<mpq_class>(o.value_)));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (const auto* a = std::get_if<Residue>(&value_)) {
    return residue(pow_mod(a->value, a->p - 2, a->p), a->p);
  }
  return Scalar(mpq_class(1 / std::get<mpq_class>(value_)));
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same_field(o);
  return *this * o.inverse();
}

Scalar Scalar::pow(long long e) const {
  Scalar base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1
                               : static_cast<unsigned long long>(e);
  Scalar result = field().one();
  while (k > 0) {
    if (k & 1U) result *= base;
    base *= base;
    k >>= 1U;
  }
  return result;
}

bool Scalar::operator==(const Scalar& o) const {
  const auto* a = std::get_if<Residue>(&value_);
  const auto* b = std::get_if<Residue>(&o.value_);
  if ((a == nullptr) != (b == nullptr)) return false;
  if (a != nullptr) return a->p == b->p && a->value == b->value;
  return std::get<mpq_class>(value_) == std::get<mpq_class>(o.value_);
}

std::string Scalar::to_string() const {
  if (const auto* a = std::get_if<Residue>(&value_)) return std::to_string(a->value);
  return std::get<mpq_class>(value_).get_str();
}

const mpq_class& Scalar::as_rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw FieldError("scalar is not rational");
}

std::uint64_t Scalar::as_residue() const {
  if (const auto* a = std::get_if<Residue>(&value_)) return a->value;
  throw FieldError("scalar is not a residue");
}

std::optional<Scalar> primitive_root_of_unity(std::uint64_t n, const Field& field) {
  if (n == 0) throw DomainError("root of unity order must be positive");
  if (field.is_rational()) {
    if (n == 1) return field.one();
    if (n == 2) return field.from_int(-1);
    return std::nullopt;
  }
  const std::uint64_t p = field.characteristic();
  if ((p - 1) % n != 0) return std::nullopt;
  const auto factors = prime_factors(n);
  auto has_exact_order = [&](std::uint64_t x) {
    if (pow_mod(x, n, p) != 1) return false;
    for (std::uint64_t r : factors) {
      if (pow_mod(x, n / r, p) == 1) return false;
    }
    return true;
  };
  if (p < (1ULL << 20)) {
    for (std::uint64_t x = 1; x < p; ++x) {
      if (has_exact_order(x)) return Scalar::residue(x, p);
    }
    return std::nullopt;
  }
  for (std::uint64_t x = 2; x < p; ++x) {
    std::uint64_t z = pow_mod(x, (p - 1) / n, p);
    if (has_exact_order(z)) return Scalar::residue(z, p);
  }
  return std::nullopt;
}

}  // namespace hhcalc
