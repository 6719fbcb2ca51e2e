#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "hhcalc/errors.hpp"

namespace hhcalc {

class Scalar;

/// The ground field: the rationals or F_p for a word-sized prime p.
class Field {
 public:
  enum class Kind { rationals, prime_field };

  static Field rationals() { return Field(Kind::rationals, 0); }
  /// Throws FieldError unless p is prime.
  static Field prime(std::uint64_t p);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::rationals; }
  /// p for prime fields, 0 for the rationals.
  std::uint64_t characteristic() const { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long n) const;
  /// Parses `-?[0-9]+` or `-?[0-9]+/[1-9][0-9]*`; fractions are inverted mod p.
  Scalar parse_scalar(std::string_view text) const;

  /// "rational" or "fp:<p>".
  std::string to_string() const;

  bool operator==(const Field&) const = default;

 private:
  friend class Scalar;
  Field(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint64_t p_;
};

/// Accepts `rational` or `fp:<n>`.
Field parse_field(std::string_view text);

bool is_prime(std::uint64_t n);

/// An exact element of a Field. Rationals are always reduced with positive
/// denominator (GMP canonical form); residues lie in [0, p).
class Scalar {
 public:
  /// Rational zero. Prefer Field::zero() where the field is known.
  Scalar() : value_(mpq_class(0)) {}

  static Scalar rational(mpq_class q);
  static Scalar residue(std::uint64_t value, std::uint64_t p);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar inverse() const;
  /// Integer power; negative exponents invert.
  Scalar pow(long long e) const;

  bool operator==(const Scalar& o) const;

  std::string to_string() const;

  /// Rational value; throws FieldError for residues.
  const mpq_class& as_rational() const;
  /// Residue value; throws FieldError for rationals.
  std::uint64_t as_residue() const;

 private:
  struct Residue {
    std::uint64_t value;
    std::uint64_t p;
  };
  explicit Scalar(std::variant<mpq_class, Residue> v) : value_(std::move(v)) {}
  void check_same_field(const Scalar& o) const;

  std::variant<mpq_class, Residue> value_;
};

/// Some ζ with ζ^n = 1 and ζ^k != 1 for 0 < k < n, or nullopt when the field
/// has none. Over F_p with p < 2^20 this is the smallest such residue.
std::optional<Scalar> primitive_root_of_unity(std::uint64_t n, const Field& field);

}  // namespace hhcalc
