#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace kronbrist {

using Rational = boost::multiprecision::cpp_rational;

/// Exact field context: a prime field GF(p) with 2 <= p < 2^31, or the
/// rationals. Cheap to copy; compared by value.
class FieldSpec {
 public:
  enum class Kind { prime, rationals };

  /// Throws std::invalid_argument unless p is a prime in [2, 2^31).
  static FieldSpec prime(std::uint64_t p);
  static FieldSpec rationals() { return FieldSpec(Kind::rationals, 0); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::prime; }
  std::uint32_t characteristic() const { return p_; }
  /// q = |k|; only defined for prime fields.
  std::uint64_t cardinality() const;

  /// "gf(p)" or "q", the spelling used by the module file format.
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint32_t p_;
};

bool is_prime(std::uint64_t p);

/// An element of a FieldSpec, always stored in canonical form: a residue in
/// [0, p) for GF(p), lowest terms with positive denominator for Q.
class Scalar {
 public:
  Scalar(FieldSpec field, long long value);
  Scalar(FieldSpec field, const Rational& value);

  static Scalar zero(FieldSpec field) { return Scalar(field, 0LL); }
  static Scalar one(FieldSpec field) { return Scalar(field, 1LL); }

  FieldSpec field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  std::uint32_t residue() const { return residue_; }
  const Rational& rational() const { return rational_; }

  Scalar inverse() const;
  std::string to_string() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar operator-() const;
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  FieldSpec field_;
  std::uint32_t residue_ = 0;
  Rational rational_;
};

using Vector = std::vector<Scalar>;

Vector zero_vector(FieldSpec field, std::size_t length);
Vector unit_vector(FieldSpec field, std::size_t length, std::size_t index);

}  // namespace kronbrist
