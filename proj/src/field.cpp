#include "kronbrist/field.hpp"

#include "field_ops.hpp"

#include <stdexcept>

namespace kronbrist {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
    throw std::invalid_argument("field characteristic must be a prime below 2^31, got " +
                                std::to_string(p));
  return FieldSpec(Kind::prime, static_cast<std::uint32_t>(p));
}

std::uint64_t FieldSpec::cardinality() const {
  if (!is_finite()) throw std::logic_error("the rationals have no finite cardinality");
  return p_;
}

std::string FieldSpec::to_string() const {
  return is_finite() ? "gf(" + std::to_string(p_) + ")" : "q";
}

Scalar::Scalar(FieldSpec field, long long value) : field_(field) {
  if (field.is_finite()) {
    residue_ = detail::PrimeOps{field.characteristic()}.from_int(value);
  } else {
    rational_ = value;
  }
}

Scalar::Scalar(FieldSpec field, const Rational& value) : field_(field) {
  if (field.is_finite()) {
    detail::PrimeOps ops{field.characteristic()};
    using boost::multiprecision::cpp_int;
    const cpp_int p = field.characteristic();
    cpp_int num = boost::multiprecision::numerator(value) % p;
    cpp_int den = boost::multiprecision::denominator(value) % p;
    if (num < 0) num += p;
    if (den == 0) throw std::domain_error("denominator vanishes in " + field.to_string());
    residue_ = ops.mul(static_cast<std::uint32_t>(num), ops.inv(static_cast<std::uint32_t>(den)));
  } else {
    rational_ = value;
  }
}

bool Scalar::is_zero() const { return field_.is_finite() ? residue_ == 0 : rational_ == 0; }
bool Scalar::is_one() const { return field_.is_finite() ? residue_ == 1 : rational_ == 1; }

namespace {
void require_same(const Scalar& a, const Scalar& b) {
  if (!(a.field() == b.field())) throw std::invalid_argument("scalars from different fields");
}
}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  Scalar r = a;
  if (a.field_.is_finite())
    r.residue_ = detail::PrimeOps{a.field_.characteristic()}.add(a.residue_, b.residue_);
  else
    r.rational_ = a.rational_ + b.rational_;
  return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  Scalar r = a;
  if (a.field_.is_finite())
    r.residue_ = detail::PrimeOps{a.field_.characteristic()}.mul(a.residue_, b.residue_);
  else
    r.rational_ = a.rational_ * b.rational_;
  return r;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (field_.is_finite())
    r.residue_ = detail::PrimeOps{field_.characteristic()}.neg(residue_);
  else
    r.rational_ = -rational_;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  Scalar r = *this;
  if (field_.is_finite())
    r.residue_ = detail::PrimeOps{field_.characteristic()}.inv(residue_);
  else
    r.rational_ = 1 / rational_;
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.field_.is_finite() ? a.residue_ == b.residue_ : a.rational_ == b.rational_;
}

std::string Scalar::to_string() const {
  if (field_.is_finite()) return std::to_string(residue_);
  return rational_.str();
}

Vector zero_vector(FieldSpec field, std::size_t length) {
  return Vector(length, Scalar::zero(field));
}

Vector unit_vector(FieldSpec field, std::size_t length, std::size_t index) {
  Vector v = zero_vector(field, length);
  v.at(index) = Scalar::one(field);
  return v;
}

}  // namespace kronbrist
