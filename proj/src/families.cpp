#include "kronbrist/families.hpp"

#include "kronbrist/homology.hpp"

#include <stdexcept>

namespace kronbrist {

KroneckerModule preinjective(std::size_t n, std::size_t t, FieldSpec field) {
  KroneckerModule base = (t % 2 == 0) ? KroneckerModule::simple1(n, field) : KroneckerModule::injective2(n, field);
  return ar_translate_power(base, static_cast<std::int64_t>(t / 2));
}

KroneckerModule preprojective(std::size_t n, std::size_t t, FieldSpec field) {
  return dual(preinjective(n, t, field));
}

KroneckerModule n2_preinjective(std::size_t t, FieldSpec field) {
  Matrix a1(field, t, t + 1);
  Matrix a2(field, t, t + 1);
  for (std::size_t i = 0; i < t; ++i) a1.set(i, i, 1);      // e_i -> e'_{i+1}
  for (std::size_t i = 1; i <= t; ++i) a2.set(i - 1, i, 1);  // e_i -> e'_i
  return KroneckerModule(2, field, t + 1, t, {std::move(a1), std::move(a2)});
}

Vector n2_bristle_generator(std::size_t t, FieldSpec field, const ProjectiveParameter& c) {
  Vector m = zero_vector(field, t + 1);
  if (!c) {
    m[t] = Scalar::one(field);
    return m;
  }
  Scalar power = Scalar::one(field);
  for (std::size_t i = 0; i <= t; ++i) {
    m[i] = power;
    power = power * *c;
  }
  return m;
}

BristlePoint n2_bristle(FieldSpec field, const ProjectiveParameter& c) {
  if (!c) return BristlePoint::from_ints(field, {0, 1});
  return BristlePoint(field, {Scalar::one(field), *c});
}

std::vector<ProjectiveParameter> n2_parameters(FieldSpec field) {
  if (!field.is_finite()) throw std::invalid_argument("parameter enumeration requires a finite field");
  std::vector<ProjectiveParameter> out;
  for (std::uint64_t c = 0; c < field.characteristic(); ++c) out.emplace_back(Scalar(field, static_cast<long long>(c)));
  out.emplace_back(std::nullopt);
  return out;
}

}  // namespace kronbrist
