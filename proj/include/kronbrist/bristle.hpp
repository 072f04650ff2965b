#pragma once

#include "kronbrist/module.hpp"

#include <string>
#include <vector>

namespace kronbrist {

/// A point of P^{n-1}: coordinates scaled so the first nonzero one is 1.
class BristlePoint {
 public:
  /// Throws std::invalid_argument for the zero vector.
  BristlePoint(FieldSpec field, Vector coords);
  static BristlePoint from_ints(FieldSpec field, const std::vector<long long>& coords);

  std::size_t n() const { return coords_.size(); }
  FieldSpec field() const { return field_; }
  const Vector& coords() const { return coords_; }
  /// "(1:0:2)"
  std::string to_string() const;

  friend bool operator==(const BristlePoint& a, const BristlePoint& b) { return a.coords_ == b.coords_; }

 private:
  FieldSpec field_;
  Vector coords_;
};

/// B(lambda) = (k, k; lambda_1, ..., lambda_n).
KroneckerModule bristle(const BristlePoint& p);
/// B(r): alpha_r = 1, the rest 0 (1-based r).
BristlePoint bristle_point(std::size_t n, FieldSpec field, std::size_t r);
/// B(r, s): alpha_r = alpha_s = 1, the rest 0 (1-based, r != s).
BristlePoint bristle_point(std::size_t n, FieldSpec field, std::size_t r, std::size_t s);

enum class CanonicalSet { b0, b0_prime, b1_prime };

/// B0 = {B(n-1), B(n), B(r, r+1) : 1 <= r <= n} (indices mod n);
/// B0' = B0 without B(n-1, n); B1' = {B(1), B(r, r+1)}. Requires n >= 3.
std::vector<BristlePoint> canonical_set(CanonicalSet which, std::size_t n, FieldSpec field);
const char* to_string(CanonicalSet which);

/// All (q^n - 1)/(q - 1) points of P^{n-1}(GF(q)) in lexicographic order of
/// the normalized coordinates.
std::vector<BristlePoint> enumerate_bristles(std::size_t n, FieldSpec field);

std::vector<KroneckerModule> bristle_modules(const std::vector<BristlePoint>& points);

/// alpha_1 u, ..., alpha_n u span a line of M2. Throws for u = 0.
bool is_bristle_vector(const KroneckerModule& m, const Vector& u);

struct BristleVarietyPoint {
  Vector u;  // normalized, in the coordinates of the reduced module's M1
  BristlePoint type;
};

/// Lines <u> of M1 / (intersection of ker alpha_i) whose images span a line,
/// with the induced bristle type. Finite fields only; refuses ambient
/// projective spaces with more than `limit` points.
std::vector<BristleVarietyPoint> bristle_variety(const KroneckerModule& m, std::size_t limit = 1000000);

/// Trace of all bristles plus (0, M2). Finite fields only.
SubmodulePair maximal_bristled_submodule(const KroneckerModule& m);
bool is_bristled(const KroneckerModule& m);

/// Ext^1(B, M) = 0 for every bristle B of the finite field.
bool is_saturated(const KroneckerModule& m);
/// Ext^1(B, M) = 0 for each B in `bristles`.
bool is_saturated_against(const std::vector<KroneckerModule>& bristles, const KroneckerModule& m);

/// The two modules of dimension vector (3,2), n = 3: the first is bristled,
/// the second is not.
KroneckerModule zigzag_bristled_fixture(FieldSpec field);
KroneckerModule star_unbristled_fixture(FieldSpec field);

}  // namespace kronbrist
