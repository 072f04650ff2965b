#pragma once

#include "kronbrist/matrix.hpp"
#include "kronbrist/rng.hpp"
#include "kronbrist/subspace.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace kronbrist {

struct DimensionVector {
  std::int64_t a = 0;  // vertex 1
  std::int64_t b = 0;  // vertex 2

  std::string to_string() const { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }
  friend bool operator==(const DimensionVector&, const DimensionVector&) = default;
};

/// A representation (M1, M2; alpha_1..alpha_n) of the n-Kronecker quiver.
/// Each alpha_i is a dim2 x dim1 matrix acting on column vectors M1 -> M2.
class KroneckerModule {
 public:
  /// Throws std::invalid_argument on an arrow count mismatch, n = 0, or a
  /// wrongly shaped / wrong-field matrix.
  KroneckerModule(std::size_t n, FieldSpec field, std::size_t dim1, std::size_t dim2,
                  std::vector<Matrix> alphas);

  static KroneckerModule zero(std::size_t n, FieldSpec field);
  /// S(1) = I(1) = (k, 0; 0, ..., 0)
  static KroneckerModule simple1(std::size_t n, FieldSpec field);
  /// S(2) = P(2) = (0, k; 0, ..., 0)
  static KroneckerModule simple2(std::size_t n, FieldSpec field);
  /// P(1) = (k, k^n; e_1, ..., e_n)
  static KroneckerModule projective1(std::size_t n, FieldSpec field);
  /// I(2) = (k^n, k; coordinate projections)
  static KroneckerModule injective2(std::size_t n, FieldSpec field);

  std::size_t n() const { return alphas_.size(); }
  FieldSpec field() const { return field_; }
  std::size_t dim1() const { return dim1_; }
  std::size_t dim2() const { return dim2_; }
  DimensionVector dims() const {
    return {static_cast<std::int64_t>(dim1_), static_cast<std::int64_t>(dim2_)};
  }
  bool is_zero() const { return dim1_ == 0 && dim2_ == 0; }

  /// 0-based: alpha(0) is the map labelled 1.
  const Matrix& alpha(std::size_t i) const { return alphas_.at(i); }
  const std::vector<Matrix>& alphas() const { return alphas_; }

  friend bool operator==(const KroneckerModule&, const KroneckerModule&) = default;

 private:
  FieldSpec field_;
  std::size_t dim1_;
  std::size_t dim2_;
  std::vector<Matrix> alphas_;
};

void require_compatible(const KroneckerModule& m, const KroneckerModule& n);

/// A pair (f1, f2) with f2 alpha_i^source = alpha_i^target f1 for all i.
struct Morphism {
  std::shared_ptr<const KroneckerModule> source;
  std::shared_ptr<const KroneckerModule> target;
  Matrix f1;  // target.dim1 x source.dim1
  Matrix f2;  // target.dim2 x source.dim2

  bool intertwines() const;
  bool is_isomorphism() const { return is_invertible(f1) && is_invertible(f2); }
};

/// g after f.
Morphism compose(const Morphism& g, const Morphism& f);

/// Subspaces U1 of M1 and U2 of M2.
struct SubmodulePair {
  Subspace u1;
  Subspace u2;

  DimensionVector dims() const {
    return {static_cast<std::int64_t>(u1.dim()), static_cast<std::int64_t>(u2.dim())};
  }
  friend bool operator==(const SubmodulePair&, const SubmodulePair&) = default;
};

SubmodulePair zero_submodule(const KroneckerModule& m);
SubmodulePair whole_module(const KroneckerModule& m);
/// alpha_i(U1) inside U2 for all i, with matching ambient dimensions.
bool is_submodule(const KroneckerModule& m, const SubmodulePair& u);
SubmodulePair submodule_sum(const SubmodulePair& u, const SubmodulePair& v);
bool submodule_contains(const SubmodulePair& outer, const SubmodulePair& inner);
/// The submodule generated by u in M1: (span u, span{alpha_i u}).
SubmodulePair generated_submodule(const KroneckerModule& m, const Vector& u);
/// The submodule U regarded as a module in the RREF bases of U1, U2.
KroneckerModule submodule_as_module(const KroneckerModule& m, const SubmodulePair& u);

/// Block-diagonal structure maps; dims add.
KroneckerModule direct_sum(const KroneckerModule& m, const KroneckerModule& n);
KroneckerModule direct_sum(const std::vector<KroneckerModule>& summands);

/// Vertex-swapping duality: (M2*, M1*; alpha_i^T).
KroneckerModule dual(const KroneckerModule& m);

struct Quotient {
  KroneckerModule module;
  Morphism projection;
};
/// M/U with coordinates on the non-pivot columns of U1, U2. Throws
/// std::invalid_argument("not a submodule") when U is not closed.
Quotient quotient(const KroneckerModule& m, const SubmodulePair& u);

struct Layers {
  SubmodulePair socle;    // (intersection of ker alpha_i, M2)
  SubmodulePair radical;  // (0, sum of im alpha_i)
  DimensionVector top_dims;
  DimensionVector soc_dims;
};
Layers layers(const KroneckerModule& m);

/// Both spaces nonzero and lambda -> sum lambda_i alpha_i injective.
bool is_faithful(const KroneckerModule& m);

/// Uniformly random structure matrices of the given shape.
KroneckerModule random_module(std::size_t n, FieldSpec field, std::size_t dim1, std::size_t dim2,
                              Rng& rng);

}  // namespace kronbrist
