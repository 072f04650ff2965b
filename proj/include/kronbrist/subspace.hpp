#pragma once

#include "kronbrist/matrix.hpp"

namespace kronbrist {

/// A subspace of k^ambient_dim, stored as the reduced row-echelon basis
/// (rows are basis vectors). Two subspaces are equal iff their bases are
/// entrywise equal.
class Subspace {
 public:
  /// Span of the rows of `generators` (any spanning set, may be dependent).
  static Subspace row_span(const Matrix& generators);
  /// Span of the columns of `generators`.
  static Subspace column_span(const Matrix& generators) { return row_span(generators.transpose()); }
  static Subspace span(FieldSpec field, std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace zero(FieldSpec field, std::size_t ambient_dim);
  static Subspace full(FieldSpec field, std::size_t ambient_dim);

  FieldSpec field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_dim(); }

  const Matrix& basis() const { return basis_; }
  /// Basis vectors as columns (ambient_dim x dim).
  Matrix basis_columns() const { return basis_.transpose(); }
  const std::vector<std::size_t>& pivot_cols() const { return pivots_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  /// Coordinates of v in the stored basis; nullopt if v is not in the space.
  std::optional<Vector> coordinates(const Vector& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

 private:
  Subspace(Matrix basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// {x : A x = 0} inside k^cols(A).
Subspace kernel_basis(const Matrix& a);
/// Column space of A inside k^rows(A).
Subspace image(const Matrix& a);
/// {x : A x in target} inside k^cols(A).
Subspace preimage(const Matrix& a, const Subspace& target);
/// A(U) inside k^rows(A).
Subspace image_of(const Matrix& a, const Subspace& u);

Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_intersection(const Subspace& u, const Subspace& v);

/// Coordinates of k^d / U on the non-pivot columns of U: the projection
/// matrix ((d - dim U) x d) and the section (d x (d - dim U)) picking those
/// standard basis vectors.
struct QuotientCoordinates {
  Matrix projection;
  Matrix section;
};
QuotientCoordinates quotient_coordinates(const Subspace& u);

}  // namespace kronbrist
