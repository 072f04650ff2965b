#include "kronbrist/subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace kronbrist {

namespace {

void require_compatible(const Subspace& u, const Subspace& v) {
  if (!(u.field() == v.field())) throw std::invalid_argument("subspaces over different fields");
  if (u.ambient_dim() != v.ambient_dim())
    throw std::invalid_argument("subspace ambient dimension mismatch: " +
                                std::to_string(u.ambient_dim()) + " vs " +
                                std::to_string(v.ambient_dim()));
}

}  // namespace

Subspace Subspace::row_span(const Matrix& generators) {
  RrefResult rr = rref(generators);
  Matrix basis = generators.rows() == rr.rank ? std::move(rr.reduced)
                                              : rr.reduced.block(0, 0, rr.rank, generators.cols());
  return Subspace(std::move(basis), std::move(rr.pivot_cols));
}

Subspace Subspace::span(FieldSpec field, std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  return row_span(Matrix::from_rows(field, ambient_dim, vectors));
}

Subspace Subspace::zero(FieldSpec field, std::size_t ambient_dim) {
  return Subspace(Matrix(field, 0, ambient_dim), {});
}

Subspace Subspace::full(FieldSpec field, std::size_t ambient_dim) {
  std::vector<std::size_t> pivots(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) pivots[i] = i;
  return Subspace(Matrix::identity(field, ambient_dim), std::move(pivots));
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (v.size() != ambient_dim()) throw std::invalid_argument("vector length does not match ambient dimension");
  // With an RREF basis, the coefficient of basis row k is v[pivot_k].
  Vector coords;
  coords.reserve(dim());
  for (std::size_t k = 0; k < dim(); ++k) coords.push_back(v[pivots_[k]]);
  Vector back = zero_vector(field(), ambient_dim());
  for (std::size_t k = 0; k < dim(); ++k)
    for (std::size_t c = 0; c < ambient_dim(); ++c)
      if (!basis_.is_zero_at(k, c)) back[c] = back[c] + coords[k] * basis_.at(k, c);
  if (back != v) return std::nullopt;
  return coords;
}

bool Subspace::contains(const Vector& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  require_compatible(*this, other);
  return subspace_sum(*this, other).dim() == dim();
}

Subspace kernel_basis(const Matrix& a) {
  RrefResult rr = rref(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;
  Matrix gens(a.field(), n - rr.rank, n);
  std::size_t row = 0;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    gens.set(row, f, 1);
    for (std::size_t k = 0; k < rr.rank; ++k)
      if (!rr.reduced.is_zero_at(k, f)) gens.set(row, rr.pivot_cols[k], -rr.reduced.at(k, f));
    ++row;
  }
  return Subspace::row_span(gens);
}

Subspace image(const Matrix& a) { return Subspace::column_span(a); }

Subspace image_of(const Matrix& a, const Subspace& u) {
  if (a.cols() != u.ambient_dim()) throw std::invalid_argument("image_of: shape mismatch");
  return Subspace::column_span(a * u.basis_columns());
}

Subspace preimage(const Matrix& a, const Subspace& target) {
  if (a.rows() != target.ambient_dim()) throw std::invalid_argument("preimage: shape mismatch");
  // x with A x in T  <=>  (x, y) in ker [A | -T^cols], projected to x.
  const std::size_t n = a.cols();
  Matrix system = Matrix::hstack({a, -target.basis_columns()}, a.field(), a.rows());
  Subspace k = kernel_basis(system);
  return Subspace::row_span(k.basis().block(0, 0, k.dim(), n));
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  require_compatible(u, v);
  if (v.is_zero()) return u;
  if (u.is_zero()) return v;
  return Subspace::row_span(Matrix::vstack({u.basis(), v.basis()}, u.field(), u.ambient_dim()));
}

Subspace subspace_intersection(const Subspace& u, const Subspace& v) {
  require_compatible(u, v);
  if (u.is_zero() || v.is_zero()) return Subspace::zero(u.field(), u.ambient_dim());
  // a U = b V  <=>  (a, b) in ker [U^T | -V^T]
  Matrix system = Matrix::hstack({u.basis_columns(), -v.basis_columns()}, u.field(), u.ambient_dim());
  Subspace k = kernel_basis(system);
  if (k.is_zero()) return Subspace::zero(u.field(), u.ambient_dim());
  Matrix coeffs = k.basis().block(0, 0, k.dim(), u.dim());
  return Subspace::row_span(coeffs * u.basis());
}

QuotientCoordinates quotient_coordinates(const Subspace& u) {
  const std::size_t d = u.ambient_dim();
  std::vector<bool> is_pivot(d, false);
  for (std::size_t c : u.pivot_cols()) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < d; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  Matrix section(u.field(), d, free_cols.size());
  Matrix projection(u.field(), free_cols.size(), d);
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    section.set(free_cols[k], k, 1);
    projection.set(k, free_cols[k], 1);
  }
  // e_p for a pivot p is congruent to e_p - u_p, which lives on free columns.
  for (std::size_t r = 0; r < u.dim(); ++r) {
    const std::size_t p = u.pivot_cols()[r];
    for (std::size_t k = 0; k < free_cols.size(); ++k)
      if (!u.basis().is_zero_at(r, free_cols[k])) projection.set(k, p, -u.basis().at(r, free_cols[k]));
  }
  return {std::move(projection), std::move(section)};
}

}  // namespace kronbrist
