#include "kronbrist/module.hpp"

#include <stdexcept>

namespace kronbrist {

KroneckerModule::KroneckerModule(std::size_t n, FieldSpec field, std::size_t dim1, std::size_t dim2,
                                 std::vector<Matrix> alphas)
    : field_(field), dim1_(dim1), dim2_(dim2), alphas_(std::move(alphas)) {
  if (n == 0) throw std::invalid_argument("the Kronecker quiver needs at least one arrow");
  if (alphas_.size() != n)
    throw std::invalid_argument("expected " + std::to_string(n) + " structure maps, got " +
                                std::to_string(alphas_.size()));
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix& a = alphas_[i];
    if (!(a.field() == field)) throw std::invalid_argument("structure map over the wrong field");
    if (a.rows() != dim2 || a.cols() != dim1)
      throw std::invalid_argument("alpha " + std::to_string(i + 1) + " has shape " +
                                  std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                  ", expected " + std::to_string(dim2) + "x" + std::to_string(dim1));
  }
}

KroneckerModule KroneckerModule::zero(std::size_t n, FieldSpec field) {
  return KroneckerModule(n, field, 0, 0, std::vector<Matrix>(n, Matrix(field, 0, 0)));
}

KroneckerModule KroneckerModule::simple1(std::size_t n, FieldSpec field) {
  return KroneckerModule(n, field, 1, 0, std::vector<Matrix>(n, Matrix(field, 0, 1)));
}

KroneckerModule KroneckerModule::simple2(std::size_t n, FieldSpec field) {
  return KroneckerModule(n, field, 0, 1, std::vector<Matrix>(n, Matrix(field, 1, 0)));
}

KroneckerModule KroneckerModule::projective1(std::size_t n, FieldSpec field) {
  std::vector<Matrix> alphas;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix a(field, n, 1);
    a.set(i, 0, 1);
    alphas.push_back(std::move(a));
  }
  return KroneckerModule(n, field, 1, n, std::move(alphas));
}

KroneckerModule KroneckerModule::injective2(std::size_t n, FieldSpec field) {
  std::vector<Matrix> alphas;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix a(field, 1, n);
    a.set(0, i, 1);
    alphas.push_back(std::move(a));
  }
  return KroneckerModule(n, field, n, 1, std::move(alphas));
}

void require_compatible(const KroneckerModule& m, const KroneckerModule& n) {
  if (m.n() != n.n())
    throw std::invalid_argument("modules over different quivers: n=" + std::to_string(m.n()) +
                                " vs n=" + std::to_string(n.n()));
  if (!(m.field() == n.field()))
    throw std::invalid_argument("modules over different fields: " + m.field().to_string() + " vs " +
                                n.field().to_string());
}

bool Morphism::intertwines() const {
  if (f1.rows() != target->dim1() || f1.cols() != source->dim1()) return false;
  if (f2.rows() != target->dim2() || f2.cols() != source->dim2()) return false;
  for (std::size_t i = 0; i < source->n(); ++i)
    if (!(f2 * source->alpha(i) == target->alpha(i) * f1)) return false;
  return true;
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (g.source->dims() != f.target->dims()) throw std::invalid_argument("compose: modules do not match");
  return Morphism{f.source, g.target, g.f1 * f.f1, g.f2 * f.f2};
}

SubmodulePair zero_submodule(const KroneckerModule& m) {
  return {Subspace::zero(m.field(), m.dim1()), Subspace::zero(m.field(), m.dim2())};
}

SubmodulePair whole_module(const KroneckerModule& m) {
  return {Subspace::full(m.field(), m.dim1()), Subspace::full(m.field(), m.dim2())};
}

bool is_submodule(const KroneckerModule& m, const SubmodulePair& u) {
  if (u.u1.ambient_dim() != m.dim1() || u.u2.ambient_dim() != m.dim2()) return false;
  if (u.u1.is_zero()) return true;
  for (const Matrix& a : m.alphas())
    if (!u.u2.contains(image_of(a, u.u1))) return false;
  return true;
}

SubmodulePair submodule_sum(const SubmodulePair& u, const SubmodulePair& v) {
  return {subspace_sum(u.u1, v.u1), subspace_sum(u.u2, v.u2)};
}

bool submodule_contains(const SubmodulePair& outer, const SubmodulePair& inner) {
  return outer.u1.contains(inner.u1) && outer.u2.contains(inner.u2);
}

SubmodulePair generated_submodule(const KroneckerModule& m, const Vector& u) {
  if (u.size() != m.dim1()) throw std::invalid_argument("generator is not a vector of M1");
  std::vector<Vector> images;
  for (const Matrix& a : m.alphas()) images.push_back(a.apply(u));
  return {Subspace::span(m.field(), m.dim1(), {u}), Subspace::span(m.field(), m.dim2(), images)};
}

KroneckerModule submodule_as_module(const KroneckerModule& m, const SubmodulePair& u) {
  if (!is_submodule(m, u)) throw std::invalid_argument("not a submodule");
  // Coordinates of a vector of U2 in its RREF basis are its pivot entries.
  const Matrix b1 = u.u1.basis_columns();
  std::vector<Matrix> alphas;
  for (const Matrix& a : m.alphas()) alphas.push_back((a * b1).select_rows(u.u2.pivot_cols()));
  return KroneckerModule(m.n(), m.field(), u.u1.dim(), u.u2.dim(), std::move(alphas));
}

KroneckerModule direct_sum(const KroneckerModule& m, const KroneckerModule& n) {
  require_compatible(m, n);
  std::vector<Matrix> alphas;
  for (std::size_t i = 0; i < m.n(); ++i) alphas.push_back(Matrix::block_diag(m.alpha(i), n.alpha(i)));
  return KroneckerModule(m.n(), m.field(), m.dim1() + n.dim1(), m.dim2() + n.dim2(), std::move(alphas));
}

KroneckerModule direct_sum(const std::vector<KroneckerModule>& summands) {
  if (summands.empty()) throw std::invalid_argument("direct_sum of no modules");
  KroneckerModule acc = summands.front();
  for (std::size_t k = 1; k < summands.size(); ++k) acc = direct_sum(acc, summands[k]);
  return acc;
}

KroneckerModule dual(const KroneckerModule& m) {
  std::vector<Matrix> alphas;
  for (const Matrix& a : m.alphas()) alphas.push_back(a.transpose());
  return KroneckerModule(m.n(), m.field(), m.dim2(), m.dim1(), std::move(alphas));
}

Quotient quotient(const KroneckerModule& m, const SubmodulePair& u) {
  if (!is_submodule(m, u)) throw std::invalid_argument("not a submodule");
  QuotientCoordinates q1 = quotient_coordinates(u.u1);
  QuotientCoordinates q2 = quotient_coordinates(u.u2);
  std::vector<Matrix> alphas;
  for (const Matrix& a : m.alphas()) alphas.push_back(q2.projection * a * q1.section);
  auto src = std::make_shared<const KroneckerModule>(m);
  auto tgt = std::make_shared<const KroneckerModule>(m.n(), m.field(), q1.section.cols(),
                                                     q2.section.cols(), std::move(alphas));
  Morphism proj{src, tgt, q1.projection, q2.projection};
  return {*tgt, std::move(proj)};
}

Layers layers(const KroneckerModule& m) {
  const FieldSpec f = m.field();
  Subspace common_kernel = Subspace::full(f, m.dim1());
  Subspace images = Subspace::zero(f, m.dim2());
  for (const Matrix& a : m.alphas()) {
    common_kernel = subspace_intersection(common_kernel, kernel_basis(a));
    images = subspace_sum(images, image(a));
  }
  Layers l{{common_kernel, Subspace::full(f, m.dim2())},
           {Subspace::zero(f, m.dim1()), images},
           {},
           {}};
  l.top_dims = {static_cast<std::int64_t>(m.dim1()),
                static_cast<std::int64_t>(m.dim2() - images.dim())};
  l.soc_dims = {static_cast<std::int64_t>(common_kernel.dim()), static_cast<std::int64_t>(m.dim2())};
  return l;
}

bool is_faithful(const KroneckerModule& m) {
  if (m.dim1() == 0 || m.dim2() == 0) return false;
  std::vector<Matrix> flat;
  for (const Matrix& a : m.alphas()) flat.push_back(a.vec().transpose());
  return rank(Matrix::vstack(flat, m.field(), m.dim1() * m.dim2())) == m.n();
}

KroneckerModule random_module(std::size_t n, FieldSpec field, std::size_t dim1, std::size_t dim2,
                              Rng& rng) {
  std::vector<Matrix> alphas;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix a(field, dim2, dim1);
    for (std::size_t r = 0; r < dim2; ++r)
      for (std::size_t c = 0; c < dim1; ++c) a.set(r, c, rng.scalar(field));
    alphas.push_back(std::move(a));
  }
  return KroneckerModule(n, field, dim1, dim2, std::move(alphas));
}

}  // namespace kronbrist
