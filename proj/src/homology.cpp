#include "kronbrist/homology.hpp"

#include <stdexcept>

namespace kronbrist {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("dimension vector overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("dimension vector overflow");
  return r;
}

/// Coefficient matrix of (vec f1, vec f2) -> (vec(f2 alpha_i^M - alpha_i^N f1))_i.
Matrix intertwining_system(const KroneckerModule& m, const KroneckerModule& n) {
  const FieldSpec f = m.field();
  const std::size_t unknowns1 = n.dim1() * m.dim1();
  const std::size_t unknowns2 = n.dim2() * m.dim2();
  const std::size_t eq_rows = n.dim2() * m.dim1();
  std::vector<Matrix> blocks;
  for (std::size_t i = 0; i < m.n(); ++i) {
    // vec(B f1) = (I (x) B) vec f1,  vec(f2 A) = (A^T (x) I) vec f2
    Matrix left = -Matrix::kronecker(Matrix::identity(f, m.dim1()), n.alpha(i));
    Matrix right = Matrix::kronecker(m.alpha(i).transpose(), Matrix::identity(f, n.dim2()));
    blocks.push_back(Matrix::hstack({left, right}, f, eq_rows));
  }
  return Matrix::vstack(blocks, f, unknowns1 + unknowns2);
}

Morphism morphism_from_solution(const std::shared_ptr<const KroneckerModule>& src,
                                const std::shared_ptr<const KroneckerModule>& tgt, const Matrix& x) {
  const std::size_t u1 = tgt->dim1() * src->dim1();
  const std::size_t u2 = tgt->dim2() * src->dim2();
  return Morphism{src, tgt, Matrix::unvec(x.block(0, 0, u1, 1), tgt->dim1(), src->dim1()),
                  Matrix::unvec(x.block(u1, 0, u2, 1), tgt->dim2(), src->dim2())};
}

/// Row blocks [k*size, (k+1)*size) of a stacked map.
Matrix row_block(const Matrix& m, std::size_t k, std::size_t size) { return m.block(k * size, 0, size, m.cols()); }

}  // namespace

std::int64_t euler_form(const DimensionVector& x, const DimensionVector& y, std::size_t n) {
  return x.a * y.a + x.b * y.b - static_cast<std::int64_t>(n) * x.a * y.b;
}

DimensionVector coxeter_apply(const DimensionVector& x, std::size_t n, std::int64_t power) {
  const auto nn = static_cast<std::int64_t>(n);
  DimensionVector v = x;
  for (std::int64_t k = 0; k < power; ++k)
    v = {checked_sub(checked_sub(checked_mul(checked_mul(nn, nn), v.a), checked_mul(nn, v.b)), v.a),
         checked_sub(checked_mul(nn, v.a), v.b)};
  for (std::int64_t k = 0; k > power; --k)
    v = {checked_sub(checked_mul(nn, v.b), v.a),
         checked_sub(checked_mul(checked_sub(checked_mul(nn, nn), 1), v.b), checked_mul(nn, v.a))};
  return v;
}

std::vector<Morphism> hom_basis(const KroneckerModule& m, const KroneckerModule& n) {
  require_compatible(m, n);
  auto src = std::make_shared<const KroneckerModule>(m);
  auto tgt = std::make_shared<const KroneckerModule>(n);
  Subspace k = kernel_basis(intertwining_system(m, n));
  std::vector<Morphism> basis;
  basis.reserve(k.dim());
  const Matrix cols = k.basis_columns();
  for (std::size_t j = 0; j < k.dim(); ++j)
    basis.push_back(morphism_from_solution(src, tgt, cols.block(0, j, cols.rows(), 1)));
  return basis;
}

std::size_t hom_dim(const KroneckerModule& m, const KroneckerModule& n) {
  require_compatible(m, n);
  const Matrix system = intertwining_system(m, n);
  return system.cols() - rank(system);
}

std::size_t end_dim(const KroneckerModule& m) { return hom_dim(m, m); }

std::size_t ext1_dim(const KroneckerModule& m, const KroneckerModule& n) {
  const auto hom = static_cast<std::int64_t>(hom_dim(m, n));
  const std::int64_t ext = hom - euler_form(m.dims(), n.dims(), m.n());
  if (ext < 0)
    throw std::logic_error("internal inconsistency: dim Hom below the Euler form (" +
                           std::to_string(hom) + " < " +
                           std::to_string(euler_form(m.dims(), n.dims(), m.n())) + ")");
  return static_cast<std::size_t>(ext);
}

std::size_t ext1_dim_via_resolution(const KroneckerModule& m, const KroneckerModule& n) {
  require_compatible(m, n);
  const FieldSpec f = m.field();
  const std::size_t arrows = m.n();
  const std::size_t d1 = m.dim1();
  const std::size_t d2 = m.dim2();

  // P0 = P(1) (x) M1  (+)  P(2) (x) M2, with vertex-2 coordinates
  // [path alpha_i applied to M1 for each i | M2].
  std::vector<Matrix> p0_alphas;
  for (std::size_t i = 0; i < arrows; ++i) {
    Matrix a(f, arrows * d1 + d2, d1);
    a.set_block(i * d1, 0, Matrix::identity(f, d1));
    p0_alphas.push_back(std::move(a));
  }
  auto p0 = std::make_shared<const KroneckerModule>(arrows, f, d1, arrows * d1 + d2, std::move(p0_alphas));
  // P1 = P(2) (x) (M1 per arrow)
  auto p1 = std::make_shared<const KroneckerModule>(arrows, f, 0, arrows * d1,
                                                    std::vector<Matrix>(arrows, Matrix(f, arrows * d1, 0)));
  auto target = std::make_shared<const KroneckerModule>(m);

  Matrix stacked = Matrix::hstack(m.alphas(), f, d2);  // [alpha_1 | ... | alpha_n]
  Morphism inclusion{p1, p0, Matrix(f, d1, 0),
                     Matrix::vstack({Matrix::identity(f, arrows * d1), -stacked}, f, arrows * d1)};
  Morphism cover{p0, target, Matrix::identity(f, d1), Matrix::hstack({stacked, Matrix::identity(f, d2)}, f, d2)};
  if (!inclusion.intertwines() || !cover.intertwines() || !compose(cover, inclusion).f2.is_zero())
    throw std::logic_error("projective presentation is not a complex");

  const std::size_t hom_p1 = hom_basis(*p1, n).size();
  std::vector<Matrix> restricted;
  for (const Morphism& phi : hom_basis(*p0, n)) {
    Morphism r = compose(phi, inclusion);
    restricted.push_back(Matrix::vstack({r.f1.vec(), r.f2.vec()}, f, 1));
  }
  std::size_t image_dim = 0;
  if (!restricted.empty()) image_dim = rank(Matrix::hstack(restricted, f, restricted.front().rows()));
  return hom_p1 - image_dim;
}

SubmodulePair trace_submodule(const std::vector<KroneckerModule>& generators, const KroneckerModule& m) {
  const FieldSpec f = m.field();
  std::vector<Matrix> images1, images2;
  for (const KroneckerModule& g : generators) {
    for (const Morphism& phi : hom_basis(g, m)) {
      images1.push_back(phi.f1);
      images2.push_back(phi.f2);
    }
  }
  SubmodulePair trace = zero_submodule(m);
  if (!images1.empty()) {
    trace.u1 = image(Matrix::hstack(images1, f, m.dim1()));
    trace.u2 = image(Matrix::hstack(images2, f, m.dim2()));
  }
  return trace;
}

bool is_generated_by(const std::vector<KroneckerModule>& generators, const KroneckerModule& m) {
  SubmodulePair t = trace_submodule(generators, m);
  return t.u1.is_full() && t.u2.is_full();
}

KroneckerModule ar_translate(const KroneckerModule& m, Translate direction) {
  const FieldSpec f = m.field();
  const std::size_t arrows = m.n();
  std::vector<Matrix> alphas;

  if (direction == Translate::tau) {
    // Sink 2: V2' = ker [alpha_1 ... alpha_n] in M1^n; reversed arrows are
    // the block projections beta_i : V2' -> M1.
    const Matrix k2 = kernel_basis(Matrix::hstack(m.alphas(), f, m.dim2())).basis_columns();
    const std::size_t r = k2.cols();
    std::vector<Matrix> betas;
    for (std::size_t i = 0; i < arrows; ++i) betas.push_back(row_block(k2, i, m.dim1()));
    // Sink 1: V1' = ker [beta_1 ... beta_n] in V2'^n; the new alpha_i are
    // the block projections V1' -> V2'.
    const Matrix k1 = kernel_basis(Matrix::hstack(betas, f, m.dim1())).basis_columns();
    const std::size_t s = k1.cols();
    for (std::size_t i = 0; i < arrows; ++i) alphas.push_back(row_block(k1, i, r));
    return KroneckerModule(arrows, f, s, r, std::move(alphas));
  }

  // Source 1: V1' = coker (M1 -> M2^n); the reversed arrows are the block
  // inclusions M2 -> M2^n followed by the projection.
  const Matrix c1 = Matrix::vstack(m.alphas(), f, m.dim1());
  const Matrix q1 = quotient_coordinates(image(c1)).projection;
  const std::size_t r = q1.rows();
  std::vector<Matrix> gammas;
  for (std::size_t i = 0; i < arrows; ++i) gammas.push_back(q1.block(0, i * m.dim2(), r, m.dim2()));
  // Source 2: V2' = coker (M2 -> V1'^n); the new alpha_i : V1' -> V2' are
  // block inclusions followed by the projection.
  const Matrix c2 = Matrix::vstack(gammas, f, m.dim2());
  const Matrix q2 = quotient_coordinates(image(c2)).projection;
  const std::size_t s = q2.rows();
  for (std::size_t i = 0; i < arrows; ++i) alphas.push_back(q2.block(0, i * r, s, r));
  return KroneckerModule(arrows, f, r, s, std::move(alphas));
}

KroneckerModule ar_translate_power(const KroneckerModule& m, std::int64_t t) {
  KroneckerModule x = m;
  for (std::int64_t k = 0; k < t; ++k) x = ar_translate(x, Translate::tau);
  for (std::int64_t k = 0; k > t; --k) x = ar_translate(x, Translate::tau_inverse);
  return x;
}

IsoResult find_isomorphism(const KroneckerModule& m, const KroneckerModule& n, std::size_t attempts,
                           std::uint64_t seed) {
  require_compatible(m, n);
  using S = IsoResult::Status;
  if (m.dims() != n.dims()) return {S::verified_non_iso, std::nullopt};
  if (m.is_zero()) {
    auto src = std::make_shared<const KroneckerModule>(m);
    auto tgt = std::make_shared<const KroneckerModule>(n);
    return {S::verified_iso, Morphism{src, tgt, Matrix(m.field(), 0, 0), Matrix(m.field(), 0, 0)}};
  }
  std::vector<Morphism> basis = hom_basis(m, n);
  if (basis.empty() || basis.size() != hom_dim(n, m)) return {S::verified_non_iso, std::nullopt};

  for (const Morphism& phi : basis)
    if (phi.is_isomorphism()) return {S::verified_iso, phi};
  // A brick M with dim Hom(M, N) = 1: if N were isomorphic to M, every
  // nonzero morphism would be invertible.
  if (basis.size() == 1 && end_dim(m) == 1) return {S::verified_non_iso, std::nullopt};

  Rng rng(seed);
  for (std::size_t t = 0; t < attempts; ++t) {
    Morphism candidate = basis.front();
    Matrix f1 = Matrix::zeros(m.field(), n.dim1(), m.dim1());
    Matrix f2 = Matrix::zeros(m.field(), n.dim2(), m.dim2());
    for (const Morphism& phi : basis) {
      const Scalar c = rng.scalar(m.field());
      f1 = f1 + phi.f1.scaled(c);
      f2 = f2 + phi.f2.scaled(c);
    }
    candidate.f1 = std::move(f1);
    candidate.f2 = std::move(f2);
    if (candidate.is_isomorphism()) return {S::verified_iso, candidate};
  }
  return {S::unknown, std::nullopt};
}

const char* to_string(IsoResult::Status status) {
  switch (status) {
    case IsoResult::Status::verified_iso: return "verified-iso";
    case IsoResult::Status::verified_non_iso: return "verified-non-iso";
    case IsoResult::Status::unknown: return "unknown";
  }
  return "unknown";
}

}  // namespace kronbrist
