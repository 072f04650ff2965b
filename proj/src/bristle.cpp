#include "kronbrist/bristle.hpp"

#include "kronbrist/homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace kronbrist {

namespace {

void require_finite(FieldSpec field, const char* what) {
  if (!field.is_finite()) throw std::invalid_argument(std::string(what) + " requires a finite field");
}

/// Normalized nonzero vectors of GF(q)^d in lexicographic order.
std::vector<Vector> projective_points(FieldSpec field, std::size_t d) {
  const auto q = static_cast<long long>(field.characteristic());
  std::vector<Vector> points;
  // The leading 1 sits at position lead; later coordinates run over GF(q).
  // A later lead means more leading zeros, hence an earlier point.
  for (std::size_t lead = d; lead-- > 0;) {
    const std::size_t tail = d - lead - 1;
    std::vector<long long> digits(tail, 0);
    while (true) {
      Vector v = zero_vector(field, d);
      v[lead] = Scalar::one(field);
      for (std::size_t k = 0; k < tail; ++k) v[lead + 1 + k] = Scalar(field, digits[k]);
      points.push_back(std::move(v));
      std::size_t pos = tail;
      while (pos > 0) {
        if (++digits[pos - 1] < q) break;
        digits[pos - 1] = 0;
        --pos;
      }
      if (pos == 0) break;
    }
  }
  return points;
}

}  // namespace

BristlePoint::BristlePoint(FieldSpec field, Vector coords) : field_(field), coords_(std::move(coords)) {
  std::size_t lead = 0;
  while (lead < coords_.size() && coords_[lead].is_zero()) ++lead;
  if (lead == coords_.size()) throw std::invalid_argument("a bristle needs a nonzero coordinate vector");
  const Scalar inv = coords_[lead].inverse();
  for (Scalar& c : coords_) c = c * inv;
}

BristlePoint BristlePoint::from_ints(FieldSpec field, const std::vector<long long>& coords) {
  Vector v;
  for (long long c : coords) v.emplace_back(field, c);
  return BristlePoint(field, std::move(v));
}

std::string BristlePoint::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) s += (i ? ":" : "") + coords_[i].to_string();
  return s + ")";
}

KroneckerModule bristle(const BristlePoint& p) {
  std::vector<Matrix> alphas;
  for (const Scalar& c : p.coords()) {
    Matrix a(p.field(), 1, 1);
    a.set(0, 0, c);
    alphas.push_back(std::move(a));
  }
  return KroneckerModule(p.n(), p.field(), 1, 1, std::move(alphas));
}

BristlePoint bristle_point(std::size_t n, FieldSpec field, std::size_t r) {
  if (r < 1 || r > n) throw std::invalid_argument("bristle index out of range");
  std::vector<long long> c(n, 0);
  c[r - 1] = 1;
  return BristlePoint::from_ints(field, c);
}

BristlePoint bristle_point(std::size_t n, FieldSpec field, std::size_t r, std::size_t s) {
  if (r < 1 || r > n || s < 1 || s > n || r == s) throw std::invalid_argument("bristle indices out of range");
  std::vector<long long> c(n, 0);
  c[r - 1] = 1;
  c[s - 1] = 1;
  return BristlePoint::from_ints(field, c);
}

std::vector<BristlePoint> canonical_set(CanonicalSet which, std::size_t n, FieldSpec field) {
  if (n < 3) throw std::invalid_argument("canonical bristle sets need n >= 3");
  auto next = [n](std::size_t r) { return r % n + 1; };
  std::vector<BristlePoint> set;
  switch (which) {
    case CanonicalSet::b0:
    case CanonicalSet::b0_prime:
      set.push_back(bristle_point(n, field, n - 1));
      set.push_back(bristle_point(n, field, n));
      for (std::size_t r = 1; r <= n; ++r) {
        if (which == CanonicalSet::b0_prime && r == n - 1) continue;
        set.push_back(bristle_point(n, field, r, next(r)));
      }
      break;
    case CanonicalSet::b1_prime:
      set.push_back(bristle_point(n, field, 1));
      for (std::size_t r = 1; r <= n; ++r) set.push_back(bristle_point(n, field, r, next(r)));
      break;
  }
  return set;
}

const char* to_string(CanonicalSet which) {
  switch (which) {
    case CanonicalSet::b0: return "B0";
    case CanonicalSet::b0_prime: return "B0'";
    case CanonicalSet::b1_prime: return "B1'";
  }
  return "?";
}

std::vector<BristlePoint> enumerate_bristles(std::size_t n, FieldSpec field) {
  require_finite(field, "enumeration");
  std::vector<BristlePoint> points;
  for (Vector& v : projective_points(field, n)) points.emplace_back(field, std::move(v));
  return points;
}

std::vector<KroneckerModule> bristle_modules(const std::vector<BristlePoint>& points) {
  std::vector<KroneckerModule> out;
  out.reserve(points.size());
  for (const BristlePoint& p : points) out.push_back(bristle(p));
  return out;
}

bool is_bristle_vector(const KroneckerModule& m, const Vector& u) {
  if (u.size() != m.dim1()) throw std::invalid_argument("vector is not in M1");
  bool nonzero = false;
  for (const Scalar& c : u) nonzero = nonzero || !c.is_zero();
  if (!nonzero) throw std::invalid_argument("is_bristle_vector needs a nonzero vector");
  std::vector<Vector> images;
  for (const Matrix& a : m.alphas()) images.push_back(a.apply(u));
  return Subspace::span(m.field(), m.dim2(), images).dim() == 1;
}

std::vector<BristleVarietyPoint> bristle_variety(const KroneckerModule& m, std::size_t limit) {
  require_finite(m.field(), "bristle variety enumeration");
  Subspace common_kernel = Subspace::full(m.field(), m.dim1());
  for (const Matrix& a : m.alphas()) common_kernel = subspace_intersection(common_kernel, kernel_basis(a));
  const KroneckerModule reduced =
      quotient(m, {common_kernel, Subspace::zero(m.field(), m.dim2())}).module;

  const std::size_t d = reduced.dim1();
  double count = 0;
  for (std::size_t k = 0; k < d; ++k) count = count * static_cast<double>(m.field().characteristic()) + 1;
  if (count > static_cast<double>(limit))
    throw std::length_error("bristle variety: " + std::to_string(static_cast<long long>(count)) +
                            " points exceed the enumeration limit");

  std::vector<BristleVarietyPoint> out;
  for (Vector& u : projective_points(m.field(), d)) {
    std::vector<Vector> images;
    for (const Matrix& a : reduced.alphas()) images.push_back(a.apply(u));
    if (Subspace::span(m.field(), reduced.dim2(), images).dim() != 1) continue;
    // images_i = lambda_i w with w the first nonzero image; read lambda_i
    // off the first nonzero coordinate of w.
    std::size_t w = 0;
    while (std::all_of(images[w].begin(), images[w].end(), [](const Scalar& s) { return s.is_zero(); })) ++w;
    std::size_t row = 0;
    while (images[w][row].is_zero()) ++row;
    const Scalar inv = images[w][row].inverse();
    Vector lambda;
    for (const Vector& img : images) lambda.push_back(img[row] * inv);
    out.push_back({std::move(u), BristlePoint(m.field(), std::move(lambda))});
  }
  return out;
}

SubmodulePair maximal_bristled_submodule(const KroneckerModule& m) {
  require_finite(m.field(), "the maximal bristled submodule");
  SubmodulePair t = trace_submodule(bristle_modules(enumerate_bristles(m.n(), m.field())), m);
  t.u2 = Subspace::full(m.field(), m.dim2());
  return t;
}

bool is_bristled(const KroneckerModule& m) { return maximal_bristled_submodule(m).u1.is_full(); }

bool is_saturated_against(const std::vector<KroneckerModule>& bristles, const KroneckerModule& m) {
  for (const KroneckerModule& b : bristles)
    if (ext1_dim(b, m) != 0) return false;
  return true;
}

bool is_saturated(const KroneckerModule& m) {
  if (!m.field().is_finite())
    throw std::invalid_argument("saturation requires finite-field enumeration");
  return is_saturated_against(bristle_modules(enumerate_bristles(m.n(), m.field())), m);
}

KroneckerModule zigzag_bristled_fixture(FieldSpec field) {
  // M1 = <a,b,c>, M2 = <u,v>: a -1-> u, b -2-> u + v, c -3-> v.
  const long long a1[] = {1, 0, 0, 0, 0, 0};
  const long long a2[] = {0, 1, 0, 0, 1, 0};
  const long long a3[] = {0, 0, 0, 0, 0, 1};
  return KroneckerModule(3, field, 3, 2,
                         {Matrix::from_ints(field, 2, 3, a1), Matrix::from_ints(field, 2, 3, a2),
                          Matrix::from_ints(field, 2, 3, a3)});
}

KroneckerModule star_unbristled_fixture(FieldSpec field) {
  // a -1-> u, b -2-> u, c -3-> u, c -1-> v.
  const long long a1[] = {1, 0, 0, 0, 0, 1};
  const long long a2[] = {0, 1, 0, 0, 0, 0};
  const long long a3[] = {0, 0, 1, 0, 0, 0};
  return KroneckerModule(3, field, 3, 2,
                         {Matrix::from_ints(field, 2, 3, a1), Matrix::from_ints(field, 2, 3, a2),
                          Matrix::from_ints(field, 2, 3, a3)});
}

}  // namespace kronbrist
