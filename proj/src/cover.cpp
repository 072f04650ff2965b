#include "kronbrist/cover.hpp"

#include "kronbrist/bristle.hpp"
#include "kronbrist/families.hpp"
#include "kronbrist/homology.hpp"

#include <stdexcept>

namespace kronbrist {

namespace {

std::size_t wrap(std::size_t i, std::size_t n) { return (i + n - 1) % n + 1; }

void require_vertex(const CoverRep& x, const TreeVertex& v) {
  if (!x.in_support(v)) throw std::invalid_argument("vertex " + v.to_string() + " is not in the support");
}

std::string bristle_name(std::size_t r) { return "B(" + std::to_string(r) + ")"; }
std::string bristle_name(std::size_t r, std::size_t s) {
  return "B(" + std::to_string(r) + "," + std::to_string(s) + ")";
}

bool is_iso_to(const KroneckerModule& m, const KroneckerModule& n, std::size_t attempts) {
  return find_isomorphism(m, n, attempts).status == IsoResult::Status::verified_iso;
}

SubmodulePair sum_all(const KroneckerModule& m, const std::vector<SubmodulePair>& parts) {
  SubmodulePair acc = zero_submodule(m);
  for (const SubmodulePair& p : parts) acc = submodule_sum(acc, p);
  return acc;
}

}  // namespace

TreeVertex TreeVertex::neighbor(std::size_t label) const {
  TreeVertex v = *this;
  if (!v.labels.empty() && v.labels.back() == label)
    v.labels.pop_back();
  else
    v.labels.push_back(label);
  return v;
}

std::string TreeVertex::to_string() const {
  std::string s = "z";
  for (std::size_t l : labels) s += "." + std::to_string(l);
  return s;
}

TreeVertex tree_root() { return {}; }
TreeVertex tree_y(std::size_t j) { return {{j}}; }
TreeVertex tree_x(std::size_t j, std::size_t i) { return {{j, i}}; }

void CoverRep::add_vertex(const TreeVertex& v, std::size_t dim) {
  for (std::size_t k = 0; k < v.labels.size(); ++k) {
    if (v.labels[k] < 1 || v.labels[k] > n_) throw std::invalid_argument("label out of range");
    if (k > 0 && v.labels[k] == v.labels[k - 1]) throw std::invalid_argument("path is not reduced");
  }
  dims_[v] = dim;
}

void CoverRep::set_arrow(const TreeVertex& source, std::size_t label, Matrix map) {
  if (!source.is_source()) throw std::invalid_argument("arrows start at source vertices");
  const TreeVertex target = source.neighbor(label);
  if (!in_support(source) || !in_support(target)) throw std::invalid_argument("arrow leaves the support");
  if (map.rows() != dim(target) || map.cols() != dim(source))
    throw std::invalid_argument("arrow map has the wrong shape");
  maps_[{source, label}] = std::move(map);
}

std::size_t CoverRep::dim(const TreeVertex& v) const {
  auto it = dims_.find(v);
  return it == dims_.end() ? 0 : it->second;
}

Matrix CoverRep::arrow(const TreeVertex& source, std::size_t label) const {
  auto it = maps_.find({source, label});
  if (it != maps_.end()) return it->second;
  return Matrix(field_, dim(source.neighbor(label)), dim(source));
}

DimensionVector CoverRep::pushed_dims() const {
  DimensionVector d;
  for (const auto& [v, k] : dims_) (v.is_source() ? d.a : d.b) += static_cast<std::int64_t>(k);
  return d;
}

CoverSub cover_whole(const CoverRep& x) {
  CoverSub u;
  for (const auto& [v, k] : x.vertices()) u.emplace(v, Subspace::full(x.field(), k));
  return u;
}

Subspace cover_at(const CoverRep& x, const CoverSub& u, const TreeVertex& v) {
  auto it = u.find(v);
  if (it != u.end()) return it->second;
  return Subspace::zero(x.field(), x.dim(v));
}

bool is_cover_sub(const CoverRep& x, const CoverSub& u) {
  for (const auto& [v, s] : u)
    if (!x.in_support(v) || s.ambient_dim() != x.dim(v)) return false;
  for (const auto& [v, k] : x.vertices()) {
    if (!v.is_source()) continue;
    for (std::size_t l = 1; l <= x.n(); ++l) {
      const TreeVertex t = v.neighbor(l);
      if (!x.in_support(t)) continue;
      if (!cover_at(x, u, t).contains(image_of(x.arrow(v, l), cover_at(x, u, v)))) return false;
    }
  }
  return true;
}

CoverSub cover_sub_sum(const CoverRep& x, const CoverSub& u, const CoverSub& v) {
  CoverSub out = u;
  for (const auto& [vertex, s] : v) out.insert_or_assign(vertex, subspace_sum(cover_at(x, u, vertex), s));
  return out;
}

bool cover_sub_equal(const CoverRep& x, const CoverSub& u, const CoverSub& v) {
  for (const auto& [vertex, k] : x.vertices())
    if (!(cover_at(x, u, vertex) == cover_at(x, v, vertex))) return false;
  return true;
}

CoverSub cover_generated(const CoverRep& x, const CoverSub& seeds) {
  CoverSub out = seeds;
  // Arrows only run from sources to sinks, so one pass closes the seeds.
  for (const auto& [v, s] : seeds) {
    if (!v.is_source()) continue;
    for (std::size_t l = 1; l <= x.n(); ++l) {
      const TreeVertex t = v.neighbor(l);
      if (!x.in_support(t)) continue;
      out.insert_or_assign(t, subspace_sum(cover_at(x, out, t), image_of(x.arrow(v, l), s)));
    }
  }
  return out;
}

CoverRep cover_restrict(const CoverRep& x, const CoverSub& u) {
  if (!is_cover_sub(x, u)) throw std::invalid_argument("not a subrepresentation");
  CoverRep r(x.n(), x.field());
  for (const auto& [v, s] : u)
    if (s.dim() > 0) r.add_vertex(v, s.dim());
  for (const auto& [v, k] : r.vertices()) {
    if (!v.is_source()) continue;
    const Subspace& src = u.at(v);
    for (std::size_t l = 1; l <= x.n(); ++l) {
      const TreeVertex t = v.neighbor(l);
      if (!r.in_support(t)) continue;
      r.set_arrow(v, l, (x.arrow(v, l) * src.basis_columns()).select_rows(u.at(t).pivot_cols()));
    }
  }
  return r;
}

PushDown push_down(const CoverRep& x) {
  const FieldSpec f = x.field();
  std::map<TreeVertex, std::size_t> offset;
  std::size_t d1 = 0, d2 = 0;
  for (const auto& [v, k] : x.vertices()) {
    std::size_t& d = v.is_source() ? d1 : d2;
    offset[v] = d;
    d += k;
  }
  std::vector<Matrix> alphas(x.n(), Matrix(f, d2, d1));
  for (const auto& [v, k] : x.vertices()) {
    if (!v.is_source()) continue;
    for (std::size_t l = 1; l <= x.n(); ++l) {
      const TreeVertex t = v.neighbor(l);
      if (!x.in_support(t)) continue;
      alphas[l - 1].set_block(offset[t], offset[v], x.arrow(v, l));
    }
  }
  return {KroneckerModule(x.n(), f, d1, d2, std::move(alphas)), std::move(offset)};
}

SubmodulePair push_down_sub(const CoverRep& x, const PushDown& pd, const CoverSub& u) {
  std::vector<Vector> gens1, gens2;
  for (const auto& [v, s] : u) {
    const Matrix b = s.basis_columns();
    const std::size_t base = pd.offset.at(v);
    for (std::size_t c = 0; c < b.cols(); ++c) {
      Vector g = zero_vector(x.field(), v.is_source() ? pd.module.dim1() : pd.module.dim2());
      for (std::size_t r = 0; r < b.rows(); ++r) g[base + r] = b.at(r, c);
      (v.is_source() ? gens1 : gens2).push_back(std::move(g));
    }
  }
  return {Subspace::span(x.field(), pd.module.dim1(), gens1), Subspace::span(x.field(), pd.module.dim2(), gens2)};
}

CoverRep build_ball_rep(std::size_t n, FieldSpec field) {
  if (n < 3) throw std::invalid_argument("the ball representation needs n >= 3");
  CoverRep x(n, field);
  const TreeVertex z = tree_root();
  x.add_vertex(z, n - 1);
  for (std::size_t j = 1; j <= n; ++j) {
    x.add_vertex(tree_y(j), 1);
    for (std::size_t i = 1; i <= n; ++i)
      if (i != j) x.add_vertex(tree_x(j, i), 1);
  }
  for (std::size_t j = 1; j <= n; ++j) {
    // Coordinate j of the basis vectors e(i) - e(i+1), i = 1..n-1.
    Matrix row(field, 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      row.set(0, i - 1, static_cast<long long>(i == j) - static_cast<long long>(i + 1 == j));
    x.set_arrow(z, j, std::move(row));
    for (std::size_t i = 1; i <= n; ++i)
      if (i != j) x.set_arrow(tree_x(j, i), i, Matrix::identity(field, 1));
  }
  return x;
}

CoverSub tau_bristle_sub(const CoverRep& ball) {
  const TreeVertex z = tree_root();
  require_vertex(ball, z);
  CoverSub u;
  u.emplace(z, kernel_basis(ball.arrow(z, 1)));
  for (std::size_t j = 2; j <= ball.n(); ++j) {
    const CoverSub y = component_Y(ball, j);
    u.insert(y.begin(), y.end());
  }
  return u;
}

CoverRep build_tau_bristle_rep(std::size_t n, FieldSpec field) {
  const CoverRep ball = build_ball_rep(n, field);
  return cover_restrict(ball, tau_bristle_sub(ball));
}

CoverSub mu_bristle_sub(const CoverRep& ball) {
  const TreeVertex z = tree_root();
  require_vertex(ball, z);
  CoverSub seeds;
  seeds.emplace(z, Subspace::full(ball.field(), ball.dim(z)));
  for (std::size_t j = 2; j <= ball.n(); ++j) {
    const CoverSub y = component_Y(ball, j);
    seeds.insert(y.begin(), y.end());
  }
  return cover_generated(ball, seeds);
}

CoverRep build_mu_bristle_rep(std::size_t n, FieldSpec field) {
  const CoverRep ball = build_ball_rep(n, field);
  return cover_restrict(ball, mu_bristle_sub(ball));
}

CoverRep cover_bristle(std::size_t n, FieldSpec field, const TreeVertex& source, std::size_t label) {
  CoverRep b(n, field);
  b.add_vertex(source, 1);
  b.add_vertex(source.neighbor(label), 1);
  b.set_arrow(source, label, Matrix::identity(field, 1));
  return b;
}

CoverRep injective_star(std::size_t n, FieldSpec field, const TreeVertex& y) {
  if (y.is_source()) throw std::invalid_argument("injective stars are centred at sinks");
  CoverRep r(n, field);
  r.add_vertex(y, 1);
  for (std::size_t l = 1; l <= n; ++l) {
    r.add_vertex(y.neighbor(l), 1);
    r.set_arrow(y.neighbor(l), l, Matrix::identity(field, 1));
  }
  return r;
}

CoverSub leaf_projective(const CoverRep& x, std::size_t j, std::size_t i) {
  const TreeVertex leaf = tree_x(j, i);
  require_vertex(x, leaf);
  return cover_generated(x, {{leaf, Subspace::full(x.field(), x.dim(leaf))}});
}

CoverSub component_Y(const CoverRep& x, std::size_t j) {
  require_vertex(x, tree_y(j));
  CoverSub u;
  u.emplace(tree_y(j), Subspace::full(x.field(), x.dim(tree_y(j))));
  for (std::size_t i = 1; i <= x.n(); ++i) {
    if (i == j || !x.in_support(tree_x(j, i))) continue;
    u.emplace(tree_x(j, i), Subspace::full(x.field(), x.dim(tree_x(j, i))));
  }
  return u;
}

CoverSub component_V(const CoverRep& x, std::size_t j, std::size_t i) {
  const std::size_t next = wrap(i + 1, x.n());
  if (i == j || next == j) throw std::invalid_argument("V[i] is undefined in Q(j) for this i");
  return cover_sub_sum(x, leaf_projective(x, j, i), leaf_projective(x, j, next));
}

CoverSub component_W(const CoverRep& x, std::size_t i, std::size_t j) {
  if (i == j) throw std::invalid_argument("W(i,j) needs i != j");
  const TreeVertex z = tree_root();
  for (const TreeVertex& v : {tree_x(j, i), tree_y(j), z, tree_y(i), tree_x(i, j)}) require_vertex(x, v);
  Subspace wz = Subspace::full(x.field(), x.dim(z));
  for (std::size_t s = 1; s <= x.n(); ++s)
    if (s != i && s != j) wz = subspace_intersection(wz, kernel_basis(x.arrow(z, s)));
  CoverSub u;
  for (const TreeVertex& v : {tree_x(j, i), tree_y(j), tree_y(i), tree_x(i, j)})
    u.emplace(v, Subspace::full(x.field(), x.dim(v)));
  u.emplace(z, std::move(wz));
  if (!is_cover_sub(x, u)) throw std::logic_error("W(i,j) is not closed");
  return u;
}

std::vector<std::size_t> index_set_G(std::size_t n, std::size_t j) {
  std::vector<std::size_t> g;
  for (std::size_t i : {n - 1, n})
    if (i != j) g.push_back(i);
  return g;
}

std::vector<std::size_t> index_set_H(std::size_t n, std::size_t j) {
  std::vector<std::size_t> h;
  for (std::size_t i = 1; i <= n; ++i)
    if (i != wrap(j + n - 1, n) && i != j && i != n - 1) h.push_back(i);
  return h;
}

SubmodulePair extract_E(const CoverRep& x, const PushDown& pd, std::size_t j, std::size_t i) {
  const std::size_t next = wrap(i + 1, x.n());
  const TreeVertex a = tree_x(j, i), b = tree_x(j, next);
  require_vertex(x, a);
  require_vertex(x, b);
  Vector u = zero_vector(x.field(), pd.module.dim1());
  u[pd.offset.at(a)] = Scalar::one(x.field());
  u[pd.offset.at(b)] = Scalar::one(x.field());
  return generated_submodule(pd.module, u);
}

Vector Mij_generator(const CoverRep& x, const PushDown& pd, std::size_t i, std::size_t j) {
  const KroneckerModule& m = pd.module;
  Subspace u = push_down_sub(x, pd, component_W(x, i, j)).u1;
  for (std::size_t s = 1; s <= x.n(); ++s)
    if (s != i && s != j) u = subspace_intersection(u, kernel_basis(m.alpha(s - 1)));
  u = subspace_intersection(u, kernel_basis(m.alpha(i - 1) - m.alpha(j - 1)));
  if (u.dim() != 1)
    throw std::logic_error("expected a unique M(i,j) generator, found dimension " + std::to_string(u.dim()));
  return u.basis().row(0);
}

SubmodulePair extract_Mij(const CoverRep& x, const PushDown& pd, std::size_t i, std::size_t j) {
  return generated_submodule(pd.module, Mij_generator(x, pd, i, j));
}

bool CoverVerification::all_hold() const {
  for (const EqualityCheck& c : checks)
    if (!c.holds) return false;
  return true;
}

CoverVerification verify_cover_equalities(std::size_t n, FieldSpec field, std::size_t attempts) {
  CoverVerification out;
  auto add = [&out](std::string key, std::string statement, bool holds) {
    out.checks.push_back({std::move(key), std::move(statement), holds});
  };
  const CoverRep x = build_ball_rep(n, field);
  const PushDown pd = push_down(x);
  const KroneckerModule& m = pd.module;

  add("iso", "pi(X) is isomorphic to I_2", is_iso_to(m, preinjective(n, 2, field), attempts));

  std::vector<SubmodulePair> ys;
  for (std::size_t j = 1; j <= n; ++j) ys.push_back(push_down_sub(x, pd, component_Y(x, j)));
  const SubmodulePair big_n = sum_all(m, ys);

  for (std::size_t j = 1; j <= n; ++j) {
    const std::string js = std::to_string(j);
    CoverSub rhs1;
    std::vector<SubmodulePair> rhs2;
    bool types_ok = true;
    for (std::size_t i : index_set_G(n, j)) {
      const CoverSub p = leaf_projective(x, j, i);
      rhs1 = cover_sub_sum(x, rhs1, p);
      const SubmodulePair d = push_down_sub(x, pd, p);
      rhs2.push_back(d);
      types_ok = types_ok && is_iso_to(submodule_as_module(m, d), bristle(bristle_point(n, field, i)), attempts);
    }
    for (std::size_t i : index_set_H(n, j)) {
      rhs1 = cover_sub_sum(x, rhs1, component_V(x, j, i));
      const SubmodulePair e = extract_E(x, pd, j, i);
      rhs2.push_back(e);
      types_ok = types_ok && is_iso_to(submodule_as_module(m, e),
                                       bristle(bristle_point(n, field, i, wrap(i + 1, n))), attempts);
    }
    add("Y-sum.j" + js, "Y(" + js + ") = sum P[i] (i in G) + sum V[i] (i in H)",
        cover_sub_equal(x, component_Y(x, j), rhs1));
    add("N-sum.j" + js, "N(" + js + ") = sum D[i] (i in G) + sum E[i] (i in H)", ys[j - 1] == sum_all(m, rhs2));
    add("types.j" + js, "D[i] = B(i) and E[i] = B(i,i+1) inside N(" + js + ")", types_ok);
  }

  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (i == j) continue;
      const std::string ij = std::to_string(i) + "," + std::to_string(j);
      const SubmodulePair mij = extract_Mij(x, pd, i, j);
      const SubmodulePair w = push_down_sub(x, pd, component_W(x, i, j));
      add("W-in-N+M." + ij, "pi(W(" + ij + ")) in N + M(" + ij + ")",
          submodule_contains(submodule_sum(big_n, mij), w));
      add("mij." + ij, "M(" + ij + ") = B(" + ij + ")",
          is_iso_to(submodule_as_module(m, mij), bristle(bristle_point(n, field, i, j)), attempts));
    }
  }

  const TreeVertex z = tree_root();
  for (std::size_t dropped = 1; dropped <= n; ++dropped) {
    Subspace sum = Subspace::zero(field, x.dim(z));
    std::size_t dims = 0;
    SubmodulePair total = big_n;
    for (std::size_t i = 1; i <= n; ++i) {
      if (i == dropped) continue;
      const CoverSub w = component_W(x, i, wrap(i + 1, n));
      sum = subspace_sum(sum, w.at(z));
      dims += w.at(z).dim();
      total = submodule_sum(total, extract_Mij(x, pd, i, wrap(i + 1, n)));
    }
    const std::string ds = std::to_string(dropped);
    add("center-split.drop" + ds, "X_z = direct sum of W(i,i+1)_z, i != " + ds, sum.is_full() && dims == x.dim(z));
    add("M-generated.drop" + ds, "M = N + sum M(i,i+1), i != " + ds, total == whole_module(m));
  }

  // Bristles used with I = {1, ..., n-2, n}.
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t i : index_set_G(n, j)) ++out.bristles_per_type[bristle_name(i)];
    for (std::size_t i : index_set_H(n, j)) ++out.bristles_per_type[bristle_name(i, wrap(i + 1, n))];
  }
  for (std::size_t i = 1; i <= n; ++i)
    if (i != n - 1) ++out.bristles_per_type[bristle_name(i, wrap(i + 1, n))];
  bool per_type = out.bristles_per_type.size() == n + 1;
  for (const auto& [name, count] : out.bristles_per_type) {
    out.total_bristles += count;
    per_type = per_type && count == n - 1;
  }
  add("bookkeeping.per-type", "n-1 bristles of each type in B0'", per_type);
  const DimensionVector top = layers(m).top_dims;
  add("bookkeeping.total", "(n+1)(n-1) bristles, the length of top I_2",
      out.total_bristles == (n + 1) * (n - 1) &&
          static_cast<std::int64_t>(out.total_bristles) == top.a + top.b);
  return out;
}

CoverVerification verify_tau_bristle_cover(std::size_t n, FieldSpec field, std::size_t attempts) {
  CoverVerification out;
  auto add = [&out](std::string key, std::string statement, bool holds) {
    out.checks.push_back({std::move(key), std::move(statement), holds});
  };
  const CoverRep x = build_tau_bristle_rep(n, field);
  const PushDown pd = push_down(x);
  const KroneckerModule& m = pd.module;
  const KroneckerModule b1 = bristle(bristle_point(n, field, 1));

  add("dims", "dim pi(X') = Phi(1,1)", m.dims() == coxeter_apply({1, 1}, n, 1));
  add("iso", "pi(X') is isomorphic to tau B(1)", is_iso_to(m, ar_translate(b1, Translate::tau), attempts));

  std::vector<SubmodulePair> ys;
  for (std::size_t j = 2; j <= n; ++j) ys.push_back(push_down_sub(x, pd, component_Y(x, j)));
  SubmodulePair total = sum_all(m, ys);
  for (std::size_t j = 2; j <= n; ++j) {
    const std::string js = std::to_string(j);
    CoverSub rhs1;
    std::vector<SubmodulePair> rhs2;
    for (std::size_t i : index_set_G(n, j)) {
      rhs1 = cover_sub_sum(x, rhs1, leaf_projective(x, j, i));
      rhs2.push_back(push_down_sub(x, pd, leaf_projective(x, j, i)));
      ++out.bristles_per_type[bristle_name(i)];
    }
    for (std::size_t i : index_set_H(n, j)) {
      rhs1 = cover_sub_sum(x, rhs1, component_V(x, j, i));
      rhs2.push_back(extract_E(x, pd, j, i));
      ++out.bristles_per_type[bristle_name(i, wrap(i + 1, n))];
    }
    add("Y-sum.j" + js, "Y(" + js + ") = sum P[i] + sum V[i] inside X'", cover_sub_equal(x, component_Y(x, j), rhs1));
    add("N-sum.j" + js, "N(" + js + ") = sum D[i] + sum E[i] inside pi(X')", ys[j - 2] == sum_all(m, rhs2));
  }
  bool types_ok = true;
  for (std::size_t i = 2; i + 1 <= n; ++i) {
    const SubmodulePair mij = extract_Mij(x, pd, i, i + 1);
    types_ok = types_ok && is_iso_to(submodule_as_module(m, mij), bristle(bristle_point(n, field, i, i + 1)), attempts);
    total = submodule_sum(total, mij);
    ++out.bristles_per_type[bristle_name(i, i + 1)];
  }
  add("mij", "M(i,i+1) = B(i,i+1) for 2 <= i <= n-1", types_ok);
  add("M-generated", "pi(X') = pi(Y') + sum_{i=2}^{n-1} M(i,i+1)", total == whole_module(m));

  const SubmodulePair leaf = push_down_sub(x, pd, leaf_projective(x, 2, 1));
  add("b1-sub", "pi(P(x(2,1))) is a proper submodule isomorphic to B(1)",
      is_iso_to(submodule_as_module(m, leaf), b1, attempts) && !(leaf == whole_module(m)));

  std::size_t leaves_n1 = 0, leaves_n = 0;
  for (const auto& [v, k] : x.vertices()) {
    if (v.labels.size() != 2) continue;
    leaves_n1 += v.labels[1] == n - 1;
    leaves_n += v.labels[1] == n;
  }
  add("leaves", "n-2 leaves of type n-1 and of type n", leaves_n1 == n - 2 && leaves_n == n - 2);

  bool counts_ok = out.bristles_per_type[bristle_name(n - 1, n)] == 1;
  for (const auto& [name, count] : out.bristles_per_type) {
    out.total_bristles += count;
    if (name != bristle_name(n - 1, n)) counts_ok = counts_ok && count == n - 2;
  }
  add("bookkeeping", "n-2 bristles per type in B0', one B(n-1,n)", counts_ok);
  return out;
}

std::vector<std::map<TreeVertex, Matrix>> cover_hom_basis(const CoverRep& x, const CoverRep& y) {
  if (x.n() != y.n() || !(x.field() == y.field())) throw std::invalid_argument("incompatible cover representations");
  const FieldSpec f = x.field();
  // Unknown blocks f_v for v in both supports, vec'd column-major.
  std::map<TreeVertex, std::size_t> start;
  std::size_t unknowns = 0;
  for (const auto& [v, k] : x.vertices()) {
    if (!y.in_support(v)) continue;
    start[v] = unknowns;
    unknowns += y.dim(v) * k;
  }
  std::vector<Matrix> rows;
  for (const auto& [s, ks] : x.vertices()) {
    if (!s.is_source()) continue;
    for (std::size_t l = 1; l <= x.n(); ++l) {
      const TreeVertex t = s.neighbor(l);
      if (!y.in_support(t)) continue;
      // f_t X(s->t) - Y(s->t) f_s = 0 in Hom(X_s, Y_t).
      Matrix eq(f, y.dim(t) * ks, unknowns);
      if (start.count(t))
        eq.set_block(0, start[t], Matrix::kronecker(x.arrow(s, l).transpose(), Matrix::identity(f, y.dim(t))));
      if (start.count(s))
        eq.set_block(0, start[s], -Matrix::kronecker(Matrix::identity(f, ks), y.arrow(s, l)));
      rows.push_back(std::move(eq));
    }
  }
  const Subspace k = rows.empty() ? Subspace::full(f, unknowns) : kernel_basis(Matrix::vstack(rows, f, unknowns));
  std::vector<std::map<TreeVertex, Matrix>> basis;
  const Matrix cols = k.basis_columns();
  for (std::size_t c = 0; c < k.dim(); ++c) {
    std::map<TreeVertex, Matrix> phi;
    for (const auto& [v, offset] : start) {
      const std::size_t r = y.dim(v), cc = x.dim(v);
      phi.emplace(v, Matrix::unvec(cols.block(offset, c, r * cc, 1), r, cc));
    }
    basis.push_back(std::move(phi));
  }
  return basis;
}

std::size_t cover_hom_dim(const CoverRep& x, const CoverRep& y) { return cover_hom_basis(x, y).size(); }

CoverSub cover_max_bristled(const CoverRep& x) {
  CoverSub trace;
  for (const auto& [v, k] : x.vertices())
    trace.emplace(v, v.is_source() ? Subspace::zero(x.field(), k) : Subspace::full(x.field(), k));
  for (const auto& [s, k] : x.vertices()) {
    if (!s.is_source()) continue;
    for (std::size_t l = 1; l <= x.n(); ++l) {
      for (const auto& phi : cover_hom_basis(cover_bristle(x.n(), x.field(), s, l), x)) {
        auto it = phi.find(s);
        if (it != phi.end()) trace.at(s) = subspace_sum(trace.at(s), image(it->second));
      }
    }
  }
  return trace;
}

bool cover_is_bristled(const CoverRep& x) { return cover_sub_equal(x, cover_max_bristled(x), cover_whole(x)); }

}  // namespace kronbrist
