#pragma once

#include "kronbrist/module.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace kronbrist {

/// A vertex of the n-regular tree, named by its reduced label path from the
/// base vertex z (no label repeats consecutively). z is a source; the
/// orientation is bipartite, so even-length paths are sources (pushed to
/// vertex 1) and odd-length paths are sinks (pushed to vertex 2).
struct TreeVertex {
  std::vector<std::size_t> labels;

  bool is_source() const { return labels.size() % 2 == 0; }
  /// The vertex across the edge labelled `label`.
  TreeVertex neighbor(std::size_t label) const;
  /// "z", "z.2", "z.2.1", ...
  std::string to_string() const;

  friend auto operator<=>(const TreeVertex&, const TreeVertex&) = default;
  friend bool operator==(const TreeVertex&, const TreeVertex&) = default;
};

TreeVertex tree_root();
/// y_j, the head of the arrow z -> y_j labelled j.
TreeVertex tree_y(std::size_t j);
/// x(j, i), the tail of the arrow x(j,i) -> y_j labelled i.
TreeVertex tree_x(std::size_t j, std::size_t i);

/// Finite-support representation of the tree. Arrows are keyed by their
/// source vertex (always a source vertex of the tree) and label; a map is
/// stored for every arrow whose two ends lie in the support.
class CoverRep {
 public:
  CoverRep(std::size_t n, FieldSpec field) : n_(n), field_(field) {}

  std::size_t n() const { return n_; }
  FieldSpec field() const { return field_; }

  void add_vertex(const TreeVertex& v, std::size_t dim);
  /// Throws unless both ends are in the support and the shape matches.
  void set_arrow(const TreeVertex& source, std::size_t label, Matrix map);

  bool in_support(const TreeVertex& v) const { return dims_.count(v) != 0; }
  std::size_t dim(const TreeVertex& v) const;
  const std::map<TreeVertex, std::size_t>& vertices() const { return dims_; }
  /// The map of the arrow (source, label); zero if not stored.
  Matrix arrow(const TreeVertex& source, std::size_t label) const;
  DimensionVector pushed_dims() const;

 private:
  std::size_t n_;
  FieldSpec field_;
  std::map<TreeVertex, std::size_t> dims_;
  std::map<std::pair<TreeVertex, std::size_t>, Matrix> maps_;
};

/// A subrepresentation: a subspace at each vertex (absent vertices are 0).
using CoverSub = std::map<TreeVertex, Subspace>;

CoverSub cover_whole(const CoverRep& x);
Subspace cover_at(const CoverRep& x, const CoverSub& u, const TreeVertex& v);
bool is_cover_sub(const CoverRep& x, const CoverSub& u);
CoverSub cover_sub_sum(const CoverRep& x, const CoverSub& u, const CoverSub& v);
bool cover_sub_equal(const CoverRep& x, const CoverSub& u, const CoverSub& v);
/// Closure of prescribed subspaces under the arrow maps.
CoverSub cover_generated(const CoverRep& x, const CoverSub& seeds);
/// The subrepresentation as a representation in RREF bases.
CoverRep cover_restrict(const CoverRep& x, const CoverSub& u);

struct PushDown {
  KroneckerModule module;
  std::map<TreeVertex, std::size_t> offset;  // block start inside M1 or M2
};

/// Sources in vertex order fill M1, sinks fill M2; alpha_i collects every
/// arrow labelled i.
PushDown push_down(const CoverRep& x);
SubmodulePair push_down_sub(const CoverRep& x, const PushDown& pd, const CoverSub& u);

/// Radius-2 ball around z with X_z = ker[1,...,1] (basis e(i) - e(i+1)) and
/// one-dimensional spaces elsewhere; pushes down to I_2. Requires n >= 3.
CoverRep build_ball_rep(std::size_t n, FieldSpec field);
/// The subrepresentation X' of the ball rep: the branch through y_1 removed
/// and X'_z = ker(X_z -> X_{y_1}); pushes down to tau B(1).
CoverSub tau_bristle_sub(const CoverRep& ball);
CoverRep build_tau_bristle_rep(std::size_t n, FieldSpec field);
/// X'' generated by the Y(j), j >= 2, and X_z; pushes down to mu(B(1)).
CoverSub mu_bristle_sub(const CoverRep& ball);
CoverRep build_mu_bristle_rep(std::size_t n, FieldSpec field);

/// Thin representation on one arrow: the cover bristle.
CoverRep cover_bristle(std::size_t n, FieldSpec field, const TreeVertex& source, std::size_t label);
/// The injective representation of the sink y: y and its n neighbours.
CoverRep injective_star(std::size_t n, FieldSpec field, const TreeVertex& y);

/// Component submodules of a named construction. Indices are 1-based and
/// the leaf notation is x(j, i); every call throws std::invalid_argument if
/// the required vertices are missing from the support.
CoverSub leaf_projective(const CoverRep& x, std::size_t j, std::size_t i);   // P(x(j,i))
CoverSub component_Y(const CoverRep& x, std::size_t j);                       // X restricted to Q(j)
CoverSub component_V(const CoverRep& x, std::size_t j, std::size_t i);        // support y_j, x(j,i), x(j,i+1)
CoverSub component_W(const CoverRep& x, std::size_t i, std::size_t j);        // path x(j,i) .. x(i,j)
/// Leaves of Q(j) of types n-1 and n.
std::vector<std::size_t> index_set_G(std::size_t n, std::size_t j);
/// i not in {j-1, j, n-1}, indices mod n.
std::vector<std::size_t> index_set_H(std::size_t n, std::size_t j);

/// E[i] inside pi(V[i]) of Q(j): generated by the sum of the two leaf vectors.
SubmodulePair extract_E(const CoverRep& x, const PushDown& pd, std::size_t j, std::size_t i);
/// M(i,j): the submodule of pi(W(i,j)) generated by its unique (up to
/// scalars) top vector u with alpha_s u = 0 for s not in {i,j} and
/// alpha_i u = alpha_j u.
SubmodulePair extract_Mij(const CoverRep& x, const PushDown& pd, std::size_t i, std::size_t j);
/// The generator u of M(i,j) in pi(X)_1 coordinates.
Vector Mij_generator(const CoverRep& x, const PushDown& pd, std::size_t i, std::size_t j);

struct EqualityCheck {
  std::string key;
  std::string statement;
  bool holds = false;
};

struct CoverVerification {
  std::vector<EqualityCheck> checks;
  /// Bristles used to generate I_2, keyed by the bristle type name.
  std::map<std::string, std::size_t> bristles_per_type;
  std::size_t total_bristles = 0;
  bool all_hold() const;
};

/// The decomposition of pi(X) = I_2 into bristle submodules: the Y(j) and
/// N(j) sums, W containment, the splitting of X_z and generation of M, plus the
/// isomorphism types of the bristles used and the book-keeping counts.
CoverVerification verify_cover_equalities(std::size_t n, FieldSpec field, std::size_t attempts = 64);
/// The analogous decomposition of pi(X') = tau B(1).
CoverVerification verify_tau_bristle_cover(std::size_t n, FieldSpec field, std::size_t attempts = 64);

/// Basis of Hom(X, Y) as vertexwise matrices.
std::vector<std::map<TreeVertex, Matrix>> cover_hom_basis(const CoverRep& x, const CoverRep& y);
std::size_t cover_hom_dim(const CoverRep& x, const CoverRep& y);

/// Trace of all cover bristles on arrows leaving the support's sources, plus
/// X at every sink.
CoverSub cover_max_bristled(const CoverRep& x);
bool cover_is_bristled(const CoverRep& x);

}  // namespace kronbrist
