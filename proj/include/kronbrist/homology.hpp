#pragma once

#include "kronbrist/module.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace kronbrist {

/// <(a,b),(a',b')> = aa' + bb' - n ab'
std::int64_t euler_form(const DimensionVector& x, const DimensionVector& y, std::size_t n);

/// Phi^power(x) with Phi(a,b) = (n^2 a - n b - a, n a - b) and
/// Phi^{-1}(c,d) = (n d - c, (n^2 - 1) d - n c). Throws std::overflow_error
/// if an intermediate value leaves int64.
DimensionVector coxeter_apply(const DimensionVector& x, std::size_t n, std::int64_t power);

/// A basis of Hom(M, N): the kernel of the intertwining system
/// f2 alpha_i^M - alpha_i^N f1 = 0.
std::vector<Morphism> hom_basis(const KroneckerModule& m, const KroneckerModule& n);
std::size_t hom_dim(const KroneckerModule& m, const KroneckerModule& n);
std::size_t end_dim(const KroneckerModule& m);

/// dim Hom - <dim M, dim N> (the algebra is hereditary). A negative value
/// is an internal inconsistency and throws std::logic_error.
std::size_t ext1_dim(const KroneckerModule& m, const KroneckerModule& n);

/// Independent route: apply Hom(-, N) to 0 -> P1 -> P0 -> M -> 0 and
/// measure the cokernel of Hom(P0, N) -> Hom(P1, N).
std::size_t ext1_dim_via_resolution(const KroneckerModule& m, const KroneckerModule& n);

/// Sum of the images of all morphisms G -> M, G in `generators`.
SubmodulePair trace_submodule(const std::vector<KroneckerModule>& generators,
                              const KroneckerModule& m);
bool is_generated_by(const std::vector<KroneckerModule>& generators, const KroneckerModule& m);

enum class Translate { tau, tau_inverse };

/// Auslander-Reiten translation through two BGP reflections. tau takes
/// kernels at the current sink twice; tau^- takes cokernels at the current
/// source twice. Projective (resp. injective) summands are annihilated.
KroneckerModule ar_translate(const KroneckerModule& m, Translate direction);
/// tau^t for t >= 0, tau^{-|t|} for t < 0.
KroneckerModule ar_translate_power(const KroneckerModule& m, std::int64_t t);

struct IsoResult {
  enum class Status { verified_iso, verified_non_iso, unknown };
  Status status;
  std::optional<Morphism> iso;
};

/// Tri-state isomorphism search: dimension and Hom-dimension obstructions
/// certify non-isomorphism; otherwise every Hom basis element and then
/// `attempts` random combinations are tested for invertibility.
IsoResult find_isomorphism(const KroneckerModule& m, const KroneckerModule& n,
                           std::size_t attempts = 64, std::uint64_t seed = 0x6b726f6e);

const char* to_string(IsoResult::Status status);

}  // namespace kronbrist
