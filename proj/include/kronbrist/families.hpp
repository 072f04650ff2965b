#pragma once

#include "kronbrist/bristle.hpp"
#include "kronbrist/module.hpp"

#include <optional>

namespace kronbrist {

/// I_0 = S(1), I_1 = I(2), I_t = tau I_{t-2}.
KroneckerModule preinjective(std::size_t n, std::size_t t, FieldSpec field);
/// P_t = dual of I_t: P_0 = S(2), P_1 = P(1).
KroneckerModule preprojective(std::size_t n, std::size_t t, FieldSpec field);

/// Explicit I_t for n = 2 on bases e_0..e_t of M1 and e'_1..e'_t of M2:
/// alpha_1 e_i = e'_{i+1} (i < t), alpha_1 e_t = 0, alpha_2 e_0 = 0,
/// alpha_2 e_i = e'_i.
KroneckerModule n2_preinjective(std::size_t t, FieldSpec field);

/// c in k, or nullopt for the tag infinity.
using ProjectiveParameter = std::optional<Scalar>;

/// m_c = sum c^i e_i (0^0 = 1), m_inf = e_t, inside n2_preinjective(t).
Vector n2_bristle_generator(std::size_t t, FieldSpec field, const ProjectiveParameter& c);
/// B_c = B(1:c), B_inf = B(0:1).
BristlePoint n2_bristle(FieldSpec field, const ProjectiveParameter& c);
/// The q + 1 parameters: 0, 1, ..., q-1, then infinity.
std::vector<ProjectiveParameter> n2_parameters(FieldSpec field);

}  // namespace kronbrist
