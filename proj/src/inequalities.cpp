#include "sector_radius/inequalities.hpp"

#include <algorithm>
#include <stdexcept>

namespace sector_radius {

namespace {

using enum InequalityId;
using enum InputKind;

constexpr std::array<InequalityInfo, kInequalityCount> kTable{{
    {A_lower, "A_lower", 1, General, true, "½‖X‖ ≤ ω(X)", "any X"},
    {A_upper, "A_upper", 1, General, true, "ω(X) ≤ ‖X‖", "any X"},
    {B_prod4, "B_prod4", 2, General, true, "ω(XY) ≤ 4 ω(X) ω(Y)", "any X, Y"},
    {C_had2, "C_had2", 2, General, true, "ω(X∘Y) ≤ 2 ω(X) ω(Y)", "any X, Y"},
    {I_diag_psd, "I_diag_psd", 2, PsdThenGeneral, true, "ω(A∘X) ≤ (max_j a_jj) ω(X)",
     "A positive semidefinite (needed: fails for A = [[0,1],[0,0]], X = J), X any"},
    {II_prod_sec, "II_prod_sec", 2, Sectorial, true, "ω(XY) ≤ sec(α₁) sec(α₂) ω(X) ω(Y)",
     "X ∈ M^s(n, α₁), Y ∈ M^s(n, α₂)"},
    {III_had_sec, "III_had_sec", 2, Sectorial, true, "ω(X∘Y) ≤ sec(α₁) sec(α₂) ω(X) ω(Y)",
     "X ∈ M^s(n, α₁), Y ∈ M^s(n, α₂)"},
    {VI_had_diag_min, "VI_had_diag_min", 2, Sectorial, true,
     "ω(X∘Y) ≤ sec(α₁) sec(α₂) min{max_j |x_jj| ω(Y), max_j |y_jj| ω(X)}", "X ∈ M^s(n, α₁), Y ∈ M^s(n, α₂)"},
    {L1_norm_sec, "L1_norm_sec", 1, Sectorial, false, "N(X) ≤ sec(α) N(Re X)",
     "W(X) ⊂ S_α (checked on zX for the witness rotation z)"},
    {L2_block_tan, "L2_block_tan", 1, Sectorial, false, "[[tan(α) Re X, Im X], [Im X, tan(α) Re X]] ⪰ 0",
     "W(X) ⊂ S_α (checked on zX); reported as -λ_min/max(1,‖block‖_F) ≤ 1e-9"},
    {L3_block_sec, "L3_block_sec", 1, Sectorial, false, "[[sec(α) Re X, X], [X*, sec(α) Re X]] ⪰ 0",
     "W(X) ⊂ S_α (checked on zX); reported as -λ_min/max(1,‖block‖_F) ≤ 1e-9"},
    {P1_re_mono, "P1_re_mono", 1, General, false, "ω_N(Re X) ≤ ω_N(X)", "any X"},
    {P2_im_tan, "P2_im_tan", 1, Sectorial, false, "ω_N(Im X) ≤ tan(α) ω_N(Re X)", "W(X) ⊂ S_α (checked on zX)"},
    {P3_sec, "P3_sec", 1, Sectorial, false, "ω_N(X) ≤ sec(α) ω_N(Re X)", "W(X) ⊂ S_α (checked on zX)"},
    {SA_omega_le_N, "SA_omega_le_N", 1, General, false, "ω_N(X) ≤ N(X)", "any X"},
    {T1_prod_sec_N, "T1_prod_sec_N", 2, Sectorial, false, "ω_N(XY) ≤ sec(α₁) sec(α₂) ω_N(X) ω_N(Y)",
     "X ∈ M^s(n, α₁), Y ∈ M^s(n, α₂)"},
    {C_B2_sec2, "C_B2_sec2", 2, Sectorial, false, "ω_N(XY) ≤ sec²(α) ω_N(X) ω_N(Y)",
     "X, Y ∈ M^s(n, α), α = max of the two class indices"},
    {C_AD_prod2, "C_AD_prod2", 2, AccretiveDissipative, false, "ω_N(XY) ≤ 2 ω_N(X) ω_N(Y)",
     "X, Y accretive-dissipative"},
    {C_mprod, "C_mprod", 0, Sectorial, false, "ω_N(X₁⋯X_m) ≤ (∏ sec(α_j)) ω_N(X₁)⋯ω_N(X_m)", "X_j ∈ M^s(n, α_j)"},
    {C_secm, "C_secm", 0, Sectorial, false, "ω_N(X₁⋯X_m) ≤ sec^m(α) ω_N(X₁)⋯ω_N(X_m)",
     "X_j ∈ M^s(n, α), α = max of the class indices"},
    {C_AD_m, "C_AD_m", 0, AccretiveDissipative, false, "ω_N(X₁⋯X_m) ≤ 2^{m/2} ω_N(X₁)⋯ω_N(X_m)",
     "each X_j accretive-dissipative"},
    {H2_hermitian_had, "H2_hermitian_had", 2, GeneralThenHermitian, false, "ω_N(X∘Y) ≤ ω_N(X) ω_N(Y)",
     "at least one of X, Y Hermitian"},
    {H3_had_sec_N, "H3_had_sec_N", 2, Sectorial, false, "ω_N(X∘Y) ≤ sec(α₁) sec(α₂) ω_N(X) ω_N(Y)",
     "X ∈ M^s(n, α₁), Y ∈ M^s(n, α₂)"},
    {C_C2_had, "C_C2_had", 2, Sectorial, false, "ω_N(X∘Y) ≤ sec²(α) ω_N(X) ω_N(Y)",
     "X, Y ∈ M^s(n, α), α = max of the two class indices"},
    {T_had_m, "T_had_m", 0, Sectorial, false, "ω_N(X₁∘⋯∘X_m) ≤ (∏ sec(α_j)) ω_N(X₁)⋯ω_N(X_m)",
     "X_j ∈ M^s(n, α_j)"},
    {C_AD_had_m, "C_AD_had_m", 0, AccretiveDissipative, false, "ω_N(X₁∘⋯∘X_m) ≤ 2^{m/2} ω_N(X₁)⋯ω_N(X_m)",
     "each X_j accretive-dissipative"},
    {L6_had_diag_norm, "L6_had_diag_norm", 2, GeneralThenPositive, false, "N(X∘Y) ≤ (max_i y_ii) N(X)",
     "Y positive definite"},
    {L7_had_diag_omega, "L7_had_diag_omega", 2, GeneralThenPositive, false, "ω_N(X∘Y) ≤ (max_i y_ii) ω_N(X)",
     "Y positive definite"},
    {T_diag_x, "T_diag_x", 2, Sectorial, false, "ω_N(X∘Y) ≤ sec(α₁) sec(α₂) max_j |x_jj| ω_N(Y)",
     "X ∈ M^s(n, α₁), Y ∈ M^s(n, α₂)"},
    {T_diag_y, "T_diag_y", 2, Sectorial, false, "ω_N(X∘Y) ≤ sec(α₁) sec(α₂) max_j |y_jj| ω_N(X)",
     "X ∈ M^s(n, α₁), Y ∈ M^s(n, α₂)"},
    {C_diag_min, "C_diag_min", 2, Sectorial, false,
     "ω_N(X∘Y) ≤ sec(α₁) sec(α₂) min{max_j |x_jj| ω_N(Y), max_j |y_jj| ω_N(X)}",
     "X ∈ M^s(n, α₁), Y ∈ M^s(n, α₂)"},
    {C_AD_diag_min2, "C_AD_diag_min2", 2, AccretiveDissipative, false,
     "ω_N(X∘Y) ≤ 2 min{max_j |x_jj| ω_N(Y), max_j |y_jj| ω_N(X)}", "X, Y accretive-dissipative"},
    {T_onetan_min, "T_onetan_min", 2, Sectorial, false,
     "ω_N(X∘Y) ≤ min{(1+tan α₁) ω_N(Re zX) ω_N(Y), (1+tan α₂) ω_N(X) ω_N(Re wY)}",
     "X ∈ M^s(n, α₁) with witness z, Y ∈ M^s(n, α₂) with witness w"},
    {C_onetan, "C_onetan", 2, Sectorial, false, "ω_N(X∘Y) ≤ (1+tan α) ω_N(X) ω_N(Y)",
     "X, Y ∈ M^s(n, α), α = max of the two class indices"},
}};

constexpr bool table_in_enum_order() {
    for (std::size_t k = 0; k < kTable.size(); ++k)
        if (static_cast<std::size_t>(kTable[k].id) != k) return false;
    return true;
}
static_assert(table_in_enum_order());

} // namespace

std::span<const InequalityInfo> all_inequalities() { return kTable; }

const InequalityInfo& info(InequalityId id) { return kTable.at(static_cast<std::size_t>(id)); }

std::string_view to_string(InequalityId id) { return info(id).name; }

std::optional<InequalityId> parse_inequality(std::string_view name) {
    const auto it = std::find_if(kTable.begin(), kTable.end(), [&](const auto& e) { return e.name == name; });
    if (it == kTable.end()) return std::nullopt;
    return it->id;
}

} // namespace sector_radius
