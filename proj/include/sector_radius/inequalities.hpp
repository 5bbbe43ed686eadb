#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>

namespace sector_radius {

/// Every inequality the harness can check. Names are stable report keys.
enum class InequalityId {
    A_lower,
    A_upper,
    B_prod4,
    C_had2,
    I_diag_psd,
    II_prod_sec,
    III_had_sec,
    VI_had_diag_min,
    L1_norm_sec,
    L2_block_tan,
    L3_block_sec,
    P1_re_mono,
    P2_im_tan,
    P3_sec,
    SA_omega_le_N,
    T1_prod_sec_N,
    C_B2_sec2,
    C_AD_prod2,
    C_mprod,
    C_secm,
    C_AD_m,
    H2_hermitian_had,
    H3_had_sec_N,
    C_C2_had,
    T_had_m,
    C_AD_had_m,
    L6_had_diag_norm,
    L7_had_diag_omega,
    T_diag_x,
    T_diag_y,
    C_diag_min,
    C_AD_diag_min2,
    T_onetan_min,
    C_onetan,
};

inline constexpr std::size_t kInequalityCount = 34;

/// What random inputs an inequality needs, in argument order.
enum class InputKind {
    General,                ///< Ginibre matrices
    Sectorial,              ///< members of some sector class, randomly rotated
    AccretiveDissipative,   ///< Re X > 0 and Im X > 0
    PsdThenGeneral,         ///< (A >= 0, X)
    GeneralThenHermitian,   ///< (X, Y = Y*)
    GeneralThenPositive,    ///< (X, Y > 0)
};

struct InequalityInfo {
    InequalityId id;
    std::string_view name;
    /// Number of matrix arguments; 0 means "m >= 2 factors".
    int arity;
    InputKind inputs;
    /// Stated for the classical numerical radius only; always evaluated in the operator norm.
    bool classical;
    std::string_view statement;
    std::string_view hypotheses;
};

std::span<const InequalityInfo> all_inequalities();
const InequalityInfo& info(InequalityId id);
std::string_view to_string(InequalityId id);
std::optional<InequalityId> parse_inequality(std::string_view name);

} // namespace sector_radius
