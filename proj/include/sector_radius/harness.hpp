#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "sector_radius/inequalities.hpp"
#include "sector_radius/matrix.hpp"
#include "sector_radius/norms.hpp"
#include "sector_radius/radius.hpp"

namespace sector_radius {

/// Closed interval [lo, hi].
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double mid() const noexcept { return 0.5 * (lo + hi); }
    static Interval point(double v) noexcept { return {v, v}; }
};

Interval operator*(const Interval& a, const Interval& b);
Interval operator+(const Interval& a, const Interval& b);
Interval min(const Interval& a, const Interval& b);

enum class Verdict { CertifiedPass, TolerancePass, CertifiedFail, Inconclusive, Inapplicable };

std::string_view to_string(Verdict v);

/**
 * certified_pass iff lhs.hi <= rhs.lo; certified_fail iff lhs.lo > rhs.hi;
 * otherwise tolerance_pass iff lhs.mid <= rhs.mid (1 + 1e-7) + 1e-9, else inconclusive.
 */
Verdict classify(const Interval& lhs, const Interval& rhs);

struct CheckResult {
    InequalityId id{};
    Interval lhs;
    Interval rhs;
    Verdict verdict = Verdict::Inapplicable;
    /// lhs.mid / rhs.mid (infinite when rhs.mid is 0 and lhs.mid is positive).
    double ratio = 0.0;
    std::uint64_t seed = 0;
    std::string norm;
    std::size_t dim = 0;
    int arity = 0;
    /// Class indices used for sec/tan factors (already inflated), one per sectorial input.
    std::vector<double> alphas;
    /// Why the check was inapplicable, or a caveat about the inputs.
    std::string note;
};

struct CheckOptions {
    RadiusOptions radius{32, 1e-9, 4096};
    int phi_samples = 256;
    /// Added to each computed class index before forming sec/tan factors.
    double alpha_inflation = 1e-8;
    /// Extra offset on top of the inflation; used to probe monotonicity in alpha.
    double alpha_extra = 0.0;
};

/**
 * @brief Evaluates one inequality on concrete inputs with certified intervals.
 *
 * Every omega_N occurrence contributes [value, value + cert_error], norms and
 * sec/tan factors contribute round-off-only intervals (1e-12 relative), and
 * products are formed in interval arithmetic. Precondition failures (wrong
 * arity, no sector rotation, not accretive-dissipative, no Hermitian factor,
 * second factor not positive definite) give Verdict::Inapplicable.
 *
 * I_diag_psd evaluates the bound as stated for any A; when A is not
 * positive semidefinite the result carries a note instead of being filtered,
 * so the counterexample to the unrestricted statement stays visible.
 */
CheckResult check_inequality(InequalityId id, const std::vector<ComplexMatrix>& inputs, const NormSpec& norm,
                             const CheckOptions& options = {});

struct GenerationOptions {
    /// Factors for m-fold inequalities.
    int m = 3;
    double alpha_min = 0.0;
    double alpha_max = 1.4;
};

/// Conforming random inputs for an inequality; deterministic in (id, n, seed).
std::vector<ComplexMatrix> generate_inputs(InequalityId id, std::size_t n, std::uint64_t seed,
                                           const GenerationOptions& options = {});

struct IdSummary {
    int trials = 0;
    std::array<int, 5> tally{}; ///< indexed by Verdict
    double max_ratio = 0.0;
    /// Smallest (rhs.lo - lhs.hi) / max(|rhs.hi|, 1e-300) over applicable trials.
    double worst_margin = std::numeric_limits<double>::infinity();

    int count(Verdict v) const { return tally[static_cast<std::size_t>(v)]; }
};

struct SuiteConfig {
    std::vector<InequalityId> ids;
    int trials = 200;
    std::vector<std::size_t> dims{2, 3, 4, 5, 6};
    std::vector<NormSpec> norms{NormSpec::op(), NormSpec::trace(), NormSpec::frobenius(), NormSpec::schatten(3)};
    std::uint64_t seed = 42;
    GenerationOptions generation;
    CheckOptions check;
    /// 0: SECTOR_RADIUS_THREADS if set, else hardware concurrency.
    unsigned threads = 0;
};

struct SuiteReport {
    SuiteConfig config;
    std::vector<CheckResult> results;
    /// Indexed by InequalityId.
    std::array<IdSummary, kInequalityCount> per_id{};
    bool any_certified_fail = false;
    double wall_time_s = 0.0;

    const IdSummary& summary(InequalityId id) const { return per_id[static_cast<std::size_t>(id)]; }
};

/**
 * Runs every id x dim x norm x trial combination. Classical ids run once per
 * dim in the operator norm regardless of `norms`. Trials are independent and
 * keyed by (seed, id, dim, trial); the same inputs are reused across norms.
 * Results are ordered by task index, so the report does not depend on the
 * thread count.
 */
SuiteReport run_suite(const SuiteConfig& config);
SuiteReport run_suite(const std::vector<InequalityId>& ids, int trials, const std::vector<std::size_t>& dims,
                      const std::vector<NormSpec>& norms, std::uint64_t seed);

struct TightnessOptions {
    std::vector<std::size_t> dims{2, 3, 4, 5, 6};
    NormSpec norm = NormSpec::op();
    GenerationOptions generation;
    CheckOptions check;
    /// Accuracy used for the hand-made extremal fixtures.
    CheckOptions fixture_check{RadiusOptions{1024, 1e-13, 1 << 17}, 4096, 1e-8, 0.0};
    unsigned threads = 0;
};

struct FixtureRatio {
    std::string name;
    CheckResult result;
};

struct TightnessReport {
    InequalityId id{};
    int trials = 0;
    double random_max_ratio = 0.0;
    std::uint64_t random_max_seed = 0;
    std::vector<FixtureRatio> fixtures;
    double max_ratio = 0.0;
    std::string max_ratio_source;
    IdSummary summary;
};

/// Largest lhs/rhs ratio over random conforming inputs and the built-in extremal fixtures.
/// Throws std::invalid_argument for the block-positivity ids, which have no meaningful ratio.
TightnessReport tightness_scan(InequalityId id, int trials, std::uint64_t seed, const TightnessOptions& options = {});

/// Worker count from SECTOR_RADIUS_THREADS, capped by hardware concurrency.
unsigned default_thread_count();

} // namespace sector_radius
