#include "sector_radius/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>

#include "sector_radius/eigen.hpp"
#include "sector_radius/error.hpp"
#include "sector_radius/generator.hpp"
#include "sector_radius/sectorial.hpp"

namespace sector_radius {

namespace {

constexpr double kRoundoff = 1e-12;
constexpr double kBlockTolerance = 1e-9;

Interval exact(double v) {
    const double pad = kRoundoff * std::abs(v);
    return {v - pad, v + pad};
}

Interval radius_interval(const RadiusEstimate& e) {
    return {e.value * (1.0 - kRoundoff), e.upper() * (1.0 + kRoundoff)};
}

struct Inapplicable {
    std::string reason;
};

struct Sectorized {
    ComplexMatrix rotated; // zX
    double alpha;          // inflated class index
};

class Evaluator {
  public:
    Evaluator(InequalityId id, const NormSpec& norm, const CheckOptions& options)
        : id_(id), norm_(norm), options_(options) {}

    Interval omega(const ComplexMatrix& m) const { return radius_interval(omega_n(norm_, m, options_.radius)); }
    Interval norm(const ComplexMatrix& m) const { return exact(evaluate_norm(norm_, m)); }

    Sectorized sectorize(const ComplexMatrix& x) const {
        try {
            const auto info = rotation_to_sector(x, options_.phi_samples);
            const double alpha = info.index_alpha + options_.alpha_inflation + options_.alpha_extra;
            if (!(alpha < std::numbers::pi / 2)) throw Inapplicable{"inflated class index reaches pi/2"};
            return {x * info.rotation_z, alpha};
        } catch (const DomainError& e) {
            throw Inapplicable{e.what()};
        }
    }

    static Interval sec(double alpha) { return exact(1.0 / std::cos(alpha)); }
    static Interval tan(double alpha) { return exact(std::tan(alpha)); }

    Interval omega_product(std::span<const ComplexMatrix> xs) const {
        Interval acc = Interval::point(1.0);
        for (const auto& x : xs) acc = acc * omega(x);
        return acc;
    }

  private:
    InequalityId id_;
    NormSpec norm_;
    CheckOptions options_;
};

ComplexMatrix product(std::span<const ComplexMatrix> xs) {
    ComplexMatrix acc = xs.front();
    for (std::size_t k = 1; k < xs.size(); ++k) acc = acc * xs[k];
    return acc;
}

ComplexMatrix hadamard_product(std::span<const ComplexMatrix> xs) {
    ComplexMatrix acc = xs.front();
    for (std::size_t k = 1; k < xs.size(); ++k) acc = hadamard(acc, xs[k]);
    return acc;
}

double max_real_diagonal(const ComplexMatrix& m) {
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < m.size(); ++j) best = std::max(best, m(j, j).real());
    return best;
}

bool is_positive_definite(const ComplexMatrix& y) {
    if (!y.is_hermitian(kHermitianTolerance * std::max(1.0, y.frobenius_norm()))) return false;
    return min_eigenvalue(y) > accretivity_threshold(y);
}

// -lambda_min(B) / max(1, ||B||_F); Jacobi leaves at most ~1e-13 ||B||_F eigenvalue error.
Interval negative_part(const ComplexMatrix& block) {
    const double scale = std::max(1.0, block.frobenius_norm());
    const double v = -min_eigenvalue(block) / scale;
    const double pad = 2e-13 * static_cast<double>(block.size());
    return {v - pad, v + pad};
}

struct Sides {
    Interval lhs;
    Interval rhs;
    std::vector<double> alphas;
    std::string note;
};

Sides evaluate(InequalityId id, const std::vector<ComplexMatrix>& in, const Evaluator& ev) {
    using enum InequalityId;
    Sides s;

    std::vector<Sectorized> sec;
    const auto& meta = info(id);
    if (meta.inputs == InputKind::Sectorial) {
        for (const auto& x : in) {
            sec.push_back(ev.sectorize(x));
            s.alphas.push_back(sec.back().alpha);
        }
    }
    if (meta.inputs == InputKind::AccretiveDissipative) {
        for (std::size_t k = 0; k < in.size(); ++k)
            if (!is_accretive_dissipative(in[k]))
                throw Inapplicable{"input " + std::to_string(k) + " is not accretive-dissipative"};
    }
    auto sec_product = [&] {
        Interval acc = Interval::point(1.0);
        for (const auto& z : sec) acc = acc * Evaluator::sec(z.alpha);
        return acc;
    };
    auto max_alpha = [&] {
        double a = 0.0;
        for (const auto& z : sec) a = std::max(a, z.alpha);
        return a;
    };
    auto power = [](Interval base, std::size_t m) {
        Interval acc = Interval::point(1.0);
        for (std::size_t k = 0; k < m; ++k) acc = acc * base;
        return acc;
    };

    switch (id) {
    case A_lower:
        s.lhs = exact(0.5 * evaluate_norm(NormSpec::op(), in[0]));
        s.rhs = ev.omega(in[0]);
        break;
    case A_upper:
        s.lhs = ev.omega(in[0]);
        s.rhs = exact(evaluate_norm(NormSpec::op(), in[0]));
        break;
    case B_prod4:
        s.lhs = ev.omega(in[0] * in[1]);
        s.rhs = Interval::point(4.0) * ev.omega(in[0]) * ev.omega(in[1]);
        break;
    case C_had2:
        s.lhs = ev.omega(hadamard(in[0], in[1]));
        s.rhs = Interval::point(2.0) * ev.omega(in[0]) * ev.omega(in[1]);
        break;
    case I_diag_psd: {
        const auto& a = in[0];
        if (!a.is_hermitian(kHermitianTolerance * std::max(1.0, a.frobenius_norm())) ||
            !is_psd(a, kHermitianTolerance)) {
            s.note = "first factor is not positive semidefinite; the bound is only claimed for A >= 0";
        }
        s.lhs = ev.omega(hadamard(a, in[1]));
        s.rhs = exact(max_real_diagonal(a)) * ev.omega(in[1]);
        break;
    }
    case II_prod_sec:
    case T1_prod_sec_N:
        s.lhs = ev.omega(in[0] * in[1]);
        s.rhs = sec_product() * ev.omega(in[0]) * ev.omega(in[1]);
        break;
    case III_had_sec:
    case H3_had_sec_N:
        s.lhs = ev.omega(hadamard(in[0], in[1]));
        s.rhs = sec_product() * ev.omega(in[0]) * ev.omega(in[1]);
        break;
    case VI_had_diag_min:
    case C_diag_min: {
        s.lhs = ev.omega(hadamard(in[0], in[1]));
        const auto by_x = exact(in[0].max_abs_diagonal()) * ev.omega(in[1]);
        const auto by_y = exact(in[1].max_abs_diagonal()) * ev.omega(in[0]);
        s.rhs = sec_product() * min(by_x, by_y);
        break;
    }
    case L1_norm_sec:
        s.lhs = ev.norm(sec[0].rotated);
        s.rhs = Evaluator::sec(sec[0].alpha) * ev.norm(real_part(sec[0].rotated));
        break;
    case L2_block_tan:
        s.lhs = negative_part(tan_block(sec[0].rotated, sec[0].alpha));
        s.rhs = Interval::point(kBlockTolerance);
        break;
    case L3_block_sec:
        s.lhs = negative_part(sec_block(sec[0].rotated, sec[0].alpha));
        s.rhs = Interval::point(kBlockTolerance);
        break;
    case P1_re_mono:
        s.lhs = ev.omega(real_part(in[0]));
        s.rhs = ev.omega(in[0]);
        break;
    case P2_im_tan: {
        const auto parts = cartesian_decompose(sec[0].rotated);
        s.lhs = ev.omega(parts.im);
        s.rhs = Evaluator::tan(sec[0].alpha) * ev.omega(parts.re);
        break;
    }
    case P3_sec:
        s.lhs = ev.omega(sec[0].rotated);
        s.rhs = Evaluator::sec(sec[0].alpha) * ev.omega(real_part(sec[0].rotated));
        break;
    case SA_omega_le_N:
        s.lhs = ev.omega(in[0]);
        s.rhs = ev.norm(in[0]);
        break;
    case C_B2_sec2:
        s.lhs = ev.omega(in[0] * in[1]);
        s.rhs = power(Evaluator::sec(max_alpha()), 2) * ev.omega(in[0]) * ev.omega(in[1]);
        break;
    case C_AD_prod2:
        s.lhs = ev.omega(in[0] * in[1]);
        s.rhs = Interval::point(2.0) * ev.omega(in[0]) * ev.omega(in[1]);
        break;
    case C_mprod:
        s.lhs = ev.omega(product(in));
        s.rhs = sec_product() * ev.omega_product(in);
        break;
    case C_secm:
        s.lhs = ev.omega(product(in));
        s.rhs = power(Evaluator::sec(max_alpha()), in.size()) * ev.omega_product(in);
        break;
    case C_AD_m:
        s.lhs = ev.omega(product(in));
        s.rhs = exact(std::pow(2.0, 0.5 * static_cast<double>(in.size()))) * ev.omega_product(in);
        break;
    case H2_hermitian_had: {
        const auto hermitian = [](const ComplexMatrix& m) {
            return m.is_hermitian(kHermitianTolerance * std::max(1.0, m.frobenius_norm()));
        };
        if (!hermitian(in[0]) && !hermitian(in[1])) throw Inapplicable{"neither factor is Hermitian"};
        s.lhs = ev.omega(hadamard(in[0], in[1]));
        s.rhs = ev.omega(in[0]) * ev.omega(in[1]);
        break;
    }
    case C_C2_had:
        s.lhs = ev.omega(hadamard(in[0], in[1]));
        s.rhs = power(Evaluator::sec(max_alpha()), 2) * ev.omega(in[0]) * ev.omega(in[1]);
        break;
    case T_had_m:
        s.lhs = ev.omega(hadamard_product(in));
        s.rhs = sec_product() * ev.omega_product(in);
        break;
    case C_AD_had_m:
        s.lhs = ev.omega(hadamard_product(in));
        s.rhs = exact(std::pow(2.0, 0.5 * static_cast<double>(in.size()))) * ev.omega_product(in);
        break;
    case L6_had_diag_norm:
        if (!is_positive_definite(in[1])) throw Inapplicable{"second factor is not positive definite"};
        s.lhs = ev.norm(hadamard(in[0], in[1]));
        s.rhs = exact(max_real_diagonal(in[1])) * ev.norm(in[0]);
        break;
    case L7_had_diag_omega:
        if (!is_positive_definite(in[1])) throw Inapplicable{"second factor is not positive definite"};
        s.lhs = ev.omega(hadamard(in[0], in[1]));
        s.rhs = exact(max_real_diagonal(in[1])) * ev.omega(in[0]);
        break;
    case T_diag_x:
        s.lhs = ev.omega(hadamard(in[0], in[1]));
        s.rhs = sec_product() * exact(in[0].max_abs_diagonal()) * ev.omega(in[1]);
        break;
    case T_diag_y:
        s.lhs = ev.omega(hadamard(in[0], in[1]));
        s.rhs = sec_product() * exact(in[1].max_abs_diagonal()) * ev.omega(in[0]);
        break;
    case C_AD_diag_min2: {
        s.lhs = ev.omega(hadamard(in[0], in[1]));
        const auto by_x = exact(in[0].max_abs_diagonal()) * ev.omega(in[1]);
        const auto by_y = exact(in[1].max_abs_diagonal()) * ev.omega(in[0]);
        s.rhs = Interval::point(2.0) * min(by_x, by_y);
        break;
    }
    case T_onetan_min: {
        s.lhs = ev.omega(hadamard(in[0], in[1]));
        const auto one = Interval::point(1.0);
        const auto first = (one + Evaluator::tan(sec[0].alpha)) * ev.omega(real_part(sec[0].rotated)) * ev.omega(in[1]);
        const auto second = (one + Evaluator::tan(sec[1].alpha)) * ev.omega(in[0]) * ev.omega(real_part(sec[1].rotated));
        s.rhs = min(first, second);
        break;
    }
    case C_onetan:
        s.lhs = ev.omega(hadamard(in[0], in[1]));
        s.rhs = (Interval::point(1.0) + Evaluator::tan(max_alpha())) * ev.omega(in[0]) * ev.omega(in[1]);
        break;
    }
    return s;
}

double ratio_of(const Interval& lhs, const Interval& rhs) {
    const double l = lhs.mid();
    const double r = rhs.mid();
    if (r > 0.0) return l / r;
    if (l <= 0.0) return 0.0;
    return std::numeric_limits<double>::infinity();
}

std::string describe_arity(const InequalityInfo& meta) {
    return meta.arity == 0 ? std::string("at least 2") : std::to_string(meta.arity);
}

// Parallel for over [0, count) with results written by index.
template <typename F>
void parallel_for(std::size_t count, unsigned threads, F&& body) {
    if (threads <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    const unsigned used = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    workers.reserve(used);
    for (unsigned t = 0; t < used; ++t) {
        workers.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
        });
    }
}

void accumulate(IdSummary& summary, const CheckResult& r) {
    ++summary.trials;
    ++summary.tally[static_cast<std::size_t>(r.verdict)];
    if (r.verdict == Verdict::Inapplicable) return;
    summary.max_ratio = std::max(summary.max_ratio, r.ratio);
    const double margin = (r.rhs.lo - r.lhs.hi) / std::max(std::abs(r.rhs.hi), 1e-300);
    summary.worst_margin = std::min(summary.worst_margin, margin);
}

std::uint64_t trial_seed(std::uint64_t seed, InequalityId id, std::size_t dim, int trial) {
    std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(id));
    s = derive_seed(s, dim);
    return derive_seed(s, static_cast<std::uint64_t>(trial));
}

struct Fixture {
    std::string name;
    std::vector<ComplexMatrix> inputs;
};

std::vector<Fixture> fixtures_for(InequalityId id) {
    using enum InequalityId;
    const auto nilpotent = ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}});
    const auto nilpotent_t = ComplexMatrix::from_rows({{0.0, 0.0}, {1.0, 0.0}});
    const auto e11 = ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, 0.0}});
    const auto eye = ComplexMatrix::identity(2);
    const std::vector<Complex> normal_diag{Complex(2.0, 0.0), Complex(0.0, 1.0), Complex(-1.0, -1.0)};
    const auto normal = ComplexMatrix::diagonal(normal_diag);
    const auto hermitian = ComplexMatrix::from_rows({{1.0, Complex(0.0, 2.0)}, {Complex(0.0, -2.0), -3.0}});
    const auto diagonal = ComplexMatrix::from_rows({{Complex(1.0, 1.0), 0.0}, {0.0, Complex(-2.0, 0.5)}});

    switch (id) {
    case A_lower: return {{"nilpotent", {nilpotent}}};
    case A_upper: return {{"normal", {normal}}, {"hermitian", {hermitian}}};
    case B_prod4: return {{"nilpotent_pair", {nilpotent, nilpotent_t}}};
    case C_had2: return {{"nilpotent_square", {nilpotent, nilpotent}}};
    case I_diag_psd: return {{"identity_weight", {eye, e11}}};
    case H2_hermitian_had:
        return {{"rank_one_projector_pair", {e11, e11}}, {"hermitian_with_identity", {hermitian, eye}}};
    case SA_omega_le_N:
    case P1_re_mono: return {{"hermitian", {hermitian}}};
    case L6_had_diag_norm:
    case L7_had_diag_omega: return {{"diagonal_with_identity", {diagonal, eye}}};
    case II_prod_sec:
    case III_had_sec:
    case T1_prod_sec_N:
    case H3_had_sec_N:
    case C_B2_sec2:
    case C_C2_had:
    case C_onetan:
    case T_onetan_min:
    case T_diag_x:
    case T_diag_y:
    case C_diag_min:
    case VI_had_diag_min: return {{"identity_pair", {eye, eye}}, {"projector_plus_identity", {eye + e11, eye + e11}}};
    default: return {};
    }
}

} // namespace

Interval operator*(const Interval& a, const Interval& b) {
    const double p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

Interval min(const Interval& a, const Interval& b) { return {std::min(a.lo, b.lo), std::min(a.hi, b.hi)}; }

std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::CertifiedPass: return "certified_pass";
    case Verdict::TolerancePass: return "tolerance_pass";
    case Verdict::CertifiedFail: return "certified_fail";
    case Verdict::Inconclusive: return "inconclusive";
    case Verdict::Inapplicable: return "inapplicable";
    }
    return "unknown";
}

Verdict classify(const Interval& lhs, const Interval& rhs) {
    if (lhs.hi <= rhs.lo) return Verdict::CertifiedPass;
    if (lhs.lo > rhs.hi) return Verdict::CertifiedFail;
    if (lhs.mid() <= rhs.mid() * (1.0 + 1e-7) + 1e-9) return Verdict::TolerancePass;
    return Verdict::Inconclusive;
}

CheckResult check_inequality(InequalityId id, const std::vector<ComplexMatrix>& inputs, const NormSpec& norm,
                             const CheckOptions& options) {
    const auto& meta = info(id);
    CheckResult result;
    result.id = id;
    result.norm = meta.classical ? NormSpec::op().to_string() : norm.to_string();
    result.arity = static_cast<int>(inputs.size());
    result.dim = inputs.empty() ? 0 : inputs.front().size();

    const bool arity_ok = meta.arity == 0 ? inputs.size() >= 2 : inputs.size() == static_cast<std::size_t>(meta.arity);
    if (!arity_ok) {
        result.note = "expected " + describe_arity(meta) + " inputs, got " + std::to_string(inputs.size());
        return result;
    }
    for (const auto& m : inputs) {
        if (m.size() != result.dim || m.empty()) {
            result.note = "inputs must be non-empty and share one dimension";
            return result;
        }
    }

    const Evaluator ev(id, meta.classical ? NormSpec::op() : norm, options);
    try {
        auto sides = evaluate(id, inputs, ev);
        result.lhs = sides.lhs;
        result.rhs = sides.rhs;
        result.alphas = std::move(sides.alphas);
        result.note = std::move(sides.note);
        result.verdict = classify(result.lhs, result.rhs);
        result.ratio = ratio_of(result.lhs, result.rhs);
    } catch (const Inapplicable& e) {
        result.verdict = Verdict::Inapplicable;
        result.note = e.reason;
    }
    return result;
}

std::vector<ComplexMatrix> generate_inputs(InequalityId id, std::size_t n, std::uint64_t seed,
                                           const GenerationOptions& options) {
    const auto& meta = info(id);
    const std::size_t count = meta.arity == 0 ? static_cast<std::size_t>(std::max(2, options.m))
                                              : static_cast<std::size_t>(meta.arity);
    std::vector<ComplexMatrix> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        const GenConfig cfg{n, derive_seed(seed, k)};
        switch (meta.inputs) {
        case InputKind::General: out.push_back(random_ginibre(cfg)); break;
        case InputKind::Sectorial: {
            SplitMix64 rng(derive_seed(seed, 100 + k));
            const double alpha = rng.uniform(options.alpha_min, options.alpha_max);
            const double phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
            out.push_back(rotate(random_sectorial(cfg, alpha), phase));
            break;
        }
        case InputKind::AccretiveDissipative: out.push_back(random_accretive_dissipative(cfg)); break;
        case InputKind::PsdThenGeneral: out.push_back(k == 0 ? random_pd(cfg) : random_ginibre(cfg)); break;
        case InputKind::GeneralThenHermitian:
            out.push_back(k == 0 ? random_ginibre(cfg) : random_hermitian(cfg));
            break;
        case InputKind::GeneralThenPositive: out.push_back(k == 0 ? random_ginibre(cfg) : random_pd(cfg)); break;
        }
    }
    return out;
}

unsigned default_thread_count() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("SECTOR_RADIUS_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1) hw = std::min(hw, static_cast<unsigned>(cap));
    }
    return hw;
}

SuiteReport run_suite(const SuiteConfig& config) {
    if (config.trials < 1) throw std::invalid_argument("run_suite: trials must be >= 1");
    if (config.dims.empty()) throw std::invalid_argument("run_suite: no dimensions given");
    if (config.norms.empty()) throw std::invalid_argument("run_suite: no norms given");
    for (std::size_t d : config.dims)
        if (d < 1) throw std::invalid_argument("run_suite: dimensions must be >= 1");

    const auto start = std::chrono::steady_clock::now();

    struct Task {
        InequalityId id;
        std::size_t dim;
        NormSpec norm;
        int trial;
    };
    std::vector<Task> tasks;
    for (const auto id : config.ids) {
        const bool classical = info(id).classical;
        for (const std::size_t dim : config.dims) {
            if (classical) {
                for (int t = 0; t < config.trials; ++t) tasks.push_back({id, dim, NormSpec::op(), t});
                continue;
            }
            for (const auto& norm : config.norms)
                for (int t = 0; t < config.trials; ++t) tasks.push_back({id, dim, norm, t});
        }
    }

    SuiteReport report;
    report.config = config;
    report.results.resize(tasks.size());
    const unsigned threads = config.threads == 0 ? default_thread_count() : config.threads;
    parallel_for(tasks.size(), threads, [&](std::size_t i) {
        const auto& task = tasks[i];
        const auto seed = trial_seed(config.seed, task.id, task.dim, task.trial);
        const auto inputs = generate_inputs(task.id, task.dim, seed, config.generation);
        auto r = check_inequality(task.id, inputs, task.norm, config.check);
        r.seed = seed;
        report.results[i] = std::move(r);
    });

    for (const auto& r : report.results) {
        accumulate(report.per_id[static_cast<std::size_t>(r.id)], r);
        if (r.verdict == Verdict::CertifiedFail) report.any_certified_fail = true;
    }
    report.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

SuiteReport run_suite(const std::vector<InequalityId>& ids, int trials, const std::vector<std::size_t>& dims,
                      const std::vector<NormSpec>& norms, std::uint64_t seed) {
    SuiteConfig config;
    config.ids = ids;
    config.trials = trials;
    config.dims = dims;
    config.norms = norms;
    config.seed = seed;
    return run_suite(config);
}

TightnessReport tightness_scan(InequalityId id, int trials, std::uint64_t seed, const TightnessOptions& options) {
    if (id == InequalityId::L2_block_tan || id == InequalityId::L3_block_sec) {
        throw std::invalid_argument("tightness_scan: block positivity checks have no lhs/rhs ratio");
    }
    if (trials < 0) throw std::invalid_argument("tightness_scan: trials must be >= 0");
    if (options.dims.empty() && trials > 0) throw std::invalid_argument("tightness_scan: no dimensions given");

    TightnessReport report;
    report.id = id;
    report.trials = trials;

    std::vector<CheckResult> results(static_cast<std::size_t>(trials));
    const unsigned threads = options.threads == 0 ? default_thread_count() : options.threads;
    parallel_for(results.size(), threads, [&](std::size_t i) {
        const std::size_t dim = options.dims[i % options.dims.size()];
        const auto s = trial_seed(seed, id, dim, static_cast<int>(i));
        auto r = check_inequality(id, generate_inputs(id, dim, s, options.generation), options.norm, options.check);
        r.seed = s;
        results[i] = std::move(r);
    });
    for (const auto& r : results) {
        accumulate(report.summary, r);
        if (r.verdict != Verdict::Inapplicable && r.ratio > report.random_max_ratio) {
            report.random_max_ratio = r.ratio;
            report.random_max_seed = r.seed;
        }
    }
    report.max_ratio = report.random_max_ratio;
    report.max_ratio_source = trials > 0 ? "random trial seed " + std::to_string(report.random_max_seed) : "none";

    for (auto& fixture : fixtures_for(id)) {
        auto r = check_inequality(id, fixture.inputs, options.norm, options.fixture_check);
        if (r.verdict != Verdict::Inapplicable && r.ratio > report.max_ratio) {
            report.max_ratio = r.ratio;
            report.max_ratio_source = "fixture " + fixture.name;
        }
        report.fixtures.push_back({std::move(fixture.name), std::move(r)});
    }
    return report;
}

} // namespace sector_radius
