// sector-radius: command-line front end for the numerical-radius toolkit.
//
//   sector-radius compute omega-n --norm sp:3 --in x.json
//   sector-radius gen sectorial --n 4 --alpha 0.7 --seed 1 -o x.json
//   sector-radius verify --ids all --trials 200 --dims 2..6 --norms op,tr,fro,sp:3 --seed 42 --out report.json
//   sector-radius tighten --id B_prod4 --trials 500
//   sector-radius explain --id C_onetan
//
// verify exits 0 when no check is certified_fail, 1 otherwise; usage and
// input errors exit 2.

#include <CLI11.hpp>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "sector_radius/error.hpp"
#include "sector_radius/generator.hpp"
#include "sector_radius/harness.hpp"
#include "sector_radius/inequalities.hpp"
#include "sector_radius/io.hpp"
#include "sector_radius/radius.hpp"
#include "sector_radius/sectorial.hpp"

namespace sr = sector_radius;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto end = text.find(sep, start);
        const auto piece = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
        if (!piece.empty()) out.push_back(piece);
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return out;
}

std::size_t parse_size(const std::string& s) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw UsageError("not a dimension: '" + s + "'");
    return v;
}

// "2..6" or "2,3,5"
std::vector<std::size_t> parse_dims(const std::string& text) {
    std::vector<std::size_t> dims;
    if (const auto dots = text.find(".."); dots != std::string::npos) {
        const auto lo = parse_size(text.substr(0, dots));
        const auto hi = parse_size(text.substr(dots + 2));
        if (lo < 1 || hi < lo) throw UsageError("bad dimension range '" + text + "'");
        for (auto d = lo; d <= hi; ++d) dims.push_back(d);
        return dims;
    }
    for (const auto& piece : split(text, ',')) {
        const auto d = parse_size(piece);
        if (d < 1) throw UsageError("dimensions must be >= 1");
        dims.push_back(d);
    }
    if (dims.empty()) throw UsageError("no dimensions given");
    return dims;
}

std::vector<sr::NormSpec> parse_norms(const std::string& text) {
    std::vector<sr::NormSpec> norms;
    for (const auto& piece : split(text, ',')) norms.push_back(sr::NormSpec::parse(piece));
    if (norms.empty()) throw UsageError("no norms given");
    return norms;
}

sr::InequalityId parse_id(const std::string& name) {
    const auto id = sr::parse_inequality(name);
    if (!id) throw UsageError("unknown inequality id '" + name + "' (see: sector-radius explain --list)");
    return *id;
}

std::vector<sr::InequalityId> parse_ids(const std::string& text) {
    std::vector<sr::InequalityId> ids;
    if (text == "all") {
        for (const auto& e : sr::all_inequalities()) ids.push_back(e.id);
        return ids;
    }
    for (const auto& piece : split(text, ',')) ids.push_back(parse_id(piece));
    if (ids.empty()) throw UsageError("no inequality ids given");
    return ids;
}

sr::ComplexMatrix load_input(const std::string& path) {
    if (path == "-") return sr::io::read_matrix(std::cin);
    return sr::io::read_matrix_file(path);
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

void print_summary(const sr::SuiteReport& report) {
    std::cout << std::left << std::setw(20) << "id" << std::right << std::setw(8) << "trials" << std::setw(10)
              << "cert_ok" << std::setw(9) << "tol_ok" << std::setw(11) << "cert_fail" << std::setw(8) << "incon"
              << std::setw(8) << "n/a" << std::setw(14) << "max_ratio" << '\n';
    for (const auto id : report.config.ids) {
        const auto& s = report.summary(id);
        std::cout << std::left << std::setw(20) << sr::to_string(id) << std::right << std::setw(8) << s.trials
                  << std::setw(10) << s.count(sr::Verdict::CertifiedPass) << std::setw(9)
                  << s.count(sr::Verdict::TolerancePass) << std::setw(11) << s.count(sr::Verdict::CertifiedFail)
                  << std::setw(8) << s.count(sr::Verdict::Inconclusive) << std::setw(8)
                  << s.count(sr::Verdict::Inapplicable) << std::setw(14) << std::setprecision(8) << s.max_ratio
                  << '\n';
    }
    std::cout << "checks: " << report.results.size() << "  wall time: " << std::setprecision(3)
              << report.wall_time_s << " s  result: "
              << (report.any_certified_fail ? "CERTIFIED FAILURE" : "no certified failures") << '\n';
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized numerical radius and sector-matrix inequality toolkit"};
    app.require_subcommand(1);

    // compute
    auto* compute = app.add_subcommand("compute", "Evaluate a quantity for one matrix read from JSON");
    std::string quantity, in_path = "-", norm_text = "op", format = "json";
    int grid = 1024, samples = 64, phi_samples = 4096;
    double refine_tol = 1e-10;
    compute->add_option("quantity", quantity, "omega | omega-n | range | sector-index | sector-rotation")
        ->required()
        ->check(CLI::IsMember({"omega", "omega-n", "range", "sector-index", "sector-rotation"}));
    compute->add_option("--in", in_path, "Matrix JSON file ('-' for stdin)");
    compute->add_option("--norm", norm_text, "op | tr | fro | sp:<p>");
    compute->add_option("--grid", grid, "Initial theta grid for omega-n")->check(CLI::Range(8, 1 << 24));
    compute->add_option("--refine-tol", refine_tol, "Relative certification tolerance for omega-n");
    compute->add_option("--samples", samples, "Boundary samples for range")->check(CLI::Range(4, 1 << 20));
    compute->add_option("--phi-samples", phi_samples, "Rotation samples for sector-rotation")
        ->check(CLI::Range(8, 1 << 20));
    compute->add_option("--format", format, "json | csv (range only)")->check(CLI::IsMember({"json", "csv"}));

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a seeded random matrix as JSON");
    std::string family, out_path;
    std::size_t n = 3;
    double alpha = 0.5;
    std::uint64_t seed = 42;
    gen->add_option("family", family, "sectorial | ginibre | hermitian | pd | ad | unitary | normal")
        ->required()
        ->check(CLI::IsMember({"sectorial", "ginibre", "hermitian", "pd", "ad", "unitary", "normal"}));
    gen->add_option("--n", n, "Dimension")->check(CLI::Range(std::size_t{1}, std::size_t{4096}));
    gen->add_option("--alpha", alpha, "Sector index for 'sectorial', in [0, pi/2)");
    gen->add_option("--seed", seed, "Seed");
    gen->add_option("-o,--out", out_path, "Output file (default stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "Randomized certified verification of the inequality suite");
    std::string ids_text = "all", dims_text = "2..6", norms_text = "op,tr,fro,sp:3", csv_path;
    int trials = 200, m = 3;
    unsigned threads = 0;
    double alpha_max = 1.4;
    verify->add_option("--ids", ids_text, "'all' or comma-separated ids");
    verify->add_option("--trials", trials, "Trials per (id, dim, norm)")->check(CLI::PositiveNumber);
    verify->add_option("--dims", dims_text, "Dimensions, '2..6' or '2,3'");
    verify->add_option("--norms", norms_text, "Comma-separated norms");
    verify->add_option("--seed", seed, "Suite seed");
    verify->add_option("--m", m, "Factors for m-fold inequalities")->check(CLI::Range(2, 16));
    verify->add_option("--alpha-max", alpha_max, "Largest sector index drawn for sectorial inputs")
        ->check(CLI::Range(0.0, 1.5707));
    verify->add_option("--threads", threads, "Worker threads (0: SECTOR_RADIUS_THREADS or all cores)");
    verify->add_option("--out", out_path, "JSON report path");
    verify->add_option("--csv", csv_path, "CSV report path");

    // tighten
    auto* tighten = app.add_subcommand("tighten", "Search for the largest lhs/rhs ratio of one inequality");
    std::string id_text;
    tighten->add_option("--id", id_text, "Inequality id")->required();
    tighten->add_option("--trials", trials, "Random trials")->check(CLI::NonNegativeNumber);
    tighten->add_option("--seed", seed, "Seed");
    tighten->add_option("--dims", dims_text, "Dimensions");
    tighten->add_option("--norm", norm_text, "Norm");
    tighten->add_option("--threads", threads, "Worker threads");

    // explain
    auto* explain = app.add_subcommand("explain", "Describe an inequality id");
    bool list = false;
    explain->add_option("--id", id_text, "Inequality id");
    explain->add_flag("--list", list, "List all ids");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*compute) {
            const auto x = load_input(in_path);
            const auto norm = sr::NormSpec::parse(norm_text);
            sr::io::json out;
            if (quantity == "omega") {
                out = sr::io::to_json(sr::omega_n(sr::NormSpec::op(), x, grid, refine_tol));
            } else if (quantity == "omega-n") {
                out = sr::io::to_json(sr::omega_n(norm, x, grid, refine_tol));
            } else if (quantity == "range") {
                const auto points = sr::numerical_range_boundary(x, samples);
                if (format == "csv") {
                    std::cout << "theta,re,im\n" << std::setprecision(17);
                    for (const auto& p : points)
                        std::cout << p.theta << ',' << p.boundary_point.real() << ',' << p.boundary_point.imag()
                                  << '\n';
                    return 0;
                }
                out = sr::io::json::array();
                for (const auto& p : points)
                    out.push_back({{"theta", p.theta},
                                   {"point", sr::io::json::array({p.boundary_point.real(), p.boundary_point.imag()})}});
            } else if (quantity == "sector-index") {
                out = sr::io::to_json(sr::sector_index(x));
            } else {
                out = sr::io::to_json(sr::rotation_to_sector(x, phi_samples));
            }
            std::cout << out.dump(2) << '\n';
            return 0;
        }

        if (*gen) {
            const sr::GenConfig cfg{n, seed};
            sr::ComplexMatrix x;
            if (family == "sectorial") x = sr::random_sectorial(cfg, alpha);
            else if (family == "ginibre") x = sr::random_ginibre(cfg);
            else if (family == "hermitian") x = sr::random_hermitian(cfg);
            else if (family == "pd") x = sr::random_pd(cfg);
            else if (family == "ad") x = sr::random_accretive_dissipative(cfg);
            else if (family == "unitary") x = sr::random_unitary(cfg);
            else x = sr::random_normal(cfg);
            emit(out_path, sr::io::matrix_to_json(x).dump() + "\n");
            return 0;
        }

        if (*verify) {
            sr::SuiteConfig config;
            config.ids = parse_ids(ids_text);
            config.trials = trials;
            config.dims = parse_dims(dims_text);
            config.norms = parse_norms(norms_text);
            config.seed = seed;
            config.generation.m = m;
            config.generation.alpha_max = alpha_max;
            config.threads = threads;
            const auto report = sr::run_suite(config);
            print_summary(report);
            if (!out_path.empty()) emit(out_path, sr::io::to_json(report).dump(1) + "\n");
            if (!csv_path.empty()) {
                std::ofstream csv(csv_path);
                if (!csv) throw std::runtime_error("cannot write " + csv_path);
                sr::io::write_csv(csv, report);
            }
            return report.any_certified_fail ? 1 : 0;
        }

        if (*tighten) {
            sr::TightnessOptions options;
            options.dims = parse_dims(dims_text);
            options.norm = sr::NormSpec::parse(norm_text);
            options.threads = threads;
            const auto report = sr::tightness_scan(parse_id(id_text), trials, seed, options);
            std::cout << sr::io::to_json(report).dump(2) << '\n';
            return 0;
        }

        if (*explain) {
            if (list || id_text.empty()) {
                for (const auto& e : sr::all_inequalities()) std::cout << e.name << "  " << e.statement << '\n';
                return 0;
            }
            const auto& e = sr::info(parse_id(id_text));
            std::cout << e.name << '\n'
                      << "  statement:  " << e.statement << '\n'
                      << "  hypotheses: " << e.hypotheses << '\n'
                      << "  arity:      " << (e.arity == 0 ? std::string("m >= 2") : std::to_string(e.arity)) << '\n'
                      << "  norm:       " << (e.classical ? "operator norm only" : "any supported norm") << '\n';
            return 0;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
