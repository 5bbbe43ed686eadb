#include "sector_radius/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "sector_radius/error.hpp"

namespace sector_radius::io {

namespace {

// JSON has no representation for inf/nan.
json number(double v) {
    if (!std::isfinite(v)) return nullptr;
    return v;
}

} // namespace

json matrix_to_json(const ComplexMatrix& m) {
    json entries = json::array();
    for (const auto& z : m.entries()) entries.push_back(json::array({z.real(), z.imag()}));
    return {{"n", m.size()}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("entries")) {
        throw DimensionError("matrix json: expected an object with \"n\" and \"entries\"");
    }
    if (!j["n"].is_number_unsigned()) throw DimensionError("matrix json: \"n\" must be a non-negative integer");
    const auto n = j["n"].get<std::size_t>();
    const auto& entries = j["entries"];
    if (!entries.is_array()) throw DimensionError("matrix json: \"entries\" must be an array");
    if (entries.size() != n * n) {
        throw DimensionError("matrix json: expected " + std::to_string(n * n) + " entries, got " +
                             std::to_string(entries.size()));
    }
    std::vector<Complex> data;
    data.reserve(entries.size());
    for (const auto& e : entries) {
        if (e.is_number()) {
            data.emplace_back(e.get<double>(), 0.0);
        } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
            data.emplace_back(e[0].get<double>(), e[1].get<double>());
        } else {
            throw DomainError("matrix json: each entry must be [re, im] or a real number");
        }
    }
    return ComplexMatrix(n, std::move(data));
}

ComplexMatrix read_matrix(std::istream& in) {
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw DomainError(std::string("matrix json: ") + e.what());
    }
    return matrix_from_json(j);
}

ComplexMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_matrix(in);
}

void write_matrix(std::ostream& out, const ComplexMatrix& m) { out << matrix_to_json(m).dump() << '\n'; }

json to_json(const Interval& i) { return json::array({number(i.lo), number(i.hi)}); }

json to_json(const CheckResult& r) {
    json j{{"id", std::string(to_string(r.id))},
           {"norm", r.norm},
           {"dim", r.dim},
           {"arity", r.arity},
           {"seed", r.seed},
           {"verdict", std::string(to_string(r.verdict))},
           {"lhs", to_json(r.lhs)},
           {"rhs", to_json(r.rhs)},
           {"ratio", number(r.ratio)}};
    if (!r.alphas.empty()) j["alphas"] = r.alphas;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

json to_json(const IdSummary& s) {
    json tally = json::object();
    for (auto v : {Verdict::CertifiedPass, Verdict::TolerancePass, Verdict::CertifiedFail, Verdict::Inconclusive,
                   Verdict::Inapplicable}) {
        tally[std::string(to_string(v))] = s.count(v);
    }
    return {{"trials", s.trials},
            {"verdicts", std::move(tally)},
            {"max_ratio", number(s.max_ratio)},
            {"worst_margin", number(s.worst_margin)}};
}

json to_json(const RadiusEstimate& e) {
    return {{"value", e.value},           {"upper", e.upper()},   {"cert_error", e.cert_error},
            {"theta_star", e.theta_star}, {"norm", e.norm.to_string()}, {"evaluations", e.evaluations}};
}

json to_json(const SectorInfo& s) {
    return {{"accretive", s.accretive},
            {"index_alpha", s.index_alpha},
            {"rotation_z", json::array({s.rotation_z.real(), s.rotation_z.imag()})},
            {"lambda_min_re", s.lambda_min_re}};
}

json to_json(const TightnessReport& r) {
    json fixtures = json::array();
    for (const auto& f : r.fixtures) fixtures.push_back({{"name", f.name}, {"result", to_json(f.result)}});
    return {{"id", std::string(to_string(r.id))},
            {"trials", r.trials},
            {"random_max_ratio", number(r.random_max_ratio)},
            {"random_max_seed", r.random_max_seed},
            {"fixtures", std::move(fixtures)},
            {"max_ratio", number(r.max_ratio)},
            {"max_ratio_source", r.max_ratio_source},
            {"summary", to_json(r.summary)}};
}

json to_json(const SuiteReport& report, bool include_timing) {
    const auto& c = report.config;
    json ids = json::array();
    for (auto id : c.ids) ids.push_back(std::string(to_string(id)));
    json norms = json::array();
    for (const auto& n : c.norms) norms.push_back(n.to_string());
    json config{{"ids", std::move(ids)},
                {"trials", c.trials},
                {"dims", c.dims},
                {"norms", std::move(norms)},
                {"seed", c.seed},
                {"m", c.generation.m},
                {"alpha_range", json::array({c.generation.alpha_min, c.generation.alpha_max})},
                {"radius_grid", c.check.radius.grid},
                {"radius_refine_tol", c.check.radius.refine_tol},
                {"phi_samples", c.check.phi_samples},
                {"alpha_inflation", c.check.alpha_inflation}};

    json results = json::array();
    for (const auto& r : report.results) results.push_back(to_json(r));
    json summary = json::object();
    for (auto id : c.ids) summary[std::string(to_string(id))] = to_json(report.summary(id));

    json out{{"config", std::move(config)},
             {"results", std::move(results)},
             {"summary", std::move(summary)},
             {"any_certified_fail", report.any_certified_fail}};
    if (include_timing) out["wall_time_s"] = report.wall_time_s;
    return out;
}

void write_csv(std::ostream& out, const SuiteReport& report) {
    out << "id,norm,dim,arity,seed,verdict,lhs_lo,lhs_hi,rhs_lo,rhs_hi,ratio\n";
    const auto flags = out.flags();
    out << std::setprecision(17);
    for (const auto& r : report.results) {
        out << to_string(r.id) << ',' << r.norm << ',' << r.dim << ',' << r.arity << ',' << r.seed << ','
            << to_string(r.verdict) << ',' << r.lhs.lo << ',' << r.lhs.hi << ',' << r.rhs.lo << ',' << r.rhs.hi
            << ',' << r.ratio << '\n';
    }
    out.flags(flags);
}

} // namespace sector_radius::io
