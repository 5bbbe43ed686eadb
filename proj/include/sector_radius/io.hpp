#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "sector_radius/harness.hpp"
#include "sector_radius/matrix.hpp"
#include "sector_radius/radius.hpp"
#include "sector_radius/sectorial.hpp"

namespace sector_radius::io {

using nlohmann::json;

/// {"n": n, "entries": [[re, im], ...]} in row-major order. Doubles round-trip exactly.
json matrix_to_json(const ComplexMatrix& m);
/// Throws DimensionError / DomainError for malformed input (wrong count, non-numeric, non-finite).
ComplexMatrix matrix_from_json(const json& j);

ComplexMatrix read_matrix(std::istream& in);
ComplexMatrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const ComplexMatrix& m);

json to_json(const Interval& i);
json to_json(const CheckResult& r);
json to_json(const IdSummary& s);
json to_json(const RadiusEstimate& e);
json to_json(const SectorInfo& s);
json to_json(const TightnessReport& r);

/// {config, results, summary, wall_time_s}. With `include_timing = false`
/// the output is a pure function of the config, which makes reruns comparable.
json to_json(const SuiteReport& report, bool include_timing = true);

/// One line per result: id,norm,dim,arity,seed,verdict,lhs_lo,lhs_hi,rhs_lo,rhs_hi,ratio
void write_csv(std::ostream& out, const SuiteReport& report);

} // namespace sector_radius::io
