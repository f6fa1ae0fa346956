#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "halflog/decomposer.hpp"
#include "halflog/half_log.hpp"
#include "halflog/ladder.hpp"
#include "halflog/padic.hpp"
#include "halflog/report.hpp"
#include "halflog/series.hpp"
#include "halflog/trace_ladder.hpp"

namespace halflog::io {

using nlohmann::json;

/// {"num", "den_pow", "absprec"} plus "den_unit" when the value has a
/// denominator prime to p.  absprec is "inf" for exact values.
json to_json(const PadicScalar& x);
PadicScalar scalar_from_json(long p, const json& j);

/// {"p", "cap", "coeffs"}; cap is "inf" for exact polynomials.
json to_json(const PowerSeries& f);
PowerSeries series_from_json(const json& j);

/// {"p", "ap", "cap", "coeffs": [{"a", "b"}, ...]}.
json to_json(const QuadSeries& f);
QuadSeries quad_series_from_json(const json& j);

json to_json(const LadderMatrix& m);
LadderMatrix ladder_from_json(const json& j);

json to_json(const HalfLogPair& h);
HalfLogPair half_logs_from_json(const json& j);

json table_to_json(long p, long ap, const std::vector<DeltaRow>& rows);
std::vector<DeltaRow> table_from_json(const json& j);
std::string table_to_csv(const std::vector<DeltaRow>& rows);
std::vector<DeltaRow> table_from_csv(const std::string& text);

/// Input pair {"p", "level", "first", "second"}; a decomposition output
/// ({"theta", "upsilon"}) is accepted as well.
json to_json(const LambdaPair& v);
LambdaPair lambda_pair_from_json(const json& j);
json decomposition_to_json(const LambdaPair& v, const std::string& note);

/// CSV rows (degree, numerator, den_pow, absprec).
std::string series_to_csv(const PowerSeries& f);

json reports_to_json(const std::vector<CheckReport>& reports);

/// Parses text, mapping syntax errors to ParseError.
json parse(const std::string& text);

}  // namespace halflog::io
