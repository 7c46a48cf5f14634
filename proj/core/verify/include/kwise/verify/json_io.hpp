#pragma once

#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "kwise/approx.hpp"
#include "kwise/distributions.hpp"
#include "kwise/gram.hpp"
#include "kwise/polynomial.hpp"
#include "kwise/rational.hpp"

namespace kwise::io {

using Json = nlohmann::ordered_json;

/// Schema tag carried by every report.
inline constexpr const char* kReportVersion = "kwise-report/1";

/// {"num": "<int>", "den": "<int>", "float": <12 significant digits>}.
Json to_json(const Rational& r);
/// Inverse of to_json; accepts the object form or a "num/den" string.
Rational rational_from_json(const Json& j);
bool is_rational_json(const Json& j);

Json to_json(std::span<const Rational> values);
Json to_json(const Polynomial& p);
Json to_json(const SymmetricDist& d);
Json to_json(const SymmetricTestSet& t);
Json to_json(const ApproxCertificate& c);

/// {"command", "params", "rows", "verdicts", "version"}.
Json make_report(const std::string& command, Json params, Json rows, Json verdicts);

/// Flat CSV projection of report rows. Exact rationals become two columns:
/// `<key>` with the decimal rendering and `<key>_exact` with "num/den".
/// Arrays of rationals are joined with ';' in exact form; other nested
/// values are embedded as compact JSON.
std::string rows_to_csv(const Json& rows);

}  // namespace kwise::io
