#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "alde/operators.hpp"
#include "alde/report.hpp"
#include "json.hpp"

namespace alde {

using Json = nlohmann::ordered_json;

// Exponents are written as [name, power] pairs in variable order so a file
// does not depend on the interning order of the process that reads it.

Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

/// [{"exponents": [["t", 2], ...], "coeff": "p/q"}, ...] in grlex order.
Json poly_to_json(const MPoly& p);
MPoly poly_from_json(const Json& j);

/// {"num": poly, "den": poly}
Json ratfn_to_json(const RatFn& f);
RatFn ratfn_from_json(const Json& j);

/// [{"derivative": [["x1", 1], ...], "num": poly, "den": poly}, ...]
Json diffop_to_json(const DiffOp& o);
DiffOp diffop_from_json(const Json& j);

/// [{"a": 2, "b": 1, "coeff": {"num": ..., "den": ...}}, ...]
Json alg_to_json(const AlgElem& e);
AlgElem alg_from_json(const Json& j);

/// Flat array of records, sorted, without wall times.
Json report_to_json(const Report& r);
Report report_from_json(const Json& j, std::string suite = {});
/// [{"id", "params", "seconds"}, ...] in the same order as report_to_json.
Json timing_to_json(const Report& r);

/// Pretty-printed with a trailing newline.
std::string dump(const Json& j);

/// One CSV field, quoted when it holds a comma, quote, CR or LF.
std::string csv_field(std::string_view s);
std::string to_csv(const std::vector<std::vector<std::string>>& rows);

}  // namespace alde
