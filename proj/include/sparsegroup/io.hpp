#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sparsegroup/semigroup.hpp"

namespace sparsegroup {

using Json = nlohmann::ordered_json;

/// Comma-separated integers ("1,2,4"). Whitespace around entries is ignored;
/// an empty or blank string yields an empty list. Throws ParseError naming
/// the offending token.
std::vector<Int> parse_int_list(std::string_view text);

/// One line of the gap-list format: strictly increasing gaps, empty = N_0.
NumericalSemigroup parse_gap_line(std::string_view line, Limits limits = {});

std::string format_gap_line(const NumericalSemigroup& h);

/// Reads one semigroup per line. A trailing newline does not add an entry.
std::vector<NumericalSemigroup> read_gap_list(std::istream& in, Limits limits = {});

/// {"gaps":[...],"generators":[...],"genus":n,"conductor":n,"frobenius":n}
Json to_json(const NumericalSemigroup& h);

/// Accepts "gaps" or "generators" (or both, which must agree); any derived
/// fields present are checked against the result.
NumericalSemigroup semigroup_from_json(const Json& object, Limits limits = {});

}  // namespace sparsegroup
