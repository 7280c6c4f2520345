#include "sparsegroup/io.hpp"

#include <cctype>
#include <charconv>

namespace sparsegroup {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void parse_error(const std::string& what) {
  throw SemigroupError(ErrorCode::ParseError, what);
}

std::vector<Int> int_array(const Json& value, const char* field) {
  if (!value.is_array()) parse_error(std::string("field \"") + field + "\" must be an array");
  std::vector<Int> out;
  for (const auto& entry : value) {
    if (!entry.is_number_integer()) {
      parse_error(std::string("field \"") + field + "\" must hold integers");
    }
    out.push_back(entry.get<Int>());
  }
  return out;
}

}  // namespace

std::vector<Int> parse_int_list(std::string_view text) {
  std::vector<Int> values;
  if (trim(text).empty()) return values;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view token = trim(text.substr(0, comma));
    Int value = 0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (token.empty() || ec != std::errc{} || ptr != end) {
      parse_error("invalid integer \"" + std::string(token) + "\"");
    }
    values.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return values;
}

NumericalSemigroup parse_gap_line(std::string_view line, Limits limits) {
  const auto gaps = parse_int_list(line);
  for (std::size_t i = 1; i < gaps.size(); ++i) {
    if (gaps[i] <= gaps[i - 1]) {
      parse_error("gap list \"" + std::string(trim(line)) + "\" is not strictly increasing");
    }
  }
  return NumericalSemigroup::from_gaps(gaps, limits);
}

std::string format_gap_line(const NumericalSemigroup& h) {
  std::string out;
  for (auto gap : h.gaps()) {
    if (!out.empty()) out += ',';
    out += std::to_string(gap);
  }
  return out;
}

std::vector<NumericalSemigroup> read_gap_list(std::istream& in, Limits limits) {
  std::vector<NumericalSemigroup> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out.push_back(parse_gap_line(line, limits));
  }
  return out;
}

Json to_json(const NumericalSemigroup& h) {
  Json object;
  object["gaps"] = h.gaps();
  object["generators"] = h.minimal_generators();
  object["genus"] = h.genus();
  object["conductor"] = h.conductor();
  object["frobenius"] = h.frobenius();
  return object;
}

NumericalSemigroup semigroup_from_json(const Json& object, Limits limits) {
  if (!object.is_object()) parse_error("semigroup must be a JSON object");
  const bool has_gaps = object.contains("gaps");
  const bool has_generators = object.contains("generators");
  if (!has_gaps && !has_generators) parse_error("object needs \"gaps\" or \"generators\"");

  NumericalSemigroup h = has_gaps
                             ? NumericalSemigroup::from_gaps(int_array(object["gaps"], "gaps"), limits)
                             : NumericalSemigroup::from_generators(
                                   int_array(object["generators"], "generators"), limits);
  if (has_gaps && has_generators) {
    const auto generators = int_array(object["generators"], "generators");
    if (NumericalSemigroup::from_generators(generators, limits) != h) {
      parse_error("\"gaps\" and \"generators\" describe different semigroups");
    }
  }
  const std::pair<const char*, Int> derived[] = {
      {"genus", h.genus()}, {"conductor", h.conductor()}, {"frobenius", h.frobenius()}};
  for (const auto& [field, expected] : derived) {
    if (!object.contains(field)) continue;
    if (!object[field].is_number_integer() || object[field].get<Int>() != expected) {
      parse_error(std::string("field \"") + field + "\" disagrees with the gap set");
    }
  }
  return h;
}

}  // namespace sparsegroup
