#pragma once

#include <cstdint>
#include <filesystem>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "trikit/diagram.hpp"
#include "trikit/laurent.hpp"
#include "trikit/ribbon.hpp"

// JSON file formats. Every *_from_json throws ParseError on malformed input.
namespace trikit::io {

using nlohmann::json;

/// Integers that fit in 64 bits are JSON numbers, larger ones decimal strings.
json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const json& j);

/// {"<exponent>": coefficient, ...}
json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const json& j);

/// {"bands": [{"delta": d, "delta_c": dc}, ...]}
json bands_to_json(const BandPresentation& b);
BandPresentation bands_from_json(const json& j);

/*
 * {"genus": g, "boundaries": b, "type": [g,k,p,b],
 *  "alpha": [[...], ...], "beta": [...], "gamma": [...]}
 * Class vectors use the basis order a_1, b_1, ..., a_g, b_g, d_1, ..., d_{b-1}.
 * Parsing checks shape only; use validate() for the diagram conditions.
 */
json diagram_to_json(const RelTrisectionDiagram& d);
RelTrisectionDiagram diagram_from_json(const json& j);

json report_to_json(const ValidationReport& r);

/// "2,-2,2" -> {2, -2, 2}. Whitespace around entries is allowed.
std::vector<std::int64_t> parse_int_list(std::string_view csv);

json parse_json(std::string_view text);
json read_json_file(const std::filesystem::path& path);

}  // namespace trikit::io
