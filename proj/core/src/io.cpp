#include "trikit/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include "trikit/error.hpp"

namespace trikit::io {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view what) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  std::int64_t value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw ParseError("invalid integer '" + std::string(text) + "' in " + std::string(what));
  }
  return value;
}

std::int64_t int_field(const json& j, const char* key, std::string_view what) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer()) {
    throw ParseError(std::string(what) + ": missing integer field '" + key + "'");
  }
  return j.at(key).get<std::int64_t>();
}

int small_int(std::int64_t v, std::string_view what) {
  if (v < -1'000'000 || v > 1'000'000) {
    throw ParseError(std::string(what) + ": value " + std::to_string(v) + " out of range");
  }
  return static_cast<int>(v);
}

json system_to_json(const CurveSystem& s) {
  json out = json::array();
  for (const auto& cls : s.classes) {
    json row = json::array();
    for (const auto& v : cls) row.push_back(bigint_to_json(v));
    out.push_back(std::move(row));
  }
  return out;
}

CurveSystem system_from_json(const json& j, std::string_view name) {
  if (!j.is_array()) throw ParseError("diagram: '" + std::string(name) + "' must be an array");
  CurveSystem out;
  for (const auto& row : j) {
    if (!row.is_array()) {
      throw ParseError("diagram: '" + std::string(name) + "' entries must be integer arrays");
    }
    IntVector cls;
    for (const auto& v : row) cls.push_back(bigint_from_json(v));
    out.classes.push_back(std::move(cls));
  }
  return out;
}

}  // namespace

json bigint_to_json(const BigInt& v) {
  if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
  return json(v.get_str());
}

BigInt bigint_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    BigInt v;
    const auto& s = j.get_ref<const std::string&>();
    if (s.empty() || v.set_str(s, 10) != 0) throw ParseError("invalid integer string '" + s + "'");
    return v;
  }
  throw ParseError("expected an integer, got " + j.dump());
}

json laurent_to_json(const LaurentPoly& p) {
  json out = json::object();
  for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = bigint_to_json(c);
  return out;
}

LaurentPoly laurent_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("Laurent polynomial must be a JSON object, got " + j.dump());
  LaurentPoly::Terms terms;
  for (const auto& [key, value] : j.items()) {
    const auto e = parse_int(key, "Laurent polynomial exponent");
    if (terms.contains(e)) throw ParseError("Laurent polynomial repeats exponent " + key);
    terms.emplace(e, bigint_from_json(value));
  }
  return LaurentPoly(std::move(terms));
}

json bands_to_json(const BandPresentation& b) {
  json bands = json::array();
  for (const auto& band : b.bands) bands.push_back({{"delta", band.delta}, {"delta_c", band.delta_c}});
  return {{"bands", bands}};
}

BandPresentation bands_from_json(const json& j) {
  if (!j.is_object() || !j.contains("bands") || !j.at("bands").is_array()) {
    throw ParseError("band file: expected {\"bands\": [...]}");
  }
  BandPresentation out;
  for (const auto& entry : j.at("bands")) {
    out.bands.push_back({int_field(entry, "delta", "band"), int_field(entry, "delta_c", "band")});
  }
  return out;
}

json diagram_to_json(const RelTrisectionDiagram& d) {
  const auto& t = d.declared;
  return {{"genus", d.surface.genus},
          {"boundaries", d.surface.boundaries},
          {"type", {t.g, t.k, t.p, t.b}},
          {"alpha", system_to_json(d.alpha)},
          {"beta", system_to_json(d.beta)},
          {"gamma", system_to_json(d.gamma)}};
}

RelTrisectionDiagram diagram_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("diagram: expected a JSON object");
  RelTrisectionDiagram d;
  d.surface.genus = small_int(int_field(j, "genus", "diagram"), "diagram genus");
  d.surface.boundaries = small_int(int_field(j, "boundaries", "diagram"), "diagram boundaries");
  if (!j.contains("type") || !j.at("type").is_array() || j.at("type").size() != 4) {
    throw ParseError("diagram: 'type' must be [g, k, p, b]");
  }
  int t[4];
  for (std::size_t i = 0; i < 4; ++i) {
    if (!j.at("type")[i].is_number_integer()) throw ParseError("diagram: 'type' entries must be integers");
    t[i] = small_int(j.at("type")[i].get<std::int64_t>(), "diagram type");
  }
  d.declared = {t[0], t[1], t[2], t[3]};
  for (const char* key : {"alpha", "beta", "gamma"}) {
    if (!j.contains(key)) throw ParseError(std::string("diagram: missing '") + key + "'");
  }
  d.alpha = system_from_json(j.at("alpha"), "alpha");
  d.beta = system_from_json(j.at("beta"), "beta");
  d.gamma = system_from_json(j.at("gamma"), "gamma");
  return d;
}

json report_to_json(const ValidationReport& r) {
  json cross = json::array();
  for (const auto& c : r.cross) {
    json snf = json::array();
    for (const auto& v : c.snf) snf.push_back(bigint_to_json(v));
    cross.push_back({{"pair", c.name}, {"snf", snf}, {"ok", c.ok}});
  }
  return {{"passed", r.passed},
          {"type_valid", r.type_valid},
          {"surface_matches", r.surface_matches},
          {"dimensions_ok", r.dimensions_ok},
          {"counts_ok", r.counts_ok},
          {"within_family_disjoint", r.within_family_disjoint},
          {"expected_count", r.expected_count},
          {"expected_ones", r.expected_ones},
          {"cross", cross},
          {"messages", r.messages},
          {"scope", ValidationReport::kScope}};
}

std::vector<std::int64_t> parse_int_list(std::string_view csv) {
  std::vector<std::int64_t> out;
  if (csv.empty()) throw ParseError("empty integer list");
  std::size_t start = 0;
  while (true) {
    const auto comma = csv.find(',', start);
    out.push_back(parse_int(csv.substr(start, comma - start), "integer list"));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

}  // namespace trikit::io
