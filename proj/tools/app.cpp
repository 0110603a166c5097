#include "app.hpp"

#include <algorithm>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "trikit/casson.hpp"
#include "trikit/diagram.hpp"
#include "trikit/error.hpp"
#include "trikit/io.hpp"
#include "trikit/ribbon.hpp"
#include "trikit/twobridge.hpp"

namespace trikit::app {

namespace {

using nlohmann::json;

// The M_n carry a (3,3;0,4) relative trisection.
constexpr TrisectionType kMnType{3, 3, 0, 4};
constexpr int kMnEuler = 1;

std::string render_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    std::string text;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c > 0) text += "  ";
      text += cells[c];
      if (c + 1 < cells.size()) text.append(width[c] - cells[c].size(), ' ');
    }
    os << text << '\n';
  };
  line(header);
  std::vector<std::string> rule;
  for (auto w : width) rule.emplace_back(w, '-');
  line(rule);
  for (const auto& row : rows) line(row);
  return os.str();
}

std::string join_types(const std::vector<TrisectionType>& ts) {
  std::string out;
  for (const auto& t : ts) {
    if (!out.empty()) out += ' ';
    out += to_string(t);
  }
  return out.empty() ? "-" : out;
}

BandPresentation load_bands(const RunConfig& cfg) {
  if (cfg.input_path) return io::bands_from_json(io::read_json_file(*cfg.input_path));
  return kn_presentation(*cfg.n);
}

std::string source_label(const RunConfig& cfg) {
  if (cfg.input_path) return cfg.input_path->string();
  return "K_" + std::to_string(*cfg.n);
}

int run_alexander(const RunConfig& cfg, std::ostream& out) {
  const BandPresentation bands = load_bands(cfg);
  const LaurentPoly f = fox_milnor_factor(bands);
  const LaurentPoly delta = alexander_from_bands(bands);
  const BigInt second = second_derivative_at_one(delta);
  if (cfg.json_output) {
    out << json{{"source", source_label(cfg)},
                {"matrix_size", bands.size()},
                {"f", io::laurent_to_json(f)},
                {"delta", io::laurent_to_json(delta)},
                {"delta_at_one", io::bigint_to_json(eval_at_one(delta))},
                {"delta_second_derivative_at_one", io::bigint_to_json(second)}}
               .dump(2)
        << '\n';
    return kOk;
  }
  out << "source:      " << source_label(cfg) << " (" << bands.size() << "x" << bands.size()
      << " Terasaka matrix)\n"
      << "f(t)       = " << f << '\n'
      << "Delta(t)   = " << delta << '\n'
      << "Delta(1)   = " << eval_at_one(delta) << '\n'
      << "Delta''(1) = " << second << '\n';
  return kOk;
}

int run_casson(const RunConfig& cfg, std::ostream& out) {
  LaurentPoly delta;
  std::string source;
  if (cfg.delta_json) {
    delta = io::laurent_from_json(io::parse_json(*cfg.delta_json));
    source = "inline";
  } else {
    delta = alexander_from_bands(load_bands(cfg));
    source = source_label(cfg);
  }
  const BigInt lambda = casson_surgery({delta, cfg.surgery_m});
  if (cfg.json_output) {
    out << json{{"source", source},
                {"alexander", io::laurent_to_json(delta)},
                {"m", cfg.surgery_m},
                {"lambda", io::bigint_to_json(lambda)}}
               .dump(2)
        << '\n';
    return kOk;
  }
  out << "source:    " << source << '\n'
      << "Delta(t) = " << delta << '\n'
      << "surgery  = 1/" << cfg.surgery_m << '\n'
      << "lambda   = " << lambda << '\n';
  return kOk;
}

int run_tuples(const RunConfig& cfg, std::ostream& out) {
  const auto tuples = admissible_tuples(cfg.chi, cfg.genus, cfg.exclude_seifert);
  if (cfg.json_output) {
    json rows = json::array();
    for (const auto& t : tuples) {
      const auto ob = open_book(t);
      rows.push_back({{"g", t.g}, {"k", t.k}, {"p", t.p}, {"b", t.b},
                      {"A", intersection_pairs(t)}, {"chi", euler_char(t)},
                      {"page", ob.page_genus}, {"bindings", ob.bindings},
                      {"heegaard", heegaard_genus(t)}});
    }
    out << rows.dump(2) << '\n';
    return kOk;
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& t : tuples) {
    const auto ob = open_book(t);
    rows.push_back({std::to_string(t.g), std::to_string(t.k), std::to_string(t.p),
                    std::to_string(t.b), std::to_string(intersection_pairs(t)),
                    std::to_string(euler_char(t)), std::to_string(ob.page_genus),
                    std::to_string(ob.bindings), std::to_string(heegaard_genus(t))});
  }
  out << render_table({"g", "k", "p", "b", "A", "chi", "page", "bindings", "heegaard"}, rows);
  return kOk;
}

TrisectionType parse_type(const std::string& csv) {
  const auto v = io::parse_int_list(csv);
  if (v.size() != 4) throw ParseError("--type expects g,k,p,b");
  for (auto x : v) {
    if (x < -1'000'000 || x > 1'000'000) throw ParseError("--type entry out of range");
  }
  return TrisectionType::make(static_cast<int>(v[0]), static_cast<int>(v[1]),
                              static_cast<int>(v[2]), static_cast<int>(v[3]));
}

int run_diagram_std(const RunConfig& cfg, std::ostream& out) {
  out << io::diagram_to_json(std_diagram(parse_type(*cfg.type_csv))).dump(2) << '\n';
  return kOk;
}

int run_diagram_validate(const RunConfig& cfg, std::ostream& out) {
  const RelTrisectionDiagram d = io::diagram_from_json(io::read_json_file(*cfg.input_path));
  const ValidationReport rep = validate(d);
  if (cfg.json_output) {
    json j = io::report_to_json(rep);
    if (rep.passed) j["euler_char"] = consistency_with_euler(d);
    out << j.dump(2) << '\n';
  } else {
    auto yn = [](bool b) { return b ? "ok" : "FAIL"; };
    out << "declared type:   " << to_string(d.declared) << (rep.type_valid ? "" : " (invalid)") << '\n'
        << "surface:         " << yn(rep.surface_matches) << '\n'
        << "class lengths:   " << yn(rep.dimensions_ok) << '\n';
    const char* names[3] = {"alpha", "beta", "gamma"};
    for (std::size_t f = 0; f < 3; ++f) {
      out << names[f] << ":" << std::string(16 - std::string(names[f]).size(), ' ') << "count "
          << yn(rep.counts_ok[f]) << ", disjoint " << yn(rep.within_family_disjoint[f]) << '\n';
    }
    for (const auto& c : rep.cross) {
      out << c.name << ":" << std::string(16 - c.name.size(), ' ') << "SNF [";
      for (std::size_t i = 0; i < c.snf.size(); ++i) out << (i ? "," : "") << c.snf[i];
      out << "] " << yn(c.ok) << '\n';
    }
    for (const auto& m : rep.messages) out << "note: " << m << '\n';
    out << "result:          " << (rep.passed ? "PASS" : "FAIL") << '\n';
    if (rep.passed) out << "euler char:      " << consistency_with_euler(d) << '\n';
    out << "scope:           " << ValidationReport::kScope << '\n';
  }
  return rep.passed ? kOk : kDomainError;
}

int run_twobridge(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.compare.empty()) {
    const auto w1 = io::parse_int_list(cfg.compare[0]);
    const auto w2 = io::parse_int_list(cfg.compare[1]);
    const auto t1 = cf_to_type(w1);
    const auto t2 = cf_to_type(w2);
    const bool iso = isotopic(t1, t2);
    if (cfg.json_output) {
      out << json{{"first", {{"p", io::bigint_to_json(t1.p)}, {"q", io::bigint_to_json(t1.q)}}},
                  {"second", {{"p", io::bigint_to_json(t2.p)}, {"q", io::bigint_to_json(t2.q)}}},
                  {"isotopic", iso}}
                 .dump(2)
          << '\n';
    } else {
      out << "[" << cfg.compare[0] << "] -> " << t1 << '\n'
          << "[" << cfg.compare[1] << "] -> " << t2 << '\n'
          << "isotopic: " << (iso ? "yes" : "no") << '\n';
    }
    return kOk;
  }
  const auto word = io::parse_int_list(*cfg.cf_csv);
  const auto t = cf_to_type(word);
  const bool torus = is_torus_type(t);
  if (cfg.json_output) {
    out << json{{"p", io::bigint_to_json(t.p)}, {"q", io::bigint_to_json(t.q)}, {"torus", torus}}.dump(2)
        << '\n';
  } else {
    out << "type:  " << t << '\n' << "torus: " << (torus ? "yes" : "no") << '\n';
  }
  return kOk;
}

int run_report(const RunConfig& cfg, std::ostream& out) {
  const auto rows = report_mn(*cfg.n);
  if (cfg.json_output) {
    out << report_to_json(rows).dump(2) << '\n';
  } else {
    out << report_to_text(rows);
  }
  return kOk;
}

ReportRow compute_row(std::int64_t n, const GenusBound& bound, const std::string& verdict) {
  ReportRow row;
  row.n = n;
  const BandPresentation bands = kn_presentation(n);
  row.f = fox_milnor_factor(bands);
  row.delta = alexander_from_bands(bands);
  row.delta_second_derivative = second_derivative_at_one(row.delta);
  row.lambda = casson_surgery({row.delta, 1});
  for (int g = 0; g <= 3; ++g) {
    for (const auto& t : admissible_tuples(kMnEuler, g, true)) row.tuples.push_back(t);
  }
  row.heegaard_genus = heegaard_genus(kMnType);
  if (std::find(row.tuples.begin(), row.tuples.end(), kMnType) == row.tuples.end() ||
      bound.genus != kMnType.g) {
    throw ConsistencyError("report: (3,3;0,4) is not an admissible minimal type");
  }
  row.verdict = verdict;
  return row;
}

}  // namespace

void check_config(const RunConfig& cfg) {
  const bool preset = cfg.family.has_value() || cfg.n.has_value();
  if (cfg.family && *cfg.family != "kn") throw ParseError("unknown family '" + *cfg.family + "'");
  switch (cfg.subcommand) {
    case Subcommand::alexander:
    case Subcommand::casson: {
      const int sources = (preset ? 1 : 0) + (cfg.input_path ? 1 : 0) + (cfg.delta_json ? 1 : 0);
      if (sources != 1) {
        throw ParseError("give exactly one of --family kn --n N, --input FILE" +
                         std::string(cfg.subcommand == Subcommand::casson ? ", --delta JSON" : ""));
      }
      if (cfg.delta_json && cfg.subcommand != Subcommand::casson) {
        throw ParseError("--delta is only accepted by casson");
      }
      if (preset && !(cfg.family && cfg.n)) throw ParseError("--family kn needs --n");
      break;
    }
    case Subcommand::tuples:
      break;
    case Subcommand::diagram_validate:
      if (!cfg.input_path) throw ParseError("diagram-validate needs --input FILE");
      break;
    case Subcommand::diagram_std:
      if (!cfg.type_csv) throw ParseError("diagram-std needs --type g,k,p,b");
      break;
    case Subcommand::twobridge:
      if (cfg.cf_csv.has_value() == !cfg.compare.empty()) {
        throw ParseError("give exactly one of --cf WORD or --compare WORD WORD");
      }
      if (!cfg.compare.empty() && cfg.compare.size() != 2) throw ParseError("--compare takes two words");
      break;
    case Subcommand::report:
      if (!cfg.n) throw ParseError("report needs --n N_MAX");
      if (cfg.input_path) throw ParseError("report takes no --input");
      break;
  }
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auto fail = [&](int code, const char* cls, const std::string& what) {
    if (cfg.json_output) {
      err << json{{"error", cls}, {"message", what}, {"exit", code}}.dump() << '\n';
    } else {
      err << "trikit: " << cls << " error: " << what << '\n';
    }
    return code;
  };
  try {
    check_config(cfg);
    switch (cfg.subcommand) {
      case Subcommand::alexander: return run_alexander(cfg, out);
      case Subcommand::casson: return run_casson(cfg, out);
      case Subcommand::tuples: return run_tuples(cfg, out);
      case Subcommand::diagram_validate: return run_diagram_validate(cfg, out);
      case Subcommand::diagram_std: return run_diagram_std(cfg, out);
      case Subcommand::twobridge: return run_twobridge(cfg, out);
      case Subcommand::report: return run_report(cfg, out);
    }
    return fail(kInternalError, "internal", "unhandled subcommand");
  } catch (const ParseError& e) {
    return fail(kParseError, "parse", e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(kParseError, "parse", e.what());
  } catch (const DomainError& e) {
    return fail(kDomainError, "domain", e.what());
  } catch (const std::exception& e) {
    return fail(kInternalError, "internal", e.what());
  }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of ribbon knots, relative trisection parameters and 2-bridge links",
               "trikit"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", cfg.json_output, "JSON output"); };
  auto add_preset = [&](CLI::App* sub) {
    auto* fam = sub->add_option("--family", cfg.family, "Knot family preset (kn)");
    auto* n = sub->add_option("--n", cfg.n, "Family parameter n >= 1");
    auto* in = sub->add_option("--input", cfg.input_path, "Band file (JSON)");
    in->excludes(fam);
    in->excludes(n);
  };

  auto* alex = app.add_subcommand("alexander", "f(t) and Delta(t) from a band presentation");
  add_preset(alex);
  add_json(alex);

  auto* cas = app.add_subcommand("casson", "Casson invariant of 1/m surgery");
  add_preset(cas);
  cas->add_option("--delta", cfg.delta_json, "Alexander polynomial as a JSON map");
  cas->add_option("--m", cfg.surgery_m, "Surgery coefficient 1/m (default 1)");
  add_json(cas);

  auto* tup = app.add_subcommand("tuples", "Admissible (g,k;p,b) for given chi and genus");
  tup->add_option("--chi", cfg.chi, "Euler characteristic")->required();
  tup->add_option("--genus", cfg.genus, "Trisection genus g")->required();
  tup->add_flag("--exclude-seifert", cfg.exclude_seifert, "Drop types with Seifert-forced boundary");
  add_json(tup);

  auto* dval = app.add_subcommand("diagram-validate", "Homology-level check of a diagram file");
  dval->add_option("--input", cfg.input_path, "Diagram file (JSON)");
  add_json(dval);

  auto* dstd = app.add_subcommand("diagram-std", "Standard diagram of a type, as a diagram file");
  dstd->add_option("--type", cfg.type_csv, "g,k,p,b");
  add_json(dstd);

  auto* tb = app.add_subcommand("twobridge", "2-bridge type of a continued fraction word");
  tb->add_option("--cf", cfg.cf_csv, "Comma separated word, e.g. 2,-2,2 (use --cf=-2,... for a leading minus)");
  tb->add_option("--compare", cfg.compare, "Two words to test for isotopy")->expected(2);
  add_json(tb);

  auto* rep = app.add_subcommand("report", "Per-n summary for the M_n family");
  rep->add_option("--n", cfg.n, "Largest n");
  add_json(rep);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "trikit: parse error: " << e.what() << '\n';
    return kParseError;
  }

  const std::pair<CLI::App*, Subcommand> table[] = {
      {alex, Subcommand::alexander},       {cas, Subcommand::casson},
      {tup, Subcommand::tuples},           {dval, Subcommand::diagram_validate},
      {dstd, Subcommand::diagram_std},     {tb, Subcommand::twobridge},
      {rep, Subcommand::report}};
  for (const auto& [sub, kind] : table) {
    if (sub->parsed()) cfg.subcommand = kind;
  }
  return run(cfg, out, err);
}

std::vector<ReportRow> report_mn(std::int64_t n_max, unsigned workers) {
  if (n_max < 1) throw DomainError("report: n_max must be >= 1, got " + std::to_string(n_max));
  const GenusBound bound = genus_lower_bound(kMnEuler, BoundaryClass::known_non_seifert);
  if (!validate(std_diagram(kMnType)).passed) {
    throw ConsistencyError("report: standard (3,3;0,4) diagram fails validation");
  }
  const std::string verdict = "= " + std::to_string(bound.genus) + " (given the " +
                              to_string(kMnType) + " diagram and known_non_seifert boundary)";

  std::vector<ReportRow> rows(static_cast<std::size_t>(n_max));
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::int64_t>(workers, n_max));
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::int64_t n = 1 + w; n <= n_max; n += workers) {
            rows[static_cast<std::size_t>(n - 1)] = compute_row(n, bound, verdict);
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

nlohmann::json report_to_json(const std::vector<ReportRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    json tuples = json::array();
    for (const auto& t : r.tuples) tuples.push_back({t.g, t.k, t.p, t.b});
    out.push_back({{"n", r.n},
                   {"f", io::laurent_to_json(r.f)},
                   {"delta", io::laurent_to_json(r.delta)},
                   {"delta_second_derivative_at_one", io::bigint_to_json(r.delta_second_derivative)},
                   {"lambda", io::bigint_to_json(r.lambda)},
                   {"tuples", tuples},
                   {"heegaard_genus", r.heegaard_genus},
                   {"verdict", r.verdict}});
  }
  return out;
}

std::string report_to_text(const std::vector<ReportRow>& rows) {
  std::vector<std::vector<std::string>> cells;
  for (const auto& r : rows) {
    cells.push_back({std::to_string(r.n), to_string(r.f), to_string(r.delta),
                     r.delta_second_derivative.get_str(), r.lambda.get_str(), join_types(r.tuples),
                     std::to_string(r.heegaard_genus), r.verdict});
  }
  return render_table({"n", "f(t)", "Delta(t)", "Delta''(1)", "lambda", "tuples (chi=1, g<=3)",
                       "heegaard", "trisection genus"},
                      cells);
}

}  // namespace trikit::app
