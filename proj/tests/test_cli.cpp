#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "app.hpp"
#include "doctest.h"
#include "trikit/error.hpp"

using nlohmann::json;
using namespace trikit;

namespace {

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  Result r;
  r.code = app::main_entry(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string golden(const std::string& name) { return slurp(std::string(TRIKIT_GOLDEN_DIR) + "/" + name); }
std::string data(const std::string& name) { return std::string(TRIKIT_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("golden text output") {
  struct Case {
    std::vector<std::string> args;
    const char* file;
  };
  const std::vector<Case> cases = {
      {{"alexander", "--family", "kn", "--n", "2"}, "alexander_k2.txt"},
      {{"casson", "--family", "kn", "--n", "3"}, "casson_k3.txt"},
      {{"tuples", "--chi", "2", "--genus", "4", "--exclude-seifert"}, "tuples_chi2_g4.txt"},
      {{"twobridge", "--compare", "2,-2,2", "3,2,3"}, "twobridge_compare.txt"},
      {{"report", "--n", "4"}, "report_n4.txt"},
      {{"report", "--n", "2", "--json"}, "report_n2.json"},
      {{"diagram-std", "--type", "3,3,0,4"}, "std_3_3_0_4.json"},
  };
  for (const auto& c : cases) {
    CAPTURE(c.file);
    const Result r = cli(c.args);
    CHECK(r.code == app::kOk);
    CHECK(r.err.empty());
    CHECK(r.out == golden(c.file));
  }
}

TEST_CASE("band file input") {
  const Result r = cli({"alexander", "--input", data("k1_bands.json"), "--json"});
  REQUIRE(r.code == app::kOk);
  const json j = json::parse(r.out);
  CHECK(j["delta"] == json{{"-1", -2}, {"0", 5}, {"1", -2}});
  CHECK(j["f"] == json{{"0", 1}, {"1", -2}});
  CHECK(j["matrix_size"] == 3);
}

TEST_CASE("alexander JSON feeds casson --delta") {
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    const Result alex = cli({"alexander", "--family", "kn", "--n", std::to_string(n), "--json"});
    REQUIRE(alex.code == app::kOk);
    const std::string delta = json::parse(alex.out)["delta"].dump();
    const Result inline_run = cli({"casson", "--delta", delta, "--json"});
    const Result family_run = cli({"casson", "--family", "kn", "--n", std::to_string(n), "--json"});
    REQUIRE(inline_run.code == app::kOk);
    REQUIRE(family_run.code == app::kOk);
    CHECK(json::parse(inline_run.out)["lambda"] == json::parse(family_run.out)["lambda"]);
    CHECK(json::parse(family_run.out)["lambda"] == -n * (n + 1));
  }
  const Result m2 = cli({"casson", "--family", "kn", "--n", "2", "--m", "-3", "--json"});
  REQUIRE(m2.code == app::kOk);
  CHECK(json::parse(m2.out)["lambda"] == 18);
}

TEST_CASE("diagram-std output validates") {
  for (const char* type : {"3,3,0,4", "4,2,1,1", "0,0,0,1", "2,3,0,3"}) {
    CAPTURE(type);
    const Result std_run = cli({"diagram-std", "--type", type});
    REQUIRE(std_run.code == app::kOk);
    const auto path = std::filesystem::temp_directory_path() /
                      ("trikit_std_" + std::string(type) + ".json");
    std::ofstream(path) << std_run.out;
    const Result v = cli({"diagram-validate", "--input", path.string(), "--json"});
    std::filesystem::remove(path);
    CHECK(v.code == app::kOk);
    CHECK(json::parse(v.out)["passed"] == true);
  }
}

TEST_CASE("diagram-validate on hand-written files") {
  const Result good = cli({"diagram-validate", "--input", data("diagram_torus.json")});
  CHECK(good.code == app::kOk);
  CHECK(good.out.find("result:          PASS") != std::string::npos);

  const Result bad = cli({"diagram-validate", "--input", data("diagram_wrong_count.json"), "--json"});
  CHECK(bad.code == app::kDomainError);
  const json j = json::parse(bad.out);
  CHECK(j["passed"] == false);
  CHECK_FALSE(j["messages"].empty());
}

TEST_CASE("tuples JSON") {
  const Result r = cli({"tuples", "--chi", "1", "--genus", "3", "--exclude-seifert", "--json"});
  REQUIRE(r.code == app::kOk);
  const json j = json::parse(r.out);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["k"] == 3);
  CHECK(j[0]["b"] == 4);
  CHECK(j[0]["heegaard"] == 3);
  CHECK(j[1]["p"] == 1);
  CHECK(j[1]["page"] == 1);
  for (const auto& row : j) CHECK(row["chi"] == 1);
}

TEST_CASE("twobridge") {
  const Result r = cli({"twobridge", "--cf=-2,2,-2", "--json"});
  REQUIRE(r.code == app::kOk);
  const json j = json::parse(r.out);
  CHECK(j["q"] == 12);
  CHECK(j["p"] == 7);

  const Result torus = cli({"twobridge", "--cf", "3", "--json"});
  REQUIRE(torus.code == app::kOk);
  CHECK(json::parse(torus.out)["torus"] == true);
}

TEST_CASE("exit statuses per failure class") {
  struct Case {
    std::vector<std::string> args;
    int code;
  };
  const std::vector<Case> cases = {
      {{"tuples", "--chi"}, app::kParseError},
      {{"frobnicate"}, app::kParseError},
      {{"alexander", "--input", data("malformed.json")}, app::kParseError},
      {{"alexander", "--input", data("does_not_exist.json")}, app::kParseError},
      {{"alexander", "--family", "kn", "--n", "2", "--input", data("k1_bands.json")}, app::kParseError},
      {{"alexander", "--family", "torus", "--n", "2"}, app::kParseError},
      {{"casson", "--delta", "{\"1\": 1, \"0\": 1}"}, app::kDomainError},
      {{"casson", "--family", "kn", "--n", "1", "--m", "0"}, app::kDomainError},
      {{"alexander", "--family", "kn", "--n", "0"}, app::kDomainError},
      {{"report", "--n", "0"}, app::kDomainError},
      {{"diagram-std", "--type", "1,3,0,2"}, app::kDomainError},
      {{"diagram-std", "--type", "1,x,0,2"}, app::kParseError},
      {{"twobridge", "--cf", "2,0,2"}, app::kDomainError},
      {{"twobridge", "--cf", "1"}, app::kDomainError},
  };
  for (const auto& c : cases) {
    std::string joined;
    for (const auto& a : c.args) joined += a + " ";
    CAPTURE(joined);
    const Result r = cli(c.args);
    CHECK(r.code == c.code);
    if (c.code != app::kOk) CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("errors as JSON") {
  const Result r = cli({"report", "--n", "0", "--json"});
  CHECK(r.code == app::kDomainError);
  const json j = json::parse(r.err);
  CHECK(j["error"] == "domain");
  CHECK(j["exit"] == app::kDomainError);

  const Result p = cli({"alexander", "--input", data("malformed.json"), "--json"});
  CHECK(p.code == app::kParseError);
  CHECK(json::parse(p.err)["error"] == "parse");
}

TEST_CASE("help exits cleanly") {
  const Result r = cli({"--help"});
  CHECK(r.code == app::kOk);
  CHECK(r.out.find("tuples") != std::string::npos);
}

TEST_CASE("report_mn") {
  const auto serial = app::report_mn(12, 1);
  const auto parallel = app::report_mn(12, 5);
  REQUIRE(serial.size() == 12);
  CHECK(app::report_to_json(serial) == app::report_to_json(parallel));
  CHECK(app::report_to_text(serial) == app::report_to_text(parallel));
  for (std::size_t i = 0; i < serial.size(); ++i) {
    const auto n = static_cast<long>(i + 1);
    CHECK(serial[i].n == n);
    CHECK(serial[i].lambda == -n * (n + 1));
    CHECK(serial[i].heegaard_genus == 3);
    CHECK(serial[i].tuples == std::vector<TrisectionType>{{3, 3, 0, 4}, {3, 2, 1, 1}});
  }
  // JSON survives a dump/parse round trip unchanged.
  const json j = app::report_to_json(serial);
  CHECK(json::parse(j.dump()) == j);
  CHECK_THROWS_AS(app::report_mn(0), DomainError);
}
