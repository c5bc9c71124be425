#include <catch_amalgamated.hpp>

#include <cstdlib>

#include "test_groups.hpp"
#include "wex/constructions.hpp"
#include "wex/error.hpp"
#include "wex/io.hpp"

using namespace wex;
using namespace testgroups;
using nlohmann::json;

namespace {

std::string data(const std::string& name) { return read_file(std::string(WEX_DATA_DIR) + "/" + name); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Internal;
}

const std::vector<std::string> kGroupFiles = {
    "heisenberg3.json",         "heisenberg5.json",   "s4perm.json",         "a5dim5.json",
    "s5dim5.json",              "binary_icosahedral.json", "twisted_cubic.json", "tensor_2a5_a4.json",
    "tensor_2a5_h3.json",       "reducible5.json",    "diagonal_n4k5.json"};

}  // namespace

TEST_CASE("group documents") {
  const GroupSpec h = parse_group_spec(data("heisenberg5.json"));
  CHECK(h.degree == 5);
  CHECK(h.conductor == 5);
  CHECK(h.generators.size() == 2);
  CHECK(h.generators == heisenberg(5));

  for (const auto& f : kGroupFiles) {
    const std::string text = data(f);
    CHECK(emit_group_spec(parse_group_spec(text)) == text);
  }
}

TEST_CASE("bundled documents match the builders") {
  auto same = [](const std::string& file, const std::vector<Matrix>& gens) {
    const GroupSpec s = parse_group_spec(data(file));
    CHECK(s.generators == gens);
  };
  same("heisenberg3.json", heisenberg(3));
  same("a5dim5.json", a5_dim5());
  same("s5dim5.json", s5_dim5());
  same("s4perm.json", s4_perm());
  same("binary_icosahedral.json", binary_icosahedral());
  same("twisted_cubic.json", twisted_cubic_group());
  same("tensor_2a5_a4.json", tensor_2a5_a4());
  same("tensor_2a5_h3.json", tensor_2a5_h3());
  same("reducible5.json", reducible_dim5());
  same("diagonal_n4k5.json", diagonal_group(4, 5, DiagonalPerm::Cyclic));
}

TEST_CASE("group document errors") {
  json doc = json::parse(data("heisenberg3.json"));
  SECTION("malformed") {
    CHECK(kind_of([] { parse_group_spec("{\"conductor\": 3,"); }) == ErrorKind::Parse);
  }
  SECTION("non-square") {
    doc["generators"][0][1].erase(0);
    CHECK(kind_of([&] { parse_group_spec(doc.dump()); }) == ErrorKind::Validation);
  }
  SECTION("wrong row count") {
    doc["generators"][0].erase(0);
    CHECK(kind_of([&] { parse_group_spec(doc.dump()); }) == ErrorKind::Validation);
  }
  SECTION("bad literal") {
    doc["generators"][1][0][0] = "1 + * z";
    try {
      parse_group_spec(doc.dump());
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Parse);
      CHECK(std::string(e.what()).find("generators[1][0][0]") != std::string::npos);
    }
  }
  SECTION("missing field") {
    doc.erase("degree");
    CHECK(kind_of([&] { parse_group_spec(doc.dump()); }) == ErrorKind::Validation);
  }
}

TEST_CASE("table documents") {
  const std::string text = data("6a6.table.json");
  const CharacterTable t = parse_table_spec(text);
  CHECK(t.classes->order == 2160);
  CHECK(t.irreducibles.size() == 31);
  REQUIRE(t.natural);
  CHECK(t.natural->degree() == 6);
  CHECK(emit_table_spec(t) == text);

  // Dixon output of an explicit group round-trips too.
  Source s = Source::from_group(closure(s4_perm()));
  const std::string s4 = emit_table_spec(s.table());
  CHECK(emit_table_spec(parse_table_spec(s4)) == s4);

  json doc = json::parse(text);
  SECTION("class sizes") {
    doc["classes"][1]["size"] = doc["classes"][1]["size"].get<int>() + 1;
    CHECK(kind_of([&] { parse_table_spec(doc.dump()); }) == ErrorKind::Validation);
  }
  SECTION("orthogonality") {
    doc["irreducibles"][1]["values"][2] = "7";
    CHECK(kind_of([&] { parse_table_spec(doc.dump()); }) == ErrorKind::Validation);
  }
  SECTION("power maps are mandatory up to 6") {
    doc["classes"][3]["power_maps"].erase("6");
    CHECK(kind_of([&] { parse_table_spec(doc.dump()); }) == ErrorKind::Validation);
  }
  SECTION("power map orders") {
    doc["classes"][3]["power_maps"]["1"] = 0;
    CHECK(kind_of([&] { parse_table_spec(doc.dump()); }) == ErrorKind::Validation);
  }
  SECTION("linear flags") {
    doc["irreducibles"][0]["linear"] = false;
    CHECK(kind_of([&] { parse_table_spec(doc.dump()); }) == ErrorKind::Validation);
  }
}

TEST_CASE("pipeline") {
  PipelineOptions opts;
  auto h5 = run_pipeline(data("heisenberg5.json"), opts);
  CHECK(h5.report.verdict == Verdict::WeaklyExceptional);
  CHECK(h5.report.group_order == std::size_t{125});

  auto a5 = run_pipeline(data("a5dim5.json"), opts);
  CHECK(a5.report.verdict == Verdict::NotWeaklyExceptional);
  const json j = report_json(a5.report);
  bool quadric = false;
  for (const auto& c : j["conditions"])
    if (!c["witness"].is_null() && c["witness"]["kind"] == "semi_invariant") {
      CHECK(c["witness"]["degree"] == 2);
      const auto& poly = c["witness"]["polynomials"][0];
      // Monomials appear in lexicographic order, x0 highest.
      for (std::size_t i = 1; i < poly.size(); ++i)
        CHECK(poly[i - 1]["monomial"].get<std::vector<int>>() > poly[i]["monomial"].get<std::vector<int>>());
      quadric = true;
    }
  CHECK(quadric);

  PipelineOptions topts;
  topts.table = true;
  auto a6 = run_pipeline(data("6a6.table.json"), topts);
  CHECK(a6.report.verdict == Verdict::WeaklyExceptional);
  CHECK(report_json(a6.report)["group_order"] == "table");
}

TEST_CASE("report emission") {
  PipelineOptions opts;
  for (const auto& f : {"heisenberg3.json", "a5dim5.json", "twisted_cubic.json", "s4perm.json"}) {
    auto r = run_pipeline(data(f), opts);
    const std::string a = emit_report(r, Format::Json);
    const std::string b = emit_report(run_pipeline(data(f), opts), Format::Json);
    CHECK(a == b);
    const json j = json::parse(a);
    CHECK(j == report_json(r.report));
    const std::string v = j["verdict"];
    CHECK((v == "WEAKLY_EXCEPTIONAL" || v == "NOT_WEAKLY_EXCEPTIONAL" || v == "INCONCLUSIVE" ||
           v == "REFLECTIONS_PRESENT"));
    CHECK(j.find("timings_ms") == j.end());
    CHECK(json::parse(emit_report(r, Format::Json, true)).contains("timings_ms"));
    CHECK(emit_report(r, Format::Text).find("verdict: " + v) == 0);
  }
}

TEST_CASE("rules and caps") {
  CHECK(parse_rule("auto").kind == RuleHint::Kind::Auto);
  CHECK(parse_rule("dim").kind == RuleHint::Kind::Dim);
  CHECK(parse_rule("diagonal:5").k == 5);
  CHECK(kind_of([] { parse_rule("diagonal:"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { parse_rule("other"); }) == ErrorKind::Parse);

  ::setenv("WEX_CAP", "100", 1);
  CHECK(cap_from_env() == 100);
  CHECK(kind_of([] { run_pipeline(data("heisenberg5.json"), {}); }) == ErrorKind::CapExceeded);
  ::setenv("WEX_CAP", "lots", 1);
  CHECK(kind_of([] { cap_from_env(); }) == ErrorKind::Validation);
  ::unsetenv("WEX_CAP");
  CHECK(cap_from_env() == kDefaultCap);
  PipelineOptions opts;
  opts.cap = 100;
  CHECK(kind_of([&] { run_pipeline(data("heisenberg5.json"), opts); }) == ErrorKind::CapExceeded);
}
