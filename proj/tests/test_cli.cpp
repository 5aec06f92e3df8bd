#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "rootnum/cli.hpp"
#include "rootnum/place_file.hpp"

using namespace rootnum;
using nlohmann::json;

namespace {

std::string data_path(const std::string& name) {
  return std::string(TEST_DATA_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("place file parses and re-emits canonically") {
  PlaceFile pf = parse_place_file(slurp(data_path("gate_proven.json")));
  CHECK(pf.genus == 1);
  CHECK(pf.group->n() == 3);
  CHECK(pf.places.size() == 2);
  json emitted = emit_place_file(pf);
  PlaceFile again = parse_place_file(emitted.dump());
  CHECK(emit_place_file(again) == emitted);
}

TEST_CASE("minimal file parses") {
  PlaceFile pf = parse_place_file(slurp(data_path("minimal.json")));
  CHECK(pf.tau.rep.dim() == 2);
}

TEST_CASE("schema failures carry paths and proper types") {
  CHECK_THROWS_AS(parse_place_file(slurp(data_path("bad_group.json"))),
                  InconsistentGroup);
  try {
    parse_place_file(slurp(data_path("bad_constituent.json")));
    FAIL("expected SchemaError");
  } catch (const SchemaError& e) {
    CHECK(std::string(e.what()).find("/tau/constituents/0") !=
          std::string::npos);
  }
  CHECK_THROWS_AS(parse_place_file("{not json"), SchemaError);
}

TEST_CASE("cli: indicator table for G(3,2)") {
  CliRun r = run({"indicator", "--n", "3", "--k", "2", "--all"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  REQUIRE(j["irreps"].size() == 6);
  std::multiset<int> indicators;
  for (const auto& e : j["irreps"]) indicators.insert(e["indicator"].get<int>());
  CHECK(indicators == std::multiset<int>{-1, 0, 0, 1, 1, 1});
}

TEST_CASE("cli: classify agrees everywhere") {
  CliRun r = run({"classify", "--n", "12", "--k", "5"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["all_agree"].get<bool>());
}

TEST_CASE("cli: lattice examples") {
  CliRun r = run({"lattice", "--rows", "2,4;3,6"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["basis"] == json::parse("[[1,2]]"));
  CHECK(j["pivots"] == json::parse("[1]"));
  CHECK(j["hnf"] == json::parse("[[1,2]]"));

  CliRun r2 = run({"lattice", "--rows", "1,1;1,2", "--unit-pivot"});
  REQUIRE(r2.code == 0);
  json j2 = json::parse(r2.out);
  CHECK(j2["pivots"] == json::parse("[1,2]"));
  std::string det = j2["det_d"].get<std::string>();
  CHECK((det == "1" || det == "-1"));

  CliRun r3 = run({"lattice", "--rows", "2,4;3,6", "--unit-pivot"});
  CHECK(r3.code == 1);  // rank deficient
}

TEST_CASE("cli: theta") {
  CliRun r = run({"theta", "--n", "4", "--k", "3", "--d", "4"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["char_poly_is_cyclotomic"].get<bool>());
  CHECK(j["rational_character"].get<bool>());
  CHECK(j["char_poly_at_b"] == json::parse("[\"1\",\"0\",\"1\"]"));
}

TEST_CASE("cli: grothendieck") {
  CliRun r = run({"grothendieck", "--input", data_path("lambda_case2.json")});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["recombines_exactly"].get<bool>());
  CHECK(j["ledger"]["case"] == "case2");
  CHECK(j["ledger"]["mu_list"].size() == 2);
}

TEST_CASE("cli: gate exit codes and trace files") {
  std::string trace_path = "/tmp/rootnum_trace_test.json";
  CliRun r = run({"gate", "--input", data_path("gate_proven.json"), "--trace",
                  trace_path});
  CHECK(r.code == 0);
  json verdict = json::parse(r.out);
  CHECK(verdict["verdict"] == "proven");
  CHECK(verdict["product"] == 1);
  json trace = json::parse(slurp(trace_path));
  CHECK(trace["product"] == 1);
  int prod = 1;
  for (const auto& p : trace["places"]) prod *= p["sign"].get<int>();
  CHECK(prod == trace["product"].get<int>());

  // schema errors exit 2
  CliRun r2 = run({"gate", "--input", data_path("bad_group.json")});
  CHECK(r2.code == 2);

  // hypothesis failure exits 3
  CliRun r3 = run({"gate", "--input", data_path("minimal.json")});
  CHECK(r3.code == 3);
  json v3 = json::parse(r3.out);
  CHECK(v3["verdict"] == "hypothesis_failed");
  CHECK(v3["failed_condition"] == "indicator-minus-one");
}

TEST_CASE("cli: root-number output is deterministic") {
  CliRun a = run({"root-number", "--input", data_path("gate_proven.json")});
  CliRun b = run({"root-number", "--input", data_path("gate_proven.json")});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  json j = json::parse(a.out);
  CHECK(j["product"] == 1);
}

TEST_CASE("cli: assemble") {
  CliRun r = run({"assemble", "--input", data_path("gate_proven.json"),
                  "--place", "1"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["dim"] == 2);
  CHECK(j["nilpotent_rank"] == 0);
  CHECK(j["weight_audit_pass"].get<bool>());
  CHECK(j["kappa_symplectic"].get<bool>());
}

TEST_CASE("supplied ledgers are parsed, validated, and accepted") {
  // compute the correct ledger for the good place and feed it back in
  PlaceFile pf = parse_place_file(slurp(data_path("gate_proven.json")));
  const LocalPlace& place = pf.places[1];
  GrothendieckLedger ledger = grothendieck_decompose(
      pf.group, place.unif.kappa.twist_omega(Rat(-1, 2)));
  json j = json::parse(slurp(data_path("gate_proven.json")));
  j["places"][1]["ledger"] = ledger_json(ledger);
  std::string with_ledger = j.dump();
  PlaceFile pf2 = parse_place_file(with_ledger);
  REQUIRE(pf2.places[1].ledger.has_value());
  Verdict v = theorem_gate(pf2.places, pf2.tau);
  CHECK(v.proven);
  // a ledger that does not recombine to kappa is rejected at evaluation
  j["places"][1]["ledger"]["mu_list"] = json::array();
  PlaceFile pf3 = parse_place_file(j.dump());
  CHECK_THROWS_AS(w_local(pf3.places[1]), LedgerInvalid);
}

TEST_CASE("split uniformization data parses and validates") {
  json j = json::parse(slurp(data_path("gate_proven.json")));
  j["places"][1]["torus_rank"] = 2;
  j["places"][1]["chi"] =
      json::parse(R"([{"d":1,"e":0,"x":1,"w":0,"multiplicity":2}])");
  j["places"][1]["split"] = json::parse(
      R"({"s":1,
          "chi1":[{"d":1,"e":0,"x":1,"w":0,"multiplicity":1}],
          "chi2":[{"d":1,"e":0,"x":1,"w":0,"multiplicity":1}]})");
  // keep dim kappa + 2r = 2g: raise the genus
  j["genus"] = 3;
  PlaceFile pf = parse_place_file(j.dump());
  REQUIRE(pf.places[1].unif.split.has_value());
  CHECK(pf.places[1].unif.split->s == 1);
  // a split block whose parts do not sum to chi is rejected
  j["places"][1]["split"]["s"] = 2;
  j["places"][1]["split"]["chi1"] =
      json::parse(R"([{"d":1,"e":0,"x":1,"w":0,"multiplicity":2}])");
  j["places"][1]["split"]["chi2"] =
      json::parse(R"([{"d":1,"e":0,"x":1,"w":0,"multiplicity":1}])");
  CHECK_THROWS_AS(parse_place_file(j.dump()), SchemaError);
}

TEST_CASE("cli: usage errors exit 2") {
  CliRun r = run({"no-such-command"});
  CHECK(r.code == 2);
  CliRun r2 = run({"irreps"});
  CHECK(r2.code == 2);
}
