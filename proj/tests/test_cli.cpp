#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "ulrich/cli.hpp"
#include "ulrich/report.hpp"
#include "ulrich/sweep.hpp"

using namespace ulrich;

namespace {

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  RunResult r;
  r.code = cli_run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

// ---- minimal JSON-schema checker (the subset used by docs/report.schema.json:
// $ref into definitions, type, enum, oneOf, required, properties,
// additionalProperties:false, items) ----

const Json& schema_root() {
  static const Json root = [] {
    std::ifstream f(ULRICH_SCHEMA_PATH);
    if (!f) throw std::runtime_error("schema file not found: " ULRICH_SCHEMA_PATH);
    return Json::parse(f);
  }();
  return root;
}

bool type_matches(const std::string& t, const Json& v) {
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "string") return v.is_string();
  if (t == "boolean") return v.is_boolean();
  if (t == "integer") return v.is_number_integer();
  if (t == "number") return v.is_number();
  if (t == "null") return v.is_null();
  return false;
}

void validate(const Json& schema_in, const Json& v, const std::string& path,
              std::vector<std::string>& errs) {
  const Json* sp = &schema_in;
  if (sp->contains("$ref")) {
    const std::string ref = (*sp)["$ref"].get<std::string>();
    const std::string prefix = "#/definitions/";
    if (ref.rfind(prefix, 0) != 0) {
      errs.push_back(path + ": unsupported $ref " + ref);
      return;
    }
    sp = &schema_root().at("definitions").at(ref.substr(prefix.size()));
  }
  const Json& s = *sp;

  if (s.contains("oneOf")) {
    for (const Json& alt : s["oneOf"]) {
      std::vector<std::string> sub;
      validate(alt, v, path, sub);
      if (sub.empty()) return;
    }
    errs.push_back(path + ": no oneOf alternative matched");
    return;
  }

  if (s.contains("enum")) {
    bool hit = false;
    for (const Json& cand : s["enum"]) hit = hit || cand == v;
    if (!hit) errs.push_back(path + ": value not in enum: " + v.dump());
  }

  if (s.contains("type")) {
    const Json& t = s["type"];
    bool ok = false;
    if (t.is_array()) {
      for (const Json& one : t) ok = ok || type_matches(one.get<std::string>(), v);
    } else {
      ok = type_matches(t.get<std::string>(), v);
    }
    if (!ok) {
      errs.push_back(path + ": type mismatch, got " + v.dump().substr(0, 40));
      return;
    }
  }

  if (v.is_object()) {
    if (s.contains("required"))
      for (const Json& name : s["required"])
        if (!v.contains(name.get<std::string>()))
          errs.push_back(path + ": missing required key '" + name.get<std::string>() + "'");
    const Json props = s.contains("properties") ? s["properties"] : Json::object();
    const bool closed =
        s.contains("additionalProperties") && s["additionalProperties"] == Json(false);
    for (const auto& item : v.items()) {
      if (props.contains(item.key()))
        validate(props[item.key()], item.value(), path + "/" + item.key(), errs);
      else if (closed)
        errs.push_back(path + ": unexpected key '" + item.key() + "'");
    }
  }

  if (v.is_array() && s.contains("items")) {
    std::size_t i = 0;
    for (const Json& el : v)
      validate(s["items"], el, path + "[" + std::to_string(i++) + "]", errs);
  }
}

void expect_valid(const std::string& command, const std::string& payload) {
  const Json doc = Json::parse(payload);
  std::vector<std::string> errs;
  validate(schema_root().at("commands").at(command), doc, command, errs);
  std::string joined;
  for (const std::string& e : errs) joined += e + "; ";
  CHECK_MESSAGE(errs.empty(), joined);
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("exit codes") {
    SUBCASE("invalid scroll config is a usage error") {
      const RunResult r = run({"verify", "--e", "1", "--b", "5", "--k", "4", "--r", "2"});
      CHECK(r.code == 64);
      CHECK(r.err.find("b - e < k < 2b - 4e") != std::string::npos);
    }
    SUBCASE("rank one points at the line search") {
      const RunResult r = run({"verify", "--e", "0", "--b", "2", "--k", "3", "--r", "1"});
      CHECK(r.code == 64);
      CHECK(r.err.find("search-lines") != std::string::npos);
    }
    SUBCASE("validate-config reports instead of erroring") {
      CHECK(run({"validate-config", "--e", "1", "--b", "5", "--k", "4"}).code == 1);
      CHECK(run({"validate-config", "--e", "1", "--b", "5", "--k", "5"}).code == 0);
    }
    SUBCASE("an undetermined classification exits 2") {
      const RunResult r =
          run({"search-lines", "--e", "1", "--b", "7", "--k", "9", "--probe-t", "3"});
      CHECK(r.code == 2);
      const Json j = Json::parse(r.out);
      CHECK(j["result"]["any_unknown"] == Json(true));
    }
    SUBCASE("surface-only search needs no k") {
      const RunResult r = run({"search-lines", "--e", "1", "--b", "5", "--box", "20"});
      CHECK(r.code == 0);
      const Json j = Json::parse(r.out);
      CHECK(j["result"]["surface_lines"].is_array());
      CHECK(j["result"]["surface_lines"].empty());
    }
    SUBCASE("an inexact scroll table exits 2") {
      const RunResult r = run(
          {"scroll", "--e", "1", "--b", "7", "--k", "9", "--class", "1,-1,-4"});
      CHECK(r.code == 2);
      const Json j = Json::parse(r.out);
      CHECK(j["result"]["cohomology"]["table"]["exact"] == Json(false));
    }
    SUBCASE("composite moduli are rejected") {
      const RunResult r = run({"verify", "--e", "0", "--b", "2", "--k", "3", "--r", "2",
                               "--field", "fp:15"});
      CHECK(r.code == 64);
    }
    SUBCASE("unknown subcommand") { CHECK(run({"frobnicate"}).code == 64); }
    SUBCASE("help exits zero") { CHECK(run({"--help"}).code == 0); }
    SUBCASE("malformed integers are usage errors") {
      CHECK(run({"cohomology", "--e", "0", "--a", "two", "--b", "3"}).code == 64);
    }
  }

  TEST_CASE("byte-identical reruns") {
    const std::vector<std::string> args = {"verify", "--e", "1", "--b", "5",
                                           "--k", "5", "--r", "2", "--seed", "7"};
    const RunResult a = run(args);
    const RunResult b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);

    const RunResult c1 = run({"cohomology", "--e", "2", "--a", "3", "--b", "11"});
    const RunResult c2 = run({"cohomology", "--e", "2", "--a", "3", "--b", "11"});
    CHECK(c1.out == c2.out);
  }

  TEST_CASE("default field comes from the environment") {
    REQUIRE(setenv("ULRICH_DEFAULT_FIELD", "fp:101", 1) == 0);
    const RunResult a = run({"verify", "--e", "0", "--b", "2", "--k", "3", "--r", "2"});
    REQUIRE(unsetenv("ULRICH_DEFAULT_FIELD") == 0);
    REQUIRE(a.code == 0);
    CHECK(Json::parse(a.out)["result"]["field"] == Json("fp:101"));

    const RunResult b = run({"verify", "--e", "0", "--b", "2", "--k", "3", "--r", "2"});
    CHECK(Json::parse(b.out)["result"]["field"] == Json("fp:32003"));
  }

  TEST_CASE("timings are additive and non-canonical") {
    const std::vector<std::string> base = {"cohomology", "--e", "1", "--a", "2", "--b", "3"};
    std::vector<std::string> timed = base;
    timed.push_back("--timings");
    Json plain = Json::parse(run(base).out);
    Json with = Json::parse(run(timed).out);
    CHECK_FALSE(plain.contains("timings"));
    REQUIRE(with.contains("timings"));
    CHECK(with["timings"]["ms"].is_number_integer());
    CHECK(with["timings"]["ms"].get<std::int64_t>() >= 0);
    with.erase("timings");
    CHECK(plain == with);
  }

  TEST_CASE("--out writes the report to a file") {
    const std::string path = "cli_test_out.json";
    const RunResult direct = run({"presentation", "--e", "0", "--b", "4", "--r", "3"});
    const RunResult filed =
        run({"presentation", "--e", "0", "--b", "4", "--r", "3", "--out", path});
    REQUIRE(filed.code == 0);
    CHECK(filed.out.empty());
    CHECK(slurp(path) == direct.out);
    std::remove(path.c_str());
  }

  TEST_CASE("tiny sweep") {
    const std::string csv_a = "cli_test_sweep_a.csv";
    const std::string csv_b = "cli_test_sweep_b.csv";
    const std::vector<std::string> base = {"sweep",    "--e-min", "0", "--e-max", "0",
                                           "--b-count", "1",      "--r-min", "2",
                                           "--r-max",  "2",       "--reps", "1"};
    std::vector<std::string> run_a = base;
    run_a.insert(run_a.end(), {"--csv", csv_a});
    std::vector<std::string> run_b = base;
    run_b.insert(run_b.end(), {"--csv", csv_b});

    const RunResult ra = run(run_a);
    REQUIRE(ra.code == 0);
    const Json j = Json::parse(ra.out);
    CHECK(j["result"]["verify_tasks"] == Json(1));
    CHECK(j["result"]["rows"] == Json(1));
    CHECK(j["result"]["all_pass"] == Json(true));

    const std::string text = slurp(csv_a);
    std::istringstream lines(text);
    std::string header, row, extra;
    REQUIRE(std::getline(lines, header));
    REQUIRE(std::getline(lines, row));
    CHECK_FALSE(std::getline(lines, extra));
    CHECK(header == kSweepCsvHeader);
    CHECK(row.rfind("0,2,3,2,0,", 0) == 0);  // e,b,k,r,rep prefix

    const RunResult rb = run(run_b);
    REQUIRE(rb.code == 0);
    CHECK(slurp(csv_b) == text);
    std::remove(csv_a.c_str());
    std::remove(csv_b.c_str());
  }

  TEST_CASE("reports match the published schema") {
    SUBCASE("cohomology") {
      expect_valid("cohomology", run({"cohomology", "--e", "1", "--a", "2", "--b", "3"}).out);
    }
    SUBCASE("validate-config") {
      expect_valid("validate-config",
                   run({"validate-config", "--e", "0", "--b", "2", "--k", "3"}).out);
      expect_valid("validate-config",
                   run({"validate-config", "--e", "1", "--b", "5", "--k", "4"}).out);
    }
    SUBCASE("presentation") {
      expect_valid("presentation", run({"presentation", "--e", "0", "--b", "4", "--r", "3"}).out);
    }
    SUBCASE("verify") {
      expect_valid("verify", run({"verify", "--e", "0", "--b", "2", "--k", "3", "--r", "2",
                                  "--seed", "5"})
                                 .out);
      expect_valid("verify", run({"verify", "--e", "0", "--b", "2", "--k", "3", "--r", "2",
                                  "--seed", "5", "--timings"})
                                 .out);
    }
    SUBCASE("search-lines") {
      expect_valid("search-lines",
                   run({"search-lines", "--e", "0", "--b", "2", "--k", "3"}).out);
      expect_valid("search-lines", run({"search-lines", "--e", "1", "--b", "5"}).out);
    }
    SUBCASE("moduli-dim") {
      expect_valid("moduli-dim", run({"moduli-dim", "--e", "1", "--b", "5", "--r", "2"}).out);
      expect_valid("moduli-dim", run({"moduli-dim", "--e", "0", "--b", "2", "--r", "2",
                                      "--sample"})
                                     .out);
    }
    SUBCASE("scroll") {
      expect_valid("scroll", run({"scroll", "--e", "1", "--b", "5", "--k", "5", "--class",
                                  "1,0,0"})
                                 .out);
      expect_valid("scroll", run({"scroll", "--e", "0", "--b", "4", "--k", "5", "--r", "3"}).out);
    }
    SUBCASE("sweep") {
      const std::string csv = "cli_test_sweep_schema.csv";
      expect_valid("sweep", run({"sweep", "--e-min", "0", "--e-max", "0", "--b-count", "1",
                                 "--r-min", "2", "--r-max", "2", "--reps", "1", "--csv", csv})
                                .out);
      std::remove(csv.c_str());
    }
  }
}
