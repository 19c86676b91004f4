/*
   Copyright 2026 The intpoly authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "intpoly/bigint.hpp"

using nlohmann::json;
using intpoly::cli::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = std::string("/tmp/intpoly_test_") + name;
  std::ofstream f(path);
  f << content;
  return path;
}

// Minimal structural validator for the subset of JSON Schema the shipped
// schemas use: type (string or list), required, properties, items, enum,
// oneOf, minItems/maxItems.
bool validate(const json& schema, const json& value);

bool type_matches(const std::string& t, const json& v) {
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "string") return v.is_string();
  if (t == "boolean") return v.is_boolean();
  if (t == "integer") return v.is_number_integer();
  if (t == "number") return v.is_number();
  if (t == "null") return v.is_null();
  return false;
}

bool validate(const json& schema, const json& value) {
  if (schema.contains("oneOf")) {
    int hits = 0;
    for (const auto& sub : schema["oneOf"])
      if (validate(sub, value)) ++hits;
    return hits == 1;
  }
  if (schema.contains("type")) {
    const auto& t = schema["type"];
    if (t.is_string()) {
      if (!type_matches(t.get<std::string>(), value)) return false;
    } else {
      bool any = false;
      for (const auto& tt : t)
        if (type_matches(tt.get<std::string>(), value)) any = true;
      if (!any) return false;
    }
  }
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& e : schema["enum"])
      if (e == value) found = true;
    if (!found) return false;
  }
  if (value.is_object()) {
    if (schema.contains("required")) {
      for (const auto& k : schema["required"])
        if (!value.contains(k.get<std::string>())) return false;
    }
    if (schema.contains("properties")) {
      for (auto it = schema["properties"].begin();
           it != schema["properties"].end(); ++it) {
        if (value.contains(it.key()) && !validate(it.value(), value[it.key()]))
          return false;
      }
    }
  }
  if (value.is_array()) {
    if (schema.contains("minItems") &&
        value.size() < schema["minItems"].get<size_t>())
      return false;
    if (schema.contains("maxItems") &&
        value.size() > schema["maxItems"].get<size_t>())
      return false;
    if (schema.contains("items") && schema["items"].is_object()) {
      for (const auto& v : value)
        if (!validate(schema["items"], v)) return false;
    }
  }
  return true;
}

json load_schema(const std::string& name) {
  std::ifstream f(std::string(INTPOLY_SCHEMA_DIR) + "/" + name);
  REQUIRE(f.good());
  json j;
  f >> j;
  return j;
}

}  // namespace

TEST_CASE("basis over Z emits sigma_n = 1/n!") {
  auto r = run({"basis", "--domain", "Z", "--upto", "12"});
  REQUIRE(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(validate(load_schema("basis.schema.json"), doc));
  CHECK(doc["upto"] == 12);
  intpoly::BigInt fact(1);
  for (long n = 0; n <= 12; ++n) {
    if (n > 1) fact *= intpoly::BigInt(n);
    CHECK(doc["sigmas"][static_cast<size_t>(n)][0] == "1");
    CHECK(doc["sigmas"][static_cast<size_t>(n)][1] == fact.str());
  }
  CHECK(doc["polys"].size() == 13);
}

TEST_CASE("pog subcommand") {
  auto r = run({"pog", "--domain", "Quad:-5"});
  CHECK(r.code == 1);  // mathematical negative: non-Polya
  json doc = json::parse(r.out);
  CHECK(validate(load_schema("pog.schema.json"), doc));
  CHECK(doc["order"] == 2);
  CHECK(doc["is_trivial"] == false);

  auto gauss = run({"pog", "--domain", "Quad:-1"});
  CHECK(gauss.code == 0);
  CHECK(json::parse(gauss.out)["is_trivial"] == true);
}

TEST_CASE("basis obstruction over a non-Polya order") {
  auto r = run({"basis", "--domain", "Quad:-29", "--upto", "10"});
  CHECK(r.code == 1);
  json doc = json::parse(r.out);
  CHECK(doc["ok"] == false);
  CHECK(doc["obstruction"]["q"] == "2");
}

TEST_CASE("membership subcommand") {
  auto member = run({"membership", "--domain", "Z", "--poly", "0,-1/2,1/2"});
  CHECK(member.code == 0);
  json doc = json::parse(member.out);
  CHECK(validate(load_schema("membership.schema.json"), doc));
  CHECK(doc["member"] == true);

  auto non = run({"membership", "--domain", "Z", "--poly", "0,0,1/2"});
  CHECK(non.code == 1);
  json nondoc = json::parse(non.out);
  CHECK(nondoc["member"] == false);
  CHECK(nondoc["witness"] == "1");

  auto quad = run({"membership", "--domain", "Quad:-5", "--poly", "0,-1/2,1/2"});
  CHECK(quad.code == 1);
  CHECK(json::parse(quad.out)["witness"] == "sqrt(-5)");
}

TEST_CASE("membership via poly file over FpT") {
  // F_2 = (X^2 - X)/(T^2+T); over F_2 that is X/(T^2+T) + X^2/(T^2+T).
  std::string fermat = write_temp(
      "fpt_fermat.json",
      R"({"domain":"FpT:2","coeffs":[["0"],{"num":["1"],"den":["0","1","1"]},{"num":["1"],"den":["0","1","1"]}]})");
  auto r = run({"membership", "--domain", "FpT:2", "--poly-file", fermat});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["member"] == true);

  auto inline_rejected =
      run({"membership", "--domain", "FpT:2", "--poly", "0,1"});
  CHECK(inline_rejected.code == 2);
}

TEST_CASE("expand subcommand") {
  // binom(X,4) = (X^4 - 6X^3 + 11X^2 - 6X)/24.
  auto r = run({"expand", "--domain", "Z", "--poly",
                "0,-6/24,11/24,-6/24,1/24", "--upto", "4"});
  CHECK(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(validate(load_schema("expand.schema.json"), doc));
  CHECK(doc["ok"] == true);
  for (const auto& c : doc["coeffs"]) CHECK(c[1] == "1");  // integers

  auto bad = run({"expand", "--domain", "Z", "--poly", "0,0,1/2"});
  CHECK(bad.code == 1);
  CHECK(json::parse(bad.out)["ok"] == false);
}

TEST_CASE("ideals subcommand") {
  auto r = run({"ideals", "--domain", "FpT:2", "--n", "4"});
  CHECK(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(validate(load_schema("ideals.schema.json"), doc));
  CHECK(doc["factorial"].size() == 3);
}

TEST_CASE("classgroup subcommand") {
  auto r = run({"classgroup", "--disc", "-116"});
  CHECK(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(validate(load_schema("classgroup.schema.json"), doc));
  CHECK(doc["h"] == 6);
  auto bad = run({"classgroup", "--disc", "-12"});
  CHECK(bad.code == 2);  // non-fundamental
}

TEST_CASE("verify subcommands") {
  auto vp = run({"verify-presentation", "--domain", "Zloc:2", "--maxdeg", "32"});
  CHECK(vp.code == 0);
  json vpdoc = json::parse(vp.out);
  CHECK(validate(load_schema("verify-presentation.schema.json"), vpdoc));
  CHECK(vpdoc["pass"] == true);

  auto vr = run({"verify-relations", "--domain", "Z", "--q", "2,3", "--depth", "2"});
  CHECK(vr.code == 0);
  json vrdoc = json::parse(vr.out);
  CHECK(validate(load_schema("verify-relations.schema.json"), vrdoc));
  CHECK(vrdoc["pass"] == true);
}

TEST_CASE("wpc subcommand") {
  std::string z6 = write_temp(
      "z6.json", R"({"rank":1,"mult":[1],"relations":[[6]],"unity":[1]})");
  auto r = run({"wpc", "--input", z6});
  CHECK(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(validate(load_schema("wpc.schema.json"), doc));
  CHECK(doc["wpc"]["overall"] == true);
  for (const auto& s : doc["suites"]) CHECK(s["all_agree"] == true);

  std::string f4 = write_temp(
      "f4.json",
      R"({"rank":2,"mult":[1,0,0,1,0,1,1,1],"relations":[[2,0],[0,2]],"unity":[1,0]})");
  auto rf4 = run({"wpc", "--input", f4});
  CHECK(rf4.code == 1);
  json f4doc = json::parse(rf4.out);
  CHECK(f4doc["wpc"]["overall"] == false);
  CHECK(f4doc["wpc"]["primes"][0]["witness"][1] == "1");  // omega
}

TEST_CASE("split-analysis subcommand") {
  auto r = run({"split-analysis", "--domain", "Quad:-1", "--bound", "30"});
  CHECK(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(validate(load_schema("split-analysis.schema.json"), doc));
  CHECK(doc["split"] == json::array({"5", "13", "17", "29"}));
}

TEST_CASE("w-table csv and json") {
  auto csv = run({"w-table", "--kmax", "4", "--nmax", "4", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out ==
        "n,w_2,w_3,w_4\n0,0,0,0\n1,0,0,0\n2,1,0,0\n3,1,1,0\n4,3,1,1\n");

  auto j = run({"w-table", "--kmax", "4", "--nmax", "4"});
  CHECK(j.code == 0);
  CHECK(validate(load_schema("w-table.schema.json"), json::parse(j.out)));
}

TEST_CASE("deterministic output, independent of --jobs") {
  auto a = run({"w-table", "--kmax", "12", "--nmax", "60", "--format", "csv",
                "--jobs", "1"});
  auto b = run({"w-table", "--kmax", "12", "--nmax", "60", "--format", "csv",
                "--jobs", "4"});
  auto c = run({"w-table", "--kmax", "12", "--nmax", "60", "--format", "csv",
                "--jobs", "4"});
  CHECK(a.out == b.out);
  CHECK(b.out == c.out);

  auto x = run({"basis", "--domain", "Quad:-1", "--upto", "6"});
  auto y = run({"basis", "--domain", "Quad:-1", "--upto", "6"});
  CHECK(x.out == y.out);
}

TEST_CASE("golden pog document") {
  auto r = run({"pog", "--domain", "Quad:-5"});
  CHECK(r.out ==
        "{\"d\":\"-5\",\"disc\":\"-20\",\"element_orders\":[1,2],"
        "\"generators\":[0,1],\"h\":2,\"is_proper\":false,"
        "\"is_trivial\":false,\"order\":2,\"subgroup\":[0,1]}\n");
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({"membership", "--domain", "Zloc:4", "--poly", "1"}).code == 2);
  CHECK(run({"membership", "--domain", "bogus", "--poly", "1"}).code == 2);
  CHECK(run({"basis", "--domain", "Z", "--upto", "3", "--frobnicate"}).code ==
        2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"pog", "--domain", "Z"}).code == 2);
}

TEST_CASE("budget exceedance exits 2") {
  std::string big = write_temp(
      "fpt_budget.json",
      R"({"domain":"FpT:2","coeffs":[["0"],{"num":["1"],"den":["0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","0","1"]}]})");
  auto r = run({"membership", "--domain", "FpT:2", "--poly-file", big});
  CHECK(r.code == 2);
  CHECK(r.err.find("budget") != std::string::npos);
}

TEST_CASE("output file flag") {
  std::string path = "/tmp/intpoly_test_wtable_out.csv";
  auto r = run({"w-table", "--kmax", "3", "--nmax", "2", "--format", "csv",
                "--output", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == "n,w_2,w_3\n0,0,0\n1,0,0\n2,1,0\n");
}

TEST_CASE("pretty format is indented json") {
  auto r = run({"pog", "--domain", "Quad:-1", "--format", "pretty"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\n  ") != std::string::npos);
  CHECK(json::parse(r.out)["h"] == 1);
}
