#include <cstdio>
#include <fstream>
#include <regex>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

using nlohmann::json;

// Checks the subset of draft-07 the report schema uses: type, required,
// properties, items, minimum, pattern, enum.
bool conforms(const json& schema, const json& doc) {
  if (schema.contains("type")) {
    const std::string t = schema["type"];
    if (t == "object" && !doc.is_object()) return false;
    if (t == "array" && !doc.is_array()) return false;
    if (t == "string" && !doc.is_string()) return false;
    if (t == "integer" && !doc.is_number_integer()) return false;
  }
  if (schema.contains("required"))
    for (const auto& key : schema["required"])
      if (!doc.contains(key.get<std::string>())) return false;
  if (schema.contains("properties") && doc.is_object())
    for (auto& [key, sub] : schema["properties"].items())
      if (doc.contains(key) && !conforms(sub, doc.at(key))) return false;
  if (schema.contains("items") && doc.is_array())
    for (const auto& el : doc)
      if (!conforms(schema["items"], el)) return false;
  if (schema.contains("minimum") && doc.is_number())
    if (doc.get<double>() < schema["minimum"].get<double>()) return false;
  if (schema.contains("pattern") && doc.is_string())
    if (!std::regex_search(doc.get<std::string>(), std::regex(schema["pattern"].get<std::string>())))
      return false;
  if (schema.contains("enum")) {
    bool hit = false;
    for (const auto& v : schema["enum"]) hit = hit || v == doc;
    if (!hit) return false;
  }
  return true;
}

json load_schema() {
  std::ifstream f(TANGLEH_SCHEMA);
  REQUIRE(f.good());
  return json::parse(f);
}

std::string capture(const std::string& args) {
  std::string cmd = std::string(TANGLEH_BIN) + " " + args;
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
  pclose(p);
  return out;
}

}  // namespace

TEST_SUITE("schema") {
  TEST_CASE("validator subset behaves") {
    json s = R"({"type":"object","required":["a"],"properties":{
      "a":{"type":"integer","minimum":0},
      "b":{"type":"string","pattern":"^x+$"},
      "c":{"type":"array","items":{"type":"string"}},
      "d":{"enum":["u","v"]}}})"_json;
    CHECK(conforms(s, R"({"a":1})"_json));
    CHECK(conforms(s, R"({"a":0,"b":"xx","c":["p"],"d":"v"})"_json));
    CHECK(!conforms(s, R"({})"_json));
    CHECK(!conforms(s, R"({"a":-1})"_json));
    CHECK(!conforms(s, R"({"a":1,"b":"y"})"_json));
    CHECK(!conforms(s, R"({"a":1,"c":["p",3]})"_json));
    CHECK(!conforms(s, R"({"a":1,"d":"w"})"_json));
    CHECK(!conforms(s, R"([1])"_json));
  }

  TEST_CASE("live reports conform") {
    json schema = load_schema();
    const char* runs[] = {
        R"(homology --pd '[["2","5","3","6"],["4","|1","5","2"],["6","3","7|","4"]]' --json)",
        R"(homology --pd '[["|1","|2","3|","4|"]]' --signs '-' --normalize min-zero --json)",
        R"(homology --pd '{"pd":[],"signs":"","free":{"circles":1,"arcs":2}}' --field gf2 --json)",
        R"(homology --pd '[["1","2","2","1"]]' --field gfp:7 --zero-pairing ab --json)",
    };
    for (const char* args : runs) {
      json doc = json::parse(capture(args));
      CHECK(conforms(schema, doc));
    }
  }

  TEST_CASE("mutated reports are rejected") {
    json schema = load_schema();
    json doc = json::parse(capture(
        R"(homology --pd '[["2","5","3","6"],["4","|1","5","2"],["6","3","7|","4"]]' --json)"));
    REQUIRE(conforms(schema, doc));

    json no_euler = doc;
    no_euler.erase("euler");
    CHECK(!conforms(schema, no_euler));

    json bad_field = doc;
    bad_field["field"] = "Z";
    CHECK(!conforms(schema, bad_field));

    json bad_dim = doc;
    bad_dim["homology"][0]["dim"] = -2;
    CHECK(!conforms(schema, bad_dim));

    json bad_pairing = doc;
    bad_pairing["pairing"] = "ac";
    CHECK(!conforms(schema, bad_pairing));

    json bad_k = doc;
    bad_k["homology"][0].erase("k");
    CHECK(!conforms(schema, bad_k));
  }
}
