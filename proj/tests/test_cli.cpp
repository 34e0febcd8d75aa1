#include "hqa/cli.hpp"
#include "oracles.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = hqa::run(args, out, err);
  return {code, out.str(), err.str()};
}

Result run_spec(const std::string& config, std::vector<std::string> args) {
  args.insert(args.begin(), {"--spec", oracle::config(config)});
  return run(std::move(args));
}

std::string write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("hqa_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("describe and eval") {
  const Result d = run_spec("char2.json", {"describe"});
  CHECK(d.code == 0);
  CHECK(contains(d.out, "a = [e(g;1;1)]"));
  const Result dj = run_spec("char3.json", {"--json", "describe"});
  CHECK(dj.code == 0);
  const json j = json::parse(dj.out);
  CHECK(j["group"]["order"] == 3);
  CHECK(j["arrows"].size() == 6);
  CHECK(j["lifting"]["lambda"] == "1");

  CHECK(run_spec("char2.json", {"eval", "a*a"}).out == "0\n");
  CHECK(run_spec("char3.json", {"eval", "b*g", "--ambient", "smash"}).out == "g*b + g*a\n");
  CHECK(run_spec("char3.json", {"eval", "--", "-a"}).out == "2*[e(g;1;1)]\n");
  CHECK(run_spec("char3.json", {"eval", "a", "--ambient", "other"}).code == 2);
}

TEST_CASE("nichols and relations reports agree between text and JSON") {
  const Result text = run_spec("char2.json", {"nichols", "--max-degree", "8"});
  const Result js = run_spec("char2.json", {"--json", "nichols", "--max-degree", "8"});
  CHECK(text.code == 0);
  CHECK(contains(text.out, "dims: 1 2 3 4 3 2 1 0 0\ntotal: 16\n"));
  const json j = json::parse(js.out);
  CHECK(j["dims"] == json::array({1, 2, 3, 4, 3, 2, 1, 0, 0}));
  CHECK(j["total"] == 16);
  CHECK(j["basis"][6][0] == "a*b*a*b^3");

  const Result rel = run_spec("char2.json", {"relations", "--max-degree", "6"});
  const json rj = json::parse(run_spec("char2.json", {"--json", "relations", "--max-degree", "6"}).out);
  CHECK(rel.code == 0);
  CHECK(rj["relations"] == json::array({"a^2", "b^2*a + a*b^2 + a*b*a", "b*a*b*a + a*b*a*b", "b^4"}));
  for (const auto& r : rj["relations"])
    CHECK(contains(rel.out, "  " + r.get<std::string>() + "\n"));
  for (const auto& d : rj["degrees"])
    CHECK(contains(rel.out, "degree " + std::to_string(d["degree"].get<int>()) + ": kernel " +
                                std::to_string(d["kernel_dim"].get<int>()) + ", ideal " +
                                std::to_string(d["ideal_dim"].get<int>())));
}

TEST_CASE("skew scan report") {
  const json j = json::parse(run_spec("char3.json", {"--json", "skew", "--max-degree", "4"}).out);
  REQUIRE(j["degrees"].size() == 4);
  CHECK(j["degrees"][0]["spaces"].size() == 3);
  CHECK(j["degrees"][0]["spaces"][0]["u"] == "1");
  CHECK(j["degrees"][0]["spaces"][0]["v"] == "g");
  CHECK(j["degrees"][0]["spaces"][0]["solutions"][0]["element"] == "a");
  for (std::size_t d = 1; d < 4; ++d)
    CHECK(j["degrees"][d]["spaces"].empty());
}

TEST_CASE("check-hopf-ideal exit codes and witnesses") {
  const Result pass = run_spec("char2.json", {"check-hopf-ideal", "--relators", oracle::config("relators/char2.txt"),
                                              "--max-degree", "5", "--with-antipode"});
  CHECK(pass.code == 0);
  CHECK(contains(pass.out, "PASS"));

  const Result fail = run_spec("char3.json", {"check-hopf-ideal", "--relators",
                                              oracle::config("relators/char3_negative.txt"), "--max-degree", "4"});
  CHECK(fail.code == 1);
  CHECK(contains(fail.out, "witness: g*a ⊗ a"));
  const json fj = json::parse(run_spec("char3.json", {"--json", "check-hopf-ideal", "--relators",
                                                      oracle::config("relators/char3_negative.txt"), "--max-degree",
                                                      "4"})
                                  .out);
  CHECK(fj["pass"] == false);
  CHECK(fj["relators"][0]["witness"] == "g*a ⊗ a");

  for (const char* lambda : {"0", "1", "2"}) {
    const json lj = json::parse(run_spec("char3.json", {"--json", "check-hopf-ideal", "--relators",
                                                        oracle::config("relators/char3_lifting.txt"), "--max-degree",
                                                        "6", "--lambda", lambda, "--mu", "2"})
                                    .out);
    CHECK(lj["pass"] == true);
    CHECK(lj["quotient_dim"] == 27);
  }

  const Result filtered = run_spec("char3.json", {"check-hopf-ideal", "--relators",
                                                  oracle::config("relators/char3_lifting.txt"), "--max-degree", "6",
                                                  "--strategy", "filtered"});
  CHECK(filtered.code == 0);
  CHECK(contains(filtered.out, "strategy: filtered"));
}

TEST_CASE("identities and selfcheck") {
  const Result ok = run_spec("char5.json", {"identities", "--r", "3", "--l", "3"});
  CHECK(ok.code == 0);
  CHECK(contains(ok.out, "identity instances hold"));
  CHECK(run_spec("char2.json", {"identities", "--r", "1", "--l", "1"}).code == 2);

  const Result a = run_spec("char3.json", {"--seed", "5", "--json", "selfcheck", "--degree", "3", "--samples", "20"});
  const Result b = run_spec("char3.json", {"--seed", "5", "--json", "selfcheck", "--degree", "3", "--samples", "20"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const json j = json::parse(a.out);
  CHECK(j["pass"] == true);
  CHECK(j["results"].size() == 6);
}

TEST_CASE("input errors exit with code 2") {
  CHECK(run({"describe"}).code == 2);
  CHECK(run({"--spec", oracle::config("char2.json")}).code == 2);
  CHECK(run({"--spec", oracle::config("char2.json"), "frobnicate"}).code == 2);
  CHECK(run({"--spec", "/nonexistent/spec.json", "describe"}).code == 2);
  CHECK(run_spec("char2.json", {"nichols"}).code == 2);
  CHECK(run_spec("char2.json", {"eval", "a b"}).code == 2);
  CHECK(run_spec("char2.json", {"eval", "1/2*a^2"}).code == 2);
  CHECK(run_spec("char2.json", {"check-hopf-ideal", "--relators", "/nonexistent", "--max-degree", "3"}).code == 2);
  CHECK(run_spec("char2.json", {"check-hopf-ideal", "--relators", oracle::config("relators/char2.txt"),
                                "--max-degree", "2"})
            .code == 2);

  const std::string bad_line = write_temp("bad.txt", "a^2\nb*\n");
  const Result line = run_spec("char2.json", {"check-hopf-ideal", "--relators", bad_line, "--max-degree", "4"});
  CHECK(line.code == 2);
  CHECK(contains(line.err, bad_line + ":2:"));

  const Result not_prime = run({"--spec", write_temp("p4.json", oracle::jordan_spec(4, 3)), "describe"});
  CHECK(not_prime.code == 2);
  CHECK(contains(not_prime.err, "$.field.characteristic"));
  CHECK(contains(not_prime.err, "prime"));

  const Result closure = run({"--spec", write_temp("n4.json", oracle::jordan_spec(3, 4)), "describe"});
  CHECK(closure.code == 2);
  CHECK(contains(closure.err, "closure inconsistency"));

  const Result js = run({"--json", "--spec", write_temp("broken.json", "{"), "describe"});
  CHECK(js.code == 2);
  CHECK(json::parse(js.out).contains("error"));

  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("spec validation reports paths") {
  using hqa::SpecError;
  auto errors = [](const std::string& text) {
    try {
      hqa::parse_spec(text);
    } catch (const SpecError& e) {
      return e.errors();
    }
    return std::vector<std::string>{};
  };
  auto has = [](const std::vector<std::string>& errs, const std::string& needle) {
    return std::any_of(errs.begin(), errs.end(), [&](const std::string& e) { return contains(e, needle); });
  };
  CHECK(errors(oracle::jordan_spec(3, 3)).empty());
  CHECK(has(errors(oracle::jordan_spec(3, 3, R"(, "distinguished": "h")")), "$.distinguished"));
  CHECK(has(errors(R"({"field": {"characteristic": 3}, "group": {"cyclic": 3},
                       "module": {"dim": 2, "generators": [{"element": "g", "matrix": [[1, 0]]}]}})"),
            "$.module.generators[0].matrix"));
  CHECK(has(errors(oracle::jordan_spec(3, 3, R"(, "lifting": {"kappa": 1})")), "$.lifting.kappa"));
  CHECK(has(errors(R"({"field": {"characteristic": 3}, "group": {"cyclic": 3},
                       "module": {"dim": 1, "generators": [{"element": "g", "matrix": [[1]]}]},
                       "generators": [{"name": "g", "basis": 0}]})"),
            "reserved"));
  CHECK(has(errors(R"({"field": {"characteristic": 2}, "group": {"table": [[0, 1], [1, 1]], "labels": ["e", "s"]},
                       "distinguished": "s", "module": {"dim": 1}})"),
            "$.group.table"));

  const hqa::SpecFile table = hqa::parse_spec(
      R"({"field": {"characteristic": 3}, "group": {"table": [["e", "s"], ["s", "e"]], "labels": ["e", "s"]},
          "distinguished": "s", "module": {"dim": 1, "basis": ["m"],
          "generators": [{"element": "s", "matrix": [[-1]]}]}})");
  CHECK(!table.cyclic);
  CHECK(table.generators.names() == std::vector<std::string>{"m"});
  CHECK(hqa::generate(table.generators, 3).dims() == std::vector<std::size_t>{1, 1, 0, 0});
}
