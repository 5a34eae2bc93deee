#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "divclass/cli/app.hpp"

using namespace divclass;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args,
        const cli::ReportBuilder& build = [](int s) { return pipeline::build_report(s); }) {
  args.insert(args.begin(), "divclass");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err, build);
  return {code, out.str(), err.str()};
}

nlohmann::json read_golden(const std::string& name) {
  std::ifstream in(std::string(DIVCLASS_GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  return nlohmann::json::parse(in);
}

}  // namespace

TEST_CASE("class prints the genus-6 coefficients") {
  const Run r = run({"class", "--s", "2"});
  REQUIRE(r.code == 0);
  for (const char* needle : {"lambda    62", "psi       4", "delta_0   -8", "delta_1   -30",
                             "delta_2   -52", "delta_3   -60", "delta_4   -54", "delta_5   -34"}) {
    INFO(needle);
    REQUIRE(r.out.find(needle) != std::string::npos);
  }
}

TEST_CASE("class for s = 1") {
  const Run r = run({"class", "--s", "1", "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  const auto& cls = j["outputs"]["class"];
  REQUIRE(cls["lambda"] == "9");
  REQUIRE(cls["psi"] == "0");
  REQUIRE(cls["delta"] == nlohmann::json::array({"-1", "-3", "-3"}));
}

TEST_CASE("class marks unknown interior coefficients") {
  const Run r = run({"class", "--s", "3", "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  const auto& deltas = j["outputs"]["class"]["delta"];
  REQUIRE(deltas.size() == 9);
  for (std::size_t i = 2; i <= 7; ++i) REQUIRE(deltas[i].is_null());
  REQUIRE(deltas[0].is_string());
  REQUIRE(deltas[8].is_string());
  REQUIRE(run({"class", "--s", "3"}).out.find("delta_4   unknown") != std::string::npos);
}

TEST_CASE("class --show-steps includes intermediate classes") {
  const Run r = run({"class", "--s", "2", "--show-steps"});
  REQUIRE(r.code == 0);
  REQUIRE(r.out.find("c2(M) = ") != std::string::npos);
  REQUIRE(r.out.find("2*gamma14^1*gamma24^1") != std::string::npos);
  const auto j = nlohmann::json::parse(run({"class", "--s", "2", "--json", "--show-steps"}).out);
  REQUIRE(j["outputs"]["steps"]["[Y] degree"] == "0");
}

TEST_CASE("class --s 2 --json matches the golden file") {
  const Run r = run({"class", "--s", "2", "--json"});
  REQUIRE(r.code == 0);
  REQUIRE(nlohmann::json::parse(r.out) == read_golden("class_s2.json"));
}

TEST_CASE("rationals in reports are in lowest terms") {
  const auto j = nlohmann::json::parse(run({"class", "--s", "4", "--json"}).out);
  const std::string lambda = j["outputs"]["class"]["lambda"];
  REQUIRE(lambda == to_string(pipeline::closed_forms(4).a));
}

TEST_CASE("verify") {
  const Run one = run({"verify", "--s", "2"});
  REQUIRE(one.code == 0);
  REQUIRE(one.out.find("FAIL") == std::string::npos);
  REQUIRE(one.out.find("PASS  s=2  genus-6 class") != std::string::npos);
  REQUIRE(one.out.find("PASS  exterior oracle h=3") != std::string::npos);

  const Run all = run({"verify", "--all-up-to", "4", "--json"});
  REQUIRE(all.code == 0);
  const auto j = nlohmann::json::parse(all.out);
  REQUIRE(j["outputs"]["pass"] == true);
  REQUIRE(j["outputs"]["reports"].size() == 4);
  for (int s = 1; s <= 4; ++s) REQUIRE(j["outputs"]["reports"][s - 1]["s"] == s);
}

TEST_CASE("verify reports failures with exit code 1") {
  const auto tampered = [](int s) {
    pipeline::PipelineReport r = pipeline::build_report(s);
    r.checks.push_back({"injected", "0", "1", false});
    return r;
  };
  const Run r = run({"verify", "--s", "1"}, tampered);
  REQUIRE(r.code == 1);
  REQUIRE(r.out.find("FAIL  s=1  injected") != std::string::npos);
}

TEST_CASE("counts") {
  REQUIRE(run({"count", "castelnuovo", "--g", "6", "--r", "2", "--d", "6"}).out == "5\n");
  REQUIRE(run({"count", "castelnuovo", "--g", "9", "--r", "2", "--d", "8"}).out == "42\n");
  REQUIRE(run({"count", "plucker", "--g", "6", "--d", "6"}).out == "4\n");
  const Run ram = run({"count", "ramified", "--g", "4", "--r", "2", "--d", "5", "--alpha", "0,0,1"});
  REQUIRE(ram.code == 0);
  REQUIRE(ram.out == "3\n");
  REQUIRE(ram.err.empty());

  const Run warn = run({"count", "ramified", "--g", "6", "--r", "2", "--d", "6", "--alpha", "0,0,1"});
  REQUIRE(warn.code == 0);
  REQUIRE(warn.err.find("warning") != std::string::npos);

  const auto j = nlohmann::json::parse(
      run({"count", "castelnuovo", "--g", "6", "--r", "2", "--d", "6", "--json"}).out);
  REQUIRE(j["outputs"]["value"] == "5");
}

TEST_CASE("invalid input exits with code 2") {
  REQUIRE(run({"class", "--s", "0"}).code == 2);
  REQUIRE(run({"class", "--s", "-3"}).code == 2);
  REQUIRE(run({"class"}).code == 2);
  REQUIRE(run({"class", "--s", "two"}).code == 2);
  REQUIRE(run({"verify", "--s", "0"}).code == 2);
  REQUIRE(run({"verify"}).code == 2);
  REQUIRE(run({"verify", "--s", "1", "--all-up-to", "2"}).code == 2);
  REQUIRE(run({"frobnicate"}).code == 2);
  REQUIRE(run({}).code == 2);
  REQUIRE(run({"count", "ramified", "--g", "4", "--r", "2", "--d", "5", "--alpha", "0,x,1"}).code == 2);
  REQUIRE(run({"count", "ramified", "--g", "4", "--r", "2", "--d", "5", "--alpha", "1,0,0"}).code == 2);
  REQUIRE(run({"count", "ramified", "--g", "4", "--r", "2", "--d", "5", "--alpha", "0,1"}).code == 2);
  REQUIRE(run({"count", "castelnuovo", "--g", "-1", "--r", "2", "--d", "6"}).code == 2);
}

TEST_CASE("help exits with code 0") {
  const Run r = run({"--help"});
  REQUIRE(r.code == 0);
  REQUIRE(r.out.find("class") != std::string::npos);
}
