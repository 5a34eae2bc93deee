#pragma once

// Command-line front end: `class`, `verify` and `count`. Exit codes are 0 on
// success, 1 when a verification check fails and 2 on invalid input.

#include <cstddef>
#include <exception>
#include <functional>
#include <future>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "divclass/bn/combinatorics.hpp"
#include "divclass/error.hpp"
#include "divclass/pipeline/report.hpp"
#include "divclass/rational.hpp"

namespace divclass::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerification = 1;
inline constexpr int kExitInput = 2;

inline Json check_json(const pipeline::Check& c) {
  return {{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}};
}

inline Json class_json(const pipeline::DivisorClass& dc) {
  Json deltas = Json::array();
  for (const auto& x : dc.deltas) deltas.push_back(x ? Json(to_string(*x)) : Json(nullptr));
  return {{"genus", dc.genus},
          {"lambda", to_string(dc.lambda)},
          {"psi", to_string(dc.psi)},
          {"delta", deltas}};
}

inline Json report_json(const pipeline::PipelineReport& r) {
  Json out;
  out["s"] = r.s;
  out["g"] = r.numerics.g;
  out["d"] = r.numerics.d;
  out["N"] = to_string(r.numerics.N);
  out["class"] = r.divisor ? class_json(*r.divisor) : Json(nullptr);
  if (r.steps) {
    Json steps = Json::object();
    for (const auto& [name, text] : r.steps->entries) steps[name] = text;
    out["steps"] = steps;
  }
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(check_json(c));
  out["checks"] = checks;
  return out;
}

inline void print_class_table(std::ostream& out, const pipeline::PipelineReport& r) {
  out << "s = " << r.s << ", g = " << r.numerics.g << ", d = " << r.numerics.d
      << ", N = " << to_string(r.numerics.N) << "\n";
  if (!r.divisor) {
    out << "class unavailable\n";
    return;
  }
  auto row = [&](const std::string& name, const std::string& value) {
    out << "  " << std::left << std::setw(10) << name << value << "\n";
  };
  row("lambda", to_string(r.divisor->lambda));
  row("psi", to_string(r.divisor->psi));
  for (std::size_t i = 0; i < r.divisor->deltas.size(); ++i) {
    const auto& x = r.divisor->deltas[i];
    row("delta_" + std::to_string(i), x ? to_string(*x) : "unknown");
  }
}

inline void print_checks(std::ostream& out, const std::string& prefix,
                         const std::vector<pipeline::Check>& checks) {
  for (const auto& c : checks) {
    out << (c.pass ? "PASS  " : "FAIL  ") << prefix << c.name;
    if (!c.pass) out << "\n      expected: " << c.expected << "\n      actual:   " << c.actual;
    out << "\n";
  }
}

inline std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw InputError("malformed integer list: " + text);
    }
    if (used != item.size()) throw InputError("malformed integer list: " + text);
    out.push_back(value);
  }
  if (out.empty()) throw InputError("empty integer list");
  return out;
}

struct Options {
  int s = 0;
  bool json = false;
  bool show_steps = false;
  std::optional<int> verify_s;
  std::optional<int> all_up_to;
  int g = 0;
  int r = 0;
  int d = 0;
  std::string alpha;
};

inline int cmd_class(const Options& o, std::ostream& out) {
  if (o.s < 1) throw InputError("--s must be >= 1");
  const pipeline::PipelineReport r = pipeline::build_report(o.s, o.show_steps);
  if (o.json) {
    Json j;
    j["command"] = "class";
    j["inputs"] = {{"s", o.s}, {"show_steps", o.show_steps}};
    j["outputs"] = report_json(r);
    out << j.dump(2) << "\n";
  } else {
    print_class_table(out, r);
    if (r.steps) {
      out << "steps:\n";
      for (const auto& [name, text] : r.steps->entries) out << "  " << name << " = " << text << "\n";
    }
    if (!r.passed()) print_checks(out, "", r.failures());
  }
  return r.passed() ? kExitOk : kExitVerification;
}

using ReportBuilder = std::function<pipeline::PipelineReport(int)>;
using GlobalChecks = std::function<std::vector<pipeline::Check>()>;

inline int cmd_verify(const Options& o, std::ostream& out,
                      const ReportBuilder& build = [](int s) { return pipeline::build_report(s); },
                      const GlobalChecks& shared_checks = pipeline::global_checks) {
  std::vector<int> values;
  if (o.verify_s) {
    if (*o.verify_s < 1) throw InputError("--s must be >= 1");
    values.push_back(*o.verify_s);
  } else if (o.all_up_to) {
    if (*o.all_up_to < 1) throw InputError("--all-up-to must be >= 1");
    for (int s = 1; s <= *o.all_up_to; ++s) values.push_back(s);
  } else {
    throw InputError("verify needs --s or --all-up-to");
  }

  std::vector<std::future<pipeline::PipelineReport>> jobs;
  for (int s : values) {
    jobs.push_back(std::async(std::launch::async, build, s));
  }
  auto global = std::async(std::launch::async, shared_checks);

  std::vector<pipeline::PipelineReport> reports;
  for (auto& job : jobs) reports.push_back(job.get());
  const std::vector<pipeline::Check> shared = global.get();

  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed();
  for (const auto& c : shared) ok = ok && c.pass;

  if (o.json) {
    Json j;
    j["command"] = "verify";
    j["inputs"] = o.verify_s ? Json{{"s", *o.verify_s}} : Json{{"all_up_to", *o.all_up_to}};
    Json per_s = Json::array();
    for (const auto& r : reports) per_s.push_back(report_json(r));
    Json global_json = Json::array();
    for (const auto& c : shared) global_json.push_back(check_json(c));
    j["outputs"] = {{"reports", per_s}, {"global_checks", global_json}, {"pass", ok}};
    out << j.dump(2) << "\n";
  } else {
    for (const auto& r : reports) print_checks(out, "s=" + std::to_string(r.s) + "  ", r.checks);
    print_checks(out, "", shared);
    out << (ok ? "all checks passed" : "some checks failed") << "\n";
  }
  return ok ? kExitOk : kExitVerification;
}

inline void emit_count(std::ostream& out, bool json, const std::string& what, Json inputs,
                       const Rational& value) {
  if (json) {
    Json j;
    j["command"] = "count " + what;
    j["inputs"] = std::move(inputs);
    j["outputs"] = {{"value", to_string(value)}};
    out << j.dump(2) << "\n";
  } else {
    out << to_string(value) << "\n";
  }
}

inline void warn_rho(std::ostream& err, int rho) {
  if (rho != 0) {
    err << "warning: adjusted Brill-Noether number is " << rho
        << ", the count is only meaningful when it is 0\n";
  }
}

/// Entry point shared by the executable and the tests. `build` produces the
/// per-s reports for `verify`.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
                   const ReportBuilder& build = [](int s) { return pipeline::build_report(s); }) {
  CLI::App app{"Divisor classes from nets with a ramified point"};
  app.name("divclass");
  app.require_subcommand(1);
  Options o;

  auto* cls = app.add_subcommand("class", "print the divisor class for g = 3s, d = 2s + 2");
  cls->add_option("--s", o.s, "parameter s >= 1")->required();
  cls->add_flag("--json", o.json, "emit a JSON report");
  cls->add_flag("--show-steps", o.show_steps, "include the intermediate classes");

  auto* verify = app.add_subcommand("verify", "run every consistency check");
  auto* vs = verify->add_option("--s", o.verify_s, "single value of s");
  auto* vall = verify->add_option("--all-up-to", o.all_up_to, "every s from 1 to K");
  vs->excludes(vall);
  verify->add_flag("--json", o.json, "emit a JSON report");

  auto* count = app.add_subcommand("count", "Brill-Noether counts");
  count->require_subcommand(1);
  auto* cast = count->add_subcommand("castelnuovo", "number of g^r_d when rho = 0");
  auto* ram = count->add_subcommand("ramified", "number of g^r_d with prescribed ramification");
  auto* plu = count->add_subcommand("plucker", "double points of a plane model");
  for (auto* sub : {cast, ram, plu}) {
    sub->add_option("--g", o.g, "genus")->required();
    sub->add_option("--d", o.d, "degree")->required();
    sub->add_flag("--json", o.json, "emit a JSON report");
  }
  cast->add_option("--r", o.r, "dimension")->required();
  ram->add_option("--r", o.r, "dimension")->required();
  ram->add_option("--alpha", o.alpha, "ramification sequence, comma separated")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*cls) return cmd_class(o, out);
    if (*verify) return cmd_verify(o, out, build);
    if (*cast) {
      warn_rho(err, bn::rho(o.g, o.r, o.d));
      emit_count(out, o.json, "castelnuovo", {{"g", o.g}, {"r", o.r}, {"d", o.d}},
                 bn::castelnuovo(o.g, o.r, o.d));
      return kExitOk;
    }
    if (*ram) {
      const bn::RamificationSeq alpha(parse_int_list(o.alpha));
      warn_rho(err, bn::rho(bn::BNProblem(o.g, o.r, o.d, {alpha})));
      emit_count(out, o.json, "ramified",
                 {{"g", o.g}, {"r", o.r}, {"d", o.d}, {"alpha", alpha.alphas()}},
                 bn::count_ramified(o.g, o.r, o.d, alpha));
      return kExitOk;
    }
    if (*plu) {
      if (o.g < 0 || o.d < 1) throw InputError("plucker needs g >= 0 and d >= 1");
      emit_count(out, o.json, "plucker", {{"g", o.g}, {"d", o.d}},
                 bn::plucker_double_points(o.g, o.d));
      return kExitOk;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitInput;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << "\n";
    return kExitVerification;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitVerification;
  }
  return kExitInput;
}

}  // namespace divclass::cli
