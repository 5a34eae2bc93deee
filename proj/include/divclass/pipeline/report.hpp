#pragma once

// Non-throwing summary of one run of the pipeline: the class, the
// intermediate classes in text form and every consistency check.

#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "divclass/error.hpp"
#include "divclass/pipeline/coefficients.hpp"
#include "divclass/pipeline/delta_oracle.hpp"
#include "divclass/pipeline/divisor.hpp"
#include "divclass/pipeline/span.hpp"
#include "divclass/pipeline/y_locus.hpp"
#include "divclass/rational.hpp"

namespace divclass::pipeline {

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

/// Intermediate classes in canonical text form.
struct ReportSteps {
  std::vector<std::pair<std::string, std::string>> entries;
};

struct PipelineReport {
  int s = 0;
  Numerics numerics;
  std::optional<DivisorClass> divisor;
  std::optional<ReportSteps> steps;
  std::vector<Check> checks;

  bool passed() const {
    for (const auto& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }

  std::vector<Check> failures() const {
    std::vector<Check> out;
    for (const auto& c : checks) {
      if (!c.pass) out.push_back(c);
    }
    return out;
  }
};

namespace detail {

inline Check rational_check(std::string name, const Rational& expected, const Rational& actual) {
  return {std::move(name), to_string(expected), to_string(actual), expected == actual};
}

// Runs `body`, turning an exception into a failed check named `name`.
inline void guarded(std::vector<Check>& out, const std::string& name,
                    const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    out.push_back({name, "no error", e.what(), false});
  }
}

inline std::string join_coordinates(const std::vector<Rational>& v) {
  std::string out;
  for (const auto& x : v) out += (out.empty() ? "" : " ") + to_string(x);
  return out;
}

}  // namespace detail

/// Expected class for g = 6 in (lambda, psi, delta_0..delta_5).
inline std::vector<Rational> genus6_reference_class() {
  return {62, 4, -8, -30, -52, -60, -54, -34};
}

/// Runs every check that depends on s. Throws InputError only for s < 1.
inline PipelineReport build_report(int s, bool with_steps = false) {
  PipelineReport report;
  report.s = s;
  report.numerics = Numerics::of(s);
  const int g = report.numerics.g;
  auto& checks = report.checks;
  const ClosedForms cf = closed_forms(s);

  std::optional<IrreducibleTriple> irr;
  detail::guarded(checks, "irreducible part", [&] {
    irr = irreducible_part(s);
    checks.push_back(detail::rational_check("a closed form", cf.a, irr->lambda));
    checks.push_back(detail::rational_check("c closed form", cf.c, irr->psi));
    checks.push_back(detail::rational_check("b0 closed form", cf.b0, -irr->delta0));
  });

  detail::guarded(checks, "c three ways", [&] {
    const Rational moving = c_from_moving_point(s);
    const Rational reduced = irr ? irr->psi : Rational(0);
    checks.push_back({"c three ways", to_string(cf.c),
                      "moving point " + to_string(moving) + ", reduction " + to_string(reduced),
                      irr.has_value() && moving == cf.c && reduced == cf.c});
  });

  std::optional<Rational> y_degree;
  detail::guarded(checks, "[Y] pipeline", [&] {
    const YLocusSteps steps = compute_y_locus(s);
    for (const auto& cmp : compare_with_reference(steps)) {
      checks.push_back({cmp.name + " golden", ring::to_string(cmp.expected),
                        ring::to_string(cmp.actual), !cmp.difference.has_value()});
    }
    checks.push_back(detail::rational_check("[Y] degree", y_locus_closed_form(s), steps.degree));
    y_degree = steps.degree;
    if (with_steps) {
      ReportSteps out;
      out.entries = {
          {"divisor", ring::to_string(steps.divisor)},
          {"ch(L)", ring::to_string(steps.line_character)},
          {"ch(M)", ring::to_string(steps.ch_m)},
          {"c1(M)", ring::to_string(steps.c_m.part(1))},
          {"c2(M)", ring::to_string(steps.c_m.part(2))},
          {"c3(M)", ring::to_string(steps.c_m.part(3))},
          {"e1", ring::to_string(steps.e.e1)},
          {"e2", ring::to_string(steps.e.e2)},
          {"e3", ring::to_string(steps.e.e3)},
          {"[Y] bracket", ring::to_string(steps.bracket)},
          {"[Y] degree", to_string(steps.degree)},
      };
      report.steps = std::move(out);
    }
  });

  if (y_degree && irr) {
    const Rational b1 = b1_from_test_curve(elliptic_tail_count(s), *y_degree, g);
    const Rational b_last = irr->psi + b1;
    checks.push_back(detail::rational_check("b1 closed form", cf.b1, b1));
    checks.push_back(detail::rational_check("b_{g-1} closed form", cf.b_last, b_last));
    checks.push_back(detail::rational_check("pencil relation a - 12 b0 + b_{g-1}", 0,
                                            irr->lambda + 12 * irr->delta0 + b_last));
  }
  checks.push_back(detail::rational_check("elliptic-tail relation c + b1 - b_{g-1}", 0,
                                          cf.c + cf.b1 - cf.b_last));

  detail::guarded(checks, "full class", [&] { report.divisor = full_class(s); });
  if (s == 2 && report.divisor) {
    checks.push_back({"genus-6 class", detail::join_coordinates(genus6_reference_class()),
                      detail::join_coordinates(report.divisor->coordinates()),
                      report.divisor->coordinates() == genus6_reference_class()});
    detail::guarded(checks, "interior coefficients", [&] {
      const auto interior = interior_coefficients();
      checks.push_back({"interior coefficients -7i^2 + 43i - 6", "52 60 54",
                        detail::join_coordinates({interior.begin(), interior.end()}), true});
    });
  }
  return report;
}

/// Checks that do not depend on s: the span certificate and the exterior
/// algebra oracle for h = 1, 2, 3.
inline std::vector<Check> global_checks() {
  std::vector<Check> out;
  detail::guarded(out, "span check", [&] {
    const SpanCertificate cert = span_check();
    out.push_back({"span check rank", "3", std::to_string(cert.echelon.rank()), cert.independent});
  });
  for (int h = 1; h <= 3; ++h) {
    const std::string name = "exterior oracle h=" + std::to_string(h);
    detail::guarded(out, name, [&] {
      const OracleReport r = run_delta_oracle(h);
      std::string actual = std::to_string(r.products_checked - r.failures.size()) + "/" +
                           std::to_string(r.products_checked) + " products agree";
      for (const auto& f : r.failures) actual += "; " + f;
      out.push_back({name, "all products agree", actual, r.ok()});
    });
  }
  return out;
}

}  // namespace divclass::pipeline
