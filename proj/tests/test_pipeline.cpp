#include <catch2/catch_amalgamated.hpp>

#include "divclass/pipeline/coefficients.hpp"
#include "divclass/pipeline/delta_oracle.hpp"
#include "divclass/pipeline/report.hpp"
#include "divclass/pipeline/span.hpp"
#include "divclass/pipeline/universal_curve.hpp"
#include "divclass/pipeline/y_locus.hpp"

using namespace divclass;
using namespace divclass::pipeline;

namespace {

Rational big_n(int s) {
  // N_{3s,2,2s+2} = (3s)! 2 / ((s)! (s+1)! (s+2)!), by repeated multiplication.
  Integer num = 2;
  for (int k = 2; k <= 3 * s; ++k) num *= k;
  Integer den = 1;
  for (int top : {s, s + 1, s + 2}) {
    for (int k = 2; k <= top; ++k) den *= k;
  }
  return make_rational(num, den);
}

}  // namespace

TEST_CASE("numerics of the family") {
  const std::vector<Rational> expected{1, 5, 42, 462, 6006};
  for (int s = 1; s <= 5; ++s) {
    const Numerics n = Numerics::of(s);
    REQUIRE(n.g == 3 * s);
    REQUIRE(n.d == 2 * s + 2);
    REQUIRE(n.N == expected[static_cast<std::size_t>(s - 1)]);
  }
  for (int s = 1; s <= 10; ++s) REQUIRE(Numerics::of(s).N == big_n(s));
  REQUIRE_THROWS_AS(Numerics::of(0), InputError);
}

TEST_CASE("pushforward classes at genus 6") {
  const PushforwardClasses k = pushforward_classes(2);
  REQUIRE(k.N == 5);
  REQUIRE(k.eta_alpha == IrreducibleTriple{-48, -36, 7});
  REQUIRE(k.eta_gamma == IrreducibleTriple{-22, -9, 3});
  REQUIRE_THROWS_AS(xi(6, 11), InputError);
}

TEST_CASE("universal curve reduction") {
  for (int d : {3, 6, 8, 22}) {
    const UniversalReduction r = universal_curve_reduce(d);
    REQUIRE(r.gamma_coefficient == 1 - d);
    REQUIRE(r.alpha_coefficient == 1);
    REQUIRE(r.psi_coefficient == -1);
  }
}

TEST_CASE("irreducible coefficients") {
  const IrreducibleCoefficients irr = class_irr(2);
  REQUIRE(irr.a == 62);
  REQUIRE(irr.c == 4);
  REQUIRE(irr.b0 == 8);
  const IrreducibleCoefficients one = class_irr(1);
  REQUIRE(one.a == 9);
  REQUIRE(one.c == 0);
  REQUIRE(one.b0 == 1);
  for (int s = 1; s <= 10; ++s) REQUIRE_NOTHROW(class_irr(s));
}

TEST_CASE("degree of Y") {
  REQUIRE(y_locus_degree(1) == 0);
  REQUIRE(y_locus_degree(2) == 0);
  REQUIRE(y_locus_degree(3) == 1848);
  REQUIRE(y_locus_degree(4) == 63360);
  for (int s = 1; s <= 8; ++s) {
    REQUIRE(compute_y_locus(s).degree == make_rational((28 * s + 48) * (s - 2) * (s - 1), s + 3) * big_n(s));
  }
}

TEST_CASE("intermediate classes match the reference expressions") {
  for (int s = 2; s <= 6; ++s) {
    const YLocusSteps steps = compute_y_locus(s);
    for (const auto& cmp : compare_with_reference(steps)) {
      INFO("s = " << s << ", " << cmp.name << ": " << cmp.difference.value_or(""));
      REQUIRE_FALSE(cmp.difference);
    }
  }
}

TEST_CASE("bracket reduces to the genus-6 integers") {
  const YLocusSteps steps = compute_y_locus(2);
  const auto& q = steps.bracket.presentation();
  auto coeff = [&](std::initializer_list<std::pair<std::string_view, int>> w) {
    return steps.bracket.coefficient(q->monomial(w));
  };
  REQUIRE(coeff({{"eta1", 1}, {"eta2", 1}, {"c1", 2}}) == 80);
  REQUIRE(coeff({{"eta1", 1}, {"eta2", 1}, {"c1", 1}, {"theta", 1}}) == -56);
  REQUIRE(coeff({{"eta1", 1}, {"eta2", 1}, {"c2", 1}}) == -56);
  REQUIRE(coeff({{"eta1", 1}, {"eta2", 1}, {"theta", 2}}) == 12);
  // 80 * 11 - 56 * 15 - 56 * 5 + 12 * 20 = 0
  REQUIRE(steps.degree == 0);
}

TEST_CASE("test-curve coefficients") {
  REQUIRE(c_from_moving_point(2) == 4);
  REQUIRE(coeff_c_testcurve(2) == 4);
  REQUIRE(coeff_b1(2) == 30);
  REQUIRE(coeff_bg1(2) == 34);
  REQUIRE(elliptic_tail_count(2) == 240);
  for (int s = 1; s <= 10; ++s) {
    const ClosedForms cf = closed_forms(s);
    REQUIRE(coeff_c_testcurve(s) == cf.c);
    REQUIRE(c_from_moving_point(s) == irreducible_part(s).psi);
    REQUIRE(coeff_b1(s) == cf.b1);
    REQUIRE(coeff_bg1(s) == cf.b_last);
    REQUIRE(cf.c + cf.b1 - cf.b_last == 0);
    REQUIRE(check_pencil_relation(s));
  }
}

TEST_CASE("interior coefficients in genus 6") {
  const auto b = interior_coefficients();
  REQUIRE(b[0] == 52);
  REQUIRE(b[1] == 60);
  REQUIRE(b[2] == 54);
  REQUIRE(interior_interpolation(6, 0, 30, 34) == 30);
  REQUIRE(interior_interpolation(6, 4, 30, 34) == 34);
}

TEST_CASE("full class") {
  const DivisorClass six = full_class(2);
  REQUIRE(six.coordinates() == std::vector<Rational>{62, 4, -8, -30, -52, -60, -54, -34});

  const DivisorClass three = full_class(1);
  REQUIRE(three.coordinates() == std::vector<Rational>{9, 0, -1, -3, -3});

  const DivisorClass nine = full_class(3);
  REQUIRE_FALSE(nine.complete());
  REQUIRE(nine.deltas.size() == 9);
  REQUIRE(nine.deltas[0]);
  REQUIRE(nine.deltas[1]);
  REQUIRE(nine.deltas[8]);
  for (std::size_t i = 2; i <= 7; ++i) REQUIRE_FALSE(nine.deltas[i]);
  REQUIRE_THROWS_AS(nine.coordinates(), InputError);
  REQUIRE(nine.lambda == closed_forms(3).a);
}

TEST_CASE("span check") {
  REQUIRE(pullback_to_pointed_g6(gieseker_petri_class_g6()) ==
          Vector{94, 0, -12, -50, -78, -88, -78, -50});
  const SpanCertificate cert = span_check();
  REQUIRE(cert.independent);
  REQUIRE(cert.echelon.rank() == 3);
  REQUIRE_FALSE(in_span(cert.divisor, {cert.gieseker_petri, cert.weierstrass}));
  REQUIRE(in_span(cert.divisor, {cert.divisor, cert.weierstrass}));
  REQUIRE(matrix_rank({cert.weierstrass, cert.weierstrass}) == 1);
  REQUIRE(matrix_rank({}) == 0);
  REQUIRE_THROWS_AS(row_reduce({{1, 2}, {1}}), InputError);
  REQUIRE_THROWS_AS(pullback_to_pointed_g6({1, 2}), InputError);
}

TEST_CASE("exterior algebra oracle") {
  for (int h = 1; h <= 3; ++h) {
    const OracleReport r = run_delta_oracle(h);
    INFO("h = " << h << (r.failures.empty() ? "" : ", first failure " + r.failures.front()));
    REQUIRE(r.ok());
    REQUIRE(r.products_checked == 210);
    REQUIRE(delta_oracle_check(h));
  }
  REQUIRE_THROWS_AS(delta_oracle_check(0), InputError);
  REQUIRE_THROWS_AS(delta_oracle_check(4), InputError);
}

TEST_CASE("exterior algebra oracle rejects flipped signs") {
  for (auto signs : {ring::SharedSigns{-1, 1, 1}, ring::SharedSigns{1, -1, 1},
                     ring::SharedSigns{1, 1, -1}}) {
    REQUIRE_FALSE(run_delta_oracle(2, signs).ok());
  }
}

TEST_CASE("exterior model basics") {
  const ExteriorModel m(2);
  // delta_1 delta_3 is the point class on a curve; delta_3 delta_1 its negative.
  REQUIRE(m.mul(m.odd(1, 1), m.odd(1, 3)) == m.eta(1));
  ExteriorModel::Element neg;
  ExteriorModel::add_to(neg, m.eta(1), -1);
  REQUIRE(m.mul(m.odd(1, 3), m.odd(1, 1)) == neg);
  REQUIRE(m.mul(m.odd(1, 1), m.odd(1, 2)).empty());
  REQUIRE(m.mul(m.odd(1, 1), m.odd(1, 1)).empty());
  REQUIRE(m.mul(m.eta(2), m.odd(2, 4)).empty());
  REQUIRE_THROWS_AS(m.odd(5, 1), InputError);
  REQUIRE_THROWS_AS(m.odd(1, 5), InputError);
}

TEST_CASE("pipeline report") {
  const PipelineReport r = build_report(2, true);
  std::string failed;
  for (const auto& c : r.failures()) failed += c.name + ": " + c.expected + " vs " + c.actual + "\n";
  INFO(failed);
  REQUIRE(r.passed());
  REQUIRE(r.steps);
  REQUIRE(r.divisor);
  REQUIRE(r.checks.size() >= 15);
  for (const auto& c : global_checks()) {
    INFO(c.name << ": " << c.actual);
    REQUIRE(c.pass);
  }
  REQUIRE_THROWS_AS(build_report(0), InputError);
  for (int s = 1; s <= 10; ++s) REQUIRE(build_report(s).passed());
}
