#pragma once

// Degree of the locus Y of triples (x, y, l) on C x C x W^2_d(C) where
// H^0(l) -> H^0(l restricted to x + 2y) has rank <= 1, C general of genus g-1.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "divclass/chern/chern.hpp"
#include "divclass/error.hpp"
#include "divclass/pipeline/reference.hpp"
#include "divclass/pipeline/divisor.hpp"
#include "divclass/rational.hpp"
#include "divclass/ring/curve_product.hpp"
#include "divclass/ring/element.hpp"

namespace divclass::pipeline {

struct YLocusSteps {
  Numerics numerics;
  RingElement divisor;         // class of the divisor cutting out x + 2y
  RingElement line_character;  // ch(nu^* L)
  RingElement integrand;       // Todd * ch(nu^* L (x) O/I_D)
  RingElement ch_m;            // after integrating out the third factor
  chern::ChernData c_m;
  chern::EClasses e;
  RingElement bracket;  // e2^2 - e1 e3
  Rational degree;
};

inline YLocusSteps compute_y_locus(int s) {
  const Numerics n = Numerics::of(s);
  const ring::PresentationPtr p = ring::standard_presentation(s);
  auto gen = [&](std::string_view name, const Rational& c = 1) {
    return RingElement::generator(p, name, c);
  };
  const RingElement one = RingElement::constant(p, 1);

  // Delta_13 + 2 Delta_23 with diagonal classes Delta_ij = eta_i + eta_j + gamma_ij.
  RingElement divisor = gen("eta1") + gen("gamma13") + gen("eta3") + gen("eta2", 2) +
                        gen("gamma23", 2) + gen("eta3", 2);
  RingElement line_character =
      one + gen("eta3", n.d) + gen("gamma34") - gen("eta3") * gen("theta");
  const RingElement todd = one + gen("eta3", 2 - n.g);
  RingElement integrand = todd * line_character * (one - ring::exp_neg(divisor));

  RingElement ch_m = ring::fiber_integrate_3(integrand);
  const ring::PresentationPtr& q = ch_m.presentation();

  chern::ChernData c_m = chern::character_to_chern(chern::ChernData::character_from(ch_m, 3), 3);
  const chern::ChernData c_e = chern::ChernData::total(
      3, q,
      {RingElement::generator(q, "c1"), RingElement::generator(q, "c2"),
       RingElement::generator(q, "c3")});
  chern::EClasses e = chern::porteous_e_classes(c_e, c_m);
  RingElement bracket = chern::porteous_det_2x2(e);
  Rational degree = ring::top_evaluate(bracket, s);

  return {n,
          std::move(divisor),
          std::move(line_character),
          std::move(integrand),
          std::move(ch_m),
          std::move(c_m),
          std::move(e),
          std::move(bracket),
          std::move(degree)};
}

inline Rational y_locus_closed_form(int s) {
  const Numerics n = Numerics::of(s);
  return make_rational((28 * s + 48) * (s - 2) * (s - 1), s + 3) * n.N;
}

/// Comparison of one intermediate class against its reference expression.
struct StepComparison {
  std::string name;
  RingElement expected;
  RingElement actual;
  std::optional<std::string> difference;
};

inline std::vector<StepComparison> compare_with_reference(const YLocusSteps& steps) {
  const ring::PresentationPtr& q = steps.ch_m.presentation();
  const int g = steps.numerics.g;
  const int d = steps.numerics.d;
  std::vector<StepComparison> out;
  auto add = [&](std::string name, RingElement expected, const RingElement& actual) {
    auto diff = ring::first_difference(expected, actual);
    out.push_back({std::move(name), std::move(expected), actual, std::move(diff)});
  };
  add("ch(M)", reference::chern_character_m(q, g, d), steps.ch_m);
  add("c1(M)", reference::c1_m(q, g, d), steps.c_m.part(1));
  add("c2(M)", reference::c2_m(q, g, d), steps.c_m.part(2));
  add("c3(M)", reference::c3_m(q, g, d), steps.c_m.part(3));
  add("[Y] bracket", reference::y_bracket(q, g, d), steps.bracket);
  return out;
}

/// Full symbolic pipeline; throws on the first intermediate that departs
/// from its reference expression or a final value off the closed form.
inline Rational y_locus_degree(int s) {
  const YLocusSteps steps = compute_y_locus(s);
  for (const auto& cmp : compare_with_reference(steps)) {
    if (cmp.difference) {
      throw VerificationError(cmp.name + " differs at " + *cmp.difference);
    }
  }
  const Rational expected = y_locus_closed_form(s);
  if (steps.degree != expected) {
    throw VerificationError("[Y] degree " + to_string(steps.degree) + " != closed form " +
                            to_string(expected));
  }
  return steps.degree;
}

/// Pairs (y, l_C) with vanishing at y at least (0, 2, 4), in aggregate.
inline Rational elliptic_tail_count(int s) {
  const Numerics n = Numerics::of(s);
  return make_rational(24 * (2 * s * s + 3 * s - 4), s + 3) * n.N;
}

}  // namespace divclass::pipeline
