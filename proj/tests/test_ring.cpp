#include <catch2/catch_amalgamated.hpp>

#include "divclass/ring/curve_product.hpp"
#include "divclass/ring/element.hpp"

using namespace divclass;
using ring::RingElement;

namespace {

RingElement gen(const ring::PresentationPtr& p, std::string_view name, const Rational& c = 1) {
  return RingElement::generator(p, name, c);
}

// Q[x, y] / (x^2 = y), y of degree 2, truncated at degree 3.
ring::PresentationPtr small_ring() {
  ring::PresentationBuilder b;
  const auto f = b.add_factor("F", std::nullopt);
  b.add_generator("x", 1, {{f, 1}});
  b.add_generator("y", 2, {{f, 2}});
  ring::Terms rhs;
  ring::accumulate(rhs, b.monomial({{"y", 1}}), 1);
  b.add_rule(b.monomial({{"x", 2}}), rhs);
  return b.build(3);
}

}  // namespace

TEST_CASE("monomials merge and order entries") {
  const ring::Monomial m({{2, 1}, {0, 3}, {2, 2}, {1, 0}});
  REQUIRE(m.entries() == std::vector<ring::Monomial::Entry>{{0, 3}, {2, 3}});
  REQUIRE(m.divisible_by(ring::Monomial::of(2, 2)));
  REQUIRE_FALSE(m.divisible_by(ring::Monomial::of(1)));
  REQUIRE(m.divided_by(ring::Monomial::of(0, 3)) == ring::Monomial::of(2, 3));
  REQUIRE_THROWS_AS(m.divided_by(ring::Monomial::of(1)), InternalError);
  REQUIRE_THROWS_AS(ring::Monomial({{0, -1}}), InputError);
}

TEST_CASE("builder rejects malformed presentations") {
  ring::PresentationBuilder b;
  const auto f = b.add_factor("F", 2);
  b.add_generator("x", 1, {{f, 2}});
  ring::Terms rhs;
  ring::accumulate(rhs, b.monomial({{"x", 1}}), 1);
  // degree 2 rewritten to degree 1
  b.add_rule(b.monomial({{"x", 2}}), rhs);
  REQUIRE_THROWS_AS(b.build(4), InputError);

  ring::PresentationBuilder dup;
  const auto g = dup.add_factor("F", 2);
  dup.add_generator("x", 1, {{g, 2}});
  dup.add_generator("x", 1, {{g, 2}});
  REQUIRE_THROWS_AS(dup.build(4), InputError);
}

TEST_CASE("normal form applies rules and truncation") {
  const auto p = small_ring();
  const RingElement x = gen(p, "x");
  REQUIRE(x * x == gen(p, "y"));
  REQUIRE(x * x * x == x * gen(p, "y"));
  REQUIRE((x * x * x * x).is_zero());  // degree 4 > top degree 3
  REQUIRE(ring::to_string(x * x + 3 * x - RingElement::constant(p, make_rational(1, 2))) ==
          "-1/2 + 3*x^1 + 1*y^1");
  REQUIRE(ring::to_string(RingElement(p)) == "0");
}

TEST_CASE("unknown generator names are input errors") {
  const auto p = ring::standard_presentation(2);
  REQUIRE_THROWS_AS(p->index("gamma21"), InputError);
  REQUIRE_THROWS_AS(gen(p, "zeta"), InputError);
  REQUIRE_THROWS_AS(ring::gamma_name(2, 1), InputError);
  REQUIRE_THROWS_AS(ring::standard_presentation(0), InputError);
}

TEST_CASE("standard presentation relations") {
  const int s = 2;
  const int h = 3 * s - 1;
  const auto p = ring::standard_presentation(s);
  auto eta = [&](int i) { return gen(p, ring::eta_name(i)); };
  auto gamma = [&](int i, int j) { return gen(p, ring::gamma_name(i, j)); };
  const RingElement theta = gen(p, "theta");

  for (int i = 1; i <= 3; ++i) REQUIRE((eta(i) * eta(i)).is_zero());
  REQUIRE(gamma(1, 2) * gamma(1, 2) == Rational(-2 * h) * eta(1) * eta(2));
  REQUIRE(gamma(2, 3) * gamma(2, 3) == Rational(-2 * h) * eta(2) * eta(3));
  REQUIRE(gamma(1, 4) * gamma(1, 4) == Rational(-2) * eta(1) * theta);
  REQUIRE((eta(1) * gamma(1, 2)).is_zero());
  REQUIRE((eta(2) * gamma(1, 2)).is_zero());
  REQUIRE((eta(3) * gamma(3, 4)).is_zero());
  REQUIRE(gamma(1, 2) * gamma(2, 3) == eta(2) * gamma(1, 3));
  REQUIRE(gamma(1, 2) * gamma(1, 3) == eta(1) * gamma(2, 3));
  REQUIRE(gamma(1, 3) * gamma(2, 3) == eta(3) * gamma(1, 2));
  REQUIRE(gamma(1, 2) * gamma(2, 4) == eta(2) * gamma(1, 4));

  // gamma_14 gamma_24 is a basis monomial
  const RingElement irreducible = gamma(1, 4) * gamma(2, 4);
  REQUIRE(irreducible.terms().size() == 1);
  REQUIRE(irreducible.coefficient(p->monomial({{"gamma14", 1}, {"gamma24", 1}})) == 1);

  // real-degree caps kill a third power of a gamma class
  REQUIRE(ring::power(gamma(1, 2), 3).is_zero());
  REQUIRE(ring::power(gamma(1, 4), 3).is_zero());
  // top degree 4
  REQUIRE((theta * theta * gen(p, "c1") * eta(1) * eta(2)).is_zero());
}

TEST_CASE("element arithmetic and accessors") {
  const auto p = ring::standard_presentation(1);
  const RingElement a = gen(p, "eta1") + gen(p, "theta", 2) + RingElement::constant(p, 5);
  REQUIRE(a.constant_term() == 5);
  REQUIRE(a.part(1) == gen(p, "eta1") + gen(p, "theta", 2));
  REQUIRE_FALSE(a.is_homogeneous(1));
  REQUIRE(a.part(1).homogeneous_degree() == 1);
  REQUIRE(RingElement(p).is_homogeneous(7));
  REQUIRE(a - a == RingElement(p));
  REQUIRE(ring::power(a, 0) == RingElement::constant(p, 1));

  const auto other = ring::standard_presentation(2);
  REQUIRE_THROWS_AS(a + gen(other, "eta1"), InputError);
  // structurally equal presentations compare equal
  REQUIRE(gen(ring::standard_presentation(1), "eta1") == gen(p, "eta1"));
}

TEST_CASE("exp_neg") {
  const auto p = ring::standard_presentation(2);
  const RingElement one = RingElement::constant(p, 1);
  const RingElement d = gen(p, "eta1") + gen(p, "gamma13") + gen(p, "eta3", 3);
  REQUIRE(ring::exp_neg(d) * ring::exp_neg(-d) == one);
  REQUIRE(ring::exp_neg(RingElement(p)) == one);
  REQUIRE_THROWS_AS(ring::exp_neg(one + d), InputError);
  const RingElement x = gen(p, "theta");
  REQUIRE(ring::exp_neg(x) == one - x + make_rational(1, 2) * x * x);
}

TEST_CASE("first_difference names the mismatching monomial") {
  const auto p = ring::standard_presentation(2);
  const RingElement a = gen(p, "eta1", 3);
  REQUIRE_FALSE(ring::first_difference(a, a));
  const auto diff = ring::first_difference(a, gen(p, "eta1", 4));
  REQUIRE(diff);
  REQUIRE(diff->find("eta1^1") != std::string::npos);
  REQUIRE(diff->find("expected 3, got 4") != std::string::npos);
}

TEST_CASE("fiber integration over the third curve") {
  const auto p = ring::standard_presentation(2);
  const RingElement x = gen(p, "eta3") * gen(p, "eta1", 2) + gen(p, "eta3", 5) +
                        gen(p, "gamma13") * gen(p, "gamma23") + gen(p, "eta1");
  const RingElement y = ring::fiber_integrate_3(x);
  const auto& q = y.presentation();
  REQUIRE_FALSE(q->find("eta3"));
  REQUIRE_FALSE(q->find("gamma34"));
  // gamma13 gamma23 = eta3 gamma12
  REQUIRE(y == gen(q, "eta1", 2) + RingElement::constant(q, 5) + gen(q, "gamma12"));
}

TEST_CASE("top evaluation on C x C x W") {
  const int s = 2;
  const auto p = ring::standard_presentation(s)->without_factor(ring::curve_tag(3));
  const RingElement e12 = gen(p, "eta1") * gen(p, "eta2");
  const ring::WIntersections w = ring::w_intersections(s);
  REQUIRE(w.c2 == 5);
  REQUIRE(ring::top_evaluate(e12 * gen(p, "c2"), s) == 5);
  REQUIRE(ring::top_evaluate(e12 * gen(p, "c1") * gen(p, "c1"), s) == 11);
  REQUIRE(ring::top_evaluate(e12 * gen(p, "theta") * gen(p, "theta"), s) == 20);
  REQUIRE(ring::top_evaluate(e12 * gen(p, "theta") * gen(p, "c1"), s) == 15);
  REQUIRE(ring::top_evaluate(e12 * (gen(p, "c1") * gen(p, "c1") - gen(p, "c2", 2)), s) == 1);
  REQUIRE_THROWS_AS(ring::top_evaluate(e12, s), InputError);
  const auto full = ring::standard_presentation(s);
  const RingElement with_eta3 = gen(full, "eta1") * gen(full, "eta2") * gen(full, "eta3") *
                                gen(full, "theta");
  REQUIRE_THROWS_AS(ring::top_evaluate(with_eta3, s), InputError);
}
