#pragma once

// Cohomology of C x ... x C x W (a product of copies of a curve C and a
// surface W inside its Jacobian), truncated to the classes needed for the
// degeneracy-locus computation.
//
// Factor k <= 3 is the k-th copy of C; factor 4 is W. Generators:
//   eta<k>     point class of curve k                      real degree 2 on k
//   gamma<ij>  Kunneth class pairing H^1 of factors i < j  real degree 1 on i and j
//   theta      theta class on W                            real degree 2 on W
//   c1 c2 c3   Chern classes of the pushed-forward Poincare bundle on W
// Caps: real degree 2 on each curve, 4 on W (dim W = 2).

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "divclass/bn/combinatorics.hpp"
#include "divclass/error.hpp"
#include "divclass/rational.hpp"
#include "divclass/ring/element.hpp"

namespace divclass::ring {

inline constexpr int kWFactor = 4;
inline constexpr int kCurveRealCap = 2;
inline constexpr int kWRealCap = 4;
inline constexpr int kTopDegree = 4;

// Signs of the products of two gammas sharing one index, by the position of
// the shared index in the sorted triple i < j < k. All three are +1; the
// exterior algebra model in pipeline/delta_oracle.hpp checks them.
struct SharedSigns {
  int middle = 1;  // gamma_ij gamma_jk -> eta_j gamma_ik
  int first = 1;   // gamma_ij gamma_ik -> eta_i gamma_jk
  int last = 1;    // gamma_ik gamma_jk -> eta_k gamma_ij

  bool operator==(const SharedSigns&) const = default;
};

inline std::string eta_name(int i) { return "eta" + std::to_string(i); }

inline std::string gamma_name(int i, int j) {
  if (!(i < j)) throw InputError("gamma generators are indexed with i < j");
  return "gamma" + std::to_string(i) + std::to_string(j);
}

inline std::string curve_tag(int i) { return "curve-" + std::to_string(i); }

/// Presentation for H*(C^{curves} x W) with C of genus `curve_genus`.
inline PresentationPtr curve_product_presentation(int curve_genus, std::vector<int> curves,
                                                  int top_degree = kTopDegree,
                                                  SharedSigns signs = {}) {
  if (curve_genus < 1) throw InputError("curve genus must be >= 1");
  std::sort(curves.begin(), curves.end());
  if (curves.empty() || curves.front() < 1 || curves.back() >= kWFactor ||
      std::adjacent_find(curves.begin(), curves.end()) != curves.end()) {
    throw InputError("curve indices must be distinct values in 1..3");
  }

  PresentationBuilder b;
  std::vector<int> all = curves;
  all.push_back(kWFactor);
  std::vector<std::size_t> factor_of(kWFactor + 1);
  for (int c : curves) factor_of[c] = b.add_factor(curve_tag(c), kCurveRealCap);
  factor_of[kWFactor] = b.add_factor("W", kWRealCap);

  for (int c : curves) b.add_generator(eta_name(c), 1, {{factor_of[c], 2}});
  for (std::size_t x = 0; x < all.size(); ++x) {
    for (std::size_t y = x + 1; y < all.size(); ++y) {
      b.add_generator(gamma_name(all[x], all[y]), 1,
                      {{factor_of[all[x]], 1}, {factor_of[all[y]], 1}});
    }
  }
  const std::size_t w = factor_of[kWFactor];
  b.add_generator("theta", 1, {{w, 2}});
  b.add_generator("c1", 1, {{w, 2}});
  b.add_generator("c2", 2, {{w, 4}});
  b.add_generator("c3", 3, {{w, 6}});

  auto term = [&](std::initializer_list<std::pair<std::string_view, int>> powers,
                  const Rational& c) {
    Terms t;
    accumulate(t, b.monomial(powers), c);
    return t;
  };

  for (int c : curves) b.add_rule(b.monomial({{eta_name(c), 2}}), {});

  // gamma_ij^2 = -2h eta_i eta_j; gamma_k4^2 = -2 eta_k theta.
  for (std::size_t x = 0; x < all.size(); ++x) {
    for (std::size_t y = x + 1; y < all.size(); ++y) {
      const int i = all[x];
      const int j = all[y];
      const std::string g = gamma_name(i, j);
      if (j == kWFactor) {
        b.add_rule(b.monomial({{g, 2}}), term({{eta_name(i), 1}, {"theta", 1}}, -2));
      } else {
        b.add_rule(b.monomial({{g, 2}}),
                   term({{eta_name(i), 1}, {eta_name(j), 1}}, -2 * curve_genus));
        b.add_rule(b.monomial({{eta_name(j), 1}, {g, 1}}), {});
      }
      b.add_rule(b.monomial({{eta_name(i), 1}, {g, 1}}), {});
    }
  }

  // Products of two gammas sharing exactly one curve index.
  for (std::size_t x = 0; x < all.size(); ++x) {
    for (std::size_t y = x + 1; y < all.size(); ++y) {
      for (std::size_t z = y + 1; z < all.size(); ++z) {
        const int i = all[x];
        const int j = all[y];
        const int k = all[z];
        // shared j: gamma_ij gamma_jk
        b.add_rule(b.monomial({{gamma_name(i, j), 1}, {gamma_name(j, k), 1}}),
                   term({{eta_name(j), 1}, {gamma_name(i, k), 1}}, signs.middle));
        // shared i: gamma_ij gamma_ik
        b.add_rule(b.monomial({{gamma_name(i, j), 1}, {gamma_name(i, k), 1}}),
                   term({{eta_name(i), 1}, {gamma_name(j, k), 1}}, signs.first));
        // shared k: gamma_ik gamma_jk, only when k is a curve; gamma_i4 gamma_j4 stays.
        if (k != kWFactor) {
          b.add_rule(b.monomial({{gamma_name(i, k), 1}, {gamma_name(j, k), 1}}),
                     term({{eta_name(k), 1}, {gamma_name(i, j), 1}}, signs.last));
        }
      }
    }
  }
  return b.build(top_degree);
}

/// H*(C x C x C x W^2_d(C)) for g = 3s, d = 2s + 2, where C has genus g - 1.
inline PresentationPtr standard_presentation(int s) {
  if (s < 1) throw InputError("s must be >= 1");
  return curve_product_presentation(3 * s - 1, {1, 2, 3});
}

/// Integration along the fibres of the projection forgetting `tag`: the
/// coefficient of the point class `point_class`, every other monomial maps
/// to zero. The result lives in the presentation without that factor.
inline RingElement fiber_integrate(const RingElement& x, std::string_view tag,
                                   std::string_view point_class) {
  const RingPresentation& source = *x.presentation();
  const std::size_t point = source.index(point_class);
  PresentationPtr target = source.without_factor(tag);
  const std::size_t factor = *source.factor_index(tag);

  Terms out;
  for (const auto& [m, c] : x.terms()) {
    if (m.exponent(point) != 1) continue;
    const Monomial rest = m.divided_by(Monomial::of(point));
    if (source.factor_degree(rest, factor) != 0) continue;
    std::vector<Monomial::Entry> entries;
    for (const auto& [gen, exp] : rest.entries()) {
      entries.emplace_back(target->index(source.generators()[gen].name), exp);
    }
    accumulate(out, Monomial(std::move(entries)), c);
  }
  return RingElement(std::move(target), out);
}

inline RingElement fiber_integrate_3(const RingElement& x) {
  return fiber_integrate(x, curve_tag(3), eta_name(3));
}

/// Values of the degree-2 classes on W in units of c2, for g = 3s, d = 2s+2.
struct WIntersections {
  Rational c1_squared;
  Rational c1_theta;
  Rational theta_squared;
  Rational c2;  // c2 in units of the point class
};

inline WIntersections w_intersections(int s) {
  if (s < 1) throw InputError("s must be >= 1");
  return {
      .c1_squared = make_rational(3 * s + 5, s + 3),
      .c1_theta = s + 1,
      .theta_squared = make_rational((s + 1) * (s + 2), 3),
      .c2 = bn::castelnuovo(3 * s, 2, 2 * s + 2),
  };
}

/// Degree of a top class on C x C x W^2_d(C): the coefficient of eta1 eta2 [pt].
inline Rational top_evaluate(const RingElement& x, int s) {
  const RingPresentation& p = *x.presentation();
  if (!x.is_homogeneous(kTopDegree)) throw InputError("top_evaluate needs a homogeneous degree-4 class");
  if (p.find(eta_name(3))) throw InputError("integrate out the third curve factor first");

  const WIntersections w = w_intersections(s);
  const Monomial eta12 = p.monomial({{"eta1", 1}, {"eta2", 1}});
  const std::vector<std::pair<Monomial, Rational>> table = {
      {p.monomial({{"c1", 2}}), w.c1_squared},
      {p.monomial({{"c1", 1}, {"theta", 1}}), w.c1_theta},
      {p.monomial({{"theta", 2}}), w.theta_squared},
      {p.monomial({{"c2", 1}}), 1},
  };

  Rational in_c2 = 0;
  for (const auto& [m, c] : x.terms()) {
    const bool has_gamma = std::any_of(m.entries().begin(), m.entries().end(), [&](const auto& e) {
      return p.generators()[e.first].name.starts_with("gamma");
    });
    if (has_gamma) continue;
    if (!m.divisible_by(eta12)) throw InternalError("unexpected top monomial " + p.format(m));
    const Monomial rest = m.divided_by(eta12);
    auto it = std::find_if(table.begin(), table.end(),
                           [&](const auto& entry) { return entry.first == rest; });
    if (it == table.end()) throw InternalError("unexpected top monomial " + p.format(m));
    in_c2 += c * it->second;
  }
  return in_c2 * w.c2;
}

}  // namespace divclass::ring
