#pragma once

// Brute-force model of the odd cohomology behind the gamma classes. Each of
// the four factors gets a symplectic basis delta_1..delta_{2h} of H^1,
// modelled as anticommuting symbols. On the three curve factors
// delta_a delta_{h+a} is the point class and every other product of two odd
// classes vanishes; on the fourth factor the symbols are free and
// theta = sum_a delta_a delta_{h+a}. gamma_ij is expanded from its
// definition and products are computed in this model, independently of the
// rewrite rules of the curve-product presentation.

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "divclass/error.hpp"
#include "divclass/ring/curve_product.hpp"
#include "divclass/ring/element.hpp"

namespace divclass::pipeline {

class ExteriorModel {
 public:
  // (odd symbols as a bitmask, point classes of curves 1..3 as a bitmask)
  using Key = std::pair<std::uint32_t, std::uint8_t>;
  using Element = std::map<Key, std::int64_t>;

  explicit ExteriorModel(int h) : h_(h) {
    if (h < 1 || h > 3) throw InputError("oracle genus must be in 1..3");
  }

  int genus() const { return h_; }

  Element one() const { return {{{0u, 0u}, 1}}; }

  /// delta^factor_alpha, alpha in 1..2h.
  Element odd(int factor, int alpha) const { return {{{bit(factor, alpha), 0u}, 1}}; }

  Element eta(int curve) const {
    return {{{0u, static_cast<std::uint8_t>(1u << (curve - 1))}, 1}};
  }

  Element theta() const {
    Element out;
    for (int a = 1; a <= h_; ++a) add_to(out, mul(odd(4, a), odd(4, h_ + a)));
    return out;
  }

  /// gamma_ij = -sum_a (delta^j_a delta^i_{h+a} - delta^j_{h+a} delta^i_a).
  Element gamma(int i, int j) const {
    Element out;
    for (int a = 1; a <= h_; ++a) {
      add_to(out, mul(odd(j, a), odd(i, h_ + a)), -1);
      add_to(out, mul(odd(j, h_ + a), odd(i, a)), 1);
    }
    return out;
  }

  Element mul(const Element& x, const Element& y) const {
    Element out;
    for (const auto& [kx, cx] : x) {
      for (const auto& [ky, cy] : y) {
        if (auto r = mul_keys(kx, ky)) add_to(out, {{r->second, cx * cy * r->first}});
      }
    }
    return out;
  }

  static void add_to(Element& acc, const Element& x, std::int64_t scale = 1) {
    for (const auto& [k, c] : x) {
      auto& slot = acc[k];
      slot += scale * c;
      if (slot == 0) acc.erase(k);
    }
  }

  /// Image of a monomial of the curve-product presentation.
  Element embed(const ring::RingPresentation& p, const ring::Monomial& m) const {
    Element out = one();
    for (const auto& [gen, exp] : m.entries()) {
      const std::string& name = p.generators()[gen].name;
      Element factor;
      if (name.starts_with("eta")) {
        factor = eta(name[3] - '0');
      } else if (name.starts_with("gamma")) {
        factor = gamma(name[5] - '0', name[6] - '0');
      } else if (name == "theta") {
        factor = theta();
      } else {
        throw InputError("the oracle does not model generator " + name);
      }
      for (int e = 0; e < exp; ++e) out = mul(out, factor);
    }
    return out;
  }

  Element embed(const ring::RingElement& x) const {
    Element out;
    for (const auto& [m, c] : x.terms()) {
      if (!is_integer(c)) throw InputError("oracle coefficients must be integral");
      const auto n = static_cast<std::int64_t>(boost::multiprecision::numerator(c));
      add_to(out, embed(*x.presentation(), m), n);
    }
    return out;
  }

 private:
  std::uint32_t bit(int factor, int alpha) const {
    if (factor < 1 || factor > 4 || alpha < 1 || alpha > 2 * h_) {
      throw InputError("odd symbol index out of range");
    }
    return 1u << ((factor - 1) * 2 * h_ + (alpha - 1));
  }

  std::uint32_t factor_mask(int factor) const {
    const std::uint32_t block = (1u << (2 * h_)) - 1;
    return block << ((factor - 1) * 2 * h_);
  }

  // Sign and key of a product of two basis monomials, or nullopt for zero.
  std::optional<std::pair<std::int64_t, Key>> mul_keys(Key a, Key b) const {
    if ((a.first & b.first) != 0 || (a.second & b.second) != 0) return std::nullopt;
    // Moving each symbol of b left past the larger symbols of a.
    int swaps = 0;
    for (std::uint32_t rest = b.first; rest != 0; rest &= rest - 1) {
      const std::uint32_t low = rest & (~rest + 1);
      swaps += std::popcount(a.first & ~((low << 1) - 1));
    }
    std::int64_t sign = (swaps % 2 == 0) ? 1 : -1;
    std::uint32_t odd = a.first | b.first;
    std::uint8_t points = a.second | b.second;

    for (int curve = 1; curve <= 3; ++curve) {
      const std::uint32_t here = odd & factor_mask(curve);
      if (here == 0) continue;
      const std::uint8_t point = static_cast<std::uint8_t>(1u << (curve - 1));
      if ((points & point) != 0) return std::nullopt;
      const int count = std::popcount(here);
      if (count == 1) continue;
      if (count > 2) return std::nullopt;
      // Two symbols of one curve are adjacent in the sorted order, so
      // delta_a delta_{h+a} can be replaced by the point class in place.
      const int low = std::countr_zero(here);
      const int high = 31 - std::countl_zero(here);
      const int base = (curve - 1) * 2 * h_;
      if (high - low != h_ || low - base >= h_) return std::nullopt;
      odd &= ~here;
      points |= point;
    }
    return std::make_pair(sign, Key{odd, points});
  }

  int h_;
};

struct OracleReport {
  int h = 0;
  std::size_t products_checked = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Compares every product of two and three generators among eta_i, gamma_ij
/// computed in the exterior model with the image of its normal form.
inline OracleReport run_delta_oracle(int h, ring::SharedSigns signs = {}) {
  const ExteriorModel model(h);
  const ring::PresentationPtr p =
      ring::curve_product_presentation(h, {1, 2, 3}, ring::kTopDegree, signs);

  std::vector<std::string> names;
  for (int i = 1; i <= 3; ++i) names.push_back(ring::eta_name(i));
  for (int i = 1; i <= 4; ++i) {
    for (int j = i + 1; j <= 4; ++j) names.push_back(ring::gamma_name(i, j));
  }

  OracleReport report{.h = h};
  auto check = [&](const std::vector<std::size_t>& picks) {
    ring::RingElement product = ring::RingElement::constant(p, 1);
    ExteriorModel::Element brute = model.one();
    std::string label;
    for (std::size_t k : picks) {
      product *= ring::RingElement::generator(p, names[k]);
      brute = model.mul(brute, model.embed(*p, p->monomial({{names[k], 1}})));
      label += (label.empty() ? "" : "*") + names[k];
    }
    ++report.products_checked;
    if (model.embed(product) != brute) {
      report.failures.push_back(label + " -> " + ring::to_string(product));
    }
  };

  for (std::size_t a = 0; a < names.size(); ++a) {
    for (std::size_t b = a; b < names.size(); ++b) {
      check({a, b});
      for (std::size_t c = b; c < names.size(); ++c) check({a, b, c});
    }
  }
  return report;
}

/// True when every rewrite rule agrees with the exterior model; throws
/// listing the disagreeing products otherwise.
inline bool delta_oracle_check(int h) {
  const OracleReport report = run_delta_oracle(h);
  if (!report.ok()) {
    std::string msg = "gamma product rules disagree with the exterior model for h = " +
                      std::to_string(h) + ":";
    for (const auto& f : report.failures) msg += "\n  " + f;
    throw VerificationError(msg);
  }
  return true;
}

}  // namespace divclass::pipeline
