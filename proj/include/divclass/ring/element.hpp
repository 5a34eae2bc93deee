#pragma once

// Exact-coefficient graded-commutative rings given by a presentation:
// generators with complex degrees, monomial rewrite rules, per-factor
// degree caps and an overall truncation degree.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "divclass/error.hpp"
#include "divclass/rational.hpp"

namespace divclass::ring {

/// Real cohomological degree a generator contributes to one product factor.
struct FactorWeight {
  std::size_t factor = 0;
  int real_degree = 0;

  friend bool operator==(const FactorWeight&, const FactorWeight&) = default;
};

/// One factor of the ambient product space. A monomial whose real degree in
/// this factor exceeds `real_cap` is zero.
struct Factor {
  std::string tag;
  std::optional<int> real_cap;

  friend bool operator==(const Factor&, const Factor&) = default;
};

struct Generator {
  std::string name;
  int degree = 1;  // complex degree
  std::vector<FactorWeight> footprint;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Sparse exponent vector, sorted by generator index. Generator indices are
/// local to a presentation, and the presentation's declaration order is the
/// monomial order.
class Monomial {
 public:
  using Entry = std::pair<std::size_t, int>;

  Monomial() = default;

  explicit Monomial(std::vector<Entry> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end());
    std::vector<Entry> merged;
    for (const auto& [gen, exp] : entries_) {
      if (exp < 0) throw InputError("negative exponent in monomial");
      if (!merged.empty() && merged.back().first == gen) {
        merged.back().second += exp;
      } else {
        merged.emplace_back(gen, exp);
      }
    }
    std::erase_if(merged, [](const Entry& e) { return e.second == 0; });
    entries_ = std::move(merged);
  }

  static Monomial of(std::size_t gen, int exp = 1) { return Monomial({{gen, exp}}); }

  const std::vector<Entry>& entries() const { return entries_; }
  bool is_one() const { return entries_.empty(); }

  int exponent(std::size_t gen) const {
    for (const auto& [g, e] : entries_) {
      if (g == gen) return e;
    }
    return 0;
  }

  bool divisible_by(const Monomial& d) const {
    return std::all_of(d.entries_.begin(), d.entries_.end(),
                       [this](const Entry& e) { return exponent(e.first) >= e.second; });
  }

  Monomial divided_by(const Monomial& d) const {
    if (!divisible_by(d)) throw InternalError("monomial division with remainder");
    Monomial out;
    for (const auto& [gen, exp] : entries_) {
      const int rest = exp - d.exponent(gen);
      if (rest > 0) out.entries_.emplace_back(gen, rest);
    }
    return out;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    std::vector<Entry> out = a.entries_;
    out.insert(out.end(), b.entries_.begin(), b.entries_.end());
    return Monomial(std::move(out));
  }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Entry> entries_;
};

using Terms = std::map<Monomial, Rational>;

struct RewriteRule {
  Monomial lhs;
  Terms rhs;

  friend bool operator==(const RewriteRule&, const RewriteRule&) = default;
};

inline void accumulate(Terms& terms, const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

class RingPresentation;
using PresentationPtr = std::shared_ptr<const RingPresentation>;

class RingPresentation {
 public:
  static constexpr std::size_t kRewriteStepLimit = std::size_t{1} << 22;

  static PresentationPtr create(std::vector<Factor> factors, std::vector<Generator> generators,
                                std::vector<RewriteRule> rules, int top_degree) {
    auto p = std::shared_ptr<RingPresentation>(new RingPresentation());
    p->factors_ = std::move(factors);
    p->generators_ = std::move(generators);
    p->rules_ = std::move(rules);
    p->top_degree_ = top_degree;
    p->validate();
    return p;
  }

  const std::vector<Factor>& factors() const { return factors_; }
  const std::vector<Generator>& generators() const { return generators_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  int top_degree() const { return top_degree_; }

  std::optional<std::size_t> find(std::string_view name) const {
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      if (generators_[i].name == name) return i;
    }
    return std::nullopt;
  }

  std::size_t index(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw InputError("unknown generator '" + std::string(name) + "'");
  }

  std::optional<std::size_t> factor_index(std::string_view tag) const {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (factors_[i].tag == tag) return i;
    }
    return std::nullopt;
  }

  Monomial monomial(std::initializer_list<std::pair<std::string_view, int>> powers) const {
    std::vector<Monomial::Entry> entries;
    for (const auto& [name, exp] : powers) entries.emplace_back(index(name), exp);
    return Monomial(std::move(entries));
  }

  int degree(const Monomial& m) const {
    int total = 0;
    for (const auto& [gen, exp] : m.entries()) total += generators_.at(gen).degree * exp;
    return total;
  }

  /// Real degree of `m` carried by factor `factor`.
  int factor_degree(const Monomial& m, std::size_t factor) const {
    int total = 0;
    for (const auto& [gen, exp] : m.entries()) {
      for (const auto& w : generators_.at(gen).footprint) {
        if (w.factor == factor) total += w.real_degree * exp;
      }
    }
    return total;
  }

  /// True when caps or truncation kill `m` outright.
  bool vanishes(const Monomial& m) const {
    if (degree(m) > top_degree_) return true;
    for (std::size_t f = 0; f < factors_.size(); ++f) {
      if (factors_[f].real_cap && factor_degree(m, f) > *factors_[f].real_cap) return true;
    }
    return false;
  }

  const RewriteRule* first_rule_for(const Monomial& m) const {
    for (const auto& rule : rules_) {
      if (m.divisible_by(rule.lhs)) return &rule;
    }
    return nullptr;
  }

  bool is_reduced(const Monomial& m) const { return !vanishes(m) && first_rule_for(m) == nullptr; }

  /// Exhaustive rule application plus cap deletion.
  Terms normal_form(const Terms& input) const {
    std::vector<std::pair<Monomial, Rational>> work(input.begin(), input.end());
    Terms out;
    std::size_t steps = 0;
    while (!work.empty()) {
      if (++steps > kRewriteStepLimit) {
        throw InternalError("rewriting did not terminate; presentation is ill-formed");
      }
      auto [m, c] = std::move(work.back());
      work.pop_back();
      if (c == 0 || vanishes(m)) continue;
      const RewriteRule* rule = first_rule_for(m);
      if (rule == nullptr) {
        accumulate(out, m, c);
        continue;
      }
      const Monomial rest = m.divided_by(rule->lhs);
      for (const auto& [rm, rc] : rule->rhs) work.emplace_back(rest * rm, c * rc);
    }
    return out;
  }

  /// The presentation of the remaining factors: generators touching `tag`
  /// and rules mentioning them are dropped.
  PresentationPtr without_factor(std::string_view tag) const {
    auto dropped = factor_index(tag);
    if (!dropped) throw InputError("no factor '" + std::string(tag) + "'");

    std::vector<Factor> factors;
    std::vector<std::optional<std::size_t>> factor_map(factors_.size());
    for (std::size_t f = 0; f < factors_.size(); ++f) {
      if (f == *dropped) continue;
      factor_map[f] = factors.size();
      factors.push_back(factors_[f]);
    }

    std::vector<Generator> generators;
    std::vector<std::optional<std::size_t>> gen_map(generators_.size());
    for (std::size_t g = 0; g < generators_.size(); ++g) {
      const auto& gen = generators_[g];
      bool touches = std::any_of(gen.footprint.begin(), gen.footprint.end(),
                                 [&](const FactorWeight& w) { return w.factor == *dropped; });
      if (touches) continue;
      Generator copy = gen;
      for (auto& w : copy.footprint) w.factor = *factor_map[w.factor];
      gen_map[g] = generators.size();
      generators.push_back(std::move(copy));
    }

    auto remap = [&](const Monomial& m) -> std::optional<Monomial> {
      std::vector<Monomial::Entry> entries;
      for (const auto& [gen, exp] : m.entries()) {
        if (!gen_map[gen]) return std::nullopt;
        entries.emplace_back(*gen_map[gen], exp);
      }
      return Monomial(std::move(entries));
    };

    std::vector<RewriteRule> rules;
    for (const auto& rule : rules_) {
      auto lhs = remap(rule.lhs);
      if (!lhs) continue;
      Terms rhs;
      bool keep = true;
      for (const auto& [m, c] : rule.rhs) {
        auto mapped = remap(m);
        if (!mapped) {
          keep = false;
          break;
        }
        accumulate(rhs, *mapped, c);
      }
      if (keep) rules.push_back({*lhs, std::move(rhs)});
    }
    return create(std::move(factors), std::move(generators), std::move(rules), top_degree_);
  }

  std::string format(const Monomial& m) const {
    std::string out;
    for (const auto& [gen, exp] : m.entries()) {
      if (!out.empty()) out += '*';
      out += generators_.at(gen).name + "^" + std::to_string(exp);
    }
    return out;
  }

  friend bool operator==(const RingPresentation& a, const RingPresentation& b) {
    return a.top_degree_ == b.top_degree_ && a.factors_ == b.factors_ &&
           a.generators_ == b.generators_ && a.rules_ == b.rules_;
  }

 private:
  RingPresentation() = default;

  void validate() const {
    if (top_degree_ < 0) throw InputError("negative top degree");
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      const auto& g = generators_[i];
      if (g.name.empty()) throw InputError("generator without a name");
      if (g.degree < 1) throw InputError("generator '" + g.name + "' has degree < 1");
      for (std::size_t j = 0; j < i; ++j) {
        if (generators_[j].name == g.name) throw InputError("duplicate generator '" + g.name + "'");
      }
      for (const auto& w : g.footprint) {
        if (w.factor >= factors_.size()) {
          throw InputError("generator '" + g.name + "' refers to an undeclared factor");
        }
      }
    }
    auto check_monomial = [&](const Monomial& m) {
      for (const auto& [gen, exp] : m.entries()) {
        if (gen >= generators_.size()) throw InputError("rule uses an undeclared generator");
      }
    };
    for (const auto& rule : rules_) {
      check_monomial(rule.lhs);
      if (rule.lhs.is_one()) throw InputError("rule with constant left-hand side");
      const int d = degree(rule.lhs);
      for (const auto& [m, c] : rule.rhs) {
        check_monomial(m);
        if (degree(m) != d) {
          throw InputError("rule " + format(rule.lhs) + " changes degree");
        }
      }
    }
  }

  std::vector<Factor> factors_;
  std::vector<Generator> generators_;
  std::vector<RewriteRule> rules_;
  int top_degree_ = 0;
};

/// Incremental construction of a presentation by generator name.
class PresentationBuilder {
 public:
  std::size_t add_factor(std::string tag, std::optional<int> real_cap) {
    factors_.push_back({std::move(tag), real_cap});
    return factors_.size() - 1;
  }

  PresentationBuilder& add_generator(std::string name, int degree,
                                     std::vector<FactorWeight> footprint) {
    generators_.push_back({std::move(name), degree, std::move(footprint)});
    return *this;
  }

  std::size_t index(std::string_view name) const {
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      if (generators_[i].name == name) return i;
    }
    throw InputError("unknown generator '" + std::string(name) + "'");
  }

  Monomial monomial(std::initializer_list<std::pair<std::string_view, int>> powers) const {
    std::vector<Monomial::Entry> entries;
    for (const auto& [name, exp] : powers) entries.emplace_back(index(name), exp);
    return Monomial(std::move(entries));
  }

  PresentationBuilder& add_rule(Monomial lhs, Terms rhs) {
    rules_.push_back({std::move(lhs), std::move(rhs)});
    return *this;
  }

  PresentationPtr build(int top_degree) const {
    return RingPresentation::create(factors_, generators_, rules_, top_degree);
  }

 private:
  std::vector<Factor> factors_;
  std::vector<Generator> generators_;
  std::vector<RewriteRule> rules_;
};

/// A class in a presented ring, always stored in normal form.
class RingElement {
 public:
  explicit RingElement(PresentationPtr p) : presentation_(std::move(p)) {
    if (!presentation_) throw InputError("element without a presentation");
  }

  RingElement(PresentationPtr p, const Terms& terms) : RingElement(std::move(p)) {
    for (const auto& [m, c] : terms) {
      for (const auto& [gen, exp] : m.entries()) {
        if (gen >= presentation_->generators().size()) {
          throw InputError("monomial uses a generator outside the presentation");
        }
      }
    }
    terms_ = presentation_->normal_form(terms);
  }

  static RingElement constant(PresentationPtr p, const Rational& q) {
    Terms t;
    accumulate(t, Monomial(), q);
    return RingElement(std::move(p), t);
  }

  static RingElement monomial(PresentationPtr p, const Monomial& m, const Rational& q = 1) {
    Terms t;
    accumulate(t, m, q);
    return RingElement(std::move(p), t);
  }

  static RingElement generator(PresentationPtr p, std::string_view name, const Rational& q = 1) {
    const std::size_t i = p->index(name);
    return monomial(std::move(p), Monomial::of(i), q);
  }

  const PresentationPtr& presentation() const { return presentation_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Rational constant_term() const { return coefficient(Monomial()); }

  /// Zero counts as homogeneous of every degree.
  bool is_homogeneous(int degree) const {
    return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) {
      return presentation_->degree(t.first) == degree;
    });
  }

  std::optional<int> homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    const int d = presentation_->degree(terms_.begin()->first);
    if (!is_homogeneous(d)) return std::nullopt;
    return d;
  }

  RingElement part(int degree) const {
    RingElement out(presentation_);
    for (const auto& [m, c] : terms_) {
      if (presentation_->degree(m) == degree) out.terms_.emplace(m, c);
    }
    return out;
  }

  RingElement& operator+=(const RingElement& other) {
    require_same(other);
    for (const auto& [m, c] : other.terms_) accumulate(terms_, m, c);
    return *this;
  }

  RingElement& operator-=(const RingElement& other) {
    require_same(other);
    for (const auto& [m, c] : other.terms_) accumulate(terms_, m, -c);
    return *this;
  }

  RingElement& operator*=(const Rational& q) {
    if (q == 0) {
      terms_.clear();
    } else {
      for (auto& [m, c] : terms_) c *= q;
    }
    return *this;
  }

  RingElement& operator*=(const RingElement& other) {
    require_same(other);
    Terms product;
    for (const auto& [ma, ca] : terms_) {
      for (const auto& [mb, cb] : other.terms_) accumulate(product, ma * mb, ca * cb);
    }
    terms_ = presentation_->normal_form(product);
    return *this;
  }

  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(RingElement a, const RingElement& b) { return a *= b; }
  friend RingElement operator*(RingElement a, const Rational& q) { return a *= q; }
  friend RingElement operator*(const Rational& q, RingElement a) { return a *= q; }
  friend RingElement operator-(RingElement a) { return a *= Rational(-1); }

  friend bool operator==(const RingElement& a, const RingElement& b) {
    return same_presentation(*a.presentation_, *b.presentation_) && a.terms_ == b.terms_;
  }

  static bool same_presentation(const RingPresentation& a, const RingPresentation& b) {
    return &a == &b || a == b;
  }

 private:
  void require_same(const RingElement& other) const {
    if (!same_presentation(*presentation_, *other.presentation_)) {
      throw InputError("operands belong to different presentations");
    }
  }

  PresentationPtr presentation_;
  Terms terms_;
};

inline RingElement add(const RingElement& x, const RingElement& y) { return x + y; }
inline RingElement mul(const RingElement& x, const RingElement& y) { return x * y; }
inline RingElement scale(const Rational& q, const RingElement& x) { return q * x; }

inline RingElement power(const RingElement& x, int k) {
  if (k < 0) throw InputError("negative power");
  RingElement out = RingElement::constant(x.presentation(), 1);
  for (int i = 0; i < k; ++i) out *= x;
  return out;
}

/// exp(-D), truncated by the presentation. D must have no constant term.
inline RingElement exp_neg(const RingElement& d) {
  if (d.constant_term() != 0) throw InputError("exp_neg of an element with a degree-0 term");
  RingElement sum = RingElement::constant(d.presentation(), 1);
  RingElement term = sum;
  const RingElement minus_d = -d;
  for (int k = 1; !term.is_zero(); ++k) {
    term = term * minus_d * make_rational(1, k);
    sum += term;
  }
  return sum;
}

/// Canonical text form "q1*mono1 + q2*mono2", e.g. "3 + -2*gamma12^1".
inline std::string to_string(const RingElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : x.terms()) {
    if (!out.empty()) out += " + ";
    out += divclass::to_string(c);
    if (!m.is_one()) out += "*" + x.presentation()->format(m);
  }
  return out;
}

/// Describes the first monomial (in canonical order) where the two differ.
inline std::optional<std::string> first_difference(const RingElement& expected,
                                                   const RingElement& actual) {
  if (!RingElement::same_presentation(*expected.presentation(), *actual.presentation())) {
    return "elements live in different presentations";
  }
  const RingElement diff = actual - expected;
  if (diff.is_zero()) return std::nullopt;
  const Monomial& m = diff.terms().begin()->first;
  const std::string name = m.is_one() ? std::string("1") : expected.presentation()->format(m);
  return name + ": expected " + divclass::to_string(expected.coefficient(m)) + ", got " +
         divclass::to_string(actual.coefficient(m));
}

}  // namespace divclass::ring
