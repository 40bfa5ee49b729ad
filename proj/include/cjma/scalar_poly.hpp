#ifndef CJMA_SCALAR_POLY_HPP
#define CJMA_SCALAR_POLY_HPP

#include "cjma/context.hpp"
#include "cjma/rational.hpp"

#include <map>
#include <vector>

namespace cjma {

/// Power product of scalar indeterminates. Exponents are nonnegative except
/// for the gamma indeterminates, which may be negative (Laurent).
struct Monomial {
  std::vector<std::pair<ScalarIndet, int>> factors;  // sorted, no zero exponents

  static Monomial one() { return {}; }
  static Monomial indet(ScalarIndet v, int exp = 1) {
    Monomial m;
    if (exp != 0) m.factors.push_back({v, exp});
    return m;
  }

  bool is_one() const { return factors.empty(); }
  int total_degree() const {
    int d = 0;
    for (auto& [v, e] : factors) d += e;
    return d;
  }
  int exponent_of(const ScalarIndet& v) const {
    for (auto& [w, e] : factors)
      if (w == v) return e;
    return 0;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial out;
    auto a = factors.begin(), b = o.factors.begin();
    while (a != factors.end() || b != o.factors.end()) {
      if (b == o.factors.end() || (a != factors.end() && a->first < b->first)) {
        out.factors.push_back(*a++);
      } else if (a == factors.end() || b->first < a->first) {
        out.factors.push_back(*b++);
      } else {
        int e = a->second + b->second;
        if (e != 0) out.factors.push_back({a->first, e});
        ++a, ++b;
      }
    }
    return out;
  }

  Monomial pow(int k) const {
    Monomial out;
    for (auto& [v, e] : factors) out.factors.push_back({v, e * k});
    if (k == 0) out.factors.clear();
    return out;
  }

  auto operator<=>(const Monomial&) const = default;
};

/// Exact element of the coefficient ring k: a rational-coefficient
/// polynomial in the structured indeterminates, Laurent in g1, g2, g3.
class ScalarPoly {
 public:
  ScalarPoly() = default;

  static ScalarPoly zero() { return {}; }
  static ScalarPoly constant(const Rational& q) {
    ScalarPoly p;
    if (q != 0) p.terms_[Monomial::one()] = q;
    return p;
  }
  static ScalarPoly one() { return constant(1); }
  static ScalarPoly indet(ScalarIndet v, int exp = 1) {
    ScalarPoly p;
    p.terms_[Monomial::indet(v, exp)] = 1;
    return p;
  }
  static ScalarPoly gamma(int i, int exp = 1) { return indet(ScalarIndet::gamma(i), exp); }
  static ScalarPoly t(int i) { return indet(ScalarIndet::scalar(i)); }
  static ScalarPoly norm_indet(int i) { return indet(ScalarIndet::norm(i)); }
  static ScalarPoly monomial(const Monomial& m, const Rational& q) {
    ScalarPoly p;
    if (q != 0) p.terms_[m] = q;
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
  }
  Rational constant_value() const {
    if (terms_.empty()) return 0;
    return terms_.begin()->second;
  }
  bool is_one() const { return is_constant() && constant_value() == 1; }

  /// True iff every coefficient is an integer; gamma denominators live in
  /// exponents and do not count.
  bool is_gamma_integral() const {
    for (auto& [m, q] : terms_)
      if (!is_integer(q)) return false;
    return true;
  }

  ScalarPoly operator+(const ScalarPoly& o) const {
    ScalarPoly out = *this;
    for (auto& [m, q] : o.terms_) out.add_term(m, q);
    return out;
  }
  ScalarPoly operator-(const ScalarPoly& o) const {
    ScalarPoly out = *this;
    for (auto& [m, q] : o.terms_) out.add_term(m, -q);
    return out;
  }
  ScalarPoly operator-() const {
    ScalarPoly out;
    for (auto& [m, q] : terms_) out.terms_[m] = -q;
    return out;
  }
  ScalarPoly operator*(const ScalarPoly& o) const {
    ScalarPoly out;
    for (auto& [m1, q1] : terms_)
      for (auto& [m2, q2] : o.terms_) out.add_term(m1 * m2, q1 * q2);
    return out;
  }
  ScalarPoly scaled(const Rational& q) const {
    ScalarPoly out;
    if (q == 0) return out;
    for (auto& [m, c] : terms_) out.terms_[m] = c * q;
    return out;
  }
  ScalarPoly pow(int k) const {
    ScalarPoly out = one();
    for (int i = 0; i < k; ++i) out = out * *this;
    return out;
  }
  /// Multiplication by gamma_i^{-1} (Laurent exponent shift).
  ScalarPoly gamma_inverse(int i) const { return *this * gamma(i, -1); }

  bool operator==(const ScalarPoly& o) const { return terms_ == o.terms_; }

  const std::map<Monomial, Rational>& terms() const { return terms_; }

  void add_term(const Monomial& m, const Rational& q) {
    if (q == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_[m] = q;
    } else {
      it->second += q;
      if (it->second == 0) terms_.erase(it);
    }
  }

 private:
  std::map<Monomial, Rational> terms_;
};

/// Three-way compare for use as a map key (canonical term order).
int compare(const ScalarPoly& a, const ScalarPoly& b);
inline bool operator<(const ScalarPoly& a, const ScalarPoly& b) { return compare(a, b) < 0; }

/// Fixpoint of the two ring substitutions: traces on words of length 2 or 3
/// containing a conjugated generator are expanded via conj(a) = tr(a)1 - a,
/// and tr(a_i a_i) is replaced by tr(a_i)^2 - 2 n(a_i).
ScalarPoly simplify_scalar(const ScalarPoly& p, const Context& ctx);

/// tr(w) as a ScalarPoly (canonicalized, not simplified); unit word gives 2.
ScalarPoly trace_of_word(const ConicWord& w, const Context& ctx);

/// n(w) for a single word: the product of the norm indeterminates of its
/// leaves (1 for the unit word).
ScalarPoly norm_of_word(const ConicWord& w, const Context& ctx);

}  // namespace cjma

#endif
