#ifndef CJMA_CONIC_HPP
#define CJMA_CONIC_HPP

#include "cjma/scalar_poly.hpp"

#include <map>

namespace cjma {

/// Element of the free conic algebra C on the generators a1..a_m2: a finite
/// k-linear combination of nonassociative words over the generators and
/// their conjugates.
class ConicElement {
 public:
  ConicElement() = default;

  static ConicElement zero() { return {}; }
  static ConicElement one() { return word(ConicWord::unit(), ScalarPoly::one()); }
  static ConicElement gen(int i, const Context& ctx) {
    ctx.check_gen_index(i);
    return word(ConicWord::gen(i), ScalarPoly::one());
  }
  static ConicElement word(const ConicWord& w, const ScalarPoly& coef) {
    ConicElement e;
    e.add_word(w, coef);
    return e;
  }

  bool is_zero() const { return terms_.empty(); }
  bool operator==(const ConicElement& o) const { return terms_ == o.terms_; }

  ConicElement operator+(const ConicElement& o) const {
    ConicElement out = *this;
    for (auto& [w, c] : o.terms_) out.add_word(w, c);
    return out;
  }
  ConicElement operator-(const ConicElement& o) const {
    ConicElement out = *this;
    for (auto& [w, c] : o.terms_) out.add_word(w, -c);
    return out;
  }
  ConicElement operator-() const {
    ConicElement out;
    for (auto& [w, c] : terms_) out.terms_[w] = -c;
    return out;
  }
  ConicElement scaled(const ScalarPoly& s) const {
    ConicElement out;
    if (s.is_zero()) return out;
    for (auto& [w, c] : terms_) out.add_word(w, c * s);
    return out;
  }

  /// Free bilinear product: word concatenation as a new product node, the
  /// unit absorbed. No alternative-law rewriting is performed.
  ConicElement operator*(const ConicElement& o) const {
    ConicElement out;
    for (auto& [w1, c1] : terms_)
      for (auto& [w2, c2] : o.terms_)
        out.add_word(ConicWord::product(w1, w2), c1 * c2);
    return out;
  }

  /// Conjugation: k-linear, reverses products, swaps generators with their
  /// conjugates; involutive.
  ConicElement conj() const {
    ConicElement out;
    for (auto& [w, c] : terms_) out.add_word(w.conj(), c);
    return out;
  }

  const std::map<ConicWord, ScalarPoly>& terms() const { return terms_; }

  void add_word(const ConicWord& w, const ScalarPoly& coef) {
    if (coef.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      terms_[w] = coef;
    } else {
      ScalarPoly s = it->second + coef;
      if (s.is_zero())
        terms_.erase(it);
      else
        it->second = s;
    }
  }

 private:
  std::map<ConicWord, ScalarPoly> terms_;
};

int compare(const ConicElement& a, const ConicElement& b);
inline bool operator<(const ConicElement& a, const ConicElement& b) {
  return compare(a, b) < 0;
}

/// Symbolic trace: additive, trace(1_C) = 2, words via canonical_trace_word.
/// Throws TraceLengthOverflow for words longer than m3.
ScalarPoly trace(const ConicElement& x, const Context& ctx);

/// Symbolic norm via the quadratic-form expansion
/// n(sum c_i w_i) = sum c_i^2 n(w_i) + sum_{i<j} c_i c_j tr(w_i conj(w_j)).
ScalarPoly norm(const ConicElement& x, const Context& ctx);

/// MakeTraces: rewrites conjugate word pairs into trace coefficients to a
/// fixpoint, then simplifies all coefficients.
ConicElement simplify_conic(const ConicElement& x, const Context& ctx);

}  // namespace cjma

#endif
