#ifndef CJMA_ORACLE_HPP
#define CJMA_ORACLE_HPP

#include "cjma/jordan.hpp"

#include <array>

namespace cjma {

/// Concrete conic algebra for evaluation: 2x2 rational matrices with
/// norm = det, trace = matrix trace, conjugation = adjugate.
struct Mat2 {
  Rational a, b, c, d;  // [[a, b], [c, d]]

  static Mat2 zero() { return {0, 0, 0, 0}; }
  static Mat2 identity() { return {1, 0, 0, 1}; }
  static Mat2 scalar(const Rational& s) { return {s, 0, 0, s}; }

  Mat2 operator+(const Mat2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
  Mat2 operator-(const Mat2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Mat2 scaled(const Rational& s) const { return {a * s, b * s, c * s, d * s}; }
  Rational det() const { return a * d - b * c; }
  Rational tr() const { return a + d; }
  Mat2 adjugate() const { return {d, -b, -c, a}; }
  bool operator==(const Mat2&) const = default;
};

/// Assignment of concrete values to the indeterminates.
struct ConicAssignment {
  std::vector<Mat2> gens;            // gens[i-1] is the value of a_i
  std::vector<Rational> scalars;     // scalars[i-1] is the value of t_i
  std::array<Rational, 3> gamma{1, 1, 1};
};

inline Mat2 eval_word(const ConicWord& w, const ConicAssignment& asg) {
  if (w.is_unit()) return Mat2::identity();
  if (w.is_leaf()) {
    Mat2 m = asg.gens.at(std::size_t(w.leaf_index() - 1));
    return w.leaf_is_conj() ? m.adjugate() : m;
  }
  return eval_word(w.left(), asg) * eval_word(w.right(), asg);
}

inline Rational eval_scalar(const ScalarPoly& p, const ConicAssignment& asg,
                            const Context& ctx) {
  Rational out = 0;
  for (auto& [mono, coef] : p.terms()) {
    Rational term = coef;
    for (auto& [v, e] : mono.factors) {
      Rational base;
      switch (v.kind) {
        case IndetKind::Gamma: base = asg.gamma[std::size_t(v.index - 1)]; break;
        case IndetKind::Scalar: base = asg.scalars.at(std::size_t(v.index - 1)); break;
        case IndetKind::Norm: base = asg.gens.at(std::size_t(v.index - 1)).det(); break;
        case IndetKind::Trace: base = eval_word(ctx.trace_word(v.index), asg).tr(); break;
      }
      int k = e;
      for (; k > 0; --k) term *= base;
      for (; k < 0; ++k) term /= base;
    }
    out += term;
  }
  return out;
}

inline Mat2 eval_conic(const ConicElement& e, const ConicAssignment& asg,
                       const Context& ctx) {
  Mat2 out = Mat2::zero();
  for (auto& [w, c] : e.terms())
    out = out + eval_word(w, asg).scaled(eval_scalar(c, asg, ctx));
  return out;
}

/// Numeric element of Her3(M2(Q), Q, Gamma).
struct NumCubic {
  std::array<Rational, 3> xi{0, 0, 0};
  std::array<Mat2, 3> u{Mat2::zero(), Mat2::zero(), Mat2::zero()};
  bool operator==(const NumCubic&) const = default;

  NumCubic operator+(const NumCubic& o) const {
    NumCubic r;
    for (int i = 0; i < 3; ++i) {
      r.xi[std::size_t(i)] = xi[std::size_t(i)] + o.xi[std::size_t(i)];
      r.u[std::size_t(i)] = u[std::size_t(i)] + o.u[std::size_t(i)];
    }
    return r;
  }
  NumCubic operator-(const NumCubic& o) const {
    NumCubic r;
    for (int i = 0; i < 3; ++i) {
      r.xi[std::size_t(i)] = xi[std::size_t(i)] - o.xi[std::size_t(i)];
      r.u[std::size_t(i)] = u[std::size_t(i)] - o.u[std::size_t(i)];
    }
    return r;
  }
};

inline NumCubic eval_cubic(const CubicElement& x, const ConicAssignment& asg,
                           const Context& ctx) {
  NumCubic r;
  for (int i = 1; i <= 3; ++i) {
    r.xi[std::size_t(i - 1)] = eval_scalar(x.xi(i), asg, ctx);
    r.u[std::size_t(i - 1)] = eval_conic(x.u(i), asg, ctx);
  }
  return r;
}

using Mat6 = std::array<std::array<Rational, 6>, 6>;

/// The matrix realization: [u]_jl = gamma_l u e_jl + gamma_j conj(u) e_lj,
/// diagonal entries xi_i 1_C.
Mat6 realize(const NumCubic& x, const std::array<Rational, 3>& gamma);
NumCubic unrealize(const Mat6& m, const std::array<Rational, 3>& gamma);

/// Independent numeric routes: N via the cubic square-root factor of the
/// 6x6 characteristic polynomial, sharp via the Cayley-Hamilton adjoint
/// X^2 - aX + bI, T via (1/2)Tr(XY), U via XYX, D via XYZ + ZYX, cross as
/// the linearization of sharp.
Rational oracle_N(const NumCubic& x, const std::array<Rational, 3>& gamma);
NumCubic oracle_sharp(const NumCubic& x, const std::array<Rational, 3>& gamma);
NumCubic oracle_cross(const NumCubic& x, const NumCubic& y,
                      const std::array<Rational, 3>& gamma);
Rational oracle_T(const NumCubic& x, const NumCubic& y,
                  const std::array<Rational, 3>& gamma);
NumCubic oracle_U(const NumCubic& x, const NumCubic& y,
                  const std::array<Rational, 3>& gamma);
NumCubic oracle_D(const NumCubic& x, const NumCubic& y, const NumCubic& z,
                  const std::array<Rational, 3>& gamma);

}  // namespace cjma

#endif
