#include "cjma/oracle.hpp"

namespace cjma {

namespace {

Mat6 mat6_zero() {
  Mat6 m;
  for (auto& row : m) row.fill(0);
  return m;
}

Mat6 mat6_identity() {
  Mat6 m = mat6_zero();
  for (int i = 0; i < 6; ++i) m[std::size_t(i)][std::size_t(i)] = 1;
  return m;
}

Mat6 mul(const Mat6& a, const Mat6& b) {
  Mat6 out = mat6_zero();
  for (int i = 0; i < 6; ++i)
    for (int k = 0; k < 6; ++k) {
      const Rational& aik = a[std::size_t(i)][std::size_t(k)];
      if (aik == 0) continue;
      for (int j = 0; j < 6; ++j)
        out[std::size_t(i)][std::size_t(j)] += aik * b[std::size_t(k)][std::size_t(j)];
    }
  return out;
}

Mat6 add(const Mat6& a, const Mat6& b) {
  Mat6 out;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      out[std::size_t(i)][std::size_t(j)] =
          a[std::size_t(i)][std::size_t(j)] + b[std::size_t(i)][std::size_t(j)];
  return out;
}

Mat6 scale(const Mat6& a, const Rational& s) {
  Mat6 out;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      out[std::size_t(i)][std::size_t(j)] = a[std::size_t(i)][std::size_t(j)] * s;
  return out;
}

Rational trace6(const Mat6& a) {
  Rational t = 0;
  for (int i = 0; i < 6; ++i) t += a[std::size_t(i)][std::size_t(i)];
  return t;
}

void put_block(Mat6& m, int bi, int bj, const Mat2& b) {
  m[std::size_t(2 * bi)][std::size_t(2 * bj)] = b.a;
  m[std::size_t(2 * bi)][std::size_t(2 * bj + 1)] = b.b;
  m[std::size_t(2 * bi + 1)][std::size_t(2 * bj)] = b.c;
  m[std::size_t(2 * bi + 1)][std::size_t(2 * bj + 1)] = b.d;
}

Mat2 get_block(const Mat6& m, int bi, int bj) {
  return {m[std::size_t(2 * bi)][std::size_t(2 * bj)],
          m[std::size_t(2 * bi)][std::size_t(2 * bj + 1)],
          m[std::size_t(2 * bi + 1)][std::size_t(2 * bj)],
          m[std::size_t(2 * bi + 1)][std::size_t(2 * bj + 1)]};
}

constexpr int kCyclic[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};

// Monic characteristic polynomial coefficients of a 6x6 matrix via Newton's
// identities on the power sums; returns (C5..C0) of
// det(tI - A) = t^6 + C5 t^5 + ... + C0.
std::array<Rational, 6> char_poly(const Mat6& a) {
  std::array<Rational, 7> p;  // p[k] = tr(A^k)
  Mat6 cur = a;
  p[0] = 6;
  for (int k = 1; k <= 6; ++k) {
    p[std::size_t(k)] = trace6(cur);
    if (k < 6) cur = mul(cur, a);
  }
  std::array<Rational, 7> e;  // elementary symmetric functions
  e[0] = 1;
  for (int k = 1; k <= 6; ++k) {
    Rational s = 0;
    for (int i = 1; i <= k; ++i)
      s += (i % 2 == 1 ? 1 : -1) * e[std::size_t(k - i)] * p[std::size_t(i)];
    e[std::size_t(k)] = s / k;
  }
  // det(tI - A) = sum (-1)^k e_k t^{6-k}
  std::array<Rational, 6> c;
  for (int k = 1; k <= 6; ++k)
    c[std::size_t(6 - k)] = (k % 2 == 1 ? -e[std::size_t(k)] : e[std::size_t(k)]);
  return c;
}

// The monic cubic q with q^2 = char poly; fails if the characteristic
// polynomial is not an exact square.
std::array<Rational, 3> cubic_factor(const Mat6& a) {
  std::array<Rational, 6> c = char_poly(a);  // c[k] = coefficient of t^k
  Rational b2 = c[5] / 2;
  Rational b1 = (c[4] - b2 * b2) / 2;
  Rational b0 = (c[3] - 2 * b1 * b2) / 2;
  if (c[2] != b1 * b1 + 2 * b0 * b2 || c[1] != 2 * b0 * b1 || c[0] != b0 * b0)
    fail("cubic_factor: characteristic polynomial is not an exact square");
  return {b0, b1, b2};
}

}  // namespace

Mat6 realize(const NumCubic& x, const std::array<Rational, 3>& gamma) {
  Mat6 m = mat6_zero();
  for (int i = 1; i <= 3; ++i)
    put_block(m, i - 1, i - 1, Mat2::scalar(x.xi[std::size_t(i - 1)]));
  for (auto& [i, j, l] : kCyclic) {
    const Mat2& u = x.u[std::size_t(i - 1)];
    put_block(m, j - 1, l - 1, u.scaled(gamma[std::size_t(l - 1)]));
    put_block(m, l - 1, j - 1, u.adjugate().scaled(gamma[std::size_t(j - 1)]));
  }
  return m;
}

NumCubic unrealize(const Mat6& m, const std::array<Rational, 3>& gamma) {
  NumCubic x;
  for (int i = 1; i <= 3; ++i) {
    Mat2 b = get_block(m, i - 1, i - 1);
    if (b.b != 0 || b.c != 0 || b.a != b.d)
      fail("unrealize: diagonal block is not scalar");
    x.xi[std::size_t(i - 1)] = b.a;
  }
  for (auto& [i, j, l] : kCyclic) {
    Mat2 b = get_block(m, j - 1, l - 1);
    Mat2 u = b.scaled(Rational(1) / gamma[std::size_t(l - 1)]);
    Mat2 mirror = get_block(m, l - 1, j - 1);
    if (!(mirror == u.adjugate().scaled(gamma[std::size_t(j - 1)])))
      fail("unrealize: matrix is not in hermitian form");
    x.u[std::size_t(i - 1)] = u;
  }
  return x;
}

Rational oracle_N(const NumCubic& x, const std::array<Rational, 3>& gamma) {
  auto [b0, b1, b2] = cubic_factor(realize(x, gamma));
  (void)b1;
  (void)b2;
  return -b0;  // q(t) = t^3 + b2 t^2 + b1 t + b0; N = product of roots
}

NumCubic oracle_sharp(const NumCubic& x, const std::array<Rational, 3>& gamma) {
  Mat6 X = realize(x, gamma);
  auto [b0, b1, b2] = cubic_factor(X);
  (void)b0;
  // q(t) = t^3 - a t^2 + b t - c with a = -b2, b = b1; adjoint = X^2 - aX + bI
  Mat6 sharp6 = add(add(mul(X, X), scale(X, b2)), scale(mat6_identity(), b1));
  return unrealize(sharp6, gamma);
}

NumCubic oracle_cross(const NumCubic& x, const NumCubic& y,
                      const std::array<Rational, 3>& gamma) {
  return oracle_sharp(x + y, gamma) - oracle_sharp(x, gamma) - oracle_sharp(y, gamma);
}

Rational oracle_T(const NumCubic& x, const NumCubic& y,
                  const std::array<Rational, 3>& gamma) {
  return trace6(mul(realize(x, gamma), realize(y, gamma))) / 2;
}

NumCubic oracle_U(const NumCubic& x, const NumCubic& y,
                  const std::array<Rational, 3>& gamma) {
  Mat6 X = realize(x, gamma), Y = realize(y, gamma);
  return unrealize(mul(mul(X, Y), X), gamma);
}

NumCubic oracle_D(const NumCubic& x, const NumCubic& y, const NumCubic& z,
                  const std::array<Rational, 3>& gamma) {
  Mat6 X = realize(x, gamma), Y = realize(y, gamma), Z = realize(z, gamma);
  return unrealize(add(mul(mul(X, Y), Z), mul(mul(Z, Y), X)), gamma);
}

}  // namespace cjma
