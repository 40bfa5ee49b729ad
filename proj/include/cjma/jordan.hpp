#ifndef CJMA_JORDAN_HPP
#define CJMA_JORDAN_HPP

#include "cjma/conic.hpp"

#include <array>
#include <set>

namespace cjma {

/// Peirce position: (i,i) names the scalar component k e_i, (i,j) with
/// i != j names [C]_ij = [C]_ji. Normalized so that (i,j) and (j,i)
/// compare equal.
struct PeirceIndex {
  int i, j;  // 1-based, i <= j after normalization

  PeirceIndex(int a, int b) : i(a < b ? a : b), j(a < b ? b : a) {}
  bool diagonal() const { return i == j; }
  auto operator<=>(const PeirceIndex&) const = default;
};

/// Element of J = Her3(C, k, Gamma): three diagonal scalars and three
/// off-diagonal conic entries at the positions (2,3), (3,1), (1,2).
class CubicElement {
 public:
  CubicElement() = default;

  static CubicElement zero() { return {}; }

  /// Identity element e_1 + e_2 + e_3.
  static CubicElement identity() {
    CubicElement x;
    for (int i = 0; i < 3; ++i) x.xi_[std::size_t(i)] = ScalarPoly::one();
    return x;
  }

  static CubicElement diag_unit(int i) {  // e_i
    CubicElement x;
    x.xi_[std::size_t(i - 1)] = ScalarPoly::one();
    return x;
  }

  const ScalarPoly& xi(int i) const { return xi_[std::size_t(i - 1)]; }
  const ConicElement& u(int i) const { return u_[std::size_t(i - 1)]; }
  ScalarPoly& xi(int i) { return xi_[std::size_t(i - 1)]; }
  ConicElement& u(int i) { return u_[std::size_t(i - 1)]; }

  bool is_zero() const {
    for (auto& s : xi_)
      if (!s.is_zero()) return false;
    for (auto& e : u_)
      if (!e.is_zero()) return false;
    return true;
  }
  bool operator==(const CubicElement& o) const {
    return xi_ == o.xi_ && u_[0] == o.u_[0] && u_[1] == o.u_[1] && u_[2] == o.u_[2];
  }

  CubicElement operator+(const CubicElement& o) const {
    CubicElement out;
    for (int i = 0; i < 3; ++i) {
      out.xi_[std::size_t(i)] = xi_[std::size_t(i)] + o.xi_[std::size_t(i)];
      out.u_[std::size_t(i)] = u_[std::size_t(i)] + o.u_[std::size_t(i)];
    }
    return out;
  }
  CubicElement operator-(const CubicElement& o) const { return *this + (-o); }
  CubicElement operator-() const {
    CubicElement out;
    for (int i = 0; i < 3; ++i) {
      out.xi_[std::size_t(i)] = -xi_[std::size_t(i)];
      out.u_[std::size_t(i)] = -u_[std::size_t(i)];
    }
    return out;
  }
  CubicElement scaled(const ScalarPoly& s) const {
    CubicElement out;
    for (int i = 0; i < 3; ++i) {
      out.xi_[std::size_t(i)] = xi_[std::size_t(i)] * s;
      out.u_[std::size_t(i)] = u_[std::size_t(i)].scaled(s);
    }
    return out;
  }

 private:
  std::array<ScalarPoly, 3> xi_;
  std::array<ConicElement, 3> u_;
};

int compare(const CubicElement& a, const CubicElement& b);
inline bool operator<(const CubicElement& a, const CubicElement& b) {
  return compare(a, b) < 0;
}

/// [t]_ii = t e_i.
CubicElement cubic_el(const ScalarPoly& t, int i, int j);
/// [a]_jl for (i,j,l) cyclic; [a]_lj stores the conjugate at the normalized
/// position.
CubicElement cubic_el(const ConicElement& a, int i, int j);

/// Off-diagonal slot index (1..3) of an unordered pair {i,j}, plus whether
/// content at the ordered position (i,j) must be conjugated for storage.
struct SlotRef {
  int slot;       // u_slot covers positions: 1 -> (2,3), 2 -> (3,1), 3 -> (1,2)
  bool conjugate; // true when (i,j) is the reversed orientation
};
SlotRef off_slot(int i, int j);

ScalarPoly norm_N(const CubicElement& x, const Context& ctx);
CubicElement sharp(const CubicElement& x, const Context& ctx);
CubicElement cross(const CubicElement& x, const CubicElement& y, const Context& ctx);
ScalarPoly trace_T(const CubicElement& x, const CubicElement& y, const Context& ctx);
/// U_x y = T(x,y) x - x# x y.
CubicElement U_op(const CubicElement& x, const CubicElement& y, const Context& ctx);
/// D_{x,y}(z) = {x,y,z} = T(x,y) z + T(y,z) x - (z x x) x y.
CubicElement triple_D(const CubicElement& x, const CubicElement& y,
                      const CubicElement& z, const Context& ctx);

CubicElement simplify_cubic(const CubicElement& x, const Context& ctx);

CubicElement peirce_project(const CubicElement& x, const PeirceIndex& p);
std::set<PeirceIndex> peirce_memberships(const CubicElement& x, const Context& ctx);

}  // namespace cjma

#endif
