#include "cjma/jordan.hpp"

namespace cjma {

namespace {
// Cyclic permutations (i, j, l) of (1, 2, 3); u_i sits at position (j, l).
constexpr int kCyclic[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
}  // namespace

int compare(const CubicElement& a, const CubicElement& b) {
  for (int i = 1; i <= 3; ++i) {
    int c = compare(a.xi(i), b.xi(i));
    if (c != 0) return c;
  }
  for (int i = 1; i <= 3; ++i) {
    int c = compare(a.u(i), b.u(i));
    if (c != 0) return c;
  }
  return 0;
}

SlotRef off_slot(int i, int j) {
  for (auto& [s, p, q] : kCyclic) {
    if (i == p && j == q) return {s, false};
    if (i == q && j == p) return {s, true};
  }
  fail("off_slot: invalid position (" + std::to_string(i) + "," + std::to_string(j) + ")");
}

CubicElement cubic_el(const ScalarPoly& t, int i, int j) {
  if (i != j)
    throw KindError("cubic_el: scalar entries go on the diagonal; position (" +
                    std::to_string(i) + "," + std::to_string(j) + ") needs a conic element");
  if (i < 1 || i > 3) fail("cubic_el: index out of range");
  CubicElement x;
  x.xi(i) = t;
  return x;
}

CubicElement cubic_el(const ConicElement& a, int i, int j) {
  if (i == j)
    throw KindError("cubic_el: conic entries go off the diagonal; position (" +
                    std::to_string(i) + "," + std::to_string(j) + ") needs a scalar");
  if (i < 1 || i > 3 || j < 1 || j > 3) fail("cubic_el: index out of range");
  SlotRef ref = off_slot(i, j);
  CubicElement x;
  x.u(ref.slot) = ref.conjugate ? a.conj() : a;
  return x;
}

ScalarPoly norm_N(const CubicElement& x, const Context& ctx) {
  ScalarPoly out = x.xi(1) * x.xi(2) * x.xi(3);
  ScalarPoly ggg = ScalarPoly::gamma(1) * ScalarPoly::gamma(2) * ScalarPoly::gamma(3);
  out = out + ggg * trace(x.u(1) * x.u(2) * x.u(3), ctx);
  for (auto& [i, j, l] : kCyclic)
    out = out - ScalarPoly::gamma(j) * ScalarPoly::gamma(l) * x.xi(i) * norm(x.u(i), ctx);
  return out;
}

CubicElement sharp(const CubicElement& x, const Context& ctx) {
  CubicElement out;
  for (auto& [i, j, l] : kCyclic) {
    out.xi(i) = x.xi(j) * x.xi(l) -
                ScalarPoly::gamma(j) * ScalarPoly::gamma(l) * norm(x.u(i), ctx);
    out.u(i) = x.u(i).scaled(-x.xi(i)) +
               (x.u(j) * x.u(l)).conj().scaled(ScalarPoly::gamma(i));
  }
  return out;
}

CubicElement cross(const CubicElement& x, const CubicElement& y, const Context& ctx) {
  CubicElement out;
  for (auto& [i, j, l] : kCyclic) {
    ScalarPoly n_uv = trace(x.u(i) * y.u(i).conj(), ctx);
    out.xi(i) = x.xi(j) * y.xi(l) + y.xi(j) * x.xi(l) -
                ScalarPoly::gamma(j) * ScalarPoly::gamma(l) * n_uv;
    out.u(i) = y.u(i).scaled(-x.xi(i)) + x.u(i).scaled(-y.xi(i)) +
               (x.u(j) * y.u(l) + y.u(j) * x.u(l)).conj().scaled(ScalarPoly::gamma(i));
  }
  return out;
}

ScalarPoly trace_T(const CubicElement& x, const CubicElement& y, const Context& ctx) {
  ScalarPoly out;
  for (auto& [i, j, l] : kCyclic) {
    out = out + x.xi(i) * y.xi(i);
    out = out + ScalarPoly::gamma(j) * ScalarPoly::gamma(l) *
                    trace(x.u(i) * y.u(i).conj(), ctx);
  }
  return out;
}

CubicElement U_op(const CubicElement& x, const CubicElement& y, const Context& ctx) {
  return x.scaled(trace_T(x, y, ctx)) - cross(sharp(x, ctx), y, ctx);
}

CubicElement triple_D(const CubicElement& x, const CubicElement& y,
                      const CubicElement& z, const Context& ctx) {
  return z.scaled(trace_T(x, y, ctx)) + x.scaled(trace_T(y, z, ctx)) -
         cross(cross(z, x, ctx), y, ctx);
}

CubicElement simplify_cubic(const CubicElement& x, const Context& ctx) {
  CubicElement out;
  for (int i = 1; i <= 3; ++i) {
    out.xi(i) = simplify_scalar(x.xi(i), ctx);
    out.u(i) = simplify_conic(x.u(i), ctx);
  }
  return out;
}

CubicElement peirce_project(const CubicElement& x, const PeirceIndex& p) {
  CubicElement out;
  if (p.diagonal()) {
    out.xi(p.i) = x.xi(p.i);
  } else {
    SlotRef ref = off_slot(p.i, p.j);
    out.u(ref.slot) = x.u(ref.slot);
  }
  return out;
}

std::set<PeirceIndex> peirce_memberships(const CubicElement& x, const Context& ctx) {
  CubicElement s = simplify_cubic(x, ctx);
  std::set<PeirceIndex> out;
  for (int i = 1; i <= 3; ++i)
    if (!s.xi(i).is_zero()) out.insert(PeirceIndex(i, i));
  for (auto& [i, j, l] : kCyclic)
    if (!s.u(i).is_zero()) out.insert(PeirceIndex(j, l));
  return out;
}

}  // namespace cjma
