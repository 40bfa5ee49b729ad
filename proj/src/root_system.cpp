#include "cjma/root_system.hpp"

#include "cjma/fail.hpp"

#include <algorithm>
#include <map>

namespace cjma {

namespace {

std::vector<RootF4> build_f4() {
  std::vector<RootF4> roots;
  for (int i = 0; i < 4; ++i)
    for (int s : {2, -2}) {
      RootF4 r{0, 0, 0, 0};
      r[std::size_t(i)] = s;
      roots.push_back(r);
    }
  for (int a : {1, -1})
    for (int b : {1, -1})
      for (int c : {1, -1})
        for (int d : {1, -1}) roots.push_back(RootF4{a, b, c, d});
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int a : {1, -1})
        for (int b : {1, -1}) {
          RootF4 r{0, 0, 0, 0};
          r[std::size_t(i)] = a;
          r[std::size_t(j)] = b;
          roots.push_back(r);
        }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<RootG2> build_g2() {
  std::vector<RootG2> roots;
  for (RootG2 r : {RootG2{-2, -1}, RootG2{-1, -1}, RootG2{-1, -2}, RootG2{0, -1},
                   RootG2{1, -1}, RootG2{1, 0}}) {
    roots.push_back(r);
    roots.push_back(RootG2{-r[0], -r[1]});
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// Fiber boxes over the six short G2 roots, transcribed as
// {root, i, j}: position (i,j) in the matrix shape, i <= j.
struct BoxEntry {
  RootF4 root;
  int i, j;
};

const BoxEntry kShortFibers[36] = {
    // over (-1, 0)
    {{-1, -1, 1, 1}, 1, 1}, {{-1, 0, 0, 1}, 1, 2}, {{-1, 0, 1, 0}, 1, 3},
    {{-1, 1, -1, 1}, 2, 2}, {{-1, 1, 0, 0}, 2, 3}, {{-1, 1, 1, -1}, 3, 3},
    // over (-1, -1)
    {{-1, 1, -1, -1}, 1, 1}, {{-1, 0, 0, -1}, 1, 2}, {{-1, 0, -1, 0}, 1, 3},
    {{-1, -1, 1, -1}, 2, 2}, {{-1, -1, 0, 0}, 2, 3}, {{-1, -1, -1, 1}, 3, 3},
    // over (0, 1)
    {{0, 2, 0, 0}, 1, 1}, {{0, 1, 1, 0}, 1, 2}, {{0, 1, 0, 1}, 1, 3},
    {{0, 0, 2, 0}, 2, 2}, {{0, 0, 1, 1}, 2, 3}, {{0, 0, 0, 2}, 3, 3},
    // over (0, -1)
    {{0, -2, 0, 0}, 1, 1}, {{0, -1, -1, 0}, 1, 2}, {{0, -1, 0, -1}, 1, 3},
    {{0, 0, -2, 0}, 2, 2}, {{0, 0, -1, -1}, 2, 3}, {{0, 0, 0, -2}, 3, 3},
    // over (1, 1)
    {{1, -1, 1, 1}, 1, 1}, {{1, 0, 0, 1}, 1, 2}, {{1, 0, 1, 0}, 1, 3},
    {{1, 1, -1, 1}, 2, 2}, {{1, 1, 0, 0}, 2, 3}, {{1, 1, 1, -1}, 3, 3},
    // over (1, 0)
    {{1, 1, -1, -1}, 1, 1}, {{1, 0, 0, -1}, 1, 2}, {{1, 0, -1, 0}, 1, 3},
    {{1, -1, 1, -1}, 2, 2}, {{1, -1, 0, 0}, 2, 3}, {{1, -1, -1, 1}, 3, 3},
};

// Central box: the six roots over (0,0), placed at the ordered off-diagonal
// positions of the matrix shape.
const BoxEntry kZeroFiber[6] = {
    {{0, 1, -1, 0}, 1, 2}, {{0, 1, 0, -1}, 1, 3}, {{0, -1, 1, 0}, 2, 1},
    {{0, 0, 1, -1}, 2, 3}, {{0, -1, 0, 1}, 3, 1}, {{0, 0, -1, 1}, 3, 2},
};

const std::map<RootF4, Slot>& short_fiber_slots() {
  static const std::map<RootF4, Slot> m = [] {
    std::map<RootF4, Slot> out;
    for (const BoxEntry& e : kShortFibers) out[e.root] = Slot{e.i, e.j};
    return out;
  }();
  return m;
}

const std::map<RootF4, Slot>& zero_fiber_slots() {
  static const std::map<RootF4, Slot> m = [] {
    std::map<RootF4, Slot> out;
    for (const BoxEntry& e : kZeroFiber) out[e.root] = Slot{e.i, e.j};
    return out;
  }();
  return m;
}

}  // namespace

const std::vector<RootF4>& roots_f4() {
  static const std::vector<RootF4> roots = build_f4();
  return roots;
}

const std::vector<RootG2>& roots_g2() {
  static const std::vector<RootG2> roots = build_g2();
  return roots;
}

bool is_root(const RootF4& a) {
  const auto& rs = roots_f4();
  return std::binary_search(rs.begin(), rs.end(), a);
}

bool is_root(const RootG2& a) {
  const auto& rs = roots_g2();
  return std::binary_search(rs.begin(), rs.end(), a);
}

bool is_zero(const RootF4& a) { return a == RootF4{0, 0, 0, 0}; }
bool is_zero(const RootG2& a) { return a == RootG2{0, 0}; }

int dot(const RootF4& a, const RootF4& b) {
  int s = 0;
  for (int i = 0; i < 4; ++i) s += a[std::size_t(i)] * b[std::size_t(i)];
  return s;
}

int dot(const RootG2& a, const RootG2& b) {
  return 2 * a[0] * b[0] - a[0] * b[1] - a[1] * b[0] + 2 * a[1] * b[1];
}

bool is_long(const RootF4& a) { return dot(a, a) == 4; }
bool is_long(const RootG2& a) { return dot(a, a) == 6; }

RootF4 reflect(const RootF4& beta, const RootF4& alpha) {
  int num = 2 * dot(alpha, beta), den = dot(alpha, alpha);
  RootF4 out;
  for (int i = 0; i < 4; ++i)
    out[std::size_t(i)] = beta[std::size_t(i)] - num / den * alpha[std::size_t(i)];
  return out;
}

RootG2 reflect(const RootG2& beta, const RootG2& alpha) {
  int num = 2 * dot(alpha, beta), den = dot(alpha, alpha);
  RootG2 out;
  for (int i = 0; i < 2; ++i)
    out[std::size_t(i)] = beta[std::size_t(i)] - num / den * alpha[std::size_t(i)];
  return out;
}

RootF4 negate(const RootF4& a) { return {-a[0], -a[1], -a[2], -a[3]}; }
RootF4 add(const RootF4& a, const RootF4& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

RootG2 pi(const RootF4& a) {
  int s = a[0] + a[1] + a[2] + a[3];
  if (s % 2 != 0) fail("pi: coordinate sum must be even");
  return {a[0], s / 2};
}

Slot slot_of(const RootF4& alpha) {
  auto it = short_fiber_slots().find(alpha);
  if (it == short_fiber_slots().end())
    fail("slot_of: " + render_root(alpha) + " does not lie over a short G2 root");
  return it->second;
}

std::optional<Slot> zero_fiber_slot(const RootF4& alpha) {
  auto it = zero_fiber_slots().find(alpha);
  if (it == zero_fiber_slots().end()) return std::nullopt;
  return it->second;
}

RootF4 fiber_root(const RootG2& beta, const Slot& slot) {
  if (beta == RootG2{0, 0}) {
    for (const BoxEntry& e : kZeroFiber)
      if (Slot{e.i, e.j} == slot) return e.root;
    fail("fiber_root: no zero-fiber entry at that slot");
  }
  for (const BoxEntry& e : kShortFibers)
    if (pi(e.root) == beta && Slot{e.i, e.j} == slot) return e.root;
  fail("fiber_root: no entry over " + std::to_string(beta[0]) + "," +
       std::to_string(beta[1]));
}

std::array<RootF4, 4> root_base() {
  return {RootF4{1, 1, -1, -1}, RootF4{-2, 0, 0, 0}, RootF4{1, -1, 0, 0},
          RootF4{0, 1, 1, 0}};
}

std::string render_root(const RootF4& a) {
  std::string s = "[";
  for (int i = 0; i < 4; ++i) {
    if (i) s += ",";
    s += std::to_string(a[std::size_t(i)]);
  }
  return s + "]";
}

}  // namespace cjma
