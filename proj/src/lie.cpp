#include "cjma/lie.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace cjma {

namespace {
constexpr int kCyclic[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};

// Unordered pair {j, l} covered by off-diagonal slot s (1..3).
std::pair<int, int> slot_pair(int s) { return {kCyclic[s - 1][1], kCyclic[s - 1][2]}; }
}  // namespace

// ---------------------------------------------------------------------------
// Tags
// ---------------------------------------------------------------------------

const char* tag_name(LieTag t) {
  switch (t) {
    case LieTag::X: return "X";
    case LieTag::Y: return "Y";
    case LieTag::Xi: return "Xi";
    case LieTag::Zeta: return "Zeta";
    case LieTag::DD: return "DD";
    case LieTag::AdPlus: return "AdPlus";
    case LieTag::AdMinus: return "AdMinus";
    case LieTag::BrownMinus1: return "BrownMinus1";
    case LieTag::BrownMinus2: return "BrownMinus2";
    case LieTag::BrownMinus3: return "BrownMinus3";
    case LieTag::BrownMinus4: return "BrownMinus4";
    case LieTag::BrownPlus1: return "BrownPlus1";
    case LieTag::BrownPlus2: return "BrownPlus2";
    case LieTag::BrownPlus3: return "BrownPlus3";
    case LieTag::BrownPlus4: return "BrownPlus4";
  }
  return "?";
}

std::optional<LieTag> tag_from_name(const std::string& s) {
  for (int i = 0; i < kNumLieTags; ++i) {
    LieTag t = LieTag(i);
    if (s == tag_name(t)) return t;
  }
  return std::nullopt;
}

RootG2 tag_g2_degree(LieTag t) {
  switch (t) {
    case LieTag::X: return {-2, -1};
    case LieTag::Y: return {2, 1};
    case LieTag::Xi:
    case LieTag::Zeta:
    case LieTag::DD: return {0, 0};
    case LieTag::AdPlus: return {0, 1};
    case LieTag::AdMinus: return {0, -1};
    case LieTag::BrownMinus1: return {-1, -2};
    case LieTag::BrownMinus2: return {-1, -1};
    case LieTag::BrownMinus3: return {-1, 0};
    case LieTag::BrownMinus4: return {-1, 1};
    case LieTag::BrownPlus1: return {1, -1};
    case LieTag::BrownPlus2: return {1, 0};
    case LieTag::BrownPlus3: return {1, 1};
    case LieTag::BrownPlus4: return {1, 2};
  }
  return {0, 0};
}

const std::vector<PayloadKind>& tag_payload_kinds(LieTag t) {
  static const std::vector<PayloadKind> scalar{PayloadKind::Scalar};
  static const std::vector<PayloadKind> cubic{PayloadKind::Cubic};
  static const std::vector<PayloadKind> two_cubic{PayloadKind::Cubic, PayloadKind::Cubic};
  switch (t) {
    case LieTag::DD: return two_cubic;
    case LieTag::AdPlus:
    case LieTag::AdMinus:
    case LieTag::BrownMinus2:
    case LieTag::BrownMinus3:
    case LieTag::BrownPlus2:
    case LieTag::BrownPlus3: return cubic;
    default: return scalar;
  }
}

// ---------------------------------------------------------------------------
// Atoms
// ---------------------------------------------------------------------------

std::vector<LieAtom> atoms_of(const LieElement& m) {
  std::vector<LieAtom> out;
  auto push_scalar = [&out](LieTag t, const ScalarPoly& s) {
    if (!s.is_zero()) out.push_back({t, {s}});
  };
  auto push_cubic = [&out](LieTag t, const CubicElement& c) {
    if (!c.is_zero()) out.push_back({t, {c}});
  };
  push_scalar(LieTag::X, m.x_coef);
  push_scalar(LieTag::BrownMinus1, m.brown_minus.lambda);
  push_cubic(LieTag::BrownMinus2, m.brown_minus.c);
  push_cubic(LieTag::BrownMinus3, m.brown_minus.cprime);
  push_scalar(LieTag::BrownMinus4, m.brown_minus.mu);
  push_cubic(LieTag::AdMinus, m.ad_minus);
  for (const DDTerm& t : m.l00.dd_terms) {
    CubicElement c = t.c.scaled(t.coef);
    if (!c.is_zero() && !t.cprime.is_zero()) out.push_back({LieTag::DD, {c, t.cprime}});
  }
  push_scalar(LieTag::Xi, m.l00.xi_coef);
  push_scalar(LieTag::Zeta, m.l00.zeta_coef);
  push_cubic(LieTag::AdPlus, m.ad_plus);
  push_scalar(LieTag::BrownPlus1, m.brown_plus.lambda);
  push_cubic(LieTag::BrownPlus2, m.brown_plus.c);
  push_cubic(LieTag::BrownPlus3, m.brown_plus.cprime);
  push_scalar(LieTag::BrownPlus4, m.brown_plus.mu);
  push_scalar(LieTag::Y, m.y_coef);
  return out;
}

LieElement atom_element(LieTag tag, const std::vector<LiePayload>& payload) {
  auto scalar = [&payload](std::size_t i) { return std::get<ScalarPoly>(payload.at(i)); };
  auto cubic = [&payload](std::size_t i) { return std::get<CubicElement>(payload.at(i)); };
  switch (tag) {
    case LieTag::X: return LieElement::x().scaled(scalar(0));
    case LieTag::Y: return LieElement::y().scaled(scalar(0));
    case LieTag::Xi: return LieElement::xi().scaled(scalar(0));
    case LieTag::Zeta: return LieElement::zeta().scaled(scalar(0));
    case LieTag::DD: return LieElement::dd(cubic(0), cubic(1));
    case LieTag::AdPlus: return LieElement::ad_pos(cubic(0));
    case LieTag::AdMinus: return LieElement::ad_neg(cubic(0));
    case LieTag::BrownMinus1:
      return LieElement::brown_neg(scalar(0), {}, {}, {});
    case LieTag::BrownMinus2:
      return LieElement::brown_neg({}, cubic(0), {}, {});
    case LieTag::BrownMinus3:
      return LieElement::brown_neg({}, {}, cubic(0), {});
    case LieTag::BrownMinus4:
      return LieElement::brown_neg({}, {}, {}, scalar(0));
    case LieTag::BrownPlus1:
      return LieElement::brown_pos(scalar(0), {}, {}, {});
    case LieTag::BrownPlus2:
      return LieElement::brown_pos({}, cubic(0), {}, {});
    case LieTag::BrownPlus3:
      return LieElement::brown_pos({}, {}, cubic(0), {});
    case LieTag::BrownPlus4:
      return LieElement::brown_pos({}, {}, {}, scalar(0));
  }
  fail("atom_element: bad tag");
}

// ---------------------------------------------------------------------------
// Bracket table and bracket
// ---------------------------------------------------------------------------

void BracketTable::add(Entry e) {
  auto key = std::make_pair(e.a, e.b);
  if (entries_.count(key))
    fail(std::string("duplicate bracket entry [") + tag_name(e.a) + ", " +
         tag_name(e.b) + "]");
  entries_.emplace(key, std::move(e));
}

const BracketTable::Entry* BracketTable::find(LieTag a, LieTag b) const {
  auto it = entries_.find(std::make_pair(a, b));
  return it == entries_.end() ? nullptr : &it->second;
}

LieElement bracket(const LieElement& m1, const LieElement& m2,
                   const BracketTable& table, const Context& ctx) {
  LieElement out;
  for (const LieAtom& a : atoms_of(m1)) {
    for (const LieAtom& b : atoms_of(m2)) {
      RootG2 da = tag_g2_degree(a.tag), db = tag_g2_degree(b.tag);
      RootG2 sum{da[0] + db[0], da[1] + db[1]};
      if (!is_zero(sum) && !is_root(sum)) continue;  // grading-forced zero
      if (const auto* e = table.find(a.tag, b.tag)) {
        std::vector<LiePayload> args = a.payload;
        args.insert(args.end(), b.payload.begin(), b.payload.end());
        out = out + e->fn(args, ctx);
      } else if (const auto* e2 = table.find(b.tag, a.tag)) {
        std::vector<LiePayload> args = b.payload;
        args.insert(args.end(), a.payload.begin(), a.payload.end());
        out = out - e2->fn(args, ctx);
      } else {
        throw MissingTableEntry(tag_name(a.tag), tag_name(b.tag));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// L00 sanitization and simplification
// ---------------------------------------------------------------------------

namespace {

struct CubicAtomRef {
  CubicElement el;   // [1]_ii or a single coefficient-1 word at one slot
  ScalarPoly coef;
};

std::vector<CubicAtomRef> cubic_atoms(const CubicElement& x) {
  std::vector<CubicAtomRef> out;
  for (int i = 1; i <= 3; ++i)
    if (!x.xi(i).is_zero())
      out.push_back({cubic_el(ScalarPoly::one(), i, i), x.xi(i)});
  for (int s = 1; s <= 3; ++s)
    for (auto& [w, c] : x.u(s).terms()) {
      CubicElement el;
      el.u(s) = ConicElement::word(w, ScalarPoly::one());
      out.push_back({el, c});
    }
  return out;
}

struct UnitAtom {
  bool diag;
  int i;        // diagonal index when diag
  int slot;     // off-diagonal slot when !diag
  ConicWord w;  // the single word when !diag
};

UnitAtom classify_unit_atom(const CubicElement& x) {
  for (int i = 1; i <= 3; ++i)
    if (!x.xi(i).is_zero()) return {true, i, 0, ConicWord::unit()};
  for (int s = 1; s <= 3; ++s)
    if (!x.u(s).is_zero()) return {false, 0, s, x.u(s).terms().begin()->first};
  fail("internal: empty dd atom");
}

struct CubicPairLess {
  bool operator()(const std::pair<CubicElement, CubicElement>& a,
                  const std::pair<CubicElement, CubicElement>& b) const {
    int c = compare(a.first, b.first);
    if (c != 0) return c < 0;
    return compare(a.second, b.second) < 0;
  }
};

}  // namespace

L00Element dd_sanitize(const L00Element& e, const Context&) {
  std::map<std::pair<CubicElement, CubicElement>, ScalarPoly, CubicPairLess> merged;
  for (const DDTerm& t : e.dd_terms)
    for (const CubicAtomRef& a : cubic_atoms(t.c))
      for (const CubicAtomRef& b : cubic_atoms(t.cprime)) {
        ScalarPoly coef = t.coef * a.coef * b.coef;
        auto key = std::make_pair(a.el, b.el);
        auto it = merged.find(key);
        if (it == merged.end())
          merged.emplace(key, coef);
        else
          it->second = it->second + coef;
      }
  L00Element out;
  out.xi_coef = e.xi_coef;
  out.zeta_coef = e.zeta_coef;
  for (auto& [key, coef] : merged)
    if (!coef.is_zero()) out.dd_terms.push_back({coef, key.first, key.second});
  return out;
}

L00Element simplify_l00(const L00Element& e, const Context& ctx) {
  L00Element s = dd_sanitize(e, ctx);
  ScalarPoly xi = s.xi_coef, zeta = s.zeta_coef;
  std::array<ScalarPoly, 4> diag;  // 1..3
  ConicElement Z[4][4];
  // same-slot pairs: (slot, word1, word2) -> coefficient
  std::map<std::tuple<int, ConicWord, ConicWord>, ScalarPoly> same;

  // Content of an off-diagonal atom read at the ordered position (p,q).
  auto oriented = [](const UnitAtom& at, int p, int q) {
    auto [j0, l0] = slot_pair(at.slot);
    if (p == j0 && q == l0) return at.w;
    return at.w.conj();
  };

  for (const DDTerm& t : s.dd_terms) {
    UnitAtom A = classify_unit_atom(t.c);
    UnitAtom B = classify_unit_atom(t.cprime);
    if (A.diag && B.diag) {
      if (A.i == B.i) diag[std::size_t(A.i)] = diag[std::size_t(A.i)] + t.coef;
      continue;  // distinct diagonal positions vanish (rule 3)
    }
    if (A.diag && !B.diag) {
      auto [p, q] = slot_pair(B.slot);
      int i = A.i;
      if (i == p)
        Z[std::size_t(i)][std::size_t(q)] =
            Z[std::size_t(i)][std::size_t(q)] + ConicElement::word(oriented(B, i, q), t.coef);
      else if (i == q)
        Z[std::size_t(i)][std::size_t(p)] =
            Z[std::size_t(i)][std::size_t(p)] + ConicElement::word(oriented(B, i, p), t.coef);
      continue;  // disjoint (rule 3)
    }
    if (!A.diag && B.diag) {
      // d([w]_{p,i}, [1]_ii) = d([1]_pp, [w]_{p,i})
      auto [p, q] = slot_pair(A.slot);
      int i = B.i;
      if (q == i)
        Z[std::size_t(p)][std::size_t(i)] =
            Z[std::size_t(p)][std::size_t(i)] + ConicElement::word(oriented(A, p, i), t.coef);
      else if (p == i)
        Z[std::size_t(q)][std::size_t(i)] =
            Z[std::size_t(q)][std::size_t(i)] + ConicElement::word(oriented(A, q, i), t.coef);
      continue;
    }
    // both off-diagonal
    if (A.slot == B.slot) {
      auto key = std::make_tuple(A.slot, A.w, B.w);
      auto it = same.find(key);
      if (it == same.end())
        same.emplace(key, t.coef);
      else
        it->second = it->second + t.coef;
      continue;
    }
    // distinct off-diagonal pairs share exactly one index l; chain through it:
    // d([a]_{il}, [b]_{lj}) = gamma_l d([1]_ii, [ab]_ij)
    auto [pa, qa] = slot_pair(A.slot);
    auto [pb, qb] = slot_pair(B.slot);
    int shared = (pa == pb || pa == qb) ? pa : qa;
    int i = (shared == pa) ? qa : pa;
    int j = (shared == pb) ? qb : pb;
    ConicWord a = oriented(A, i, shared);
    ConicWord b = oriented(B, shared, j);
    Z[std::size_t(i)][std::size_t(j)] =
        Z[std::size_t(i)][std::size_t(j)] +
        ConicElement::word(ConicWord::product(a, b), t.coef * ScalarPoly::gamma(shared));
  }

  // Rule 5: recombine mirror pairs on one slot; the a = b case goes fully
  // into the diagonal terms.
  for (int slot = 1; slot <= 3; ++slot) {
    auto [j0, l0] = slot_pair(slot);
    ScalarPoly gg = ScalarPoly::gamma(j0) * ScalarPoly::gamma(l0);
    for (auto& [key, coef] : same) {
      if (std::get<0>(key) != slot || coef.is_zero()) continue;
      const ConicWord& w1 = std::get<1>(key);
      const ConicWord& w2 = std::get<2>(key);
      if (w1 == w2) {
        ScalarPoly t = gg * norm_of_word(w1, ctx) * coef;
        diag[std::size_t(j0)] = diag[std::size_t(j0)] + t;
        diag[std::size_t(l0)] = diag[std::size_t(l0)] + t;
        coef = ScalarPoly::zero();
      } else if (w2 < w1) {
        // fold into the (min, max) orientation
        ScalarPoly lam2 = coef;
        coef = ScalarPoly::zero();
        auto mirror = std::make_tuple(slot, w2, w1);
        same[mirror] = same.count(mirror) ? same[mirror] - lam2 : -lam2;
        ScalarPoly t =
            gg * trace_of_word(ConicWord::product(w2, w1.conj()), ctx) * lam2;
        diag[std::size_t(j0)] = diag[std::size_t(j0)] + t;
        diag[std::size_t(l0)] = diag[std::size_t(l0)] + t;
      }
    }
  }

  // Rule 4: dd([1]_33,[1]_33) = 2 zeta - xi - dd([1]_11,[1]_11) - dd([1]_22,[1]_22).
  if (!diag[3].is_zero()) {
    zeta = zeta + diag[3].scaled(2);
    xi = xi - diag[3];
    diag[1] = diag[1] - diag[3];
    diag[2] = diag[2] - diag[3];
    diag[3] = ScalarPoly::zero();
  }

  L00Element out;
  out.xi_coef = simplify_scalar(xi, ctx);
  out.zeta_coef = simplify_scalar(zeta, ctx);
  for (int i = 1; i <= 2; ++i) {
    ScalarPoly d = simplify_scalar(diag[std::size_t(i)], ctx);
    if (!d.is_zero())
      out.dd_terms.push_back({d, cubic_el(ScalarPoly::one(), i, i),
                              cubic_el(ScalarPoly::one(), i, i)});
  }
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      if (i == j) continue;
      ConicElement zc = simplify_conic(Z[std::size_t(i)][std::size_t(j)], ctx);
      if (zc.is_zero()) continue;
      out.dd_terms.push_back({ScalarPoly::one(), cubic_el(ScalarPoly::one(), i, i),
                              cubic_el(zc, i, j)});
    }
  for (auto& [key, coef] : same) {
    ScalarPoly c = simplify_scalar(coef, ctx);
    if (c.is_zero()) continue;
    int slot = std::get<0>(key);
    CubicElement a, b;
    a.u(slot) = ConicElement::word(std::get<1>(key), ScalarPoly::one());
    b.u(slot) = ConicElement::word(std::get<2>(key), ScalarPoly::one());
    out.dd_terms.push_back({c, a, b});
  }
  return out;
}

LieElement simplify_lie(const LieElement& m, const Context& ctx) {
  LieElement out;
  out.x_coef = simplify_scalar(m.x_coef, ctx);
  out.y_coef = simplify_scalar(m.y_coef, ctx);
  auto simp_brown = [&ctx](const BrownElement& b) {
    return BrownElement{simplify_scalar(b.lambda, ctx), simplify_cubic(b.c, ctx),
                        simplify_cubic(b.cprime, ctx), simplify_scalar(b.mu, ctx)};
  };
  out.brown_minus = simp_brown(m.brown_minus);
  out.brown_plus = simp_brown(m.brown_plus);
  out.ad_minus = simplify_cubic(m.ad_minus, ctx);
  out.ad_plus = simplify_cubic(m.ad_plus, ctx);
  out.l00 = simplify_l00(m.l00, ctx);
  return out;
}

// ---------------------------------------------------------------------------
// Root homomorphisms
// ---------------------------------------------------------------------------

LieElement lie_root_hom_f4(const RootF4& alpha, const HomPayload& b,
                           const TwistTable& twists, const Context& ctx) {
  if (!is_root(alpha)) fail("lie_root_hom_f4: " + render_root(alpha) + " is not an F4 root");
  bool long_root = is_long(alpha);
  if (long_root && !std::holds_alternative<ScalarPoly>(b))
    throw KindError("lie_root_hom_f4: long root " + render_root(alpha) +
                    " takes a scalar payload");
  if (!long_root && !std::holds_alternative<ConicElement>(b))
    throw KindError("lie_root_hom_f4: short root " + render_root(alpha) +
                    " takes a conic payload");

  Twist tw = twists.get(alpha);
  ScalarPoly factor = ScalarPoly::constant(tw.eps);
  for (int i = 1; i <= 3; ++i)
    if (tw.tau[std::size_t(i - 1)] != 0)
      factor = factor * ScalarPoly::gamma(i, tw.tau[std::size_t(i - 1)]);

  // Cubic placement for roots lying over a short G2 root.
  auto place_cubic = [&]() -> CubicElement {
    if (long_root) {
      Slot sl = slot_of(alpha);
      return cubic_el(std::get<ScalarPoly>(b) * factor, sl.i, sl.j);
    }
    Slot sl = slot_of(alpha);
    return cubic_el(std::get<ConicElement>(b).scaled(factor), sl.i, sl.j);
  };

  int p = grading_component(alpha);
  RootG2 g2 = pi(alpha);
  if (p == -2) return LieElement::x().scaled(std::get<ScalarPoly>(b) * factor);
  if (p == 2) return LieElement::y().scaled(std::get<ScalarPoly>(b) * factor);
  if (p == 0) {
    if (g2 == RootG2{0, 1}) return LieElement::ad_pos(place_cubic());
    if (g2 == RootG2{0, -1}) return LieElement::ad_neg(place_cubic());
    // the six roots over (0,0): the Z_{i->j} components
    Slot sl = *zero_fiber_slot(alpha);
    return LieElement::dd(cubic_el(ScalarPoly::one(), sl.i, sl.i),
                          cubic_el(std::get<ConicElement>(b).scaled(factor), sl.i, sl.j));
  }
  // p == +-1: the Brown components; the slot follows the second coordinate
  // of pi(alpha).
  int q = g2[1];
  BrownElement brown;
  if (p == -1) {
    if (q == -2)
      brown.lambda = std::get<ScalarPoly>(b) * factor;
    else if (q == -1)
      brown.c = place_cubic();
    else if (q == 0)
      brown.cprime = place_cubic();
    else
      brown.mu = std::get<ScalarPoly>(b) * factor;
    LieElement m;
    m.brown_minus = brown;
    return m;
  }
  if (q == -1)
    brown.lambda = std::get<ScalarPoly>(b) * factor;
  else if (q == 0)
    brown.c = place_cubic();
  else if (q == 1)
    brown.cprime = place_cubic();
  else
    brown.mu = std::get<ScalarPoly>(b) * factor;
  LieElement m;
  m.brown_plus = brown;
  return m;
}

// ---------------------------------------------------------------------------
// Indeterminate usage and homogeneity
// ---------------------------------------------------------------------------

void collect_used(const ScalarPoly& p, const Context& ctx, IndetUse& out) {
  for (auto& [mono, coef] : p.terms())
    for (auto& [v, e] : mono.factors) {
      switch (v.kind) {
        case IndetKind::Gamma: break;
        case IndetKind::Scalar: out.scalar.insert(v.index); break;
        case IndetKind::Norm: out.conic.insert(v.index); break;
        case IndetKind::Trace:
          for (ConicWord::Token t : ctx.trace_word(v.index).letters())
            out.conic.insert(ConicWord::token_index(t));
          break;
      }
    }
}

void collect_used(const ConicElement& e, const Context& ctx, IndetUse& out) {
  for (auto& [w, c] : e.terms()) {
    for (ConicWord::Token t : w.letters()) out.conic.insert(ConicWord::token_index(t));
    collect_used(c, ctx, out);
  }
}

void collect_used(const CubicElement& x, const Context& ctx, IndetUse& out) {
  for (int i = 1; i <= 3; ++i) {
    collect_used(x.xi(i), ctx, out);
    collect_used(x.u(i), ctx, out);
  }
}

void collect_used(const LieElement& m, const Context& ctx, IndetUse& out) {
  collect_used(m.x_coef, ctx, out);
  collect_used(m.y_coef, ctx, out);
  for (const BrownElement* b : {&m.brown_minus, &m.brown_plus}) {
    collect_used(b->lambda, ctx, out);
    collect_used(b->c, ctx, out);
    collect_used(b->cprime, ctx, out);
    collect_used(b->mu, ctx, out);
  }
  collect_used(m.ad_minus, ctx, out);
  collect_used(m.ad_plus, ctx, out);
  for (const DDTerm& t : m.l00.dd_terms) {
    collect_used(t.coef, ctx, out);
    collect_used(t.c, ctx, out);
    collect_used(t.cprime, ctx, out);
  }
  collect_used(m.l00.xi_coef, ctx, out);
  collect_used(m.l00.zeta_coef, ctx, out);
}

namespace {

// Peirce slot of a cubic supported in exactly one component; empty otherwise.
std::optional<Slot> single_slot(const CubicElement& x) {
  std::optional<Slot> found;
  for (int i = 1; i <= 3; ++i)
    if (!x.xi(i).is_zero()) {
      if (found) return std::nullopt;
      found = Slot{i, i};
    }
  for (int s = 1; s <= 3; ++s)
    if (!x.u(s).is_zero()) {
      if (found) return std::nullopt;
      found = Slot{kCyclic[s - 1][1], kCyclic[s - 1][2]};
    }
  return found;
}

}  // namespace

std::optional<RootF4> homogeneous_root(const LieElement& m, const Context& ctx) {
  LieElement s = simplify_lie(m, ctx);
  std::vector<LieAtom> atoms = atoms_of(s);
  if (atoms.size() != 1) return std::nullopt;
  const LieAtom& a = atoms[0];
  switch (a.tag) {
    case LieTag::X: return RootF4{-2, 0, 0, 0};
    case LieTag::Y: return RootF4{2, 0, 0, 0};
    case LieTag::Xi:
    case LieTag::Zeta: return std::nullopt;
    case LieTag::BrownMinus1: return RootF4{-1, -1, -1, -1};
    case LieTag::BrownMinus4: return RootF4{-1, 1, 1, 1};
    case LieTag::BrownPlus1: return RootF4{1, -1, -1, -1};
    case LieTag::BrownPlus4: return RootF4{1, 1, 1, 1};
    case LieTag::DD: {
      const CubicElement& c = std::get<CubicElement>(a.payload[0]);
      const CubicElement& cp = std::get<CubicElement>(a.payload[1]);
      auto sc = single_slot(c), scp = single_slot(cp);
      if (!sc || !scp || !sc->diagonal() || scp->diagonal()) return std::nullopt;
      int i = sc->i;
      if (scp->i != i && scp->j != i) return std::nullopt;
      int j = scp->i == i ? scp->j : scp->i;
      return fiber_root(RootG2{0, 0}, Slot{i, j});
    }
    default: {
      const CubicElement& c = std::get<CubicElement>(a.payload[0]);
      auto sl = single_slot(c);
      if (!sl) return std::nullopt;
      return fiber_root(tag_g2_degree(a.tag), *sl);
    }
  }
}

}  // namespace cjma
