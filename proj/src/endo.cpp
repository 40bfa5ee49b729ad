#include "cjma/endo.hpp"

#include "cjma/render.hpp"

namespace cjma {

namespace {

bool gamma_integral(const LieElement& m) {
  bool ok = true;
  auto check = [&ok](const ScalarPoly& p) { ok = ok && p.is_gamma_integral(); };
  check(m.x_coef);
  check(m.y_coef);
  for (const BrownElement* b : {&m.brown_minus, &m.brown_plus}) {
    check(b->lambda);
    check(b->mu);
    for (const CubicElement* c : {&b->c, &b->cprime})
      for (int i = 1; i <= 3; ++i) {
        check(c->xi(i));
        for (auto& [w, s] : c->u(i).terms()) check(s);
      }
  }
  for (const CubicElement* c : {&m.ad_minus, &m.ad_plus})
    for (int i = 1; i <= 3; ++i) {
      check(c->xi(i));
      for (auto& [w, s] : c->u(i).terms()) check(s);
    }
  for (const DDTerm& t : m.l00.dd_terms) {
    check(t.coef);
    for (const CubicElement* c : {&t.c, &t.cprime})
      for (int i = 1; i <= 3; ++i) {
        check(c->xi(i));
        for (auto& [w, s] : c->u(i).terms()) check(s);
      }
  }
  check(m.l00.xi_coef);
  check(m.l00.zeta_coef);
  return ok;
}

LieElement apply_exp(const Endomorphism::ExpFactor& f, const LieElement& m,
                     const BracketTable& table, const Context& ctx) {
  // exp(l)(m) = sum_{i=0}^{4} (1/i!) ad_l^i(m); ad_l^5 = 0 for homogeneous l.
  LieElement acc = m;
  LieElement cur = m;
  Rational factorial = 1;
  for (int i = 1; i <= 4; ++i) {
    cur = bracket(f.payload, cur, table, ctx);
    factorial *= i;
    acc = acc + cur.scaled(ScalarPoly::constant(Rational(1) / factorial));
  }
  LieElement out = simplify_lie(acc, ctx);
  if (!gamma_integral(out))
    throw IntegralityError("apply: non-integral coefficient after exp(" +
                           render_root(f.root) + ") action");
  return out;
}

}  // namespace

Endomorphism Endomorphism::exp(const LieElement& l, const Context& ctx) {
  Endomorphism e;
  if (simplify_lie(l, ctx).is_zero()) return e;  // exp(0) = identity
  std::optional<RootF4> root = homogeneous_root(l, ctx);
  if (!root)
    fail("exp requires an element homogeneous at a single F4 root");
  e.factors_.push_back({l, *root});
  collect_used(l, ctx, e.used_);
  return e;
}

Endomorphism Endomorphism::compose(const Endomorphism& psi, const Endomorphism& phi) {
  Endomorphism out;
  out.factors_ = psi.factors_;
  out.factors_.insert(out.factors_.end(), phi.factors_.begin(), phi.factors_.end());
  out.used_ = psi.used_;
  out.used_.conic.insert(phi.used_.conic.begin(), phi.used_.conic.end());
  out.used_.scalar.insert(phi.used_.scalar.begin(), phi.used_.scalar.end());
  return out;
}

Endomorphism Endomorphism::inverse() const {
  Endomorphism out;
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it)
    out.factors_.push_back({-it->payload, it->root});
  out.used_ = used_;
  return out;
}

LieElement Endomorphism::apply(const LieElement& m, const BracketTable& table,
                               const Context& ctx) const {
  LieElement cur = m;
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it)
    cur = apply_exp(*it, cur, table, ctx);
  if (factors_.empty()) cur = simplify_lie(cur, ctx);
  return cur;
}

Endomorphism grp_root_hom_f4(const RootF4& alpha, const HomPayload& b,
                             const TwistTable& twists, const Context& ctx) {
  return Endomorphism::exp(lie_root_hom_f4(alpha, b, twists, ctx), ctx);
}

std::vector<LieElement> generator_set(int fresh_index, const TwistTable& twists,
                                      const Context& ctx) {
  ctx.check_gen_index(fresh_index);
  std::vector<LieElement> out;
  ConicElement a = ConicElement::gen(fresh_index, ctx);
  for (const RootF4& alpha : roots_f4()) {
    int p = grading_component(alpha);
    if (p != -2 && p != 1) continue;
    if (is_long(alpha))
      out.push_back(lie_root_hom_f4(alpha, ScalarPoly::one(), twists, ctx));
    else
      out.push_back(lie_root_hom_f4(alpha, a, twists, ctx));
  }
  return out;
}

EqualityResult test_equality(const Endomorphism& phi, const Endomorphism& psi,
                             int fresh_index, const BracketTable& table,
                             const TwistTable& twists, const Context& ctx) {
  ctx.check_gen_index(fresh_index);
  if (phi.used_indets().conic.count(fresh_index) ||
      psi.used_indets().conic.count(fresh_index))
    throw FreshIndexError("test_equality: index a" + std::to_string(fresh_index) +
                          " already occurs in an argument");
  EqualityResult res;
  for (const LieElement& gen : generator_set(fresh_index, twists, ctx)) {
    LieElement diff = simplify_lie(
        phi.apply(gen, table, ctx) - psi.apply(gen, table, ctx), ctx);
    if (!diff.is_zero()) res.residues.push_back({gen, diff});
  }
  res.equal = res.residues.empty();
  return res;
}

std::vector<WeylCheck> weyl_suite(const RootF4& delta, const TwistTable& twists,
                                  const BracketTable& table, const Context& ctx) {
  const int kPayloadIndex = 1, kFreshIndex = 2;
  ctx.check_gen_index(kFreshIndex);
  ctx.check_scalar_index(1);
  Endomorphism w = Endomorphism::compose(
      Endomorphism::compose(
          grp_root_hom_f4(negate(delta), ScalarPoly::constant(-1), twists, ctx),
          grp_root_hom_f4(delta, ScalarPoly::constant(1), twists, ctx)),
      grp_root_hom_f4(negate(delta), ScalarPoly::constant(-1), twists, ctx));
  Endomorphism w_inv = w.inverse();

  std::vector<WeylCheck> out;
  for (const RootF4& gamma : roots_f4()) {
    WeylCheck check;
    check.gamma = gamma;
    check.reflected = reflect(gamma, delta);
    try {
      std::vector<HomPayload> payloads;
      if (is_long(gamma)) {
        ScalarPoly t = ScalarPoly::t(1);
        payloads = {HomPayload(t), HomPayload(-t)};
      } else {
        ConicElement a = ConicElement::gen(kPayloadIndex, ctx);
        payloads = {HomPayload(a), HomPayload(-a), HomPayload(a.conj()),
                    HomPayload(a.conj().scaled(ScalarPoly::constant(-1)))};
      }
      Endomorphism g = grp_root_hom_f4(
          gamma, is_long(gamma) ? HomPayload(ScalarPoly::t(1))
                                : HomPayload(ConicElement::gen(kPayloadIndex, ctx)),
          twists, ctx);
      Endomorphism conjugated = Endomorphism::compose(w_inv, Endomorphism::compose(g, w));
      check.status = WeylCheck::Status::Residue;
      for (std::size_t cand = 0; cand < payloads.size(); ++cand) {
        Endomorphism h = grp_root_hom_f4(check.reflected, payloads[cand], twists, ctx);
        EqualityResult eq = test_equality(conjugated, h, kFreshIndex, table, twists, ctx);
        if (eq.equal) {
          check.status = WeylCheck::Status::Matched;
          check.candidate = int(cand);
          break;
        }
        if (cand == 0 && !eq.residues.empty())
          check.detail = render_lie(eq.residues.front().second, ctx);
      }
    } catch (const MissingTableEntry& e) {
      check.status = WeylCheck::Status::TableIncomplete;
      check.detail = e.what();
    }
    out.push_back(check);
  }
  return out;
}

}  // namespace cjma
