#include "cjma/suites.hpp"

#include "cjma/oracle.hpp"
#include "cjma/render.hpp"

#include <json.hpp>

#include <algorithm>
#include <random>

namespace cjma {

namespace {

using Status = SuiteItem::Status;

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Residue: return "residue";
    case Status::TableIncomplete: return "table-incomplete";
    case Status::Fail: return "fail";
  }
  return "?";
}

struct ItemRunner {
  SuiteReport& report;

  void run(const std::string& id, const std::string& inputs,
           const std::function<void(SuiteItem&)>& body) {
    SuiteItem item;
    item.id = id;
    item.inputs = inputs;
    try {
      body(item);
    } catch (const MissingTableEntry& e) {
      item.status = Status::TableIncomplete;
      item.detail = e.what();
    } catch (const Error& e) {
      item.status = Status::Fail;
      item.detail = e.what();
    }
    report.items.push_back(std::move(item));
  }

  void check(SuiteItem& item, bool ok, const std::string& detail_on_fail) {
    if (!ok && item.status == Status::Pass) {
      item.status = Status::Residue;
      item.detail = detail_on_fail;
    }
  }
};

Rational rnd_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  return Rational(num(rng), den(rng));
}

Mat2 rnd_mat(std::mt19937& rng) {
  return {rnd_rational(rng), rnd_rational(rng), rnd_rational(rng), rnd_rational(rng)};
}

// ---------------------------------------------------------------------------
// identities
// ---------------------------------------------------------------------------

ConicElement rnd_conic(std::mt19937& rng, const Context& ctx, int max_words = 3) {
  std::uniform_int_distribution<int> nwords(1, max_words), gen(1, ctx.m2());
  std::uniform_int_distribution<int> coef(-3, 3), len(1, 2), flip(0, 1);
  ConicElement out;
  int n = nwords(rng);
  for (int i = 0; i < n; ++i) {
    ConicWord w = flip(rng) ? ConicWord::gen(gen(rng)) : ConicWord::conj_gen(gen(rng));
    if (len(rng) == 2) {
      ConicWord w2 = flip(rng) ? ConicWord::gen(gen(rng)) : ConicWord::conj_gen(gen(rng));
      w = ConicWord::product(w, w2);
    }
    out = out + ConicElement::word(w, ScalarPoly::constant(coef(rng)));
  }
  return out;
}

SuiteReport suite_identities(const SuiteOptions&) {
  SuiteReport report{"identities", {}};
  ItemRunner r{report};
  ContextPtr ctxp = new_context(1, 3, 3);
  const Context& ctx = *ctxp;
  std::mt19937 rng(20240811);

  r.run("conj-additive", "conj(r+s) = conj(r)+conj(s), conj(t*r) = t*conj(r)", [&](SuiteItem& item) {
    for (int k = 0; k < 10; ++k) {
      ConicElement a = rnd_conic(rng, ctx), b = rnd_conic(rng, ctx);
      r.check(item, (a + b).conj() == a.conj() + b.conj(), "additivity failed");
    }
    ConicElement a1 = ConicElement::gen(1, ctx);
    r.check(item, a1.scaled(ScalarPoly::t(1)).conj() == a1.conj().scaled(ScalarPoly::t(1)),
            "k-linearity failed");
  });
  r.run("conj-involutive", "conj(conj(r)) = r", [&](SuiteItem& item) {
    for (int k = 0; k < 10; ++k) {
      ConicElement a = rnd_conic(rng, ctx);
      r.check(item, a.conj().conj() == a, "involution failed");
    }
  });
  r.run("conj-anti-multiplicative", "conj(a*b) = conj(b)*conj(a)", [&](SuiteItem& item) {
    for (int k = 0; k < 10; ++k) {
      ConicElement a = rnd_conic(rng, ctx), b = rnd_conic(rng, ctx);
      r.check(item, (a * b).conj() == b.conj() * a.conj(), "anti-multiplicativity failed");
    }
  });
  r.run("tr-commute", "tr(ab) = tr(ba) over all word pairs of length <= 3", [&](SuiteItem& item) {
    std::vector<ConicWord> words;
    for (int i = 1; i <= ctx.m2(); ++i) {
      words.push_back(ConicWord::gen(i));
      words.push_back(ConicWord::conj_gen(i));
    }
    std::vector<ConicWord> pairs = words;
    for (const ConicWord& a : words)
      for (const ConicWord& b : words) pairs.push_back(ConicWord::product(a, b));
    for (const ConicWord& a : pairs)
      for (const ConicWord& b : pairs) {
        if (a.length() + b.length() > std::size_t(ctx.m3())) continue;
        ConicElement ea = ConicElement::word(a, ScalarPoly::one());
        ConicElement eb = ConicElement::word(b, ScalarPoly::one());
        r.check(item, trace(ea * eb, ctx) == trace(eb * ea, ctx),
                "tr(ab) != tr(ba) for " + render_word(a) + ", " + render_word(b));
      }
  });
  r.run("tr-associative", "tr((ab)c) = tr(a(bc)) over all letter triples", [&](SuiteItem& item) {
    std::vector<ConicWord> letters;
    for (int i = 1; i <= ctx.m2(); ++i) {
      letters.push_back(ConicWord::gen(i));
      letters.push_back(ConicWord::conj_gen(i));
    }
    for (const ConicWord& a : letters)
      for (const ConicWord& b : letters)
        for (const ConicWord& c : letters) {
          ConicWord lhs = ConicWord::product(ConicWord::product(a, b), c);
          ConicWord rhs = ConicWord::product(a, ConicWord::product(b, c));
          r.check(item, trace_of_word(lhs, ctx) == trace_of_word(rhs, ctx),
                  "associativity failed at " + render_word(lhs));
        }
  });
  r.run("tr-conj", "tr(conj(a)) = tr(a)", [&](SuiteItem& item) {
    for (int k = 0; k < 10; ++k) {
      ConicElement a = rnd_conic(rng, ctx);
      r.check(item, trace(a.conj(), ctx) == trace(a, ctx), "tr(conj) failed");
    }
  });
  r.run("n-conj", "n(conj(a)) = n(a)", [&](SuiteItem& item) {
    for (int k = 0; k < 10; ++k) {
      ConicElement a = rnd_conic(rng, ctx, 2);
      r.check(item, norm(a.conj(), ctx) == norm(a, ctx), "n(conj) failed");
    }
  });
  r.run("n-linearized-trace", "n(1,a) = tr(a)", [&](SuiteItem& item) {
    for (int k = 0; k < 10; ++k) {
      ConicElement a = rnd_conic(rng, ctx, 2);
      ScalarPoly lhs = norm(ConicElement::one() + a, ctx) - norm(ConicElement::one(), ctx) -
                       norm(a, ctx);
      r.check(item, simplify_scalar(lhs - trace(a, ctx), ctx).is_zero(), "n(1,a) != tr(a)");
    }
  });
  r.run("conjugation-definition", "a + conj(a) = tr(a) 1_C", [&](SuiteItem& item) {
    for (int k = 0; k < 10; ++k) {
      ConicElement a = rnd_conic(rng, ctx, 2);
      ConicElement lhs = a + a.conj() - ConicElement::one().scaled(trace(a, ctx));
      r.check(item, simplify_conic(lhs, ctx).is_zero(), "identity (iv) failed");
    }
  });
  r.run("tr-square", "tr(a^2) = tr(a)^2 - 2 n(a)", [&](SuiteItem& item) {
    for (int i = 1; i <= ctx.m2(); ++i) {
      ConicElement a = ConicElement::gen(i, ctx);
      ScalarPoly lhs = trace(a * a, ctx);
      ScalarPoly rhs = trace(a, ctx) * trace(a, ctx) - norm(a, ctx).scaled(2);
      r.check(item, simplify_scalar(lhs - rhs, ctx).is_zero(), "identity (vi) failed");
    }
  });
  r.run("kirmse", "a n(b) = (a conj(b)) b: not auto-reducible; exact in 2x2 model",
        [&](SuiteItem& item) {
          ConicElement a = ConicElement::gen(1, ctx), b = ConicElement::gen(2, ctx);
          ConicElement residual =
              simplify_conic(a.scaled(norm(b, ctx)) - (a * b.conj()) * b, ctx);
          r.check(item, !residual.is_zero(),
                  "expected Kirmse to stay irreducible under the implemented rules");
          for (int k = 0; k < 20; ++k) {
            Mat2 A = rnd_mat(rng), B = rnd_mat(rng);
            Mat2 lhs = A.scaled(B.det());
            Mat2 rhs = (A * B.adjugate()) * B;
            r.check(item, lhs == rhs, "Kirmse failed numerically");
          }
        });
  r.run("norm-product", "a conj(a) = n(a) 1_C: not auto-reducible; exact in 2x2 model",
        [&](SuiteItem& item) {
          ConicElement a = ConicElement::gen(1, ctx);
          ConicElement residual = simplify_conic(
              a * a.conj() - ConicElement::one().scaled(norm(a, ctx)), ctx);
          r.check(item, !residual.is_zero(),
                  "expected a conj(a) to stay irreducible under the implemented rules");
          for (int k = 0; k < 20; ++k) {
            Mat2 A = rnd_mat(rng);
            r.check(item, A * A.adjugate() == Mat2::scalar(A.det()),
                    "a conj(a) = n(a) failed numerically");
          }
        });
  return report;
}

// ---------------------------------------------------------------------------
// peirce
// ---------------------------------------------------------------------------

std::vector<PeirceIndex> all_positions() {
  return {PeirceIndex(1, 1), PeirceIndex(2, 2), PeirceIndex(3, 3),
          PeirceIndex(2, 3), PeirceIndex(3, 1), PeirceIndex(1, 2)};
}

CubicElement generic_at(const PeirceIndex& p, int which, const Context& ctx) {
  if (p.diagonal()) return cubic_el(ScalarPoly::t(which), p.i, p.i);
  return cubic_el(ConicElement::gen(which, ctx), p.i, p.j);
}

// Targets allowed by {J_ij, J_jl, J_lm} <= J_im under J_ij = J_ji.
std::set<PeirceIndex> chain_targets(const PeirceIndex& p1, const PeirceIndex& p2,
                                    const PeirceIndex& p3) {
  std::set<PeirceIndex> out;
  auto orientations = [](const PeirceIndex& p) {
    std::vector<std::pair<int, int>> o{{p.i, p.j}};
    if (!p.diagonal()) o.push_back({p.j, p.i});
    return o;
  };
  for (auto [i, j] : orientations(p1))
    for (auto [j2, l] : orientations(p2)) {
      if (j != j2) continue;
      for (auto [l2, m] : orientations(p3)) {
        if (l != l2) continue;
        out.insert(PeirceIndex(i, m));
      }
    }
  return out;
}

std::string pos_name(const PeirceIndex& p) {
  return "J" + std::to_string(p.i) + std::to_string(p.j);
}

SuiteReport suite_peirce(const SuiteOptions&) {
  SuiteReport report{"peirce", {}};
  ItemRunner r{report};
  ContextPtr ctxp = new_context(3, 3, 3);
  const Context& ctx = *ctxp;
  for (const PeirceIndex& p1 : all_positions())
    for (const PeirceIndex& p2 : all_positions())
      for (const PeirceIndex& p3 : all_positions()) {
        std::string id = "D(" + pos_name(p1) + "," + pos_name(p2) + "," + pos_name(p3) + ")";
        r.run(id, "containment per the index-chaining rule", [&](SuiteItem& item) {
          CubicElement x = generic_at(p1, 1, ctx);
          CubicElement y = generic_at(p2, 2, ctx);
          CubicElement z = generic_at(p3, 3, ctx);
          CubicElement d = triple_D(x, y, z, ctx);
          std::set<PeirceIndex> targets = chain_targets(p1, p2, p3);
          std::set<PeirceIndex> support = peirce_memberships(d, ctx);
          if (targets.empty()) {
            r.check(item, support.empty(), "expected 0, got support in " +
                                                (support.empty() ? "" : pos_name(*support.begin())));
          } else {
            bool contained = std::includes(targets.begin(), targets.end(),
                                           support.begin(), support.end());
            r.check(item, contained, "support escapes the predicted component");
          }
        });
      }
  return report;
}

// ---------------------------------------------------------------------------
// linearization
// ---------------------------------------------------------------------------

SuiteReport suite_linearization(const SuiteOptions&) {
  SuiteReport report{"linearization", {}};
  ItemRunner r{report};
  ContextPtr ctxp = new_context(6, 6, 2);
  const Context& ctx = *ctxp;
  auto generic = [&ctx](int base) {
    CubicElement x;
    for (int i = 1; i <= 3; ++i) x.xi(i) = ScalarPoly::t(base + i);
    for (int i = 1; i <= 3; ++i)
      x.u(i) = ConicElement::gen(base + i, ctx);
    return x;
  };
  CubicElement x = generic(0), y = generic(3);
  r.run("sharp-linearization", "(x+y)# - x# - y# = x x y, fully indeterminate",
        [&](SuiteItem& item) {
          CubicElement lhs = sharp(x + y, ctx) - sharp(x, ctx) - sharp(y, ctx);
          r.check(item, lhs == cross(x, y, ctx), "linearization identity failed");
        });
  r.run("cross-symmetric", "x x y = y x x", [&](SuiteItem& item) {
    r.check(item, cross(x, y, ctx) == cross(y, x, ctx), "cross not symmetric");
  });
  r.run("T-symmetric", "T(x,y) = T(y,x)", [&](SuiteItem& item) {
    r.check(item, trace_T(x, y, ctx) == trace_T(y, x, ctx), "T not symmetric");
  });
  return report;
}

// ---------------------------------------------------------------------------
// l00
// ---------------------------------------------------------------------------

SuiteReport suite_l00(const SuiteOptions&) {
  SuiteReport report{"l00", {}};
  ItemRunner r{report};
  ContextPtr ctxp = new_context(6, 3, 4);
  const Context& ctx = *ctxp;
  ConicElement a1 = ConicElement::gen(1, ctx), a2 = ConicElement::gen(2, ctx);

  r.run("simplify-golden", "(tr(a1^2)-tr(a1)^2+2n(a1))*x + dd([a1]12,[a2]23)",
        [&](SuiteItem& item) {
          ScalarPoly lam = trace(a1 * a1, ctx) - trace(a1, ctx) * trace(a1, ctx) +
                           norm(a1, ctx).scaled(2);
          LieElement l = LieElement::x().scaled(lam) +
                         LieElement::dd(cubic_el(a1, 1, 2), cubic_el(a2, 2, 3));
          std::string got = render_lie(simplify_lie(l, ctx), ctx);
          r.check(item, got == "dd_{(1)[11],((g2)*(a2'*a1'))[31]}", "got: " + got);
        });
  r.run("dd-sanitize-merge", "t1 dd(c,d) + t2 dd(c,d) = (t1+t2) dd(c,d)",
        [&](SuiteItem& item) {
          CubicElement c = cubic_el(a1, 1, 2), d = cubic_el(a2, 2, 3);
          LieElement l = LieElement::dd(c, d).scaled(ScalarPoly::t(1)) +
                         LieElement::dd(c, d).scaled(ScalarPoly::t(2));
          L00Element got = dd_sanitize(l.l00, ctx);
          r.check(item, got.dd_terms.size() == 1, "terms did not merge");
          if (got.dd_terms.size() == 1)
            r.check(item,
                    got.dd_terms[0].coef == ScalarPoly::t(1) + ScalarPoly::t(2),
                    "wrong merged coefficient");
        });
  r.run("disjoint-vanishes", "dd([a1]12, [t1]33) = 0", [&](SuiteItem& item) {
    LieElement l = LieElement::dd(cubic_el(a1, 1, 2), cubic_el(ScalarPoly::t(1), 3, 3));
    r.check(item, simplify_lie(l, ctx).is_zero(), "disjoint dd-term survived");
  });
  r.run("dd33-rewrite", "dd([1]33,[1]33) = 2 zeta - xi - dd([1]11,[1]11) - dd([1]22,[1]22)",
        [&](SuiteItem& item) {
          CubicElement e33 = cubic_el(ScalarPoly::one(), 3, 3);
          L00Element got = simplify_l00(LieElement::dd(e33, e33).l00, ctx);
          L00Element expect;
          expect.xi_coef = ScalarPoly::constant(-1);
          expect.zeta_coef = ScalarPoly::constant(2);
          for (int i = 1; i <= 2; ++i)
            expect.dd_terms.push_back({ScalarPoly::constant(-1),
                                       cubic_el(ScalarPoly::one(), i, i),
                                       cubic_el(ScalarPoly::one(), i, i)});
          r.check(item, got == expect, "rule (4) mismatch");
        });
  r.run("mirror-pair", "dd([a1]12,[conj a2]21) + dd([a2]12,[conj a1]21) recombines",
        [&](SuiteItem& item) {
          LieElement l = LieElement::dd(cubic_el(a1, 1, 2), cubic_el(a2.conj(), 2, 1)) +
                         LieElement::dd(cubic_el(a2, 1, 2), cubic_el(a1.conj(), 2, 1));
          L00Element got = simplify_l00(l.l00, ctx);
          // gamma_1 gamma_2 tr(a1 conj(a2)) (dd([1]11,[1]11) + dd([1]22,[1]22)),
          // with the trace expanded by the scalar simplifier
          ScalarPoly t = simplify_scalar(
              ScalarPoly::gamma(1) * ScalarPoly::gamma(2) *
                  trace(a1 * a2.conj(), ctx),
              ctx);
          L00Element expect;
          for (int i = 1; i <= 2; ++i)
            expect.dd_terms.push_back({t, cubic_el(ScalarPoly::one(), i, i),
                                       cubic_el(ScalarPoly::one(), i, i)});
          r.check(item, got == expect, "rule (5) mismatch");
        });
  r.run("zero", "simplify(0) = 0", [&](SuiteItem& item) {
    r.check(item, simplify_lie(LieElement::zero(), ctx).is_zero(), "nonzero");
  });
  return report;
}

// ---------------------------------------------------------------------------
// exp-anchors
// ---------------------------------------------------------------------------

SuiteReport suite_exp_anchors(const SuiteOptions& opt) {
  SuiteReport report{"exp-anchors", {}};
  ItemRunner r{report};
  ContextPtr ctxp = new_context(6, 3, 4);
  const Context& ctx = *ctxp;
  Tables tables{opt.bracket, opt.twists};
  const BracketTable& bt = tables.bracket_or_core();
  const TwistTable& tw = tables.twists_or_core();
  ConicElement a1 = ConicElement::gen(1, ctx);

  r.run("bracket-x-y", "[x, y] = xi", [&](SuiteItem& item) {
    LieElement got = bracket(LieElement::x(), LieElement::y(), bt, ctx);
    r.check(item, render_lie(got, ctx) == "xi", "got: " + render_lie(got, ctx));
  });
  r.run("bracket-adp-adm", "[ad+_c, ad-_c] = -dd(c,c)", [&](SuiteItem& item) {
    CubicElement c = cubic_el(a1, 1, 2);
    LieElement got = bracket(LieElement::ad_pos(c), LieElement::ad_neg(c), bt, ctx);
    std::string s = render_lie(got, ctx);
    r.check(item, s == "(-1)*dd_{((1)*a1)[12],((1)*a1)[12]}", "got: " + s);
  });
  r.run("exp-x-on-y", "exp(x)(y) = y + xi + x", [&](SuiteItem& item) {
    LieElement got = Endomorphism::exp(LieElement::x(), ctx).apply(LieElement::y(), bt, ctx);
    std::string s = render_lie(got, ctx);
    r.check(item, s == "(1)*x + xi + (1)*y", "got: " + s);
  });
  r.run("grp-root-hom", "GrpRootHom([-2,0,0,0], 1)(y) = x + xi + y", [&](SuiteItem& item) {
    Endomorphism phi = grp_root_hom_f4(RootF4{-2, 0, 0, 0}, ScalarPoly::one(), tw, ctx);
    LieElement got = phi.apply(LieElement::y(), bt, ctx);
    std::string s = render_lie(got, ctx);
    r.check(item, s == "(1)*x + xi + (1)*y", "got: " + s);
  });
  r.run("lie-root-hom-anchors", "rho([1,0,0,1], a1) and rho([2,0,0,0], t1)",
        [&](SuiteItem& item) {
          LieElement got1 = lie_root_hom_f4(RootF4{1, 0, 0, 1}, a1, tw, ctx);
          LieElement want1 = LieElement::brown_pos(
              ScalarPoly::zero(), CubicElement::zero(),
              cubic_el(a1.scaled(ScalarPoly::gamma(1, -1)), 1, 2), ScalarPoly::zero());
          r.check(item, got1 == want1, "rho([1,0,0,1], a1) mismatch");
          r.check(item, render_lie(got1, ctx) == "[ 0, 0_J, ((1/g1)*a1)[12], 0 ]_+",
                  "rendering: " + render_lie(got1, ctx));
          LieElement got2 = lie_root_hom_f4(RootF4{2, 0, 0, 0}, ScalarPoly::t(1), tw, ctx);
          r.check(item, render_lie(got2, ctx) == "(-t1)*y",
                  "rho([2,0,0,0], t1) = " + render_lie(got2, ctx));
        });
  r.run("integrality", "exp actions have gamma-integral coefficients", [&](SuiteItem& item) {
    Endomorphism phi = grp_root_hom_f4(RootF4{-2, 0, 0, 0}, ScalarPoly::t(1), tw, ctx);
    LieElement got = phi.apply(LieElement::y(), bt, ctx);  // throws on violation
    r.check(item, !got.is_zero(), "unexpected zero");
  });
  return report;
}

// ---------------------------------------------------------------------------
// commutators
// ---------------------------------------------------------------------------

SuiteReport suite_commutators(const SuiteOptions& opt) {
  SuiteReport report{"commutators", {}};
  ItemRunner r{report};
  ContextPtr ctxp = new_context(6, 3, 4);
  const Context& ctx = *ctxp;
  Tables tables{opt.bracket, opt.twists};
  const BracketTable& bt = tables.bracket_or_core();
  const TwistTable& tw = tables.twists_or_core();

  RootF4 d2{-2, 0, 0, 0}, d3{1, -1, 0, 0}, d4{0, 1, 1, 0};
  auto hom = [&](const RootF4& root, const HomPayload& payload) {
    return grp_root_hom_f4(root, payload, tw, ctx);
  };
  auto commutator = [&](const RootF4& alpha, const HomPayload& s, const RootF4& beta,
                        const HomPayload& t) {
    auto negate_payload = [](const HomPayload& p) {
      if (std::holds_alternative<ScalarPoly>(p)) return HomPayload(-std::get<ScalarPoly>(p));
      return HomPayload(-std::get<ConicElement>(p));
    };
    return Endomorphism::compose(
        Endomorphism::compose(
            Endomorphism::compose(hom(alpha, negate_payload(s)), hom(beta, negate_payload(t))),
            hom(alpha, s)),
        hom(beta, t));
  };

  ConicElement a1 = ConicElement::gen(1, ctx), a2 = ConicElement::gen(2, ctx);
  ScalarPoly t1 = ScalarPoly::t(1);

  r.run("delta2-delta3",
        "[x_d2(t1), x_d3(a1)] = x_{d2+d3}(-t1 a1) x_{d2+2d3}(t1 n(a1))",
        [&](SuiteItem& item) {
          Endomorphism comm = commutator(d2, t1, d3, a1);
          Endomorphism rhs = Endomorphism::compose(
              hom(add(d2, d3), a1.scaled(-t1)),
              hom(add(d2, add(d3, d3)), t1 * norm(a1, ctx)));
          EqualityResult eq = test_equality(comm, rhs, 3, bt, tw, ctx);
          r.check(item, eq.equal, "residues: " + std::to_string(eq.residues.size()));
        });
  r.run("delta4-delta3",
        "[x_d4(a1), x_d3(a2)] vs x_{d3+d4}(conj(a2) conj(a1)): paper residue",
        [&](SuiteItem& item) {
          Endomorphism comm = commutator(d4, a1, d3, a2);
          Endomorphism rhs = hom(add(d3, d4), a2.conj() * a1.conj());
          EqualityResult eq = test_equality(comm, rhs, 3, bt, tw, ctx);
          r.check(item, !eq.equal && eq.residues.size() == 1, "expected exactly one residue");
          if (eq.residues.size() == 1) {
            const auto& [gen, res] = eq.residues.front();
            r.check(item, render_lie(gen, ctx) == "(1)*x",
                    "residue generator: " + render_lie(gen, ctx));
            std::string s = render_lie(res, ctx);
            r.check(item,
                    s == "dd_{(1)[22],((-n(a2)/g3)*a1+(1/g3)*((a1*a2)*a2'))[12]}",
                    "residue: " + s);
          }
        });
  return report;
}

// ---------------------------------------------------------------------------
// weyl
// ---------------------------------------------------------------------------

SuiteReport suite_weyl(const SuiteOptions& opt) {
  SuiteReport report{"weyl", {}};
  ItemRunner r{report};
  ContextPtr ctxp = new_context(6, 3, 4);
  const Context& ctx = *ctxp;
  Tables tables{opt.bracket, opt.twists};
  const BracketTable& bt = tables.bracket_or_core();
  const TwistTable& tw = tables.twists_or_core();
  for (const RootF4& delta : root_base()) {
    std::vector<WeylCheck> checks = weyl_suite(delta, tw, bt, ctx);
    for (const WeylCheck& c : checks) {
      SuiteItem item;
      item.id = "w_" + render_root(delta) + ":x_" + render_root(c.gamma);
      item.inputs = "conjugate lands in the root group of " + render_root(c.reflected);
      switch (c.status) {
        case WeylCheck::Status::Matched:
          item.status = Status::Pass;
          item.detail = "candidate " + std::to_string(c.candidate);
          break;
        case WeylCheck::Status::Residue:
          item.status = Status::Residue;
          item.detail = c.detail;
          break;
        case WeylCheck::Status::TableIncomplete:
          item.status = Status::TableIncomplete;
          item.detail = c.detail;
          break;
      }
      report.items.push_back(std::move(item));
    }
  }
  return report;
}

}  // namespace

// ---------------------------------------------------------------------------
// check-table
// ---------------------------------------------------------------------------

namespace {

struct AtomSpec {
  LieTag tag;
  std::optional<Slot> slot;           // for cubic payloads
  std::optional<Slot> dd_slot;        // DD: second payload position (ordered)
  std::string describe() const {
    std::string s = tag_name(tag);
    if (slot) s += "[" + std::to_string(slot->i) + std::to_string(slot->j) + "]";
    return s;
  }
};

// payloads for an atom spec; `which` picks the indeterminate (1, 2, 3).
std::vector<LiePayload> spec_payload(const AtomSpec& spec, int which, const Context& ctx) {
  if (spec.tag == LieTag::DD) {
    int i = spec.dd_slot->i, j = spec.dd_slot->j;
    return {LiePayload(cubic_el(ScalarPoly::one(), i, i)),
            LiePayload(cubic_el(ConicElement::gen(which, ctx), i, j))};
  }
  const auto& kinds = tag_payload_kinds(spec.tag);
  if (kinds[0] == PayloadKind::Scalar) return {LiePayload(ScalarPoly::t(which))};
  if (spec.slot->diagonal())
    return {LiePayload(cubic_el(ScalarPoly::t(which), spec.slot->i, spec.slot->i))};
  return {LiePayload(cubic_el(ConicElement::gen(which, ctx), spec.slot->i, spec.slot->j))};
}

std::optional<RootF4> spec_root(const AtomSpec& spec) {
  switch (spec.tag) {
    case LieTag::X: return RootF4{-2, 0, 0, 0};
    case LieTag::Y: return RootF4{2, 0, 0, 0};
    case LieTag::Xi:
    case LieTag::Zeta: return std::nullopt;
    case LieTag::BrownMinus1: return RootF4{-1, -1, -1, -1};
    case LieTag::BrownMinus4: return RootF4{-1, 1, 1, 1};
    case LieTag::BrownPlus1: return RootF4{1, -1, -1, -1};
    case LieTag::BrownPlus4: return RootF4{1, 1, 1, 1};
    case LieTag::DD: return fiber_root(RootG2{0, 0}, *spec.dd_slot);
    default: return fiber_root(tag_g2_degree(spec.tag), *spec.slot);
  }
}

std::vector<AtomSpec> specs_for_tag(LieTag t) {
  std::vector<AtomSpec> out;
  if (t == LieTag::DD) {
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j)
        if (i != j) out.push_back({t, std::nullopt, Slot{i, j}});
    return out;
  }
  const auto& kinds = tag_payload_kinds(t);
  if (kinds[0] == PayloadKind::Scalar) {
    out.push_back({t, std::nullopt, std::nullopt});
    return out;
  }
  for (const PeirceIndex& p : all_positions()) out.push_back({t, Slot{p.i, p.j}, std::nullopt});
  return out;
}

// F4 support of an element: the roots of every nonzero component, with
// (0,0,0,0) standing for L_0000.
std::set<RootF4> f4_support(const LieElement& raw, const Context& ctx) {
  LieElement m = simplify_lie(raw, ctx);
  std::set<RootF4> out;
  auto add_cubic = [&out](const CubicElement& c, RootG2 g2) {
    for (int i = 1; i <= 3; ++i)
      if (!c.xi(i).is_zero()) out.insert(fiber_root(g2, Slot{i, i}));
    for (const PeirceIndex& p : all_positions())
      if (!p.diagonal()) {
        SlotRef ref = off_slot(p.i, p.j);
        if (!c.u(ref.slot).is_zero()) out.insert(fiber_root(g2, Slot{p.i, p.j}));
      }
  };
  if (!m.x_coef.is_zero()) out.insert(RootF4{-2, 0, 0, 0});
  if (!m.y_coef.is_zero()) out.insert(RootF4{2, 0, 0, 0});
  if (!m.brown_minus.lambda.is_zero()) out.insert(RootF4{-1, -1, -1, -1});
  if (!m.brown_minus.mu.is_zero()) out.insert(RootF4{-1, 1, 1, 1});
  if (!m.brown_plus.lambda.is_zero()) out.insert(RootF4{1, -1, -1, -1});
  if (!m.brown_plus.mu.is_zero()) out.insert(RootF4{1, 1, 1, 1});
  add_cubic(m.brown_minus.c, RootG2{-1, -1});
  add_cubic(m.brown_minus.cprime, RootG2{-1, 0});
  add_cubic(m.brown_plus.c, RootG2{1, 0});
  add_cubic(m.brown_plus.cprime, RootG2{1, 1});
  add_cubic(m.ad_minus, RootG2{0, -1});
  add_cubic(m.ad_plus, RootG2{0, 1});
  if (!m.l00.xi_coef.is_zero() || !m.l00.zeta_coef.is_zero())
    out.insert(RootF4{0, 0, 0, 0});
  for (const DDTerm& t : m.l00.dd_terms) {
    LieElement single;
    single.l00.dd_terms.push_back(t);
    std::optional<RootF4> root = homogeneous_root(single, ctx);
    out.insert(root ? *root : RootF4{0, 0, 0, 0});
  }
  return out;
}

}  // namespace

SuiteReport check_table(const BracketTable& table) {
  SuiteReport report{"check-table", {}};
  ItemRunner r{report};
  ContextPtr ctxp = new_context(6, 3, 4);
  const Context& ctx = *ctxp;

  // grading closure, entry by entry
  for (const auto& [key, entry] : table.entries()) {
    std::string id = std::string("grading:[") + tag_name(entry.a) + "," + tag_name(entry.b) + "]";
    r.run(id, entry.rhs_text, [&](SuiteItem& item) {
      RootG2 da = tag_g2_degree(entry.a), db = tag_g2_degree(entry.b);
      RootG2 sum{da[0] + db[0], da[1] + db[1]};
      bool in_g2 = is_zero(sum) || is_root(sum);
      for (const AtomSpec& sa : specs_for_tag(entry.a))
        for (const AtomSpec& sb : specs_for_tag(entry.b)) {
          std::vector<LiePayload> args = spec_payload(sa, 1, ctx);
          std::vector<LiePayload> pb = spec_payload(sb, 2, ctx);
          args.insert(args.end(), pb.begin(), pb.end());
          LieElement result = entry.fn(args, ctx);
          if (!in_g2) {
            r.check(item, simplify_lie(result, ctx).is_zero(),
                    "entry must vanish: G2-degree sum " + std::to_string(sum[0]) + "," +
                        std::to_string(sum[1]) + " is not in G2^0");
            continue;
          }
          std::set<RootF4> support = f4_support(result, ctx);
          std::optional<RootF4> ra = spec_root(sa), rb = spec_root(sb);
          if (ra && rb) {
            RootF4 target = add(*ra, *rb);
            bool target_ok = is_zero(target) || is_root(target);
            for (const RootF4& s : support) {
              if (!target_ok)
                r.check(item, false,
                        sa.describe() + " x " + sb.describe() + ": must vanish, got " +
                            render_root(s));
              else
                r.check(item, s == target, sa.describe() + " x " + sb.describe() +
                                               ": component " + render_root(s) +
                                               " escapes " + render_root(target));
            }
          } else {
            // xi/zeta payloads: check the G2 component only
            for (const RootF4& s : support)
              r.check(item, pi(s) == sum, sa.describe() + " x " + sb.describe() +
                                              ": G2 component mismatch at " + render_root(s));
          }
        }
    });
  }

  // antisymmetry of (A, A) entries
  for (const auto& [key, entry] : table.entries()) {
    if (entry.a != entry.b) continue;
    std::string id = std::string("antisymmetry:[") + tag_name(entry.a) + "," +
                     tag_name(entry.b) + "]";
    r.run(id, "[m, m] = 0 on equal payloads", [&](SuiteItem& item) {
      for (const AtomSpec& sa : specs_for_tag(entry.a)) {
        std::vector<LiePayload> args = spec_payload(sa, 1, ctx);
        std::vector<LiePayload> pb = spec_payload(sa, 1, ctx);
        args.insert(args.end(), pb.begin(), pb.end());
        LieElement result = entry.fn(args, ctx);
        r.check(item, simplify_lie(result, ctx).is_zero(),
                sa.describe() + ": [m,m] != 0");
      }
    });
  }

  // Jacobi on 50 sampled atomic triples
  std::vector<AtomSpec> pool;
  for (int t = 0; t < kNumLieTags; ++t)
    for (const AtomSpec& s : specs_for_tag(LieTag(t))) pool.push_back(s);
  std::mt19937 rng(42);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int k = 0; k < 50; ++k) {
    AtomSpec sa = pool[pick(rng)], sb = pool[pick(rng)], sc = pool[pick(rng)];
    std::string id = "jacobi:" + std::to_string(k);
    r.run(id, sa.describe() + ", " + sb.describe() + ", " + sc.describe(),
          [&](SuiteItem& item) {
            LieElement a = atom_element(sa.tag, spec_payload(sa, 1, ctx));
            LieElement b = atom_element(sb.tag, spec_payload(sb, 2, ctx));
            LieElement c = atom_element(sc.tag, spec_payload(sc, 3, ctx));
            LieElement jac = bracket(bracket(a, b, table, ctx), c, table, ctx) +
                             bracket(bracket(b, c, table, ctx), a, table, ctx) +
                             bracket(bracket(c, a, table, ctx), b, table, ctx);
            r.check(item, simplify_lie(jac, ctx).is_zero(), "Jacobi residue");
          });
  }
  return report;
}

// ---------------------------------------------------------------------------
// dispatch and rendering
// ---------------------------------------------------------------------------

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "identities", "peirce", "linearization", "l00", "exp-anchors", "commutators", "weyl"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opt) {
  if (name == "identities") return suite_identities(opt);
  if (name == "peirce") return suite_peirce(opt);
  if (name == "linearization") return suite_linearization(opt);
  if (name == "l00") return suite_l00(opt);
  if (name == "exp-anchors") return suite_exp_anchors(opt);
  if (name == "commutators") return suite_commutators(opt);
  if (name == "weyl") return suite_weyl(opt);
  fail("unknown suite '" + name + "'");
}

int SuiteReport::exit_code() const {
  bool incomplete = false, bad = false;
  for (const SuiteItem& i : items) {
    if (i.status == SuiteItem::Status::TableIncomplete) incomplete = true;
    if (i.status == SuiteItem::Status::Residue || i.status == SuiteItem::Status::Fail)
      bad = true;
  }
  if (incomplete) return 2;
  return bad ? 1 : 0;
}

std::size_t SuiteReport::count(SuiteItem::Status s) const {
  std::size_t n = 0;
  for (const SuiteItem& i : items) n += (i.status == s);
  return n;
}

std::string render_text(const SuiteReport& r) {
  std::string out = "suite " + r.name + "\n";
  for (const SuiteItem& i : r.items) {
    out += "  [" + std::string(status_name(i.status)) + "] " + i.id;
    if (!i.detail.empty()) out += " -- " + i.detail;
    out += "\n";
  }
  out += "summary: " + std::to_string(r.count(SuiteItem::Status::Pass)) + " pass, " +
         std::to_string(r.count(SuiteItem::Status::Residue)) + " residue, " +
         std::to_string(r.count(SuiteItem::Status::TableIncomplete)) +
         " table-incomplete, " + std::to_string(r.count(SuiteItem::Status::Fail)) +
         " fail\n";
  return out;
}

std::string render_json(const SuiteReport& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.name;
  j["items"] = nlohmann::ordered_json::array();
  for (const SuiteItem& i : r.items) {
    nlohmann::ordered_json item;
    item["id"] = i.id;
    item["inputs"] = i.inputs;
    item["status"] = status_name(i.status);
    if (!i.detail.empty()) item["detail"] = i.detail;
    j["items"].push_back(item);
  }
  j["exit_code"] = r.exit_code();
  return j.dump(2) + "\n";
}

}  // namespace cjma
