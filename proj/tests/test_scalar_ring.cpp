#include "cjma/conic.hpp"
#include "cjma/oracle.hpp"
#include "cjma/render.hpp"

#include <doctest.h>

#include <random>

using namespace cjma;

namespace {

// The rank-2 conic algebra k[x]/(x^2 - x): elements s + t x with
// n(s + t x) = s^2 + s t, hence tr(s + t x) = 2 s + t.
struct Rank2 {
  Rational s, t;
  Rank2 operator*(const Rank2& o) const {
    return {s * o.s, s * o.t + t * o.s + t * o.t};
  }
  Rational n() const { return s * s + s * t; }
  Rational tr() const { return 2 * s + t; }
  Rank2 conj() const { return {s + t, -t}; }
};

ConicAssignment random_assignment(std::mt19937& rng, int m2, int m1 = 0) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  auto q = [&] { return Rational(num(rng), den(rng)); };
  ConicAssignment asg;
  for (int i = 0; i < m2; ++i) asg.gens.push_back({q(), q(), q(), q()});
  for (int i = 0; i < m1; ++i) asg.scalars.push_back(q());
  return asg;
}

}  // namespace

TEST_CASE("context bounds") {
  CHECK_THROWS_AS(Context(-1, 2, 3), ConfigError);
  CHECK_THROWS_AS(Context(0, 0, 3), ConfigError);
  CHECK_THROWS_AS(Context(0, 1, 1), ConfigError);
  ContextPtr minimal = new_context(0, 1, 2);
  CHECK(minimal->m2() == 1);
  ContextPtr paper = new_context(1, 2, 3);
  CHECK(paper->m1() == 1);
  ContextPtr jordan = new_context(6, 3, 4);
  CHECK(jordan->m3() == 4);
}

TEST_CASE("registry is deterministic across constructions") {
  ContextPtr a = new_context(1, 2, 3), b = new_context(1, 2, 3);
  CHECK(a->trace_registry() == b->trace_registry());
  CHECK(!a->trace_registry().empty());
}

TEST_CASE("scalar arithmetic") {
  ContextPtr ctxp = new_context(2, 2, 3);
  ScalarPoly t1 = ScalarPoly::t(1), t2 = ScalarPoly::t(2);
  CHECK((t1 + (-t1)).is_zero());
  CHECK(ScalarPoly::gamma(3) * ScalarPoly::gamma(3, -1) == ScalarPoly::one());
  ScalarPoly sq = (t1 + t2) * (t1 + t2);
  CHECK(sq == t1 * t1 + t1 * t2.scaled(2) + t2 * t2);
  CHECK(ScalarPoly::gamma(2).gamma_inverse(2) == ScalarPoly::one());
  CHECK(ScalarPoly::constant(Rational(1, 2)).is_gamma_integral() == false);
  CHECK(ScalarPoly::gamma(1, -3).is_gamma_integral());
}

TEST_CASE("equality after canonicalization is a congruence") {
  // equal inputs (built along different routes) stay equal under arithmetic
  ScalarPoly a = ScalarPoly::t(1) + ScalarPoly::t(2);
  ScalarPoly b = ScalarPoly::t(2) + ScalarPoly::t(1);
  CHECK(a == b);
  CHECK(a * ScalarPoly::gamma(1) == b * ScalarPoly::gamma(1));
  CHECK(a + a == b + b);
  CHECK(-a == -b);
}

TEST_CASE("canonical trace word: top-level swap picks the lexicographic minimum") {
  ContextPtr ctxp = new_context(1, 2, 3);
  ConicWord w = ConicWord::product(ConicWord::gen(2), ConicWord::gen(1));
  CanonicalTrace ct = ctxp->canonical_trace_word(w);
  CHECK(ct.coeff == 1);
  CHECK(ct.norm_factors.empty());
  REQUIRE(ct.rep.has_value());
  CHECK(*ct.rep == ConicWord::product(ConicWord::gen(1), ConicWord::gen(2)));
}

TEST_CASE("canonical trace word: a1 conj(a1) fully reduces to 2 n(a1)") {
  // Independent oracle first: in k[x]/(x^2-x), tr(a conj(a)) = 2 n(a).
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  for (int k = 0; k < 25; ++k) {
    Rank2 a{Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
    CHECK((a * a.conj()).tr() == 2 * a.n());
  }
  ContextPtr ctxp = new_context(1, 2, 3);
  ConicWord w = ConicWord::product(ConicWord::gen(1), ConicWord::conj_gen(1));
  CanonicalTrace ct = ctxp->canonical_trace_word(w);
  CHECK(ct.coeff == 2);
  CHECK(ct.norm_factors == std::vector<int>{1});
  CHECK(!ct.rep.has_value());
}

TEST_CASE("canonical trace word: associativity and cyclicity in length 3") {
  ContextPtr ctxp = new_context(1, 3, 3);
  ConicWord a = ConicWord::gen(1), b = ConicWord::gen(2), c = ConicWord::gen(3);
  ConicWord lhs = ConicWord::product(ConicWord::product(a, b), c);
  ConicWord rhs = ConicWord::product(a, ConicWord::product(b, c));
  CHECK(ctxp->canonical_trace_word(lhs).rep == ctxp->canonical_trace_word(rhs).rep);
  // cyclic rotation
  ConicWord rot = ConicWord::product(ConicWord::product(b, c), a);
  CHECK(ctxp->canonical_trace_word(lhs).rep == ctxp->canonical_trace_word(rot).rep);
}

TEST_CASE("canonical trace word is idempotent on the whole registry") {
  ContextPtr ctxp = new_context(1, 2, 3);
  for (const ConicWord& rep : ctxp->trace_registry()) {
    CanonicalTrace ct = ctxp->canonical_trace_word(rep);
    CHECK(ct.coeff == 1);
    CHECK(ct.norm_factors.empty());
    REQUIRE(ct.rep.has_value());
    CHECK(*ct.rep == rep);
  }
}

TEST_CASE("trace length overflow") {
  ContextPtr ctxp = new_context(1, 2, 3);
  ConicWord a1 = ConicWord::gen(1), a2 = ConicWord::gen(2);
  ConicWord w4 = ConicWord::product(ConicWord::product(a1, a1), ConicWord::product(a2, a2));
  CHECK_THROWS_AS(ctxp->canonical_trace_word(w4), TraceLengthOverflow);
}

TEST_CASE("canonicalization preserves trace values in the 2x2 matrix model") {
  ContextPtr ctxp = new_context(0, 2, 3);
  const Context& ctx = *ctxp;
  // all words of length <= 3 over two generators
  std::vector<ConicWord> words;
  for (int i = 1; i <= 2; ++i) {
    words.push_back(ConicWord::gen(i));
    words.push_back(ConicWord::conj_gen(i));
  }
  std::vector<ConicWord> len1 = words;
  std::vector<ConicWord> len2;
  for (const ConicWord& a : len1)
    for (const ConicWord& b : len1) len2.push_back(ConicWord::product(a, b));
  std::vector<ConicWord> len3;
  for (const ConicWord& a : len1)
    for (const ConicWord& b : len2) {
      len3.push_back(ConicWord::product(a, b));
      len3.push_back(ConicWord::product(b, a));
    }
  std::vector<ConicWord> all = len1;
  all.insert(all.end(), len2.begin(), len2.end());
  all.insert(all.end(), len3.begin(), len3.end());

  std::mt19937 rng(20240809);
  for (int inst = 0; inst < 20; ++inst) {
    ConicAssignment asg = random_assignment(rng, 2);
    for (const ConicWord& w : all) {
      Rational direct = eval_word(w, asg).tr();
      Rational via_canon = eval_scalar(trace_of_word(w, ctx), asg, ctx);
      CHECK(direct == via_canon);
    }
  }
}

TEST_CASE("simplify_scalar golden substitutions") {
  ContextPtr ctxp = new_context(1, 2, 3);
  const Context& ctx = *ctxp;
  ConicWord a1 = ConicWord::gen(1), a2 = ConicWord::gen(2);

  SUBCASE("tr(a1 conj(a2)) -> tr(a1)tr(a2) - tr(a1a2)") {
    ScalarPoly in = trace_of_word(ConicWord::product(a1, a2.conj()), ctx);
    ScalarPoly t_a1 = trace_of_word(a1, ctx), t_a2 = trace_of_word(a2, ctx);
    ScalarPoly t_a1a2 = trace_of_word(ConicWord::product(a1, a2), ctx);
    CHECK(simplify_scalar(in, ctx) == t_a1 * t_a2 - t_a1a2);
  }
  SUBCASE("tr(a1a1) -> tr(a1)^2 - 2 n(a1)") {
    ScalarPoly in = trace_of_word(ConicWord::product(a1, a1), ctx);
    ScalarPoly t_a1 = trace_of_word(a1, ctx);
    CHECK(simplify_scalar(in, ctx) == t_a1 * t_a1 - ScalarPoly::norm_indet(1).scaled(2));
  }
  SUBCASE("gamma t1 is a fixpoint") {
    ScalarPoly p = ScalarPoly::gamma(1) * ScalarPoly::t(1);
    CHECK(simplify_scalar(p, ctx) == p);
  }
}

TEST_CASE("simplify_scalar is semantics-preserving and idempotent") {
  ContextPtr ctxp = new_context(0, 2, 3);
  const Context& ctx = *ctxp;
  std::mt19937 rng(99);
  // random polynomials in the trace indeterminates
  std::uniform_int_distribution<int> coef(-4, 4);
  std::vector<ScalarPoly> gens;
  for (const ConicWord& w : ctx.trace_registry())
    gens.push_back(ScalarPoly::indet(ScalarIndet::trace(ctx.trace_id(w))));
  for (int i = 1; i <= 2; ++i) gens.push_back(ScalarPoly::norm_indet(i));
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  for (int inst = 0; inst < 20; ++inst) {
    ScalarPoly p;
    for (int t = 0; t < 4; ++t)
      p = p + (gens[pick(rng)] * gens[pick(rng)]).scaled(coef(rng));
    ScalarPoly s = simplify_scalar(p, ctx);
    CHECK(simplify_scalar(s, ctx) == s);
    ConicAssignment asg = random_assignment(rng, 2);
    CHECK(eval_scalar(p, asg, ctx) == eval_scalar(s, asg, ctx));
  }
}

TEST_CASE("scalar rendering") {
  ContextPtr ctxp = new_context(2, 3, 3);
  const Context& ctx = *ctxp;
  CHECK(render_scalar(ScalarPoly::zero(), ctx) == "0");
  CHECK(render_scalar(ScalarPoly::one(), ctx) == "1");
  CHECK(render_scalar(ScalarPoly::constant(-2), ctx) == "-2");
  CHECK(render_scalar(ScalarPoly::t(1) + ScalarPoly::t(2), ctx) == "t1+t2");
  CHECK(render_scalar(ScalarPoly::gamma(1, -1), ctx) == "1/g1");
  ScalarPoly m = ScalarPoly::norm_indet(2).scaled(-1) * ScalarPoly::gamma(3, -1);
  CHECK(render_scalar(m, ctx) == "-n(a2)/g3");
  ScalarPoly big = ScalarPoly::gamma(1) * ScalarPoly::gamma(2) * ScalarPoly::t(1) *
                   trace_of_word(ConicWord::product(ConicWord::gen(2), ConicWord::gen(3)), ctx);
  CHECK(render_scalar(big, ctx) == "g1*g2*t1*tr(a2a3)");
}
