#include "cjma/dsl.hpp"

#include "cjma/render.hpp"

#include <regex>

namespace cjma {

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Scalar: return "scalar";
    case Kind::Conic: return "conic";
    case Kind::Cubic: return "cubic";
    case Kind::Lie: return "lie";
    case Kind::Endo: return "endo";
  }
  return "?";
}

Kind kind_of_value(const Value& v) {
  switch (v.index()) {
    case 0: return Kind::Scalar;
    case 1: return Kind::Conic;
    case 2: return Kind::Cubic;
    case 3: return Kind::Lie;
    default: return Kind::Endo;
  }
}

const BracketTable& Tables::bracket_or_core() const {
  return bracket ? *bracket : BracketTable::core();
}
const TwistTable& Tables::twists_or_core() const {
  return twists ? *twists : TwistTable::core();
}

namespace {

[[noreturn]] void kind_error(const Expr& e, const std::string& msg) {
  throw ParseError("kind error: " + msg, e.line, e.col);
}

struct BuiltinIdent {
  enum class Type { Scalar, Gamma, Conic, LieConst } type;
  int index;
};

std::optional<BuiltinIdent> builtin_ident(const std::string& name) {
  static const std::regex t_re("^t([0-9]+)$"), a_re("^a([0-9]+)$"), g_re("^g([1-3])$");
  std::smatch m;
  if (std::regex_match(name, m, t_re))
    return BuiltinIdent{BuiltinIdent::Type::Scalar, std::stoi(m[1])};
  if (std::regex_match(name, m, a_re))
    return BuiltinIdent{BuiltinIdent::Type::Conic, std::stoi(m[1])};
  if (std::regex_match(name, m, g_re))
    return BuiltinIdent{BuiltinIdent::Type::Gamma, std::stoi(m[1])};
  if (name == "x" || name == "y" || name == "xi" || name == "zeta")
    return BuiltinIdent{BuiltinIdent::Type::LieConst, 0};
  return std::nullopt;
}

int expect_int_literal(const Expr& e) {
  if (e.op != Expr::Op::Number || !is_integer(e.number))
    kind_error(e, "expected an integer literal");
  return int(numerator(e.number));
}

RootF4 expect_root(const Expr& e) {
  if (e.op != Expr::Op::Vector || e.vec.size() != 4)
    kind_error(e, "expected a 4-component root vector");
  return RootF4{e.vec[0], e.vec[1], e.vec[2], e.vec[3]};
}

struct CallSig {
  const char* name;
  int arity;  // -1: variable
};

}  // namespace

Kind infer_kind(const Expr& e, const KindEnv& env) {
  switch (e.op) {
    case Expr::Op::Number: return Kind::Scalar;
    case Expr::Op::Ident: {
      auto it = env.find(e.name);
      if (it != env.end()) return it->second;
      auto b = builtin_ident(e.name);
      if (!b) kind_error(e, "unknown identifier '" + e.name + "'");
      switch (b->type) {
        case BuiltinIdent::Type::Scalar:
        case BuiltinIdent::Type::Gamma: return Kind::Scalar;
        case BuiltinIdent::Type::Conic: return Kind::Conic;
        case BuiltinIdent::Type::LieConst: return Kind::Lie;
      }
      kind_error(e, "unknown identifier");
    }
    case Expr::Op::Vector:
      kind_error(e, "a root vector is only valid as a call argument");
    case Expr::Op::Add:
    case Expr::Op::Sub: {
      Kind a = infer_kind(*e.args[0], env), b = infer_kind(*e.args[1], env);
      if (a != b)
        kind_error(e, std::string("cannot add ") + kind_name(a) + " and " + kind_name(b));
      if (a == Kind::Endo) kind_error(e, "endomorphisms cannot be added");
      return a;
    }
    case Expr::Op::Neg: {
      Kind a = infer_kind(*e.args[0], env);
      if (a == Kind::Endo) kind_error(e, "endomorphisms cannot be negated");
      return a;
    }
    case Expr::Op::Mul: {
      Kind a = infer_kind(*e.args[0], env), b = infer_kind(*e.args[1], env);
      if (a == Kind::Scalar) return b == Kind::Endo ? (kind_error(e, "cannot scale an endomorphism"), a) : b;
      if (b == Kind::Scalar) return a == Kind::Endo ? (kind_error(e, "cannot scale an endomorphism"), a) : a;
      if (a == Kind::Conic && b == Kind::Conic) return Kind::Conic;
      if (a == Kind::Lie && b == Kind::Lie) return Kind::Lie;    // bracket
      if (a == Kind::Endo && b == Kind::Endo) return Kind::Endo; // composition
      kind_error(e, std::string("no product of ") + kind_name(a) + " and " + kind_name(b));
    }
    case Expr::Op::Pow: {
      Kind a = infer_kind(*e.args[0], env);
      if (!is_integer(e.number)) kind_error(e, "exponent must be an integer");
      if (a == Kind::Scalar || a == Kind::Conic || a == Kind::Endo) return a;
      kind_error(e, std::string(kind_name(a)) + " cannot be raised to a power");
    }
    case Expr::Op::Prime: {
      Kind a = infer_kind(*e.args[0], env);
      if (a != Kind::Conic) kind_error(e, "prime conjugation applies to conic elements");
      return Kind::Conic;
    }
    case Expr::Op::Call: break;
  }

  // calls
  const std::string& f = e.name;
  auto need = [&](int n) {
    if (int(e.args.size()) != n)
      kind_error(e, f + " expects " + std::to_string(n) + " argument(s)");
  };
  auto arg_kind = [&](std::size_t i) { return infer_kind(*e.args[i], env); };
  auto require = [&](std::size_t i, Kind k) {
    Kind a = arg_kind(i);
    if (a != k)
      kind_error(*e.args[i], f + ": expected " + kind_name(k) + ", got " + kind_name(a));
  };

  if (f == "conj") { need(1); require(0, Kind::Conic); return Kind::Conic; }
  if (f == "tr" || f == "n") { need(1); require(0, Kind::Conic); return Kind::Scalar; }
  if (f == "CubicEl") {
    need(3);
    Kind a = arg_kind(0);
    if (a != Kind::Scalar && a != Kind::Conic)
      kind_error(*e.args[0], "CubicEl: expected scalar or conic entry");
    expect_int_literal(*e.args[1]);
    expect_int_literal(*e.args[2]);
    return Kind::Cubic;
  }
  if (f == "dd") { need(2); require(0, Kind::Cubic); require(1, Kind::Cubic); return Kind::Lie; }
  if (f == "adPos" || f == "adNeg") { need(1); require(0, Kind::Cubic); return Kind::Lie; }
  if (f == "BrownPos" || f == "BrownNeg") {
    need(4);
    require(0, Kind::Scalar);
    require(1, Kind::Cubic);
    require(2, Kind::Cubic);
    require(3, Kind::Scalar);
    return Kind::Lie;
  }
  if (f == "LieRootHom" || f == "GrpRootHom") {
    need(2);
    expect_root(*e.args[0]);
    Kind a = arg_kind(1);
    if (a != Kind::Scalar && a != Kind::Conic)
      kind_error(*e.args[1], f + ": expected scalar or conic payload");
    return f == "LieRootHom" ? Kind::Lie : Kind::Endo;
  }
  if (f == "exp") { need(1); require(0, Kind::Lie); return Kind::Endo; }
  if (f == "apply") { need(2); require(0, Kind::Endo); require(1, Kind::Lie); return Kind::Lie; }
  if (f == "simplify") {
    need(1);
    Kind a = arg_kind(0);
    if (a == Kind::Endo) kind_error(e, "simplify does not apply to endomorphisms");
    return a;
  }
  kind_error(e, "unknown function '" + f + "'");
}

namespace {

ScalarPoly scalar_pow(const ScalarPoly& p, int exp, const Expr& e) {
  if (exp >= 0) return p.pow(exp);
  if (p.terms().size() != 1) kind_error(e, "negative power of a non-monomial scalar");
  const auto& [mono, coef] = *p.terms().begin();
  for (auto& [v, ex] : mono.factors)
    if (v.kind != IndetKind::Gamma)
      kind_error(e, "negative power is only defined for gamma monomials");
  ScalarPoly inv = ScalarPoly::monomial(mono.pow(-1), Rational(1) / coef);
  return inv.pow(-exp);
}

Value simplify_impl(const Value& v, const Context& ctx) {
  switch (v.index()) {
    case 0: return simplify_scalar(std::get<ScalarPoly>(v), ctx);
    case 1: return simplify_conic(std::get<ConicElement>(v), ctx);
    case 2: return simplify_cubic(std::get<CubicElement>(v), ctx);
    case 3: return simplify_lie(std::get<LieElement>(v), ctx);
    default: fail("simplify does not apply to endomorphisms");
  }
}

}  // namespace

Value simplify_value(const Value& v, const Context& ctx) { return simplify_impl(v, ctx); }

Value eval(const Expr& e, const Context& ctx, const Tables& tables, const ValueEnv& env) {
  auto ev = [&](std::size_t i) { return eval(*e.args[i], ctx, tables, env); };
  auto as_scalar = [](const Value& v) { return std::get<ScalarPoly>(v); };
  auto as_conic = [](const Value& v) { return std::get<ConicElement>(v); };
  auto as_cubic = [](const Value& v) { return std::get<CubicElement>(v); };
  auto as_lie = [](const Value& v) { return std::get<LieElement>(v); };

  switch (e.op) {
    case Expr::Op::Number: return ScalarPoly::constant(e.number);
    case Expr::Op::Ident: {
      auto it = env.find(e.name);
      if (it != env.end()) return it->second;
      auto b = builtin_ident(e.name);
      if (!b) kind_error(e, "unknown identifier '" + e.name + "'");
      switch (b->type) {
        case BuiltinIdent::Type::Scalar:
          ctx.check_scalar_index(b->index);
          return ScalarPoly::t(b->index);
        case BuiltinIdent::Type::Gamma: return ScalarPoly::gamma(b->index);
        case BuiltinIdent::Type::Conic: return ConicElement::gen(b->index, ctx);
        case BuiltinIdent::Type::LieConst:
          if (e.name == "x") return LieElement::x();
          if (e.name == "y") return LieElement::y();
          if (e.name == "xi") return LieElement::xi();
          return LieElement::zeta();
      }
      kind_error(e, "unknown identifier");
    }
    case Expr::Op::Vector:
      kind_error(e, "a root vector is only valid as a call argument");
    case Expr::Op::Add:
    case Expr::Op::Sub: {
      Value a = ev(0), b = ev(1);
      bool sub = e.op == Expr::Op::Sub;
      if (a.index() != b.index())
        kind_error(e, "cannot add values of different kinds");
      switch (a.index()) {
        case 0: return sub ? as_scalar(a) - as_scalar(b) : as_scalar(a) + as_scalar(b);
        case 1: return sub ? as_conic(a) - as_conic(b) : as_conic(a) + as_conic(b);
        case 2: return sub ? as_cubic(a) - as_cubic(b) : as_cubic(a) + as_cubic(b);
        case 3: return sub ? as_lie(a) - as_lie(b) : as_lie(a) + as_lie(b);
        default: kind_error(e, "endomorphisms cannot be added");
      }
    }
    case Expr::Op::Neg: {
      Value a = ev(0);
      switch (a.index()) {
        case 0: return -as_scalar(a);
        case 1: return -as_conic(a);
        case 2: return -as_cubic(a);
        case 3: return -as_lie(a);
        default: kind_error(e, "endomorphisms cannot be negated");
      }
    }
    case Expr::Op::Mul: {
      Value a = ev(0), b = ev(1);
      if (a.index() == 0 && b.index() != 4) {
        ScalarPoly s = as_scalar(a);
        switch (b.index()) {
          case 0: return s * as_scalar(b);
          case 1: return as_conic(b).scaled(s);
          case 2: return as_cubic(b).scaled(s);
          default: return as_lie(b).scaled(s);
        }
      }
      if (b.index() == 0 && a.index() != 4) {
        ScalarPoly s = as_scalar(b);
        switch (a.index()) {
          case 1: return as_conic(a).scaled(s);
          case 2: return as_cubic(a).scaled(s);
          default: return as_lie(a).scaled(s);
        }
      }
      if (a.index() == 1 && b.index() == 1) return as_conic(a) * as_conic(b);
      if (a.index() == 3 && b.index() == 3)
        return bracket(as_lie(a), as_lie(b), tables.bracket_or_core(), ctx);
      if (a.index() == 4 && b.index() == 4)
        return Endomorphism::compose(std::get<Endomorphism>(a), std::get<Endomorphism>(b));
      kind_error(e, "no product for these kinds");
    }
    case Expr::Op::Pow: {
      Value a = ev(0);
      int exp = int(numerator(e.number));
      switch (a.index()) {
        case 0: return scalar_pow(as_scalar(a), exp, e);
        case 1: {
          if (exp < 0) kind_error(e, "conic elements have no inverses");
          if (exp == 0) return ConicElement::one();
          ConicElement out = as_conic(a);
          for (int i = 1; i < exp; ++i) out = out * as_conic(a);
          return out;
        }
        case 4: {
          const Endomorphism& f = std::get<Endomorphism>(a);
          if (exp == 0) return Endomorphism::identity();
          Endomorphism base = exp > 0 ? f : f.inverse();
          int n = exp > 0 ? exp : -exp;
          Endomorphism out = base;
          for (int i = 1; i < n; ++i) out = Endomorphism::compose(out, base);
          return out;
        }
        default: kind_error(e, "this kind cannot be raised to a power");
      }
    }
    case Expr::Op::Prime: {
      Value a = ev(0);
      if (a.index() != 1) kind_error(e, "prime conjugation applies to conic elements");
      return as_conic(a).conj();
    }
    case Expr::Op::Call: break;
  }

  const std::string& f = e.name;
  if (f == "conj") return std::get<ConicElement>(ev(0)).conj();
  if (f == "tr") return trace(std::get<ConicElement>(ev(0)), ctx);
  if (f == "n") return norm(std::get<ConicElement>(ev(0)), ctx);
  if (f == "CubicEl") {
    Value a = ev(0);
    int i = expect_int_literal(*e.args[1]);
    int j = expect_int_literal(*e.args[2]);
    if (i < 1 || i > 3 || j < 1 || j > 3)
      kind_error(e, "CubicEl position indices must lie in 1..3");
    if (a.index() == 0) return cubic_el(std::get<ScalarPoly>(a), i, j);
    return cubic_el(std::get<ConicElement>(a), i, j);
  }
  if (f == "dd") return LieElement::dd(std::get<CubicElement>(ev(0)), std::get<CubicElement>(ev(1)));
  if (f == "adPos") return LieElement::ad_pos(std::get<CubicElement>(ev(0)));
  if (f == "adNeg") return LieElement::ad_neg(std::get<CubicElement>(ev(0)));
  if (f == "BrownPos" || f == "BrownNeg") {
    ScalarPoly lam = std::get<ScalarPoly>(ev(0));
    CubicElement c = std::get<CubicElement>(ev(1));
    CubicElement cp = std::get<CubicElement>(ev(2));
    ScalarPoly mu = std::get<ScalarPoly>(ev(3));
    return f == "BrownPos" ? LieElement::brown_pos(lam, c, cp, mu)
                           : LieElement::brown_neg(lam, c, cp, mu);
  }
  if (f == "LieRootHom" || f == "GrpRootHom") {
    RootF4 alpha = expect_root(*e.args[0]);
    Value b = ev(1);
    HomPayload payload = b.index() == 0 ? HomPayload(std::get<ScalarPoly>(b))
                                        : HomPayload(std::get<ConicElement>(b));
    if (f == "LieRootHom")
      return lie_root_hom_f4(alpha, payload, tables.twists_or_core(), ctx);
    return grp_root_hom_f4(alpha, payload, tables.twists_or_core(), ctx);
  }
  if (f == "exp") return Endomorphism::exp(std::get<LieElement>(ev(0)), ctx);
  if (f == "apply")
    return std::get<Endomorphism>(ev(0)).apply(std::get<LieElement>(ev(1)),
                                               tables.bracket_or_core(), ctx);
  if (f == "simplify") return simplify_impl(ev(0), ctx);
  kind_error(e, "unknown function '" + f + "'");
}

std::string render_value(const Value& v, const Context& ctx) {
  switch (v.index()) {
    case 0: return render_scalar(std::get<ScalarPoly>(v), ctx);
    case 1: return render_conic(std::get<ConicElement>(v), ctx);
    case 2: return render_cubic(std::get<CubicElement>(v), ctx);
    case 3: return render_lie(std::get<LieElement>(v), ctx);
    default: {
      const auto& f = std::get<Endomorphism>(v).factors();
      return "<endomorphism: " + std::to_string(f.size()) + " exp factor(s)>";
    }
  }
}

}  // namespace cjma
