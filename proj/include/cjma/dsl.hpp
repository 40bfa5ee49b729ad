#ifndef CJMA_DSL_HPP
#define CJMA_DSL_HPP

#include "cjma/endo.hpp"

#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace cjma {

enum class Kind { Scalar, Conic, Cubic, Lie, Endo };
const char* kind_name(Kind k);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Abstract syntax of the expression language shared by the CLI and the
/// bracket-table files.
struct Expr {
  enum class Op {
    Number,  // rational literal (value in `number`)
    Ident,   // t1, a2, g1..g3, x, y, xi, zeta, or a bound parameter
    Vector,  // [p,i,j,l] — valid only as a root argument
    Add, Sub, Neg, Mul, Pow, Prime, Call,
  };
  Op op;
  Rational number;            // Number value; Pow exponent
  std::string name;           // Ident / Call
  std::vector<ExprPtr> args;
  std::vector<int> vec;       // Vector
  int line = 1, col = 1;
};

ExprPtr parse(const std::string& text);
std::string render_expr(const Expr& e);
bool expr_equal(const Expr& a, const Expr& b);

using Value = std::variant<ScalarPoly, ConicElement, CubicElement, LieElement, Endomorphism>;
Kind kind_of_value(const Value& v);

struct Tables {
  const BracketTable* bracket = nullptr;  // nullptr: the built-in core
  const TwistTable* twists = nullptr;     // nullptr: the built-in core
  const BracketTable& bracket_or_core() const;
  const TwistTable& twists_or_core() const;
};

using KindEnv = std::map<std::string, Kind>;
using ValueEnv = std::map<std::string, Value>;

/// Well-kindedness check; throws ParseError with the offending position.
Kind infer_kind(const Expr& e, const KindEnv& env = {});

Value eval(const Expr& e, const Context& ctx, const Tables& tables,
           const ValueEnv& env = {});

std::string render_value(const Value& v, const Context& ctx);
Value simplify_value(const Value& v, const Context& ctx);

}  // namespace cjma

#endif
