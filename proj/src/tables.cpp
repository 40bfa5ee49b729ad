#include "cjma/dsl.hpp"

#include <fstream>
#include <sstream>

namespace cjma {

namespace {

const char* kCoreBracketText = R"(# Core bracket entries.
# Format: one entry per line,
#   <TagA> <TagB> : <params of A> <params of B> -> <expression>
# Parameter kinds follow the tags (scalar for X/Y/Xi/Zeta and the outer
# Brown slots, cubic for the J-slots; DD binds two cubic parameters).
# Pairs whose G2-degree sum falls outside G2^0 are zero and need no entry;
# [B,A] is derived from [A,B] by antisymmetry. Everything else must be
# listed explicitly or bracket evaluation reports the missing pair.
X Y : s t -> (s*t)*xi
X Xi : s t -> (2*s*t)*x
AdPlus AdMinus : c d -> -dd(c,d)
)";

const char* kCoreTwistText = R"(# Twist assignments: <root> : <eps> <tau1> <tau2> <tau3>
# Unlisted roots default to eps = 1, tau = (0,0,0).
2 0 0 0 : -1 0 0 0
1 0 0 1 : 1 -1 0 0
)";

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

// Rejects table expressions that would recurse into the bracket engine or
// build endomorphisms.
void validate_entry_expr(const Expr& e, const KindEnv& env) {
  if (e.op == Expr::Op::Mul) {
    Kind a = infer_kind(*e.args[0], env), b = infer_kind(*e.args[1], env);
    if (a == Kind::Lie && b == Kind::Lie)
      throw ParseError("bracket entries may not use the bracket themselves", e.line, e.col);
  }
  if (e.op == Expr::Op::Call &&
      (e.name == "exp" || e.name == "apply" || e.name == "GrpRootHom"))
    throw ParseError("bracket entries may not build endomorphisms", e.line, e.col);
  for (const ExprPtr& a : e.args) validate_entry_expr(*a, env);
}

}  // namespace

BracketTable BracketTable::load_text(const std::string& text, const std::string& origin) {
  BracketTable table;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::string s = strip(line);
    if (s.empty() || s[0] == '#') continue;
    auto where = [&] { return origin + ":" + std::to_string(lineno); };
    std::size_t colon = s.find(':');
    std::size_t arrow = s.find("->");
    if (colon == std::string::npos || arrow == std::string::npos || arrow < colon)
      fail(where() + ": expected '<TagA> <TagB> : <params> -> <expr>'");
    std::vector<std::string> tags = split_ws(s.substr(0, colon));
    if (tags.size() != 2) fail(where() + ": expected exactly two component tags");
    auto ta = tag_from_name(tags[0]), tb = tag_from_name(tags[1]);
    if (!ta || !tb) fail(where() + ": unknown component tag");
    std::vector<std::string> params = split_ws(s.substr(colon + 1, arrow - colon - 1));
    std::vector<PayloadKind> kinds = tag_payload_kinds(*ta);
    const auto& kb = tag_payload_kinds(*tb);
    kinds.insert(kinds.end(), kb.begin(), kb.end());
    if (params.size() != kinds.size())
      fail(where() + ": expected " + std::to_string(kinds.size()) + " parameter name(s)");
    KindEnv env;
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (env.count(params[i])) fail(where() + ": duplicate parameter name");
      env[params[i]] = kinds[i] == PayloadKind::Scalar ? Kind::Scalar : Kind::Cubic;
    }
    std::string rhs_text = strip(s.substr(arrow + 2));
    ExprPtr rhs;
    try {
      rhs = parse(rhs_text);
      if (infer_kind(*rhs, env) != Kind::Lie)
        fail("entry expression must have lie kind");
      validate_entry_expr(*rhs, env);
    } catch (const Error& err) {
      fail(where() + ": " + err.what());
    }
    Entry entry;
    entry.a = *ta;
    entry.b = *tb;
    entry.params = params;
    entry.rhs_text = rhs_text;
    entry.fn = [rhs, params](const std::vector<LiePayload>& payloads,
                             const Context& ctx) -> LieElement {
      ValueEnv venv;
      for (std::size_t i = 0; i < params.size(); ++i) {
        if (std::holds_alternative<ScalarPoly>(payloads[i]))
          venv.emplace(params[i], std::get<ScalarPoly>(payloads[i]));
        else
          venv.emplace(params[i], std::get<CubicElement>(payloads[i]));
      }
      return std::get<LieElement>(eval(*rhs, ctx, Tables{}, venv));
    };
    table.add(std::move(entry));
  }
  return table;
}

BracketTable BracketTable::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open bracket table file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return load_text(buf.str(), path);
}

const BracketTable& BracketTable::core() {
  static const BracketTable table = load_text(kCoreBracketText, "<core>");
  return table;
}

TwistTable TwistTable::load_text(const std::string& text, const std::string& origin) {
  TwistTable table;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::string s = strip(line);
    if (s.empty() || s[0] == '#') continue;
    auto where = [&] { return origin + ":" + std::to_string(lineno); };
    std::size_t colon = s.find(':');
    if (colon == std::string::npos)
      fail(where() + ": expected '<root> : <eps> <tau1> <tau2> <tau3>'");
    std::vector<std::string> left = split_ws(s.substr(0, colon));
    std::vector<std::string> right = split_ws(s.substr(colon + 1));
    if (left.size() != 4 || right.size() != 4)
      fail(where() + ": expected four root coordinates and four twist values");
    RootF4 root;
    Twist tw;
    try {
      for (int i = 0; i < 4; ++i) root[std::size_t(i)] = std::stoi(left[std::size_t(i)]);
      tw.eps = std::stoi(right[0]);
      for (int i = 0; i < 3; ++i) tw.tau[std::size_t(i)] = std::stoi(right[std::size_t(i + 1)]);
    } catch (const std::exception&) {
      fail(where() + ": malformed integer");
    }
    if (!is_root(root)) fail(where() + ": " + render_root(root) + " is not an F4 root");
    if (tw.eps != 1 && tw.eps != -1) fail(where() + ": eps must be +-1");
    for (int t : tw.tau)
      if (t < -1 || t > 1) fail(where() + ": tau values must lie in {-1,0,1}");
    table.set(root, tw);
  }
  return table;
}

TwistTable TwistTable::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open twist table file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return load_text(buf.str(), path);
}

const TwistTable& TwistTable::core() {
  static const TwistTable table = load_text(kCoreTwistText, "<core>");
  return table;
}

}  // namespace cjma
