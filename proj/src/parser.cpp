#include "cjma/dsl.hpp"

#include <cctype>

namespace cjma {

namespace {

struct Token {
  enum class Type { Int, Ident, Sym, End } type;
  std::string text;
  int line, col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }
  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      if (text_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= text_.size()) {
      tok_ = {Token::Type::End, "", line_, col_};
      return;
    }
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string s;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        s += text_[pos_++];
        ++col_;
      }
      tok_ = {Token::Type::Int, s, tok_.line, tok_.col};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string s;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        s += text_[pos_++];
        ++col_;
      }
      tok_ = {Token::Type::Ident, s, tok_.line, tok_.col};
      return;
    }
    static const std::string kSyms = "+-*^'()[],/";
    if (kSyms.find(c) != std::string::npos) {
      tok_ = {Token::Type::Sym, std::string(1, c), tok_.line, tok_.col};
      ++pos_;
      ++col_;
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_{Token::Type::End, "", 1, 1};
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  ExprPtr parse_all() {
    ExprPtr e = parse_expr();
    const Token& t = lex_.peek();
    if (t.type != Token::Type::End)
      throw ParseError("unexpected trailing input '" + t.text + "'", t.line, t.col);
    return e;
  }

 private:
  static ExprPtr make(Expr::Op op, int line, int col) {
    auto e = std::make_shared<Expr>();
    e->op = op;
    e->line = line;
    e->col = col;
    return e;
  }

  bool at_sym(const char* s) const {
    return lex_.peek().type == Token::Type::Sym && lex_.peek().text == s;
  }
  Token expect_sym(const char* s) {
    if (!at_sym(s)) {
      const Token& t = lex_.peek();
      throw ParseError("expected '" + std::string(s) + "'", t.line, t.col);
    }
    return lex_.next();
  }

  ExprPtr parse_expr() {
    ExprPtr left = parse_term();
    while (at_sym("+") || at_sym("-")) {
      Token op = lex_.next();
      ExprPtr right = parse_term();
      auto e = make(op.text == "+" ? Expr::Op::Add : Expr::Op::Sub, op.line, op.col);
      std::const_pointer_cast<Expr>(e)->args = {left, right};
      left = e;
    }
    return left;
  }

  ExprPtr parse_term() {
    ExprPtr left = parse_unary();
    while (at_sym("*")) {
      Token op = lex_.next();
      ExprPtr right = parse_unary();
      auto e = make(Expr::Op::Mul, op.line, op.col);
      std::const_pointer_cast<Expr>(e)->args = {left, right};
      left = e;
    }
    return left;
  }

  ExprPtr parse_unary() {
    if (at_sym("-")) {
      Token op = lex_.next();
      ExprPtr inner = parse_unary();
      auto e = make(Expr::Op::Neg, op.line, op.col);
      std::const_pointer_cast<Expr>(e)->args = {inner};
      return e;
    }
    return parse_postfix();
  }

  ExprPtr parse_postfix() {
    ExprPtr e = parse_primary();
    for (;;) {
      if (at_sym("'")) {
        Token op = lex_.next();
        auto p = make(Expr::Op::Prime, op.line, op.col);
        std::const_pointer_cast<Expr>(p)->args = {e};
        e = p;
      } else if (at_sym("^")) {
        Token op = lex_.next();
        bool neg = false;
        if (at_sym("-")) {
          lex_.next();
          neg = true;
        }
        const Token& t = lex_.peek();
        if (t.type != Token::Type::Int)
          throw ParseError("expected integer exponent", t.line, t.col);
        Token num = lex_.next();
        auto p = make(Expr::Op::Pow, op.line, op.col);
        auto pw = std::const_pointer_cast<Expr>(p);
        pw->args = {e};
        pw->number = Rational(BigInt(num.text));
        if (neg) pw->number = -pw->number;
        e = p;
      } else {
        break;
      }
    }
    return e;
  }

  ExprPtr parse_primary() {
    const Token& t = lex_.peek();
    switch (t.type) {
      case Token::Type::Int: {
        Token num = lex_.next();
        auto e = make(Expr::Op::Number, num.line, num.col);
        auto w = std::const_pointer_cast<Expr>(e);
        w->number = Rational(BigInt(num.text));
        if (at_sym("/")) {
          lex_.next();
          const Token& d = lex_.peek();
          if (d.type != Token::Type::Int)
            throw ParseError("expected integer denominator", d.line, d.col);
          Token den = lex_.next();
          BigInt dv(den.text);
          if (dv == 0) throw ParseError("zero denominator", den.line, den.col);
          w->number /= Rational(dv);
        }
        return e;
      }
      case Token::Type::Ident: {
        Token id = lex_.next();
        if (at_sym("(")) return parse_call(id);
        auto e = make(Expr::Op::Ident, id.line, id.col);
        std::const_pointer_cast<Expr>(e)->name = id.text;
        return e;
      }
      case Token::Type::Sym:
        if (t.text == "(") {
          lex_.next();
          ExprPtr e = parse_expr();
          expect_sym(")");
          return e;
        }
        if (t.text == "[") return parse_vector();
        throw ParseError("unexpected '" + t.text + "'", t.line, t.col);
      case Token::Type::End:
        throw ParseError("unexpected end of input", t.line, t.col);
    }
    throw ParseError("unexpected input", t.line, t.col);
  }

  ExprPtr parse_vector() {
    Token open = expect_sym("[");
    auto e = make(Expr::Op::Vector, open.line, open.col);
    auto w = std::const_pointer_cast<Expr>(e);
    for (;;) {
      bool neg = false;
      if (at_sym("-")) {
        lex_.next();
        neg = true;
      }
      const Token& t = lex_.peek();
      if (t.type != Token::Type::Int)
        throw ParseError("expected integer in vector", t.line, t.col);
      Token num = lex_.next();
      int v = std::stoi(num.text);
      w->vec.push_back(neg ? -v : v);
      if (at_sym(",")) {
        lex_.next();
        continue;
      }
      break;
    }
    expect_sym("]");
    return e;
  }

  ExprPtr parse_call(const Token& id) {
    expect_sym("(");
    auto e = make(Expr::Op::Call, id.line, id.col);
    auto w = std::const_pointer_cast<Expr>(e);
    w->name = id.text;
    if (!at_sym(")")) {
      for (;;) {
        w->args.push_back(parse_expr());
        if (at_sym(",")) {
          lex_.next();
          continue;
        }
        break;
      }
    }
    expect_sym(")");
    return e;
  }

  Lexer lex_;
};

std::string paren(const std::string& s) { return "(" + s + ")"; }

}  // namespace

ExprPtr parse(const std::string& text) { return Parser(text).parse_all(); }

std::string render_expr(const Expr& e) {
  switch (e.op) {
    case Expr::Op::Number: return to_string(e.number);
    case Expr::Op::Ident: return e.name;
    case Expr::Op::Vector: {
      std::string s = "[";
      for (std::size_t i = 0; i < e.vec.size(); ++i)
        s += (i ? "," : "") + std::to_string(e.vec[i]);
      return s + "]";
    }
    case Expr::Op::Add: return paren(render_expr(*e.args[0]) + "+" + render_expr(*e.args[1]));
    case Expr::Op::Sub: return paren(render_expr(*e.args[0]) + "-" + render_expr(*e.args[1]));
    case Expr::Op::Neg: return paren("-" + render_expr(*e.args[0]));
    case Expr::Op::Mul: return paren(render_expr(*e.args[0]) + "*" + render_expr(*e.args[1]));
    case Expr::Op::Pow: {
      BigInt n = numerator(e.number);
      return paren(render_expr(*e.args[0]) + "^" + n.str());
    }
    case Expr::Op::Prime: return paren(render_expr(*e.args[0]) + "'");
    case Expr::Op::Call: {
      std::string s = e.name + "(";
      for (std::size_t i = 0; i < e.args.size(); ++i)
        s += (i ? "," : "") + render_expr(*e.args[i]);
      return s + ")";
    }
  }
  return "?";
}

bool expr_equal(const Expr& a, const Expr& b) {
  if (a.op != b.op || a.number != b.number || a.name != b.name || a.vec != b.vec ||
      a.args.size() != b.args.size())
    return false;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!expr_equal(*a.args[i], *b.args[i])) return false;
  return true;
}

}  // namespace cjma
