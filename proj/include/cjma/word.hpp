#ifndef CJMA_WORD_HPP
#define CJMA_WORD_HPP

#include <compare>
#include <cstdint>
#include <vector>

namespace cjma {

/// Nonassociative word over the conic generators a1.. and their conjugates,
/// stored as a preorder token sequence. Each subtree is a contiguous token
/// range, so a token index doubles as a subtree position. The token values
/// are chosen so that plain lexicographic comparison of the sequences
/// realizes the canonical word order: Gen(1) < ... < Gen(m2) < ConjGen(1)
/// < ... < ConjGen(m2) < product, with left subtrees compared before right.
class ConicWord {
 public:
  using Token = std::int32_t;
  static constexpr Token kUnit = 0;
  static constexpr Token kConjBase = 1 << 16;
  static constexpr Token kProd = 1 << 24;

  ConicWord() : code_{kUnit} {}

  static ConicWord unit() { return ConicWord(); }
  static ConicWord gen(int i) { return ConicWord({Token(i)}); }
  static ConicWord conj_gen(int i) { return ConicWord({kConjBase + Token(i)}); }

  /// Free product with unit absorption (the unit never appears under a
  /// product node).
  static ConicWord product(const ConicWord& l, const ConicWord& r) {
    if (l.is_unit()) return r;
    if (r.is_unit()) return l;
    std::vector<Token> code;
    code.reserve(1 + l.code_.size() + r.code_.size());
    code.push_back(kProd);
    code.insert(code.end(), l.code_.begin(), l.code_.end());
    code.insert(code.end(), r.code_.begin(), r.code_.end());
    return ConicWord(std::move(code));
  }

  bool is_unit() const { return code_.size() == 1 && code_[0] == kUnit; }
  bool is_leaf() const { return code_.size() == 1 && code_[0] != kUnit; }
  bool is_product() const { return code_[0] == kProd; }

  /// Number of generator leaves; 0 for the unit word.
  std::size_t length() const {
    if (is_unit()) return 0;
    std::size_t n = 0;
    for (Token t : code_)
      if (t != kProd) ++n;
    return n;
  }

  static bool token_is_conj(Token t) { return t >= kConjBase && t < kProd; }
  static int token_index(Token t) {
    return int(token_is_conj(t) ? t - kConjBase : t);
  }
  static Token token_conj(Token t) {
    return token_is_conj(t) ? t - kConjBase : t + kConjBase;
  }

  /// Leaf accessors (valid when is_leaf()).
  bool leaf_is_conj() const { return token_is_conj(code_[0]); }
  int leaf_index() const { return token_index(code_[0]); }

  ConicWord left() const {
    std::size_t b = 1, e = subtree_end(1);
    return ConicWord(std::vector<Token>(code_.begin() + b, code_.begin() + e));
  }
  ConicWord right() const {
    std::size_t b = subtree_end(1);
    return ConicWord(std::vector<Token>(code_.begin() + b, code_.end()));
  }

  /// Conjugate: reverses every product and swaps Gen <-> ConjGen;
  /// fixes the unit.
  ConicWord conj() const {
    if (is_unit()) return *this;
    std::vector<Token> out;
    out.reserve(code_.size());
    conj_rec(0, out);
    return ConicWord(std::move(out));
  }

  /// Subtree positions in preorder = token indices of subtree starts.
  std::size_t size() const { return code_.size(); }
  bool pos_is_product(std::size_t pos) const { return code_[pos] == kProd; }
  ConicWord subtree(std::size_t pos) const {
    std::size_t e = subtree_end(pos);
    return ConicWord(std::vector<Token>(code_.begin() + pos, code_.begin() + e));
  }

  /// Replaces the subtree at `pos` with `repl`, collapsing units.
  ConicWord replace(std::size_t pos, const ConicWord& repl) const {
    ConicWord out = ConicWord(std::vector<Token>{});
    replace_rec(0, pos, repl, out);
    if (out.code_.empty()) out.code_.push_back(kUnit);
    return out;
  }

  /// Leaf tokens in left-to-right order.
  std::vector<Token> letters() const {
    std::vector<Token> ls;
    if (is_unit()) return ls;
    for (Token t : code_)
      if (t != kProd) ls.push_back(t);
    return ls;
  }

  /// Left comb over a letter sequence: ((l1*l2)*l3)*...
  static ConicWord from_letters_left(const std::vector<Token>& ls) {
    ConicWord w(std::vector<Token>{ls.at(0)});
    for (std::size_t i = 1; i < ls.size(); ++i)
      w = product(w, ConicWord(std::vector<Token>{ls[i]}));
    return w;
  }
  /// Right comb: l1*(l2*(l3*...))
  static ConicWord from_letters_right(const std::vector<Token>& ls) {
    ConicWord w(std::vector<Token>{ls.back()});
    for (std::size_t i = ls.size() - 1; i-- > 0;)
      w = product(ConicWord(std::vector<Token>{ls[i]}), w);
    return w;
  }

  auto operator<=>(const ConicWord& o) const = default;
  bool operator==(const ConicWord& o) const = default;

  const std::vector<Token>& code() const { return code_; }

 private:
  explicit ConicWord(std::vector<Token> code) : code_(std::move(code)) {}

  std::size_t subtree_end(std::size_t pos) const {
    std::size_t need = 1, i = pos;
    while (need > 0) {
      if (code_[i] == kProd)
        need += 1;  // consumed one node, expect two children
      else
        need -= 1;
      ++i;
    }
    return i;
  }

  void conj_rec(std::size_t pos, std::vector<Token>& out) const {
    if (code_[pos] == kProd) {
      std::size_t rb = subtree_end(pos + 1);
      out.push_back(kProd);
      conj_rec(rb, out);       // conj of right first
      conj_rec(pos + 1, out);  // then conj of left
    } else {
      out.push_back(token_conj(code_[pos]));
    }
  }

  // Rebuilds the tree with the subtree at `target` replaced, dropping unit
  // children of products. Appends the encoding of the rebuilt subtree at
  // `pos` to out.code_ (empty encoding = unit).
  void replace_rec(std::size_t pos, std::size_t target, const ConicWord& repl,
                   ConicWord& out) const {
    if (pos == target) {
      if (!repl.is_unit())
        out.code_.insert(out.code_.end(), repl.code_.begin(), repl.code_.end());
      return;
    }
    if (code_[pos] != kProd) {
      out.code_.push_back(code_[pos]);
      return;
    }
    std::size_t lb = pos + 1, rb = subtree_end(lb);
    ConicWord l(std::vector<Token>{}), r(std::vector<Token>{});
    if (target >= lb && target < rb)
      replace_rec(lb, target, repl, l);
    else
      l.code_.assign(code_.begin() + lb, code_.begin() + rb);
    std::size_t re = subtree_end(rb);
    if (target >= rb && target < re)
      replace_rec(rb, target, repl, r);
    else
      r.code_.assign(code_.begin() + rb, code_.begin() + re);
    if (l.code_.empty()) {
      out.code_.insert(out.code_.end(), r.code_.begin(), r.code_.end());
    } else if (r.code_.empty()) {
      out.code_.insert(out.code_.end(), l.code_.begin(), l.code_.end());
    } else {
      out.code_.push_back(kProd);
      out.code_.insert(out.code_.end(), l.code_.begin(), l.code_.end());
      out.code_.insert(out.code_.end(), r.code_.begin(), r.code_.end());
    }
  }

  std::vector<Token> code_;
};

}  // namespace cjma

#endif
