#include "cjma/scalar_poly.hpp"

#include <map>

namespace cjma {

int compare(const ScalarPoly& a, const ScalarPoly& b) {
  auto i = a.terms().begin(), j = b.terms().begin();
  while (i != a.terms().end() && j != b.terms().end()) {
    if (i->first != j->first) return i->first < j->first ? -1 : 1;
    if (i->second != j->second) return i->second < j->second ? -1 : 1;
    ++i, ++j;
  }
  if (i != a.terms().end()) return 1;
  if (j != b.terms().end()) return -1;
  return 0;
}

ScalarPoly trace_of_word(const ConicWord& w, const Context& ctx) {
  if (w.is_unit()) return ScalarPoly::constant(2);
  CanonicalTrace ct = ctx.canonical_trace_word(w);
  ScalarPoly out = ScalarPoly::constant(ct.coeff);
  for (int i : ct.norm_factors) out = out * ScalarPoly::norm_indet(i);
  if (ct.rep) out = out * ScalarPoly::indet(ScalarIndet::trace(ctx.trace_id(*ct.rep)));
  return out;
}

ScalarPoly norm_of_word(const ConicWord& w, const Context&) {
  ScalarPoly out = ScalarPoly::one();
  for (ConicWord::Token t : w.letters())
    out = out * ScalarPoly::norm_indet(ConicWord::token_index(t));
  return out;
}

namespace {

bool is_square_word(const ConicWord& w) {
  // exactly a_i * a_i
  if (!w.is_product()) return false;
  ConicWord l = w.left(), r = w.right();
  return l.is_leaf() && !l.leaf_is_conj() && l == r;
}

std::size_t first_conj_leaf(const ConicWord& w) {
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    if (w.pos_is_product(pos)) continue;
    ConicWord sub = w.subtree(pos);
    if (sub.is_leaf() && sub.leaf_is_conj()) return pos;
  }
  return w.size();
}

// tr of a canonical word with all length-2/3 conjugate expansions and the
// tr(a_i a_i) substitution applied, recursively.
ScalarPoly expanded_trace(const ConicWord& w, const Context& ctx,
                          std::map<ConicWord, ScalarPoly>& memo) {
  if (w.is_unit()) return ScalarPoly::constant(2);
  auto it = memo.find(w);
  if (it != memo.end()) return it->second;

  ScalarPoly result;
  CanonicalTrace ct = ctx.canonical_trace_word(w);
  ScalarPoly factor = ScalarPoly::constant(ct.coeff);
  for (int i : ct.norm_factors) factor = factor * ScalarPoly::norm_indet(i);
  if (!ct.rep) {
    result = factor;
  } else {
    const ConicWord& rep = *ct.rep;
    std::size_t len = rep.length();
    std::size_t conj_pos = (len == 2 || len == 3) ? first_conj_leaf(rep) : rep.size();
    if (conj_pos < rep.size()) {
      // tr(..conj(a_i)..) = tr(a_i) tr(..1..) - tr(..a_i..)
      int gen = rep.subtree(conj_pos).leaf_index();
      ScalarPoly tr_gen = expanded_trace(ConicWord::gen(gen), ctx, memo);
      ScalarPoly dropped = expanded_trace(rep.replace(conj_pos, ConicWord::unit()), ctx, memo);
      ScalarPoly swapped = expanded_trace(rep.replace(conj_pos, ConicWord::gen(gen)), ctx, memo);
      result = factor * (tr_gen * dropped - swapped);
    } else if (is_square_word(rep)) {
      int gen = rep.left().leaf_index();
      ScalarPoly tr_gen = ScalarPoly::indet(ScalarIndet::trace(ctx.trace_id(ConicWord::gen(gen))));
      result = factor * (tr_gen * tr_gen - ScalarPoly::norm_indet(gen).scaled(2));
    } else {
      result = factor * ScalarPoly::indet(ScalarIndet::trace(ctx.trace_id(rep)));
    }
  }
  memo[w] = result;
  return result;
}

}  // namespace

ScalarPoly simplify_scalar(const ScalarPoly& p, const Context& ctx) {
  std::map<ConicWord, ScalarPoly> memo;
  ScalarPoly out;
  for (auto& [mono, coef] : p.terms()) {
    ScalarPoly term = ScalarPoly::constant(coef);
    for (auto& [indet, exp] : mono.factors) {
      if (indet.kind != IndetKind::Trace) {
        term = term * ScalarPoly::indet(indet, exp);
        continue;
      }
      const ConicWord& word = ctx.trace_word(indet.index);
      std::size_t len = word.length();
      bool expandable = ((len == 2 || len == 3) && first_conj_leaf(word) < word.size()) ||
                        is_square_word(word);
      if (!expandable) {
        term = term * ScalarPoly::indet(indet, exp);
        continue;
      }
      ScalarPoly repl = expanded_trace(word, ctx, memo);
      for (int k = 0; k < exp; ++k) term = term * repl;
    }
    out = out + term;
  }
  return out;
}

}  // namespace cjma
