#include "cjma/conic.hpp"

namespace cjma {

int compare(const ConicElement& a, const ConicElement& b) {
  auto i = a.terms().begin(), j = b.terms().begin();
  while (i != a.terms().end() && j != b.terms().end()) {
    if (i->first != j->first) return i->first < j->first ? -1 : 1;
    int c = compare(i->second, j->second);
    if (c != 0) return c;
    ++i, ++j;
  }
  if (i != a.terms().end()) return 1;
  if (j != b.terms().end()) return -1;
  return 0;
}

ScalarPoly trace(const ConicElement& x, const Context& ctx) {
  ScalarPoly out;
  for (auto& [w, c] : x.terms()) out = out + c * trace_of_word(w, ctx);
  return out;
}

ScalarPoly norm(const ConicElement& x, const Context& ctx) {
  ScalarPoly out;
  for (auto i = x.terms().begin(); i != x.terms().end(); ++i) {
    out = out + i->second * i->second * norm_of_word(i->first, ctx);
    for (auto j = std::next(i); j != x.terms().end(); ++j) {
      ConicWord cross = ConicWord::product(i->first, j->first.conj());
      out = out + i->second * j->second * trace_of_word(cross, ctx);
    }
  }
  return out;
}

namespace {

// Smallest (w1, w2, position) with w1 < w2 differing only by a conjugated
// subtree at that position.
struct ConjPair {
  ConicWord w1, w2;
  std::size_t pos;
};

std::optional<ConjPair> find_conj_pair(const ConicElement& x) {
  for (auto i = x.terms().begin(); i != x.terms().end(); ++i) {
    const ConicWord& w1 = i->first;
    if (w1.is_unit()) continue;
    for (auto j = std::next(i); j != x.terms().end(); ++j) {
      const ConicWord& w2 = j->first;
      if (w2.length() != w1.length()) continue;
      for (std::size_t pos = 0; pos < w1.size(); ++pos) {
        ConicWord sub = w1.subtree(pos);
        if (w1.replace(pos, sub.conj()) == w2) return ConjPair{w1, w2, pos};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

ConicElement simplify_conic(const ConicElement& x, const Context& ctx) {
  ConicElement cur = x;
  while (auto pair = find_conj_pair(cur)) {
    ScalarPoly c1 = cur.terms().at(pair->w1);
    ScalarPoly c2 = cur.terms().at(pair->w2);
    ConicWord sub = pair->w1.subtree(pair->pos);
    ScalarPoly tr_sub = trace_of_word(sub, ctx);
    ConicElement next;
    for (auto& [w, c] : cur.terms())
      if (w != pair->w1 && w != pair->w2) next.add_word(w, c);
    next.add_word(pair->w1, c1 - c2);
    next.add_word(pair->w1.replace(pair->pos, ConicWord::unit()), c2 * tr_sub);
    cur = next;
  }
  ConicElement out;
  for (auto& [w, c] : cur.terms()) out.add_word(w, simplify_scalar(c, ctx));
  return out;
}

}  // namespace cjma
