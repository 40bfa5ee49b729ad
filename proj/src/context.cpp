#include "cjma/context.hpp"

#include <algorithm>
#include <set>

namespace cjma {

namespace {

// Orbit of w under the implemented equivalences: conj-reversal (a) and
// top-level swap (b) for any length, plus cyclicity and reassociation (c)
// for words of exactly three letters.
std::set<ConicWord> orbit_of(const ConicWord& w) {
  std::set<ConicWord> orbit;
  if (w.length() == 3) {
    auto add_seq = [&orbit](std::vector<ConicWord::Token> ls) {
      for (int rot = 0; rot < 3; ++rot) {
        orbit.insert(ConicWord::from_letters_left(ls));
        orbit.insert(ConicWord::from_letters_right(ls));
        std::rotate(ls.begin(), ls.begin() + 1, ls.end());
      }
    };
    auto ls = w.letters();
    add_seq(ls);
    std::vector<ConicWord::Token> rev;
    for (auto it = ls.rbegin(); it != ls.rend(); ++it)
      rev.push_back(ConicWord::token_conj(*it));
    add_seq(rev);
    return orbit;
  }
  orbit.insert(w);
  orbit.insert(w.conj());
  if (w.is_product()) {
    orbit.insert(ConicWord::product(w.right(), w.left()));
    ConicWord c = w.conj();
    orbit.insert(ConicWord::product(c.right(), c.left()));
  }
  return orbit;
}

// First position (in the first orbit element that has one) of a product
// subtree of the form s * conj(s).
struct Redex {
  ConicWord word;
  std::size_t pos;
};

std::optional<Redex> find_redex(const std::set<ConicWord>& orbit) {
  for (const ConicWord& u : orbit) {
    for (std::size_t pos = 0; pos < u.size(); ++pos) {
      if (!u.pos_is_product(pos)) continue;
      ConicWord sub = u.subtree(pos);
      if (sub.left().conj() == sub.right()) return Redex{u, pos};
    }
  }
  return std::nullopt;
}

void enumerate_words(int m2, int max_len, std::vector<std::vector<ConicWord>>& by_len) {
  by_len.assign(std::size_t(max_len) + 1, {});
  for (int i = 1; i <= m2; ++i) by_len[1].push_back(ConicWord::gen(i));
  for (int i = 1; i <= m2; ++i) by_len[1].push_back(ConicWord::conj_gen(i));
  for (int len = 2; len <= max_len; ++len)
    for (int l = 1; l < len; ++l)
      for (const ConicWord& a : by_len[std::size_t(l)])
        for (const ConicWord& b : by_len[std::size_t(len - l)])
          by_len[std::size_t(len)].push_back(ConicWord::product(a, b));
}

}  // namespace

Context::Context(int m1, int m2, int m3) : m1_(m1), m2_(m2), m3_(m3) {
  if (m1 < 0 || m2 < 1 || m3 < 2)
    throw ConfigError("new_context requires m1 >= 0, m2 >= 1, m3 >= 2 (got " +
                      std::to_string(m1) + ", " + std::to_string(m2) + ", " +
                      std::to_string(m3) + ")");
  std::set<ConicWord> reps;
  std::vector<std::vector<ConicWord>> by_len;
  enumerate_words(m2, m3, by_len);
  for (int len = 1; len <= m3; ++len)
    for (const ConicWord& w : by_len[std::size_t(len)]) {
      CanonicalTrace ct = canonical_trace_word(w);
      if (ct.rep) reps.insert(*ct.rep);
    }
  registry_.assign(reps.begin(), reps.end());
  for (std::size_t i = 0; i < registry_.size(); ++i)
    registry_index_[registry_[i]] = int(i);
}

int Context::trace_id(const ConicWord& w) const {
  auto it = registry_index_.find(w);
  if (it == registry_index_.end())
    fail("internal: word is not a canonical trace representative");
  return it->second;
}

CanonicalTrace Context::canonical_trace_word(const ConicWord& w) const {
  check_trace_length(w.length());
  if (w.is_unit()) fail("canonical_trace_word: unit word is not a trace word");
  CanonicalTrace out;
  ConicWord cur = w;
  for (;;) {
    std::set<ConicWord> orbit = orbit_of(cur);
    std::optional<Redex> redex = find_redex(orbit);
    if (!redex) {
      out.rep = *orbit.begin();
      std::sort(out.norm_factors.begin(), out.norm_factors.end());
      return out;
    }
    ConicWord sub = redex->word.subtree(redex->pos);
    for (ConicWord::Token t : sub.left().letters())
      out.norm_factors.push_back(ConicWord::token_index(t));
    ConicWord next = redex->word.replace(redex->pos, ConicWord::unit());
    if (next.is_unit()) {
      out.coeff *= 2;  // tr(1_C) = 2
      std::sort(out.norm_factors.begin(), out.norm_factors.end());
      return out;
    }
    cur = next;
  }
}

}  // namespace cjma
