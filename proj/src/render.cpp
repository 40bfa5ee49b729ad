#include "cjma/render.hpp"

#include "cjma/jordan.hpp"
#include "cjma/lie.hpp"

#include <algorithm>

namespace cjma {

namespace {

std::string leaf_name(ConicWord::Token t) {
  std::string s = "a" + std::to_string(ConicWord::token_index(t));
  if (ConicWord::token_is_conj(t)) s += "'";
  return s;
}

// Inner form of a trace word: flat letters for lengths up to 3 (the
// rewrite relation includes associativity there), bracketed by tree shape
// beyond that.
std::string trace_word_inner(const ConicWord& w) {
  if (w.length() <= 3) {
    std::string s;
    for (ConicWord::Token t : w.letters()) s += leaf_name(t);
    return s;
  }
  if (w.is_leaf()) return leaf_name(w.code()[0]);
  auto wrap = [](const ConicWord& c) {
    return c.is_leaf() ? trace_word_inner(c) : "(" + trace_word_inner(c) + ")";
  };
  return wrap(w.left()) + wrap(w.right());
}

// Render order on monomials: higher total degree first, then the earliest
// indeterminate with a differing exponent decides, higher exponent first.
bool render_before(const Monomial& a, const Monomial& b) {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da > db;
  auto i = a.factors.begin(), j = b.factors.begin();
  while (i != a.factors.end() || j != b.factors.end()) {
    if (j == b.factors.end()) return i->second > 0;
    if (i == a.factors.end()) return j->second < 0;
    if (i->first == j->first) {
      if (i->second != j->second) return i->second > j->second;
      ++i, ++j;
    } else if (i->first < j->first) {
      return i->second > 0;
    } else {
      return j->second < 0;
    }
  }
  return false;
}

}  // namespace

std::string render_indet(const ScalarIndet& v, const Context& ctx) {
  switch (v.kind) {
    case IndetKind::Gamma: return "g" + std::to_string(v.index);
    case IndetKind::Scalar: return "t" + std::to_string(v.index);
    case IndetKind::Norm: return "n(a" + std::to_string(v.index) + ")";
    case IndetKind::Trace: return "tr(" + trace_word_inner(ctx.trace_word(v.index)) + ")";
  }
  return "?";
}

std::string render_scalar(const ScalarPoly& p, const Context& ctx) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Monomial, Rational>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return render_before(a.first, b.first); });
  std::string out;
  for (auto& [mono, coef] : terms) {
    bool negative = coef < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? "-" : "+";
    }
    Rational mag = negative ? Rational(-coef) : coef;
    std::vector<std::string> num, den;
    if (numerator(mag) != 1) num.push_back(numerator(mag).str());
    if (denominator(mag) != 1) den.push_back(denominator(mag).str());
    for (auto& [v, e] : mono.factors) {
      std::string name = render_indet(v, ctx);
      int mag_e = e < 0 ? -e : e;
      std::string f = mag_e == 1 ? name : name + "^" + std::to_string(mag_e);
      (e > 0 ? num : den).push_back(f);
    }
    std::string num_str;
    if (num.empty()) {
      num_str = "1";
    } else {
      for (std::size_t i = 0; i < num.size(); ++i)
        num_str += (i ? "*" : "") + num[i];
    }
    out += num_str;
    if (!den.empty()) {
      std::string den_str;
      for (std::size_t i = 0; i < den.size(); ++i)
        den_str += (i ? "*" : "") + den[i];
      out += "/" + (den.size() > 1 ? "(" + den_str + ")" : den_str);
    }
  }
  return out;
}

std::string render_word(const ConicWord& w) {
  if (w.is_unit()) return "1_C";
  if (w.is_leaf()) return leaf_name(w.code()[0]);
  return "(" + render_word(w.left()) + "*" + render_word(w.right()) + ")";
}

std::string render_conic(const ConicElement& e, const Context& ctx) {
  if (e.is_zero()) return "0_C";
  std::string out;
  for (auto& [w, c] : e.terms()) {
    if (!out.empty()) out += "+";
    out += "(" + render_scalar(c, ctx) + ")*" + render_word(w);
  }
  return out;
}

std::string render_cubic(const CubicElement& x, const Context& ctx) {
  if (x.is_zero()) return "0_J";
  static const char* kOffLabel[4] = {"", "[23]", "[31]", "[12]"};
  std::string out;
  for (int i = 1; i <= 3; ++i) {
    if (x.xi(i).is_zero()) continue;
    if (!out.empty()) out += "+";
    out += "(" + render_scalar(x.xi(i), ctx) + ")[" + std::to_string(i) +
           std::to_string(i) + "]";
  }
  for (int s = 1; s <= 3; ++s) {
    if (x.u(s).is_zero()) continue;
    if (!out.empty()) out += "+";
    out += "(" + render_conic(x.u(s), ctx) + ")" + kOffLabel[s];
  }
  return out;
}

std::string render_l00(const L00Element& e, const Context& ctx) {
  std::string out;
  auto join = [&out](const std::string& part) {
    if (!out.empty()) out += "+";
    out += part;
  };
  for (const DDTerm& t : e.dd_terms) {
    std::string dd = "dd_{" + render_cubic(t.c, ctx) + "," + render_cubic(t.cprime, ctx) + "}";
    if (t.coef.is_one())
      join(dd);
    else
      join("(" + render_scalar(t.coef, ctx) + ")*" + dd);
  }
  if (!e.xi_coef.is_zero())
    join(e.xi_coef.is_one() ? "xi" : "(" + render_scalar(e.xi_coef, ctx) + ")*xi");
  if (!e.zeta_coef.is_zero())
    join(e.zeta_coef.is_one() ? "zeta" : "(" + render_scalar(e.zeta_coef, ctx) + ")*zeta");
  return out;
}

std::string render_lie(const LieElement& m, const Context& ctx) {
  if (m.is_zero()) return "0_L";
  std::vector<std::string> parts;
  auto brown = [&ctx](const BrownElement& b, const char* sign) {
    return "[ " + render_scalar(b.lambda, ctx) + ", " + render_cubic(b.c, ctx) +
           ", " + render_cubic(b.cprime, ctx) + ", " + render_scalar(b.mu, ctx) +
           " ]_" + sign;
  };
  if (!m.x_coef.is_zero()) parts.push_back("(" + render_scalar(m.x_coef, ctx) + ")*x");
  if (!m.brown_minus.is_zero()) parts.push_back(brown(m.brown_minus, "-"));
  if (!m.ad_minus.is_zero())
    parts.push_back("ad^-_{" + render_cubic(m.ad_minus, ctx) + "}");
  if (!m.ad_plus.is_zero())
    parts.push_back("ad^+_{" + render_cubic(m.ad_plus, ctx) + "}");
  if (!m.l00.is_zero()) parts.push_back(render_l00(m.l00, ctx));
  if (!m.brown_plus.is_zero()) parts.push_back(brown(m.brown_plus, "+"));
  if (!m.y_coef.is_zero()) parts.push_back("(" + render_scalar(m.y_coef, ctx) + ")*y");
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " + " : "") + parts[i];
  return out;
}

}  // namespace cjma
