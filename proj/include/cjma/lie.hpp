#ifndef CJMA_LIE_HPP
#define CJMA_LIE_HPP

#include "cjma/jordan.hpp"
#include "cjma/root_system.hpp"

#include <functional>
#include <optional>
#include <set>
#include <variant>

namespace cjma {

/// One d_{c,c'} summand of an L00 element, with a scalar coefficient.
struct DDTerm {
  ScalarPoly coef;
  CubicElement c, cprime;
  bool operator==(const DDTerm&) const = default;
};

/// The G2-zero component: a k-linear combination of dd-terms plus the
/// distinguished elements xi and zeta.
struct L00Element {
  std::vector<DDTerm> dd_terms;
  ScalarPoly xi_coef, zeta_coef;

  bool is_zero() const {
    return dd_terms.empty() && xi_coef.is_zero() && zeta_coef.is_zero();
  }
  bool operator==(const L00Element&) const = default;

  L00Element operator+(const L00Element& o) const {
    L00Element out = *this;
    out.dd_terms.insert(out.dd_terms.end(), o.dd_terms.begin(), o.dd_terms.end());
    out.xi_coef = out.xi_coef + o.xi_coef;
    out.zeta_coef = out.zeta_coef + o.zeta_coef;
    return out;
  }
  L00Element scaled(const ScalarPoly& s) const {
    L00Element out;
    if (s.is_zero()) return out;
    for (const DDTerm& t : dd_terms) out.dd_terms.push_back({t.coef * s, t.c, t.cprime});
    out.xi_coef = xi_coef * s;
    out.zeta_coef = zeta_coef * s;
    return out;
  }
};

/// 4-tuple [lambda, c, c', mu]; the sign lives in the position inside
/// LieElement (brown_minus / brown_plus).
struct BrownElement {
  ScalarPoly lambda;
  CubicElement c, cprime;
  ScalarPoly mu;

  bool is_zero() const {
    return lambda.is_zero() && c.is_zero() && cprime.is_zero() && mu.is_zero();
  }
  bool operator==(const BrownElement&) const = default;

  BrownElement operator+(const BrownElement& o) const {
    return {lambda + o.lambda, c + o.c, cprime + o.cprime, mu + o.mu};
  }
  BrownElement scaled(const ScalarPoly& s) const {
    return {lambda * s, c.scaled(s), cprime.scaled(s), mu * s};
  }
};

/// Element of the 5-graded Lie algebra L.
struct LieElement {
  ScalarPoly x_coef;          // L_{-2}
  BrownElement brown_minus;   // L_{-1}
  CubicElement ad_minus;      // L_{0,-1}
  L00Element l00;             // L_{0,0}
  CubicElement ad_plus;       // L_{0,1}
  BrownElement brown_plus;    // L_{1}
  ScalarPoly y_coef;          // L_{2}

  static LieElement zero() { return {}; }
  static LieElement x() {
    LieElement m;
    m.x_coef = ScalarPoly::one();
    return m;
  }
  static LieElement y() {
    LieElement m;
    m.y_coef = ScalarPoly::one();
    return m;
  }
  static LieElement xi() {
    LieElement m;
    m.l00.xi_coef = ScalarPoly::one();
    return m;
  }
  static LieElement zeta() {
    LieElement m;
    m.l00.zeta_coef = ScalarPoly::one();
    return m;
  }
  static LieElement ad_pos(const CubicElement& c) {
    LieElement m;
    m.ad_plus = c;
    return m;
  }
  static LieElement ad_neg(const CubicElement& c) {
    LieElement m;
    m.ad_minus = c;
    return m;
  }
  static LieElement dd(const CubicElement& c, const CubicElement& cprime) {
    LieElement m;
    if (!c.is_zero() && !cprime.is_zero())
      m.l00.dd_terms.push_back({ScalarPoly::one(), c, cprime});
    return m;
  }
  static LieElement brown_pos(const ScalarPoly& lambda, const CubicElement& c,
                              const CubicElement& cprime, const ScalarPoly& mu) {
    LieElement m;
    m.brown_plus = {lambda, c, cprime, mu};
    return m;
  }
  static LieElement brown_neg(const ScalarPoly& lambda, const CubicElement& c,
                              const CubicElement& cprime, const ScalarPoly& mu) {
    LieElement m;
    m.brown_minus = {lambda, c, cprime, mu};
    return m;
  }

  bool is_zero() const {
    return x_coef.is_zero() && brown_minus.is_zero() && ad_minus.is_zero() &&
           l00.is_zero() && ad_plus.is_zero() && brown_plus.is_zero() &&
           y_coef.is_zero();
  }
  bool operator==(const LieElement&) const = default;

  LieElement operator+(const LieElement& o) const {
    LieElement out;
    out.x_coef = x_coef + o.x_coef;
    out.brown_minus = brown_minus + o.brown_minus;
    out.ad_minus = ad_minus + o.ad_minus;
    out.l00 = l00 + o.l00;
    out.ad_plus = ad_plus + o.ad_plus;
    out.brown_plus = brown_plus + o.brown_plus;
    out.y_coef = y_coef + o.y_coef;
    return out;
  }
  LieElement scaled(const ScalarPoly& s) const {
    LieElement out;
    out.x_coef = x_coef * s;
    out.brown_minus = brown_minus.scaled(s);
    out.ad_minus = ad_minus.scaled(s);
    out.l00 = l00.scaled(s);
    out.ad_plus = ad_plus.scaled(s);
    out.brown_plus = brown_plus.scaled(s);
    out.y_coef = y_coef * s;
    return out;
  }
  LieElement operator-(const LieElement& o) const {
    return *this + o.scaled(ScalarPoly::constant(-1));
  }
  LieElement operator-() const { return scaled(ScalarPoly::constant(-1)); }
};

/// DDSanitize: expands dd-terms bilinearly into Peirce-pure summands with
/// scalars pulled into the coefficient, merges equal (c, c') keys and drops
/// zeros. Idempotent.
L00Element dd_sanitize(const L00Element& e, const Context& ctx);

/// The L00 normal form: dd-sanitization followed by the relations
/// (1) chain rewriting into phi_{i->j} images dd([1]_ii, [a]_ij),
/// (2) diagonal collapse, (3) disjoint-position vanishing,
/// (4) elimination of dd([1]_33,[1]_33) via 2 zeta - xi - ..., and
/// (5) recombination of conjugate-mirror pairs on one off-diagonal slot.
L00Element simplify_l00(const L00Element& e, const Context& ctx);

/// Componentwise simplification (scalar, conic, cubic) plus the L00 rules.
LieElement simplify_lie(const LieElement& m, const Context& ctx);

// ---------------------------------------------------------------------------
// Atomic component tags and the data-driven bracket.
// ---------------------------------------------------------------------------

enum class LieTag {
  X, Y, Xi, Zeta, DD, AdPlus, AdMinus,
  BrownMinus1, BrownMinus2, BrownMinus3, BrownMinus4,
  BrownPlus1, BrownPlus2, BrownPlus3, BrownPlus4,
};

constexpr int kNumLieTags = 15;
const char* tag_name(LieTag t);
std::optional<LieTag> tag_from_name(const std::string& s);
RootG2 tag_g2_degree(LieTag t);

enum class PayloadKind { Scalar, Cubic };
const std::vector<PayloadKind>& tag_payload_kinds(LieTag t);

using LiePayload = std::variant<ScalarPoly, CubicElement>;

struct LieAtom {
  LieTag tag;
  std::vector<LiePayload> payload;
};

/// Decomposition of an element into atomic components; dd-term coefficients
/// are folded into the first cubic payload.
std::vector<LieAtom> atoms_of(const LieElement& m);

/// Rebuilds the component for one atom (payloads in tag order).
LieElement atom_element(LieTag tag, const std::vector<LiePayload>& payload);

class BracketTable {
 public:
  using EntryFn =
      std::function<LieElement(const std::vector<LiePayload>&, const Context&)>;

  struct Entry {
    LieTag a, b;
    std::vector<std::string> params;
    std::string rhs_text;
    EntryFn fn;
  };

  void add(Entry e);
  const Entry* find(LieTag a, LieTag b) const;
  const std::map<std::pair<LieTag, LieTag>, Entry>& entries() const { return entries_; }

  /// The paper-anchored entries: [x,y] = xi, [x,xi] = 2x,
  /// [ad+_c, ad-_d] = -dd(c,d). Grading-forced zeros are implicit in the
  /// bracket engine.
  static const BracketTable& core();
  static BracketTable load_file(const std::string& path);
  static BracketTable load_text(const std::string& text, const std::string& origin);

 private:
  std::map<std::pair<LieTag, LieTag>, Entry> entries_;
};

/// Bilinear, table-driven bracket. Pairs whose G2-degree sum is outside
/// G2^0 are zero; [B,A] is derived from a stored [A,B] by negation; any
/// other absent pair raises MissingTableEntry. The result is not simplified.
LieElement bracket(const LieElement& m1, const LieElement& m2,
                   const BracketTable& table, const Context& ctx);

// ---------------------------------------------------------------------------
// Twisted root homomorphisms.
// ---------------------------------------------------------------------------

struct Twist {
  int eps = 1;
  std::array<int, 3> tau{0, 0, 0};
  bool operator==(const Twist&) const = default;
};

class TwistTable {
 public:
  Twist get(const RootF4& alpha) const {
    auto it = overrides_.find(alpha);
    return it == overrides_.end() ? Twist{} : it->second;
  }
  void set(const RootF4& alpha, const Twist& t) { overrides_[alpha] = t; }
  const std::map<RootF4, Twist>& overrides() const { return overrides_; }

  /// Defaults eps=1, tau=0 except the two paper-anchored roots.
  static const TwistTable& core();
  static TwistTable load_file(const std::string& path);
  static TwistTable load_text(const std::string& text, const std::string& origin);

 private:
  std::map<RootF4, Twist> overrides_;
};

using HomPayload = std::variant<ScalarPoly, ConicElement>;

/// rho_alpha(b): the twisted root homomorphism. Long roots take scalar
/// payloads, short roots conic ones.
LieElement lie_root_hom_f4(const RootF4& alpha, const HomPayload& b,
                           const TwistTable& twists, const Context& ctx);

/// Conic/scalar indeterminate indices appearing in an element (including
/// those inside norm and trace indeterminates).
struct IndetUse {
  std::set<int> conic, scalar;
};
void collect_used(const ScalarPoly& p, const Context& ctx, IndetUse& out);
void collect_used(const ConicElement& e, const Context& ctx, IndetUse& out);
void collect_used(const CubicElement& x, const Context& ctx, IndetUse& out);
void collect_used(const LieElement& m, const Context& ctx, IndetUse& out);

/// The F4 root of a (simplified) element supported in a single F4
/// component; empty if the element is zero or not homogeneous.
std::optional<RootF4> homogeneous_root(const LieElement& m, const Context& ctx);

}  // namespace cjma

#endif
