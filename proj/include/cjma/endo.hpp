#ifndef CJMA_ENDO_HPP
#define CJMA_ENDO_HPP

#include "cjma/lie.hpp"

#include <vector>

namespace cjma {

/// Lazily evaluated endomorphism of L: an ordered list of truncated
/// exponentials of F4-homogeneous elements, applied rightmost first.
class Endomorphism {
 public:
  struct ExpFactor {
    LieElement payload;
    RootF4 root;
  };

  static Endomorphism identity() { return {}; }

  /// exp(l) for l homogeneous at a single F4 root.
  static Endomorphism exp(const LieElement& l, const Context& ctx);

  /// (psi * phi)(m) = psi(phi(m)).
  static Endomorphism compose(const Endomorphism& psi, const Endomorphism& phi);

  /// Reversed factor list with negated payloads.
  Endomorphism inverse() const;

  /// Applies the factor list rightmost first; each factor application is
  /// followed by simplify_lie and a gamma-integrality assertion.
  LieElement apply(const LieElement& m, const BracketTable& table,
                   const Context& ctx) const;

  const std::vector<ExpFactor>& factors() const { return factors_; }
  const IndetUse& used_indets() const { return used_; }
  bool is_identity() const { return factors_.empty(); }

 private:
  std::vector<ExpFactor> factors_;
  IndetUse used_;
};

/// x_alpha(b) = exp(rho_alpha(b)).
Endomorphism grp_root_hom_f4(const RootF4& alpha, const HomPayload& b,
                             const TwistTable& twists, const Context& ctx);

/// S(a) for a = the fresh conic indeterminate with the given index:
/// rho_alpha(a) for the short roots of F4_{-2} u F4_1 and rho_alpha(1) for
/// the long ones (15 elements).
std::vector<LieElement> generator_set(int fresh_index, const TwistTable& twists,
                                      const Context& ctx);

struct EqualityResult {
  bool equal = false;
  /// (generator, simplified difference) for every nonvanishing generator.
  std::vector<std::pair<LieElement, LieElement>> residues;
};

/// Evaluates phi and psi on S(a_fresh) and simplifies the differences.
/// Throws FreshIndexError if the fresh index appears in either argument,
/// and propagates MissingTableEntry.
EqualityResult test_equality(const Endomorphism& phi, const Endomorphism& psi,
                             int fresh_index, const BracketTable& table,
                             const TwistTable& twists, const Context& ctx);

/// One Weyl-element check: the status of x_gamma(payload)^{w_delta} against
/// the candidate set over the reflected root.
struct WeylCheck {
  RootF4 gamma;
  RootF4 reflected;
  enum class Status { Matched, Residue, TableIncomplete } status;
  int candidate = -1;            // index of the matching candidate
  std::string detail;            // residue rendering or missing pair
};

/// Conjugates x_gamma by w_delta = x_{-delta}(-1) x_delta(1) x_{-delta}(-1)
/// for every gamma in F4 and tests membership in the candidate set
/// {x_{gamma^sigma}(+-b), x_{gamma^sigma}(+-conj b)} (short) or
/// {x_{gamma^sigma}(+-t)} (long). Payload indices: a1/t1; fresh index 2.
std::vector<WeylCheck> weyl_suite(const RootF4& delta, const TwistTable& twists,
                                  const BracketTable& table, const Context& ctx);

}  // namespace cjma

#endif
