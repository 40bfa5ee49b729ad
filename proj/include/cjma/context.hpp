#ifndef CJMA_CONTEXT_HPP
#define CJMA_CONTEXT_HPP

#include "cjma/fail.hpp"
#include "cjma/rational.hpp"
#include "cjma/word.hpp"

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace cjma {

enum class IndetKind : std::uint8_t { Gamma = 0, Scalar = 1, Norm = 2, Trace = 3 };

/// One indeterminate of the coefficient ring k: g1..g3, t1..t_m1,
/// n(a1)..n(a_m2), or tr(d) for a canonical trace word d (referenced by its
/// registry id). The ordering g < t < n < tr, each family by index, is the
/// canonical indeterminate order used everywhere.
struct ScalarIndet {
  IndetKind kind;
  int index;

  static ScalarIndet gamma(int i) { return {IndetKind::Gamma, i}; }
  static ScalarIndet scalar(int i) { return {IndetKind::Scalar, i}; }
  static ScalarIndet norm(int i) { return {IndetKind::Norm, i}; }
  static ScalarIndet trace(int registry_id) { return {IndetKind::Trace, registry_id}; }

  auto operator<=>(const ScalarIndet&) const = default;
};

/// Result of canonical_trace_word: tr(w) = coeff * prod n(a_i) * tr(rep),
/// with tr(rep) read as 1 when rep is absent (the word fully reduced; the
/// coefficient then carries the factor 2 coming from tr(1_C) = 2).
struct CanonicalTrace {
  Rational coeff = 1;
  std::vector<int> norm_factors;  // generator indices, sorted, with multiplicity
  std::optional<ConicWord> rep;
};

/// Immutable computation context: the numbers m1 (scalar indeterminates),
/// m2 (conic generators), m3 (maximal trace-word length) and the canonical
/// trace-word registry T(m2, m3).
class Context {
 public:
  Context(int m1, int m2, int m3);

  int m1() const { return m1_; }
  int m2() const { return m2_; }
  int m3() const { return m3_; }

  const std::vector<ConicWord>& trace_registry() const { return registry_; }

  /// Registry id of a canonical representative; fails if w is not canonical.
  int trace_id(const ConicWord& w) const;
  const ConicWord& trace_word(int id) const { return registry_.at(std::size_t(id)); }

  /// Canonical form of tr(w) under the implemented rewrite relation:
  /// (a) tr(w) = tr(conj(w)), (b) top-level swap tr(uv) = tr(vu),
  /// (c) full associativity + cyclicity for words of length 3,
  /// (d) extraction of adjacent s*conj(s) factors as norm factors.
  /// Throws TraceLengthOverflow when length(w) > m3.
  CanonicalTrace canonical_trace_word(const ConicWord& w) const;

  void check_trace_length(std::size_t len) const {
    if (len > std::size_t(m3_)) throw TraceLengthOverflow(len, std::size_t(m3_));
  }
  void check_gen_index(int i) const {
    if (i < 1 || i > m2_)
      throw BoundsError("conic generator index a" + std::to_string(i) +
                        " out of range (m2 = " + std::to_string(m2_) + ")");
  }
  void check_scalar_index(int i) const {
    if (i < 1 || i > m1_)
      throw BoundsError("scalar indeterminate index t" + std::to_string(i) +
                        " out of range (m1 = " + std::to_string(m1_) + ")");
  }

 private:
  int m1_, m2_, m3_;
  std::vector<ConicWord> registry_;           // sorted canonical reps
  std::map<ConicWord, int> registry_index_;   // rep -> id
};

using ContextPtr = std::shared_ptr<const Context>;

inline ContextPtr new_context(int m1, int m2, int m3) {
  return std::make_shared<const Context>(m1, m2, m3);
}

}  // namespace cjma

#endif
