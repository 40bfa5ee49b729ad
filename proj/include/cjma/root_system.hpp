#ifndef CJMA_ROOT_SYSTEM_HPP
#define CJMA_ROOT_SYSTEM_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace cjma {

using RootF4 = std::array<int, 4>;
using RootG2 = std::array<int, 2>;

/// The 48 roots of F4 (+-2e_i; all-+-1 vectors; ae_i + be_j, a,b in +-1),
/// in lexicographic coordinate order.
const std::vector<RootF4>& roots_f4();
/// The 12 roots of G2 in the Gram-matrix [[2,-1],[-1,2]] model,
/// lexicographic order.
const std::vector<RootG2>& roots_g2();

bool is_root(const RootF4& a);
bool is_root(const RootG2& a);
bool is_zero(const RootF4& a);
bool is_zero(const RootG2& a);

int dot(const RootF4& a, const RootF4& b);  // standard inner product
int dot(const RootG2& a, const RootG2& b);  // Gram matrix [[2,-1],[-1,2]]

bool is_long(const RootF4& a);  // squared length 4 (short roots have 2)
bool is_long(const RootG2& a);  // Gram norm 6 (short roots have 2)

RootF4 reflect(const RootF4& beta, const RootF4& alpha);
RootG2 reflect(const RootG2& beta, const RootG2& alpha);

RootF4 negate(const RootF4& a);
RootF4 add(const RootF4& a, const RootF4& b);

/// The projection (p,i,j,l) -> (p, (p+i+j+l)/2), defined on F4 and on zero.
RootG2 pi(const RootF4& a);

/// First coordinate: the 5-grading layer in {-2..2}.
inline int grading_component(const RootF4& a) { return a[0]; }
inline int grading_component(const RootG2& a) { return a[0]; }

/// Matrix-shape placement of a root inside its fiber: Diagonal(i) for the
/// long F4 roots, OffDiagonal(i,j) for the short ones. For the fibers of
/// short G2 roots the pair is unordered in meaning (stored with the box
/// orientation); for the fiber of (0,0) the pair (i,j) is ordered.
struct Slot {
  int i, j;  // 1-based; i == j means Diagonal(i)
  bool diagonal() const { return i == j; }
  auto operator<=>(const Slot&) const = default;
};

/// Placement for the 36 roots lying over the short G2 roots, transcribed
/// from the fiber boxes. Throws for any other argument.
Slot slot_of(const RootF4& alpha);

/// Placement for the 6 roots over (0,0) (the central box): the ordered
/// pair (i,j) of the Z_{i->j} component. Empty for any other root.
std::optional<Slot> zero_fiber_slot(const RootF4& alpha);

/// Inverse lookup: the unique F4 root over `beta` carrying `slot`.
/// `beta` must be a short G2 root or (0,0).
RootF4 fiber_root(const RootG2& beta, const Slot& slot);

/// The root base (delta_1, ..., delta_4).
std::array<RootF4, 4> root_base();

std::string render_root(const RootF4& a);

}  // namespace cjma

#endif
