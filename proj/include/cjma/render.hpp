#ifndef CJMA_RENDER_HPP
#define CJMA_RENDER_HPP

#include "cjma/conic.hpp"
#include "cjma/scalar_poly.hpp"

#include <string>

namespace cjma {

class CubicElement;
struct L00Element;
struct LieElement;

std::string render_indet(const ScalarIndet& v, const Context& ctx);
std::string render_scalar(const ScalarPoly& p, const Context& ctx);
std::string render_word(const ConicWord& w);
std::string render_conic(const ConicElement& e, const Context& ctx);
std::string render_cubic(const CubicElement& x, const Context& ctx);
std::string render_l00(const L00Element& e, const Context& ctx);
std::string render_lie(const LieElement& m, const Context& ctx);

}  // namespace cjma

#endif
