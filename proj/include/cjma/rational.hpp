#ifndef CJMA_RATIONAL_HPP
#define CJMA_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace cjma {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

inline std::string to_string(const Rational& q) {
  if (is_integer(q)) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace cjma

#endif
