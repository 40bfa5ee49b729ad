#ifndef CJMA_FAIL_HPP
#define CJMA_FAIL_HPP

#include <stdexcept>
#include <string>

namespace cjma {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid (m1, m2, m3) bounds or other construction-time misuse.
struct ConfigError : Error {
  using Error::Error;
};

/// A trace symbol tr(w) was requested for a word longer than m3.
struct TraceLengthOverflow : Error {
  explicit TraceLengthOverflow(std::size_t len, std::size_t m3)
      : Error("trace-length-overflow: word of length " + std::to_string(len) +
              " exceeds m3 = " + std::to_string(m3)),
        length(len), max_length(m3) {}
  std::size_t length;
  std::size_t max_length;
};

/// Scalar payload where a conic one is required, or vice versa.
struct KindError : Error {
  using Error::Error;
};

/// Indeterminate index outside the context bounds.
struct BoundsError : Error {
  using Error::Error;
};

/// The bracket table has no entry for a component pair that is not
/// forced to zero by the grading.
struct MissingTableEntry : Error {
  MissingTableEntry(const std::string& a, const std::string& b)
      : Error("missing-table-entry: [" + a + ", " + b + "]"),
        tag_a(a), tag_b(b) {}
  std::string tag_a;
  std::string tag_b;
};

/// An endomorphism application produced a non-gamma-integral coefficient.
struct IntegralityError : Error {
  using Error::Error;
};

/// test_equality was called with a fresh index already used by an argument.
struct FreshIndexError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& msg, int line_, int column_)
      : Error("parse error at " + std::to_string(line_) + ":" +
              std::to_string(column_) + ": " + msg),
        line(line_), column(column_) {}
  int line;
  int column;
};

[[noreturn]] inline void fail(const std::string& msg) { throw Error(msg); }

}  // namespace cjma

#endif
