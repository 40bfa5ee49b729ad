#ifndef CJMA_SUITES_HPP
#define CJMA_SUITES_HPP

#include "cjma/dsl.hpp"

#include <string>
#include <vector>

namespace cjma {

struct SuiteItem {
  enum class Status { Pass, Residue, TableIncomplete, Fail };
  std::string id;
  std::string inputs;
  Status status = Status::Pass;
  std::string detail;
  double elapsed_ms = 0;  // not rendered: reports are byte-deterministic
};

struct SuiteReport {
  std::string name;
  std::vector<SuiteItem> items;

  /// 0 all pass, 1 residues/failures, 2 table-incomplete.
  int exit_code() const;
  std::size_t count(SuiteItem::Status s) const;
};

struct SuiteOptions {
  const BracketTable* bracket = nullptr;  // nullptr: built-in core
  const TwistTable* twists = nullptr;
};

const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt = {});

/// check-table: grading closure per entry (G2 and F4 level), antisymmetry
/// of the diagonal entries, and the Jacobi identity on 50 deterministic
/// sampled atomic triples.
SuiteReport check_table(const BracketTable& table);

std::string render_text(const SuiteReport& r);
std::string render_json(const SuiteReport& r);

}  // namespace cjma

#endif
