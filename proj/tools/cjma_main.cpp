#include "cjma/suites.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>

namespace {

struct CommonArgs {
  int m1 = 6, m2 = 3, m3 = 4;
};

void add_context_flags(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--m1", args.m1, "number of scalar indeterminates t1..t_m1");
  cmd->add_option("--m2", args.m2, "number of conic generators a1..a_m2");
  cmd->add_option("--m3", args.m3, "maximal trace-word length");
}

int eval_command(const CommonArgs& args, const std::string& text,
                 const std::optional<std::string>& bracket_path,
                 const std::optional<std::string>& twist_path, bool simplify) {
  try {
    cjma::ContextPtr ctx = cjma::new_context(args.m1, args.m2, args.m3);
    cjma::BracketTable bracket;
    cjma::TwistTable twists;
    cjma::Tables tables;
    if (bracket_path) {
      bracket = cjma::BracketTable::load_file(*bracket_path);
      tables.bracket = &bracket;
    }
    if (twist_path) {
      twists = cjma::TwistTable::load_file(*twist_path);
      tables.twists = &twists;
    }
    cjma::ExprPtr e = cjma::parse(text);
    cjma::infer_kind(*e);
    cjma::Value v = cjma::eval(*e, *ctx, tables);
    if (simplify) v = cjma::simplify_value(v, *ctx);
    std::cout << cjma::render_value(v, *ctx) << "\n";
    return 0;
  } catch (const cjma::MissingTableEntry& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const cjma::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 3;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symbolic kernel for cubic Jordan matrix algebras over conic algebras"};
  app.require_subcommand(1);

  CommonArgs eval_args, simp_args, suite_args;
  std::string eval_expr, simp_expr, suite_name, table_path;
  std::optional<std::string> eval_bracket, eval_twists, suite_bracket, suite_twists;
  std::string format = "text";

  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate an expression");
  add_context_flags(eval_cmd, eval_args);
  eval_cmd->add_option("expr", eval_expr, "expression")->required();
  eval_cmd->add_option("--bracket-table", [&eval_bracket](const std::vector<std::string>& v) {
    eval_bracket = v.back();
    return true;
  }, "bracket table file (default: built-in core entries)");
  eval_cmd->add_option("--twist-table", [&eval_twists](const std::vector<std::string>& v) {
    eval_twists = v.back();
    return true;
  }, "twist table file (default: built-in core entries)");

  CLI::App* simp_cmd = app.add_subcommand("simplify", "evaluate and simplify an expression");
  add_context_flags(simp_cmd, simp_args);
  simp_cmd->add_option("expr", simp_expr, "expression")->required();

  CLI::App* suite_cmd = app.add_subcommand("suite", "run a verification suite");
  add_context_flags(suite_cmd, suite_args);
  suite_cmd->add_option("name", suite_name, "one of: identities, peirce, linearization, l00, exp-anchors, commutators, weyl")
      ->required();
  suite_cmd->add_option("--bracket-table", [&suite_bracket](const std::vector<std::string>& v) {
    suite_bracket = v.back();
    return true;
  }, "bracket table file (default: built-in core entries)");
  suite_cmd->add_option("--twist-table", [&suite_twists](const std::vector<std::string>& v) {
    suite_twists = v.back();
    return true;
  }, "twist table file (default: built-in core entries)");
  suite_cmd->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* check_cmd = app.add_subcommand("check-table", "validate a bracket table file");
  check_cmd->add_option("file", table_path, "bracket table file")->required();
  check_cmd->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    if (eval_cmd->parsed())
      return eval_command(eval_args, eval_expr, eval_bracket, eval_twists, false);
    if (simp_cmd->parsed())
      return eval_command(simp_args, simp_expr, std::nullopt, std::nullopt, true);
    if (suite_cmd->parsed()) {
      bool known = false;
      for (const std::string& n : cjma::suite_names()) known = known || n == suite_name;
      if (!known) {
        std::cerr << "error: unknown suite '" << suite_name << "'\n";
        return 3;
      }
      cjma::BracketTable bracket;
      cjma::TwistTable twists;
      cjma::SuiteOptions opt;
      if (suite_bracket) {
        bracket = cjma::BracketTable::load_file(*suite_bracket);
        opt.bracket = &bracket;
      }
      if (suite_twists) {
        twists = cjma::TwistTable::load_file(*suite_twists);
        opt.twists = &twists;
      }
      cjma::SuiteReport report = cjma::run_suite(suite_name, opt);
      std::cout << (format == "json" ? cjma::render_json(report)
                                     : cjma::render_text(report));
      return report.exit_code();
    }
    if (check_cmd->parsed()) {
      cjma::BracketTable table = cjma::BracketTable::load_file(table_path);
      cjma::SuiteReport report = cjma::check_table(table);
      std::cout << (format == "json" ? cjma::render_json(report)
                                     : cjma::render_text(report));
      return report.exit_code();
    }
  } catch (const cjma::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 3;
  }
  return 3;
}
