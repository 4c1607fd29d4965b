// Domain specs, the ideal expression language and the scenario runner.
#pragma once

#include "semistar/classify.hpp"

#include <memory>
#include <string>
#include <vector>

namespace semistar::cli {

enum class ErrorKind { Parse, Semantic, Unsupported, Zero, Internal };

class CliError : public Error {
 public:
  CliError(ErrorKind kind, const std::string& what) : Error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised with 1-based line/column and the set of tokens that would fit.
class ParseError : public CliError {
 public:
  ParseError(int line, int column, const std::string& expected, const std::string& what);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& expected() const { return expected_; }

 private:
  int line_;
  int column_;
  std::string expected_;
};

// Whitespace-separated key=value pairs; '#' starts a comment.
// Keys: family, generators, base_field, extension, group.
Domain parse_domain(const std::string& text);

struct Gen {
  enum class Kind { Power, Point, Above, AtLeast };
  Kind kind = Kind::Power;
  long exponent = 0;
  Elem coeff;
  GroupElement level;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Ring, Maximal, Overring, Gens, Binary, Func };
  Kind kind = Kind::Ring;
  std::vector<Gen> gens;
  // '+', '*', '&' or ':'
  char op = 0;
  ExprPtr lhs;
  ExprPtr rhs;
  // v, t, w, inv, ft, bar, tilde, st, apply
  std::string func;
  Op term;
};

ExprPtr parse_expr(const std::string& text, const Domain& d);
std::string print_expr(const ExprPtr& e, const Domain& d);
// Errors name the innermost failing subexpression.
IdealHandle eval(const ExprPtr& e, const Domain& d);

struct ReportLine {
  std::string scenario;
  std::string anchor;
  std::string expr_or_predicate;
  std::string expected;
  std::string actual;
  // PASS or FAIL
  std::string outcome;
};

struct Report {
  std::vector<ReportLine> lines;
  int failed() const;
};

std::vector<std::string> scenario_names();
// names may hold "all"; unknown names raise a semantic error.
Report run_scenarios(const std::vector<std::string>& names, const SampleSpec& spec);
std::string report_text(const Report& r);
std::string report_json(const Report& r);

std::string eval_text(const std::string& domain_text, const std::string& expr);
std::string eval_json(const std::string& domain_text, const std::string& expr);

}  // namespace semistar::cli
