#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "triso/multi_isolate.hpp"
#include "triso/polynomial.hpp"

namespace triso {

/// Integers, p/q literals, variables, + - * ^ and parentheses. ^ binds
/// tightest and takes a nonnegative integer literal; unary minus binds
/// tighter than *. Throws ParseError / UnknownVariable.
MPoly parse_poly(std::string_view src, const std::vector<std::string>& vars);

/// Lex order with the first variable largest, e.g. "x^2*y - 5*x^2 + 3".
std::string render(const MPoly& p, const std::vector<std::string>& vars);

/// vars: x, y, z
/// f1 = <expression>
/// ...
/// Blank lines and '#' comments are ignored.
struct SystemDocument {
  std::vector<std::string> var_order;
  std::vector<std::string> names;
  std::vector<std::string> equations;
};

/// Throws ParseError with a byte offset into `text`.
SystemDocument parse_system_document(std::string_view text);
/// Parses every equation and checks the triangular shape.
TriangularSystem to_system(const SystemDocument& doc);

enum class Status { ok, positive_dimension, error };

struct SolutionRecord {
  std::vector<Interval> box;
  unsigned long multiplicity = 0;
  std::size_t branch = 0;
  std::vector<unsigned> exponents;
};

struct ResultDocument {
  Status status = Status::ok;
  std::string message;
  std::vector<std::string> variables;
  Rational precision = default_precision();
  std::vector<SolutionRecord> solutions;
  std::vector<std::vector<std::string>> decomposition;  // rendered branch systems
};

ResultDocument make_result(const MultiIsolation& m, const std::vector<std::string>& vars,
                           const Rational& precision);

std::string to_json(const ResultDocument& doc, bool with_decomposition);
/// Throws ParseError on malformed input.
ResultDocument result_from_json(std::string_view text);
/// One "[[lo,hi],...], m" line per solution.
std::string to_text(const ResultDocument& doc, bool with_decomposition);

}  // namespace triso
