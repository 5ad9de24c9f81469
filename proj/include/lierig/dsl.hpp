#pragma once

#include "lierig/matrix.hpp"
#include "lierig/structure_constants.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lierig {

struct TorusBlock {
  std::string name;
  std::vector<RatMatrix> generators;

  friend bool operator==(const TorusBlock&, const TorusBlock&) = default;
};

/// One algebra as written in a .lie file. Brackets are keyed by basis index
/// pairs (i, j) with i < j; zero brackets are not stored.
struct AlgebraDocument {
  std::string name;
  std::size_t dim = 0;
  std::vector<std::string> labels;
  std::map<std::pair<std::size_t, std::size_t>, Vector> brackets;
  std::vector<TorusBlock> tori;

  StructureConstants constants() const;
  /// Throws std::out_of_range when no torus has that name.
  const TorusBlock& torus(const std::string& name) const;

  friend bool operator==(const AlgebraDocument&, const AlgebraDocument&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& detail() const { return detail_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

/// Grammar, one statement per line, '#' to end of line is a comment:
///
///   algebra <name> dim <n>
///   basis <id> <id> ...
///   [<id>,<id>] = <term> (("+"|"-") <term>)*     (or "= 0")
///   torus <name>
///   row <rational> ...                            (n rows per generator)
///
/// term = [<rational> "*"] <id>, rational = [-]int[/posint]. The first term
/// may carry a leading sign. Throws ParseError (1-based line and column).
AlgebraDocument parse_document(std::string_view text);

/// "X1 - 2*X3 + 1/2*X4"; "0" for the zero vector.
std::string format_combination(const std::vector<std::string>& labels, const Vector& v);

/// Canonical text: basis order kept, brackets sorted by (i, j) with i < j,
/// coefficients reduced, unit coefficients omitted.
std::string serialize(const AlgebraDocument& doc);

AlgebraDocument make_document(std::string name, std::vector<std::string> labels, const StructureConstants& g,
                              std::vector<TorusBlock> tori = {});

}  // namespace lierig
