#pragma once

#include <string>
#include <variant>

#include "cathei/calculus_a.hpp"
#include "cathei/error.hpp"
#include "cathei/heisenberg.hpp"

namespace cathei {

/// SYNTAX_ERROR with a 1-indexed source position.
class SyntaxError : public Error {
 public:
  SyntaxError(int line, int column, const std::string& expected, const std::string& detail);

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& expected() const { return expected_; }

 private:
  int line_, column_;
  std::string expected_;
};

using Diagram = std::variant<LayeredDiagram, HDiagram>;

/// Line-oriented diagram files, slices bottom to top:
///
///   kind A                kind H
///   source F0 E0 @ 1      signs +-
///   slice cap 1           base 1
///                         slice cup 1 -
///
/// "slice cup p c s" for A, "slice cup p s" for H; '#' starts a comment.
Diagram parse_diagram(const std::string& text);
std::string print_diagram(const LayeredDiagram& d);
std::string print_diagram(const HDiagram& d);
std::string print_diagram(const Diagram& d);

}  // namespace cathei
