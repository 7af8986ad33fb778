#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "topo/generated.hpp"
#include "topo/space.hpp"

namespace topo {

// Text format, one statement per line, '#' starts a comment line:
//
//   space sierpinski
//   points 2
//   opens {} {0} {0 1}
//
// `subbasis {0 1} {1 2}` may replace `opens`; the topology is then
// generated. Set lists may continue on following lines that begin with '{'.
// Test classes are declared with
//
//   class C = P | A | Sfin | [space-name, ...]

struct NamedSpace {
  std::string name;
  FinSpace space;
  std::size_t line = 0;
};

struct ClassDecl {
  std::string name;
  /// "P", "A", "Sfin", or empty for an explicit member list.
  std::string builtin;
  std::vector<std::string> members;
  std::size_t line = 0;
};

struct SpaceDocument {
  std::vector<NamedSpace> spaces;
  std::vector<ClassDecl> classes;

  const NamedSpace* find_space(std::string_view name) const;
};

/// Throws ParseError with 1-based line and column.
SpaceDocument parse_document(std::string_view text);
SpaceDocument load_document(const std::string& path);

/// Resolves a builtin class name or one declared in doc. Throws InvalidClass.
TestClass resolve_class(const SpaceDocument& doc, std::string_view name);

/// Renders a space in the DSL with an explicit opens line.
std::string format_space(const std::string& name, const FinSpace& x);

}  // namespace topo
