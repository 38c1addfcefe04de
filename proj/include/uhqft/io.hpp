#pragma once

// Text formats: JSON diagram files (with an optional custom algebra block),
// standalone algebra files, and 0/1 projection matrices.

#include <optional>
#include <string>
#include <string_view>

#include "uhqft/algebra.hpp"
#include "uhqft/diagram.hpp"
#include "uhqft/f2linalg.hpp"

namespace uhqft {

struct ParsedDiagram {
  SurfaceDiagram diagram;
  std::optional<AlgebraSpec> algebra;
};

// Throws ParseError (with the line of the offending object) on malformed
// input, dangling or doubly referenced arc ends, and label length mismatch.
ParsedDiagram parse_diagram(std::string_view text);
AlgebraSpec parse_algebra(std::string_view text);
// Rows of 0/1 entries separated by optional whitespace; '#' starts a comment.
f2::Matrix parse_projection(std::string_view text);

// Throws InputError when the file cannot be read.
std::string read_file(const std::string& path);
ParsedDiagram load_diagram(const std::string& path);
AlgebraSpec load_algebra(const std::string& path);
f2::Matrix load_projection(const std::string& path);

// Deterministic JSON text accepted by parse_diagram.
std::string serialize_diagram(const SurfaceDiagram& d);

}  // namespace uhqft
