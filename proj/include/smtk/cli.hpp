#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "smtk/presentation.hpp"

namespace smtk::cli {

// Line-based format:
//
//   # comment
//   alphabet: a b c d
//   relator: abcdbcabcd = 1
//
// Strict mode requires every relator to read "w = 1" and throws
// NonSpecialRelator otherwise; relaxed mode also accepts "u = v".
// SyntaxError messages carry 1-based line and column.
[[nodiscard]] Presentation parse_presentation_text(const std::string& text);
[[nodiscard]] SpecialPresentation parse_presentation(const std::string& text);

[[nodiscard]] std::string read_file(const std::string& path);

// Exit status: 0 success, 1 error, 2 inconclusive.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace smtk::cli
