#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "maxcover/instance.hpp"

namespace maxcover {

// Instance text format (UTF-8, newline-delimited):
//   line 1: "mcp <universe_size> <num_sets>"
//   then one line per set: "<set_size> <e1> <e2> ... <e_size>"
// '#'-prefixed lines are comments; blank lines are skipped. The writer emits
// each set's elements in ascending order (the canonical form); the parser
// accepts any element order.

/// Throws ParseError with the offending 1-based line number.
Instance parse_instance(std::string_view text);

/// Canonical text form; parse_instance(write_instance(x)) == x.
std::string write_instance(const Instance& instance);

/// Throws IoError when the file cannot be read, ParseError on bad content.
Instance load_instance_file(const std::filesystem::path& path);

/// Throws IoError when the file cannot be written.
void save_instance_file(const Instance& instance, const std::filesystem::path& path);

}  // namespace maxcover
