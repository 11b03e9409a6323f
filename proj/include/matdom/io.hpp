#pragma once

#include <iosfwd>
#include <string>

#include "matdom/types.hpp"

namespace matdom::io {

// Instance text format: optional comment lines starting with '#', a header
// line "n m", then n lines of exactly m characters from {'0','1'}.
// Newlines are LF.
Instance read_instance(std::istream& in);
Instance read_instance_file(const std::string& path);
void write_instance(std::ostream& out, const Instance& instance);
void write_instance_file(const std::string& path, const Instance& instance);
std::string instance_to_text(const Instance& instance);

// Placement / certificate text format: one "i j" pair per line, zero-based.
// Comment lines starting with '#' and blank lines are skipped on input.
Placement read_placement(std::istream& in);
Placement read_placement_file(const std::string& path);
void write_placement(std::ostream& out, const Placement& placement);
void write_placement_file(const std::string& path, const Placement& placement);
std::string placement_to_text(const Placement& placement);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

} // namespace matdom::io
