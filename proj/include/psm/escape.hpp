#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace psm {

/// Decodes \xNN (two hex digits), \\, \n, \r, \t and \0; every other byte
/// is literal. Throws InvalidInput on an unknown or truncated escape.
std::string unescape(std::string_view literal);

/// Printable ASCII except '\' is emitted as is, '\' as "\\", everything
/// else as \xNN with lowercase hex. unescape(escape(b)) == b.
std::string escape(std::string_view bytes);

/// One escaped pattern per line; empty lines are skipped. Only '\n'
/// separates lines, so a '\r' before it is part of the pattern.
std::vector<std::string> parse_pattern_lines(std::istream& in);
std::vector<std::string> load_pattern_file(const std::filesystem::path& path);

}  // namespace psm
