#include "psm/escape.hpp"

#include <fstream>

#include "psm/symbol.hpp"

namespace psm {
namespace {

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::string unescape(std::string_view literal) {
  std::string out;
  out.reserve(literal.size());
  for (std::size_t i = 0; i < literal.size(); ++i) {
    if (literal[i] != '\\') {
      out.push_back(literal[i]);
      continue;
    }
    if (++i == literal.size()) throw InvalidInput("dangling backslash in \"" + std::string(literal) + "\"");
    switch (literal[i]) {
      case '\\': out.push_back('\\'); break;
      case 'n': out.push_back('\n'); break;
      case 'r': out.push_back('\r'); break;
      case 't': out.push_back('\t'); break;
      case '0': out.push_back('\0'); break;
      case 'x': {
        const int hi = i + 1 < literal.size() ? hex_value(literal[i + 1]) : -1;
        const int lo = i + 2 < literal.size() ? hex_value(literal[i + 2]) : -1;
        if (hi < 0 || lo < 0) throw InvalidInput("malformed \\x escape in \"" + std::string(literal) + "\"");
        out.push_back(static_cast<char>(hi * 16 + lo));
        i += 2;
        break;
      }
      default:
        throw InvalidInput(std::string("unknown escape \\") + literal[i] + " in \"" +
                           std::string(literal) + "\"");
    }
  }
  return out;
}

std::string escape(std::string_view bytes) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size());
  for (char c : bytes) {
    const auto b = static_cast<unsigned char>(c);
    if (b == '\\') {
      out += "\\\\";
    } else if (b >= 0x20 && b < 0x7f) {
      out.push_back(c);
    } else {
      out += "\\x";
      out.push_back(kHex[b >> 4]);
      out.push_back(kHex[b & 0xf]);
    }
  }
  return out;
}

std::vector<std::string> parse_pattern_lines(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    out.push_back(unescape(line));
  }
  return out;
}

std::vector<std::string> load_pattern_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open pattern file " + path.string());
  return parse_pattern_lines(in);
}

}  // namespace psm
