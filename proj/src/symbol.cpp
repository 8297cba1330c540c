#include "psm/symbol.hpp"

namespace psm {

Text encode_bytes(std::string_view bytes) {
  Text out;
  out.reserve(bytes.size());
  for (char c : bytes) out.push_back(byte_to_symbol(static_cast<unsigned char>(c)));
  return out;
}

std::vector<Text> encode_all(const std::vector<std::string>& bytes) {
  std::vector<Text> out;
  out.reserve(bytes.size());
  for (const auto& b : bytes) out.push_back(encode_bytes(b));
  return out;
}

std::string decode_bytes(const Text& text) {
  std::string out;
  out.reserve(text.size());
  for (Symbol s : text) {
    if (s == kSentinel || s > 256) throw InvalidInput("symbol code outside byte range");
    out.push_back(static_cast<char>(s - 1));
  }
  return out;
}

}  // namespace psm
