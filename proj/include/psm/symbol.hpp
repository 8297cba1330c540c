#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace psm {

/// Integer-coded text symbol. Code 0 is reserved for the separator
/// sentinel used inside concatenated pattern texts; every text symbol
/// has code >= 1, so the sentinel sorts strictly before all of them.
using Symbol = std::uint32_t;
using Text = std::vector<Symbol>;

inline constexpr Symbol kSentinel = 0;

/// Thrown for malformed caller input (empty patterns, sentinel symbols,
/// out-of-range indices, inconsistent length bounds, bad files).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Byte b maps to code b + 1.
constexpr Symbol byte_to_symbol(unsigned char b) noexcept {
  return static_cast<Symbol>(b) + 1;
}

Text encode_bytes(std::string_view bytes);
std::vector<Text> encode_all(const std::vector<std::string>& bytes);

/// Inverse of encode_bytes. Throws InvalidInput on codes outside 1..256.
std::string decode_bytes(const Text& text);

}  // namespace psm
