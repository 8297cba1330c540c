#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "psm/engine.hpp"

namespace psm {

/// Prefix/suffix signature evaluated by an Engine over the payload bytes.
struct EngineSignature {
  std::vector<std::string> prefixes;
  std::vector<std::string> suffixes;
  LengthRange range;
  std::shared_ptr<const EngineConfig> config;  // counting mode
};

/// Header of `header_size` bytes: `marker`, then a little-endian unsigned
/// length of the rest of the header that equals the bytes following it.
struct LengthHeaderSignature {
  std::string marker;
  std::size_t header_size = 0;
};

/// Payload begins with exactly these bytes.
struct FixedPrefixSignature {
  std::string bytes;
};

struct Signature {
  std::string name;
  std::variant<EngineSignature, LengthHeaderSignature, FixedPrefixSignature> rule;
};

EngineSignature make_engine_signature(std::vector<std::string> prefixes,
                                      std::vector<std::string> suffixes, LengthRange range);

class SignatureSet {
 public:
  SignatureSet() = default;
  explicit SignatureSet(std::vector<Signature> signatures);

  const std::vector<Signature>& signatures() const noexcept { return signatures_; }
  std::size_t size() const noexcept { return signatures_.size(); }
  const Signature* find(std::string_view name) const;

 private:
  std::vector<Signature> signatures_;
};

/// Gnutella, eDonkey, DirectConnect, BitTorrent and Kazaa.
const SignatureSet& builtin_signatures();

struct Verdict {
  std::string name;
  bool matched = false;
  std::optional<std::size_t> position;  // first iteration with a solution
};

/// One verdict per signature, in set order. Throws InvalidInput on an
/// empty payload.
std::vector<Verdict> classify_payload(std::string_view payload, const SignatureSet& signatures);

/// True iff some string could have p as a prefix and s as a suffix with
/// the two occurrences overlapping, i.e. a non-empty suffix of p is a
/// prefix of s.
bool can_overlap(std::string_view p, std::string_view s);

/// Reads `name|kind|k1|k2|p1,p2,...|s1,s2,...` lines. Kinds:
///   engine         k1 >= 1, k2 integer or "inf"
///   length-header  P field is the marker, k1 the header size, k2 unused
///   fixed-prefix   P field is the byte string, k1 its length, k2 unused
/// Fields use the pattern-file escapes; a literal '|' or ',' inside a
/// field must be written \x7c or \x2c. Blank lines and lines starting with
/// '#' are ignored.
SignatureSet parse_signature_lines(std::istream& in);
SignatureSet load_signature_file(const std::filesystem::path& path);

}  // namespace psm
