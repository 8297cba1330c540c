#include "psm/signatures.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>

#include "psm/escape.hpp"

namespace psm {

EngineSignature make_engine_signature(std::vector<std::string> prefixes,
                                      std::vector<std::string> suffixes, LengthRange range) {
  EngineSignature sig{std::move(prefixes), std::move(suffixes), range, nullptr};
  sig.config = EngineConfig::create(encode_all(sig.prefixes), encode_all(sig.suffixes), range,
                                    Mode::counting);
  return sig;
}

SignatureSet::SignatureSet(std::vector<Signature> signatures) : signatures_(std::move(signatures)) {
  std::set<std::string_view> names;
  for (const Signature& s : signatures_) {
    if (s.name.empty()) throw InvalidInput("signature with empty name");
    if (!names.insert(s.name).second) throw InvalidInput("duplicate signature name " + s.name);
  }
}

const Signature* SignatureSet::find(std::string_view name) const {
  auto it = std::find_if(signatures_.begin(), signatures_.end(),
                         [&](const Signature& s) { return s.name == name; });
  return it == signatures_.end() ? nullptr : &*it;
}

const SignatureSet& builtin_signatures() {
  static const SignatureSet set = [] {
    const LengthRange any{1, std::nullopt};
    std::vector<Signature> sigs;
    sigs.push_back({"Gnutella",
                    make_engine_signature(
                        {"User-Agent:", "UserAgent:", "Server:"},
                        {"LimeWire",      "BearShare",   "Gnucleus",     "MorpheusOS",
                         "XoloX",         "MorpheusPE",  "gtkgnutella",  "Acquisition",
                         "Mutella-0.4.1", "MyNapster",   "Mutella0.4.1", "Mutella-0.4",
                         "Qtella",        "AquaLime",    "NapShare",     "Comeback",
                         "Go",            "PHEX",        "SwapNut",      "Mutella-0.4.0",
                         "Shareaza",      "Mutella-0.3.9b", "Morpheus",  "FreeWire",
                         "Openext",       "Mutella-0.3.3", "Phex"},
                        any)});
    sigs.push_back({"eDonkey", LengthHeaderSignature{std::string(1, '\xe3'), 5}});
    sigs.push_back({"DirectConnect",
                    make_engine_signature(
                        {"$MyNick",      "$Lock",         "$Key",          "$Direction",
                         "$GetListLen",  "$ListLen",      "$MaxedOut",     "$Error",
                         "$Send",        "$Get",          "$FileLength",   "$Canceled",
                         "$HubName",     "$ValidateNick", "$ValidateDenide", "$GetPass",
                         "$MyPass",      "$BadPass",      "$Version",      "$Hello",
                         "$LogedIn",     "$MyINFO",       "$GetINFO",      "$GetNickList",
                         "$NickList",    "$OpList",       "$To",           "$ConnectToMe",
                         "$MultiConnectToMe", "$RevConnectToMe", "$Search", "$MultiSearch",
                         "$SR",          "$Kick",         "$OpForceMove",  "$ForceMove",
                         "$Quit"},
                        {"|"}, any)});
    sigs.push_back({"BitTorrent", FixedPrefixSignature{"\x13" "BitTorrent protocol"}});
    sigs.push_back({"Kazaa", make_engine_signature({"GET", "HTTP"}, {"X-Kazaa"}, any)});
    return SignatureSet(std::move(sigs));
  }();
  return set;
}

namespace {

std::optional<std::size_t> first_solution(std::string_view payload, const EngineSignature& sig) {
  Engine engine(sig.config);
  for (char c : payload)
    if (engine.feed(byte_to_symbol(static_cast<unsigned char>(c))).delta > 0)
      return engine.position();
  return std::nullopt;
}

bool matches(std::string_view payload, const LengthHeaderSignature& sig) {
  const std::size_t marker = sig.marker.size();
  if (sig.header_size <= marker || payload.size() < sig.header_size) return false;
  if (payload.substr(0, marker) != sig.marker) return false;
  std::uint64_t length = 0;
  for (std::size_t b = sig.header_size; b-- > marker;)
    length = (length << 8) | static_cast<unsigned char>(payload[b]);
  return length == payload.size() - sig.header_size;
}

bool matches(std::string_view payload, const FixedPrefixSignature& sig) {
  return payload.starts_with(sig.bytes);
}

}  // namespace

std::vector<Verdict> classify_payload(std::string_view payload, const SignatureSet& signatures) {
  if (payload.empty()) throw InvalidInput("empty payload");
  std::vector<Verdict> out;
  out.reserve(signatures.size());
  for (const Signature& sig : signatures.signatures()) {
    Verdict v{sig.name, false, std::nullopt};
    if (const auto* e = std::get_if<EngineSignature>(&sig.rule)) {
      v.position = first_solution(payload, *e);
      v.matched = v.position.has_value();
    } else if (const auto* h = std::get_if<LengthHeaderSignature>(&sig.rule)) {
      v.matched = matches(payload, *h);
    } else {
      v.matched = matches(payload, std::get<FixedPrefixSignature>(sig.rule));
    }
    out.push_back(std::move(v));
  }
  return out;
}

bool can_overlap(std::string_view p, std::string_view s) {
  const std::size_t longest = std::min(p.size(), s.size());
  for (std::size_t len = 1; len <= longest; ++len)
    if (p.substr(p.size() - len) == s.substr(0, len)) return true;
  return false;
}

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t from = 0;
  for (;;) {
    const std::size_t at = line.find(sep, from);
    out.push_back(line.substr(from, at == std::string_view::npos ? at : at - from));
    if (at == std::string_view::npos) return out;
    from = at + 1;
  }
}

std::vector<std::string> pattern_field(std::string_view field) {
  std::vector<std::string> out;
  if (field.empty()) return out;
  for (std::string_view item : split(field, ',')) out.push_back(unescape(item));
  return out;
}

std::size_t parse_count(std::string_view token, std::string_view what) {
  std::size_t v = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || end != token.data() + token.size())
    throw InvalidInput("bad " + std::string(what) + " \"" + std::string(token) + "\"");
  return v;
}

Signature parse_signature(std::string_view line) {
  const auto fields = split(line, '|');
  if (fields.size() != 6)
    throw InvalidInput("signature line needs 6 '|'-separated fields: " + std::string(line));
  const std::string name = unescape(fields[0]);
  const std::string_view kind = fields[1];
  const std::size_t k1 = parse_count(fields[2], "k1");
  auto prefixes = pattern_field(fields[4]);
  auto suffixes = pattern_field(fields[5]);

  if (kind == "engine") {
    LengthRange range{k1, std::nullopt};
    if (fields[3] != "inf") range.max = parse_count(fields[3], "k2");
    return {name, make_engine_signature(std::move(prefixes), std::move(suffixes), range)};
  }
  if (prefixes.size() != 1 || !suffixes.empty())
    throw InvalidInput("fixed-format signature " + name + " takes exactly one P parameter");
  if (kind == "length-header") {
    if (prefixes[0].empty() || k1 <= prefixes[0].size() || k1 - prefixes[0].size() > 8)
      throw InvalidInput("length-header signature " + name + " has an unusable header size");
    return {name, LengthHeaderSignature{std::move(prefixes[0]), k1}};
  }
  if (kind == "fixed-prefix") {
    if (prefixes[0].size() != k1)
      throw InvalidInput("fixed-prefix signature " + name + " length does not match k1");
    return {name, FixedPrefixSignature{std::move(prefixes[0])}};
  }
  throw InvalidInput("unknown signature kind \"" + std::string(kind) + "\"");
}

}  // namespace

SignatureSet parse_signature_lines(std::istream& in) {
  std::vector<Signature> sigs;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    sigs.push_back(parse_signature(line));
  }
  return SignatureSet(std::move(sigs));
}

SignatureSet load_signature_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open signature file " + path.string());
  return parse_signature_lines(in);
}

}  // namespace psm
