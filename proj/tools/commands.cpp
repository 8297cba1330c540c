#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>

#include "psm/escape.hpp"
#include "psm/oracle.hpp"

namespace psm::cli {
namespace {

void write_step(std::ostream& out, std::size_t i, const StepResult& step, const Text& text,
                Mode mode) {
  out << i << '\t' << step.delta << '\t' << step.cumulative << '\n';
  if (mode != Mode::reporting) return;
  for (const Solution& s : step.reported) {
    const Text w(text.begin() + (s.start - 1), text.begin() + s.end);
    out << i << '\t' << s.start << '\t' << s.end << '\t' << escape(decode_bytes(w)) << '\n';
  }
}

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::optional<std::size_t> parse_k2(const std::string& value) {
  if (value == "inf") return std::nullopt;
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != value.size() || value.front() == '-')
    throw InvalidInput("--k2 expects a positive integer or 'inf', got '" + value + "'");
  return static_cast<std::size_t>(v);
}

Mode parse_mode(const std::string& value) {
  return value == "report" ? Mode::reporting : Mode::counting;
}

struct MatchArgs {
  std::string prefixes;
  std::string suffixes;
  std::size_t k1 = 1;
  std::string k2 = "inf";
  std::string mode;
  std::string input;
};

void add_match_options(CLI::App& cmd, MatchArgs& a, const std::string& default_mode) {
  a.mode = default_mode;
  cmd.add_option("--prefixes", a.prefixes, "prefix pattern file")->required();
  cmd.add_option("--suffixes", a.suffixes, "suffix pattern file")->required();
  cmd.add_option("--k1", a.k1, "minimum solution length")->required();
  cmd.add_option("--k2", a.k2, "maximum solution length or 'inf'")->capture_default_str();
  cmd.add_option("--mode", a.mode, "count or report")
      ->check(CLI::IsMember({"count", "report"}))
      ->capture_default_str();
  cmd.add_option("--input", a.input, "text file (default: standard input)");
}

}  // namespace

void stream_matches(const std::vector<std::string>& prefixes,
                    const std::vector<std::string>& suffixes, LengthRange range, Mode mode,
                    std::istream& in, std::ostream& out, bool flush_each_step) {
  Engine engine(EngineConfig::create(encode_all(prefixes), encode_all(suffixes), range, mode));
  std::streambuf* buf = in.rdbuf();
  for (int c = buf->sbumpc(); c != std::char_traits<char>::eof(); c = buf->sbumpc()) {
    const StepResult step = engine.feed(byte_to_symbol(static_cast<unsigned char>(c)));
    write_step(out, engine.position(), step, engine.text(), mode);
    if (flush_each_step) out.flush();
  }
}

void oracle_matches(const std::vector<std::string>& prefixes,
                    const std::vector<std::string>& suffixes, LengthRange range, Mode mode,
                    std::istream& in, std::ostream& out) {
  const Text text = encode_bytes(read_all(in));
  const OracleAnswers oracle(text, encode_all(prefixes), encode_all(suffixes), range);
  for (std::size_t i = 1; i <= oracle.length(); ++i) {
    StepResult step{oracle.fresh(i).size(), oracle.cumulative(i), oracle.fresh(i)};
    write_step(out, i, step, text, mode);
  }
}

void print_dedup(PatternKind kind, const std::vector<std::string>& patterns, std::ostream& out) {
  const auto raw = encode_all(patterns);
  const PatternList kept = kind == PatternKind::prefix ? remove_redundant_prefix_patterns(raw)
                                                       : remove_redundant_suffix_patterns(raw);
  for (const Text& p : kept) out << escape(decode_bytes(p)) << '\n';
}

void print_classification(std::string_view payload, const SignatureSet& signatures,
                          std::ostream& out) {
  for (const Verdict& v : classify_payload(payload, signatures)) {
    if (!v.matched) continue;
    out << v.name << '\t';
    if (v.position) out << "match@" << *v.position << '\n';
    else out << "predicate-match\n";
  }
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Online distinct substring matching with prefix, suffix and length conditions",
               "psmatch"};
  app.require_subcommand(1);

  MatchArgs run_args;
  auto* run_cmd = app.add_subcommand("run", "stream a text through the online engine");
  add_match_options(*run_cmd, run_args, "count");

  MatchArgs oracle_args;
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force reference with the same output");
  add_match_options(*oracle_cmd, oracle_args, "report");

  std::string dedup_kind;
  std::string dedup_file;
  auto* dedup_cmd = app.add_subcommand("dedup", "print the non-redundant patterns");
  dedup_cmd->add_option("--kind", dedup_kind, "prefix or suffix")
      ->required()
      ->check(CLI::IsMember({"prefix", "suffix"}));
  dedup_cmd->add_option("--patterns", dedup_file, "pattern file")->required();

  std::string signature_file;
  std::string payload_file;
  auto* classify_cmd = app.add_subcommand("classify", "match a payload against signatures");
  classify_cmd->add_option("--signatures", signature_file, "signature file (default: built-ins)");
  classify_cmd->add_option("--payload", payload_file, "payload file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    auto open_input = [&](const std::string& path, std::ifstream& file) -> std::istream& {
      if (path.empty() || path == "-") return in;
      file.open(path, std::ios::binary);
      if (!file) throw InvalidInput("cannot open input file " + path);
      return file;
    };

    for (auto [cmd, a] : {std::pair{run_cmd, &run_args}, std::pair{oracle_cmd, &oracle_args}}) {
      if (!cmd->parsed()) continue;
      const LengthRange range{a->k1, parse_k2(a->k2)};
      range.validate();
      const auto prefixes = load_pattern_file(a->prefixes);
      const auto suffixes = load_pattern_file(a->suffixes);
      std::ifstream file;
      std::istream& text = open_input(a->input, file);
      if (cmd == run_cmd)
        stream_matches(prefixes, suffixes, range, parse_mode(a->mode), text, out, &text == &in);
      else
        oracle_matches(prefixes, suffixes, range, parse_mode(a->mode), text, out);
      return 0;
    }
    if (dedup_cmd->parsed()) {
      print_dedup(dedup_kind == "prefix" ? PatternKind::prefix : PatternKind::suffix,
                  load_pattern_file(dedup_file), out);
      return 0;
    }
    if (classify_cmd->parsed()) {
      std::ifstream payload(payload_file, std::ios::binary);
      if (!payload) throw InvalidInput("cannot open payload file " + payload_file);
      const std::string bytes = read_all(payload);
      if (signature_file.empty()) print_classification(bytes, builtin_signatures(), out);
      else print_classification(bytes, load_signature_file(signature_file), out);
      return 0;
    }
  } catch (const InvalidInput& e) {
    err << "psmatch: " << e.what() << '\n';
    return 2;
  }
  return 1;
}

}  // namespace psm::cli
