#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "psm/engine.hpp"
#include "psm/patterns.hpp"
#include "psm/signatures.hpp"

namespace psm::cli {

/// Streams `in` through an engine, writing `i\tdelta\tcumulative` per
/// symbol and, in reporting mode, `i\tstart\tend\tescaped` per solution.
void stream_matches(const std::vector<std::string>& prefixes,
                    const std::vector<std::string>& suffixes, LengthRange range, Mode mode,
                    std::istream& in, std::ostream& out, bool flush_each_step = false);

/// Same output as stream_matches, computed by brute force over all of `in`.
void oracle_matches(const std::vector<std::string>& prefixes,
                    const std::vector<std::string>& suffixes, LengthRange range, Mode mode,
                    std::istream& in, std::ostream& out);

void print_dedup(PatternKind kind, const std::vector<std::string>& patterns, std::ostream& out);

/// `<name>\tmatch@<pos>` or `<name>\tpredicate-match` per matching signature.
void print_classification(std::string_view payload, const SignatureSet& signatures,
                          std::ostream& out);

/// Full command line entry point; args exclude the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace psm::cli
