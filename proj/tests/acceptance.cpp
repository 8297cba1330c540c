// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "brute_force.hpp"
#include "psm/engine.hpp"
#include "psm/lrs_tracker.hpp"
#include "psm/oracle.hpp"
#include "psm/patterns.hpp"
#include "psm/signatures.hpp"

using namespace psm;
using psm::test::strs;
using psm::test::txt;
using psm::test::txts;
using Strings = std::vector<std::string>;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && outcome_.pass) {
      outcome_.pass = false;
      outcome_.detail = what;
    }
  }
  void note(const std::string& s) {
    if (outcome_.pass) outcome_.detail = s;
  }
  Outcome result() const { return outcome_; }

 private:
  Outcome outcome_;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

const Strings kExampleP{"cave", "coco", "cocoa", "d", "oao", "old"};
const Strings kExampleS{"aold", "oaold"};

Outcome running_example() {
  Check c;
  const auto t0 = Clock::now();
  auto cfg = EngineConfig::create(txts(kExampleP), txts(kExampleS), LengthRange{3, 8}, Mode::reporting);
  c.expect(strs(cfg->prefixes().patterns()) == Strings{"cave", "coco", "d", "oao", "old"}, "P after dedup");
  c.expect(strs(cfg->suffixes().patterns()) == Strings{"aold"}, "S after dedup");
  Engine e(cfg);
  const Text t = txt("coldcocoaold");
  StepResult r;
  for (std::size_t i = 1; i <= t.size(); ++i) {
    r = e.feed(t[i - 1]);
    if (i < t.size()) c.expect(r.delta == 0, "delta != 0 before i=12");
  }
  c.expect(e.candidates().to_vector() == std::vector<std::size_t>{2, 4, 5, 8, 10, 12}, "pList");
  c.expect(e.lrs_count() == 2, "lrsCount");
  c.expect(e.k1_count() == 1, "k1Count");
  c.expect(cfg->tables().s_p_count == std::vector<std::size_t>{2}, "sPCount");
  c.expect(e.left_count() == 2, "leftCount");
  c.expect(r.delta == 2, "delta");
  c.expect(r.reported == std::vector<Solution>{{5, 12}, {8, 12}}, "reported");
  const double secs = seconds_since(t0);
  c.expect(secs < 1.0, "runtime " + fmt(secs) + " s");
  c.note("delta=2 reported={(5,12),(8,12)} in " + fmt(secs) + " s");
  return c.result();
}

Outcome dedup_example() {
  Check c;
  const auto t0 = Clock::now();
  const auto kept = strs(remove_redundant_prefix_patterns(txts({"abc", "ab", "acc", "ab", "cab"})).patterns());
  const double secs = seconds_since(t0);
  c.expect(kept == Strings{"ab", "acc", "cab"}, "survivors");
  c.expect(secs < 1.0, "runtime");
  c.note("(ab, acc, cab) in " + fmt(secs) + " s");
  return c.result();
}

Outcome s_p_count_example() {
  Check c;
  const auto counts = compute_s_p_counts(remove_redundant_prefix_patterns(txts(kExampleP)),
                                         remove_redundant_suffix_patterns(txts(kExampleS)));
  c.expect(counts == std::vector<std::size_t>{2}, "sPCount[aold]");
  c.note("sPCount[aold]=2");
  return c.result();
}

Outcome oracle_equivalence() {
  Check c;
  const auto t0 = Clock::now();
  std::mt19937_64 rng(1);
  std::size_t mismatches = 0;
  std::size_t unbounded = 0;
  std::size_t solutions = 0;
  for (int round = 0; round < 1000; ++round) {
    const auto rawP = psm::test::random_patterns(rng, 5, 6, 3);
    const auto rawS = psm::test::random_patterns(rng, 5, 6, 3);
    const Text t = psm::test::random_text(rng, std::uniform_int_distribution<std::size_t>(1, 100)(rng), 3);
    const std::size_t k1 = std::uniform_int_distribution<std::size_t>(1, t.size() + 1)(rng);
    LengthRange range{k1, std::nullopt};
    if (round % 4 != 0) range.max = std::uniform_int_distribution<std::size_t>(k1, t.size() + 1)(rng);
    else ++unbounded;

    Engine e(EngineConfig::create(rawP, rawS, range, Mode::reporting));
    const OracleAnswers oracle(t, rawP, rawS, range);
    for (std::size_t i = 1; i <= t.size(); ++i) {
      const StepResult r = e.feed(t[i - 1]);
      if (r.cumulative != oracle.cumulative(i) || r.reported != oracle.fresh(i)) {
        ++mismatches;
        break;
      }
    }
    solutions += e.cumulative();
  }
  const double secs = seconds_since(t0);
  c.expect(mismatches == 0, std::to_string(mismatches) + " mismatching instances");
  c.expect(secs < 120.0, "runtime " + fmt(secs) + " s");
  c.note("1000 instances (" + std::to_string(unbounded) + " with k2=inf), " + std::to_string(solutions) +
         " solutions, 0 mismatches, " + fmt(secs) + " s");
  return c.result();
}

Outcome lrs_equivalence() {
  Check c;
  std::mt19937_64 rng(2);
  std::size_t checked = 0;
  for (int round = 0; round < 500; ++round) {
    const Symbol sigma = std::uniform_int_distribution<Symbol>(1, 3)(rng);
    const Text t = psm::test::random_text(rng, std::uniform_int_distribution<std::size_t>(1, 300)(rng), sigma);
    LrsTracker tracker;
    std::size_t prev_start = 1;
    for (std::size_t i = 1; i <= t.size(); ++i) {
      const std::size_t lrs = tracker.extend(t[i - 1]);
      c.expect(lrs == psm::test::naive_lrs(t, i), "lrs mismatch");
      c.expect(i - lrs + 1 >= prev_start, "monotonicity");
      prev_start = i - lrs + 1;
      ++checked;
    }
  }
  c.note("500 streams, " + std::to_string(checked) + " extensions checked");
  return c.result();
}

Outcome table_equivalence() {
  Check c;
  std::mt19937_64 rng(3);
  for (int round = 0; round < 500; ++round) {
    const Symbol sigma = std::uniform_int_distribution<Symbol>(1, 3)(rng);
    const PatternList P = remove_redundant_prefix_patterns(psm::test::random_patterns(rng, 8, 6, sigma));
    const PatternList S = remove_redundant_suffix_patterns(psm::test::random_patterns(rng, 8, 6, sigma));
    c.expect(compute_successor_offsets(P) == psm::test::naive_successor_offsets(P.patterns()),
             "successorOffset mismatch");
    c.expect(compute_s_p_counts(P, S) == psm::test::naive_s_p_counts(P.patterns(), S.patterns()),
             "sPCount mismatch");
  }
  c.note("500 instances exact");
  return c.result();
}

Outcome work_linearity() {
  Check c;
  std::mt19937_64 rng(4);
  // Short patterns over a small alphabet keep the candidate list busy.
  const auto rawP = txts({"a", "ba", "cab", "bcb"});
  const auto rawS = txts({"b", "cc", "aca"});
  auto cfg = EngineConfig::create(rawP, rawS, LengthRange{3, 40}, Mode::counting);
  const Text stream = psm::test::random_text(rng, 200000, 3);

  std::size_t iterations[2] = {0, 0};
  std::size_t lrs_work[2] = {0, 0};
  std::string detail;
  for (int which = 0; which < 2; ++which) {
    const std::size_t n = which == 0 ? 100000 : 200000;
    Engine e(cfg);
    for (std::size_t i = 0; i < n; ++i) e.feed(stream[i]);
    const EngineWork& w = e.work();
    c.expect(w.insertions <= n, "insertions > N at N=" + std::to_string(n));
    c.expect(w.prefix_matches + w.suffix_matches <= 2 * n, "match emissions > 2N at N=" + std::to_string(n));
    iterations[which] = w.counter_iterations;
    lrs_work[which] = e.lrs_work().total();
    detail += "N=" + std::to_string(n) + ": ins=" + std::to_string(w.insertions) +
              " matches=" + std::to_string(w.prefix_matches + w.suffix_matches) +
              " counter=" + std::to_string(w.counter_iterations) + "; ";
  }
  const double ratio = static_cast<double>(iterations[1]) / static_cast<double>(iterations[0]);
  const double lrs_ratio = static_cast<double>(lrs_work[1]) / static_cast<double>(lrs_work[0]);
  c.expect(ratio <= 2.5, "counter iteration growth " + fmt(ratio));
  c.expect(lrs_ratio <= 2.5, "suffix tree work growth " + fmt(lrs_ratio));
  c.note(detail + "growth=" + fmt(ratio) + " (tree " + fmt(lrs_ratio) + ")");
  return c.result();
}

Outcome signature_sanity() {
  Check c;
  const SignatureSet& sigs = builtin_signatures();
  auto verdict = [&](const std::string& payload, const std::string& name) {
    for (const Verdict& v : classify_payload(payload, sigs))
      if (v.name == name) return v.matched;
    return false;
  };
  c.expect(verdict("GET /x HTTP/1.1\r\nHost: h\r\nX-Kazaa-Username: u\r\n", "Kazaa"), "Kazaa payload");
  c.expect(verdict("User-Agent: LimeWire/5.0\r\n", "Gnutella"), "Gnutella payload");

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> byte(0, 255);
  std::string noise(1024, '\0');
  for (char& ch : noise) ch = static_cast<char>(byte(rng));
  for (const Verdict& v : classify_payload(noise, sigs)) {
    const Signature* s = sigs.find(v.name);
    if (std::holds_alternative<EngineSignature>(s->rule))
      c.expect(!v.matched, "random payload matched " + v.name);
  }

  auto rule = [&](const char* name) -> const EngineSignature& {
    return std::get<EngineSignature>(sigs.find(name)->rule);
  };
  for (const auto& p : rule("Gnutella").prefixes) c.expect(p.back() == ':', "Gnutella P ends with ':'");
  for (const auto& s : rule("Gnutella").suffixes) c.expect(s.find(':') == std::string::npos, "Gnutella S has ':'");
  for (const auto& p : rule("DirectConnect").prefixes)
    c.expect(p.front() == '$' && p.find('|') == std::string::npos, "DirectConnect P");
  for (const auto& s : rule("DirectConnect").suffixes) c.expect(s.find('$') == std::string::npos, "DirectConnect S has '$'");
  for (const auto& p : rule("Kazaa").prefixes)
    for (const auto& s : rule("Kazaa").suffixes)
      c.expect(p.find_first_of(s) == std::string::npos, "Kazaa P and S share a character");
  for (const char* name : {"Gnutella", "DirectConnect", "Kazaa"})
    for (const auto& p : rule(name).prefixes)
      for (const auto& s : rule(name).suffixes) c.expect(!can_overlap(p, s), std::string(name) + " overlap");
  c.note("Kazaa+Gnutella positive, 1 KiB noise negative, no P/S overlap possible");
  return c.result();
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"running-example-reproduction", running_example},
      {"dedup-example-reproduction", dedup_example},
      {"s-p-count-example-reproduction", s_p_count_example},
      {"oracle-equivalence", oracle_equivalence},
      {"lrs-tracker-equivalence", lrs_equivalence},
      {"table-equivalence", table_equivalence},
      {"work-linearity", work_linearity},
      {"signature-sanity", signature_sanity},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s  %-32s %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    if (!o.pass) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
