#include <doctest.h>

#include <random>

#include "brute_force.hpp"
#include "psm/lrs_tracker.hpp"

using namespace psm;
using psm::test::txt;

namespace {

std::vector<std::size_t> lrs_sequence(const Text& t) {
  LrsTracker tracker;
  std::vector<std::size_t> out;
  for (Symbol s : t) out.push_back(tracker.extend(s));
  return out;
}

}  // namespace

TEST_CASE("small streams") {
  CHECK(lrs_sequence(txt("abc")) == std::vector<std::size_t>{0, 0, 0});
  CHECK(lrs_sequence(txt("aaa")) == std::vector<std::size_t>{0, 1, 2});
  CHECK(lrs_sequence(txt("coldcocoaold")).back() == 3);
}

TEST_CASE("rejects the sentinel") {
  LrsTracker tracker;
  CHECK_THROWS_AS(tracker.extend(kSentinel), InvalidInput);
}

TEST_CASE("random streams agree with the quadratic oracle") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<Symbol> alpha(1, 3);
  std::uniform_int_distribution<std::size_t> len(1, 300);
  for (int round = 0; round < 300; ++round) {
    const Text t = psm::test::random_text(rng, len(rng), alpha(rng));
    LrsTracker tracker;
    std::size_t prev_start = 1;
    for (std::size_t i = 1; i <= t.size(); ++i) {
      const std::size_t lrs = tracker.extend(t[i - 1]);
      REQUIRE(lrs == psm::test::naive_lrs(t, i));
      REQUIRE(lrs < i);
      const std::size_t start = i - lrs + 1;
      REQUIRE(start >= prev_start);
      prev_start = start;
    }
    // Leaves and splits are at most one each per symbol, link hops one per
    // remainder decrement, and walk-downs amortize against active length.
    REQUIRE(tracker.work().total() <= 4 * t.size());
  }
}

TEST_CASE("periodic and long texts") {
  Text t;
  for (int i = 0; i < 2000; ++i) t.push_back(1 + (i % 7 == 0 ? 2 : i % 2));
  LrsTracker tracker;
  for (std::size_t i = 1; i <= t.size(); ++i) {
    const std::size_t lrs = tracker.extend(t[i - 1]);
    if (i % 97 == 0) REQUIRE(lrs == psm::test::naive_lrs(t, i));
  }
  CHECK(tracker.work().total() <= 4 * t.size());
}
