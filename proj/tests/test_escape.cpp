#include <doctest.h>

#include <random>
#include <sstream>

#include "psm/escape.hpp"
#include "psm/symbol.hpp"

using namespace psm;

TEST_CASE("unescape") {
  CHECK(unescape("abc") == "abc");
  CHECK(unescape("a\\x41\\x7c") == "aA|");
  CHECK(unescape("\\\\\\n\\r\\t") == "\\\n\r\t");
  CHECK(unescape("\\0") == std::string(1, '\0'));
  CHECK(unescape("\\xE3") == "\xe3");
}

TEST_CASE("unescape errors") {
  CHECK_THROWS_AS(unescape("\\"), InvalidInput);
  CHECK_THROWS_AS(unescape("\\x4"), InvalidInput);
  CHECK_THROWS_AS(unescape("\\xg0"), InvalidInput);
  CHECK_THROWS_AS(unescape("\\q"), InvalidInput);
}

TEST_CASE("escape keeps output single-line and tab-free") {
  CHECK(escape("a\tb\nc\\") == "a\\x09b\\x0ac\\\\");
  CHECK(escape(std::string("\x13\xff", 2)) == "\\x13\\xff");
}

TEST_CASE("escape round-trips arbitrary bytes") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> byte(0, 255);
  for (int round = 0; round < 500; ++round) {
    std::string b(round % 40, '\0');
    for (char& c : b) c = static_cast<char>(byte(rng));
    const std::string e = escape(b);
    REQUIRE(e.find_first_of("\t\n") == std::string::npos);
    REQUIRE(unescape(e) == b);
    REQUIRE(decode_bytes(encode_bytes(b)) == b);
  }
}

TEST_CASE("pattern lines") {
  std::istringstream in("abc\n\n\\x00z\nlast\r\n");
  CHECK(parse_pattern_lines(in) ==
        std::vector<std::string>{"abc", std::string("\0z", 2), "last\r"});
  CHECK(encode_bytes(std::string(1, '\0')) == Text{1});
  CHECK_THROWS_AS(load_pattern_file("/nonexistent/patterns"), InvalidInput);
}
