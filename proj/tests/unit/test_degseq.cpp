#include <doctest.h>

#include <random>
#include <sstream>

#include "helpers.hpp"

using namespace hyperconn;
using testing::error_of;
using testing::seq;

TEST_CASE("make sorts and validates") {
  const auto d = seq({3, 1, 2, 2}, 2);
  CHECK(d.values() == std::vector<int>{1, 2, 2, 3});
  CHECK(d.at(1) == 1);
  CHECK(d.at(4) == 3);
  CHECK(d.min_degree() == 1);
  CHECK(d.max_degree() == 3);
  CHECK(seq({2, 2, 2}, 2).min_degree() == 2);
  CHECK(error_of([] { seq({5, 5, 5, 5}, 2); }) == ErrorCode::ValueOutOfRange);
  CHECK(error_of([] { seq({-1, 1}, 2); }) == ErrorCode::ValueOutOfRange);
  CHECK(error_of([] { seq({}, 2); }) == ErrorCode::EmptySequence);
  CHECK(error_of([] { seq({1, 1}, 1); }) == ErrorCode::RankTooSmall);
}

TEST_CASE("make is idempotent") {
  const auto d = seq({4, 0, 2, 3, 3}, 2);
  CHECK(DegreeSequence::make(d.values(), d.rank()) == d);
}

TEST_CASE("degree sum and edge count") {
  CHECK(seq({2, 2, 2}, 2).edge_count() == 3);
  CHECK_FALSE(seq({1, 1, 1}, 2).edge_count().has_value());
  CHECK(seq({1, 1, 1}, 3).edge_count() == 1);
  CHECK(seq({1, 2, 3, 0}, 2).degree_sum() == 6);
}

TEST_CASE("majorizes examples") {
  CHECK(majorizes(seq({2, 2, 2, 3}, 2), seq({2, 2, 2, 2}, 2)));
  CHECK(majorizes(seq({2, 2, 2}, 2), seq({2, 2, 2}, 2)));
  CHECK_FALSE(majorizes(seq({1, 3, 3, 3}, 2), seq({2, 2, 2, 2}, 2)));
  CHECK(error_of([] { majorizes(seq({1, 1}, 2), seq({1, 1, 1}, 2)); }) == ErrorCode::LengthMismatch);
}

TEST_CASE("majorizes is a partial order") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    auto draw = [&] {
      std::vector<int> v(n);
      for (auto& x : v) x = static_cast<int>(rng() % 3) + (n > 3 ? 1 : 0);
      for (auto& x : v) x = std::min(x, n - 1);
      return seq(v, 2);
    };
    const auto a = draw();
    const auto b = draw();
    const auto c = draw();
    CHECK(majorizes(a, a));
    if (majorizes(a, b) && majorizes(b, a)) CHECK(a == b);
    if (majorizes(a, b) && majorizes(b, c)) CHECK(majorizes(a, c));
  }
}

TEST_CASE("sequence text format") {
  CHECK(parse_sequence_line("1, 2,3") == std::vector<std::int64_t>{1, 2, 3});
  CHECK(parse_sequence_line("  4 5\t6 ") == std::vector<std::int64_t>{4, 5, 6});
  CHECK_FALSE(parse_sequence_line("   ").has_value());
  CHECK_FALSE(parse_sequence_line("# comment").has_value());
  CHECK(error_of([] { parse_sequence_line("1,x,3"); }) == ErrorCode::ParseError);
  std::istringstream in("# header\n2,2,2\n\n1 1\n");
  const auto all = read_sequences(in, 2);
  REQUIRE(all.size() == 2);
  CHECK(all[1].values() == std::vector<int>{1, 1});
}
