#include <doctest.h>

#include <functional>

#include "helpers.hpp"
#include "hyperconn/combinatorics.hpp"

using namespace hyperconn;
using testing::error_of;

TEST_CASE("binom small values and range convention") {
  CHECK(binom(5, 2) == 10);
  CHECK(binom(4, 0) == 1);
  CHECK(binom(3, 5) == 0);
  CHECK(binom(3, -1) == 0);
  CHECK(binom(0, 0) == 1);
  CHECK(error_of([] { binom(-1, 0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("binom obeys Pascal's rule across the table boundary") {
  for (int a = 1; a <= 300; ++a) {
    for (int b = 1; b <= a; b += (a > 40 ? 7 : 1)) {
      REQUIRE(binom(a, b) == binom(a - 1, b - 1) + binom(a - 1, b));
    }
  }
  CHECK(binom(300, 150) == binom(300, 150));
  CHECK(binom(257, 1) == 257);
  CHECK(binom(400, 2) == 79800);
  CHECK(binom(100, 50).str() == "100891344545564193334812497256");
}

TEST_CASE("compute_g frozen values and minimality") {
  CHECK(compute_g(2, 2) == 3);
  CHECK(compute_g(2, 3) == 4);
  CHECK(compute_g(3, 2) == 4);
  const auto holds = [](int g, int k, int r) {
    return BigInt(g) * k <= BigInt(g) * binom(g - 1, r - 1) + (r - 1) * (k - 1);
  };
  for (int k = 2; k <= 8; ++k) {
    for (int r = 2; r <= 8; ++r) {
      const int g = compute_g(k, r);
      CHECK(g >= r);
      CHECK(holds(g, k, r));
      if (g - 1 >= r) CHECK_FALSE(holds(g - 1, k, r));
    }
  }
  CHECK(error_of([] { compute_g(1, 2); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("compute_jstar and compute_j0 frozen values") {
  CHECK(compute_jstar(12, 2, 1) == 5);
  CHECK_FALSE(compute_jstar(8, 2, 3).has_value());
  CHECK(compute_jstar(10, 3, 1) == 4);
  CHECK(compute_j0(12, 1, 2) == 5);
  CHECK(compute_j0(10, 2, 2) == 4);
  CHECK_FALSE(compute_j0(8, 5, 2).has_value());
}

TEST_CASE("compute_jstar is the largest qualifying j") {
  for (int r = 2; r <= 5; ++r) {
    for (int n = 2 * r; n <= 30; ++n) {
      for (int c = 1; c <= 5; ++c) {
        const auto j = compute_jstar(n, r, c);
        const auto ok = [&](int x) { return binom(x - 1, r - 1) + c <= binom(n - x - 1, r - 1); };
        if (j) {
          CHECK(*j >= r + 1);
          CHECK(2 * *j < n);
          CHECK(ok(*j));
          for (int x = *j + 1; 2 * x < n; ++x) CHECK_FALSE(ok(x));
        } else {
          for (int x = r + 1; 2 * x < n; ++x) CHECK_FALSE(ok(x));
        }
      }
    }
  }
}

TEST_CASE("thresholds bundle") {
  const auto t = compute_thresholds(12, 2, 2, 1, 4);
  CHECK(t.g == 3);
  CHECK(t.jstar == 5);
  CHECK(t.j0 == 5);
  CHECK(t.delta_gap == 4);
  CHECK(delta_gap(10, 4, 3) == binom(5, 2) - binom(3, 2));
  CHECK_FALSE(compute_thresholds(12, 2, 1, 1, 4).g.has_value());
}

namespace {

std::vector<std::pair<std::vector<int>, std::vector<int>>> as_pairs(const std::vector<CrossingProfile>& ps) {
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  for (const auto& p : ps) out.emplace_back(p.t, p.s);
  return out;
}

}  // namespace

TEST_CASE("enumerate_profiles frozen examples") {
  using P = std::vector<std::pair<std::vector<int>, std::vector<int>>>;
  CHECK(as_pairs(enumerate_profiles(1, 3, 4, 10)) == P{{{1}, {2}}, {{2}, {1}}});
  CHECK(as_pairs(enumerate_profiles(1, 2, 3, 6)) == P{{{1}, {1}}});
  CHECK(as_pairs(enumerate_profiles(2, 2, 4, 9)) ==
        P{{{0, 1}, {2, 0}}, {{1, 0}, {1, 1}}, {{1, 1}, {1, 0}}, {{2, 0}, {0, 1}}, {{2, 0}, {2, 0}}});
  const auto empty = enumerate_profiles(0, 3, 4, 10);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].t.empty());
  CHECK(is_valid_profile(empty[0]));
}

TEST_CASE("suffix sums and incidences") {
  CrossingProfile p{3, {1, 2, 1}, {0, 1, 2}, 5, 12, 3};
  CHECK(p.suffix_t(1) == 4);
  CHECK(p.suffix_t(3) == 1);
  CHECK(p.suffix_t(4) == 0);
  CHECK(p.suffix_s(2) == 3);
  CHECK(p.left_incidences() == 1 + 4 + 3);
  CHECK(p.right_incidences() == 0 + 2 + 6);
}

TEST_CASE("enumerate_profiles equals a brute-force filter of the full box") {
  for (int c = 1; c <= 3; ++c) {
    for (int r = 2; r <= 4; ++r) {
      for (int n = 2 * r; n <= 12; ++n) {
        for (int j = r; j <= n - r; ++j) {
          std::vector<CrossingProfile> brute;
          std::vector<int> coords(2 * c, 0);
          const int top = c * r;
          std::function<void(int)> rec = [&](int i) {
            if (i == 2 * c) {
              CrossingProfile p{c, {coords.begin(), coords.begin() + c}, {coords.begin() + c, coords.end()}, j, n, r};
              if (is_valid_profile(p)) brute.push_back(p);
              return;
            }
            for (int v = 0; v <= top; ++v) {
              coords[i] = v;
              rec(i + 1);
            }
          };
          rec(0);
          REQUIRE(enumerate_profiles(c, r, j, n) == brute);
        }
      }
    }
  }
}

TEST_CASE("profile validity is symmetric under swapping sides") {
  for (int c = 1; c <= 3; ++c) {
    for (int r = 2; r <= 4; ++r) {
      for (int n = 2 * r; n <= 11; ++n) {
        for (int j = r; j <= n - r; ++j) {
          for (const auto& p : enumerate_profiles(c, r, j, n)) {
            CrossingProfile mirrored{c, p.s, p.t, n - j, n, r};
            CHECK(is_valid_profile(mirrored));
          }
          CHECK(enumerate_profiles(c, r, j, n).size() == enumerate_profiles(c, r, n - j, n).size());
        }
      }
    }
  }
}

TEST_CASE("every enumerated profile satisfies the incidence total") {
  for (const auto& p : enumerate_profiles(3, 3, 5, 12)) {
    CHECK(p.left_incidences() + p.right_incidences() == p.c * p.r);
    CHECK(p.t[0] + p.s[0] >= p.c);
  }
}
