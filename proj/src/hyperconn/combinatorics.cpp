#include "hyperconn/combinatorics.hpp"

#include <algorithm>
#include <numeric>

#include "hyperconn/error.hpp"

namespace hyperconn {

namespace {

constexpr int kPascalRows = 257;

const std::vector<std::vector<BigInt>>& pascal() {
  static const std::vector<std::vector<BigInt>> table = [] {
    std::vector<std::vector<BigInt>> rows(kPascalRows);
    for (int a = 0; a < kPascalRows; ++a) {
      rows[a].resize(a + 1);
      rows[a][0] = rows[a][a] = 1;
      for (int b = 1; b < a; ++b) rows[a][b] = rows[a - 1][b - 1] + rows[a - 1][b];
    }
    return rows;
  }();
  return table;
}

}  // namespace

BigInt binom(int a, int b) {
  if (a < 0) throw Error(ErrorCode::InvalidArgument, "binom: negative upper argument");
  if (b < 0 || b > a) return 0;
  if (a < kPascalRows) return pascal()[a][b];
  b = std::min(b, a - b);
  BigInt acc = 1;
  for (int i = 1; i <= b; ++i) {
    acc *= a - b + i;
    acc /= i;
  }
  return acc;
}

int compute_g(int k, int r) {
  if (k < 2 || r < 2) throw Error(ErrorCode::InvalidArgument, "compute_g needs k >= 2 and r >= 2");
  for (int g = r;; ++g) {
    const BigInt lhs = BigInt(g) * k;
    const BigInt rhs = BigInt(g) * binom(g - 1, r - 1) + (r - 1) * (k - 1);
    if (lhs <= rhs) return g;
  }
}

std::optional<int> compute_jstar(int n, int r, int c) {
  if (r < 2) throw Error(ErrorCode::RankTooSmall, "rank must be at least 2");
  // Left side grows and right side shrinks with j, so the admissible j form
  // a prefix of [r+1, n/2); scan downward for the largest.
  for (int j = (n - 1) / 2; j >= r + 1; --j) {
    if (binom(j - 1, r - 1) + c <= binom(n - j - 1, r - 1)) return j;
  }
  return std::nullopt;
}

BigInt delta_gap(int n, int j, int r) {
  return binom(n - j - 1, r - 1) - binom(j - 1, r - 1);
}

Thresholds compute_thresholds(int n, int r, int k, int z, int j) {
  Thresholds out;
  if (k >= 2) out.g = compute_g(k, r);
  out.jstar = compute_jstar(n, r, k - 1);
  out.j0 = compute_j0(n, z, r);
  out.delta_gap = delta_gap(n, j, r);
  return out;
}

int CrossingProfile::suffix_t(int i) const {
  int acc = 0;
  for (int idx = std::max(i, 1); idx <= c; ++idx) acc += t[idx - 1];
  return acc;
}

int CrossingProfile::suffix_s(int i) const {
  int acc = 0;
  for (int idx = std::max(i, 1); idx <= c; ++idx) acc += s[idx - 1];
  return acc;
}

int CrossingProfile::left_incidences() const {
  int acc = 0;
  for (int i = 1; i <= c; ++i) acc += i * t[i - 1];
  return acc;
}

int CrossingProfile::right_incidences() const {
  int acc = 0;
  for (int i = 1; i <= c; ++i) acc += i * s[i - 1];
  return acc;
}

bool is_valid_profile(const CrossingProfile& p) {
  const int c = p.c;
  const int r = p.r;
  if (c < 0 || static_cast<int>(p.t.size()) != c || static_cast<int>(p.s.size()) != c) return false;
  if (c == 0) return true;
  for (int i = 0; i < c; ++i) {
    if (p.t[i] < 0 || p.s[i] < 0) return false;
  }
  if (p.left_incidences() + p.right_incidences() != c * r) return false;
  const int ts1 = p.t[0] + p.s[0];
  if (ts1 < c || ts1 > c * r) return false;
  for (int i = 2; i <= c; ++i) {
    if (p.t[i - 1] + p.s[i - 1] > (c / i) * (r - 1)) return false;
  }
  const int sum_t = p.suffix_t(1);
  const int sum_s = p.suffix_s(1);
  if (sum_t < 1 || sum_t > std::min(c * r - c, p.j)) return false;
  if (sum_s < 1 || sum_s > std::min(c * r - c, p.n - p.j)) return false;
  for (int i = 2; i <= c - 1; ++i) {
    const int cap = (c / i) * (r - 1);
    if (p.suffix_t(i) > cap || p.suffix_s(i) > cap) return false;
  }
  return true;
}

namespace {

// Depth-first over the coordinates t_1..t_c, s_1..s_c in order, so results
// come out lexicographically. Only cheap necessary bounds prune here; the
// full constraint list is applied at the leaves.
struct ProfileSearch {
  int c, r, j, n;
  std::vector<int> coords;
  std::vector<CrossingProfile> out;

  int cap_for(int pos) const {
    const int i = pos % c + 1;
    const int side_cap = std::min(c * r - c, pos < c ? j : n - j);
    int cap = std::min(side_cap, (c * r) / i);
    if (i >= 2) cap = std::min(cap, (c / i) * (r - 1));
    return cap;
  }

  void run(int pos, int weighted, int side_sum) {
    if (pos == 2 * c) {
      CrossingProfile p{c,
                        std::vector<int>(coords.begin(), coords.begin() + c),
                        std::vector<int>(coords.begin() + c, coords.end()),
                        j, n, r};
      if (is_valid_profile(p)) out.push_back(std::move(p));
      return;
    }
    if (pos == c) side_sum = 0;
    const int i = pos % c + 1;
    const int side_cap = std::min(c * r - c, pos < c ? j : n - j);
    const int cap = cap_for(pos);
    for (int v = 0; v <= cap; ++v) {
      if (weighted + i * v > c * r) break;
      if (side_sum + v > side_cap) break;
      coords[pos] = v;
      run(pos + 1, weighted + i * v, side_sum + v);
    }
  }
};

}  // namespace

std::vector<CrossingProfile> enumerate_profiles(int c, int r, int j, int n) {
  if (r < 2) throw Error(ErrorCode::RankTooSmall, "rank must be at least 2");
  if (c < 0) throw Error(ErrorCode::InvalidArgument, "crossing edge count must be non-negative");
  if (c == 0) return {CrossingProfile{0, {}, {}, j, n, r}};
  ProfileSearch search{c, r, j, n, std::vector<int>(2 * c, 0), {}};
  search.run(0, 0, 0);
  return std::move(search.out);
}

}  // namespace hyperconn
