#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hyperconn {

using BigInt = boost::multiprecision::cpp_int;

/// Exact binomial coefficient C(a, b); 0 when b < 0 or b > a.
///
/// Values are arbitrary precision, so any a representable as int is
/// supported (a <= 256 is served from a precomputed Pascal triangle, larger
/// arguments are computed multiplicatively). Throws InvalidArgument for a < 0.
BigInt binom(int a, int b);

/// Smallest g >= r with g*k <= g*C(g-1, r-1) + (r-1)(k-1). Requires k, r >= 2.
int compute_g(int k, int r);

/// Largest j with r+1 <= j < n/2 and C(j-1, r-1) + c <= C(n-j-1, r-1).
/// Empty when no j in that range qualifies.
std::optional<int> compute_jstar(int n, int r, int c);

/// Largest j with r+1 <= j < n/2 and z + C(j-1, r-1) <= C(n-j-1, r-1).
/// Same scan as compute_jstar with c = z.
inline std::optional<int> compute_j0(int n, int z, int r) {
  return compute_jstar(n, r, z);
}

/// C(n-j-1, r-1) - C(j-1, r-1).
BigInt delta_gap(int n, int j, int r);

struct Thresholds {
  std::optional<int> g;  // only defined for k >= 2
  std::optional<int> jstar;
  std::optional<int> j0;
  BigInt delta_gap;
};

/// Bundles the scalars for one (n, r, k) context: g(k, r), j*(c = k-1),
/// j0(z) and the gap at side size j.
Thresholds compute_thresholds(int n, int r, int k, int z, int j);

/// How c crossing edges meet the two sides of a vertex bipartition:
/// t[i-1] left vertices (s[i-1] right vertices) lie in exactly i of them.
struct CrossingProfile {
  int c = 0;
  std::vector<int> t;
  std::vector<int> s;
  int j = 0;
  int n = 0;
  int r = 0;

  /// t_i + ... + t_c with 1-based i; 0 when i > c.
  int suffix_t(int i) const;
  int suffix_s(int i) const;
  /// sum_i i * t_i, the number of left incidences of the crossing edges.
  int left_incidences() const;
  int right_incidences() const;

  friend bool operator==(const CrossingProfile&, const CrossingProfile&) = default;
};

/// Checks every tuple constraint of a crossing profile for its (c, r, j, n)
/// context. The c = 0 empty profile is valid by definition.
bool is_valid_profile(const CrossingProfile& p);

/// All profiles satisfying is_valid_profile for (c, r, j, n), ordered
/// lexicographically on (t_1..t_c, s_1..s_c).
std::vector<CrossingProfile> enumerate_profiles(int c, int r, int j, int n);

}  // namespace hyperconn
