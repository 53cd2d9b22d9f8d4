#include "hyperconn/conditions.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>

#include <boost/dynamic_bitset.hpp>

#include "hyperconn/error.hpp"

namespace hyperconn {

namespace {

struct LabelEntry {
  ConditionId id;
  std::string_view label;
};

constexpr std::array kLabels = {
    LabelEntry{ConditionId::GenericA, "A"},       LabelEntry{ConditionId::GenericB, "B"},
    LabelEntry{ConditionId::GenericC, "C"},       LabelEntry{ConditionId::T21_1, "T21-1"},
    LabelEntry{ConditionId::T21_2, "T21-2"},      LabelEntry{ConditionId::T22_1, "T22-1"},
    LabelEntry{ConditionId::T22_2, "T22-2"},      LabelEntry{ConditionId::T22_3, "T22-3"},
    LabelEntry{ConditionId::T23_1, "T23-1"},      LabelEntry{ConditionId::T23_2, "T23-2"},
    LabelEntry{ConditionId::T23_3, "T23-3"},      LabelEntry{ConditionId::T23_4, "T23-4"},
    LabelEntry{ConditionId::C25_1, "C25-1"},      LabelEntry{ConditionId::C25_2, "C25-2"},
    LabelEntry{ConditionId::C25_3, "C25-3"},      LabelEntry{ConditionId::C28_2, "C28-2"},
    LabelEntry{ConditionId::C28_3, "C28-3"},      LabelEntry{ConditionId::C28_4, "C28-4"},
    LabelEntry{ConditionId::C29_1, "C29-1"},      LabelEntry{ConditionId::C29_2, "C29-2"},
    LabelEntry{ConditionId::T31_1, "T31-1"},      LabelEntry{ConditionId::T31_2, "T31-2"},
    LabelEntry{ConditionId::T32_1, "T32-1"},      LabelEntry{ConditionId::T32_2, "T32-2"},
    LabelEntry{ConditionId::T32_3, "T32-3"},      LabelEntry{ConditionId::C33_1, "C33-1"},
    LabelEntry{ConditionId::T42_1, "T42-1"},      LabelEntry{ConditionId::T42_2, "T42-2"},
    LabelEntry{ConditionId::T42_3, "T42-3"},      LabelEntry{ConditionId::T42_4, "T42-4"},
    LabelEntry{ConditionId::T42_5, "T42-5"},      LabelEntry{ConditionId::T42_6_1, "T42-6.1"},
    LabelEntry{ConditionId::T42_6_2, "T42-6.2"},  LabelEntry{ConditionId::T42_6_3, "T42-6.3"},
    LabelEntry{ConditionId::C43_1, "C43-1"},      LabelEntry{ConditionId::C43_2, "C43-2"},
    LabelEntry{ConditionId::C43_3, "C43-3"},      LabelEntry{ConditionId::C44_1, "C44-1"},
    LabelEntry{ConditionId::C44_2, "C44-2"},      LabelEntry{ConditionId::C44_3, "C44-3"},
    LabelEntry{ConditionId::C44_4, "C44-4"},      LabelEntry{ConditionId::C44_5, "C44-5"},
};

// Collects one "antecedent implies consequent" evaluation. All at_most()
// calls must precede the at_least() calls.
class Implication {
 public:
  explicit Implication(const DegreeSequence& d) : d_(d) {}

  Implication& at_most(int index, const BigInt& bound) {
    if (!antecedent_holds_ || index <= 0) return *this;
    check_index(index);
    if (bound >= d_.at(index)) {
      antecedent_.push_back({index, bound});
    } else {
      antecedent_holds_ = false;
    }
    return *this;
  }

  Implication& at_least(int index, const BigInt& bound) {
    if (!antecedent_holds_ || consequent_holds_ || index <= 0) return *this;
    check_index(index);
    if (bound <= d_.at(index)) {
      consequent_holds_ = true;
    } else {
      failed_.push_back({index, bound});
    }
    return *this;
  }

  bool violated() const noexcept { return antecedent_holds_ && !consequent_holds_; }

  Violation into(ConditionId id, int j) && {
    Violation v;
    v.condition = id;
    v.j = j;
    v.antecedent = std::move(antecedent_);
    v.failed_consequent = std::move(failed_);
    return v;
  }

 private:
  void check_index(int index) const {
    if (index > d_.size()) throw std::logic_error("clause index beyond sequence length");
  }

  const DegreeSequence& d_;
  bool antecedent_holds_ = true;
  bool consequent_holds_ = false;
  std::vector<ClauseBound> antecedent_;
  std::vector<ClauseBound> failed_;
};

Verdict min_degree_violation(const DegreeSequence& d, int k, ConditionId id) {
  if (d.min_degree() >= k) return Verdict::ok();
  Violation v;
  v.condition = id;
  v.j = 0;
  v.failed_consequent.push_back({1, BigInt(k)});
  return Verdict::violated(std::move(v));
}

enum class Family { A, B, C };

struct FamilyLabels {
  ConditionId a = ConditionId::GenericA;
  ConditionId b = ConditionId::GenericB;
  ConditionId c = ConditionId::GenericC;
};

using ProfileSource = std::function<std::vector<CrossingProfile>(int j)>;

struct PartitionScan {
  int c = 0;
  int j_start = 0;
  int even_n_start = 0;
  FamilyLabels labels;
  // Evaluate every j < n/2 with the family-A pattern (no gap split).
  bool single_family = false;
  ProfileSource profiles;
};

std::optional<Violation> evaluate_family(const DegreeSequence& d, Family family, int j, const CrossingProfile& p,
                                         ConditionId id) {
  const int n = d.size();
  const int r = d.rank();
  const int c = p.c;
  Implication imp(d);
  if (family == Family::C) {
    const BigInt half = binom(n / 2 - 1, r - 1);
    for (int a = 0; a <= c - 1; ++a) imp.at_most(n - p.suffix_t(a + 1) - p.suffix_s(a + 1), half + a);
    imp.at_least(n, half + c + 1);
  } else {
    const BigInt left = binom(j - 1, r - 1);
    const BigInt right = binom(n - j - 1, r - 1);
    for (int a = 0; a <= c; ++a) imp.at_most(j - p.suffix_t(a + 1), left + a);
    if (family == Family::A) {
      for (int a = 0; a <= c; ++a) imp.at_least(n - p.suffix_s(a + 1), right + a + 1);
    } else {
      const int gap = BigInt(right - left).convert_to<int>();
      for (int a = 0; a <= c; ++a) imp.at_least(n - p.suffix_t(gap + a + 1) - p.suffix_s(a + 1), right + a + 1);
    }
  }
  if (!imp.violated()) return std::nullopt;
  Violation v = std::move(imp).into(id, j);
  v.profile = p;
  return v;
}

// Smallest q >= 0 such that index `top - q` is vacuous or d at that index
// passes `ok`.
template <typename Pred>
int first_passing_offset(const DegreeSequence& d, int top, Pred ok) {
  int q = 0;
  while (top - q >= 1 && !ok(d.at(top - q))) ++q;
  return q;
}

// Finds the lexicographically first valid profile at side size j whose
// family condition is violated. Works on the suffix counts T(i), S(i) rather
// than listing profiles: the left side is searched depth-first with bound
// pruning, and the right side is solved exactly by a reachable-sum table.
class ViolationSearch {
 public:
  ViolationSearch(const DegreeSequence& d, Family family, int c, int j)
      : n_(d.size()), r_(d.rank()), c_(c), j_(j), family_(family), total_(c * d.rank()) {
    cap_t_ = std::min(c * r_ - c, j);
    cap_s_ = std::min(c * r_ - c, n_ - j);
    need_t_.assign(c + 2, 0);
    need_s_.assign(c + 2, 0);
    if (family == Family::C) {
      const BigInt half = binom(n_ / 2 - 1, r_ - 1);
      impossible_ = !(d.at(n_) < half + c + 1);
      for (int a = 0; a <= c - 1; ++a) {
        need_s_[a + 1] = first_passing_offset(d, n_, [&](int v) { return v <= half + a; });
      }
    } else {
      const BigInt left = binom(j - 1, r_ - 1);
      const BigInt right = binom(n_ - j - 1, r_ - 1);
      if (family == Family::B) gap_ = BigInt(right - left).convert_to<int>();
      for (int a = 0; a <= c; ++a) {
        need_t_[a + 1] = first_passing_offset(d, j, [&](int v) { return v <= left + a; });
        need_s_[a + 1] = first_passing_offset(d, n_, [&](int v) { return v < right + a + 1; });
      }
    }
    for (int b = 1; b <= c; ++b) max_right_ += s_max(b);
  }

  std::optional<CrossingProfile> run() {
    if (impossible_ || need_t_[c_ + 1] > 0) return std::nullopt;
    std::optional<std::vector<int>> best;
    for (int tot = 1; tot <= cap_t_; ++tot) {
      if (tot < t_lower(1)) continue;
      t_.assign(c_ + 2, 0);
      suffix_.assign(c_ + 2, 0);
      suffix_[1] = tot;
      found_.reset();
      if (left_step(1, 0) && (!best || *found_ < *best)) best = found_;
    }
    if (!best) return std::nullopt;
    return CrossingProfile{c_, std::vector<int>(best->begin(), best->begin() + c_),
                           std::vector<int>(best->begin() + c_, best->end()), j_, n_, r_};
  }

 private:
  using Sums = boost::dynamic_bitset<>;

  int cap(int i) const { return (c_ / i) * (r_ - 1); }

  int s_max(int b) const { return (b >= 2 && b <= c_ - 1) ? std::min(cap_s_, cap(b)) : cap_s_; }

  // Lower bound on T(b) implied by the condition with S at its largest.
  int t_lower(int b) const {
    if (family_ == Family::C) return need_s_[b] - s_max(b);
    int low = need_t_[b];
    if (family_ == Family::B && b - gap_ >= 1) low = std::max(low, need_s_[b - gap_] - s_max(b - gap_));
    return low;
  }

  // Chooses t_i given T(i) = suffix_[i] and left incidences so far.
  bool left_step(int i, int weighted) {
    const int remaining = suffix_[i];
    if (i == c_) {
      if (i >= 2 && remaining > cap(i)) return false;
      t_[i] = remaining;
      suffix_[i + 1] = 0;
      return solve_right(weighted + i * remaining);
    }
    const int v_cap = std::min(remaining, i >= 2 ? cap(i) : total_);
    for (int v = 0; v <= v_cap; ++v) {
      const int next = remaining - v;
      const int w = weighted + i * v;
      if (next < t_lower(i + 1)) break;
      if (w + c_ * next + max_right_ < total_) break;
      if (i + 1 <= c_ - 1 && next > cap(i + 1)) continue;
      if (w + (i + 1) * next + 1 > total_) continue;
      t_[i] = v;
      suffix_[i + 1] = next;
      if (left_step(i + 1, w)) return true;
    }
    return false;
  }

  int s_lower(int b) const {
    if (family_ == Family::C) return b <= c_ ? need_s_[b] - suffix_[b] : 0;
    if (family_ == Family::B) return need_s_[b] - (b + gap_ <= c_ ? suffix_[b + gap_] : 0);
    return need_s_[b];
  }

  bool drop_ok(int b, int s) const {
    if (b == 1) return t_[1] + s >= c_ && t_[1] + s <= total_;
    return t_[b] + s <= cap(b);
  }

  // Exact search for the lexicographically first s given the fixed t.
  bool solve_right(int left_weighted) {
    const int target = total_ - left_weighted;
    if (target < 1 || s_lower(c_ + 1) > 0) return false;
    const int width = cap_s_ + 1;
    // reach[b][x]: sums S(b)+...+S(c) achievable with S(b) = x.
    std::vector<std::vector<Sums>> reach(c_ + 2, std::vector<Sums>(width, Sums(target + 1)));
    reach[c_ + 1][0].set(0);
    for (int b = c_; b >= 1; --b) {
      const int low = std::max(s_lower(b), b == 1 ? 1 : 0);
      const int high = s_max(b);
      for (int x = std::max(low, 0); x <= high && x <= target; ++x) {
        Sums& cell = reach[b][x];
        for (int y = 0; y <= x; ++y) {
          if (!drop_ok(b, x - y) || reach[b + 1][y].none()) continue;
          cell |= reach[b + 1][y] << x;
        }
      }
    }
    std::optional<std::vector<int>> best;
    for (int top = 1; top < width; ++top) {
      if (!reach[1][top].test(target)) continue;
      std::vector<int> s(c_, 0);
      int need = target;
      int cur = top;
      for (int b = 1; b <= c_; ++b) {
        const int rest = need - cur;
        for (int y = cur; y >= 0; --y) {
          if (drop_ok(b, cur - y) && rest >= 0 && reach[b + 1][y].test(rest)) {
            s[b - 1] = cur - y;
            cur = y;
            break;
          }
        }
        need = rest;
      }
      if (!best || s < *best) best = std::move(s);
    }
    if (!best) return false;
    std::vector<int> combined(t_.begin() + 1, t_.begin() + 1 + c_);
    combined.insert(combined.end(), best->begin(), best->end());
    found_ = std::move(combined);
    return true;
  }

  int n_, r_, c_, j_;
  Family family_;
  int total_;
  int gap_ = 0;
  int cap_t_ = 0;
  int cap_s_ = 0;
  int max_right_ = 0;
  bool impossible_ = false;
  // need_t_[b]: T(b) must reach this for the antecedent (families A, B).
  // need_s_[b]: S(b), or the paired sum it appears in, must reach this.
  std::vector<int> need_t_;
  std::vector<int> need_s_;
  std::vector<int> t_;
  std::vector<int> suffix_;
  std::optional<std::vector<int>> found_;
};

// Family used at side size j < n/2 for c crossing edges.
Family family_below_half(int n, int r, int c, int j) {
  if (c == 0) return Family::A;
  return binom(j - 1, r - 1) + c <= binom(n - j - 1, r - 1) ? Family::A : Family::B;
}

std::optional<Violation> first_violation(const DegreeSequence& d, const PartitionScan& scan, Family family, int j,
                                         ConditionId id) {
  if (scan.profiles) {
    for (const auto& p : scan.profiles(j)) {
      if (auto v = evaluate_family(d, family, j, p, id)) return v;
    }
    return std::nullopt;
  }
  if (scan.c == 0) return evaluate_family(d, family, j, CrossingProfile{0, {}, {}, j, d.size(), d.rank()}, id);
  auto p = ViolationSearch(d, family, scan.c, j).run();
  if (!p) return std::nullopt;
  auto v = evaluate_family(d, family, j, *p, id);
  if (!v || !is_valid_profile(*p)) throw std::logic_error("profile search returned a non-violating profile");
  return v;
}

Verdict scan_partitions(const DegreeSequence& d, const PartitionScan& scan) {
  const int n = d.size();
  const int r = d.rank();
  const int c = scan.c;
  // With no crossing edges the side-size range closes at floor(n/2).
  const int j_last = c == 0 ? n / 2 : (n - 1) / 2;
  for (int j = std::max(scan.j_start, 1); j <= j_last; ++j) {
    const Family family = scan.single_family ? Family::A : family_below_half(n, r, c, j);
    const ConditionId id = family == Family::A ? scan.labels.a : scan.labels.b;
    if (family == Family::B) {
      const BigInt gap = delta_gap(n, j, r);
      if (gap < 1 || gap > c) continue;
    }
    if (auto v = first_violation(d, scan, family, j, id)) return Verdict::violated(std::move(*v));
  }
  if (c >= 1 && n % 2 == 0 && n >= scan.even_n_start) {
    const int j = n / 2;
    if (auto v = first_violation(d, scan, Family::C, j, scan.labels.c)) return Verdict::violated(std::move(*v));
  }
  return Verdict::ok();
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

std::string_view condition_label(ConditionId id) noexcept {
  for (const auto& e : kLabels) {
    if (e.id == id) return e.label;
  }
  return "?";
}

std::optional<ConditionId> condition_from_label(std::string_view label) noexcept {
  for (const auto& e : kLabels) {
    if (e.label == label) return e.id;
  }
  return std::nullopt;
}

int residue_in_range(int v, int k) { return ((v - 1) % (k - 1)) + 1; }

std::optional<Violation> evaluate_partition(const DegreeSequence& d, int j, const CrossingProfile& profile) {
  const int n = d.size();
  Family family;
  if (profile.c >= 1 && 2 * j == n) {
    family = Family::C;
  } else {
    family = family_below_half(n, d.rank(), profile.c, j);
  }
  const ConditionId id = family == Family::A ? ConditionId::GenericA
                         : family == Family::B ? ConditionId::GenericB
                                               : ConditionId::GenericC;
  return evaluate_family(d, family, j, profile, id);
}

bool witness_consistent(const DegreeSequence& d, const Violation& v) {
  for (const auto& clause : v.antecedent) {
    if (clause.index < 1 || clause.index > d.size() || clause.bound < d.at(clause.index)) return false;
  }
  for (const auto& clause : v.failed_consequent) {
    if (clause.index < 1 || clause.index > d.size() || clause.bound <= d.at(clause.index)) return false;
  }
  return true;
}

Verdict check_generic(const DegreeSequence& d, int c, int j_start, int even_n_start) {
  if (c < 0) throw Error(ErrorCode::InvalidArgument, "crossing edge count must be non-negative");
  PartitionScan scan;
  scan.c = c;
  scan.j_start = j_start;
  scan.even_n_start = even_n_start;
  return scan_partitions(d, scan);
}

Verdict check_theorem23(const DegreeSequence& d, int k, Mode mode) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
  if (auto v = min_degree_violation(d, k, ConditionId::T23_1); !v.satisfied()) return v;
  const int r = d.rank();
  PartitionScan scan;
  scan.c = k - 1;
  // A single edge on r vertices can be cut off when k = 1.
  scan.j_start = (mode == Mode::Sound && k == 1) ? r : r + 1;
  scan.even_n_start = 2 * r + 2;
  scan.labels = {ConditionId::T23_2, ConditionId::T23_3, ConditionId::T23_4};
  return scan_partitions(d, scan);
}

Verdict check_maximally(const DegreeSequence& d) {
  const int delta = d.min_degree();
  if (delta == 0) return Verdict::ok();
  const int r = d.rank();
  PartitionScan scan;
  scan.c = delta - 1;
  scan.j_start = delta == 1 ? r : r + 1;
  scan.even_n_start = 2 * r + 2;
  scan.labels = {ConditionId::C28_2, ConditionId::C28_3, ConditionId::C28_4};
  return scan_partitions(d, scan);
}

Verdict check_theorem21(const DegreeSequence& d, int k) {
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "k must be at least 2");
  if (auto v = min_degree_violation(d, k, ConditionId::T21_1); !v.satisfied()) return v;
  const int n = d.size();
  const int r = d.rank();
  const int shift = (r - 1) * (k - 1);
  for (int j = compute_g(k, r); j <= n / 2; ++j) {
    const BigInt left = binom(j - 1, r - 1);
    Implication imp(d);
    imp.at_most(j - shift, left).at_most(j, left + k - 1).at_least(n, binom(n - j - 1, r - 1) + k);
    if (imp.violated()) return Verdict::violated(std::move(imp).into(ConditionId::T21_2, j));
  }
  return Verdict::ok();
}

Verdict check_theorem22(const DegreeSequence& d) {
  if (auto v = min_degree_violation(d, 2, ConditionId::T22_1); !v.satisfied()) return v;
  const int n = d.size();
  const int r = d.rank();
  for (int j = r + 1; 2 * j < n; ++j) {
    const BigInt left = binom(j - 1, r - 1);
    const BigInt right = binom(n - j - 1, r - 1);
    for (int t1 = 1; t1 <= r - 1; ++t1) {
      Implication imp(d);
      imp.at_most(j - t1, left).at_most(j, left + 1).at_least(n - r + t1, right + 1).at_least(n, right + 2);
      if (imp.violated()) {
        Violation v = std::move(imp).into(ConditionId::T22_2, j);
        v.profile = CrossingProfile{1, {t1}, {r - t1}, j, n, r};
        return Verdict::violated(std::move(v));
      }
    }
  }
  if (n % 2 == 0 && n >= 2 * r + 2) {
    const BigInt half = binom(n / 2 - 1, r - 1);
    Implication imp(d);
    imp.at_most(n / 2, half).at_most(n - r, half).at_least(n, half + 2);
    if (imp.violated()) return Verdict::violated(std::move(imp).into(ConditionId::T22_3, n / 2));
  }
  return Verdict::ok();
}

Verdict check_corollary25(const DegreeSequence& d) {
  if (auto v = min_degree_violation(d, 2, ConditionId::C25_1); !v.satisfied()) return v;
  const int n = d.size();
  const int r = d.rank();
  for (int j = r + 1; 2 * j < n; ++j) {
    const BigInt left = binom(j - 1, r - 1);
    const BigInt right = binom(n - j - 1, r - 1);
    for (int t1 = 1; t1 <= r - 1; ++t1) {
      const int s1 = r - t1;
      Implication imp(d);
      imp.at_most(j - t1, left).at_most(j, left + 1).at_least(n - s1, right + 1).at_least(n, right + 2);
      if (imp.violated()) {
        Violation v = std::move(imp).into(ConditionId::C25_2, j);
        v.profile = CrossingProfile{1, {t1}, {s1}, j, n, r};
        return Verdict::violated(std::move(v));
      }
    }
  }
  if (n % 2 == 0 && n >= 2 * r + 2) {
    const BigInt half = binom(n / 2 - 1, r - 1);
    Implication imp(d);
    imp.at_most(n - r, half).at_least(n, half + 2);
    if (imp.violated()) return Verdict::violated(std::move(imp).into(ConditionId::C25_3, n / 2));
  }
  return Verdict::ok();
}

Verdict check_corollary29(const DegreeSequence& d, int k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
  if (auto v = min_degree_violation(d, k, ConditionId::C29_1); !v.satisfied()) return v;
  const int n = d.size();
  const int r = d.rank();
  const int shift = (r - 1) * (k - 1);
  for (int j = std::max(shift, 1); j <= n / 2; ++j) {
    const BigInt left = binom(j - 1, r - 1);
    const BigInt right = binom(n - j - 1, r - 1);
    Implication imp(d);
    imp.at_most(j - shift, left).at_most(j, left + k - 1).at_least(n - 1, right + k - 1).at_least(n, right + k);
    if (imp.violated()) return Verdict::violated(std::move(imp).into(ConditionId::C29_2, j));
  }
  return Verdict::ok();
}

Verdict check_super_t32(const DegreeSequence& d, Mode mode) {
  const int delta = d.min_degree();
  if (delta < 1) throw Error(ErrorCode::DeltaMismatch, "super edge-connectivity condition needs d_1 >= 1");
  const int r = d.rank();
  PartitionScan scan;
  scan.c = delta;
  // Sound mode also covers cuts isolating exactly r vertices.
  scan.j_start = mode == Mode::Sound ? r : r + 1;
  scan.even_n_start = mode == Mode::Sound ? 2 * r : 2 * r + 2;
  scan.labels = {ConditionId::T32_1, ConditionId::T32_2, ConditionId::T32_3};
  return scan_partitions(d, scan);
}

namespace {

// Tuple box for the three-edge super condition, with its own bounds
// t2+s2 <= 2(r-1), t3+s3 <= r-1, t2+t3 <= r-1, s2+s3 <= r-1.
std::vector<CrossingProfile> three_edge_profiles(int r, int j, int n) {
  std::vector<CrossingProfile> out;
  const int total = 3 * r;
  const int side_cap_t = std::min(3 * r - 3, j);
  const int side_cap_s = std::min(3 * r - 3, n - j);
  for (int t1 = 0; t1 <= total; ++t1) {
    for (int t2 = 0; t2 <= r - 1; ++t2) {
      for (int t3 = 0; t2 + t3 <= r - 1; ++t3) {
        for (int s1 = 0; s1 <= total; ++s1) {
          if (t1 + s1 < 3 || t1 + s1 > total) continue;
          for (int s2 = 0; s2 <= r - 1 && t2 + s2 <= 2 * (r - 1); ++s2) {
            for (int s3 = 0; s2 + s3 <= r - 1 && t3 + s3 <= r - 1; ++s3) {
              if (t1 + 2 * t2 + 3 * t3 + s1 + 2 * s2 + 3 * s3 != total) continue;
              const int sum_t = t1 + t2 + t3;
              const int sum_s = s1 + s2 + s3;
              if (sum_t < 1 || sum_t > side_cap_t || sum_s < 1 || sum_s > side_cap_s) continue;
              out.push_back(CrossingProfile{3, {t1, t2, t3}, {s1, s2, s3}, j, n, r});
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

Verdict check_super_t31(const DegreeSequence& d) {
  const int r = d.rank();
  if (r < 4) throw Error(ErrorCode::RankTooSmall, "three-edge super condition needs r >= 4");
  if (d.min_degree() != 3) throw Error(ErrorCode::DeltaMismatch, "three-edge super condition needs d_1 = 3");
  const int n = d.size();
  PartitionScan scan;
  scan.c = 3;
  scan.j_start = r;
  scan.even_n_start = 2 * r + 2;
  scan.single_family = true;
  scan.labels = {ConditionId::T31_1, ConditionId::T31_1, ConditionId::T31_2};
  scan.profiles = [r, n](int j) { return three_edge_profiles(r, j, n); };
  return scan_partitions(d, scan);
}

Verdict check_super_cor33(const DegreeSequence& d) {
  const int delta = d.min_degree();
  if (delta < 1) throw Error(ErrorCode::DeltaMismatch, "super edge-connectivity condition needs d_1 >= 1");
  const int n = d.size();
  const int r = d.rank();
  const int shift = (r - 1) * delta;
  for (int j = std::max(shift, 1); j <= n / 2; ++j) {
    const BigInt left = binom(j - 1, r - 1);
    const BigInt right = binom(n - j - 1, r - 1);
    Implication imp(d);
    imp.at_most(j - shift, left)
        .at_most(j, left + delta)
        .at_least(n - 1, right + delta)
        .at_least(n, right + delta + 1);
    if (imp.violated()) return Verdict::violated(std::move(imp).into(ConditionId::C33_1, j));
  }
  return Verdict::ok();
}

Verdict check_theorem42(const DegreeSequence& d, int k) {
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "k must be at least 2");
  if (auto v = min_degree_violation(d, k, ConditionId::T42_1); !v.satisfied()) return v;
  const int n = d.size();
  const int r = d.rank();
  const int span = (k - 1) * (r - 1);
  const int half_floor = n / 2;

  // j0(z) for z = 1..k; index 0 unused.
  std::vector<std::optional<int>> j0(static_cast<std::size_t>(k + 1));
  for (int z = 1; z <= k; ++z) j0[z] = compute_j0(n, z, r);
  // First side size strictly above j0(z), or r+1 when j0(z) does not exist.
  const auto above_j0 = [&](int z) { return j0[z] ? *j0[z] + 1 : r + 1; };

  const auto violation = [](Implication&& imp, ConditionId id, int j, Theorem42Params params) {
    Violation v = std::move(imp).into(id, j);
    v.params = params;
    return Verdict::violated(std::move(v));
  };

  // (2)
  for (int j = r + 1; j <= half_floor; ++j) {
    const BigInt left = binom(j - 1, r - 1);
    const BigInt right = binom(n - j - 1, r - 1);
    for (int x = 1; x <= span; ++x) {
      const int q = residue_in_range(x, k);
      for (int y = 1; y <= span; ++y) {
        const int R = residue_in_range(y, k);
        for (int z = ceil_div(k - 1, q); z <= std::min(k - q, y); ++z) {
          if (!j0[z] || j > *j0[z]) continue;
          Implication imp(d);
          imp.at_most(j - x, left)
              .at_most(j - x + 1, left + (k - 1) / q)
              .at_most(j, left + z)
              .at_least(n - y, right + 1)
              .at_least(n - y + 1, right + (k - 1) / R + 1)
              .at_least(n, right + std::min(q, k - R) + 1);
          if (imp.violated()) return violation(std::move(imp), ConditionId::T42_2, j, {x, y, z, q, R});
        }
      }
    }
  }

  if (n < 2 * r + 2) return Verdict::ok();

  // (3)
  for (int j = above_j0(k - 1); j <= half_floor; ++j) {
    const BigInt left = binom(j - 1, r - 1);
    const BigInt right = binom(n - j - 1, r - 1);
    for (int x = r - 1; x <= (k - 1) * (r - 2) + 1; ++x) {
      Implication imp(d);
      imp.at_most(j - x, left)
          .at_least(n - (x + k - 1), right + 1)
          .at_least(n - x, right + 2)
          .at_least(n, left + k);
      if (imp.violated()) return violation(std::move(imp), ConditionId::T42_3, j, {x, {}, {}, {}, {}});
    }
  }

  // (4)
  for (int j = above_j0(k - 1); j <= half_floor; ++j) {
    const BigInt left = binom(j - 1, r - 1);
    const BigInt right = binom(n - j - 1, r - 1);
    for (int x = 1; x <= (k - 1) * (r - 2); ++x) {
      for (int y = k - 1; y <= span; ++y) {
        Implication imp(d);
        imp.at_most(j - x, left)
            .at_least(n - (x + y), right + 1)
            .at_least(n - x, right + 2)
            .at_least(n, left + k);
        if (imp.violated()) return violation(std::move(imp), ConditionId::T42_4, j, {x, y, {}, {}, {}});
      }
    }
  }

  // (5)
  if (n % 2 == 0) {
    const int j = n / 2;
    const BigInt half = binom(j - 1, r - 1);
    for (int x = k - 1; x <= span; ++x) {
      for (int y = k - 1; y <= span; ++y) {
        const int R = residue_in_range(y, k);
        Implication imp(d);
        imp.at_most(j - x, half)
            .at_least(n - (x + y), half + 1)
            .at_least(n - y, half + 2)
            .at_least(n - y + 1, std::max(BigInt(half + 2), BigInt(half + (k - 1) / R + 1)))
            .at_least(n, half + k - R + 1);
        if (imp.violated()) return violation(std::move(imp), ConditionId::T42_5, j, {x, y, {}, {}, R});
      }
    }
  }

  // (6)
  for (int j = r + 1; j <= half_floor; ++j) {
    const BigInt left = binom(j - 1, r - 1);
    const BigInt right = binom(n - j - 1, r - 1);
    for (int x = 1; x <= span; ++x) {
      const int q = residue_in_range(x, k);
      for (int y = 1; y <= span; ++y) {
        const int R = residue_in_range(y, k);
        const int w = std::min(q, k - R);
        for (int z = 2; z <= std::min(k - 2, y); ++z) {
          if (j < above_j0(z)) continue;
          const BigInt lhs = left + z;
          const BigInt rhs = right + w;
          const BigInt second = std::max(right, BigInt(left + (k - 1) / q)) + 1;
          Implication imp(d);
          imp.at_most(j - x, left).at_least(n - (x + y), right + 1).at_least(n - (x + y) + 1, second);
          ConditionId id;
          if (lhs < rhs) {
            id = ConditionId::T42_6_1;
            imp.at_least(n - y + 1, std::max(lhs, BigInt(right + (k - 1) / R)) + 1).at_least(n, rhs + 1);
          } else if (lhs > rhs) {
            id = ConditionId::T42_6_2;
            imp.at_least(n - x + 1, std::max(rhs, BigInt(left + (k - 1) / q)) + 1).at_least(n, lhs + 1);
          } else {
            id = ConditionId::T42_6_3;
            imp.at_least(n - (x + y) + 2,
                         std::max(BigInt(left + (k - 1) / q), BigInt(right + (k - 1) / R)) + 1)
                .at_least(n, lhs + 1);
          }
          if (imp.violated()) return violation(std::move(imp), id, j, {x, y, z, q, R});
        }
      }
    }
  }
  return Verdict::ok();
}

Verdict check_corollary43(const DegreeSequence& d) {
  if (auto v = min_degree_violation(d, 2, ConditionId::C43_1); !v.satisfied()) return v;
  const int n = d.size();
  const int r = d.rank();
  for (int j = r + 1; 2 * j < n; ++j) {
    const BigInt left = binom(j - 1, r - 1);
    const BigInt right = binom(n - j - 1, r - 1);
    for (int x = 1; x <= r - 1; ++x) {
      for (int y = 1; y <= r - 1; ++y) {
        Implication imp(d);
        imp.at_most(j - x, left).at_most(j, left + 1).at_least(n - y, right + 1).at_least(n, right + 2);
        if (imp.violated()) {
          Violation v = std::move(imp).into(ConditionId::C43_2, j);
          v.params = Theorem42Params{x, y, {}, {}, {}};
          return Verdict::violated(std::move(v));
        }
      }
    }
  }
  if (n % 2 == 0 && n >= 2 * r + 2) {
    const BigInt half = binom(n / 2 - 1, r - 1);
    Implication imp(d);
    imp.at_most(n / 2, half).at_least(n - 2, half + 1).at_least(n, half + 2);
    if (imp.violated()) return Verdict::violated(std::move(imp).into(ConditionId::C43_3, n / 2));
  }
  return Verdict::ok();
}

Verdict check_corollary44(const DegreeSequence& d) {
  if (auto v = min_degree_violation(d, 3, ConditionId::C44_1); !v.satisfied()) return v;
  const int n = d.size();
  const int r = d.rank();
  const int span = 2 * (r - 1);
  const auto j0_one = compute_j0(n, 1, r);
  const auto j0_two = compute_j0(n, 2, r);

  const auto small_side = [&](ConditionId id, int y_min, int slack, const std::optional<int>& j0) -> Verdict {
    if (!j0) return Verdict::ok();
    for (int j = r + 1; j <= *j0; ++j) {
      const BigInt left = binom(j - 1, r - 1);
      const BigInt right = binom(n - j - 1, r - 1);
      for (int x = 1; x <= span; ++x) {
        for (int y = y_min; y <= span; ++y) {
          Implication imp(d);
          imp.at_most(j - x, left).at_most(j, left + slack).at_least(n - y, right + 1).at_least(n, right + 2);
          if (imp.violated()) {
            Violation v = std::move(imp).into(id, j);
            v.params = Theorem42Params{x, y, {}, {}, {}};
            return Verdict::violated(std::move(v));
          }
        }
      }
    }
    return Verdict::ok();
  };

  if (auto v = small_side(ConditionId::C44_2, 2, 2, j0_two); !v.satisfied()) return v;
  if (auto v = small_side(ConditionId::C44_3, 1, 1, j0_one); !v.satisfied()) return v;
  if (n < 2 * r + 2) return Verdict::ok();

  for (int j = j0_two ? *j0_two + 1 : r + 1; j <= n / 2; ++j) {
    const BigInt right = binom(n - j - 1, r - 1);
    Implication imp(d);
    imp.at_most(j, binom(j - 1, r - 1))
        .at_least(n - 3, right + 1)
        .at_least(n - 1, right + 2)
        .at_least(n, right + 3);
    if (imp.violated()) return Verdict::violated(std::move(imp).into(ConditionId::C44_4, j));
  }

  if (n % 2 == 0) {
    const int j = n / 2;
    const BigInt half = binom(j - 1, r - 1);
    for (int x = 2; x <= span; ++x) {
      for (int y = 2; y <= span; ++y) {
        Implication imp(d);
        imp.at_most(j - x, half).at_least(n - (x + y), half + 1).at_least(n, half + 2);
        if (imp.violated()) {
          Violation v = std::move(imp).into(ConditionId::C44_5, j);
          v.params = Theorem42Params{x, y, {}, {}, {}};
          return Verdict::violated(std::move(v));
        }
      }
    }
  }
  return Verdict::ok();
}

}  // namespace hyperconn
