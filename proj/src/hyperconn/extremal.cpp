#include "hyperconn/extremal.hpp"

#include <algorithm>
#include <functional>

#include "hyperconn/error.hpp"

namespace hyperconn {

namespace {

constexpr std::uint64_t kAssignmentBudget = 50'000'000;
const BigInt kMaxExtremalEdges = 20'000'000;

void add_complete_part(std::vector<Edge>& edges, int first, int count, int r) {
  if (count < r) return;
  Edge e(r);
  for (int i = 0; i < r; ++i) e[i] = i;
  while (true) {
    Edge shifted(r);
    for (int i = 0; i < r; ++i) shifted[i] = first + e[i];
    edges.push_back(std::move(shifted));
    int i = r - 1;
    while (i >= 0 && e[i] == count - r + i) --i;
    if (i < 0) break;
    ++e[i];
    for (int t = i + 1; t < r; ++t) e[t] = e[t - 1] + 1;
  }
}

// Vertices with their crossing multiplicity, highest labels last.
std::vector<std::pair<int, int>> incident_vertices(const std::vector<int>& counts, int side_end) {
  int total = 0;
  for (int c : counts) total += c;
  std::vector<std::pair<int, int>> out;
  int v = side_end - total;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    for (int rep = 0; rep < counts[i]; ++rep) out.push_back({v++, static_cast<int>(i) + 1});
  }
  return out;
}

class CrossingAssignment {
 public:
  CrossingAssignment(int c, int r, std::vector<std::pair<int, int>> left, std::vector<std::pair<int, int>> right)
      : c_(c), r_(r), left_(std::move(left)), right_(std::move(right)) {
    for (const auto& [v, m] : left_) left_rem_.push_back(m);
    for (const auto& [v, m] : right_) right_rem_.push_back(m);
  }

  bool solve() { return place(0); }
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  bool place(int e) {
    if (++nodes_ > kAssignmentBudget) {
      throw Error(ErrorCode::BudgetExhausted, "crossing-edge assignment exceeded its search budget");
    }
    if (e == c_) return true;
    for (int l = 1; l <= r_ - 1; ++l) {
      std::vector<int> left_pick;
      if (choose_left(e, l, 0, left_pick)) return true;
    }
    return false;
  }

  bool choose_left(int e, int l, std::size_t from, std::vector<int>& pick) {
    if (static_cast<int>(pick.size()) == l) {
      std::vector<int> right_pick;
      return choose_right(e, l, 0, pick, right_pick);
    }
    for (std::size_t i = from; i < left_.size(); ++i) {
      if (left_rem_[i] == 0) continue;
      pick.push_back(static_cast<int>(i));
      --left_rem_[i];
      const bool done = choose_left(e, l, i + 1, pick);
      ++left_rem_[i];
      pick.pop_back();
      if (done) return true;
    }
    return false;
  }

  bool choose_right(int e, int l, std::size_t from, const std::vector<int>& left_pick, std::vector<int>& pick) {
    if (static_cast<int>(pick.size()) == r_ - l) {
      Edge edge;
      for (int i : left_pick) edge.push_back(left_[i].first);
      for (int i : pick) edge.push_back(right_[i].first);
      if (!edges_.empty() && !(edges_.back() < edge)) return false;
      if (!remaining_feasible(c_ - e - 1)) return false;
      edges_.push_back(std::move(edge));
      if (place(e + 1)) return true;
      edges_.pop_back();
      return false;
    }
    for (std::size_t i = from; i < right_.size(); ++i) {
      if (right_rem_[i] == 0) continue;
      pick.push_back(static_cast<int>(i));
      --right_rem_[i];
      const bool done = choose_right(e, l, i + 1, left_pick, pick);
      ++right_rem_[i];
      pick.pop_back();
      if (done) return true;
    }
    return false;
  }

  bool remaining_feasible(int edges_left) const {
    const auto side_ok = [&](const std::vector<int>& rem) {
      int sum = 0;
      for (int m : rem) {
        if (m > edges_left) return false;
        sum += m;
      }
      return sum >= edges_left && sum <= edges_left * (r_ - 1);
    };
    return side_ok(left_rem_) && side_ok(right_rem_);
  }

  int c_;
  int r_;
  std::vector<std::pair<int, int>> left_;
  std::vector<std::pair<int, int>> right_;
  std::vector<int> left_rem_;
  std::vector<int> right_rem_;
  std::vector<Edge> edges_;
  std::uint64_t nodes_ = 0;
};

// Distributes `extra` additional degree over positions 2..n of d (d_1 stays
// the minimum) and returns the first realizable result.
std::optional<StrongestWitness> raise_tail(const DegreeSequence& d, int extra, const SearchOptions& options) {
  const int n = d.size();
  const int cap = binom(n - 1, d.rank() - 1) > BigInt(1 << 20) ? (1 << 20)
                                                                  : binom(n - 1, d.rank() - 1).convert_to<int>();
  std::vector<int> values = d.values();
  std::optional<StrongestWitness> found;
  std::function<void(int, int)> place = [&](int pos, int left) {
    if (found) return;
    if (pos == n) {
      if (left != 0) return;
      const auto candidate = DegreeSequence::make(values, d.rank());
      const auto realizations = collect_realizations({candidate, 1, options.budget});
      if (!realizations.empty()) found = StrongestWitness{candidate, realizations.front()};
      return;
    }
    for (int add = 0; add <= left && values[pos] + add <= cap; ++add) {
      values[pos] += add;
      place(pos + 1, left - add);
      values[pos] -= add;
      if (found) return;
    }
  };
  place(1, extra);
  return found;
}

// Witness for d_1 < k: d itself when realizable, else the nearest raised
// tail, so the minimum degree (and hence lambda) stays below k.
std::optional<StrongestWitness> min_degree_witness(const DegreeSequence& d, const SearchOptions& options) {
  for (int extra = 0; extra <= 2 * d.rank(); ++extra) {
    if ((d.degree_sum() + extra) % d.rank() != 0) continue;
    if (auto w = raise_tail(d, extra, options)) return w;
  }
  return std::nullopt;
}

}  // namespace

Hypergraph build_extremal(const ExtremalSpec& spec) {
  const auto& p = spec.profile;
  if (spec.r < 2) throw Error(ErrorCode::RankTooSmall, "rank must be at least 2");
  if (spec.j < spec.r || spec.j > spec.n - spec.r) {
    throw Error(ErrorCode::SpecInvalid, "side size j must satisfy r <= j <= n - r");
  }
  if (p.j != spec.j || p.n != spec.n || p.r != spec.r || !is_valid_profile(p)) {
    throw Error(ErrorCode::SpecInvalid, "crossing profile is not admissible for this (n, j, r)");
  }
  if (p.c >= 1 && (p.left_incidences() < p.c || p.right_incidences() < p.c)) {
    throw Error(ErrorCode::InfeasibleProfile, "each crossing edge needs a vertex on both sides");
  }
  if (binom(spec.j, spec.r) + binom(spec.n - spec.j, spec.r) > kMaxExtremalEdges) {
    throw Error(ErrorCode::InstanceTooLarge, "extremal hypergraph would have too many edges");
  }

  std::vector<Edge> edges;
  add_complete_part(edges, 0, spec.j, spec.r);
  add_complete_part(edges, spec.j, spec.n - spec.j, spec.r);
  if (p.c >= 1) {
    CrossingAssignment assignment(p.c, spec.r, incident_vertices(p.t, spec.j), incident_vertices(p.s, spec.n));
    if (!assignment.solve()) {
      throw Error(ErrorCode::InfeasibleProfile, "no pairwise-distinct crossing edges realize this profile");
    }
    edges.insert(edges.end(), assignment.edges().begin(), assignment.edges().end());
  }
  return Hypergraph::make(spec.n, spec.r, std::move(edges));
}

StrongestWitness strongest_witness(const DegreeSequence& d, int k, const Verdict& v, const SearchOptions& options) {
  const auto mismatch = [](const std::string& why) { return Error(ErrorCode::VerdictMismatch, why); };
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
  if (v.satisfied()) throw mismatch("verdict is not a violation");
  const Violation& violation = *v.violation;

  if (violation.condition == ConditionId::T23_1) {
    if (d.min_degree() >= k) throw mismatch("minimum degree already reaches k");
    if (auto w = min_degree_witness(d, options)) return std::move(*w);
    throw Error(ErrorCode::NotHypergraphic, "no hypergraphic sequence near d keeps its minimum degree");
  }

  ConditionId expected_family;
  switch (violation.condition) {
    case ConditionId::T23_2: expected_family = ConditionId::GenericA; break;
    case ConditionId::T23_3: expected_family = ConditionId::GenericB; break;
    case ConditionId::T23_4: expected_family = ConditionId::GenericC; break;
    default: throw mismatch("verdict does not come from the general k-edge condition");
  }
  if (!violation.profile) throw mismatch("violation carries no crossing profile");
  const CrossingProfile& profile = *violation.profile;
  if (profile.c != k - 1 || profile.j != violation.j || profile.n != d.size() || profile.r != d.rank()) {
    throw mismatch("violation profile does not match (d, k)");
  }
  const auto replay = evaluate_partition(d, violation.j, profile);
  if (!replay || replay->condition != expected_family) throw mismatch("violation does not re-evaluate on d");

  Hypergraph h = build_extremal({d.size(), violation.j, d.rank(), profile});
  DegreeSequence dprime = degree_sequence_of(h);
  return {std::move(dprime), std::move(h)};
}

}  // namespace hyperconn
