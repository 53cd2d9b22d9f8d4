#include "hyperconn/realizations.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <exception>
#include <thread>

#include "hyperconn/combinatorics.hpp"
#include "hyperconn/error.hpp"

namespace hyperconn {

namespace {

std::vector<Edge> candidate_edges(int n, int r) {
  if (binom(n, r) > kMaxCandidateEdges) {
    throw Error(ErrorCode::InstanceTooLarge, "realization search supports at most " +
                                                 std::to_string(kMaxCandidateEdges) + " candidate edges");
  }
  std::vector<Edge> out;
  if (r > n) return out;
  Edge e(r);
  for (int i = 0; i < r; ++i) e[i] = i;
  while (true) {
    out.push_back(e);
    int i = r - 1;
    while (i >= 0 && e[i] == n - r + i) --i;
    if (i < 0) break;
    ++e[i];
    for (int t = i + 1; t < r; ++t) e[t] = e[t - 1] + 1;
  }
  return out;
}

// Immutable search data shared by all workers.
struct SearchSpace {
  int n = 0;
  int r = 0;
  std::vector<int> target;
  std::vector<Edge> candidates;
  // incidences_after[i][v]: candidates with index >= i that contain v.
  std::vector<std::vector<int>> incidences_after;

  SearchSpace(const DegreeSequence& d) : n(d.size()), r(d.rank()), target(d.values()) {
    candidates = candidate_edges(n, r);
    const int count = static_cast<int>(candidates.size());
    incidences_after.assign(count + 1, std::vector<int>(n, 0));
    for (int i = count - 1; i >= 0; --i) {
      incidences_after[i] = incidences_after[i + 1];
      for (int v : candidates[i]) ++incidences_after[i][v];
    }
  }

  bool sum_compatible() const {
    std::int64_t sum = 0;
    for (int v : target) sum += v;
    return sum % r == 0;
  }

  bool all_zero() const {
    return std::all_of(target.begin(), target.end(), [](int v) { return v == 0; });
  }
};

struct BudgetOverrun {};

// Depth-first include/exclude search below one fixed first edge. Include is
// tried before exclude, which yields lexicographic order among edge sets of
// equal size.
class SubtreeSearch {
 public:
  SubtreeSearch(const SearchSpace& space, std::uint64_t budget)
      : space_(space), budget_(budget), remaining_(space.target) {
    for (int v : remaining_) outstanding_ += v;
  }

  // Runs the subtree whose smallest edge is candidate `first`. `visit`
  // returns true to stop.
  template <typename Visit>
  bool run(int first, Visit&& visit) {
    if (!feasible(first) || !can_include(first)) return false;
    include(first);
    const bool stop = descend(first + 1, visit);
    exclude_last(first);
    return stop;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  bool feasible(int index) const {
    const auto& after = space_.incidences_after[index];
    for (int v = 0; v < space_.n; ++v) {
      if (remaining_[v] > after[v]) return false;
    }
    return true;
  }

  bool can_include(int index) const {
    for (int v : space_.candidates[index]) {
      if (remaining_[v] < 1) return false;
    }
    return true;
  }

  void include(int index) {
    for (int v : space_.candidates[index]) --remaining_[v];
    outstanding_ -= space_.r;
    chosen_.push_back(index);
  }

  void exclude_last(int index) {
    for (int v : space_.candidates[index]) ++remaining_[v];
    outstanding_ += space_.r;
    chosen_.pop_back();
  }

  template <typename Visit>
  bool descend(int index, Visit&& visit) {
    if (++nodes_ > budget_) throw BudgetOverrun{};
    if (outstanding_ == 0) {
      std::vector<Edge> edges;
      edges.reserve(chosen_.size());
      for (int i : chosen_) edges.push_back(space_.candidates[i]);
      return visit(Hypergraph::make(space_.n, space_.r, std::move(edges)));
    }
    if (index >= static_cast<int>(space_.candidates.size()) || !feasible(index)) return false;
    if (can_include(index)) {
      include(index);
      const bool stop = descend(index + 1, visit);
      exclude_last(index);
      if (stop) return true;
    }
    return descend(index + 1, visit);
  }

  const SearchSpace& space_;
  std::uint64_t budget_;
  std::vector<int> remaining_;
  int outstanding_ = 0;
  std::vector<int> chosen_;
  std::uint64_t nodes_ = 0;
};

struct SubtreeResult {
  bool processed = false;
  std::uint64_t nodes = 0;
  std::uint64_t visited = 0;
  std::optional<Hypergraph> found;
};

SubtreeResult search_subtree(const SearchSpace& space, int first, std::uint64_t budget,
                             const std::function<bool(const Hypergraph&)>& is_counterexample) {
  SubtreeResult result;
  result.processed = true;
  SubtreeSearch search(space, budget);
  try {
    search.run(first, [&](const Hypergraph& h) {
      ++result.visited;
      if (is_counterexample(h)) {
        result.found = h;
        return true;
      }
      return false;
    });
    result.nodes = search.nodes();
  } catch (const BudgetOverrun&) {
    result.nodes = budget + 1;
  }
  return result;
}

[[noreturn]] void budget_exhausted(std::uint64_t budget) {
  throw Error(ErrorCode::BudgetExhausted,
              "realization search exceeded its budget of " + std::to_string(budget) + " nodes");
}

}  // namespace

std::uint64_t enumerate_realizations(const RealizationQuery& query,
                                     const std::function<bool(const Hypergraph&)>& visit) {
  if (query.limit && *query.limit == 0) throw Error(ErrorCode::InvalidArgument, "limit must be positive");
  if (query.budget && *query.budget == 0) throw Error(ErrorCode::InvalidArgument, "budget must be positive");
  const std::uint64_t budget = query.budget.value_or(kDefaultSearchBudget);
  const SearchSpace space(query.d);
  if (!space.sum_compatible()) return 0;
  if (space.all_zero()) {
    visit(Hypergraph::make(space.n, space.r, {}));
    return 1;
  }
  std::uint64_t visited = 0;
  std::uint64_t spent = 0;
  for (int first = 0; first < static_cast<int>(space.candidates.size()); ++first) {
    SubtreeSearch search(space, budget - spent);
    bool stop = false;
    try {
      stop = search.run(first, [&](const Hypergraph& h) {
        ++visited;
        if (!visit(h)) return true;
        return query.limit && visited >= *query.limit;
      });
    } catch (const BudgetOverrun&) {
      budget_exhausted(budget);
    }
    spent += search.nodes();
    if (stop) break;
  }
  return visited;
}

std::vector<Hypergraph> collect_realizations(const RealizationQuery& query) {
  std::vector<Hypergraph> out;
  enumerate_realizations(query, [&](const Hypergraph& h) {
    out.push_back(h);
    return true;
  });
  return out;
}

bool is_hypergraphic(const DegreeSequence& d, const SearchOptions& options) {
  RealizationQuery query{d, 1, options.budget};
  return enumerate_realizations(query, [](const Hypergraph&) { return false; }) > 0;
}

ForcibleResult forcible_search(const DegreeSequence& d, const SearchOptions& options,
                               const std::function<bool(const Hypergraph&)>& is_counterexample) {
  if (options.budget == 0) throw Error(ErrorCode::InvalidArgument, "budget must be positive");
  const SearchSpace space(d);
  const auto not_hypergraphic = [] {
    return Error(ErrorCode::NotHypergraphic, "sequence has no simple uniform realization");
  };
  if (!space.sum_compatible()) throw not_hypergraphic();
  if (space.all_zero()) {
    Hypergraph empty = Hypergraph::make(space.n, space.r, {});
    if (is_counterexample(empty)) return {false, std::move(empty)};
    return {};
  }

  const int subtrees = static_cast<int>(space.candidates.size());
  std::vector<SubtreeResult> results(subtrees);
  std::atomic<int> next{0};
  std::atomic<int> first_found{INT_MAX};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};

  const auto worker = [&] {
    while (!failed.load()) {
      const int first = next.fetch_add(1);
      if (first >= subtrees) return;
      // Subtrees after an already-found counterexample cannot change the answer.
      if (first > first_found.load()) continue;
      try {
        results[first] = search_subtree(space, first, options.budget, is_counterexample);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
        return;
      }
      if (results[first].found) {
        int current = first_found.load();
        while (first < current && !first_found.compare_exchange_weak(current, first)) {
        }
      }
    }
  };

  const int workers = std::max(1, options.workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  // Replay the subtrees in order so budget accounting matches a sequential run.
  std::uint64_t spent = 0;
  std::uint64_t visited = 0;
  for (int first = 0; first < subtrees; ++first) {
    const auto& res = results[first];
    spent += res.nodes;
    if (spent > options.budget) budget_exhausted(options.budget);
    visited += res.visited;
    if (res.found) return {false, res.found};
  }
  if (visited == 0) throw not_hypergraphic();
  return {};
}

ForcibleResult forcibly_k_edge_connected(const DegreeSequence& d, int k, const SearchOptions& options) {
  if (d.size() < 2) throw Error(ErrorCode::TooFewVertices, "edge connectivity needs at least two vertices");
  return forcible_search(d, options, [k](const Hypergraph& h) { return edge_connectivity(h) < k; });
}

ForcibleResult forcibly_super(const DegreeSequence& d, const SearchOptions& options) {
  if (d.size() < 2) throw Error(ErrorCode::TooFewVertices, "edge connectivity needs at least two vertices");
  return forcible_search(d, options, [](const Hypergraph& h) { return !is_super_edge_connected(h); });
}

ForcibleResult forcibly_maximally(const DegreeSequence& d, const SearchOptions& options) {
  if (d.size() < 2) throw Error(ErrorCode::TooFewVertices, "edge connectivity needs at least two vertices");
  return forcible_search(d, options, [](const Hypergraph& h) { return edge_connectivity(h) != h.min_degree(); });
}

}  // namespace hyperconn
