#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hyperconn/degseq.hpp"
#include "hyperconn/hypergraph.hpp"

namespace hyperconn {

/// Default node-expansion cap for realization searches.
inline constexpr std::uint64_t kDefaultSearchBudget = 200'000'000;

/// Largest number of candidate edges C(n, r) a search accepts. Covers
/// n <= 10 at r = 2 and n <= 8 at r = 3.
inline constexpr int kMaxCandidateEdges = 256;

struct SearchOptions {
  /// Node-expansion cap; BudgetExhausted once exceeded.
  std::uint64_t budget = kDefaultSearchBudget;
  /// Worker threads for the first-edge partition. Results never depend on it.
  int workers = 1;
};

struct RealizationQuery {
  DegreeSequence d;
  /// Stop after this many realizations (not an error).
  std::optional<std::uint64_t> limit;
  /// Node-expansion cap; empty means kDefaultSearchBudget.
  std::optional<std::uint64_t> budget;
};

/// Streams every simple r-uniform hypergraph on {0..n-1} in which vertex i
/// has degree d.values()[i], in lexicographic edge-set order. `visit`
/// returns false to stop early. Returns the number of realizations visited.
/// Throws BudgetExhausted (the stream was cut short) or InstanceTooLarge.
std::uint64_t enumerate_realizations(const RealizationQuery& query,
                                     const std::function<bool(const Hypergraph&)>& visit);

std::vector<Hypergraph> collect_realizations(const RealizationQuery& query);

bool is_hypergraphic(const DegreeSequence& d, const SearchOptions& options = {});

struct ForcibleResult {
  bool holds = true;
  /// Lexicographically first realization lacking the property.
  std::optional<Hypergraph> counterexample;
};

/// Every realization has lambda >= k. Throws NotHypergraphic when d has no
/// realization, BudgetExhausted when the search is cut short.
ForcibleResult forcibly_k_edge_connected(const DegreeSequence& d, int k, const SearchOptions& options = {});
/// Every realization is super edge-connected.
ForcibleResult forcibly_super(const DegreeSequence& d, const SearchOptions& options = {});
/// Every realization has lambda = delta.
ForcibleResult forcibly_maximally(const DegreeSequence& d, const SearchOptions& options = {});

/// Shared driver: the first realization (in lexicographic order) for which
/// `is_counterexample` holds.
ForcibleResult forcible_search(const DegreeSequence& d, const SearchOptions& options,
                               const std::function<bool(const Hypergraph&)>& is_counterexample);

}  // namespace hyperconn
