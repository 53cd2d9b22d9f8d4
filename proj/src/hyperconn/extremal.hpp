#pragma once

#include <cstdint>

#include "hyperconn/combinatorics.hpp"
#include "hyperconn/conditions.hpp"
#include "hyperconn/degseq.hpp"
#include "hyperconn/hypergraph.hpp"
#include "hyperconn/realizations.hpp"

namespace hyperconn {

/// Two complete r-uniform parts on j and n - j vertices joined by the
/// profile's c crossing edges.
struct ExtremalSpec {
  int n = 0;
  int j = 0;
  int r = 0;
  CrossingProfile profile;
};

/// Builds the extremal hypergraph. Left part is {0..j-1}, right part
/// {j..n-1}; the highest-labelled vertices of each side carry the crossing
/// incidences, in ascending multiplicity. Crossing edges are found by
/// backtracking (lexicographically first assignment).
///
/// Throws SpecInvalid when r <= j <= n - r fails or the profile is not valid
/// for (j, n, r); InfeasibleProfile when a side has fewer than c incidences
/// or no pairwise-distinct assignment exists.
Hypergraph build_extremal(const ExtremalSpec& spec);

struct StrongestWitness {
  DegreeSequence dprime;
  Hypergraph h;
};

/// Majorizing counterexample for a violated general k-edge condition: for a
/// minimum-degree violation, a realization of d itself (or, when d has none,
/// of the nearest d' that raises only d_2..d_n); otherwise the
/// extremal hypergraph at the violation's (j, profile), with d' its degree
/// sequence. Throws VerdictMismatch when v is not a violation of check_theorem23
/// on (d, k).
StrongestWitness strongest_witness(const DegreeSequence& d, int k, const Verdict& v,
                                   const SearchOptions& options = {});

}  // namespace hyperconn
