#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "hyperconn/degseq.hpp"

namespace hyperconn {

using Edge = std::vector<int>;

/// Simple r-uniform hypergraph on vertices {0, ..., n-1}. Edges are stored
/// canonically: each edge sorted ascending, the edge list sorted
/// lexicographically.
class Hypergraph {
 public:
  /// Throws RankTooSmall, BadEdgeSize (wrong size or repeated vertex),
  /// VertexOutOfRange or DuplicateEdge.
  static Hypergraph make(int n, int r, std::vector<Edge> edges);

  int vertex_count() const noexcept { return n_; }
  int rank() const noexcept { return r_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Per-vertex degree, indexed by vertex label.
  std::vector<int> degrees() const;
  int min_degree() const;

  /// Copy without the given edges (indices into edges()).
  Hypergraph without_edges(const std::vector<int>& edge_ids) const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  Hypergraph(int n, int r, std::vector<Edge> edges) : n_(n), r_(r), edges_(std::move(edges)) {}

  int n_ = 0;
  int r_ = 2;
  std::vector<Edge> edges_;
};

/// Edges meeting both S and its complement, with S itself.
struct CutSet {
  std::vector<int> edges;  // indices into Hypergraph::edges()
  std::vector<int> side;   // sorted vertex labels of S
};

/// Largest vertex count accepted by the subset-enumeration routines.
inline constexpr int kMaxSubsetVertices = 24;

DegreeSequence degree_sequence_of(const Hypergraph& h);

/// Isolated vertices are components of their own. Throws
/// ConnectivityUndefined for n = 0.
bool is_connected(const Hypergraph& h);

/// Minimum number of edges whose removal disconnects h (0 when already
/// disconnected). Computed as min over t of the number of hyperedge-disjoint
/// 0-t paths, each hyperedge split into a unit-capacity arc. Throws
/// TooFewVertices for n < 2.
int edge_connectivity(const Hypergraph& h);

/// Same value by enumerating every vertex bipartition. n <= 24, else
/// InstanceTooLarge.
int edge_connectivity_bruteforce(const Hypergraph& h);

/// boundary(S) for the vertex set S.
CutSet boundary(const Hypergraph& h, const std::vector<int>& side);

/// Every minimum edge-cut is the edge set of one minimum-degree vertex, and
/// lambda = delta. Enumerates bipartitions, so n <= 24.
bool is_super_edge_connected(const Hypergraph& h);

/// Hypergraph file format: "n r m", then m lines of r increasing vertex
/// labels. '#' lines and blank lines are skipped on input.
Hypergraph read_hypergraph(std::istream& in);
void write_hypergraph(std::ostream& out, const Hypergraph& h);
std::string to_text(const Hypergraph& h);

}  // namespace hyperconn
