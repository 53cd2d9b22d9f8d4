#include "hyperconn/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "hyperconn/error.hpp"
#include "hyperconn/maxflow.hpp"

namespace hyperconn {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

std::vector<std::uint32_t> edge_masks(const Hypergraph& h) {
  std::vector<std::uint32_t> masks;
  masks.reserve(h.edges().size());
  for (const auto& e : h.edges()) {
    std::uint32_t m = 0;
    for (int v : e) m |= std::uint32_t{1} << v;
    masks.push_back(m);
  }
  return masks;
}

void require_subset_scale(const Hypergraph& h) {
  if (h.vertex_count() > kMaxSubsetVertices) {
    throw Error(ErrorCode::InstanceTooLarge,
                "bipartition enumeration supports at most " + std::to_string(kMaxSubsetVertices) + " vertices");
  }
}

// Visits every bipartition once as a mask S containing vertex 0, S proper.
template <typename Visit>
void for_each_side(int n, Visit&& visit) {
  const std::uint32_t rest = n >= 2 ? (std::uint32_t{1} << (n - 1)) - 1 : 0;
  for (std::uint32_t sub = 0; sub < rest; ++sub) {
    visit((sub << 1) | 1u);
  }
}

}  // namespace

Hypergraph Hypergraph::make(int n, int r, std::vector<Edge> edges) {
  if (r < 2) throw Error(ErrorCode::RankTooSmall, "rank must be at least 2");
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "vertex count must be non-negative");
  for (auto& e : edges) {
    if (static_cast<int>(e.size()) != r) {
      throw Error(ErrorCode::BadEdgeSize, "edge has " + std::to_string(e.size()) + " vertices, expected " +
                                              std::to_string(r));
    }
    std::sort(e.begin(), e.end());
    for (int v : e) {
      if (v < 0 || v >= n) throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v) + " out of range");
    }
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw Error(ErrorCode::BadEdgeSize, "edge repeats a vertex");
    }
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw Error(ErrorCode::DuplicateEdge, "hypergraph is not simple: repeated edge");
  }
  return Hypergraph(n, r, std::move(edges));
}

std::vector<int> Hypergraph::degrees() const {
  std::vector<int> deg(n_, 0);
  for (const auto& e : edges_) {
    for (int v : e) ++deg[v];
  }
  return deg;
}

int Hypergraph::min_degree() const {
  const auto deg = degrees();
  return deg.empty() ? 0 : *std::min_element(deg.begin(), deg.end());
}

Hypergraph Hypergraph::without_edges(const std::vector<int>& edge_ids) const {
  std::vector<bool> drop(edges_.size(), false);
  for (int id : edge_ids) drop.at(id) = true;
  std::vector<Edge> kept;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (!drop[i]) kept.push_back(edges_[i]);
  }
  return Hypergraph(n_, r_, std::move(kept));
}

DegreeSequence degree_sequence_of(const Hypergraph& h) { return DegreeSequence::make(h.degrees(), h.rank()); }

bool is_connected(const Hypergraph& h) {
  const int n = h.vertex_count();
  if (n == 0) throw Error(ErrorCode::ConnectivityUndefined, "connectivity is undefined without vertices");
  DisjointSets sets(n);
  int components = n;
  for (const auto& e : h.edges()) {
    for (std::size_t i = 1; i < e.size(); ++i) {
      if (sets.unite(e[0], e[i])) --components;
    }
  }
  return components == 1;
}

int edge_connectivity(const Hypergraph& h) {
  const int n = h.vertex_count();
  if (n < 2) throw Error(ErrorCode::TooFewVertices, "edge connectivity needs at least two vertices");
  if (!is_connected(h)) return 0;
  const int m = h.edge_count();
  // Vertex nodes 0..n-1; hyperedge e becomes in-node n+2e and out-node
  // n+2e+1 joined by a unit arc.
  FlowNetwork net(n + 2 * m);
  for (int e = 0; e < m; ++e) {
    const int in = n + 2 * e;
    const int out = in + 1;
    net.add_arc(in, out, 1);
    for (int v : h.edges()[e]) {
      net.add_arc(v, in, FlowNetwork::kInfinite);
      net.add_arc(out, v, FlowNetwork::kInfinite);
    }
  }
  int best = h.min_degree();
  for (int t = 1; t < n && best > 0; ++t) {
    best = std::min(best, net.max_flow(0, t, best));
  }
  return best;
}

int edge_connectivity_bruteforce(const Hypergraph& h) {
  const int n = h.vertex_count();
  if (n < 2) throw Error(ErrorCode::TooFewVertices, "edge connectivity needs at least two vertices");
  require_subset_scale(h);
  const auto masks = edge_masks(h);
  int best = h.edge_count();
  for_each_side(n, [&](std::uint32_t side) {
    int crossing = 0;
    for (std::uint32_t m : masks) {
      if ((m & side) != 0 && (m & ~side) != 0) ++crossing;
    }
    best = std::min(best, crossing);
  });
  return best;
}

CutSet boundary(const Hypergraph& h, const std::vector<int>& side) {
  std::vector<bool> in_side(h.vertex_count(), false);
  for (int v : side) {
    if (v < 0 || v >= h.vertex_count()) throw Error(ErrorCode::VertexOutOfRange, "vertex out of range");
    in_side[v] = true;
  }
  CutSet cut;
  cut.side = side;
  std::sort(cut.side.begin(), cut.side.end());
  cut.side.erase(std::unique(cut.side.begin(), cut.side.end()), cut.side.end());
  for (int e = 0; e < h.edge_count(); ++e) {
    bool inside = false;
    bool outside = false;
    for (int v : h.edges()[e]) (in_side[v] ? inside : outside) = true;
    if (inside && outside) cut.edges.push_back(e);
  }
  return cut;
}

bool is_super_edge_connected(const Hypergraph& h) {
  const int n = h.vertex_count();
  if (n < 2) throw Error(ErrorCode::TooFewVertices, "super edge-connectivity needs at least two vertices");
  require_subset_scale(h);
  const auto deg = h.degrees();
  const int delta = *std::min_element(deg.begin(), deg.end());
  const int lambda = edge_connectivity(h);
  if (lambda != delta) return false;
  std::uint32_t min_degree_vertices = 0;
  for (int v = 0; v < n; ++v) {
    if (deg[v] == delta) min_degree_vertices |= std::uint32_t{1} << v;
  }
  const auto masks = edge_masks(h);
  const std::uint32_t all = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
  bool super = true;
  for_each_side(n, [&](std::uint32_t side) {
    if (!super) return;
    int crossing = 0;
    std::uint32_t common = all;
    for (std::uint32_t m : masks) {
      if ((m & side) != 0 && (m & ~side) != 0) {
        ++crossing;
        common &= m;
      }
    }
    // A minimum cut of size delta is a vertex star exactly when some
    // minimum-degree vertex lies in all of its edges.
    if (crossing == lambda && (common & min_degree_vertices) == 0) super = false;
  });
  return super;
}

Hypergraph read_hypergraph(std::istream& in) {
  std::string line;
  const auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      return true;
    }
    return false;
  };
  if (!next_line()) throw Error(ErrorCode::ParseError, "missing header line 'n r m'");
  std::istringstream header(line);
  long long n = -1;
  long long r = -1;
  long long m = -1;
  std::string extra;
  if (!(header >> n >> r >> m) || (header >> extra) || n < 0 || m < 0) {
    throw Error(ErrorCode::ParseError, "malformed header line: '" + line + "'");
  }
  if (r < 2) throw Error(ErrorCode::RankTooSmall, "rank must be at least 2");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_line()) throw Error(ErrorCode::ParseError, "expected " + std::to_string(m) + " edge lines");
    std::istringstream row(line);
    Edge e;
    long long v = 0;
    while (row >> v) e.push_back(static_cast<int>(v));
    if (!row.eof()) throw Error(ErrorCode::ParseError, "malformed edge line: '" + line + "'");
    if (static_cast<long long>(e.size()) != r) throw Error(ErrorCode::BadEdgeSize, "edge line has wrong size: '" + line + "'");
    if (!std::is_sorted(e.begin(), e.end()) || std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw Error(ErrorCode::ParseError, "edge vertices must be strictly increasing: '" + line + "'");
    }
    edges.push_back(std::move(e));
  }
  if (next_line()) throw Error(ErrorCode::ParseError, "trailing content after " + std::to_string(m) + " edges");
  return Hypergraph::make(static_cast<int>(n), static_cast<int>(r), std::move(edges));
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
  out << h.vertex_count() << ' ' << h.rank() << ' ' << h.edge_count() << '\n';
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) out << ' ';
      out << e[i];
    }
    out << '\n';
  }
}

std::string to_text(const Hypergraph& h) {
  std::ostringstream out;
  write_hypergraph(out, h);
  return out.str();
}

}  // namespace hyperconn
