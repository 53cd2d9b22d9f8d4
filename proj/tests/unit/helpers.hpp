#pragma once

#include <vector>

#include <doctest.h>

#include "hyperconn/degseq.hpp"
#include "hyperconn/error.hpp"
#include "hyperconn/hypergraph.hpp"

namespace testing {

inline hyperconn::DegreeSequence seq(std::vector<int> values, int r) {
  return hyperconn::DegreeSequence::make(values, r);
}

inline hyperconn::Hypergraph complete(int n, int r) {
  std::vector<hyperconn::Edge> edges;
  hyperconn::Edge e;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(e.size()) == r) {
      edges.push_back(e);
      return;
    }
    for (int v = from; v < n; ++v) {
      e.push_back(v);
      self(self, v + 1);
      e.pop_back();
    }
  };
  rec(rec, 0);
  return hyperconn::Hypergraph::make(n, r, edges);
}

template <typename F>
hyperconn::ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const hyperconn::Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return hyperconn::ErrorCode::InvalidArgument;
}

}  // namespace testing
