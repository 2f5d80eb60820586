#include "frieze/bhj.hpp"

#include <algorithm>
#include <deque>

namespace frieze {

MRow m_row(const Dissection& D, int i, Traversal order) {
  const int N = D.N;
  require(0 <= i && i < N, Errc::MalformedDissection, "vertex out of range");
  PieceGraph g = piece_adjacency(D);

  std::vector<long long> vals(N, -1);
  vals[i] = 0;
  std::vector<char> visited(g.nodes.size(), 0);
  std::deque<int> queue;

  std::vector<int> node_order(g.nodes.size());
  for (size_t k = 0; k < node_order.size(); ++k) node_order[k] = static_cast<int>(k);
  if (order == Traversal::descending) std::reverse(node_order.begin(), node_order.end());

  // Seed every piece containing the base vertex: all its other vertices see i
  // inside one cell, so m(i, j) = 1 there (a boundary edge would give 1 too).
  for (int p : node_order) {
    if (!g.nodes[p].contains(i)) continue;
    visited[p] = 1;
    queue.push_back(p);
    for (int v : g.nodes[p].vertices)
      if (v != i) vals[v] = 1;
  }

  while (!queue.empty()) {
    int p = queue.front();
    queue.pop_front();
    std::vector<int> edges = g.adj[p];
    if (order == Traversal::descending) std::reverse(edges.begin(), edges.end());
    for (int e : edges) {
      const auto& edge = g.edges[e];
      int o = edge.p1 == p ? edge.p2 : edge.p1;
      if (visited[o]) continue;
      visited[o] = 1;
      // Entering the neighbour across {k, l}: every new vertex j in it
      // satisfies m(i, j) = m(i, k) + m(i, l).
      long long w = vals[edge.via.a] + vals[edge.via.b];
      for (int v : g.nodes[o].vertices) {
        if (v == edge.via.a || v == edge.via.b) continue;
        if (vals[v] < 0)
          vals[v] = w;
        else
          require(vals[v] == w, Errc::FriezeViolation, "propagation conflict at vertex " + std::to_string(v));
      }
      queue.push_back(o);
    }
  }

  for (int v = 0; v < N; ++v)
    require(vals[v] >= 0, Errc::FriezeViolation, "vertex " + std::to_string(v) + " unreached");
  return MRow{i, std::move(vals)};
}

long long m_value(const Dissection& D, const Diagonal& d) {
  return m_row(D, d.a).values[d.b];
}

long long m_value(const Dissection& D, const Obj& x) {
  long long r = 1;
  for (const Diagonal& d : x) r *= m_value(D, d);
  return r;
}

long long mesh_difference_m(const Dissection& D, const Diagonal& c) {
  MeshTriangle mesh = ar_triangle(c, D.N);
  return m_value(D, mesh.start) * m_value(D, mesh.end) - m_value(D, mesh.middle);
}

}  // namespace frieze
