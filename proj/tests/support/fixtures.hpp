#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include <cdfree/graph.hpp>

namespace cdfree::testing {

inline graph make_graph(std::size_t n, std::initializer_list<std::pair<vertex_id, vertex_id>> es) {
  graph g(n);
  for (auto [u, v] : es)
    g.add_edge(u, v);
  return g;
}

inline graph complete(std::size_t n) {
  graph g(n);
  for (vertex_id u = 0; u < n; ++u)
    for (vertex_id v = u + 1; v < n; ++v)
      g.add_edge(u, v);
  return g;
}

inline graph cycle(std::size_t n) {
  graph g(n);
  for (vertex_id v = 0; v < n; ++v)
    g.add_edge(v, vertex_id((v + 1) % n));
  return g;
}

inline graph path(std::size_t n) {
  graph g(n);
  for (vertex_id v = 0; v + 1 < n; ++v)
    g.add_edge(v, v + 1);
  return g;
}

// K_{1,3} with center 0.
inline graph claw_graph() { return make_graph(4, {{0, 1}, {0, 2}, {0, 3}}); }

// Chord 0-2, tips 1 and 3.
inline graph diamond_graph() { return make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}}); }

// Triangles {0,1,2} and {0,3,4} sharing vertex 0.
inline graph bowtie() { return make_graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}); }

inline graph k5_minus(vertex_id u, vertex_id v) {
  graph g = complete(5);
  g.remove_edge(u, v);
  return g;
}

inline graph petersen() {
  graph g(10);
  for (vertex_id i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

inline graph disjoint_union(const graph& a, const graph& b) {
  graph g(a.vertex_count() + b.vertex_count());
  for (const edge& e : a.edges())
    g.add_edge(e.u, e.v);
  const vertex_id off = vertex_id(a.vertex_count());
  for (const edge& e : b.edges())
    g.add_edge(e.u + off, e.v + off);
  return g;
}

inline void add_clique(graph& g, std::initializer_list<vertex_id> vs) {
  std::vector<vertex_id> v(vs);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      g.add_edge(v[i], v[j]);
}

} // namespace cdfree::testing
