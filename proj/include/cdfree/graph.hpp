#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iterator>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"

namespace cdfree {

using vertex_id = std::uint32_t;

// Sorted, duplicate-free list of vertices.
using vertex_set = std::vector<vertex_id>;

// Undirected edge, stored with u < v so (u,v) and (v,u) are the same value.
struct edge {
  vertex_id u = 0;
  vertex_id v = 0;

  edge() = default;
  edge(vertex_id a, vertex_id b) : u(std::min(a, b)), v(std::max(a, b)) {
    if (a == b)
      throw input_error("loop at vertex " + std::to_string(a));
  }

  friend auto operator<=>(const edge&, const edge&) = default;

  bool touches(vertex_id x) const { return u == x || v == x; }
  vertex_id other(vertex_id x) const { return x == u ? v : u; }
};

using edge_set = std::set<edge>;

struct edge_hash {
  std::size_t operator()(const edge& e) const noexcept {
    return std::hash<std::uint64_t>{}((std::uint64_t(e.u) << 32) | e.v);
  }
};

inline vertex_set make_vertex_set(std::vector<vertex_id> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

inline bool contains(const vertex_set& s, vertex_id v) {
  return std::binary_search(s.begin(), s.end(), v);
}

// Simple undirected graph on vertices [0, n). Adjacency lists are kept
// sorted so membership is a binary search and set operations are merges.
class graph {
public:
  graph() = default;
  explicit graph(std::size_t n) : adj_(n) {}

  static graph from_edges(std::size_t n, std::span<const edge> es) {
    graph g(n);
    for (const edge& e : es) {
      if (g.has_edge(e.u, e.v))
        throw input_error("duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
      g.add_edge(e.u, e.v);
    }
    return g;
  }

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const vertex_id> neighbors(vertex_id v) const {
    check_vertex(v);
    return adj_[v];
  }

  std::size_t degree(vertex_id v) const { return neighbors(v).size(); }

  bool has_edge(vertex_id u, vertex_id v) const {
    check_vertex(u);
    check_vertex(v);
    if (adj_[u].size() > adj_[v].size())
      std::swap(u, v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }
  bool has_edge(const edge& e) const { return has_edge(e.u, e.v); }

  // All edges in ascending order.
  std::vector<edge> edges() const {
    std::vector<edge> out;
    out.reserve(edge_count_);
    for (vertex_id u = 0; u < adj_.size(); ++u)
      for (vertex_id w : adj_[u])
        if (u < w)
          out.emplace_back(u, w);
    return out;
  }

  vertex_id add_vertex() {
    adj_.emplace_back();
    return vertex_id(adj_.size() - 1);
  }

  void add_edge(vertex_id u, vertex_id v) {
    edge e(u, v);
    check_vertex(e.v);
    if (insert_sorted(adj_[e.u], e.v)) {
      insert_sorted(adj_[e.v], e.u);
      ++edge_count_;
    }
  }

  void remove_edge(vertex_id u, vertex_id v) {
    edge e(u, v);
    check_vertex(e.v);
    if (!erase_sorted(adj_[e.u], e.v))
      throw input_error("edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " not present");
    erase_sorted(adj_[e.v], e.u);
    --edge_count_;
  }

  void check_vertex(vertex_id v) const {
    if (v >= adj_.size())
      throw input_error("unknown vertex " + std::to_string(v));
  }

  friend bool operator==(const graph& a, const graph& b) { return a.adj_ == b.adj_; }

private:
  static bool insert_sorted(std::vector<vertex_id>& vs, vertex_id x) {
    auto it = std::lower_bound(vs.begin(), vs.end(), x);
    if (it != vs.end() && *it == x)
      return false;
    vs.insert(it, x);
    return true;
  }

  static bool erase_sorted(std::vector<vertex_id>& vs, vertex_id x) {
    auto it = std::lower_bound(vs.begin(), vs.end(), x);
    if (it == vs.end() || *it != x)
      return false;
    vs.erase(it);
    return true;
  }

  std::vector<std::vector<vertex_id>> adj_;
  std::size_t edge_count_ = 0;
};

inline vertex_set common_neighbors(const graph& g, vertex_id u, vertex_id v) {
  if (u == v)
    throw input_error("common_neighbors needs two distinct vertices");
  auto nu = g.neighbors(u);
  auto nv = g.neighbors(v);
  vertex_set out;
  std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(out));
  return out;
}

inline bool is_clique(const graph& g, std::span<const vertex_id> s) {
  for (vertex_id v : s)
    g.check_vertex(v);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.has_edge(s[i], s[j]))
        return false;
  return true;
}

struct induced_graph {
  graph g;
  std::vector<vertex_id> to_parent; // sub id -> parent id
  std::vector<vertex_id> to_sub;    // parent id -> sub id, or `absent`

  static constexpr vertex_id absent = vertex_id(-1);
};

// G[s]. Sub ids follow the ascending order of s.
inline induced_graph induced_subgraph(const graph& g, std::span<const vertex_id> s) {
  induced_graph r;
  r.to_sub.assign(g.vertex_count(), induced_graph::absent);
  r.to_parent = make_vertex_set({s.begin(), s.end()});
  for (vertex_id v : r.to_parent)
    g.check_vertex(v);
  for (vertex_id i = 0; i < r.to_parent.size(); ++i)
    r.to_sub[r.to_parent[i]] = i;
  r.g = graph(r.to_parent.size());
  for (vertex_id i = 0; i < r.to_parent.size(); ++i)
    for (vertex_id w : g.neighbors(r.to_parent[i]))
      if (r.to_sub[w] != induced_graph::absent && i < r.to_sub[w])
        r.g.add_edge(i, r.to_sub[w]);
  return r;
}

// G - X for a vertex set X.
inline induced_graph remove_vertices(const graph& g, const vertex_set& x) {
  vertex_set keep;
  for (vertex_id v = 0; v < g.vertex_count(); ++v)
    if (!contains(x, v))
      keep.push_back(v);
  return induced_subgraph(g, keep);
}

// G - F. Every edge of f must be present.
inline graph delete_edges(graph g, const edge_set& f) {
  for (const edge& e : f)
    g.remove_edge(e.u, e.v);
  return g;
}

inline graph add_edges(graph g, const edge_set& f) {
  for (const edge& e : f) {
    if (g.has_edge(e))
      throw input_error("edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " already present");
    g.add_edge(e.u, e.v);
  }
  return g;
}

// Structural self-check; empty when adjacency is symmetric, sorted, loop-free
// and the edge counter agrees with the lists.
inline std::vector<std::string> validate_graph(const graph& g) {
  std::vector<std::string> problems;
  std::size_t degree_sum = 0;
  for (vertex_id v = 0; v < g.vertex_count(); ++v) {
    auto nv = g.neighbors(v);
    degree_sum += nv.size();
    if (!std::is_sorted(nv.begin(), nv.end()) || std::adjacent_find(nv.begin(), nv.end()) != nv.end())
      problems.push_back("neighbors of " + std::to_string(v) + " not strictly sorted");
    for (vertex_id w : nv) {
      if (w == v)
        problems.push_back("loop at " + std::to_string(v));
      else if (w >= g.vertex_count())
        problems.push_back("neighbor out of range at " + std::to_string(v));
      else {
        auto nw = g.neighbors(w);
        if (!std::binary_search(nw.begin(), nw.end(), v))
          problems.push_back("asymmetric edge " + std::to_string(v) + " " + std::to_string(w));
      }
    }
  }
  if (degree_sum != 2 * g.edge_count())
    problems.push_back("edge count mismatch");
  return problems;
}

} // namespace cdfree
