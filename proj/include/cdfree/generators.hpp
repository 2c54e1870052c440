#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"

// Seeded instance generators. All randomness comes from std::mt19937_64, so
// output is reproducible for a fixed seed and standard library.
namespace cdfree::gen {

// Uniform graph with exactly m edges on n vertices.
inline graph gnm(std::size_t n, std::size_t m, std::uint64_t seed) {
  const std::size_t pairs = n < 2 ? 0 : n * (n - 1) / 2;
  if (m > pairs)
    throw input_error("gnm: " + std::to_string(m) + " edges do not fit on " + std::to_string(n) + " vertices");
  std::vector<edge> all;
  all.reserve(pairs);
  for (vertex_id u = 0; u < n; ++u)
    for (vertex_id v = u + 1; v < n; ++v)
      all.emplace_back(u, v);
  std::mt19937_64 rng(seed);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(m);
  std::sort(all.begin(), all.end());
  return graph::from_edges(n, all);
}

// Line graph of a random bipartite graph with `edges` edges between `left`
// and `right` vertices. Bipartite graphs are triangle-free, so the result is
// {claw, diamond}-free and has exactly `edges` vertices.
inline graph line_of_bipartite(std::size_t left, std::size_t right, std::size_t edges, std::uint64_t seed) {
  if (edges > left * right)
    throw input_error("line-of-bipartite: " + std::to_string(edges) + " edges exceed " + std::to_string(left) +
                      "x" + std::to_string(right));
  std::vector<std::pair<std::size_t, std::size_t>> all;
  for (std::size_t l = 0; l < left; ++l)
    for (std::size_t r = 0; r < right; ++r)
      all.emplace_back(l, r);
  std::mt19937_64 rng(seed);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(edges);
  std::sort(all.begin(), all.end());

  graph g(edges);
  for (vertex_id i = 0; i < edges; ++i)
    for (vertex_id j = i + 1; j < edges; ++j)
      if (all[i].first == all[j].first || all[i].second == all[j].second)
        g.add_edge(i, j);
  return g;
}

// A line-of-bipartite base with `plants` extra claws or diamonds, each on four
// fresh vertices and tied to the base by a single edge.
inline graph planted(std::size_t left, std::size_t right, std::size_t base_edges, std::size_t plants,
                     std::uint64_t seed) {
  graph g = line_of_bipartite(left, right, base_edges, seed);
  const std::size_t base_n = g.vertex_count();
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (std::size_t p = 0; p < plants; ++p) {
    vertex_id q[4];
    for (vertex_id& v : q)
      v = g.add_vertex();
    const bool is_diamond = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
    g.add_edge(q[0], q[1]);
    g.add_edge(q[0], q[2]);
    g.add_edge(q[0], q[3]);
    if (is_diamond) {
      g.add_edge(q[1], q[2]);
      g.add_edge(q[2], q[3]);
    }
    if (base_n > 0) {
      const vertex_id from = q[std::uniform_int_distribution<int>(0, 3)(rng)];
      const vertex_id to = vertex_id(std::uniform_int_distribution<std::size_t>(0, base_n - 1)(rng));
      g.add_edge(from, to);
    }
  }
  return g;
}

} // namespace cdfree::gen
