#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graph.hpp"

// Brute-force ground truth. Nothing here calls the detection, kernel or
// search code; checks go through an exhaustive scan of all 4-vertex subsets.
namespace cdfree::oracle {

namespace detail {

struct adjacency_matrix {
  std::size_t n = 0;
  std::vector<char> bits;

  explicit adjacency_matrix(const graph& g) : n(g.vertex_count()), bits(n * n, 0) {
    for (const edge& e : g.edges())
      set(e.u, e.v, true);
  }
  bool at(std::size_t u, std::size_t v) const { return bits[u * n + v]; }
  void set(std::size_t u, std::size_t v, bool on) { bits[u * n + v] = bits[v * n + u] = on; }
};

// A 4-set induces a claw iff it has 3 edges sharing one endpoint, and a
// diamond iff it has exactly 5 edges.
inline bool four_set_is_forbidden(const adjacency_matrix& m, std::size_t a, std::size_t b, std::size_t c,
                                  std::size_t d) {
  const std::size_t q[4] = {a, b, c, d};
  int deg[4] = {0, 0, 0, 0};
  int edges = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (m.at(q[i], q[j])) {
        ++edges;
        ++deg[i];
        ++deg[j];
      }
  if (edges == 5)
    return true;
  if (edges == 3)
    for (int i = 0; i < 4; ++i)
      if (deg[i] == 3)
        return true;
  return false;
}

inline bool matrix_is_cd_free(const adjacency_matrix& m) {
  for (std::size_t a = 0; a < m.n; ++a)
    for (std::size_t b = a + 1; b < m.n; ++b)
      for (std::size_t c = b + 1; c < m.n; ++c)
        for (std::size_t d = c + 1; d < m.n; ++d)
          if (four_set_is_forbidden(m, a, b, c, d))
            return false;
  return true;
}

inline double binomial(std::size_t n, std::size_t r) {
  if (r > n)
    return 0.0;
  double out = 1.0;
  for (std::size_t i = 1; i <= r; ++i)
    out = out * double(n - r + i) / double(i);
  return out;
}

} // namespace detail

inline bool brute_is_cd_free(const graph& g) { return detail::matrix_is_cd_free(detail::adjacency_matrix(g)); }

// Every induced claw or diamond, as sorted 4-sets.
inline std::vector<std::array<vertex_id, 4>> brute_forbidden_sets(const graph& g) {
  detail::adjacency_matrix m(g);
  std::vector<std::array<vertex_id, 4>> out;
  for (vertex_id a = 0; a < m.n; ++a)
    for (vertex_id b = a + 1; b < m.n; ++b)
      for (vertex_id c = b + 1; c < m.n; ++c)
        for (vertex_id d = c + 1; d < m.n; ++d)
          if (detail::four_set_is_forbidden(m, a, b, c, d))
            out.push_back({a, b, c, d});
  return out;
}

inline constexpr double default_work_bound = 1e8;

// Number of cd-freeness checks an exhaustive search up to k_max may need.
inline double brute_work(const graph& g, int k_max) {
  double work = 0.0;
  for (int s = 0; s <= k_max; ++s)
    work += detail::binomial(g.edge_count(), std::size_t(s));
  return work;
}

struct min_cdh {
  int size = 0;
  edge_set deleted;
};

// Smallest CDH set of size <= k_max. Sizes ascend; within a size, subsets
// are visited in lexicographic order of the sorted edge list, so the witness
// is the lexicographically first minimum set.
inline std::optional<min_cdh> brute_min_cdh(const graph& g, int k_max, double work_bound = default_work_bound) {
  if (k_max < 0)
    return std::nullopt;
  if (brute_work(g, k_max) > work_bound)
    throw capacity_error("exhaustive search over " + std::to_string(g.edge_count()) + " edges up to size " +
                         std::to_string(k_max) + " exceeds the work bound");
  const std::vector<edge> es = g.edges();
  detail::adjacency_matrix m(g);
  const int limit = std::min<int>(k_max, int(es.size()));
  for (int s = 0; s <= limit; ++s) {
    std::vector<std::size_t> pick(s);
    for (int i = 0; i < s; ++i)
      pick[i] = std::size_t(i);
    for (;;) {
      for (std::size_t i : pick)
        m.set(es[i].u, es[i].v, false);
      const bool ok = detail::matrix_is_cd_free(m);
      for (std::size_t i : pick)
        m.set(es[i].u, es[i].v, true);
      if (ok) {
        min_cdh r{s, {}};
        for (std::size_t i : pick)
          r.deleted.insert(es[i]);
        return r;
      }
      int i = s - 1;
      while (i >= 0 && pick[i] == es.size() - std::size_t(s - i))
        --i;
      if (i < 0)
        break;
      ++pick[i];
      for (int j = i + 1; j < s; ++j)
        pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

// Labels of the Case-3.2 gadget: diamond a,b,c,d with chord ac plus a fifth
// vertex t adjacent to a, b and d but not to c.
enum class gadget_vertex { a, b, c, d, t };

inline char label(gadget_vertex v) { return "abcdt"[int(v)]; }

struct gadget_edge {
  gadget_vertex p, q;
  friend bool operator==(const gadget_edge&, const gadget_edge&) = default;
};

inline std::string to_string(const gadget_edge& e) { return {label(e.p), label(e.q)}; }

using gadget_pair = std::array<gadget_edge, 2>;

inline const std::array<gadget_edge, 8>& gadget_edges() {
  using gv = gadget_vertex;
  static const std::array<gadget_edge, 8> es = {{{gv::a, gv::b},
                                                 {gv::a, gv::d},
                                                 {gv::a, gv::c},
                                                 {gv::c, gv::b},
                                                 {gv::c, gv::d},
                                                 {gv::a, gv::t},
                                                 {gv::b, gv::t},
                                                 {gv::d, gv::t}}};
  return es;
}

inline graph gadget_graph() {
  graph g(5);
  for (const gadget_edge& e : gadget_edges())
    g.add_edge(vertex_id(e.p), vertex_id(e.q));
  return g;
}

struct gadget_pair_table {
  std::vector<gadget_pair> pairs; // in the order of the 28 candidates
  std::size_t candidates = 0;

  bool contains(gadget_edge e1, gadget_edge e2) const {
    for (const gadget_pair& p : pairs)
      if ((p[0] == e1 && p[1] == e2) || (p[0] == e2 && p[1] == e1))
        return true;
    return false;
  }
};

// The pairs of gadget edges whose deletion leaves the gadget {claw, diamond}-free.
inline gadget_pair_table derive_gadget_pairs() {
  const auto& es = gadget_edges();
  const graph base = gadget_graph();
  gadget_pair_table t;
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      ++t.candidates;
      graph h = base;
      h.remove_edge(vertex_id(es[i].p), vertex_id(es[i].q));
      h.remove_edge(vertex_id(es[j].p), vertex_id(es[j].q));
      if (brute_is_cd_free(h))
        t.pairs.push_back({es[i], es[j]});
    }
  return t;
}

// Derived once per process.
inline const gadget_pair_table& canonical_gadget_pairs() {
  static const gadget_pair_table table = derive_gadget_pairs();
  return table;
}

inline std::string dump(const gadget_pair_table& t) {
  std::string s;
  for (std::size_t i = 0; i < t.pairs.size(); ++i)
    s += std::to_string(i + 1) + ": -{" + to_string(t.pairs[i][0]) + ", " + to_string(t.pairs[i][1]) + "}\n";
  s += std::to_string(t.pairs.size()) + " of " + std::to_string(t.candidates) + " pairs\n";
  return s;
}

// Positive root x of x^p = sum_i x^(p - a_i), p = max a_i, by bisection on
// the increasing function 1 - sum_i x^(-a_i) over [1, j]. A single entry is
// degenerate (no branching) and yields 1.
inline double branching_factor(std::span<const int> vector) {
  if (vector.empty())
    throw input_error("branching vector is empty");
  for (int a : vector)
    if (a < 1)
      throw input_error("branching vector entries must be positive");
  if (vector.size() == 1)
    return 1.0;
  auto f = [&](double x) {
    double s = 1.0;
    for (int a : vector)
      s -= std::pow(x, -a);
    return s;
  };
  double lo = 1.0;
  double hi = double(vector.size());
  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

} // namespace cdfree::oracle
