#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "graph.hpp"

namespace cdfree {

struct claw {
  vertex_id center = 0;
  std::array<vertex_id, 3> leaves{}; // ascending

  std::array<edge, 3> edges() const {
    return {edge(center, leaves[0]), edge(center, leaves[1]), edge(center, leaves[2])};
  }
  vertex_set vertices() const { return make_vertex_set({center, leaves[0], leaves[1], leaves[2]}); }
  friend bool operator==(const claw&, const claw&) = default;
};

// K4 minus the edge bd. a and c are the degree-3 endpoints of the chord ac,
// b and d the two degree-2 vertices.
struct diamond {
  vertex_id a = 0, b = 0, c = 0, d = 0;

  std::array<edge, 5> edges() const {
    return {edge(a, b), edge(a, d), edge(c, b), edge(c, d), edge(a, c)};
  }
  edge chord() const { return edge(a, c); }
  vertex_set vertices() const { return make_vertex_set({a, b, c, d}); }
  friend bool operator==(const diamond&, const diamond&) = default;
};

enum class forbidden_kind { claw, diamond };

class forbidden_subgraph {
public:
  forbidden_subgraph(const claw& c) : shape_(c) {}
  forbidden_subgraph(const diamond& d) : shape_(d) {}

  forbidden_kind kind() const {
    return std::holds_alternative<claw>(shape_) ? forbidden_kind::claw : forbidden_kind::diamond;
  }
  const claw& as_claw() const { return std::get<claw>(shape_); }
  const diamond& as_diamond() const { return std::get<diamond>(shape_); }

  std::vector<edge> edge_list() const {
    return std::visit([](const auto& s) {
      auto es = s.edges();
      return std::vector<edge>(es.begin(), es.end());
    }, shape_);
  }
  vertex_set vertices() const {
    return std::visit([](const auto& s) { return s.vertices(); }, shape_);
  }

  friend bool operator==(const forbidden_subgraph&, const forbidden_subgraph&) = default;

private:
  std::variant<claw, diamond> shape_;
};

inline std::string to_string(const forbidden_subgraph& f) {
  if (f.kind() == forbidden_kind::claw) {
    const claw& c = f.as_claw();
    return "claw center=" + std::to_string(c.center) + " leaves=" + std::to_string(c.leaves[0]) + "," +
           std::to_string(c.leaves[1]) + "," + std::to_string(c.leaves[2]);
  }
  const diamond& d = f.as_diamond();
  return "diamond chord=" + std::to_string(d.a) + "," + std::to_string(d.c) + " tips=" + std::to_string(d.b) +
         "," + std::to_string(d.d);
}

namespace detail {

struct any_edge {
  bool operator()(const edge&) const { return true; }
};

struct edge_in_set {
  const edge_set* allowed;
  bool operator()(const edge& e) const { return allowed->contains(e); }
};

// Lowest (center, l1 < l2 < l3) in lexicographic order.
template <class EdgeOk>
std::optional<claw> find_claw_if(const graph& g, EdgeOk ok) {
  std::vector<vertex_id> nbrs;
  for (vertex_id v = 0; v < g.vertex_count(); ++v) {
    nbrs.clear();
    for (vertex_id w : g.neighbors(v))
      if (ok(edge(v, w)))
        nbrs.push_back(w);
    for (std::size_t i = 0; i < nbrs.size(); ++i)
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        if (g.has_edge(nbrs[i], nbrs[j]))
          continue;
        for (std::size_t l = j + 1; l < nbrs.size(); ++l)
          if (!g.has_edge(nbrs[i], nbrs[l]) && !g.has_edge(nbrs[j], nbrs[l]))
            return claw{v, {nbrs[i], nbrs[j], nbrs[l]}};
      }
  }
  return std::nullopt;
}

// Lowest (a < c, b < d) in lexicographic order, chord ac first.
template <class EdgeOk>
std::optional<diamond> find_diamond_if(const graph& g, EdgeOk ok) {
  for (vertex_id a = 0; a < g.vertex_count(); ++a)
    for (vertex_id c : g.neighbors(a)) {
      if (c < a || !ok(edge(a, c)))
        continue;
      vertex_set tips;
      for (vertex_id w : common_neighbors(g, a, c))
        if (ok(edge(a, w)) && ok(edge(c, w)))
          tips.push_back(w);
      for (std::size_t i = 0; i < tips.size(); ++i)
        for (std::size_t j = i + 1; j < tips.size(); ++j)
          if (!g.has_edge(tips[i], tips[j]))
            return diamond{a, tips[i], c, tips[j]};
    }
  return std::nullopt;
}

} // namespace detail

// Induced claw in g; with `allowed`, only claws whose three edges are all in it.
inline std::optional<claw> find_claw(const graph& g) { return detail::find_claw_if(g, detail::any_edge{}); }
inline std::optional<claw> find_claw(const graph& g, const edge_set& allowed) {
  return detail::find_claw_if(g, detail::edge_in_set{&allowed});
}

inline std::optional<diamond> find_diamond(const graph& g) { return detail::find_diamond_if(g, detail::any_edge{}); }
inline std::optional<diamond> find_diamond(const graph& g, const edge_set& allowed) {
  return detail::find_diamond_if(g, detail::edge_in_set{&allowed});
}

// A witness if g is not {claw, diamond}-free. Claws are reported first.
inline std::optional<forbidden_subgraph> find_forbidden(const graph& g) {
  if (auto c = find_claw(g))
    return forbidden_subgraph(*c);
  if (auto d = find_diamond(g))
    return forbidden_subgraph(*d);
  return std::nullopt;
}

inline bool is_cd_free(const graph& g) { return !find_forbidden(g); }

struct packing {
  std::vector<forbidden_subgraph> members;
  vertex_set modular; // X: union of member vertices
};

// Maximal packing of edge-disjoint induced claws and diamonds. Each round
// takes the lexicographically first diamond on unused edges, else the first
// such claw, until neither exists.
inline packing greedy_packing(const graph& g) {
  auto all = g.edges();
  edge_set unused(all.begin(), all.end());
  packing p;
  std::vector<vertex_id> xs;
  for (;;) {
    std::optional<forbidden_subgraph> next;
    if (auto d = find_diamond(g, unused))
      next = forbidden_subgraph(*d);
    else if (auto c = find_claw(g, unused))
      next = forbidden_subgraph(*c);
    if (!next)
      break;
    for (const edge& e : next->edge_list())
      unused.erase(e);
    auto vs = next->vertices();
    xs.insert(xs.end(), vs.begin(), vs.end());
    p.members.push_back(std::move(*next));
  }
  p.modular = make_vertex_set(std::move(xs));
  return p;
}

} // namespace cdfree
