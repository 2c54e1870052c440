#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace cdfree {

enum class bag_origin { maximal_clique, simplified_singleton };

struct bag {
  vertex_set vertices;
  bag_origin origin = bag_origin::maximal_clique;

  std::size_t size() const { return vertices.size(); }
  friend bool operator==(const bag&, const bag&) = default;
};

struct bag_set {
  std::vector<bag> bags; // ascending by vertex set
  std::vector<std::vector<std::size_t>> vertex_to_bags;
};

// The structural conditions a bag decomposition of a {claw, diamond}-free
// graph satisfies. `well_formed` covers the bag definitions themselves.
enum class bag_condition {
  well_formed = 0,
  vertex_in_two_bags = 1,
  edge_in_one_bag = 2,
  share_at_most_one = 3,
  no_cross_edges = 4,
};

inline const char* to_string(bag_condition c) {
  switch (c) {
    case bag_condition::well_formed: return "well-formed";
    case bag_condition::vertex_in_two_bags: return "vertex-in-two-bags";
    case bag_condition::edge_in_one_bag: return "edge-in-one-bag";
    case bag_condition::share_at_most_one: return "share-at-most-one";
    case bag_condition::no_cross_edges: return "no-cross-edges";
  }
  return "?";
}

struct bag_violation {
  bag_condition condition;
  std::string detail;
};

class bag_error : public contract_error {
public:
  bag_error(bag_condition c, const std::string& what)
      : contract_error(std::string(to_string(c)) + ": " + what), condition_(c) {}
  bag_condition condition() const { return condition_; }

private:
  bag_condition condition_;
};

enum class isolated_vertices { reject, singleton };

namespace detail {

inline std::string join(const vertex_set& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i)
    s += (i ? "," : "") + std::to_string(vs[i]);
  return s + "}";
}

inline void index_bags(bag_set& bs, std::size_t n) {
  std::sort(bs.bags.begin(), bs.bags.end(), [](const bag& l, const bag& r) { return l.vertices < r.vertices; });
  bs.vertex_to_bags.assign(n, {});
  for (std::size_t i = 0; i < bs.bags.size(); ++i)
    for (vertex_id v : bs.bags[i].vertices)
      bs.vertex_to_bags[v].push_back(i);
}

} // namespace detail

// Bags of a {claw, diamond}-free graph. The maximal clique of each edge uv
// is its closure {u, v} + N(u) n N(v); vertices lying in only one maximal
// clique also get a singleton bag. Isolated vertices are rejected unless the
// policy turns them into singleton bags of their own.
inline bag_set compute_bags(const graph& h, isolated_vertices policy = isolated_vertices::reject) {
  std::map<vertex_set, std::size_t> cliques;
  for (const edge& e : h.edges()) {
    vertex_set closure = common_neighbors(h, e.u, e.v);
    closure.insert(std::lower_bound(closure.begin(), closure.end(), e.u), e.u);
    closure.insert(std::lower_bound(closure.begin(), closure.end(), e.v), e.v);
    if (!is_clique(h, closure))
      throw bag_error(bag_condition::edge_in_one_bag,
                      "closure of edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is not a clique");
    cliques.emplace(std::move(closure), 0);
  }

  std::vector<std::size_t> clique_count(h.vertex_count(), 0);
  std::map<edge, std::size_t> edge_count;
  bag_set bs;
  for (const auto& [vs, unused] : cliques) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
      ++clique_count[vs[i]];
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (++edge_count[edge(vs[i], vs[j])] > 1)
          throw bag_error(bag_condition::edge_in_one_bag,
                          "edge " + std::to_string(vs[i]) + "-" + std::to_string(vs[j]) + " in two bags");
    }
    bs.bags.push_back({vs, bag_origin::maximal_clique});
  }

  for (vertex_id v = 0; v < h.vertex_count(); ++v) {
    if (h.degree(v) == 0) {
      if (policy == isolated_vertices::reject)
        throw bag_error(bag_condition::vertex_in_two_bags, "isolated vertex " + std::to_string(v));
      bs.bags.push_back({{v}, bag_origin::simplified_singleton});
    } else if (clique_count[v] == 1) {
      bs.bags.push_back({{v}, bag_origin::simplified_singleton});
    } else if (clique_count[v] > 2) {
      throw bag_error(bag_condition::vertex_in_two_bags,
                      "vertex " + std::to_string(v) + " in " + std::to_string(clique_count[v]) + " maximal cliques");
    }
  }
  detail::index_bags(bs, h.vertex_count());
  return bs;
}

// Checks a candidate decomposition against the bag definitions and the four
// structural conditions. Violations are returned, not thrown.
inline std::vector<bag_violation> validate_bag_structure(const graph& h, const bag_set& bs) {
  std::vector<bag_violation> out;
  auto report = [&](bag_condition c, std::string s) { out.push_back({c, std::move(s)}); };
  const std::size_t n = h.vertex_count();

  std::vector<std::vector<std::size_t>> members(n);
  for (std::size_t i = 0; i < bs.bags.size(); ++i) {
    const bag& b = bs.bags[i];
    const std::string name = "bag " + detail::join(b.vertices);
    bool in_range = !b.vertices.empty() && std::is_sorted(b.vertices.begin(), b.vertices.end()) &&
                    std::adjacent_find(b.vertices.begin(), b.vertices.end()) == b.vertices.end();
    for (vertex_id v : b.vertices)
      in_range = in_range && v < n;
    if (!in_range) {
      report(bag_condition::well_formed, name + " is empty, unsorted or out of range");
      continue;
    }
    for (vertex_id v : b.vertices)
      members[v].push_back(i);
    if (b.origin == bag_origin::maximal_clique) {
      if (b.size() < 2)
        report(bag_condition::well_formed, name + " is a clique bag with fewer than 2 vertices");
      else if (!is_clique(h, b.vertices))
        report(bag_condition::well_formed, name + " is not a clique");
      else {
        vertex_set ext = common_neighbors(h, b.vertices[0], b.vertices[1]);
        for (vertex_id w : ext)
          if (!contains(b.vertices, w) && std::all_of(b.vertices.begin(), b.vertices.end(),
                                                      [&](vertex_id u) { return h.has_edge(u, w); })) {
            report(bag_condition::well_formed, name + " is not maximal (extends by " + std::to_string(w) + ")");
            break;
          }
      }
    } else {
      if (b.size() != 1)
        report(bag_condition::well_formed, name + " is a singleton bag with " + std::to_string(b.size()) + " vertices");
      else {
        auto nb = h.neighbors(b.vertices[0]);
        if (!is_clique(h, nb))
          report(bag_condition::well_formed, name + " is not a simplified vertex");
      }
    }
  }

  for (vertex_id v = 0; v < n; ++v) {
    const std::size_t want = h.degree(v) == 0 ? 1 : 2;
    if (members[v].size() != want)
      report(bag_condition::vertex_in_two_bags, "vertex " + std::to_string(v) + " lies in " +
                                                    std::to_string(members[v].size()) + " bags");
    if (v < bs.vertex_to_bags.size() && bs.vertex_to_bags[v] != members[v])
      report(bag_condition::well_formed, "vertex index of " + std::to_string(v) + " is stale");
  }

  for (const edge& e : h.edges()) {
    std::size_t hits = 0;
    for (std::size_t i : members[e.u])
      hits += contains(bs.bags[i].vertices, e.v);
    if (hits != 1)
      report(bag_condition::edge_in_one_bag, "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                                 " lies in " + std::to_string(hits) + " bags");
  }

  for (std::size_t i = 0; i < bs.bags.size(); ++i)
    for (std::size_t j = i + 1; j < bs.bags.size(); ++j) {
      const vertex_set& b1 = bs.bags[i].vertices;
      const vertex_set& b2 = bs.bags[j].vertices;
      vertex_set shared;
      std::set_intersection(b1.begin(), b1.end(), b2.begin(), b2.end(), std::back_inserter(shared));
      if (shared.size() > 1)
        report(bag_condition::share_at_most_one,
               "bags " + detail::join(b1) + " and " + detail::join(b2) + " share " + detail::join(shared));
      if (shared.size() != 1)
        continue;
      const vertex_id v = shared[0];
      for (vertex_id p : b1)
        for (vertex_id q : b2)
          if (p != v && q != v && p < n && q < n && p != q && h.has_edge(p, q))
            report(bag_condition::no_cross_edges, "bags " + detail::join(b1) + " and " + detail::join(b2) +
                                                      " joined by edge " + std::to_string(p) + "-" +
                                                      std::to_string(q));
    }
  return out;
}

// Bags of G - X expressed in G's vertex ids. Vertices of X have no bags;
// vertices isolated in G - X get a singleton bag.
inline bag_set decompose_outside(const graph& g, const vertex_set& x) {
  induced_graph rest = remove_vertices(g, x);
  bag_set sub = compute_bags(rest.g, isolated_vertices::singleton);
  bag_set bs;
  for (bag& b : sub.bags) {
    for (vertex_id& v : b.vertices)
      v = rest.to_parent[v];
    bs.bags.push_back(std::move(b));
  }
  detail::index_bags(bs, g.vertex_count());
  return bs;
}

enum class bag_role { attached, border, outlier };
enum class bag_size_class { small, big };

inline const char* to_string(bag_role r) {
  switch (r) {
    case bag_role::attached: return "attached";
    case bag_role::border: return "border";
    case bag_role::outlier: return "outlier";
  }
  return "?";
}

struct bag_info {
  bag b;
  vertex_set attachment; // A(B): modular vertices the bag is attached to
  bag_role role = bag_role::outlier;
  bag_size_class size_class = bag_size_class::small;
};

// Small bags have fewer than 2k+2 vertices.
inline bag_size_class size_class_of(std::size_t size, int k) {
  return size < std::size_t(2 * k + 2) ? bag_size_class::small : bag_size_class::big;
}

// The other bag containing v, if any.
inline std::optional<std::size_t> other_bag(const bag_set& bs, vertex_id v, std::size_t self) {
  for (std::size_t i : bs.vertex_to_bags[v])
    if (i != self)
      return i;
  return std::nullopt;
}

// Classifies the bags of G - X (given in G's ids, as from decompose_outside)
// relative to the modular X and budget k.
//
// A bag B with |B| >= 2 is attached to x when x is adjacent to all of B. A
// singleton {v} is attached to x when vx is an edge and x is not adjacent to
// every vertex of the other bag holding v; a vertex isolated in G - X has no
// other bag, so its singleton is attached to all of N(v) n X.
inline std::vector<bag_info> classify_bags(const graph& g, const vertex_set& x, const bag_set& bs, int k) {
  if (bs.vertex_to_bags.size() != g.vertex_count())
    throw input_error("bag set does not match graph size");
  for (const bag& b : bs.bags) {
    for (vertex_id v : b.vertices) {
      g.check_vertex(v);
      if (contains(x, v))
        throw input_error("bag " + detail::join(b.vertices) + " intersects the modular");
    }
    if (!is_clique(g, b.vertices))
      throw input_error("bag " + detail::join(b.vertices) + " is not a clique");
  }

  auto adjacent_to_all = [&](vertex_id xv, const vertex_set& vs) {
    return std::all_of(vs.begin(), vs.end(), [&](vertex_id u) { return g.has_edge(xv, u); });
  };

  std::vector<bag_info> infos(bs.bags.size());
  for (std::size_t i = 0; i < bs.bags.size(); ++i) {
    const bag& b = bs.bags[i];
    bag_info& info = infos[i];
    info.b = b;
    info.size_class = size_class_of(b.size(), k);
    const vertex_id first = b.vertices.front();
    for (vertex_id xv : g.neighbors(first)) {
      if (!contains(x, xv))
        continue;
      if (b.size() >= 2) {
        if (adjacent_to_all(xv, b.vertices))
          info.attachment.push_back(xv);
      } else {
        auto other = other_bag(bs, first, i);
        if (!other || !adjacent_to_all(xv, bs.bags[*other].vertices))
          info.attachment.push_back(xv);
      }
    }
    if (!info.attachment.empty())
      info.role = bag_role::attached;
  }

  for (std::size_t i = 0; i < infos.size(); ++i) {
    if (infos[i].role == bag_role::attached)
      continue;
    for (vertex_id v : infos[i].b.vertices) {
      auto other = other_bag(bs, v, i);
      if (other && infos[*other].role == bag_role::attached) {
        infos[i].role = bag_role::border;
        break;
      }
    }
  }
  return infos;
}

// Properties every classification against a maximal packing satisfies:
//  - each v outside X adjacent to x in X has exactly one bag attached to x;
//  - each x in X has at most two attached bags;
//  - x adjacent to two or more vertices of a bag B implies B is attached to x.
inline std::vector<std::string> attachment_violations(const graph& g, const vertex_set& x, const bag_set& bs,
                                                      const std::vector<bag_info>& infos) {
  std::vector<std::string> out;
  for (vertex_id v = 0; v < g.vertex_count(); ++v) {
    if (contains(x, v))
      continue;
    for (vertex_id xv : g.neighbors(v)) {
      if (!contains(x, xv))
        continue;
      std::size_t hits = 0;
      for (std::size_t i : bs.vertex_to_bags[v])
        hits += contains(infos[i].attachment, xv);
      if (hits != 1)
        out.push_back("vertex " + std::to_string(v) + " has " + std::to_string(hits) + " bags attached to " +
                      std::to_string(xv));
    }
  }
  for (vertex_id xv : x) {
    std::size_t attached = 0;
    for (const bag_info& info : infos)
      attached += contains(info.attachment, xv);
    if (attached > 2)
      out.push_back("modular vertex " + std::to_string(xv) + " has " + std::to_string(attached) + " attached bags");
  }
  for (const bag_info& info : infos)
    for (vertex_id xv : x) {
      std::size_t adj = 0;
      for (vertex_id u : info.b.vertices)
        adj += g.has_edge(xv, u);
      if (adj >= 2 && !contains(info.attachment, xv))
        out.push_back("modular vertex " + std::to_string(xv) + " sees " + std::to_string(adj) + " vertices of bag " +
                      detail::join(info.b.vertices) + " but is not attached");
    }
  return out;
}

} // namespace cdfree
