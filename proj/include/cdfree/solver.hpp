#pragma once

#include <algorithm>
#include <cassert>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "forbidden.hpp"
#include "graph.hpp"
#include "kernel.hpp"
#include "oracle.hpp"

namespace cdfree {

enum class diamond_case {
  isolated,   // no diamond vertex sees anything outside the diamond
  twins,      // a and c have the same neighbors besides each other
  one_side,   // some t sees a but not c, and exactly one of b, d
  both_sides, // some t sees a but not c, and both b and d
};

// A diamond oriented for branching. For one_side and both_sides the roles are
// normalized so that t is adjacent to a and not to c (`mirrored` records a
// swap of a and c), and for one_side so that t is adjacent to b.
struct diamond_classification {
  diamond_case kind = diamond_case::isolated;
  diamond d;
  std::optional<vertex_id> t;
  bool mirrored = false;
};

enum class branch_label { claw, diamond_isolated, diamond_twins, diamond_one_side, diamond_both_sides };

struct branch_case {
  edge_set del;
  branch_label label = branch_label::claw;
  bool mirrored = false;
};

inline std::string to_string(branch_label l, bool mirrored = false) {
  switch (l) {
    case branch_label::claw: return "Claw";
    case branch_label::diamond_isolated: return "D-Case1";
    case branch_label::diamond_twins: return "D-Case2";
    case branch_label::diamond_one_side: return mirrored ? "D-Case4-via-3.1" : "D-Case3.1";
    case branch_label::diamond_both_sides: return mirrored ? "D-Case4-via-3.2" : "D-Case3.2";
  }
  return "?";
}

namespace detail {

inline vertex_set neighbors_except(const graph& g, vertex_id v, vertex_id skip) {
  vertex_set out;
  for (vertex_id w : g.neighbors(v))
    if (w != skip)
      out.push_back(w);
  return out;
}

// Assumes g has no induced claw.
inline diamond_classification classify_claw_free(const graph& g, const diamond& d) {
  diamond_classification r;
  r.d = d;
  const vertex_set inside = d.vertices();
  bool outside = false;
  for (vertex_id v : inside)
    for (vertex_id w : g.neighbors(v))
      outside = outside || !contains(inside, w);
  if (!outside) {
    r.kind = diamond_case::isolated;
    return r;
  }

  const vertex_set na = neighbors_except(g, d.a, d.c);
  const vertex_set nc = neighbors_except(g, d.c, d.a);
  if (na == nc) {
    r.kind = diamond_case::twins;
    return r;
  }

  vertex_set diff;
  std::set_symmetric_difference(na.begin(), na.end(), nc.begin(), nc.end(), std::back_inserter(diff));
  const vertex_id t = diff.front();
  if (!contains(na, t)) {
    std::swap(r.d.a, r.d.c);
    r.mirrored = true;
  }
  r.t = t;
  const bool tb = g.has_edge(t, r.d.b);
  const bool td = g.has_edge(t, r.d.d);
  if (tb && td) {
    r.kind = diamond_case::both_sides;
  } else if (tb || td) {
    r.kind = diamond_case::one_side;
    if (td)
      std::swap(r.d.b, r.d.d);
  } else {
    throw contract_error("diamond classification: " + std::to_string(t) + " sees neither tip, so a claw exists");
  }
  return r;
}

inline void check_induced_diamond(const graph& g, const diamond& d) {
  for (const edge& e : d.edges())
    if (!g.has_edge(e))
      throw contract_error("not a diamond: edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " missing");
  if (g.has_edge(d.b, d.d))
    throw contract_error("not an induced diamond: tips are adjacent");
}

} // namespace detail

// Decides which diamond branching rule applies. The graph must be claw-free.
inline diamond_classification classify_diamond_case(const graph& g, const diamond& d) {
  detail::check_induced_diamond(g, d);
  if (auto c = find_claw(g))
    throw contract_error("diamond classification needs a claw-free graph; found " +
                         to_string(forbidden_subgraph(*c)));
  return detail::classify_claw_free(g, d);
}

inline std::vector<branch_case> claw_branch_cases(const claw& c) {
  std::vector<branch_case> out;
  for (const edge& e : c.edges())
    out.push_back({{e}, branch_label::claw, false});
  return out;
}

inline std::vector<branch_case> branch_cases(const diamond_classification& cls) {
  const diamond& d = cls.d;
  std::vector<branch_case> out;
  auto add = [&](branch_label l, std::initializer_list<edge> es) { out.push_back({edge_set(es), l, cls.mirrored}); };
  switch (cls.kind) {
    case diamond_case::isolated:
      add(branch_label::diamond_isolated, {d.chord()});
      break;
    case diamond_case::twins:
      add(branch_label::diamond_twins, {edge(d.a, d.d)});
      add(branch_label::diamond_twins, {edge(d.a, d.c)});
      add(branch_label::diamond_twins, {edge(d.a, d.b)});
      break;
    case diamond_case::one_side: {
      const vertex_id t = *cls.t;
      add(branch_label::diamond_one_side, {edge(d.a, d.b)});
      add(branch_label::diamond_one_side, {edge(d.b, d.c)});
      add(branch_label::diamond_one_side, {edge(d.a, d.c)});
      add(branch_label::diamond_one_side, {edge(d.a, d.d), edge(d.a, t)});
      add(branch_label::diamond_one_side, {edge(d.a, d.d), edge(d.b, t)});
      add(branch_label::diamond_one_side, {edge(d.c, d.d), edge(d.a, t)});
      // {cd, bt} would leave a claw at a with leaves d, b, t.
      break;
    }
    case diamond_case::both_sides: {
      const vertex_id concrete[5] = {d.a, d.b, d.c, d.d, *cls.t};
      auto at = [&](oracle::gadget_vertex v) { return concrete[int(v)]; };
      for (const oracle::gadget_pair& p : oracle::canonical_gadget_pairs().pairs)
        add(branch_label::diamond_both_sides, {edge(at(p[0].p), at(p[0].q)), edge(at(p[1].p), at(p[1].q))});
      break;
    }
  }
  return out;
}

struct search_stats {
  std::size_t nodes_expanded = 0;
  std::size_t max_depth = 0;
};

struct solution {
  edge_set deleted;
  search_stats stats;
};

struct solve_options {
  bool use_kernel = true;
};

namespace detail {

class branching_search {
public:
  branching_search(graph g) : g_(std::move(g)) {}

  bool run(int k, std::size_t depth = 0) {
    ++stats_.nodes_expanded;
    stats_.max_depth = std::max(stats_.max_depth, depth);

    if (auto c = find_claw(g_)) {
      if (k < 1)
        return false;
      for (const branch_case& bc : claw_branch_cases(*c))
        if (try_case(bc.del, k, depth))
          return true;
      return false;
    }
    auto d = find_diamond(g_);
    if (!d)
      return true;
    if (k < 1)
      return false;

    assert(!find_claw(g_));
    const diamond_classification cls = classify_claw_free(g_, *d);
    if (cls.kind == diamond_case::isolated)
      return delete_isolated_diamond(cls.d, k, depth);
    for (const branch_case& bc : branch_cases(cls))
      if (int(bc.del.size()) <= k && try_case(bc.del, k, depth))
        return true;
    return false;
  }

  const edge_set& deleted() const { return deleted_; }
  const search_stats& stats() const { return stats_; }

private:
  bool try_case(const edge_set& del, int k, std::size_t depth) {
    for (const edge& e : del) {
      g_.remove_edge(e.u, e.v);
      deleted_.insert(e);
    }
    if (run(k - int(del.size()), depth + 1))
      return true;
    for (const edge& e : del) {
      g_.add_edge(e.u, e.v);
      deleted_.erase(e);
    }
    return false;
  }

  // Deleting the chord leaves a C4 component; its edges are dropped from the
  // working graph too since nothing else can touch them.
  bool delete_isolated_diamond(const diamond& d, int k, std::size_t depth) {
    const auto es = d.edges();
    for (const edge& e : es)
      g_.remove_edge(e.u, e.v);
    deleted_.insert(d.chord());
    if (run(k - 1, depth + 1))
      return true;
    for (const edge& e : es)
      g_.add_edge(e.u, e.v);
    deleted_.erase(d.chord());
    return false;
  }

  graph g_;
  edge_set deleted_;
  search_stats stats_;
};

} // namespace detail

namespace detail {

struct decision {
  std::optional<edge_set> deleted;
  search_stats stats;
};

inline decision decide(const graph& g, int k, const solve_options& opts) {
  if (k < 0)
    return {};
  if (opts.use_kernel) {
    kernel_outcome ko = kernelize({g, k});
    if (ko.trivial_no())
      return {};
    branching_search search(ko.kernel().g);
    if (!search.run(ko.kernel().k))
      return {std::nullopt, search.stats()};
    return {ko.lift(search.deleted()), search.stats()};
  }
  branching_search search(g);
  if (!search.run(k))
    return {std::nullopt, search.stats()};
  return {search.deleted(), search.stats()};
}

inline void check_witness(const graph& g, int k, const edge_set& deleted) {
  if (deleted.size() > std::size_t(k) || !is_cd_free(delete_edges(g, deleted)))
    throw invariant_error("solver produced an invalid witness");
}

} // namespace detail

// A CDH set of at most k edges, if one exists.
inline std::optional<solution> solve_decision(const graph& g, int k, const solve_options& opts = {}) {
  detail::decision r = detail::decide(g, k, opts);
  if (!r.deleted)
    return std::nullopt;
  detail::check_witness(g, k, *r.deleted);
  return solution{std::move(*r.deleted), r.stats};
}

struct min_solution {
  int size = 0;
  solution sol;
};

// Smallest k <= k_max with a YES answer, by increasing k. Stats cover every
// attempted budget.
inline std::optional<min_solution> solve_min(const graph& g, int k_max, const solve_options& opts = {}) {
  search_stats total;
  for (int k = 0; k <= k_max; ++k) {
    detail::decision r = detail::decide(g, k, opts);
    total.nodes_expanded += r.stats.nodes_expanded;
    total.max_depth = std::max(total.max_depth, r.stats.max_depth);
    if (r.deleted) {
      detail::check_witness(g, k, *r.deleted);
      return min_solution{k, {std::move(*r.deleted), total}};
    }
  }
  return std::nullopt;
}

} // namespace cdfree
