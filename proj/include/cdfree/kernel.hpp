#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bags.hpp"
#include "forbidden.hpp"
#include "graph.hpp"

namespace cdfree {

struct instance {
  graph g;
  int k = 0;
};

enum class reduction_rule {
  isolated = 1,       // drop isolated vertices
  outlier = 2,        // clear an outlier bag
  border_big = 3,     // clear a border bag away from small attached bags
  trim_attached = 4,  // detach one vertex of a large attached bag
  replace_border = 5, // replace a large border bag by small cliques
};

inline const char* to_string(reduction_rule r) {
  switch (r) {
    case reduction_rule::isolated: return "isolated";
    case reduction_rule::outlier: return "outlier";
    case reduction_rule::border_big: return "border-big";
    case reduction_rule::trim_attached: return "trim-attached";
    case reduction_rule::replace_border: return "replace-border";
  }
  return "?";
}

// Snapshot a rule needs: the instance, a fresh modular and the classified
// bag decomposition of G - X. `bags` and `info` stay empty when |X| > 4k.
struct rule_context {
  instance inst;
  packing pk;
  bag_set bags;
  std::vector<bag_info> info;

  const vertex_set& modular() const { return pk.modular; }
  bool modular_too_large() const { return pk.modular.size() > std::size_t(4 * inst.k); }
};

inline rule_context make_context(instance inst) {
  rule_context ctx{std::move(inst), {}, {}, {}};
  ctx.pk = greedy_packing(ctx.inst.g);
  if (!ctx.modular_too_large()) {
    ctx.bags = decompose_outside(ctx.inst.g, ctx.pk.modular);
    ctx.info = classify_bags(ctx.inst.g, ctx.pk.modular, ctx.bags, ctx.inst.k);
  }
  return ctx;
}

inline constexpr vertex_id fresh_vertex = vertex_id(-1);

struct rule_step {
  instance next;
  std::vector<vertex_id> origin; // vertex of `next` -> vertex before the rule, or fresh_vertex
};

namespace detail {

inline std::vector<vertex_id> identity_origin(std::size_t n) {
  std::vector<vertex_id> o(n);
  for (vertex_id v = 0; v < n; ++v)
    o[v] = v;
  return o;
}

inline rule_step clear_bag(const rule_context& ctx, const bag& b) {
  rule_step s{ctx.inst, identity_origin(ctx.inst.g.vertex_count())};
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      s.next.g.remove_edge(b.vertices[i], b.vertices[j]);
  return s;
}

// True if some vertex of bag i has its other bag satisfying `pred`.
template <class Pred>
std::optional<vertex_id> neighbor_bag_vertex(const rule_context& ctx, std::size_t i, Pred pred) {
  for (vertex_id v : ctx.bags.bags[i].vertices) {
    auto other = other_bag(ctx.bags, v, i);
    if (other && pred(ctx.info[*other]))
      return v;
  }
  return std::nullopt;
}

} // namespace detail

inline std::optional<rule_step> apply_rule_isolated(const rule_context& ctx) {
  const graph& g = ctx.inst.g;
  vertex_set keep;
  for (vertex_id v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 0)
      keep.push_back(v);
  if (keep.size() == g.vertex_count())
    return std::nullopt;
  induced_graph sub = induced_subgraph(g, keep);
  return rule_step{{std::move(sub.g), ctx.inst.k}, std::move(sub.to_parent)};
}

// Singleton outlier bags have no edges to delete and are skipped.
inline std::optional<rule_step> apply_rule_outlier(const rule_context& ctx) {
  for (const bag_info& info : ctx.info)
    if (info.role == bag_role::outlier && info.b.size() >= 2)
      return detail::clear_bag(ctx, info.b);
  return std::nullopt;
}

inline std::optional<rule_step> apply_rule_border_big(const rule_context& ctx) {
  for (std::size_t i = 0; i < ctx.info.size(); ++i) {
    const bag_info& info = ctx.info[i];
    if (info.role != bag_role::border || info.b.size() < 2)
      continue;
    auto touches_small_attached = detail::neighbor_bag_vertex(ctx, i, [](const bag_info& o) {
      return o.role == bag_role::attached && o.size_class == bag_size_class::small;
    });
    if (!touches_small_attached)
      return detail::clear_bag(ctx, info.b);
  }
  return std::nullopt;
}

inline std::optional<rule_step> apply_rule_trim_attached(const rule_context& ctx) {
  const std::size_t threshold = std::size_t(2 * ctx.inst.k + 3);
  for (std::size_t i = 0; i < ctx.info.size(); ++i) {
    const bag_info& info = ctx.info[i];
    if (info.role != bag_role::attached || info.b.size() < threshold)
      continue;
    auto v = detail::neighbor_bag_vertex(ctx, i, [](const bag_info& o) { return o.role == bag_role::border; });
    if (!v)
      continue;

    vertex_set nx;
    for (vertex_id w : ctx.inst.g.neighbors(*v))
      if (contains(ctx.modular(), w))
        nx.push_back(w);
    if (nx != info.attachment)
      throw invariant_error("trim-attached: neighbors of " + std::to_string(*v) +
                            " in the modular differ from the bag attachment");

    rule_step s{ctx.inst, detail::identity_origin(ctx.inst.g.vertex_count())};
    for (vertex_id b : info.b.vertices)
      if (b != *v)
        s.next.g.remove_edge(*v, b);
    for (vertex_id x : info.attachment)
      s.next.g.remove_edge(*v, x);
    return s;
  }
  return std::nullopt;
}

// Fires on border bags of at least 2k+3 vertices; the replacement cliques
// have 2k+2 vertices and so never re-trigger it.
inline std::optional<rule_step> apply_rule_replace_border(const rule_context& ctx) {
  const int k = ctx.inst.k;
  for (std::size_t i = 0; i < ctx.info.size(); ++i) {
    const bag_info& info = ctx.info[i];
    if (info.role != bag_role::border || info.b.size() < std::size_t(2 * k + 3))
      continue;
    rule_step s = detail::clear_bag(ctx, info.b);
    for (vertex_id v : info.b.vertices) {
      auto other = other_bag(ctx.bags, v, i);
      if (!other || ctx.info[*other].role != bag_role::attached)
        continue;
      vertex_set clique{v};
      for (int c = 0; c < 2 * k + 1; ++c) {
        vertex_id w = s.next.g.add_vertex();
        s.origin.push_back(fresh_vertex);
        for (vertex_id u : clique)
          s.next.g.add_edge(u, w);
        clique.push_back(w);
      }
    }
    return s;
  }
  return std::nullopt;
}

struct kernel_audit {
  int budget = 0;
  std::size_t modular_size = 0;
  std::size_t attached_bag_count = 0;
  std::size_t max_bag_size = 0;
  std::size_t max_border_bag_size = 0;
  std::size_t outlier_edge_count = 0;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::map<int, std::size_t> rule_applications;

  // Equality over the recomputable fields; rule counts are history.
  bool same_shape(const kernel_audit& o) const {
    return budget == o.budget && modular_size == o.modular_size && attached_bag_count == o.attached_bag_count &&
           max_bag_size == o.max_bag_size && max_border_bag_size == o.max_border_bag_size &&
           outlier_edge_count == o.outlier_edge_count && vertex_count == o.vertex_count &&
           edge_count == o.edge_count;
  }
};

class audit_error : public invariant_error {
public:
  using invariant_error::invariant_error;
};

inline kernel_audit measure(const rule_context& ctx) {
  kernel_audit a;
  a.budget = ctx.inst.k;
  a.modular_size = ctx.modular().size();
  a.vertex_count = ctx.inst.g.vertex_count();
  a.edge_count = ctx.inst.g.edge_count();
  for (const bag_info& info : ctx.info) {
    a.max_bag_size = std::max(a.max_bag_size, info.b.size());
    if (info.role == bag_role::attached)
      ++a.attached_bag_count;
    else if (info.role == bag_role::border)
      a.max_border_bag_size = std::max(a.max_border_bag_size, info.b.size());
    else
      a.outlier_edge_count += info.b.size() * (info.b.size() - 1) / 2;
  }
  return a;
}

// Size bounds of an irreducible instance with |X| <= 4k.
inline void check_audit_bounds(const kernel_audit& a) {
  const std::size_t k = std::size_t(a.budget);
  auto fail = [](const std::string& what) { throw audit_error("kernel audit: " + what); };
  if (a.modular_size > 4 * k)
    fail("modular has " + std::to_string(a.modular_size) + " > 4k vertices");
  if (a.attached_bag_count > 8 * k)
    fail(std::to_string(a.attached_bag_count) + " attached bags exceed 8k");
  if (a.max_bag_size > 8 * k)
    fail("a bag of " + std::to_string(a.max_bag_size) + " vertices exceeds 8k");
  if (a.max_border_bag_size > 2 * k + 2)
    fail("a border bag of " + std::to_string(a.max_border_bag_size) + " vertices exceeds 2k+2");
  if (a.outlier_edge_count > 0)
    fail("outlier bags still hold " + std::to_string(a.outlier_edge_count) + " edges");
}

struct kernel_options {
  // Called with every classified context the driver builds.
  std::function<void(const rule_context&)> on_classified;
  std::size_t max_steps = 1'000'000;
};

inline instance canonical_no_instance() {
  graph g(4);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(0, 3);
  return {std::move(g), 0};
}

// Minimal CDH set inside s: drops edges while the rest still hits every
// claw and diamond, until no single edge can go.
inline edge_set minimize_cdh(const graph& g, edge_set s) {
  for (bool changed = true; changed;) {
    changed = false;
    for (auto it = s.begin(); it != s.end();) {
      edge_set rest = s;
      rest.erase(*it);
      if (is_cd_free(delete_edges(g, rest))) {
        it = s.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
  }
  return s;
}

class kernel_outcome {
public:
  struct history_step {
    graph before;
    std::vector<vertex_id> origin;
    reduction_rule rule;
  };

  static kernel_outcome trivial(std::map<int, std::size_t> counts) {
    kernel_outcome o;
    o.trivial_no_ = true;
    o.kernel_ = canonical_no_instance();
    o.audit_.rule_applications = std::move(counts);
    return o;
  }

  static kernel_outcome reduced(instance kernel, kernel_audit audit, std::vector<history_step> history) {
    kernel_outcome o;
    o.kernel_ = std::move(kernel);
    o.audit_ = std::move(audit);
    o.history_ = std::move(history);
    return o;
  }

  bool trivial_no() const { return trivial_no_; }
  const instance& kernel() const { return kernel_; }
  const kernel_audit& audit() const { return audit_; }
  const std::vector<history_step>& history() const { return history_; }

  // Carries a CDH set of the kernel (size <= k) back to the original graph,
  // making it minimal at every step. Sets that survive the rules this way
  // are CDH sets of the input with the same size bound.
  edge_set lift(edge_set s) const {
    if (trivial_no_)
      throw contract_error("cannot lift a solution of the trivial NO-instance");
    graph after = kernel_.g;
    for (auto it = history_.rbegin(); it != history_.rend(); ++it) {
      s = minimize_cdh(after, std::move(s));
      edge_set mapped;
      for (const edge& e : s) {
        vertex_id u = it->origin[e.u];
        vertex_id v = it->origin[e.v];
        if (u == fresh_vertex || v == fresh_vertex)
          throw invariant_error("lifted solution uses an edge of a replacement clique");
        mapped.emplace(u, v);
      }
      s = std::move(mapped);
      if (!is_cd_free(delete_edges(it->before, s)))
        throw invariant_error(std::string("lifted solution fails before rule ") + to_string(it->rule));
      after = it->before;
    }
    return s;
  }

private:
  bool trivial_no_ = false;
  instance kernel_;
  kernel_audit audit_;
  std::vector<history_step> history_;
};

namespace detail {

inline std::size_t large_border_bags(const rule_context& ctx) {
  std::size_t n = 0;
  for (const bag_info& info : ctx.info)
    n += info.role == bag_role::border && info.b.size() >= std::size_t(2 * ctx.inst.k + 3);
  return n;
}

} // namespace detail

// Applies the lowest-numbered applicable rule until none applies, with a
// fresh modular and bag classification before each attempt. Returns the
// trivial NO-instance as soon as the modular exceeds 4k vertices.
inline kernel_outcome kernelize(const instance& input, const kernel_options& opts = {}) {
  if (input.k < 0)
    return kernel_outcome::trivial({});
  using rule_fn = std::optional<rule_step> (*)(const rule_context&);
  static constexpr std::pair<reduction_rule, rule_fn> rules[] = {
      {reduction_rule::isolated, apply_rule_isolated},
      {reduction_rule::outlier, apply_rule_outlier},
      {reduction_rule::border_big, apply_rule_border_big},
      {reduction_rule::trim_attached, apply_rule_trim_attached},
      {reduction_rule::replace_border, apply_rule_replace_border},
  };

  std::map<int, std::size_t> counts;
  std::vector<kernel_outcome::history_step> history;
  rule_context ctx = make_context(input);
  for (std::size_t steps = 0;; ++steps) {
    if (steps > opts.max_steps)
      throw invariant_error("kernelization did not terminate");
    if (ctx.modular_too_large())
      return kernel_outcome::trivial(std::move(counts));
    if (opts.on_classified)
      opts.on_classified(ctx);

    std::optional<rule_step> step;
    reduction_rule fired{};
    for (const auto& [rule, fn] : rules)
      if ((step = fn(ctx))) {
        fired = rule;
        break;
      }
    if (!step) {
      kernel_audit audit = measure(ctx);
      audit.rule_applications = std::move(counts);
      return kernel_outcome::reduced(std::move(ctx.inst), std::move(audit), std::move(history));
    }

    ++counts[int(fired)];
    const graph& before = ctx.inst.g;
    const graph& after = step->next.g;
    rule_context next = make_context(step->next);
    if (fired != reduction_rule::replace_border) {
      if (after.vertex_count() + after.edge_count() >= before.vertex_count() + before.edge_count())
        throw invariant_error(std::string("rule ") + to_string(fired) + " did not shrink the instance");
    } else if (!next.modular_too_large() && detail::large_border_bags(next) >= detail::large_border_bags(ctx)) {
      throw invariant_error("replace-border did not reduce the number of large border bags");
    }
    history.push_back({before, std::move(step->origin), fired});
    ctx = std::move(next);
  }
}

// Recomputes the audit of a reduced kernel and checks it against the stored
// one and against the size bounds.
inline kernel_audit audit_kernel(const kernel_outcome& outcome) {
  if (outcome.trivial_no())
    throw contract_error("audit needs a reduced kernel");
  rule_context ctx = make_context(outcome.kernel());
  kernel_audit fresh = measure(ctx);
  fresh.rule_applications = outcome.audit().rule_applications;
  if (!fresh.same_shape(outcome.audit()))
    throw audit_error("kernel audit: recomputed counts differ from the stored audit");
  check_audit_bounds(fresh);
  return fresh;
}

} // namespace cdfree
