// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <cdfree/bags.hpp>
#include <cdfree/generators.hpp>
#include <cdfree/kernel.hpp>
#include <cdfree/oracle.hpp>
#include <cdfree/solver.hpp>

#include "corpus.hpp"
#include "recipes.hpp"

using namespace cdfree;
using namespace cdfree::testing;

namespace {

struct verdict {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const char* title, const std::function<verdict()>& body) {
  verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  failures += !v.pass;
  std::printf("%s [%d] %s: %s\n", v.pass ? "PASS" : "FAIL", id, title, v.detail.c_str());
  std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

constexpr int k_max = 4;

struct corpus_truth {
  corpus_entry entry;
  std::optional<oracle::min_cdh> min; // minimum up to k_max
  bool yes() const { return min && min->size <= entry.inst.k; }
};

std::vector<corpus_truth> load_corpus() {
  std::vector<corpus_truth> out;
  for (auto& e : small_corpus())
    out.push_back({e, oracle::brute_min_cdh(e.inst.g, k_max)});
  return out;
}

bool witness_ok(const graph& g, int k, const edge_set& s) {
  return s.size() <= std::size_t(k) && is_cd_free(delete_edges(g, s)) && oracle::brute_is_cd_free(delete_edges(g, s));
}

// Kernel-side instances: the corpus plus the attached-clique family, which
// is what exercises the later rules.
std::vector<instance> kernel_instances(const std::vector<corpus_truth>& corpus) {
  std::vector<instance> out;
  for (const auto& c : corpus)
    out.push_back(c.entry.inst);
  for (std::uint64_t seed = 1; seed <= 500; ++seed)
    out.push_back(attached_clique_instance(seed));
  return out;
}

} // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<corpus_truth> corpus = load_corpus();
  const std::vector<instance> kernel_set = kernel_instances(corpus);
  std::size_t yes_answers = 0, bad_witnesses = 0;

  report(1, "solver matches oracle", [&] {
    std::size_t mismatches = 0;
    for (const auto& c : corpus) {
      const instance& inst = c.entry.inst;
      for (bool use_kernel : {true, false}) {
        const solve_options o{use_kernel};
        auto d = solve_decision(inst.g, inst.k, o);
        mismatches += d.has_value() != c.yes();
        if (d) {
          ++yes_answers;
          bad_witnesses += !witness_ok(inst.g, inst.k, d->deleted);
        }
        auto m = solve_min(inst.g, k_max, o);
        mismatches += m.has_value() != c.min.has_value() || (m && m->size != c.min->size);
        if (m) {
          ++yes_answers;
          bad_witnesses += !witness_ok(inst.g, m->size, m->sol.deleted);
        }
      }
    }
    const double secs = seconds_since(start);
    const bool ok = corpus.size() >= 300 && mismatches == 0 && secs < 300.0;
    return verdict{ok, std::to_string(corpus.size()) + " instances, " + std::to_string(mismatches) +
                           " discrepancies, " + std::to_string(secs) + " s including oracle"};
  });

  report(2, "kernel soundness", [&] {
    std::size_t mismatches = 0, trivial = 0;
    for (const instance& inst : kernel_set) {
      const bool yes = oracle::brute_min_cdh(inst.g, inst.k).has_value();
      kernel_outcome r = kernelize(inst);
      if (r.trivial_no()) {
        ++trivial;
        mismatches += yes;
        continue;
      }
      const auto kt = oracle::brute_min_cdh(r.kernel().g, r.kernel().k);
      mismatches += kt.has_value() != yes || r.kernel().k != inst.k;
      if (kt) {
        const edge_set lifted = r.lift(kt->deleted);
        ++yes_answers;
        bad_witnesses += !witness_ok(inst.g, inst.k, lifted);
      }
    }
    return verdict{mismatches == 0, std::to_string(kernel_set.size()) + " instances (" + std::to_string(trivial) +
                                        " trivial-no), " + std::to_string(mismatches) + " discrepancies"};
  });

  report(3, "kernel size bounds", [&] {
    std::size_t reduced = 0, failed = 0;
    std::string first;
    for (const instance& inst : kernel_set) {
      kernel_outcome r = kernelize(inst);
      if (r.trivial_no())
        continue;
      ++reduced;
      try {
        audit_kernel(r);
      } catch (const std::exception& e) {
        if (!failed++)
          first = e.what();
      }
    }
    return verdict{failed == 0 && reduced > 0, std::to_string(reduced) + " reduced kernels audited, " +
                                                   std::to_string(failed) + " over bound" +
                                                   (first.empty() ? "" : " (" + first + ")")};
  });

  report(4, "bag structure", [&] {
    std::size_t violations = 0, sites = 0, attach_violations = 0, biggest = 0;
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 200; ++i) {
      const std::size_t left = 2 + rng() % 9, right = 2 + rng() % 9;
      const std::size_t edges = 1 + rng() % std::min<std::size_t>(left * right, 60);
      const graph g = gen::line_of_bipartite(left, right, edges, rng());
      biggest = std::max(biggest, g.vertex_count());
      const bag_set bs = compute_bags(g, isolated_vertices::singleton);
      violations += validate_bag_structure(g, bs).size();
    }
    kernel_options opts;
    opts.on_classified = [&](const rule_context& ctx) {
      ++sites;
      attach_violations += attachment_violations(ctx.inst.g, ctx.modular(), ctx.bags, ctx.info).size();
    };
    for (const instance& inst : kernel_set)
      kernelize(inst, opts);
    return verdict{violations == 0 && attach_violations == 0 && biggest <= 60,
                   "200 line graphs (max " + std::to_string(biggest) + " vertices), " + std::to_string(violations) +
                       " structure violations; " + std::to_string(sites) + " classification sites, " +
                       std::to_string(attach_violations) + " attachment violations"};
  });

  report(5, "gadget table", [&] {
    const auto t = oracle::derive_gadget_pairs();
    // One-side gadget: diamond a=0 b=1 c=2 d=3 and t=4 seeing a and b.
    graph g = make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {0, 4}, {1, 4}});
    g.remove_edge(2, 3);
    g.remove_edge(1, 4);
    const auto c = find_claw(g);
    const bool claw_at_a = c && c->center == 0 && c->leaves == std::array<vertex_id, 3>{1, 3, 4};
    const bool ok = t.pairs.size() == 14 && t.candidates == 28 && claw_at_a;
    return verdict{ok, std::to_string(t.pairs.size()) + " of " + std::to_string(t.candidates) +
                           " pairs; {cd, bt} in the one-side gadget leaves " +
                           (claw_at_a ? "a claw centered at a" : "no claw at a")};
  });

  report(6, "branching factors", [&] {
    struct row {
      std::vector<int> v;
      double expect, tol;
    };
    const std::vector<row> rows = {{{1, 1, 1}, 3.0, 1e-6},
                                   {{1, 1, 1, 2, 2, 2}, 3.7913, 1e-3},
                                   {std::vector<int>(14, 2), 3.7417, 1e-3},
                                   {{1, 1, 1, 1, 1}, 5.0, 1e-6}};
    bool ok = true;
    std::string s;
    for (const row& r : rows) {
      const double x = oracle::branching_factor(r.v);
      ok &= std::abs(x - r.expect) <= r.tol;
      char buf[64];
      std::snprintf(buf, sizeof buf, "%s%.6f", s.empty() ? "" : ", ", x);
      s += buf;
    }
    return verdict{ok, s};
  });

  report(7, "rule-level regression", [&] {
    const std::vector<std::function<std::optional<rule_step>(const rule_context&)>> rules = {
        apply_rule_isolated, apply_rule_outlier, apply_rule_border_big, apply_rule_trim_attached,
        apply_rule_replace_border};
    const std::vector<std::pair<instance, int>> recipes = {
        {outlier_recipe(), 2}, {border_big_recipe(), 3}, {trim_attached_recipe(), 4}, {replace_border_recipe(), 5}};
    std::string s;
    bool ok = true;
    for (const auto& [inst, rule] : recipes) {
      const rule_context ctx = make_context(inst);
      bool lower = false;
      for (int r = 1; r < rule; ++r)
        lower |= rules[r - 1](ctx).has_value();
      auto step = rules[rule - 1](ctx);
      const bool fired = step.has_value();
      const bool kept =
          fired && oracle::brute_min_cdh(inst.g, inst.k).has_value() ==
                       oracle::brute_min_cdh(step->next.g, step->next.k).has_value();
      ok &= fired && !lower && kept;
      s += (s.empty() ? "" : ", ") + std::string("rule ") + std::to_string(rule) +
           (fired && !lower ? " first" : " NOT first") + (kept ? "" : " answer changed");
    }
    return verdict{ok, s};
  });

  report(8, "witness validity", [&] {
    return verdict{bad_witnesses == 0 && yes_answers > 0,
                   std::to_string(yes_answers) + " YES answers, " + std::to_string(bad_witnesses) + " invalid"};
  });

  std::printf("%d failed, total %.1f s\n", failures, seconds_since(start));
  return failures == 0 ? 0 : 1;
}
