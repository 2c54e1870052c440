#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bags.hpp"
#include "forbidden.hpp"
#include "generators.hpp"
#include "io.hpp"
#include "kernel.hpp"
#include "oracle.hpp"
#include "solver.hpp"

namespace cdfree::cli {

enum exit_code : int { yes = 0, no = 1, usage = 2, internal = 3, capacity = 4 };

using json = nlohmann::ordered_json;

inline json to_json(const kernel_audit& a) {
  json rules = json::object();
  for (const auto& [rule, count] : a.rule_applications)
    rules[std::to_string(rule)] = count;
  return {{"k", a.budget},
          {"modular_size", a.modular_size},
          {"attached_bag_count", a.attached_bag_count},
          {"max_bag_size", a.max_bag_size},
          {"max_border_bag_size", a.max_border_bag_size},
          {"outlier_edge_count", a.outlier_edge_count},
          {"vertex_count", a.vertex_count},
          {"edge_count", a.edge_count},
          {"rule_applications", rules}};
}

inline json to_json(const edge_set& es) {
  json out = json::array();
  for (const edge& e : es)
    out.push_back({e.u, e.v});
  return out;
}

inline json to_json(const forbidden_subgraph& f) {
  if (f.kind() == forbidden_kind::claw) {
    const claw& c = f.as_claw();
    return {{"kind", "claw"}, {"center", c.center}, {"leaves", c.leaves}};
  }
  const diamond& d = f.as_diamond();
  return {{"kind", "diamond"}, {"degree3_pair", {d.a, d.c}}, {"degree2_pair", {d.b, d.d}}};
}

struct result_document {
  std::string answer; // yes | no | trivial-no | capacity-exceeded
  int k = 0;
  edge_set deleted;
  json stats = json::object();
  std::optional<kernel_audit> audit;

  json to_json() const {
    json j{{"answer", answer}, {"k", k}, {"deleted_edges", cli::to_json(deleted)}, {"stats", stats}};
    if (audit)
      j["audit"] = cli::to_json(*audit);
    return j;
  }

  std::string to_text() const {
    std::string s = "answer: " + answer + "\nk: " + std::to_string(k) + "\ndeleted:";
    for (const edge& e : deleted)
      s += " " + std::to_string(e.u) + "-" + std::to_string(e.v);
    s += "\n";
    for (const auto& [key, value] : stats.items())
      s += key + ": " + value.dump() + "\n";
    return s;
  }
};

namespace detail {

inline double millis_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

inline void emit(std::ostream& out, const result_document& doc, const std::string& format) {
  if (format == "text")
    out << doc.to_text();
  else
    out << doc.to_json().dump(2) << '\n';
}

// A YES document must carry a verified witness.
inline void verify_yes(const graph& g, const result_document& doc) {
  if (doc.answer == "yes" && (doc.deleted.size() > std::size_t(doc.k) || !is_cd_free(delete_edges(g, doc.deleted))))
    throw invariant_error("refusing to emit an unverified YES answer");
}

inline std::string answer_of(bool found) { return found ? "yes" : "no"; }

} // namespace detail

struct solve_args {
  std::string input;
  int k = -1;
  bool min = false;
  bool no_kernel = false;
  std::string format = "json";
};

inline int run_solve(const solve_args& a, std::ostream& out) {
  const graph g = read_graph_file(a.input);
  const solve_options opts{!a.no_kernel};
  const auto start = std::chrono::steady_clock::now();
  result_document doc;
  const int k = a.k >= 0 ? a.k : int(g.edge_count());

  if (a.min) {
    auto r = solve_min(g, k, opts);
    doc.answer = detail::answer_of(bool(r));
    doc.k = r ? r->size : k;
    if (r) {
      doc.deleted = r->sol.deleted;
      doc.stats = {{"nodes_expanded", r->sol.stats.nodes_expanded}, {"max_depth", r->sol.stats.max_depth}};
    }
  } else {
    if (a.k < 0)
      throw input_error("solve needs -k unless --min is given");
    doc.k = k;
    if (opts.use_kernel) {
      kernel_outcome ko = kernelize({g, k});
      if (ko.trivial_no()) {
        doc.answer = "trivial-no";
        doc.stats = {{"millis", detail::millis_since(start)}};
        detail::emit(out, doc, a.format);
        return exit_code::no;
      }
      doc.audit = ko.audit();
    }
    auto r = solve_decision(g, k, opts);
    doc.answer = detail::answer_of(bool(r));
    if (r) {
      doc.deleted = r->deleted;
      doc.stats = {{"nodes_expanded", r->stats.nodes_expanded}, {"max_depth", r->stats.max_depth}};
    }
  }
  doc.stats["millis"] = detail::millis_since(start);
  detail::verify_yes(g, doc);
  detail::emit(out, doc, a.format);
  return doc.answer == "yes" ? exit_code::yes : exit_code::no;
}

inline int run_kernelize(const std::string& input, int k, const std::string& output, std::ostream& out) {
  const graph g = read_graph_file(input);
  kernel_outcome ko = kernelize({g, k});
  const std::string text = write_graph(ko.kernel().g);
  if (!output.empty()) {
    std::ofstream f(output, std::ios::binary);
    if (!f)
      throw input_error("cannot write " + output);
    f << text;
  }
  json doc{{"answer", ko.trivial_no() ? "trivial-no" : "reduced"}, {"k", ko.kernel().k}};
  if (!ko.trivial_no())
    doc["audit"] = to_json(audit_kernel(ko));
  else
    doc["audit"] = nullptr;
  doc["graph"] = text;
  out << doc.dump(2) << '\n';
  return ko.trivial_no() ? exit_code::no : exit_code::yes;
}

inline int run_check(const std::string& input, std::ostream& out) {
  const graph g = read_graph_file(input);
  auto w = find_forbidden(g);
  json doc{{"cd_free", !w}};
  if (w)
    doc["witness"] = to_json(*w);
  out << doc.dump(2) << '\n';
  return w ? exit_code::no : exit_code::yes;
}

// One bag per line: "<origin> <role> <size> : v1 v2 ...". Without --modular
// the input must be {claw, diamond}-free and every role is relative to an
// empty modular.
inline int run_bags(const std::string& input, bool relative, int k, std::ostream& out) {
  const graph g = read_graph_file(input);
  vertex_set x;
  if (relative) {
    x = greedy_packing(g).modular;
  } else if (auto w = find_forbidden(g)) {
    throw input_error("input not cd-free: " + to_string(*w));
  }
  const bag_set bs = decompose_outside(g, x);
  const auto infos = classify_bags(g, x, bs, k);
  out << "# modular:";
  for (vertex_id v : x)
    out << ' ' << v;
  out << "\n# bags: " << infos.size() << '\n';
  for (const bag_info& info : infos) {
    out << (info.b.origin == bag_origin::maximal_clique ? "clique" : "singleton") << ' ' << to_string(info.role)
        << ' ' << (info.size_class == bag_size_class::small ? "small" : "big") << " :";
    for (vertex_id v : info.b.vertices)
      out << ' ' << v;
    if (!info.attachment.empty()) {
      out << " | attached-to:";
      for (vertex_id xv : info.attachment)
        out << ' ' << xv;
    }
    out << '\n';
  }
  return exit_code::yes;
}

inline int run_oracle(const std::string& input, int k, double work_bound, bool gadget, std::ostream& out) {
  if (gadget) {
    out << oracle::dump(oracle::derive_gadget_pairs());
    return exit_code::yes;
  }
  const graph g = read_graph_file(input);
  const auto start = std::chrono::steady_clock::now();
  result_document doc;
  doc.k = k;
  try {
    auto r = oracle::brute_min_cdh(g, k, work_bound);
    doc.answer = detail::answer_of(bool(r));
    if (r) {
      doc.deleted = r->deleted;
      doc.stats["minimum"] = r->size;
    }
  } catch (const capacity_error& e) {
    doc.answer = "capacity-exceeded";
    doc.stats["error"] = e.what();
  }
  doc.stats["millis"] = detail::millis_since(start);
  detail::verify_yes(g, doc);
  out << doc.to_json().dump(2) << '\n';
  if (doc.answer == "capacity-exceeded")
    return exit_code::capacity;
  return doc.answer == "yes" ? exit_code::yes : exit_code::no;
}

struct gen_args {
  std::string model = "gnm";
  std::size_t n = 8, m = 12;
  std::size_t left = 4, right = 4, edges = 8, plants = 1;
  std::uint64_t seed = 1;
  std::string output;
};

inline int run_gen(const gen_args& a, std::ostream& out) {
  graph g;
  if (a.model == "gnm")
    g = gen::gnm(a.n, a.m, a.seed);
  else if (a.model == "line-of-bipartite")
    g = gen::line_of_bipartite(a.left, a.right, a.edges, a.seed);
  else if (a.model == "planted")
    g = gen::planted(a.left, a.right, a.edges, a.plants, a.seed);
  else
    throw input_error("unknown model " + a.model);
  const std::string text = write_graph(g);
  if (a.output.empty()) {
    out << text;
  } else {
    std::ofstream f(a.output, std::ios::binary);
    if (!f)
      throw input_error("cannot write " + a.output);
    f << text;
  }
  return exit_code::yes;
}

// CSV over every *.g file of a directory, in name order. A solver/oracle
// disagreement is an internal error once all rows are written.
inline int run_bench(const std::string& dir, int k, bool no_kernel, double work_bound, std::ostream& out) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".g")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  bool mismatch = false;
  out << "name,n,m,k,solver-answer,oracle-answer,nodes,millis\n";
  for (const auto& path : files) {
    const graph g = read_graph_file(path.string());
    const auto start = std::chrono::steady_clock::now();
    auto s = solve_decision(g, k, {!no_kernel});
    const double ms = detail::millis_since(start);
    std::string oracle_answer;
    try {
      oracle_answer = detail::answer_of(bool(oracle::brute_min_cdh(g, k, work_bound)));
    } catch (const capacity_error&) {
      oracle_answer = "capacity-exceeded";
    }
    const std::string solver_answer = detail::answer_of(bool(s));
    if (oracle_answer != "capacity-exceeded" && oracle_answer != solver_answer)
      mismatch = true;
    out << path.filename().string() << ',' << g.vertex_count() << ',' << g.edge_count() << ',' << k << ','
        << solver_answer << ',' << oracle_answer << ',' << (s ? s->stats.nodes_expanded : 0) << ',' << ms << '\n';
  }
  if (mismatch)
    throw invariant_error("bench: solver and oracle disagree");
  return exit_code::yes;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Exact solver for {claw, diamond}-free edge deletion"};
  app.require_subcommand(1);

  solve_args sa;
  auto* solve = app.add_subcommand("solve", "decide or minimize the number of deleted edges");
  solve->add_option("--input", sa.input, "graph file")->required();
  solve->add_option("-k", sa.k, "budget (upper bound with --min)");
  solve->add_flag("--min", sa.min, "find the minimum budget");
  solve->add_flag("--no-kernel", sa.no_kernel, "skip kernelization");
  solve->add_option("--format", sa.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  std::string input, output;
  int k = 0;
  auto* kern = app.add_subcommand("kernelize", "reduce an instance and audit the kernel");
  kern->add_option("--input", input, "graph file")->required();
  kern->add_option("-k", k, "budget")->required();
  kern->add_option("--output", output, "write the kernel graph here");

  auto* check = app.add_subcommand("check", "test {claw, diamond}-freeness");
  check->add_option("--input", input, "graph file")->required();

  bool relative = false;
  auto* bags = app.add_subcommand("bags", "print the bag decomposition");
  bags->add_option("--input", input, "graph file")->required();
  bags->add_flag("--modular", relative, "decompose G - X for a greedy modular X");
  bags->add_option("-k", k, "budget used for small/big classes");

  double work_bound = oracle::default_work_bound;
  bool gadget = false;
  auto* orc = app.add_subcommand("oracle", "exhaustive minimum CDH search");
  orc->add_option("--input", input, "graph file");
  orc->add_option("-k", k, "largest size to try");
  orc->add_option("--work-bound", work_bound, "maximum number of subsets to test");
  orc->add_flag("--gadget", gadget, "print the derived two-edge gadget table");

  gen_args ga;
  auto* gn = app.add_subcommand("gen", "generate a graph");
  gn->add_option("--model", ga.model, "gnm, line-of-bipartite or planted")
      ->check(CLI::IsMember({"gnm", "line-of-bipartite", "planted"}));
  gn->add_option("--n", ga.n, "vertices (gnm)");
  gn->add_option("--m", ga.m, "edges (gnm)");
  gn->add_option("--left", ga.left, "left side of the bipartite base");
  gn->add_option("--right", ga.right, "right side of the bipartite base");
  gn->add_option("--edges", ga.edges, "edges of the bipartite base");
  gn->add_option("--plants", ga.plants, "planted claws/diamonds");
  gn->add_option("--seed", ga.seed, "random seed");
  gn->add_option("--output", ga.output, "output file");

  std::string dir;
  bool no_kernel = false;
  auto* bench = app.add_subcommand("bench", "run a directory through solver and oracle");
  bench->add_option("--dir", dir, "directory of .g files")->required();
  bench->add_option("-k", k, "budget")->required();
  bench->add_flag("--no-kernel", no_kernel, "skip kernelization");
  bench->add_option("--work-bound", work_bound, "oracle work bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::yes : exit_code::usage;
  }

  try {
    if (solve->parsed())
      return run_solve(sa, out);
    if (kern->parsed())
      return run_kernelize(input, k, output, out);
    if (check->parsed())
      return run_check(input, out);
    if (bags->parsed())
      return run_bags(input, relative, k, out);
    if (orc->parsed()) {
      if (!gadget && input.empty())
        throw input_error("oracle needs --input or --gadget");
      return run_oracle(input, k, work_bound, gadget, out);
    }
    if (gn->parsed())
      return run_gen(ga, out);
    if (bench->parsed())
      return run_bench(dir, k, no_kernel, work_bound, out);
  } catch (const input_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const capacity_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::capacity;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_code::internal;
  }
  return exit_code::usage;
}

} // namespace cdfree::cli
