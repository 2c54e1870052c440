#include <gtest/gtest.h>

#include <random>

#include <cdfree/bags.hpp>
#include <cdfree/generators.hpp>

#include "fixtures.hpp"

using namespace cdfree;
using namespace cdfree::testing;

namespace {

std::vector<vertex_set> vertex_sets(const bag_set& bs) {
  std::vector<vertex_set> out;
  for (const bag& b : bs.bags)
    out.push_back(b.vertices);
  return out;
}

bag_set make_bags(std::size_t n, std::vector<vertex_set> sets) {
  bag_set bs;
  for (auto& s : sets)
    bs.bags.push_back({s, s.size() == 1 ? bag_origin::simplified_singleton : bag_origin::maximal_clique});
  detail::index_bags(bs, n);
  return bs;
}

bool has_condition(const std::vector<bag_violation>& vs, bag_condition c) {
  return std::any_of(vs.begin(), vs.end(), [&](const bag_violation& v) { return v.condition == c; });
}

} // namespace

TEST(ComputeBags, Examples) {
  EXPECT_EQ(vertex_sets(compute_bags(path(3))), (std::vector<vertex_set>{{0}, {0, 1}, {1, 2}, {2}}));
  EXPECT_EQ(vertex_sets(compute_bags(complete(3))), (std::vector<vertex_set>{{0}, {0, 1, 2}, {1}, {2}}));
  EXPECT_EQ(vertex_sets(compute_bags(bowtie())),
            (std::vector<vertex_set>{{0, 1, 2}, {0, 3, 4}, {1}, {2}, {3}, {4}}));
}

TEST(ComputeBags, VertexIndex) {
  const bag_set bs = compute_bags(path(3));
  ASSERT_EQ(bs.vertex_to_bags.size(), 3u);
  EXPECT_EQ(bs.vertex_to_bags[1], (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(bs.bags[0].origin, bag_origin::simplified_singleton);
  EXPECT_EQ(bs.bags[1].origin, bag_origin::maximal_clique);
}

TEST(ComputeBags, RejectsGraphsThatAreNotCdFree) {
  EXPECT_THROW(compute_bags(diamond_graph()), bag_error);
  EXPECT_THROW(compute_bags(claw_graph()), bag_error);
}

TEST(ComputeBags, IsolatedVertexPolicy) {
  graph g = path(3);
  g.add_vertex();
  EXPECT_THROW(compute_bags(g), bag_error);
  const bag_set bs = compute_bags(g, isolated_vertices::singleton);
  EXPECT_EQ(vertex_sets(bs).back(), (vertex_set{3}));
  EXPECT_TRUE(validate_bag_structure(g, bs).empty());
}

TEST(ValidateBagStructure, Examples) {
  EXPECT_TRUE(validate_bag_structure(path(3), compute_bags(path(3))).empty());

  auto v = validate_bag_structure(diamond_graph(), make_bags(4, {{0, 1, 2, 3}}));
  EXPECT_FALSE(v.empty());
  EXPECT_TRUE(has_condition(v, bag_condition::well_formed));

  auto missing = validate_bag_structure(complete(3), make_bags(3, {{0, 1, 2}, {1}, {2}}));
  ASSERT_FALSE(missing.empty());
  EXPECT_TRUE(has_condition(missing, bag_condition::vertex_in_two_bags));
}

TEST(ValidateBagStructure, DetectsDuplicateCoverageOfAnEdge) {
  auto v = validate_bag_structure(complete(3), make_bags(3, {{0, 1, 2}, {0, 1}, {2}}));
  EXPECT_TRUE(has_condition(v, bag_condition::edge_in_one_bag) || has_condition(v, bag_condition::well_formed));
}

TEST(ClassifyBags, TriangleFullyAdjacentToX) {
  // x = 0, triangle {1,2,3}.
  graph g = complete(4);
  const vertex_set x{0};
  const bag_set bs = decompose_outside(g, x);
  auto infos = classify_bags(g, x, bs, 1);
  for (const bag_info& info : infos) {
    if (info.b.size() == 3) {
      EXPECT_EQ(info.role, bag_role::attached);
      EXPECT_EQ(info.attachment, (vertex_set{0}));
    } else {
      EXPECT_TRUE(info.attachment.empty());
      EXPECT_EQ(info.role, bag_role::border);
    }
  }
  EXPECT_TRUE(attachment_violations(g, x, bs, infos).empty());
}

TEST(ClassifyBags, SingletonAttachedWhenXMissesTheOtherBag) {
  // x = 0 sees only v = 1 of the bag {1,2}.
  graph g = make_graph(3, {{0, 1}, {1, 2}});
  const vertex_set x{0};
  const bag_set bs = decompose_outside(g, x);
  auto infos = classify_bags(g, x, bs, 1);
  ASSERT_EQ(infos.size(), 3u);
  EXPECT_EQ(infos[0].b.vertices, (vertex_set{1}));
  EXPECT_EQ(infos[0].attachment, (vertex_set{0}));
  EXPECT_EQ(infos[1].b.vertices, (vertex_set{1, 2}));
  EXPECT_TRUE(infos[1].attachment.empty());
  EXPECT_EQ(infos[1].role, bag_role::border);
  EXPECT_TRUE(attachment_violations(g, x, bs, infos).empty());
}

TEST(ClassifyBags, SingletonNotAttachedWhenXSeesTheWholeOtherBag) {
  graph g = make_graph(3, {{0, 1}, {0, 2}, {1, 2}});
  const vertex_set x{0};
  const bag_set bs = decompose_outside(g, x);
  auto infos = classify_bags(g, x, bs, 1);
  ASSERT_EQ(infos.size(), 3u);
  EXPECT_EQ(infos[0].b.vertices, (vertex_set{1}));
  EXPECT_TRUE(infos[0].attachment.empty());
  EXPECT_EQ(infos[1].b.vertices, (vertex_set{1, 2}));
  EXPECT_EQ(infos[1].attachment, (vertex_set{0}));
  EXPECT_TRUE(attachment_violations(g, x, bs, infos).empty());
}

TEST(ClassifyBags, IsolatedOutsideVertexAttachedToAllItsModularNeighbors) {
  graph g = make_graph(3, {{0, 2}, {1, 2}});
  const vertex_set x{0, 1};
  const bag_set bs = decompose_outside(g, x);
  auto infos = classify_bags(g, x, bs, 1);
  ASSERT_EQ(infos.size(), 1u);
  EXPECT_EQ(infos[0].attachment, (vertex_set{0, 1}));
}

TEST(ClassifyBags, SizeClassesAndOutliers) {
  EXPECT_EQ(size_class_of(3, 1), bag_size_class::small);
  EXPECT_EQ(size_class_of(4, 1), bag_size_class::big);
  EXPECT_EQ(size_class_of(1, 0), bag_size_class::small);
  EXPECT_EQ(size_class_of(2, 0), bag_size_class::big);
  const graph g = disjoint_union(graph(1), complete(3));
  const vertex_set x{0};
  const bag_set bs = decompose_outside(g, x);
  for (const bag_info& info : classify_bags(g, x, bs, 1))
    EXPECT_EQ(info.role, bag_role::outlier);
}

TEST(ClassifyBags, RejectsBagsThatTouchX) {
  const graph g = path(3);
  const bag_set bs = compute_bags(g);
  EXPECT_THROW(classify_bags(g, vertex_set{1}, bs, 1), input_error);
}

TEST(BagProperty, LineGraphsOfBipartiteGraphs) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    const std::size_t left = 2 + rng() % 7, right = 2 + rng() % 7;
    const std::size_t edges = 1 + rng() % std::min<std::size_t>(left * right, 60);
    const graph g = gen::line_of_bipartite(left, right, edges, rng());
    ASSERT_LE(g.vertex_count(), 60u);
    bag_set bs;
    ASSERT_NO_THROW(bs = compute_bags(g, isolated_vertices::singleton));
    auto v = validate_bag_structure(g, bs);
    EXPECT_TRUE(v.empty()) << (v.empty() ? "" : v.front().detail);
  }
}
