#pragma once

#include <cdfree/kernel.hpp>

#include "fixtures.hpp"

// Hand-built instances on which one specific reduction rule is the first to
// fire. Each starts from the diamond a=0, b=1, c=2, d=3 (chord 0-2), which
// the greedy packing picks as the whole modular X = {0,1,2,3}; k = 1.
namespace cdfree::testing {

// Diamond plus a disjoint triangle {4,5,6}: the triangle is an outlier bag.
inline instance outlier_recipe() { return {disjoint_union(diamond_graph(), complete(3)), 1}; }

// Clique K = {4,5,6,7} fully adjacent to a (big attached bag) and triangle
// L = {7,8,9} hanging off it (border bag touching only K).
inline instance border_big_recipe() {
  graph g = diamond_graph();
  for (int i = 0; i < 6; ++i)
    g.add_vertex();
  add_clique(g, {4, 5, 6, 7});
  for (vertex_id v : {4, 5, 6, 7})
    g.add_edge(0, v);
  add_clique(g, {7, 8, 9});
  return {g, 1};
}

// As above but K = {4,5,6} is small, which blocks the border triangle {6,7,8}.
inline instance border_small_recipe() {
  graph g = diamond_graph();
  for (int i = 0; i < 5; ++i)
    g.add_vertex();
  add_clique(g, {4, 5, 6});
  for (vertex_id v : {4, 5, 6})
    g.add_edge(0, v);
  add_clique(g, {6, 7, 8});
  return {g, 1};
}

// K = {4,...,8} (2k+3 = 5 vertices) fully adjacent to a; border edge bag
// {4,9}; small bag {9,10} attached to b. Vertex 4 is the one detached.
inline instance trim_attached_recipe() {
  graph g = diamond_graph();
  for (int i = 0; i < 7; ++i)
    g.add_vertex();
  add_clique(g, {4, 5, 6, 7, 8});
  for (vertex_id v : {4, 5, 6, 7, 8})
    g.add_edge(0, v);
  g.add_edge(4, 9);
  add_clique(g, {9, 10});
  g.add_edge(1, 9);
  g.add_edge(1, 10);
  return {g, 1};
}

// Small bag {4,5} attached to b; border clique B = {4,6,7,8,9} of 2k+3 = 5
// vertices sharing 4 with it.
inline instance replace_border_recipe() {
  graph g = diamond_graph();
  for (int i = 0; i < 6; ++i)
    g.add_vertex();
  add_clique(g, {4, 5});
  g.add_edge(1, 4);
  g.add_edge(1, 5);
  add_clique(g, {4, 6, 7, 8, 9});
  return {g, 1};
}

} // namespace cdfree::testing
