#pragma once

#include <random>
#include <set>
#include <utility>
#include <vector>

#include "dcol/graph.hpp"

namespace dcol::testing {

using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

/// K_n on IDs first..first+n-1.
inline Graph complete(VertexId n, VertexId first = 1) {
  EdgeList es;
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j) es.emplace_back(first + i, first + j);
  std::vector<VertexId> ids;
  for (VertexId i = 0; i < n; ++i) ids.push_back(first + i);
  return Graph::from_edges(ids, es);
}

inline Graph path(VertexId n, VertexId first = 1) {
  EdgeList es;
  for (VertexId i = 0; i + 1 < n; ++i) es.emplace_back(first + i, first + i + 1);
  std::vector<VertexId> ids;
  for (VertexId i = 0; i < n; ++i) ids.push_back(first + i);
  return Graph::from_edges(ids, es);
}

inline Graph cycle(VertexId n, VertexId first = 1) {
  EdgeList es;
  for (VertexId i = 0; i < n; ++i) es.emplace_back(first + i, first + (i + 1) % n);
  return Graph::from_edge_list(es);
}

/// K_{1,k}: center 0, leaves 1..k.
inline Graph star(VertexId k) {
  EdgeList es;
  for (VertexId i = 1; i <= k; ++i) es.emplace_back(0, i);
  return Graph::from_edge_list(es);
}

/// Outer 5-cycle 0..4, spokes i - i+5, inner pentagram 5..9.
inline Graph petersen() {
  EdgeList es;
  for (VertexId i = 0; i < 5; ++i) {
    es.emplace_back(i, (i + 1) % 5);
    es.emplace_back(i, i + 5);
    es.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::from_edge_list(es);
}

/// Erdos-Renyi style graph on n vertices with edge probability p.
inline Graph random_graph(std::size_t n, double p, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  EdgeList es;
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j)
      if (coin(rng)) es.emplace_back(i, j);
  std::vector<VertexId> ids;
  for (VertexId i = 0; i < n; ++i) ids.push_back(i);
  return Graph::from_edges(ids, es);
}

/// w x h grid, vertex (i, j) has ID i * h + j.
inline Graph grid(VertexId w, VertexId h) {
  EdgeList es;
  for (VertexId i = 0; i < w; ++i)
    for (VertexId j = 0; j < h; ++j) {
      if (i + 1 < w) es.emplace_back(i * h + j, (i + 1) * h + j);
      if (j + 1 < h) es.emplace_back(i * h + j, i * h + j + 1);
    }
  return Graph::from_edge_list(es);
}

/// Union of `forests` random forests on n vertices, maximum degree at most
/// `delta`. Vertex 0 is a hub of degree exactly delta (n > delta).
inline Graph forest_union(std::size_t n, std::size_t delta, std::size_t forests, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> deg(n, 0);
  EdgeList es;
  std::set<std::pair<VertexId, VertexId>> seen;
  for (VertexId i = 1; i <= delta; ++i) {
    es.emplace_back(0, i);
    ++deg[0];
    ++deg[i];
  }
  for (std::size_t f = 0; f < forests; ++f) {
    for (VertexId i = 1; i < n; ++i) {
      if (f == 0 && i <= delta) continue;
      std::uniform_int_distribution<VertexId> pick(0, i - 1);
      for (int tries = 0; tries < 8; ++tries) {
        const auto p = pick(rng);
        if (deg[p] >= delta || deg[i] >= delta || !seen.insert({p, i}).second) continue;
        es.emplace_back(p, i);
        ++deg[p];
        ++deg[i];
        break;
      }
    }
  }
  std::vector<VertexId> ids;
  for (VertexId i = 0; i < n; ++i) ids.push_back(i);
  return Graph::from_edges(ids, es);
}

}  // namespace dcol::testing
