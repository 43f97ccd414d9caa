#pragma once

#include <cstddef>
#include <deque>
#include <limits>
#include <string>
#include <vector>

#include "tropical/matrix.hpp"

namespace tropical {

/// Adjacency matrix over a min-plus algebra: zero diagonal, non-negative
/// finite weights, +inf for a missing edge.
class WeightedGraph {
 public:
  explicit WeightedGraph(TropMatrix adjacency) : adjacency_(std::move(adjacency)) {
    if (adjacency_.algebra().semiring != Semiring::MinPlus) {
      throw Error(ErrorKind::AlgebraMismatch, "graphs live in a min-plus algebra");
    }
    if (!adjacency_.is_square()) throw Error(ErrorKind::InvalidGraph, "adjacency matrix must be square");
    const ExtScalar zero_weight = one(adjacency_.algebra());
    for (std::size_t r = 0; r < adjacency_.rows(); ++r) {
      for (std::size_t c = 0; c < adjacency_.cols(); ++c) {
        const ExtScalar& w = adjacency_(r, c);
        if (r == c && w != zero_weight) {
          throw Error(ErrorKind::InvalidGraph, "diagonal entry " + std::to_string(r) + " is not 0");
        }
        if (w.is_finite() && compare(w, zero_weight) < 0) {
          throw Error(ErrorKind::InvalidGraph, "negative weight on edge " + std::to_string(r) + "->" + std::to_string(c));
        }
      }
    }
  }

  const TropMatrix& adjacency() const noexcept { return adjacency_; }
  std::size_t vertex_count() const noexcept { return adjacency_.rows(); }

 private:
  TropMatrix adjacency_;
};

/// All-pairs least distances: the min-plus closure of the adjacency matrix.
inline TropMatrix search_least_distances(const WeightedGraph& g) { return closure_block(g.adjacency()); }

/// A shortest path from `from` to `to` as 0-based vertex indices. Among the
/// shortest paths with the fewest edges, picks the lexicographically smallest.
inline std::vector<std::size_t> find_shortest_path(const WeightedGraph& g, std::size_t from, std::size_t to,
                                                   const TropMatrix& distances) {
  const std::size_t n = g.vertex_count();
  if (from >= n || to >= n) {
    throw Error(ErrorKind::IndexOutOfRange, "vertex index out of range for a graph with " + std::to_string(n) +
                                                " vertices");
  }
  if (from == to) return {from};
  if (distances(from, to).is_infinite()) {
    throw Error(ErrorKind::NoPath, "no path from " + std::to_string(from) + " to " + std::to_string(to));
  }
  const TropMatrix& a = g.adjacency();
  const Algebra& alg = a.algebra();
  // u -> v is tight when it starts some shortest path from u to `to`
  auto tight = [&](std::size_t u, std::size_t v) {
    if (u == v || a(u, v).is_infinite() || distances(v, to).is_infinite()) return false;
    return trop_mul(a(u, v), distances(v, to), alg) == distances(u, to);
  };

  // fewest edges to `to` along tight edges; zero-weight edges make plain
  // distance decrease insufficient for progress
  constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> hops(n, kUnreached);
  hops[to] = 0;
  std::deque<std::size_t> queue{to};
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t u = 0; u < n; ++u) {
      if (hops[u] == kUnreached && tight(u, v)) {
        hops[u] = hops[v] + 1;
        queue.push_back(u);
      }
    }
  }

  std::vector<std::size_t> path{from};
  std::size_t u = from;
  while (u != to) {
    std::size_t next = kUnreached;
    for (std::size_t v = 0; v < n; ++v) {
      if (hops[v] != kUnreached && hops[v] + 1 == hops[u] && tight(u, v)) {
        next = v;
        break;
      }
    }
    if (next == kUnreached) throw Error(ErrorKind::NoPath, "path reconstruction failed");
    path.push_back(next);
    u = next;
  }
  return path;
}

inline std::vector<std::size_t> find_shortest_path(const WeightedGraph& g, std::size_t from, std::size_t to) {
  return find_shortest_path(g, from, to, search_least_distances(g));
}

}  // namespace tropical
