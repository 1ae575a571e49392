#pragma once

// Test-only reference computations, kept independent of the library paths
// they check.

#include <cstdint>
#include <random>
#include <vector>

#include "gpa/graph.hpp"

namespace oracle {

// Edges among neighbours of each vertex, by enumerating all vertex triples of
// the simple projection.
inline std::vector<std::uint64_t> brute_force_triangles(std::size_t n, const std::vector<gpa::Edge>& edges) {
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& e : edges) {
    if (e.u == e.v) continue;
    adj[e.u][e.v] = adj[e.v][e.u] = true;
  }
  std::vector<std::uint64_t> T(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        if (adj[a][b] && adj[b][c] && adj[a][c]) {
          ++T[a];
          ++T[b];
          ++T[c];
        }
  return T;
}

// Random multigraph without self-loops.
inline std::vector<gpa::Edge> random_multigraph(std::size_t n, std::size_t edges, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(n - 1));
  std::vector<gpa::Edge> out;
  while (out.size() < edges) {
    const auto u = pick(rng), v = pick(rng);
    if (u != v) out.push_back({u, v});
  }
  return out;
}

inline std::vector<gpa::Edge> complete_graph(std::uint32_t n) {
  std::vector<gpa::Edge> e;
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = a + 1; b < n; ++b) e.push_back({a, b});
  return e;
}

} // namespace oracle
