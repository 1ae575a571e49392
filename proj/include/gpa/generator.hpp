#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "gpa/error.hpp"
#include "gpa/graph.hpp"
#include "gpa/params.hpp"
#include "gpa/rng.hpp"

namespace gpa {

// Circulant seed: vertex i joined to i+1, ..., i+m (mod n0), n0 = max(3, 2m).
// For n0 = 2m the i -> i+m links appear twice, so the seed is a 2m-regular multigraph.
inline GraphState seed_graph(int m) {
  if (m < 1) throw InvalidInput("m must be >= 1");
  const int n0 = seed_size(m);
  GraphState g(static_cast<std::size_t>(n0), m);
  for (int i = 0; i < n0; ++i) {
    for (int k = 1; k <= m; ++k) {
      g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>((i + k) % n0));
    }
  }
  return g;
}

inline GraphState seed_graph(const ModelParams& params) { return seed_graph(params.m); }

// Draws v with probability (d_v + a) / ((dbar + a) n), dbar the mean degree
// (2m on model graphs). a = +inf gives uniform picks.
//   a >= 0 : endpoint entry with prob dbar / (dbar + a), else uniform vertex
//   a < 0  : endpoint entry, accepted with prob (d_v + a) / d_v
inline Vertex pick_attachment(const GraphState& graph, double shift_a, RngStream& rng) {
  const std::size_t n = graph.num_vertices();
  const auto endpoints = graph.endpoints();
  if (n == 0) throw InvalidInput("cannot pick from an empty graph");
  if (std::isinf(shift_a) || endpoints.empty()) return static_cast<Vertex>(rng.below(n));

  if (shift_a == 0.0) return endpoints[rng.below(endpoints.size())];

  if (shift_a > 0.0) {
    const double mean_degree = static_cast<double>(endpoints.size()) / static_cast<double>(n);
    if (rng.uniform() < mean_degree / (mean_degree + shift_a)) {
      return endpoints[rng.below(endpoints.size())];
    }
    return static_cast<Vertex>(rng.below(n));
  }

  for (;;) {
    const Vertex v = endpoints[rng.below(endpoints.size())];
    const double d = graph.degree(v);
    if (rng.uniform() * d < d + shift_a) return v;
  }
}

enum class StepBranch { sampled, triangle, independent };

// Draws the m targets of the next vertex without touching the graph.
// Draw order: branch decision (only when 0 < p_tri and the branch is sampled),
// then the edge for a triangle step, then picks left to right.
// Returns true when the triangle step fired.
inline bool propose_step(const GraphState& graph, const ModelParams& params, RngStream& rng,
                         std::vector<Vertex>& targets, StepBranch branch = StepBranch::sampled) {
  targets.clear();
  bool triangle = false;
  switch (branch) {
  case StepBranch::triangle:
    triangle = true;
    break;
  case StepBranch::independent:
    triangle = false;
    break;
  case StepBranch::sampled:
    triangle = params.p_tri > 0.0 && rng.bernoulli(params.p_tri);
    break;
  }
  if (triangle) {
    if (params.m < 2) throw InvalidInput("triangle step needs m >= 2");
    const Edge e = graph.edges()[rng.below(graph.num_edges())];
    targets.push_back(e.u);
    targets.push_back(e.v);
  }
  while (targets.size() < static_cast<std::size_t>(params.m)) {
    targets.push_back(pick_attachment(graph, params.shift_a, rng));
  }
  return triangle;
}

inline Vertex apply_step(GraphState& graph, const std::vector<Vertex>& targets) {
  const Vertex fresh = graph.add_vertex();
  for (Vertex t : targets) graph.add_edge(fresh, t);
  return fresh;
}

inline void step(GraphState& graph, const ModelParams& params, RngStream& rng,
                 StepBranch branch = StepBranch::sampled) {
  std::vector<Vertex> targets;
  targets.reserve(static_cast<std::size_t>(params.m));
  propose_step(graph, params, rng, targets, branch);
  apply_step(graph, targets);
}

// Grows `graph` until it has n vertices.
inline void grow(GraphState& graph, const ModelParams& params, std::size_t n, RngStream& rng) {
  std::vector<Vertex> targets;
  targets.reserve(static_cast<std::size_t>(params.m));
  graph.reserve(n);
  while (graph.num_vertices() < n) {
    propose_step(graph, params, rng, targets);
    apply_step(graph, targets);
  }
}

inline GraphState generate(const ModelParams& params, std::size_t n, std::uint64_t seed) {
  if (n < static_cast<std::size_t>(params.n0)) {
    throw InvalidInput("n must be at least the seed size " + std::to_string(params.n0));
  }
  GraphState graph = seed_graph(params);
  RngStream rng(seed);
  grow(graph, params, n, rng);
  return graph;
}

} // namespace gpa
