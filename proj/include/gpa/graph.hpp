#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "gpa/error.hpp"

namespace gpa {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Growing multigraph. `endpoints` holds both ends of every edge so a uniform
// entry is a degree-proportional vertex draw.
class GraphState {
public:
  GraphState() = default;
  GraphState(std::size_t n, int m) : m_(m), degrees_(n, 0) {}

  std::size_t num_vertices() const { return degrees_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  int m() const { return m_; }

  std::span<const std::uint32_t> degrees() const { return degrees_; }
  std::span<const Vertex> endpoints() const { return endpoints_; }
  std::span<const Edge> edges() const { return edges_; }
  std::uint32_t degree(Vertex v) const { return degrees_[v]; }

  Vertex add_vertex() {
    degrees_.push_back(0);
    return static_cast<Vertex>(degrees_.size() - 1);
  }

  void add_edge(Vertex u, Vertex v) {
    if (u == v) throw InvalidInput("self-loops are not allowed");
    if (u >= degrees_.size() || v >= degrees_.size()) throw InvalidInput("edge endpoint out of range");
    edges_.push_back({u, v});
    endpoints_.push_back(u);
    endpoints_.push_back(v);
    ++degrees_[u];
    ++degrees_[v];
  }

  void reserve(std::size_t n) {
    degrees_.reserve(n);
    edges_.reserve(n * static_cast<std::size_t>(m_));
    endpoints_.reserve(2 * n * static_cast<std::size_t>(m_));
  }

  // Number of parallel edges between u and v. Linear in the edge count.
  std::size_t multiplicity(Vertex u, Vertex v) const {
    std::size_t count = 0;
    for (const Edge& e : edges_) {
      if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) ++count;
    }
    return count;
  }

  std::uint64_t degree_sum() const {
    return std::accumulate(degrees_.begin(), degrees_.end(), std::uint64_t{0});
  }

  friend bool operator==(const GraphState&, const GraphState&) = default;

private:
  int m_ = 0;
  std::vector<std::uint32_t> degrees_;
  std::vector<Vertex> endpoints_;
  std::vector<Edge> edges_;
};

} // namespace gpa
