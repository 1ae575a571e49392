#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <thread>
#include <vector>

#include "gpa/error.hpp"
#include "gpa/graph.hpp"
#include "gpa/stats.hpp"

namespace gpa {

// Compressed adjacency with sorted, duplicate-free neighbour lists.
struct SimpleGraph {
  std::size_t n = 0;
  std::vector<std::uint64_t> offsets;  // size n + 1
  std::vector<Vertex> neighbors;

  std::span<const Vertex> adj(Vertex v) const {
    return {neighbors.data() + offsets[v], neighbors.data() + offsets[v + 1]};
  }
  std::uint32_t degree(Vertex v) const {
    return static_cast<std::uint32_t>(offsets[v + 1] - offsets[v]);
  }
  std::size_t num_edges() const { return neighbors.size() / 2; }
};

struct Projection {
  SimpleGraph graph;
  std::size_t multi_edges_removed = 0;
  std::size_t self_loops_removed = 0;
};

// Drops edge multiplicities (and any self-loops) from an edge list on n vertices.
inline Projection simple_projection(std::size_t n, std::span<const Edge> edges) {
  Projection out;
  SimpleGraph& g = out.graph;
  g.n = n;
  std::vector<std::uint64_t> counts(n + 1, 0);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) throw InvalidInput("edge endpoint out of range");
    if (e.u == e.v) continue;
    ++counts[e.u + 1];
    ++counts[e.v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) counts[i + 1] += counts[i];
  std::vector<Vertex> raw(counts[n]);
  std::vector<std::uint64_t> cursor(counts.begin(), counts.end() - 1);
  for (const Edge& e : edges) {
    if (e.u == e.v) {
      ++out.self_loops_removed;
      continue;
    }
    raw[cursor[e.u]++] = e.v;
    raw[cursor[e.v]++] = e.u;
  }
  g.offsets.assign(n + 1, 0);
  g.neighbors.reserve(raw.size());
  for (std::size_t v = 0; v < n; ++v) {
    auto first = raw.begin() + static_cast<std::ptrdiff_t>(counts[v]);
    auto last = raw.begin() + static_cast<std::ptrdiff_t>(counts[v + 1]);
    std::sort(first, last);
    last = std::unique(first, last);
    g.neighbors.insert(g.neighbors.end(), first, last);
    g.offsets[v + 1] = g.neighbors.size();
  }
  out.multi_edges_removed = edges.size() - out.self_loops_removed - g.num_edges();
  return out;
}

inline Projection simple_projection(const GraphState& graph) {
  return simple_projection(graph.num_vertices(), graph.edges());
}

// Degree histogram and neighbour-degree sums on the multigraph.
struct DegreeStats {
  std::size_t n = 0;
  int m = 0;                           // 0 when unknown
  std::vector<std::uint32_t> degrees;  // per vertex
  std::vector<std::uint64_t> N;        // N[d] = #vertices of degree d
  std::uint64_t W = 0;                 // sum of squared degrees
  std::vector<std::uint64_t> S;        // S[d] = sum of neighbour degrees over degree-d vertices

  std::uint64_t count(std::size_t d) const { return d < N.size() ? N[d] : 0; }
  std::size_t max_degree() const { return N.empty() ? 0 : N.size() - 1; }
};

inline DegreeStats degree_histogram(std::size_t n, std::span<const Edge> edges, int m = 0) {
  DegreeStats s;
  s.n = n;
  s.m = m;
  s.degrees.assign(n, 0);
  for (const Edge& e : edges) {
    ++s.degrees[e.u];
    ++s.degrees[e.v];
  }
  const std::uint32_t dmax = n == 0 ? 0 : *std::max_element(s.degrees.begin(), s.degrees.end());
  s.N.assign(static_cast<std::size_t>(dmax) + 1, 0);
  s.S.assign(static_cast<std::size_t>(dmax) + 1, 0);
  for (std::uint32_t d : s.degrees) {
    ++s.N[d];
    s.W += static_cast<std::uint64_t>(d) * d;
  }
  for (const Edge& e : edges) {
    s.S[s.degrees[e.u]] += s.degrees[e.v];
    s.S[s.degrees[e.v]] += s.degrees[e.u];
  }
  return s;
}

inline DegreeStats degree_histogram(const GraphState& graph) {
  return degree_histogram(graph.num_vertices(), graph.edges(), graph.m());
}

// Exact number of edges among the neighbours of each vertex. Vertices are
// ranked by (degree, id) and each triangle is found once from its lowest-ranked
// corner through the forward (higher-rank) adjacency.
inline std::vector<std::uint64_t> triangles_per_vertex(const SimpleGraph& g, unsigned threads = 1) {
  const std::size_t n = g.n;
  std::vector<std::uint64_t> T(n, 0);
  if (n == 0) return T;

  auto higher = [&](Vertex a, Vertex b) {
    const auto da = g.degree(a), db = g.degree(b);
    return da != db ? da < db : a < b;
  };
  std::vector<std::uint64_t> fwd_offsets(n + 1, 0);
  for (Vertex u = 0; u < n; ++u) {
    std::uint64_t k = 0;
    for (Vertex w : g.adj(u)) k += higher(u, w) ? 1 : 0;
    fwd_offsets[u + 1] = fwd_offsets[u] + k;
  }
  std::vector<Vertex> fwd(fwd_offsets[n]);
  for (Vertex u = 0; u < n; ++u) {
    auto out = fwd.begin() + static_cast<std::ptrdiff_t>(fwd_offsets[u]);
    for (Vertex w : g.adj(u)) {
      if (higher(u, w)) *out++ = w;
    }
  }

  threads = std::max(1u, threads);
  auto work = [&](std::size_t begin, std::size_t stride, bool shared) {
    std::vector<std::uint32_t> mark(n, std::numeric_limits<std::uint32_t>::max());
    auto bump = [&](Vertex v) {
      if (shared) {
        std::atomic_ref<std::uint64_t>(T[v]).fetch_add(1, std::memory_order_relaxed);
      } else {
        ++T[v];
      }
    };
    for (std::size_t ui = begin; ui < n; ui += stride) {
      const auto u = static_cast<Vertex>(ui);
      const auto fu_begin = fwd_offsets[u], fu_end = fwd_offsets[u + 1];
      for (auto i = fu_begin; i < fu_end; ++i) mark[fwd[i]] = u;
      for (auto i = fu_begin; i < fu_end; ++i) {
        const Vertex v = fwd[i];
        for (auto j = fwd_offsets[v]; j < fwd_offsets[v + 1]; ++j) {
          const Vertex w = fwd[j];
          if (mark[w] == u) {
            bump(u);
            bump(v);
            bump(w);
          }
        }
      }
    }
  };
  if (threads == 1) {
    work(0, 1, false);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads, true);
  }
  return T;
}

enum class DegreeMode { multigraph, simple };

// Per-degree and global clustering. Conditioning degrees are supplied by the
// caller (multigraph or projected); triangle and cherry counts always come
// from the simple projection.
struct ClusteringReport {
  std::vector<std::uint64_t> T_vertex;
  std::vector<std::uint64_t> N;  // vertices per conditioning degree
  std::vector<std::uint64_t> T;  // T[d] = sum of T_vertex over degree-d vertices
  std::vector<double> C_of_d;    // NaN where undefined
  double C1 = 0.0;
  double C2 = 0.0;               // (1/n) sum_d T[d] / binom(d, 2)
  double C2_vertexwise = 0.0;    // (1/n) sum_v T_v / binom(d_v, 2)
  std::uint64_t triangle_total = 0;
  std::uint64_t cherry_total = 0;
  std::size_t excluded_vertices = 0;  // conditioning degree < 2

  double local_at(std::size_t d) const {
    if (d < 2) throw DegreeUndefined("C(d) is undefined for d < 2");
    if (d >= C_of_d.size() || N[d] == 0) throw DegreeUndefined("no vertices of degree " + std::to_string(d));
    return C_of_d[d];
  }
};

inline ClusteringReport clustering_by_degree(const SimpleGraph& g, std::span<const std::uint64_t> T_vertex,
                                             std::span<const std::uint32_t> degrees) {
  if (T_vertex.size() != g.n || degrees.size() != g.n) throw InvalidInput("inconsistent clustering inputs");
  ClusteringReport r;
  r.T_vertex.assign(T_vertex.begin(), T_vertex.end());
  const std::uint32_t dmax = g.n == 0 ? 0 : *std::max_element(degrees.begin(), degrees.end());
  r.N.assign(static_cast<std::size_t>(dmax) + 1, 0);
  r.T.assign(static_cast<std::size_t>(dmax) + 1, 0);
  r.C_of_d.assign(static_cast<std::size_t>(dmax) + 1, std::numeric_limits<double>::quiet_NaN());

  std::uint64_t corner_sum = 0;
  double vertexwise = 0.0;
  for (std::size_t v = 0; v < g.n; ++v) {
    const std::uint32_t d = degrees[v];
    ++r.N[d];
    r.T[d] += T_vertex[v];
    corner_sum += T_vertex[v];
    const std::uint64_t sd = g.degree(static_cast<Vertex>(v));
    r.cherry_total += sd * (sd - (sd > 0 ? 1 : 0)) / 2;
    if (d < 2) {
      ++r.excluded_vertices;
    } else {
      vertexwise += static_cast<double>(T_vertex[v]) / (0.5 * d * (d - 1.0));
    }
  }
  r.triangle_total = corner_sum / 3;

  double grouped = 0.0;
  for (std::size_t d = 2; d < r.N.size(); ++d) {
    if (r.N[d] == 0) continue;
    const double pairs = 0.5 * static_cast<double>(d) * (static_cast<double>(d) - 1.0);
    r.C_of_d[d] = static_cast<double>(r.T[d]) / (static_cast<double>(r.N[d]) * pairs);
    grouped += static_cast<double>(r.T[d]) / pairs;
  }
  if (g.n > 0) {
    r.C2 = grouped / static_cast<double>(g.n);
    r.C2_vertexwise = vertexwise / static_cast<double>(g.n);
  }
  r.C1 = r.cherry_total == 0 ? 0.0 : 3.0 * static_cast<double>(r.triangle_total) / static_cast<double>(r.cherry_total);
  return r;
}

inline std::vector<std::uint32_t> simple_degrees(const SimpleGraph& g) {
  std::vector<std::uint32_t> d(g.n);
  for (std::size_t v = 0; v < g.n; ++v) d[v] = g.degree(static_cast<Vertex>(v));
  return d;
}

struct PowerLawFit {
  double exponent = 0.0;
  double r2 = 0.0;
  std::size_t d_min = 0;
  std::size_t d_max = 0;
  std::size_t bins = 0;
  double offset = 0.0;
};

inline constexpr double kLogBinRatio = 1.3;

// Default range [2m, last d before N[d] first drops below min_count].
inline std::pair<std::size_t, std::size_t> default_fit_range(const DegreeStats& s, int m,
                                                             std::uint64_t min_count = 30) {
  const std::size_t lo = static_cast<std::size_t>(2 * std::max(m, 1));
  std::size_t hi = lo;
  while (hi + 1 < s.N.size() && s.N[hi + 1] >= min_count) ++hi;
  return {lo, hi};
}

// Least-squares slope of log(N[d]/n) against log(d + offset) on log bins of
// width ratio 1.3, starting at d_min. Each bin averages N[d]/n and log(d + offset)
// over its integer degrees; empty bins are skipped. exponent = -slope.
inline PowerLawFit fit_powerlaw(const DegreeStats& s, std::size_t d_min, std::size_t d_max, double offset = 0.0) {
  if (d_min < 1 || d_max < d_min) throw InvalidInput("invalid fit range");
  if (!(d_min + offset > 0.0)) throw InvalidInput("offset makes log(d + offset) undefined");
  std::vector<double> xs, ys;
  double lo = static_cast<double>(d_min);
  while (lo <= static_cast<double>(d_max)) {
    const double hi = lo * kLogBinRatio;
    const auto first = static_cast<std::size_t>(std::ceil(lo));
    const auto last = std::min(static_cast<std::size_t>(std::ceil(hi)), d_max + 1);  // exclusive
    lo = hi;
    if (first >= last) continue;
    double mass = 0.0, logs = 0.0;
    for (std::size_t d = first; d < last; ++d) {
      mass += static_cast<double>(s.count(d));
      logs += std::log(static_cast<double>(d) + offset);
    }
    if (mass <= 0.0) continue;
    const double width = static_cast<double>(last - first);
    xs.push_back(logs / width);
    ys.push_back(std::log(mass / width / static_cast<double>(s.n)));
  }
  if (xs.size() < 5) throw InsufficientData("need at least 5 nonempty log bins, got " + std::to_string(xs.size()));

  const LinearFit line = least_squares(xs, ys);
  PowerLawFit fit;
  fit.exponent = -line.slope;
  fit.r2 = line.r2;
  fit.d_min = d_min;
  fit.d_max = d_max;
  fit.bins = xs.size();
  fit.offset = offset;
  return fit;
}

// One-call measurement of a graph.
struct GraphMeasurement {
  DegreeStats degrees;
  Projection projection;
  ClusteringReport clustering;
};

inline GraphMeasurement measure(std::size_t n, std::span<const Edge> edges, int m = 0,
                                DegreeMode mode = DegreeMode::multigraph, unsigned threads = 1) {
  GraphMeasurement out;
  out.degrees = degree_histogram(n, edges, m);
  out.projection = simple_projection(n, edges);
  const auto T = triangles_per_vertex(out.projection.graph, threads);
  if (mode == DegreeMode::multigraph) {
    out.clustering = clustering_by_degree(out.projection.graph, T, out.degrees.degrees);
  } else {
    const auto sd = simple_degrees(out.projection.graph);
    out.clustering = clustering_by_degree(out.projection.graph, T, sd);
  }
  return out;
}

inline GraphMeasurement measure(const GraphState& g, DegreeMode mode = DegreeMode::multigraph, unsigned threads = 1) {
  return measure(g.num_vertices(), g.edges(), g.m(), mode, threads);
}

} // namespace gpa
