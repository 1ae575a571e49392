#pragma once

#include <algorithm>
#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "gpa/analysis.hpp"
#include "gpa/error.hpp"
#include "gpa/generator.hpp"
#include "gpa/parallel.hpp"
#include "gpa/params.hpp"
#include "gpa/rng.hpp"
#include "gpa/stats.hpp"
#include "gpa/theory.hpp"

namespace gpa {

// ---------------------------------------------------------------------------
// Exact one-step law of the generator.

// Closed-form pick probabilities, matching pick_attachment without rejection.
inline std::vector<double> pick_probabilities(const GraphState& g, double shift_a) {
  const std::size_t n = g.num_vertices();
  std::vector<double> pi(n, 1.0 / static_cast<double>(n));
  if (std::isinf(shift_a) || g.num_edges() == 0) return pi;
  const double mean_degree = static_cast<double>(g.endpoints().size()) / static_cast<double>(n);
  for (std::size_t v = 0; v < n; ++v) {
    pi[v] = (g.degree(static_cast<Vertex>(v)) + shift_a) / ((mean_degree + shift_a) * static_cast<double>(n));
  }
  return pi;
}

struct StepOutcome {
  double probability = 0.0;
  std::vector<Vertex> targets;
};

// Number of leaves of the one-step outcome tree on a graph with n vertices and e edges.
inline double step_outcome_count(const ModelParams& p, double n, double e) {
  double count = 0.0;
  if (p.p_tri > 0.0) count += e * std::pow(n, p.m - 2);
  if (p.p_tri < 1.0) count += std::pow(n, p.m);
  return count;
}

// Every (branch, edge, picks) outcome of one step with its exact probability.
inline std::vector<StepOutcome> enumerate_step_outcomes(const GraphState& g, const ModelParams& p) {
  const std::size_t n = g.num_vertices();
  const auto pi = pick_probabilities(g, p.shift_a);
  std::vector<StepOutcome> out;

  auto expand = [&](double prob, std::vector<Vertex> prefix) {
    // Append the remaining picks in every combination.
    std::vector<StepOutcome> frontier{{prob, std::move(prefix)}};
    while (frontier.front().targets.size() < static_cast<std::size_t>(p.m)) {
      std::vector<StepOutcome> next;
      next.reserve(frontier.size() * n);
      for (const auto& f : frontier) {
        for (std::size_t v = 0; v < n; ++v) {
          if (pi[v] <= 0.0) continue;
          StepOutcome o{f.probability * pi[v], f.targets};
          o.targets.push_back(static_cast<Vertex>(v));
          next.push_back(std::move(o));
        }
      }
      frontier = std::move(next);
    }
    for (auto& f : frontier) out.push_back(std::move(f));
  };

  if (p.p_tri > 0.0) {
    const double per_edge = p.p_tri / static_cast<double>(g.num_edges());
    for (const Edge& e : g.edges()) expand(per_edge, {e.u, e.v});
  }
  if (p.p_tri < 1.0) expand(1.0 - p.p_tri, {});
  return out;
}

// ---------------------------------------------------------------------------
// Outcome-tree enumeration over several steps.

struct WeightedGraph {
  double probability = 0.0;
  GraphState graph;
};

struct EnumerationResult {
  std::vector<WeightedGraph> outcomes;  // merged by edge multiset, sorted by key
  std::vector<double> expected_N;       // E N(d), multigraph degree
  std::vector<double> expected_T;       // E T(d), simple projection, multigraph degree
  double total_probability = 0.0;
  std::size_t leaves = 0;
};

inline constexpr double kMaxEnumerationLeaves = 1e7;

inline EnumerationResult enumerate_steps(const GraphState& start, const ModelParams& p, int depth,
                                         bool keep_outcomes = true) {
  if (depth < 0) throw InvalidInput("depth must be >= 0");
  double leaves = 1.0;
  for (int t = 0; t < depth; ++t) {
    leaves *= step_outcome_count(p, static_cast<double>(start.num_vertices() + t),
                                 static_cast<double>(start.num_edges() + static_cast<std::size_t>(p.m) * t));
    if (leaves > kMaxEnumerationLeaves) throw TreeTooLarge("outcome tree exceeds 1e7 leaves");
  }

  EnumerationResult r;
  const std::size_t max_degree = start.num_edges() + static_cast<std::size_t>(p.m) * depth;
  r.expected_N.assign(max_degree + 1, 0.0);
  r.expected_T.assign(max_degree + 1, 0.0);
  std::map<std::vector<std::pair<Vertex, Vertex>>, std::size_t> index;

  auto record = [&](const GraphState& g, double prob) {
    ++r.leaves;
    r.total_probability += prob;
    const GraphMeasurement ms = measure(g);
    for (std::size_t d = 0; d < ms.degrees.N.size(); ++d) {
      r.expected_N[d] += prob * static_cast<double>(ms.degrees.N[d]);
    }
    for (std::size_t d = 0; d < ms.clustering.T.size(); ++d) {
      r.expected_T[d] += prob * static_cast<double>(ms.clustering.T[d]);
    }
    if (!keep_outcomes) return;
    std::vector<std::pair<Vertex, Vertex>> key;
    key.reserve(g.num_edges());
    for (const Edge& e : g.edges()) key.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    std::sort(key.begin(), key.end());
    auto [it, inserted] = index.try_emplace(std::move(key), r.outcomes.size());
    if (inserted) {
      r.outcomes.push_back({prob, g});
    } else {
      r.outcomes[it->second].probability += prob;
    }
  };

  auto recurse = [&](auto&& self, const GraphState& g, double prob, int remaining) -> void {
    if (remaining == 0) {
      record(g, prob);
      return;
    }
    for (const StepOutcome& o : enumerate_step_outcomes(g, p)) {
      GraphState child = g;
      apply_step(child, o.targets);
      self(self, child, prob * o.probability, remaining - 1);
    }
  };
  recurse(recurse, start, 1.0, depth);
  return r;
}

// ---------------------------------------------------------------------------
// Single-step transition probabilities.

struct VertexTransition {
  Vertex v = 0;
  std::uint32_t degree = 0;
  std::vector<double> p_hat;    // p_hat[j] = P(degree grows by exactly j), j = 0..m
  std::vector<double> p_exact;  // empty when enumeration was skipped
  double target = 0.0;          // A d / n + B / n
  double z1 = 0.0;              // p_hat[1] against p_exact[1]
  double z2 = 0.0;              // p_hat[2] against p_exact[2]
};

struct PairTransition {
  Vertex i = 0;
  Vertex j = 0;
  std::size_t multiplicity = 0;
  double p_hat = 0.0;    // P(both grow by exactly one)
  double p_exact = 0.0;
  double target = 0.0;   // e_ij D / (m n)
  double z = 0.0;
};

struct TransitionEstimate {
  std::size_t n = 0;
  std::size_t trials = 0;
  bool exact_available = false;
  std::vector<VertexTransition> vertices;
  std::vector<PairTransition> pairs;  // adjacent pairs only
  double edge_ends_hat = 0.0;         // sum_v sum_j j p_hat_j(v)
  double edge_ends_exact = 0.0;
  double max_abs_z = 0.0;

  bool within(double z_limit) const { return max_abs_z < z_limit; }
};

// z-score of an empirical frequency against an exact probability.
inline double binomial_z(double p_hat, double p, std::size_t trials) {
  const double var = p * (1.0 - p) / static_cast<double>(trials);
  if (var <= 0.0) return p_hat == p ? 0.0 : std::numeric_limits<double>::infinity();
  return (p_hat - p) / std::sqrt(var);
}

inline TransitionEstimate check_transitions(const GraphState& g, const ModelParams& p, std::size_t trials,
                                            std::uint64_t seed, double exact_limit = 1e6) {
  if (trials < 1) throw InvalidInput("trials must be positive");
  const std::size_t n = g.num_vertices();
  const auto m = static_cast<std::size_t>(p.m);
  TransitionEstimate est;
  est.n = n;
  est.trials = trials;

  std::map<std::pair<Vertex, Vertex>, std::size_t> pair_index;
  for (const Edge& e : g.edges()) {
    const auto key = std::make_pair(std::min(e.u, e.v), std::max(e.u, e.v));
    if (pair_index.try_emplace(key, est.pairs.size()).second) {
      PairTransition pt;
      pt.i = key.first;
      pt.j = key.second;
      est.pairs.push_back(pt);
    }
    ++est.pairs[pair_index.at(key)].multiplicity;
  }

  auto tally = [&](const std::vector<Vertex>& targets, std::vector<std::vector<double>>& gain_hist,
                   std::vector<double>& pair_hist, double weight) {
    // Targets hold at most m vertices, so quadratic scans are fine.
    for (std::size_t a = 0; a < targets.size(); ++a) {
      bool first = true;
      for (std::size_t b = 0; b < a; ++b) first = first && targets[b] != targets[a];
      if (!first) continue;
      const auto j = static_cast<std::size_t>(std::count(targets.begin(), targets.end(), targets[a]));
      gain_hist[targets[a]][j] += weight;
    }
    for (std::size_t a = 0; a < targets.size(); ++a) {
      for (std::size_t b = a + 1; b < targets.size(); ++b) {
        const Vertex x = targets[a], y = targets[b];
        if (x == y) continue;
        if (std::count(targets.begin(), targets.end(), x) != 1) continue;
        if (std::count(targets.begin(), targets.end(), y) != 1) continue;
        const auto it = pair_index.find({std::min(x, y), std::max(x, y)});
        if (it != pair_index.end()) pair_hist[it->second] += weight;
      }
    }
  };

  std::vector<std::vector<double>> hits(n, std::vector<double>(m + 1, 0.0));
  std::vector<double> pair_hits(est.pairs.size(), 0.0);
  RngStream rng(seed);
  std::vector<Vertex> targets;
  for (std::size_t t = 0; t < trials; ++t) {
    propose_step(g, p, rng, targets);
    tally(targets, hits, pair_hits, 1.0);
  }

  std::vector<std::vector<double>> exact(n, std::vector<double>(m + 1, 0.0));
  std::vector<double> pair_exact(est.pairs.size(), 0.0);
  est.exact_available =
      step_outcome_count(p, static_cast<double>(n), static_cast<double>(g.num_edges())) <= exact_limit;
  if (est.exact_available) {
    for (const StepOutcome& o : enumerate_step_outcomes(g, p)) tally(o.targets, exact, pair_exact, o.probability);
  }

  const double tn = static_cast<double>(trials);
  for (std::size_t v = 0; v < n; ++v) {
    VertexTransition vt;
    vt.v = static_cast<Vertex>(v);
    vt.degree = g.degree(vt.v);
    vt.p_hat.assign(m + 1, 0.0);
    double moved = 0.0;
    for (std::size_t j = 1; j <= m; ++j) {
      vt.p_hat[j] = hits[v][j] / tn;
      moved += vt.p_hat[j];
      est.edge_ends_hat += static_cast<double>(j) * vt.p_hat[j];
    }
    vt.p_hat[0] = 1.0 - moved;
    vt.target = (p.A * vt.degree + p.B) / static_cast<double>(n);
    if (est.exact_available) {
      vt.p_exact.assign(m + 1, 0.0);
      double moved_exact = 0.0;
      for (std::size_t j = 1; j <= m; ++j) {
        vt.p_exact[j] = exact[v][j];
        moved_exact += exact[v][j];
        est.edge_ends_exact += static_cast<double>(j) * exact[v][j];
      }
      vt.p_exact[0] = 1.0 - moved_exact;
      vt.z1 = binomial_z(vt.p_hat[1], vt.p_exact[1], trials);
      if (m >= 2) vt.z2 = binomial_z(vt.p_hat[2], vt.p_exact[2], trials);
      est.max_abs_z = std::max({est.max_abs_z, std::abs(vt.z1), std::abs(vt.z2)});
    }
    est.vertices.push_back(std::move(vt));
  }
  for (std::size_t k = 0; k < est.pairs.size(); ++k) {
    PairTransition& pt = est.pairs[k];
    pt.p_hat = pair_hits[k] / tn;
    pt.target = static_cast<double>(pt.multiplicity) * p.D / (p.m * static_cast<double>(n));
    if (est.exact_available) {
      pt.p_exact = pair_exact[k];
      pt.z = binomial_z(pt.p_hat, pt.p_exact, trials);
      est.max_abs_z = std::max(est.max_abs_z, std::abs(pt.z));
    }
  }
  return est;
}

// Chi-square goodness of fit of pick_attachment against its closed-form law.
struct PickTest {
  double chi2 = 0.0;
  std::size_t dof = 0;
  double p_value = 0.0;
};

inline PickTest pick_distribution_test(const GraphState& g, double shift_a, std::size_t draws, std::uint64_t seed) {
  const std::size_t n = g.num_vertices();
  if (n < 2) throw InvalidInput("need at least two vertices");
  std::vector<double> counts(n, 0.0);
  RngStream rng(seed);
  for (std::size_t t = 0; t < draws; ++t) counts[pick_attachment(g, shift_a, rng)] += 1.0;
  const auto pi = pick_probabilities(g, shift_a);
  PickTest out;
  for (std::size_t v = 0; v < n; ++v) {
    const double expected = pi[v] * static_cast<double>(draws);
    out.chi2 += (counts[v] - expected) * (counts[v] - expected) / expected;
  }
  out.dof = n - 1;
  boost::math::chi_squared dist(static_cast<double>(out.dof));
  out.p_value = boost::math::cdf(boost::math::complement(dist, out.chi2));
  return out;
}

// ---------------------------------------------------------------------------
// Cross-seed concentration of N_n(d) and T_n(d).

struct DegreeConcentration {
  std::size_t d = 0;
  Summary N;
  Summary T;
};

struct ConcentrationReport {
  std::size_t seeds = 0;
  std::size_t n = 0;
  double delta = 0.05;
  double d_cut = 0.0;  // n^((A - delta) / (4A + 2))
  std::size_t d_report = 0;
  std::vector<DegreeConcentration> rows;  // d = m .. d_report
  double max_cv_N = 0.0;
  double max_cv_T = 0.0;
  std::vector<std::size_t> flagged;  // d with CV above threshold
};

struct ConcentrationOptions {
  std::size_t d_report = 0;  // 0 means floor(d_cut)
  double delta = 0.05;
  double cv_limit_N = 0.05;
  double cv_limit_T = 0.10;
  unsigned threads = 1;
};

inline double concentration_cutoff(const ModelParams& p, std::size_t n, double delta) {
  return std::pow(static_cast<double>(n), (p.A - delta) / (4.0 * p.A + 2.0));
}

inline ConcentrationReport concentration_sweep(const ModelParams& p, std::size_t n, std::size_t seeds,
                                               std::uint64_t base_seed, const ConcentrationOptions& opt = {}) {
  if (seeds < 5) throw InvalidInput("concentration needs at least 5 seeds");
  ConcentrationReport rep;
  rep.seeds = seeds;
  rep.n = n;
  rep.delta = opt.delta;
  rep.d_cut = concentration_cutoff(p, n, opt.delta);
  rep.d_report = opt.d_report > 0 ? opt.d_report
                                  : std::max<std::size_t>(static_cast<std::size_t>(p.m),
                                                          static_cast<std::size_t>(std::floor(rep.d_cut)));

  std::vector<std::vector<double>> Ns(seeds), Ts(seeds);
  parallel_for(seeds, opt.threads, [&](std::size_t r) {
    const GraphState g = generate(p, n, derive_seed(base_seed, r));
    const GraphMeasurement ms = measure(g);
    Ns[r].assign(rep.d_report + 1, 0.0);
    Ts[r].assign(rep.d_report + 1, 0.0);
    for (std::size_t d = 0; d <= rep.d_report; ++d) {
      Ns[r][d] = static_cast<double>(ms.degrees.count(d));
      Ts[r][d] = d < ms.clustering.T.size() ? static_cast<double>(ms.clustering.T[d]) : 0.0;
    }
  });

  for (std::size_t d = static_cast<std::size_t>(p.m); d <= rep.d_report; ++d) {
    std::vector<double> nd(seeds), td(seeds);
    for (std::size_t r = 0; r < seeds; ++r) {
      nd[r] = Ns[r][d];
      td[r] = Ts[r][d];
    }
    DegreeConcentration row{d, summarize(nd), summarize(td)};
    rep.max_cv_N = std::max(rep.max_cv_N, row.N.cv());
    rep.max_cv_T = std::max(rep.max_cv_T, row.T.cv());
    if (row.N.cv() > opt.cv_limit_N || row.T.cv() > opt.cv_limit_T) rep.flagged.push_back(d);
    rep.rows.push_back(row);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Growth of W_n = sum of squared degrees.

struct WnScaling {
  std::vector<std::size_t> n_grid;
  std::vector<double> mean_W;
  LinearFit loglog;            // log mean W against log n; slope is the exponent
  double log_correction = 0.0; // slope of mean W / n against ln n
};

inline WnScaling wn_scaling(const ModelParams& p, std::vector<std::size_t> n_grid, std::size_t seeds,
                            std::uint64_t base_seed, unsigned threads = 1) {
  std::sort(n_grid.begin(), n_grid.end());
  n_grid.erase(std::unique(n_grid.begin(), n_grid.end()), n_grid.end());
  if (n_grid.size() < 2 || seeds < 1) throw InsufficientData("need at least two grid sizes and one seed");
  if (std::log10(static_cast<double>(n_grid.back()) / static_cast<double>(n_grid.front())) < 1.5) {
    throw InsufficientData("n grid must span at least 1.5 decades");
  }
  if (n_grid.front() < static_cast<std::size_t>(p.n0)) throw InvalidInput("grid sizes must be >= n0");

  // One trajectory per seed, sampled at every grid size.
  std::vector<std::vector<double>> W(seeds, std::vector<double>(n_grid.size(), 0.0));
  parallel_for(seeds, threads, [&](std::size_t r) {
    GraphState g = seed_graph(p);
    RngStream rng(derive_seed(base_seed, r));
    for (std::size_t k = 0; k < n_grid.size(); ++k) {
      grow(g, p, n_grid[k], rng);
      double w = 0.0;
      for (std::uint32_t d : g.degrees()) w += static_cast<double>(d) * d;
      W[r][k] = w;
    }
  });

  WnScaling out;
  out.n_grid = n_grid;
  std::vector<double> lx, ly, per_vertex, logn;
  for (std::size_t k = 0; k < n_grid.size(); ++k) {
    double mean = 0.0;
    for (std::size_t r = 0; r < seeds; ++r) mean += W[r][k];
    mean /= static_cast<double>(seeds);
    out.mean_W.push_back(mean);
    const double nn = static_cast<double>(n_grid[k]);
    lx.push_back(std::log(nn));
    ly.push_back(std::log(mean));
    per_vertex.push_back(mean / nn);
  }
  out.loglog = least_squares(lx, ly);
  out.log_correction = least_squares(lx, per_vertex).slope;
  return out;
}

} // namespace gpa
