#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
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

enum class SweepParam { A, D };

struct SweepConfig {
  SweepParam param = SweepParam::A;
  std::vector<double> values;
  int m = 2;
  double A = 0.5;  // held fixed when sweeping D
  double D = 0.3;  // held fixed when sweeping A
  std::size_t n = 100'000;
  std::size_t replicates = 10;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  double rel_tol = 1e-6;
};

struct SweepRow {
  double value = 0.0;
  bool feasible = true;
  std::string note;
  std::size_t replicates = 0;
  Summary C2;
  Summary C1;
  double theory_C2 = std::numeric_limits<double>::quiet_NaN();
  double tail_bound = std::numeric_limits<double>::quiet_NaN();
};

// One row per grid value, in grid order. Replicate r of grid point k uses
// seed derive_seed(seed, k * replicates + r), so the output does not depend
// on scheduling.
inline std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
  if (cfg.values.empty()) throw InvalidInput("sweep grid is empty");
  if (cfg.replicates < 1) throw InvalidInput("replicates must be >= 1");
  const std::size_t k = cfg.values.size();
  std::vector<SweepRow> rows(k);
  std::vector<ModelParams> params(k);
  for (std::size_t i = 0; i < k; ++i) {
    rows[i].value = cfg.values[i];
    const double A = cfg.param == SweepParam::A ? cfg.values[i] : cfg.A;
    const double D = cfg.param == SweepParam::D ? cfg.values[i] : cfg.D;
    try {
      params[i] = resolve_params(cfg.m, A, D);
      if (params[i].D > 0.0) {
        const SeriesResult s = avg_clustering_series(params[i], cfg.rel_tol);
        rows[i].theory_C2 = s.value;
        rows[i].tail_bound = s.tail_bound;
      } else {
        rows[i].theory_C2 = 0.0;
        rows[i].tail_bound = 0.0;
      }
    } catch (const InfeasibleParams& e) {
      rows[i].feasible = false;
      rows[i].note = e.what();
    }
  }

  std::vector<double> c2(k * cfg.replicates, 0.0), c1(k * cfg.replicates, 0.0);
  parallel_for(k * cfg.replicates, cfg.threads, [&](std::size_t job) {
    const std::size_t i = job / cfg.replicates;
    if (!rows[i].feasible) return;
    const GraphState g = generate(params[i], cfg.n, derive_seed(cfg.seed, job));
    const GraphMeasurement ms = measure(g);
    c2[job] = ms.clustering.C2;
    c1[job] = ms.clustering.C1;
  });

  for (std::size_t i = 0; i < k; ++i) {
    if (!rows[i].feasible) continue;
    const auto first = c2.begin() + static_cast<std::ptrdiff_t>(i * cfg.replicates);
    const std::vector<double> a(first, first + static_cast<std::ptrdiff_t>(cfg.replicates));
    const auto first1 = c1.begin() + static_cast<std::ptrdiff_t>(i * cfg.replicates);
    const std::vector<double> b(first1, first1 + static_cast<std::ptrdiff_t>(cfg.replicates));
    rows[i].replicates = cfg.replicates;
    rows[i].C2 = summarize(a);
    rows[i].C1 = summarize(b);
    if (cfg.replicates == 1) rows[i].note = "single replicate: sd not estimated";
  }
  return rows;
}

// Cross-seed C(d) profile, pooled over replicates.
struct ClusteringProfileRow {
  std::size_t d = 0;
  double mean_N = 0.0;   // average count of degree-d vertices per graph
  double C_of_d = 0.0;   // sum_r T_r(d) / (sum_r N_r(d) binom(d, 2))
  double C_theory = 0.0;
};

struct ClusteringProfile {
  std::vector<ClusteringProfileRow> rows;  // d = max(m, 2) .. d_max
  Summary C1;
  Summary C2;
  std::vector<double> N_fraction;  // mean N(d) / n, indexed by d
};

inline ClusteringProfile clustering_profile(const ModelParams& p, std::size_t n, std::size_t seeds,
                                            std::uint64_t base_seed, std::size_t d_max, unsigned threads = 1,
                                            DegreeMode mode = DegreeMode::multigraph) {
  std::vector<std::vector<double>> N(seeds, std::vector<double>(d_max + 1, 0.0));
  std::vector<std::vector<double>> T(seeds, std::vector<double>(d_max + 1, 0.0));
  std::vector<double> c1(seeds), c2(seeds);
  parallel_for(seeds, threads, [&](std::size_t r) {
    const GraphState g = generate(p, n, derive_seed(base_seed, r));
    const GraphMeasurement ms = measure(g, mode);
    for (std::size_t d = 0; d <= d_max && d < ms.clustering.N.size(); ++d) {
      N[r][d] = static_cast<double>(ms.clustering.N[d]);
      T[r][d] = static_cast<double>(ms.clustering.T[d]);
    }
    c1[r] = ms.clustering.C1;
    c2[r] = ms.clustering.C2;
  });
  ClusteringProfile prof;
  prof.C1 = summarize(c1);
  prof.C2 = summarize(c2);
  prof.N_fraction.assign(d_max + 1, 0.0);
  for (std::size_t d = 0; d <= d_max; ++d) {
    double nsum = 0.0, tsum = 0.0;
    for (std::size_t r = 0; r < seeds; ++r) {
      nsum += N[r][d];
      tsum += T[r][d];
    }
    prof.N_fraction[d] = nsum / static_cast<double>(seeds) / static_cast<double>(n);
    if (d < std::max<std::size_t>(2, static_cast<std::size_t>(p.m))) continue;
    ClusteringProfileRow row;
    row.d = d;
    row.mean_N = nsum / static_cast<double>(seeds);
    const double pairs = 0.5 * static_cast<double>(d) * (static_cast<double>(d) - 1.0);
    row.C_of_d = nsum > 0 ? tsum / (nsum * pairs) : std::numeric_limits<double>::quiet_NaN();
    row.C_theory = local_clustering_theory(p, static_cast<long>(d));
    prof.rows.push_back(row);
  }
  return prof;
}

} // namespace gpa
