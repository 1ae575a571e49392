#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "gpa/error.hpp"
#include "gpa/params.hpp"

namespace gpa {

// Closed-form predictions for the model class. Gamma ratios are evaluated by
// product recurrences:
//   c(m, m) = 1 / (Am + B + 1),   c(m, d) / c(m, d-1) = (A(d-1) + B) / (Ad + B + 1)
// which stay finite for any d; log-Gamma versions exist only as cross-checks.

namespace detail {

inline void require_degree(const ModelParams& p, long d) {
  if (d < p.m) throw InvalidInput("degree must be >= m (got " + std::to_string(d) + ")");
}

inline double degree_ratio(const ModelParams& p, long d) {
  return (p.A * (d - 1) + p.B) / (p.A * d + p.B + 1.0);
}

// sum_{i=m}^{d-1} i / (A i + B)
inline double harmonic_part(const ModelParams& p, long d) {
  double s = 0.0;
  for (long i = p.m; i < d; ++i) s += static_cast<double>(i) / (p.A * i + p.B);
  return s;
}

} // namespace detail

// Limiting fraction of vertices with degree d.
inline double degree_coeff(const ModelParams& p, long d) {
  detail::require_degree(p, d);
  double c = 1.0 / (p.A * p.m + p.B + 1.0);
  for (long k = p.m + 1; k <= d; ++k) c *= detail::degree_ratio(p, k);
  return c;
}

// Same quantity straight from the Gamma-function expression (needs A > 0).
inline double degree_coeff_lgamma(const ModelParams& p, long d) {
  detail::require_degree(p, d);
  if (!(p.A > 0.0)) throw InvalidInput("log-Gamma form needs A > 0");
  const long double A = p.A;
  const long double B = p.B;
  const long double m = p.m;
  const long double x = static_cast<long double>(d);
  const long double log_c = std::lgamma(x + B / A) + std::lgamma(m + (B + 1) / A) - std::log(A) -
                            std::lgamma(x + (B + A + 1) / A) - std::lgamma(m + B / A);
  return static_cast<double>(std::exp(log_c));
}

// Exponent of the degree tail, 1 + 1/A.
inline double degree_exponent(const ModelParams& p) { return 1.0 + 1.0 / p.A; }

// Gamma(d + x) / Gamma(d + y) ~ (d + (x + y - 1)/2)^(x - y); this is the offset
// in the degree axis that linearises the finite-d degree law on log-log axes.
inline double degree_offset(const ModelParams& p) { return (2.0 * p.B + 1.0) / (2.0 * p.A); }

// Gamma(m + (B+1)/A) / (A Gamma(m + B/A)), the prefactor of c(m,d) ~ const d^(-1-1/A).
inline double degree_tail_constant(const ModelParams& p) {
  const double A = p.A;
  return std::exp(std::lgamma(p.m + (p.B + 1.0) / A) - std::lgamma(p.m + p.B / A)) / A;
}

// Limiting density of edges among neighbours of degree-d vertices:
// K(d) = c(m,d) (D + D/m sum_{i=m}^{d-1} i / (Ai + B)).
inline double triangle_coeff(const ModelParams& p, long d) {
  detail::require_degree(p, d);
  return degree_coeff(p, d) * (p.D + p.D / p.m * detail::harmonic_part(p, d));
}

// K(d) by the one-step recurrence
// K(d) = (A(d-1)+B)/(Ad+B+1) K(d-1) + D(d-1)/(m(Ad+B+1)) c(m,d-1),  K(m) = D c(m,m).
inline double triangle_coeff_recurrence(const ModelParams& p, long d) {
  detail::require_degree(p, d);
  double c = 1.0 / (p.A * p.m + p.B + 1.0);
  double K = p.D * c;
  for (long k = p.m + 1; k <= d; ++k) {
    const double denom = p.A * k + p.B + 1.0;
    K = (p.A * (k - 1) + p.B) / denom * K + p.D * (k - 1) / (p.m * denom) * c;
    c *= detail::degree_ratio(p, k);
  }
  return K;
}

// K(d) ~ const d^(-1/A); returns const.
inline double triangle_asymptote_constant(const ModelParams& p) {
  return p.D / (p.A * p.m) * degree_tail_constant(p);
}

// Predicted C(d) = 2D / (d (d-1) m) (m + sum_{i=m}^{d-1} i / (Ai + B)).
inline double local_clustering_theory(const ModelParams& p, long d) {
  detail::require_degree(p, d);
  if (d < 2) throw DegreeUndefined("clustering is undefined for degree < 2");
  const double dd = static_cast<double>(d);
  return 2.0 * p.D / (dd * (dd - 1.0) * p.m) * (p.m + detail::harmonic_part(p, d));
}

// Term f(d) of the average-clustering series: K(d) / binom(d, 2).
inline double series_term(const ModelParams& p, long d) {
  detail::require_degree(p, d);
  if (d < 2) return 0.0;
  const double dd = static_cast<double>(d);
  return 2.0 / (dd * (dd - 1.0)) * triangle_coeff(p, d);
}

struct SeriesResult {
  double value = 0.0;       // sum_{d=m}^{d_max} f(d)
  long d_max = 0;
  double tail_bound = 0.0;  // estimate of sum_{d > d_max} f(d)
};

// Truncated sum of f(d). The partial sum is carried without the factor D and
// multiplied at the end, so the result is linear in D up to one rounding.
inline SeriesResult avg_clustering_series(const ModelParams& p, double rel_tol = 1e-6,
                                          long d_limit = 100'000'000) {
  if (!(rel_tol > 0.0)) throw InvalidInput("rel_tol must be positive");
  SeriesResult out;
  if (p.D == 0.0) {
    out.d_max = p.m;
    return out;
  }
  // Tail estimate per unit D.
  const bool power_tail = p.A > 0.0;
  const double tail_exp = power_tail ? 1.0 + 1.0 / p.A : 0.0;
  const double tail_coeff =
      power_tail ? 2.0 * (1.0 / (p.A * p.m)) * degree_tail_constant(p) / tail_exp : 0.0;
  const double geometric = p.B / (p.B + 1.0);  // c(m,d+1)/c(m,d) when A = 0

  double c = 1.0 / (p.A * p.m + p.B + 1.0);
  double harmonic = 0.0;
  double sum = 0.0;
  for (long d = p.m;; ++d) {
    if (d > p.m) {
      harmonic += static_cast<double>(d - 1) / (p.A * (d - 1) + p.B);
      c *= detail::degree_ratio(p, d);
    }
    double term = 0.0;
    if (d >= 2) {
      const double dd = static_cast<double>(d);
      term = 2.0 / (dd * (dd - 1.0)) * c * (1.0 + harmonic / p.m);
    }
    sum += term;
    double tail = 0.0;
    if (power_tail) {
      tail = tail_coeff * std::pow(static_cast<double>(d), -tail_exp);
    } else {
      tail = term * geometric / (1.0 - geometric);
    }
    if ((sum > 0.0 && tail < rel_tol * sum) || d >= d_limit) {
      out.value = p.D * sum;
      out.tail_bound = p.D * tail;
      out.d_max = d;
      return out;
    }
  }
}

enum class ClusteringRegime { constant, inverse_log, power_decay };

inline std::string_view to_string(ClusteringRegime r) {
  switch (r) {
  case ClusteringRegime::constant: return "constant";
  case ClusteringRegime::inverse_log: return "inverse_log";
  case ClusteringRegime::power_decay: return "power_decay";
  }
  return "unknown";
}

// Large-n behaviour of the global clustering coefficient C1.
//   constant    : C1 -> constant
//   inverse_log : C1 ~ constant / log n
//   power_decay : C1 = n^(exponent +- eps)
struct GlobalClusteringLimit {
  ClusteringRegime regime = ClusteringRegime::constant;
  double constant = 0.0;
  double exponent = 0.0;

  double at(double n) const {
    switch (regime) {
    case ClusteringRegime::constant: return constant;
    case ClusteringRegime::inverse_log: return constant / std::log(n);
    case ClusteringRegime::power_decay: return std::pow(n, exponent);
    }
    return 0.0;
  }
};

inline GlobalClusteringLimit global_clustering_limit(const ModelParams& p) {
  const double denom = p.m * (4.0 * (p.A + p.B) + p.m - 1.0);
  const double twoA = 2.0 * p.A;
  GlobalClusteringLimit out;
  if (std::abs(twoA - 1.0) <= 1e-12) {
    out.regime = ClusteringRegime::inverse_log;
    out.constant = 6.0 * p.D / denom;
  } else if (twoA < 1.0) {
    out.regime = ClusteringRegime::constant;
    out.constant = 6.0 * (1.0 - twoA) * p.D / denom;
  } else {
    out.regime = ClusteringRegime::power_decay;
    out.exponent = 1.0 - twoA;
  }
  return out;
}

enum class Transitivity { weak, strong, boundary };

inline std::string_view to_string(Transitivity t) {
  switch (t) {
  case Transitivity::weak: return "weak";
  case Transitivity::strong: return "strong";
  case Transitivity::boundary: return "boundary";
  }
  return "unknown";
}

// weak iff 2D < Am, strong iff 2D > Am.
inline Transitivity transitivity_class(const ModelParams& p) {
  const double lhs = 2.0 * p.D;
  const double rhs = p.A * p.m;
  if (std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, rhs)) return Transitivity::boundary;
  return lhs < rhs ? Transitivity::weak : Transitivity::strong;
}

// C(d) asymptotics are only established for A < 3/4.
inline bool local_clustering_proven(const ModelParams& p) { return p.A < 0.75; }

// Every per-degree prediction for d in [m, d_max], indexed by d (zeros below m).
struct TheoryTable {
  ModelParams params;
  long d_max = 0;
  std::vector<double> c_vals;
  std::vector<double> K_vals;
  std::vector<double> C_theory;
  std::vector<double> f_vals;
  double c_partial_sum = 0.0;
  SeriesResult C2;
  GlobalClusteringLimit C1_limit;
  Transitivity transitivity = Transitivity::weak;
  bool clustering_proven = true;
};

inline TheoryTable build_theory_table(const ModelParams& p, long d_max, double rel_tol = 1e-6) {
  if (d_max < p.m) throw InvalidInput("d_max must be >= m");
  TheoryTable t;
  t.params = p;
  t.d_max = d_max;
  const auto size = static_cast<std::size_t>(d_max + 1);
  t.c_vals.assign(size, 0.0);
  t.K_vals.assign(size, 0.0);
  t.C_theory.assign(size, 0.0);
  t.f_vals.assign(size, 0.0);

  double c = 1.0 / (p.A * p.m + p.B + 1.0);
  double harmonic = 0.0;
  for (long d = p.m; d <= d_max; ++d) {
    if (d > p.m) {
      harmonic += static_cast<double>(d - 1) / (p.A * (d - 1) + p.B);
      c *= detail::degree_ratio(p, d);
    }
    const auto i = static_cast<std::size_t>(d);
    t.c_vals[i] = c;
    t.K_vals[i] = c * (p.D + p.D / p.m * harmonic);
    if (d >= 2) {
      const double dd = static_cast<double>(d);
      t.C_theory[i] = 2.0 * p.D / (dd * (dd - 1.0) * p.m) * (p.m + harmonic);
      t.f_vals[i] = 2.0 / (dd * (dd - 1.0)) * t.K_vals[i];
    }
    t.c_partial_sum += c;
  }
  if (p.D > 0.0) t.C2 = avg_clustering_series(p, rel_tol);
  t.C1_limit = global_clustering_limit(p);
  t.transitivity = transitivity_class(p);
  t.clustering_proven = local_clustering_proven(p);
  return t;
}

} // namespace gpa
