#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>

#include "gpa/error.hpp"

namespace gpa {

inline constexpr double kInfiniteShift = std::numeric_limits<double>::infinity();

// Model parameters. B, p_tri and shift_a are always derived from (m, A, D).
//
// The generator adds one vertex and m edges per step. With probability p_tri
// the new vertex first joins both endpoints of a uniformly chosen edge; all
// other edges go to independent picks with P(v) = (d_v + a) / ((2m + a) n).
// Expected increments then give
//   A = p_tri / m + (m - 2 p_tri) / (2m + a),   B = m (1 - 2A),
// and an existing edge ij is hit on both ends with probability e_ij p_tri / (mn),
// so D = p_tri.
struct ModelParams {
  int m = 2;
  double A = 0.5;
  double D = 0.0;
  double B = 0.0;
  double p_tri = 0.0;
  double shift_a = 0.0;  // kInfiniteShift means uniform picks
  int n0 = 4;
  bool feasible = false;

  bool uniform_picks() const { return std::isinf(shift_a); }
};

inline int seed_size(int m) { return std::max(3, 2 * m); }

namespace detail {
inline constexpr double kBoundaryTol = 1e-12;
}

// Validates (m, A, D) and solves for the attractiveness shift.
inline ModelParams resolve_params(int m, double A, double D) {
  if (m < 1) throw InvalidInput("m must be >= 1");
  if (!(A >= 0.0 && A <= 1.0)) throw InvalidInput("A must lie in [0, 1]");
  if (!(D >= 0.0 && D <= 1.0)) throw InvalidInput("D must lie in [0, 1] (it is a step probability)");
  if (D > 0.0 && m < 2) throw InvalidInput("D > 0 requires m >= 2");

  const double lower = D / m;
  const double upper = 1.0 - D / m;
  if (A < lower - detail::kBoundaryTol || A >= upper) {
    std::ostringstream os;
    os << "infeasible parameters: need " << lower << " <= A < " << upper << ", got A = " << A;
    throw InfeasibleParams(os.str());
  }

  ModelParams p;
  p.m = m;
  p.A = A;
  p.D = D;
  p.B = m * (1.0 - 2.0 * A);
  p.p_tri = D;
  p.n0 = seed_size(m);
  if (std::abs(m * A - D) <= detail::kBoundaryTol * m) {
    p.shift_a = kInfiniteShift;
  } else {
    p.shift_a = m * (m - 2.0 * D) / (m * A - D) - 2.0 * m;
  }
  // Rounding can push a value right at the upper bound past -m.
  if (!(p.shift_a > -m)) throw InfeasibleParams("attractiveness shift would not exceed -m");
  p.feasible = true;
  return p;
}

// Degree coefficient implied by the generator for a given shift (inverse of the solve above).
inline double implied_degree_coeff(int m, double p_tri, double shift_a) {
  if (std::isinf(shift_a)) return p_tri / m;
  return p_tri / m + (m - 2.0 * p_tri) / (2.0 * m + shift_a);
}

} // namespace gpa
