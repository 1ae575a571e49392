#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "gpa/analysis.hpp"
#include "gpa/generator.hpp"
#include "gpa/validation.hpp"

using namespace gpa;

namespace {

void expect_invariants(const GraphState& g, int m) {
  const std::size_t n = g.num_vertices();
  EXPECT_EQ(g.num_edges(), static_cast<std::size_t>(m) * n);
  EXPECT_EQ(g.degree_sum(), 2ull * m * n);
  EXPECT_EQ(g.endpoints().size(), 2ull * m * n);
  for (std::uint32_t d : g.degrees()) EXPECT_GE(d, static_cast<std::uint32_t>(m));
  for (const Edge& e : g.edges()) EXPECT_NE(e.u, e.v);
  std::vector<std::uint32_t> occurrences(n, 0);
  for (Vertex v : g.endpoints()) ++occurrences[v];
  EXPECT_TRUE(std::equal(occurrences.begin(), occurrences.end(), g.degrees().begin()));
}

} // namespace

TEST(SeedGraph, TwoEdgesPerStep) {
  const GraphState g = seed_graph(2);
  ASSERT_EQ(g.num_vertices(), 4u);
  ASSERT_EQ(g.num_edges(), 8u);
  for (std::uint32_t d : g.degrees()) EXPECT_EQ(d, 4u);
  std::set<std::pair<Vertex, Vertex>> distinct;
  for (const Edge& e : g.edges()) distinct.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
  const std::set<std::pair<Vertex, Vertex>> expected{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {0, 3}};
  EXPECT_EQ(distinct, expected);
  EXPECT_EQ(g.multiplicity(0, 2), 2u);
  EXPECT_EQ(g.multiplicity(0, 1), 1u);
}

TEST(SeedGraph, Triangle) {
  const GraphState g = seed_graph(1);
  ASSERT_EQ(g.num_vertices(), 3u);
  ASSERT_EQ(g.num_edges(), 3u);
  for (std::uint32_t d : g.degrees()) EXPECT_EQ(d, 2u);
}

TEST(SeedGraph, ThreeEdgesPerStep) {
  const GraphState g = seed_graph(3);
  EXPECT_EQ(g.num_vertices(), 6u);
  EXPECT_EQ(g.num_edges(), 18u);
  for (std::uint32_t d : g.degrees()) EXPECT_EQ(d, 6u);
  expect_invariants(g, 3);
}

TEST(PickAttachment, UniformOnRegularGraph) {
  const GraphState g = seed_graph(2);
  for (double shift : {0.0, 10.0, -1.5, kInfiniteShift}) {
    const auto pi = pick_probabilities(g, shift);
    for (double x : pi) EXPECT_NEAR(x, 0.25, 1e-15);
    const PickTest t = pick_distribution_test(g, shift, 100'000, 11);
    EXPECT_GT(t.p_value, 0.01) << "shift " << shift;
  }
}

TEST(PickAttachment, MatchesShiftedLawOnIrregularGraph) {
  const auto p = resolve_params(2, 0.5, 0.3);
  const GraphState g = generate(p, 40, 5);
  for (double shift : {0.0, 3.0, 10.0, -1.0, -1.9, kInfiniteShift}) {
    const PickTest t = pick_distribution_test(g, shift, 100'000, 17);
    EXPECT_GT(t.p_value, 0.01) << "shift " << shift << " chi2 " << t.chi2;
  }
}

TEST(Step, ForcedTriangleAddsOneTriangle) {
  const auto p = resolve_params(2, 0.5, 0.3);
  GraphState g = seed_graph(p);
  const auto before = measure(g).clustering.triangle_total;
  RngStream rng(3);
  step(g, p, rng, StepBranch::triangle);
  EXPECT_EQ(g.degree(4), 2u);
  const auto after = measure(g).clustering.triangle_total;
  EXPECT_EQ(after, before + 1);
  expect_invariants(g, 2);
}

TEST(Step, NewEdgesAllTouchNewVertex) {
  const auto p = resolve_params(3, 0.4, 0.5);
  GraphState g = seed_graph(p);
  RngStream rng(8);
  for (int i = 0; i < 200; ++i) {
    const std::size_t before = g.num_edges();
    step(g, p, rng);
    const Vertex fresh = static_cast<Vertex>(g.num_vertices() - 1);
    EXPECT_EQ(g.num_edges(), before + 3);
    for (std::size_t k = before; k < g.num_edges(); ++k) EXPECT_EQ(g.edges()[k].u, fresh);
    EXPECT_EQ(g.degree(fresh), 3u);
  }
  expect_invariants(g, 3);
}

// Hand-enumerated one-step law on the m=2 seed (4 vertices of degree 4,
// A=0.5, D=0.3, a=0): triangle branch hits vertex 0 once with prob 1/2;
// otherwise two uniform picks hit it exactly once with prob 2 (1/4)(3/4).
TEST(Step, ExactSingleGainProbabilityOnSeed) {
  const auto p = resolve_params(2, 0.5, 0.3);
  const double exact = 0.3 * 0.5 + 0.7 * 2.0 * 0.25 * 0.75;
  ASSERT_NEAR(exact, 0.4125, 1e-15);

  const GraphState g = seed_graph(p);
  double enumerated = 0.0;
  for (const auto& o : enumerate_step_outcomes(g, p)) {
    if (std::count(o.targets.begin(), o.targets.end(), 0u) == 1) enumerated += o.probability;
  }
  EXPECT_NEAR(enumerated, exact, 1e-14);
  // Leading-order prediction A d / n + B / n.
  EXPECT_DOUBLE_EQ((p.A * 4 + p.B) / 4, 0.5);

  const std::size_t trials = 1'000'000;
  RngStream rng(21);
  std::vector<Vertex> targets;
  std::size_t hits = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    propose_step(g, p, rng, targets);
    hits += std::count(targets.begin(), targets.end(), 0u) == 1 ? 1 : 0;
  }
  const double sigma = std::sqrt(exact * (1 - exact) / trials);
  EXPECT_LT(std::abs(static_cast<double>(hits) / trials - exact), 3 * sigma);
}

// Expected gains across all vertices account for exactly m edge ends.
TEST(Step, EdgeEndsConservedInEnumeration) {
  for (double A : {0.2, 0.5, 0.7}) {
    const auto p = resolve_params(2, A, 0.3);
    const GraphState g = generate(p, 9, 4);
    double ends = 0.0;
    for (const auto& o : enumerate_step_outcomes(g, p)) ends += o.probability * static_cast<double>(o.targets.size());
    EXPECT_NEAR(ends, 2.0, 1e-12);
    double total = 0.0;
    for (const auto& o : enumerate_step_outcomes(g, p)) total += o.probability;
    EXPECT_NEAR(total, 1.0, 1e-12);
  }
}

// Double hits come only from two independent picks, so
// P(d_v + 2) = (1 - p_tri) pi_v^2 <= (d_max + a)^2 / ((2m + a) n)^2.
TEST(Step, DoubleGainIsQuadraticallySmall) {
  const auto p = resolve_params(2, 0.5, 0.3);
  const GraphState g = generate(p, 12, 9);
  const auto pi = pick_probabilities(g, p.shift_a);
  const double dmax = *std::max_element(g.degrees().begin(), g.degrees().end());
  const double n = static_cast<double>(g.num_vertices());
  std::vector<double> p2(g.num_vertices(), 0.0);
  for (const auto& o : enumerate_step_outcomes(g, p)) {
    if (o.targets[0] == o.targets[1]) p2[o.targets[0]] += o.probability;
  }
  for (std::size_t v = 0; v < p2.size(); ++v) {
    EXPECT_NEAR(p2[v], (1 - p.p_tri) * pi[v] * pi[v], 1e-15);
    EXPECT_LE(p2[v], 0.25 * dmax * dmax / (n * n) + 1e-15);
  }
}

TEST(Generate, SeedSizeReturnsSeed) {
  const auto p = resolve_params(2, 0.5, 0.3);
  EXPECT_EQ(generate(p, 4, 1), seed_graph(p));
  EXPECT_THROW(generate(p, 3, 1), InvalidInput);
}

TEST(Generate, Deterministic) {
  const auto p = resolve_params(2, 0.5, 0.3);
  const GraphState a = generate(p, 100'000, 1);
  const GraphState b = generate(p, 100'000, 1);
  EXPECT_TRUE(std::equal(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end()));
  EXPECT_EQ(a.degree_sum(), 400'000u);
  const GraphState c = generate(p, 100'000, 2);
  EXPECT_FALSE(std::equal(a.edges().begin(), a.edges().end(), c.edges().begin(), c.edges().end()));
}

// Randomised invariants over feasible (m, A, D) with n <= 1000.
TEST(Generate, InvariantsOverRandomConfigs) {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<int> mdist(1, 5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> ndist(0, 1000);
  for (int trial = 0; trial < 60; ++trial) {
    const int m = mdist(rng);
    const double D = m == 1 ? 0.0 : unit(rng);
    const double lo = D / m, hi = 1.0 - D / m;
    const double A = lo + (hi - lo) * unit(rng) * 0.999;
    const auto p = resolve_params(m, A, D);
    const std::size_t n = std::max<std::size_t>(ndist(rng), static_cast<std::size_t>(p.n0));
    const GraphState g = generate(p, n, trial);
    expect_invariants(g, m);
  }
}
