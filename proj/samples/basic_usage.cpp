// Grow one graph and compare its clustering profile with the prediction.

#include <cstdio>

#include "gpa/gpa.hpp"

int main() {
  const gpa::ModelParams params = gpa::resolve_params(/*m=*/2, /*A=*/0.5, /*D=*/0.3);
  const gpa::GraphState graph = gpa::generate(params, 100'000, /*seed=*/1);
  const gpa::GraphMeasurement ms = gpa::measure(graph);

  std::printf("C1 = %.4f  C2 = %.4f  (series %.4f)\n", ms.clustering.C1, ms.clustering.C2,
              gpa::avg_clustering_series(params).value);
  std::printf("%4s %8s %10s %10s\n", "d", "N(d)", "C(d)", "theory");
  for (std::size_t d = 2; d <= 12; ++d) {
    std::printf("%4zu %8llu %10.4f %10.4f\n", d, static_cast<unsigned long long>(ms.clustering.N[d]),
                ms.clustering.C_of_d[d], gpa::local_clustering_theory(params, static_cast<long>(d)));
  }
}
