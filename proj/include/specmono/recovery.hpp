#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "specmono/graphs.hpp"

namespace specmono {

struct RecoveryReport {
  std::size_t n = 0;
  std::vector<std::uint32_t> side_a, side_b;
  /// Vertices whose eigenvector entry fell inside (-1/2, 1/2) before assignment.
  std::vector<std::uint32_t> leftover;
  std::size_t total_edits = 0;
  std::vector<std::size_t> per_vertex_edits;  // sums to 2 * total_edits
  double lambda2 = 0.0;
  double lambda_n = 0.0;
  double lambda_n_minus_1 = 0.0;
  double lambda_n_gap = 0.0;   // |lambda_n + n/2|
  double hoffman_value = 0.0;  // lambda_1 + lambda_{n-1} + lambda_n, report only
  std::size_t eigen_multiplicity = 1;  // multiplicity of lambda_n
};

/// Reads the bipartition off the eigenvector of the smallest eigenvalue:
/// scale to ||x||_inf = 1 with the top coordinate positive, seed the sides at
/// |x| >= 1 - 1/sqrt(n), widen to |x| >= 1/2, then place each remaining vertex
/// on the side holding fewer of its neighbors (ties: smaller side, then side A).
/// Edits are counted against the complete bipartite graph on the result.
RecoveryReport spectral_bipartite_recovery(const Graph& g);

/// total_edits / n^2.
double closeness_ratio(const Graph& g, const RecoveryReport& r);

struct BruteForceResult {
  std::size_t min_edits = 0;
  std::vector<std::uint32_t> side_a, side_b;
};

/// Exact minimum over all 2^(n-1) bipartitions (side containing vertex 0 may
/// also be everything, leaving the other side empty). Requires n <= 12.
BruteForceResult brute_force_min_edits(const Graph& g);

struct HoffmanDiagnostic {
  bool is_bipartite = false;
  double hoffman_value = 0.0;  // lambda_1 + lambda_{n-1} + lambda_n
  double lambda_n_minus_1 = 0.0;
};

/// Reported without asserting a sign; the quoted inequality has unstated
/// hypotheses (it already fails for the 5-cycle).
HoffmanDiagnostic hoffman_diagnostic(const Graph& g);

/// JSON with fixed key order: {n, sideA, sideB, total_edits, per_vertex_edits,
/// closeness_ratio, lambda2, lambda_n, lambda_n_minus_1, lambda_n_gap,
/// hoffman_value, eigen_multiplicity}
std::string recovery_report_json(const Graph& g, const RecoveryReport& r);

}  // namespace specmono
