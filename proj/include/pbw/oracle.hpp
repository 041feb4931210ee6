#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pbw/deform.hpp"
#include "pbw/hopf.hpp"
#include "pbw/modalg.hpp"

namespace pbw {

enum class OracleVerdict { consistent, falsified };
const char* oracle_verdict_name(OracleVerdict v);

/// Upper bounds on dim F_m of the deformed algebra for m ≤ degree_bound,
/// obtained by spanning the relator ideal up to degree degree_bound + buffer.
struct FilteredDimReport {
  int degree_bound = 0;
  int buffer = 0;
  std::vector<long long> computed_dims;
  /// Σ_{j≤m} dim B_j · dim H.
  std::vector<long long> expected_dims;
  OracleVerdict verdict = OracleVerdict::consistent;
  std::optional<int> falsified_at;
  std::string caveat;
};

/// Throws DimensionMismatch for degree_bound < 2 or buffer < 0, and
/// CutoffExceeded when degree_bound + buffer exceeds the algebra's cutoff.
FilteredDimReport filtered_dims(const HopfAlgebra& h, const ModuleAlgebra& b, const Kappa& k, int degree_bound = 3,
                                int buffer = 1);

/// Runs buffers 0..max_buffer and stops at the first deficiency. Returns the
/// report of the last run.
FilteredDimReport pbw_probe(const HopfAlgebra& h, const ModuleAlgebra& b, const Kappa& k, int degree_bound = 3,
                            int max_buffer = 2);

}  // namespace pbw
