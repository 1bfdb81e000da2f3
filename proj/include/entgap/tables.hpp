#pragma once

// Reproductions of the star-graph and lattice gap tables and the
// dimension sweep of entanglement-gap temperatures.

#include <optional>
#include <string>
#include <vector>

#include "entgap/separability.hpp"

namespace entgap {

struct Table1Row {
  std::size_t k = 0;
  double e0_per_bond = 0.0;        // ED
  double e0_exact_per_bond = 0.0;  // -(k+2)/k
  double e_max_per_bond = 0.0;
  double esep_per_bond = 0.0;
  double gap_per_bond = 0.0;
  double scaled_gap = 0.0;
};

/// Heisenberg stars k = 1..k_max.
std::vector<Table1Row> table1(std::size_t k_max = 6, const SeesawOptions& seesaw = {});

struct Table2Row {
  std::string lattice;
  std::size_t coordination = 0;
  double e0_per_bond = 0.0;
  double e_max_per_bond = 1.0;
  double esep_per_bond = 0.0;        // seesaw (upper)
  double esep_lower_per_bond = 0.0;  // PPT-certified lower
  double gap_per_bond = 0.0;
  double scaled_gap = 0.0;
  std::string e0_source;             // "exact diagonalization", "ring extrapolation", or a literature tag
};

struct Table2Options {
  SeesawOptions seesaw;
  std::vector<std::size_t> chain_sizes{8, 10, 12, 14};
  LanczosOptions lanczos;
};

std::vector<Table2Row> table2(const Table2Options& options = {});

struct TemperatureComparisonRow {
  std::size_t d = 0;
  std::optional<double> t_maxent;       // from the seesaw E_sep of I - |phi_d><phi_d|
  double t_maxent_closed = 0.0;         // 1/ln(d+1)
  std::optional<double> t_sym;          // from the seesaw E_sep of the symmetric projector
  double t_sym_closed = 0.0;            // 1/ln((d+1)/(d-1))
  double ces_esep_lower = 0.0;          // PPT
  double ces_esep_upper = 0.0;          // product sampling refined by seesaw
  double ces_esep_sampled = 0.0;        // best raw sample before refinement
  std::optional<double> t_ces_lower;
  std::optional<double> t_ces_upper;
};

struct ComparisonOptions {
  std::size_t product_samples = 4096;
  SeesawOptions seesaw;
  PptOptions ppt;
};

/// All three Hamiltonians have E0 = 0 and E_max = 1, so t = T.
std::vector<TemperatureComparisonRow> temperature_comparison(const std::vector<std::size_t>& dims,
                                                             const ComparisonOptions& options = {});

}  // namespace entgap
