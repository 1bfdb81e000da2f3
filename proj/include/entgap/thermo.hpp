#pragma once

#include <optional>
#include <span>
#include <vector>

#include "entgap/operator.hpp"

namespace entgap {

/// U(T) = sum E_i exp(-E_i/T) / sum exp(-E_i/T), k_B = 1, shifted by E0 for
/// stability. Throws for T <= 0.
double thermal_energy(const RealVector& eigenvalues, double T);
double thermal_energy(const HermitianOperator& h, double T);

/// exp(-H/T)/Z.
HermitianOperator gibbs_state(const Spectrum& spectrum, const Dims& dims, double T);

struct TemperatureOptions {
  double t_min = 1e-6;
  double energy_tol = 1e-10;  // e_sep must clear E0 and the mean by this much
  double t_tol = 0.0;         // bisection stops once the bracket is this narrow; 0 runs to machine precision
  std::size_t max_iterations = 200;
};

/// T with U(T) = e_sep, by bisection. nullopt when e_sep is not strictly
/// between E0 and the mean eigenvalue ("no finite entanglement-gap temperature").
std::optional<double> entanglement_gap_temperature(const RealVector& eigenvalues, double e_sep,
                                                   const TemperatureOptions& options = {});
std::optional<double> entanglement_gap_temperature(const HermitianOperator& h, double e_sep,
                                                   const TemperatureOptions& options = {});

struct ThermalSample {
  double T = 0.0;
  double U = 0.0;
  bool ppt = false;
};

struct ThermalCurve {
  std::vector<ThermalSample> samples;
  std::optional<double> t_gap;
  std::optional<double> t_gap_scaled;  // t_gap / (E_max - E0)
};

/// n log-spaced temperatures in [t_min, t_max], both included.
std::vector<double> log_grid(double t_min, double t_max, std::size_t n);

/// Samples U(T) and the PPT flag of the Gibbs state (cut after subsystem
/// `cut`) on the grid, plus T_E when e_sep is given.
ThermalCurve thermal_curve(const HermitianOperator& h, const std::vector<double>& temperatures,
                           std::optional<double> e_sep, std::size_t cut = 1);

inline constexpr double kPptFlagTol = 1e-10;

/// Minimum eigenvalue of the Gibbs state's partial transpose on factor 0 of
/// the two-factor view flatten(h, cut).
double gibbs_pt_min_eigenvalue(const Spectrum& spectrum, const Dims& dims, double T, std::size_t cut = 1);

struct WindowOptions {
  double t_min = 0.01;
  double t_max = 10.0;
  std::size_t grid = 400;
  double refine_tol = 1e-4;
  std::size_t cut = 1;
};

struct Window {
  double t_low = 0.0;
  double t_high = 0.0;
  bool low_at_grid_edge = false;   // window extends below t_min
  bool high_at_grid_edge = false;  // window extends above t_max
};

/// First temperature interval with U(T) < e_sep_ref and a PPT Gibbs state.
/// PPT runs come from the grid with endpoints refined by bisection; the
/// energy condition is solved exactly. nullopt when the two never overlap.
std::optional<Window> bound_entanglement_window(const HermitianOperator& h, double e_sep_ref,
                                                const WindowOptions& options = {});

}  // namespace entgap
