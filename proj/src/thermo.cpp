#include "entgap/thermo.hpp"

#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "entgap/error.hpp"
#include "entgap/parallel.hpp"

namespace entgap {

double thermal_energy(const RealVector& eigenvalues, double T) {
  require(T > 0.0 && std::isfinite(T), "thermal_energy: temperature must be positive, got " + std::to_string(T));
  const double e0 = eigenvalues.minCoeff();
  double z = 0.0, u = 0.0;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    const double w = std::exp(-(eigenvalues(i) - e0) / T);
    z += w;
    u += w * (eigenvalues(i) - e0);
  }
  return e0 + u / z;
}

double thermal_energy(const HermitianOperator& h, double T) { return thermal_energy(eig(h).eigenvalues, T); }

HermitianOperator gibbs_state(const Spectrum& spectrum, const Dims& dims, double T) {
  require(T > 0.0, "gibbs_state: temperature must be positive");
  const RealVector& ev = spectrum.eigenvalues;
  RealVector w = (-(ev.array() - ev(0)) / T).exp();
  w /= w.sum();
  const Matrix& v = spectrum.eigenvectors;
  return {dims, v * w.cast<Complex>().asDiagonal() * v.adjoint()};
}

std::optional<double> entanglement_gap_temperature(const RealVector& eigenvalues, double e_sep,
                                                   const TemperatureOptions& options) {
  const double e0 = eigenvalues.minCoeff();
  const double mean = eigenvalues.mean();
  if (!(e_sep > e0 + options.energy_tol) || !(e_sep < mean - options.energy_tol)) return std::nullopt;
  double lo = options.t_min;
  if (thermal_energy(eigenvalues, lo) >= e_sep) return lo;
  double hi = std::max(1.0, 2.0 * lo);
  for (int k = 0; k < 2000 && thermal_energy(eigenvalues, hi) <= e_sep; ++k) hi *= 2.0;
  for (std::size_t it = 0; it < options.max_iterations; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi || hi - lo <= options.t_tol) break;
    (thermal_energy(eigenvalues, mid) < e_sep ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

std::optional<double> entanglement_gap_temperature(const HermitianOperator& h, double e_sep,
                                                   const TemperatureOptions& options) {
  return entanglement_gap_temperature(eig(h).eigenvalues, e_sep, options);
}

std::vector<double> log_grid(double t_min, double t_max, std::size_t n) {
  require(t_min > 0.0 && t_max > t_min, "temperature grid needs 0 < t_min < t_max");
  require(n >= 2, "temperature grid needs at least two points");
  std::vector<double> grid(n);
  const double a = std::log(t_min), b = std::log(t_max);
  for (std::size_t i = 0; i < n; ++i) grid[i] = std::exp(a + (b - a) * double(i) / double(n - 1));
  grid.front() = t_min;
  grid.back() = t_max;
  return grid;
}

double gibbs_pt_min_eigenvalue(const Spectrum& spectrum, const Dims& dims, double T, std::size_t cut) {
  const auto rho = flatten(gibbs_state(spectrum, dims, T), cut);
  Eigen::SelfAdjointEigenSolver<Matrix> es(partial_transpose(rho, 0).matrix(), Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

ThermalCurve thermal_curve(const HermitianOperator& h, const std::vector<double>& temperatures,
                           std::optional<double> e_sep, std::size_t cut) {
  for (std::size_t i = 1; i < temperatures.size(); ++i)
    require(temperatures[i] > temperatures[i - 1], "temperatures must be strictly increasing");
  const auto spectrum = eig(h);
  ThermalCurve curve;
  const bool bipartite = h.num_subsystems() >= 2;
  curve.samples = parallel_map(temperatures.size(), [&](std::size_t i) {
    const double T = temperatures[i];
    ThermalSample s{T, thermal_energy(spectrum.eigenvalues, T), false};
    if (bipartite) s.ppt = gibbs_pt_min_eigenvalue(spectrum, h.dims(), T, cut) >= -kPptFlagTol;
    return s;
  });
  if (e_sep) {
    curve.t_gap = entanglement_gap_temperature(spectrum.eigenvalues, *e_sep);
    const double etot = spectrum.max_energy() - spectrum.ground_energy();
    if (curve.t_gap && etot > 0.0) curve.t_gap_scaled = *curve.t_gap / etot;
  }
  return curve;
}

std::optional<Window> bound_entanglement_window(const HermitianOperator& h, double e_sep_ref,
                                                const WindowOptions& options) {
  require(h.num_subsystems() >= 2, "bound_entanglement_window: operator must have at least two factors");
  require(options.refine_tol > 0.0, "bound_entanglement_window: refine_tol must be positive");
  const auto spectrum = eig(h);
  const auto& ev = spectrum.eigenvalues;
  auto ppt = [&](double T) { return gibbs_pt_min_eigenvalue(spectrum, h.dims(), T, options.cut) >= -kPptFlagTol; };

  // U is increasing in T, so {U < e_sep_ref} is (0, t_energy) and is found
  // exactly. Only the PPT set needs the grid; it is usually a long run.
  double t_energy = 0.0;
  if (e_sep_ref >= ev.mean())
    t_energy = std::numeric_limits<double>::infinity();
  else if (e_sep_ref > ev.minCoeff()) {
    TemperatureOptions to;
    to.energy_tol = 0.0;
    t_energy = entanglement_gap_temperature(ev, e_sep_ref, to).value_or(0.0);
  }
  if (!(t_energy > options.t_min)) return std::nullopt;

  const auto grid = log_grid(options.t_min, options.t_max, options.grid);
  const auto flags = parallel_map(grid.size(), [&](std::size_t i) { return static_cast<int>(ppt(grid[i])); });

  auto refine = [&](double in, double out) {
    while (std::abs(out - in) > options.refine_tol) {
      const double mid = 0.5 * (in + out);
      (ppt(mid) ? in : out) = mid;
    }
    return 0.5 * (in + out);
  };

  for (std::size_t first = 0; first < grid.size(); ++first) {
    if (!flags[first]) continue;
    std::size_t last = first;
    while (last + 1 < grid.size() && flags[last + 1]) ++last;
    Window w;
    w.low_at_grid_edge = first == 0;
    const double ppt_low = w.low_at_grid_edge ? grid.front() : refine(grid[first], grid[first - 1]);
    const double ppt_high = last + 1 == grid.size() ? grid.back() : refine(grid[last], grid[last + 1]);
    if (ppt_low < t_energy) {
      w.t_low = ppt_low;
      w.t_high = std::min(ppt_high, t_energy);
      w.high_at_grid_edge = w.t_high == grid.back() && last + 1 == grid.size();
      return w;
    }
    first = last;
  }
  return std::nullopt;
}

}  // namespace entgap
