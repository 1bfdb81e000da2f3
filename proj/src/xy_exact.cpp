#include "entgap/xy_exact.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "entgap/error.hpp"
#include "entgap/models.hpp"
#include "entgap/parallel.hpp"
#include "entgap/random.hpp"

namespace entgap {

namespace {

using std::numbers::pi;

Vector spinor(double c_up, Complex c_down) {
  Vector v(2);
  v << c_up, c_down;
  return v;
}

}  // namespace

XYSeparable xy_sep_energy(double gamma, double lambda) {
  const double g = std::abs(gamma), l = std::abs(lambda);
  XYSeparable out;
  Vector a, b;
  if (l <= 1.0 + g) {
    out.energy = -((1.0 + g) * (1.0 + g) + l * l) / (2.0 * (1.0 + g));
    // Field pushes weight onto |down>; the XX term wants opposite x components.
    const double up = std::sqrt((1.0 + g - l) / (2.0 * (1.0 + g)));
    const double down = std::sqrt((1.0 + g + l) / (2.0 * (1.0 + g)));
    a = spinor(up, down);
    b = spinor(up, -down);
  } else {
    out.energy = -l;
    a = spinor(0.0, 1.0);
    b = a;
  }
  if (lambda < 0.0) {  // pi rotation about x: X on each site
    a = pauli_x() * a;
    b = pauli_x() * b;
  }
  if (gamma < 0.0) {  // pi/2 rotation about z: diag(1, i) maps X -> Y
    a(1) *= Complex(0.0, 1.0);
    b(1) *= Complex(0.0, 1.0);
  }
  out.state.locals = {a, b};
  return out;
}

double xy_angle_energy(double gamma, double lambda, double th_a, double ph_a, double th_b, double ph_b) {
  const double sa = std::sin(2.0 * th_a), sb = std::sin(2.0 * th_b);
  return 0.5 * lambda * (std::cos(2.0 * th_a) + std::cos(2.0 * th_b)) +
         0.5 * (1.0 + gamma) * std::cos(ph_a) * sa * std::cos(ph_b) * sb +
         0.5 * (1.0 - gamma) * std::sin(ph_a) * sa * std::sin(ph_b) * sb;
}

// Each angle enters as beta cos(x) + delta sin(x) (x = 2 theta or phi), so
// every coordinate step is an exact minimization: x = atan2(-delta, -beta).
double xy_sep_energy_numeric(double gamma, double lambda, std::size_t starts, std::uint64_t seed) {
  require(starts >= 1, "xy_sep_energy_numeric: need at least one start");
  const double cp = 0.5 * (1.0 + gamma), cm = 0.5 * (1.0 - gamma);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < starts; ++s) {
    auto rng = make_rng(seed, s);
    std::uniform_real_distribution<double> u(0.0, 2.0 * pi);
    double t[2], p[2];
    t[0] = 0.5 * u(rng);
    p[0] = u(rng);
    t[1] = 0.5 * u(rng);
    p[1] = u(rng);
    double e = xy_angle_energy(gamma, lambda, t[0], p[0], t[1], p[1]);
    for (std::size_t sweep = 0; sweep < 1000000; ++sweep) {
      for (int j = 0; j < 2; ++j) {
        const int o = 1 - j;
        const double so = std::sin(2.0 * t[o]);
        // theta_j: (lambda/2) cos 2t + [cp cos p_j cos p_o + cm sin p_j sin p_o] so * sin 2t
        const double beta_t = 0.5 * lambda;
        const double delta_t = (cp * std::cos(p[j]) * std::cos(p[o]) + cm * std::sin(p[j]) * std::sin(p[o])) * so;
        t[j] = 0.5 * std::atan2(-delta_t, -beta_t);
        // phi_j: sin 2t_j * so * [cp cos p_o cos p + cm sin p_o sin p]
        const double amp = std::sin(2.0 * t[j]) * so;
        const double beta_p = amp * cp * std::cos(p[o]);
        const double delta_p = amp * cm * std::sin(p[o]);
        if (beta_p != 0.0 || delta_p != 0.0) p[j] = std::atan2(-delta_p, -beta_p);
      }
      const double e_new = xy_angle_energy(gamma, lambda, t[0], p[0], t[1], p[1]);
      const bool done = e - e_new < 1e-16;
      e = std::min(e, e_new);
      if (done) break;
    }
    best = std::min(best, e);
  }
  return best;
}

XYExtrema xy_chain_extrema_thermodynamic(double gamma, double lambda) {
  const double g = std::abs(gamma), l = std::abs(lambda);
  auto f = [g, l](double k) {
    const double c = std::cos(k) + l, s = std::sin(k);
    return std::sqrt(c * c + g * g * s * s);
  };
  using boost::math::quadrature::gauss_kronrod;
  // At g = 0 the integrand has a kink where cos k = -l; split there.
  std::vector<double> cuts{0.0};
  if (l < 1.0) cuts.push_back(std::acos(-l));
  cuts.push_back(pi);
  double integral = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    integral += gauss_kronrod<double, 15>::integrate(f, cuts[i], cuts[i + 1], 20, 1e-13);
  const double e0 = -integral / pi;
  return {e0, -e0};
}

XYExtrema xy_chain_extrema_ring(double gamma, double lambda, std::size_t n) {
  require(n >= 2 && n % 2 == 0, "xy ring: N must be even, got " + std::to_string(n));
  const double g = std::abs(gamma), l = std::abs(lambda);
  const double nn = static_cast<double>(n);
  auto xi = [l](double k) { return 2.0 * std::cos(k) + 2.0 * l; };
  auto eps = [&](double k) {
    const double x = xi(k), s = std::sin(k);
    return std::sqrt(x * x + 4.0 * g * g * s * s);
  };
  // Even parity: antiperiodic momenta, all modes paired (k, -k).
  double even = -l * nn;
  for (std::size_t m = 0; m < n / 2; ++m) {
    const double k = pi * (2.0 * double(m) + 1.0) / nn;
    even += xi(k) - eps(k);
  }
  // Odd parity: periodic momenta; k = 0 and pi are unpaired with energy xi.
  double odd = -l * nn;
  double min_eps = std::numeric_limits<double>::infinity();
  for (std::size_t m = 1; m < n / 2; ++m) {
    const double k = 2.0 * pi * double(m) / nn;
    odd += xi(k) - eps(k);
    min_eps = std::min(min_eps, eps(k));
  }
  const double x0 = xi(0.0), xpi = xi(pi);
  odd += std::min(std::min(x0, xpi), std::min(0.0, x0 + xpi) + min_eps);
  const double e0 = std::min(even, odd) / nn;
  // Even rings: a pi rotation about z on every other site maps H(g, l) to
  // -H(g, -l), so the spectrum is symmetric.
  return {e0, -e0};
}

XYPoint xy_point(double gamma, double lambda) {
  XYPoint p;
  p.gamma = gamma;
  p.lambda = lambda;
  p.e_sep_bond = xy_sep_energy(gamma, lambda).energy;
  const auto ext = xy_chain_extrema_thermodynamic(gamma, lambda);
  p.e0_site = ext.e0_site;
  p.e_max_site = ext.e_max_site;
  p.gap_bond = p.e_sep_bond - p.e0_site;
  const double etot = p.e_max_site - p.e0_site;
  p.scaled_gap = etot > 0.0 ? p.gap_bond / etot : 0.0;
  return p;
}

std::vector<XYPoint> xy_gap_surface(const std::vector<double>& gammas, const std::vector<double>& lambdas) {
  require(!gammas.empty() && !lambdas.empty(), "xy_gap_surface: grids must be non-empty");
  return parallel_map(gammas.size() * lambdas.size(), [&](std::size_t i) {
    return xy_point(gammas[i / lambdas.size()], lambdas[i % lambdas.size()]);
  });
}

}  // namespace entgap
