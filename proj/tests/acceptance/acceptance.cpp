// Acceptance checks. One line per criterion: "ACn PASS|FAIL <seconds>s <detail>".
// Usage: acceptance [AC1 AC2 ...]   (no arguments runs everything)

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "entgap/lattice.hpp"
#include "entgap/models.hpp"
#include "entgap/random.hpp"
#include "entgap/separability.hpp"
#include "entgap/tables.hpp"
#include "entgap/thermo.hpp"
#include "entgap/twoqubit.hpp"
#include "entgap/xy_exact.hpp"

using namespace entgap;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  // Records a failed sub-check; passing sub-checks stay silent.
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [" << what << "]";
    }
  }
  void near(double got, double want, double tol, const std::string& what) {
    if (!(std::abs(got - want) <= tol)) {
      pass = false;
      char buf[256];
      std::snprintf(buf, sizeof buf, " [%s: got %.10g want %.10g tol %.1e]", what.c_str(), got, want, tol);
      detail << buf;
    }
  }
  void note(const std::string& s) { detail << ' ' << s; }
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

const double kLn3 = std::log(3.0);

// Two-qubit Heisenberg antiferromagnet.
void ac1(Outcome& o) {
  const auto h = heisenberg_pair();
  const auto r = entanglement_gap(h);
  o.near(r.e0, -3.0, 1e-12, "E0");
  o.expect(r.sep.lower >= -1.0 - 1e-6 && r.sep.upper <= -1.0 + 1e-6 && r.sep.lower <= r.sep.upper,
           "E_sep bracket inside [-1-1e-6, -1+1e-6]");
  o.near(r.gap_lower, 2.0, 1e-6, "gap lower");
  o.near(r.gap_upper, 2.0, 1e-6, "gap upper");
  o.near(r.scaled_gap_lower, 0.5, 1e-6, "scaled gap lower");
  o.near(r.scaled_gap_upper, 0.5, 1e-6, "scaled gap upper");
  const auto t = entanglement_gap_temperature(h, r.sep.upper);
  o.expect(t.has_value(), "T_E defined");
  if (t) o.near(*t / (r.e_max - r.e0), 1.0 / kLn3, 1e-6, "t_E");
  o.note(fmt("t_E=%.9f", t ? *t / 4.0 : NAN));
}

// Maximal-gap family I - |phi_d><phi_d|.
void ac2(Outcome& o) {
  for (std::size_t d = 2; d <= 6; ++d) {
    const auto h = max_entangled_projector_hamiltonian(d);
    const auto r = entanglement_gap(h);
    const std::string tag = "d=" + std::to_string(d);
    o.near(r.scaled_gap_upper, 1.0 - 1.0 / double(d), 1e-6, tag + " scaled gap (seesaw)");
    o.expect(r.sep.lower_from_ppt, tag + " PPT computed");
    o.near(r.scaled_gap_lower, 1.0 - 1.0 / double(d), 1e-6, tag + " scaled gap (PPT)");
    if (d <= 3) o.near(r.sep.lower, r.sep.upper, 1e-6, tag + " PPT = seesaw");
    const auto t = entanglement_gap_temperature(h, r.sep.upper);
    o.expect(t.has_value(), tag + " T_E defined");
    if (t) o.near(*t, 1.0 / std::log(double(d + 1)), 1e-6, tag + " t_E");
  }
}

// Symmetric projector.
void ac3(Outcome& o) {
  for (std::size_t d = 2; d <= 6; ++d) {
    const auto h = symmetric_projector_hamiltonian(d);
    const std::string tag = "d=" + std::to_string(d);
    const double esep = seesaw_upper(h).energy;
    o.near(esep, 0.5, 1e-8, tag + " E_sep");
    const auto t = entanglement_gap_temperature(h, esep);
    o.expect(t.has_value(), tag + " T_E defined");
    if (t) o.near(*t, 1.0 / std::log(double(d + 1) / double(d - 1)), 1e-6, tag + " t_E");
  }
  const auto h10 = symmetric_projector_hamiltonian(10);
  const auto t10 = entanglement_gap_temperature(h10, seesaw_upper(h10).energy);
  o.expect(t10 && *t10 >= 4.9 && *t10 <= 5.1, "t_E(d=10) in [4.9, 5.1]");
  o.note(fmt("t_E(10)=%.4f", t10 ? *t10 : NAN));
}

// Star graphs, k = 1..6.
void ac4(Outcome& o) {
  const double gap[] = {2, 1, 0.667, 0.5, 0.4, 0.333};
  const double scaled[] = {0.5, 0.333, 0.25, 0.2, 0.167, 0.143};
  const auto rows = table1(6);
  o.expect(rows.size() == 6, "six rows");
  for (std::size_t i = 0; i < rows.size() && i < 6; ++i) {
    const auto& r = rows[i];
    const std::string tag = "k=" + std::to_string(r.k);
    o.near(r.e0_per_bond, -double(r.k + 2) / double(r.k), 1e-8, tag + " E0/bond vs -(k+2)/k");
    o.near(r.esep_per_bond, -1.0, 1e-8, tag + " E_sep/bond");
    o.near(r.gap_per_bond, gap[i], 1e-3, tag + " gap/bond");
    o.near(r.scaled_gap, scaled[i], 1e-3, tag + " scaled gap");
  }
}

// Lattice table.
void ac5(Outcome& o) {
  const auto h = heisenberg_pair();
  const auto tri = eig(assemble_dense(triangle_lattice(), h));
  o.near(tri.ground_energy(), -3.0, 1e-10, "triangle E0");
  o.near(tri.max_energy(), 3.0, 1e-10, "triangle E_max");
  o.near(cluster_sep_energy(3, h) * 3.0, -1.5, 1e-8, "triangle E_sep");

  struct Printed {
    const char* lattice;
    double e0, esep, gap, scaled;
    double tol;  // max(1e-3, half a unit of the last printed digit)
  };
  const Printed table[] = {
      {"single bond", -3, -1, 2, 0.5, 1e-3},         {"1D chain", -1.772, -1, 0.772, 0.279, 2e-3},
      {"hexagonal", -1.452, -1, 0.452, 0.184, 1e-3}, {"square", -1.338, -1, 0.338, 0.145, 1e-3},
      {"cubic", -1.194, -1, 0.194, 0.088, 1e-3},     {"single triangle", -1, -0.5, 0.5, 0.25, 1e-3},
      {"kagome", -0.874, -0.5, 0.374, 0.200, 1e-3},  {"triangular", -0.726, -0.5, 0.226, 0.131, 1e-3},
      {"single tetrahedron", -1, -0.333, 0.667, 0.333, 1e-3},
      {"checkerboard", -0.67, -0.333, 0.34, 0.20, 5e-3},
  };
  const auto rows = table2();
  for (const auto& p : table) {
    const auto it = std::find_if(rows.begin(), rows.end(), [&](const auto& r) { return r.lattice == p.lattice; });
    if (it == rows.end()) {
      o.expect(false, std::string("row ") + p.lattice + " present");
      continue;
    }
    const std::string tag = p.lattice;
    o.near(it->e0_per_bond, p.e0, p.tol, tag + " E0/bond");
    o.near(it->esep_per_bond, p.esep, std::max(p.tol, 5e-4), tag + " E_sep/bond");
    o.near(it->gap_per_bond, p.gap, p.tol, tag + " gap/bond");
    o.near(it->scaled_gap, p.scaled, p.tol, tag + " scaled gap");
    if (tag == "1D chain") o.note(fmt("chain E0/bond=%.5f", it->e0_per_bond));
  }
  const auto tet = std::find_if(rows.begin(), rows.end(), [](const auto& r) { return r.lattice == "single tetrahedron"; });
  if (tet != rows.end()) {
    o.near(tet->e0_per_bond, -1.0, 1e-10, "tetrahedron E0/bond exact");
    o.near(tet->esep_per_bond, -1.0 / 3.0, 1e-8, "tetrahedron E_sep/bond exact");
  }
}

// Choi Hamiltonian and its bound-entanglement window.
void ac6(Outcome& o) {
  const auto h = choi_hamiltonian();
  const auto ppt = ppt_lower(h);
  o.near(ppt.lower, (3.0 - 2.0 * std::sqrt(3.0)) / 3.0, 1e-4, "PPT lower bound");
  const double upper = seesaw_upper(h).energy;
  o.near(upper, 0.0, 1e-7, "seesaw upper bound");
  const auto w = bound_entanglement_window(h, upper);
  o.expect(w.has_value(), "window found");
  if (w) {
    o.near(w->t_low, 1.256, 0.01, "window low");
    o.near(w->t_high, 1.271, 0.01, "window high");
    o.note(fmt("window=[%.4f,", w->t_low) + fmt(" %.4f]", w->t_high));
  }
}

// XY chain.
void ac7(Outcome& o) {
  double worst = 0.0;
  for (int i = 0; i <= 8; ++i)
    for (int j = 0; j <= 8; ++j) {
      const double g = i / 8.0, l = 2.0 * j / 8.0;
      worst = std::max(worst, std::abs(xy_sep_energy_numeric(g, l) - xy_sep_energy(g, l).energy));
    }
  o.expect(worst <= 1e-8, fmt("closed form vs numeric on 9x9 grid, worst %.2e", worst));

  for (double g : {0.2, 0.4, 0.6, 0.8, 1.0}) {
    const double l = std::sqrt(std::max(0.0, 1.0 - g * g));
    o.expect(std::abs(xy_point(g, l).gap_bond) <= 1e-6, fmt("zero gap at gamma=%.1f", g));
  }

  for (const auto& [g, l] : std::vector<std::pair<double, double>>{{1, 0}, {1, 1}, {0.5, 0.5}, {0, 0}}) {
    const double quad = xy_chain_extrema_thermodynamic(g, l).e0_site;
    const double ext = extrapolate_ring_energy(xy_pair(g, l)).intercept;
    o.near(quad, ext, 1e-3, fmt("quadrature vs ring ED at gamma=%.1f", g) + fmt(" lambda=%.1f", l));
  }

  std::vector<double> lambdas;
  for (int k = 0; k <= 60; ++k) lambdas.push_back(0.05 * k);
  const auto slice = xy_gap_surface({1.0}, lambdas);
  std::size_t peak = 0;
  for (std::size_t k = 1; k < slice.size(); ++k)
    if (slice[k].scaled_gap > slice[peak].scaled_gap) peak = k;
  bool unimodal = true;
  for (std::size_t k = 1; k < slice.size(); ++k) {
    const double step = slice[k].scaled_gap - slice[k - 1].scaled_gap;
    if ((k <= peak && step < -1e-12) || (k > peak && step > 1e-12)) unimodal = false;
  }
  o.expect(unimodal, "gamma=1 slice unimodal");
  const double where = slice[peak].lambda;
  o.expect(where >= 0.8 && where <= 1.2, fmt("gamma=1 scaled-gap maximum at lambda=%.2f, outside [0.8, 1.2]", where));
  o.note(fmt("peak lambda=%.2f", where));
}

// Two-qubit search.
void ac8(Outcome& o) {
  const double ref = 1.0 / kLn3;
  SearchOptions s;
  s.samples = 100000;
  s.seed = 7;
  const auto r = random_search(s);
  o.expect(r.max_t <= ref + 1e-6, fmt("unconstrained max t_E %.9f exceeds 1/ln 3", r.max_t));
  o.expect(r.max_crosscheck_discrepancy <= 1e-6,
           fmt("seesaw cross-check agrees with PPT, worst %.3e", r.max_crosscheck_discrepancy));
  SearchOptions c = s;
  c.samples = 10000;
  c.singlet_ground = true;
  const auto rc = random_search(c);
  o.expect(rc.max_t <= ref + 1e-6, fmt("singlet-ground max t_E %.9f exceeds 1/ln 3", rc.max_t));
  o.note(fmt("max_t=%.6f", r.max_t) + fmt(" singlet max_t=%.6f", rc.max_t) +
         " skipped=" + std::to_string(r.n_skipped_zero_gap));
}

// Property suites.
void ac9(Outcome& o) {
  auto rng = make_rng(2024, 0);
  auto random_h = [&](const Dims& dims) {
    const std::size_t n = product(dims);
    std::normal_distribution<double> g;
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const double re = g(rng);
        const double im = g(rng);
        m(i, j) = Complex(re, im);
      }
    return HermitianOperator(dims, (m + m.adjoint()) / 2.0);
  };
  auto random_rho = [&](std::size_t n) {
    const Vector v = haar_vector(n * n, rng);
    Matrix a = Eigen::Map<const Matrix>(v.data(), n, n);
    Matrix rho = a * a.adjoint();
    return Matrix(rho / rho.trace());
  };

  GapOptions quick;
  quick.seesaw.restarts = 8;
  const Dims shapes[] = {{2, 2}, {2, 3}, {3, 3}};
  int bad = 0;
  for (int k = 0; k < 200; ++k) {
    const auto h = random_h(shapes[k % 3]);
    const auto b = separable_bracket(h, eig(h).ground_energy(), quick);
    if (b.lower > b.upper + 1e-7) ++bad;
  }
  o.expect(bad == 0, std::to_string(bad) + " bracket violations");

  double lemma1 = 0.0;
  for (int k = 0; k < 50; ++k) {
    const auto h = random_h({2, 2});
    const Matrix ua = haar_unitary(2, rng), ub = haar_unitary(2, rng);
    Matrix u(4, 4);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) u.block(2 * i, 2 * j, 2, 2) = ua(i, j) * ub;
    const auto a = entanglement_gap(h, quick);
    const auto b = entanglement_gap(HermitianOperator({2, 2}, u * h.matrix() * u.adjoint()), quick);
    lemma1 = std::max({lemma1, std::abs(a.gap_lower - b.gap_lower), std::abs(a.gap_upper - b.gap_upper)});
  }
  o.expect(lemma1 <= 1e-6, fmt("local-unitary gap change %.2e", lemma1));

  bool lemma2 = true;
  for (int k = 0; k < 50; ++k) {
    const auto h = random_h({2, 3});
    const auto s = eig(h);
    const Matrix bar = (h.matrix() - s.ground_energy() * Matrix::Identity(6, 6)) / (s.max_energy() - s.ground_energy());
    const Vector g0 = s.eigenvectors.col(0);
    const Matrix raised = Matrix::Identity(6, 6) - g0 * g0.adjoint();
    const Matrix rho = random_rho(6);
    lemma2 = lemma2 && (bar * rho).trace().real() <= (raised * rho).trace().real() + 1e-12;
  }
  o.expect(lemma2, "level-raising inequality");

  bool monotone = true;
  for (int k = 0; k < 30; ++k) {
    const Dims dims = k % 2 ? Dims{3, 3} : Dims{2, 2, 2};
    try {
      const auto run = seesaw_descent(random_h(dims), random_product_state(dims, 99, k));
      for (std::size_t i = 1; i < run.sweep_energies.size(); ++i)
        monotone = monotone && run.sweep_energies[i] <= run.sweep_energies[i - 1] + 1e-12;
    } catch (const std::exception&) {
      monotone = false;
    }
  }
  o.expect(monotone, "seesaw sweeps non-increasing");

  bool thermal = true;
  for (int k = 0; k < 20; ++k) {
    const auto h = random_h({2, 3});
    const auto s = eig(h);
    const double etot = s.max_energy() - s.ground_energy();
    double prev = -std::numeric_limits<double>::infinity();
    for (double T : log_grid(1e-3 * etot, 1e3 * etot, 100)) {
      const double u = thermal_energy(s.eigenvalues, T);
      thermal = thermal && u >= prev;  // saturates at E0 in double precision
      prev = u;
    }
    const double spectral_gap = s.eigenvalues(1) - s.eigenvalues(0);
    thermal = thermal && std::abs(thermal_energy(s.eigenvalues, spectral_gap / 50.0) - s.ground_energy()) <= 1e-8 * etot;
    thermal = thermal && std::abs(thermal_energy(s.eigenvalues, etot * 1e9) - h.trace() / 6.0) <= 1e-8 * etot;
  }
  o.expect(thermal, "U(T) monotone with correct limits");

  double involution = 0.0;
  for (int k = 0; k < 20; ++k) {
    const auto m = random_h({2, 3, 2});
    for (std::size_t f = 0; f < 3; ++f)
      involution =
          std::max(involution, (partial_transpose(partial_transpose(m, f), f).matrix() - m.matrix()).cwiseAbs().maxCoeff());
  }
  o.expect(involution <= 1e-12, fmt("partial transpose involution error %.2e", involution));

  double bonds = 0.0;
  const auto spec = ring_lattice(4);
  for (int k = 0; k < 10; ++k) {
    const auto coupling = random_h({2, 2});
    const HermitianOperator rho({2, 2, 2, 2}, random_rho(16));
    double sum = 0.0;
    for (double e : bond_energy_decomposition(spec, coupling, rho)) sum += e;
    bonds = std::max(bonds, std::abs(sum - assemble_dense(spec, coupling).trace_with(rho)));
  }
  o.expect(bonds <= 1e-10, fmt("bond energy identity error %.2e", bonds));

  double exact = 0.0;
  SeesawOptions ss;
  ss.restarts = 16;
  for (int k = 0; k < 200; ++k) {
    const auto h = random_h({2, 2});
    exact = std::max(exact, std::abs(ppt_lower(h).lower - seesaw_upper(h, ss).energy));
  }
  o.expect(exact <= 1e-6, fmt("two-qubit PPT vs seesaw %.2e", exact));

  const auto upb = upb_hamiltonian("tiles");
  SeesawOptions wide;
  wide.restarts = 128;
  const double relax = seesaw_upper(upb, wide).energy - ppt_lower(upb).lower;
  o.expect(relax > 0.01, fmt("UPB relaxation gap %.4f", relax));
  o.note(fmt("upb gap=%.5f", relax));
}

// Maximal-gap vs symmetric vs CES temperatures.
void ac10(Outcome& o) {
  const auto rows = temperature_comparison({3, 4, 5, 6});
  for (const auto& r : rows) {
    const std::string tag = "d=" + std::to_string(r.d);
    o.expect(r.t_sym.has_value() && r.t_ces_upper.has_value(), tag + " temperatures defined");
    if (r.t_sym && r.t_ces_upper) o.expect(*r.t_sym > *r.t_ces_upper, tag + " t_E(H_S) > t_E(H_ces) upper");
    o.expect(r.ces_esep_lower <= r.ces_esep_upper + 1e-9, tag + " CES bracket ordered");
    o.note(tag + fmt(" t_S=%.4f", r.t_sym.value_or(NAN)) + fmt(" t_ces<=%.4f", r.t_ces_upper.value_or(NAN)));
  }
}

struct Criterion {
  void (*run)(Outcome&);
  double budget_seconds;
};

}  // namespace

int main(int argc, char** argv) {
  const std::map<std::string, Criterion> all = {
      {"AC1", {ac1, 1}},   {"AC2", {ac2, 10}},  {"AC3", {ac3, 10}},  {"AC4", {ac4, 30}},
      {"AC5", {ac5, 120}}, {"AC6", {ac6, 30}},  {"AC7", {ac7, 300}}, {"AC8", {ac8, 600}},
      {"AC9", {ac9, 600}}, {"AC10", {ac10, 300}},
  };
  std::vector<std::string> wanted;
  for (int i = 1; i < argc; ++i) wanted.push_back(argv[i]);
  if (wanted.empty())
    for (int i = 1; i <= 10; ++i) wanted.push_back("AC" + std::to_string(i));

  int failures = 0;
  for (const auto& name : wanted) {
    const auto it = all.find(name);
    if (it == all.end()) {
      std::fprintf(stderr, "unknown criterion %s\n", name.c_str());
      return 2;
    }
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      it->second.run(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.expect(secs <= it->second.budget_seconds, fmt("runtime over budget of %.0fs", it->second.budget_seconds));
    std::printf("%s %s %.2fs%s\n", name.c_str(), o.pass ? "PASS" : "FAIL", secs, o.detail.str().c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
