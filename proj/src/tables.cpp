#include "entgap/tables.hpp"

#include <algorithm>
#include <cmath>

#include "entgap/error.hpp"
#include "entgap/lattice.hpp"
#include "entgap/models.hpp"
#include "entgap/parallel.hpp"
#include "entgap/thermo.hpp"

namespace entgap {

std::vector<Table1Row> table1(std::size_t k_max, const SeesawOptions& seesaw) {
  require(k_max >= 1, "table1: k_max must be >= 1");
  const auto h = heisenberg_pair();
  std::vector<Table1Row> rows;
  for (std::size_t k = 1; k <= k_max; ++k) {
    const auto spec = star_lattice(k);
    const auto spectrum = eig(assemble_dense(spec, h));
    const double kb = static_cast<double>(k);
    Table1Row r;
    r.k = k;
    r.e0_per_bond = spectrum.ground_energy() / kb;
    r.e0_exact_per_bond = star_ground_energy_heisenberg(k) / kb;
    r.e_max_per_bond = spectrum.max_energy() / kb;
    r.esep_per_bond = bipartite_lattice_sep_energy(spec, h, seesaw).global_energy / kb;
    r.gap_per_bond = r.esep_per_bond - r.e0_per_bond;
    r.scaled_gap = r.gap_per_bond / (r.e_max_per_bond - r.e0_per_bond);
    rows.push_back(r);
  }
  return rows;
}

std::vector<Table2Row> table2(const Table2Options& options) {
  const auto h = heisenberg_pair();
  const double pair_lower = ppt_lower(h).lower;
  const double pair_upper = seesaw_upper(h, options.seesaw).energy;

  // Frustrated clusters: separable optimum of the whole cluster, per bond.
  const double tri_upper = cluster_sep_energy(3, h, options.seesaw);
  const double tet_upper = cluster_sep_energy(4, h, options.seesaw);
  const auto tri_h = assemble_dense(triangle_lattice(), h);
  const auto tet_h = assemble_dense(tetrahedron_lattice(), h);
  const double tri_lower = ppt_lower_multipartite(tri_h) / 3.0;
  const double tet_lower = ppt_lower_multipartite(tet_h) / 6.0;
  const auto tri_spec = eig(tri_h);
  const auto tet_spec = eig(tet_h);

  std::vector<Table2Row> rows;
  auto finish = [&](Table2Row r) {
    r.gap_per_bond = r.esep_per_bond - r.e0_per_bond;
    r.scaled_gap = r.gap_per_bond / (r.e_max_per_bond - r.e0_per_bond);
    rows.push_back(std::move(r));
  };
  const auto& ref = reference_energy_table();
  auto literature = [&](const std::string& name, double upper, double lower) {
    for (const auto& row : ref)
      if (row.name == name) {
        Table2Row r;
        r.lattice = name;
        r.coordination = row.coordination;
        r.e0_per_bond = row.e0_per_bond;
        r.e_max_per_bond = 1.0;  // ferromagnetic state: +1 on every bond
        r.esep_per_bond = upper;
        r.esep_lower_per_bond = lower;
        r.e0_source = row.source;
        finish(r);
        return;
      }
    fail(ErrorCode::InvalidArgument, "no reference row for " + name);
  };

  {
    const auto s = eig(h);
    finish({"single bond", 1, s.ground_energy(), s.max_energy(), pair_upper, pair_lower, 0, 0,
            "exact diagonalization"});
  }
  {
    const auto fit = extrapolate_ring_energy(h, options.chain_sizes, options.lanczos);
    const std::size_t n0 = options.chain_sizes.front();
    const double emax = -lattice_ground_energy(ring_lattice(n0), h * -1.0, options.lanczos) / double(n0);
    finish({"1D chain", 2, fit.intercept, emax, pair_upper, pair_lower, 0, 0, "ring extrapolation"});
  }
  literature("hexagonal", pair_upper, pair_lower);
  literature("square", pair_upper, pair_lower);
  literature("cubic", pair_upper, pair_lower);
  finish({"single triangle", 2, tri_spec.ground_energy() / 3.0, tri_spec.max_energy() / 3.0, tri_upper, tri_lower, 0,
          0, "exact diagonalization"});
  literature("kagome", tri_upper, tri_lower);
  literature("triangular", tri_upper, tri_lower);
  finish({"single tetrahedron", 3, tet_spec.ground_energy() / 6.0, tet_spec.max_energy() / 6.0, tet_upper, tet_lower,
          0, 0, "exact diagonalization"});
  literature("checkerboard", tet_upper, tet_lower);
  return rows;
}

std::vector<TemperatureComparisonRow> temperature_comparison(const std::vector<std::size_t>& dims,
                                                             const ComparisonOptions& options) {
  for (auto d : dims) require(d >= 3 && d <= 6, "temperature_comparison: d must lie in 3..6");
  std::vector<TemperatureComparisonRow> rows;
  for (auto d : dims) {
    TemperatureComparisonRow r;
    r.d = d;
    const double dd = static_cast<double>(d);
    r.t_maxent_closed = 1.0 / std::log(dd + 1.0);
    r.t_sym_closed = 1.0 / std::log((dd + 1.0) / (dd - 1.0));

    const auto hme = max_entangled_projector_hamiltonian(d);
    r.t_maxent = entanglement_gap_temperature(hme, seesaw_upper(hme, options.seesaw).energy);
    const auto hs = symmetric_projector_hamiltonian(d);
    r.t_sym = entanglement_gap_temperature(hs, seesaw_upper(hs, options.seesaw).energy);

    // CES: random N(0,1) product states, the best few refined by seesaw.
    const auto hc = ces_hamiltonian(d);
    const auto energies = parallel_map(options.product_samples, [&](std::size_t i) {
      return product_energy(hc, random_product_state(hc.dims(), options.seesaw.seed + 0x5eed, i));
    });
    std::vector<std::size_t> order(energies.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return energies[a] < energies[b]; });
    r.ces_esep_sampled = energies[order.front()];
    const std::size_t refine = std::min<std::size_t>(options.seesaw.restarts, order.size());
    const auto refined = parallel_map(refine, [&](std::size_t j) {
      return seesaw_descent(hc, random_product_state(hc.dims(), options.seesaw.seed + 0x5eed, order[j]), options.seesaw)
          .energy;
    });
    r.ces_esep_upper = std::min(r.ces_esep_sampled, *std::min_element(refined.begin(), refined.end()));
    const auto hes = seesaw_upper(hc, options.seesaw);
    r.ces_esep_upper = std::min(r.ces_esep_upper, hes.energy);
    r.ces_esep_lower = std::max(0.0, ppt_lower(hc, options.ppt).lower);
    r.t_ces_upper = entanglement_gap_temperature(hc, r.ces_esep_upper);
    r.t_ces_lower = entanglement_gap_temperature(hc, r.ces_esep_lower);
    rows.push_back(r);
  }
  return rows;
}

}  // namespace entgap
