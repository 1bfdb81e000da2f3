#include "entgap/entgap.h"

#include <cmath>
#include <cstring>
#include <exception>
#include <limits>
#include <new>
#include <string>

#include "entgap/error.hpp"
#include "entgap/io.hpp"
#include "entgap/lattice.hpp"
#include "entgap/models.hpp"
#include "entgap/separability.hpp"
#include "entgap/tables.hpp"
#include "entgap/thermo.hpp"
#include "entgap/twoqubit.hpp"
#include "entgap/xy_exact.hpp"

struct entgap_operator {
  entgap::HermitianOperator op;
};

struct entgap_lattice {
  entgap::LatticeSpec spec;
};

namespace {

thread_local std::string last_error;

const double kNaN = std::numeric_limits<double>::quiet_NaN();

entgap_status to_status(entgap::ErrorCode code) {
  switch (code) {
    case entgap::ErrorCode::InvalidArgument:
      return ENTGAP_INVALID_ARGUMENT;
    case entgap::ErrorCode::DimensionMismatch:
      return ENTGAP_DIMENSION;
    case entgap::ErrorCode::NotConverged:
      return ENTGAP_NOT_CONVERGED;
    case entgap::ErrorCode::Io:
      return ENTGAP_IO;
    case entgap::ErrorCode::NoSolution:
      return ENTGAP_NO_SOLUTION;
  }
  return ENTGAP_INTERNAL;
}

template <class F>
entgap_status guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const entgap::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return ENTGAP_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return ENTGAP_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return ENTGAP_INTERNAL;
  }
}

entgap_status null_arg(const char* what) {
  last_error = std::string("null argument: ") + what;
  return ENTGAP_INVALID_ARGUMENT;
}

#define ENTGAP_REQUIRE_ARG(p) \
  if (!(p)) return null_arg(#p)

entgap::GapOptions gap_options(const entgap_gap_options* o) {
  entgap::GapOptions g;
  if (!o) return g;
  entgap::require(o->restarts >= 1, "restarts must be >= 1");
  entgap::require(o->sdp_tol > 0.0, "sdp_tol must be positive");
  g.seesaw.restarts = o->restarts;
  g.seesaw.seed = o->seed;
  g.compute_ppt = o->compute_ppt != 0;
  g.ppt.gap_tol = o->sdp_tol;
  g.ppt.feasibility_tol = o->sdp_tol;
  g.ppt.max_side = o->ppt_max_side;
  g.eig.dense_cutoff = o->dense_cutoff;
  return g;
}

double or_nan(const std::optional<double>& v) { return v ? *v : kNaN; }

void copy_text(char* dst, std::size_t cap, const std::string& src) {
  std::snprintf(dst, cap, "%s", src.c_str());
}

}  // namespace

extern "C" {

const char* entgap_last_error(void) { return last_error.c_str(); }

const char* entgap_version(void) { return "0.1.0"; }

entgap_status entgap_model_create(const char* id, entgap_operator** out) {
  ENTGAP_REQUIRE_ARG(id);
  ENTGAP_REQUIRE_ARG(out);
  return guarded([&] {
    *out = new entgap_operator{entgap::model_from_id(id)};
    return ENTGAP_OK;
  });
}

entgap_status entgap_operator_from_json(const char* text, entgap_operator** out) {
  ENTGAP_REQUIRE_ARG(text);
  ENTGAP_REQUIRE_ARG(out);
  return guarded([&] {
    *out = new entgap_operator{entgap::operator_from_json(text)};
    return ENTGAP_OK;
  });
}

entgap_status entgap_operator_load(const char* path, entgap_operator** out) {
  ENTGAP_REQUIRE_ARG(path);
  ENTGAP_REQUIRE_ARG(out);
  return guarded([&] {
    *out = new entgap_operator{entgap::load_operator(path)};
    return ENTGAP_OK;
  });
}

entgap_status entgap_operator_save(const entgap_operator* op, const char* path) {
  ENTGAP_REQUIRE_ARG(op);
  ENTGAP_REQUIRE_ARG(path);
  return guarded([&] {
    entgap::save_operator(op->op, path);
    return ENTGAP_OK;
  });
}

entgap_status entgap_operator_to_json(const entgap_operator* op, char* buf, size_t cap, size_t* needed) {
  ENTGAP_REQUIRE_ARG(op);
  return guarded([&] {
    const std::string text = entgap::operator_to_json(op->op);
    if (needed) *needed = text.size() + 1;
    if (!buf || cap < text.size() + 1) {
      last_error = "buffer too small for operator JSON";
      return ENTGAP_BUFFER_TOO_SMALL;
    }
    std::memcpy(buf, text.c_str(), text.size() + 1);
    return ENTGAP_OK;
  });
}

void entgap_operator_free(entgap_operator* op) { delete op; }

entgap_status entgap_operator_side(const entgap_operator* op, size_t* side) {
  ENTGAP_REQUIRE_ARG(op);
  ENTGAP_REQUIRE_ARG(side);
  *side = op->op.side();
  return ENTGAP_OK;
}

entgap_status entgap_operator_dims(const entgap_operator* op, size_t* dims, size_t cap, size_t* n) {
  ENTGAP_REQUIRE_ARG(op);
  ENTGAP_REQUIRE_ARG(n);
  const auto& d = op->op.dims();
  *n = d.size();
  if (!dims || cap < d.size()) {
    last_error = "buffer too small for dims";
    return ENTGAP_BUFFER_TOO_SMALL;
  }
  std::copy(d.begin(), d.end(), dims);
  return ENTGAP_OK;
}

entgap_status entgap_operator_spectrum(const entgap_operator* op, double* eigenvalues, size_t cap, size_t* n,
                                       size_t* ground_degeneracy) {
  ENTGAP_REQUIRE_ARG(op);
  ENTGAP_REQUIRE_ARG(n);
  return guarded([&] {
    *n = op->op.side();
    if (!eigenvalues || cap < op->op.side()) {
      last_error = "buffer too small for spectrum";
      return ENTGAP_BUFFER_TOO_SMALL;
    }
    const auto s = entgap::eig(op->op);
    for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i) eigenvalues[i] = s.eigenvalues(i);
    if (ground_degeneracy) *ground_degeneracy = s.ground_degeneracy;
    return ENTGAP_OK;
  });
}

entgap_status entgap_lattice_create(const char* id, entgap_lattice** out) {
  ENTGAP_REQUIRE_ARG(id);
  ENTGAP_REQUIRE_ARG(out);
  return guarded([&] {
    *out = new entgap_lattice{entgap::lattice_from_id(id)};
    return ENTGAP_OK;
  });
}

void entgap_lattice_free(entgap_lattice* lat) { delete lat; }

entgap_status entgap_lattice_info(const entgap_lattice* lat, size_t* n_sites, size_t* n_bonds, int* bipartite) {
  ENTGAP_REQUIRE_ARG(lat);
  if (n_sites) *n_sites = lat->spec.n_sites;
  if (n_bonds) *n_bonds = lat->spec.bonds.size();
  if (bipartite) *bipartite = lat->spec.coloring.has_value() ? 1 : 0;
  return ENTGAP_OK;
}

void entgap_gap_options_default(entgap_gap_options* options) {
  if (!options) return;
  const entgap::GapOptions g;
  options->restarts = g.seesaw.restarts;
  options->seed = g.seesaw.seed;
  options->compute_ppt = 1;
  options->sdp_tol = g.ppt.gap_tol;
  options->ppt_max_side = g.ppt.max_side;
  options->dense_cutoff = g.eig.dense_cutoff;
}

entgap_status entgap_gap(const entgap_operator* op, const entgap_gap_options* options, entgap_gap_report* report) {
  ENTGAP_REQUIRE_ARG(op);
  ENTGAP_REQUIRE_ARG(report);
  return guarded([&] {
    const auto r = entgap::entanglement_gap(op->op, gap_options(options));
    *report = {r.e0,
               r.e_max,
               r.sep.lower,
               r.sep.upper,
               r.gap_lower,
               r.gap_upper,
               r.scaled_gap_lower,
               r.scaled_gap_upper,
               r.witness_offset,
               r.sep.lower_from_ppt ? 1 : 0,
               r.sep.ppt_converged ? 1 : 0};
    if (r.sep.lower_from_ppt && !r.sep.ppt_converged) {
      last_error = "PPT program did not reach tolerance; the certified bound of the best iterate is reported";
      return ENTGAP_NOT_CONVERGED;
    }
    return ENTGAP_OK;
  });
}

entgap_status entgap_lattice_gap(const entgap_lattice* lat, const entgap_operator* coupling,
                                 const entgap_gap_options* options, entgap_gap_report* report) {
  ENTGAP_REQUIRE_ARG(lat);
  ENTGAP_REQUIRE_ARG(coupling);
  ENTGAP_REQUIRE_ARG(report);
  return guarded([&] {
    const auto r = entgap::lattice_gap(lat->spec, coupling->op, gap_options(options));
    *report = {r.e0_per_bond,
               r.e_max_per_bond,
               r.esep_lower_per_bond,
               r.esep_upper_per_bond,
               r.gap_lower_per_bond,
               r.gap_upper_per_bond,
               r.scaled_gap_lower,
               r.scaled_gap_upper,
               r.esep_upper_per_bond,
               1,
               1};
    return ENTGAP_OK;
  });
}

entgap_status entgap_thermal_energy(const entgap_operator* op, double temperature, double* energy) {
  ENTGAP_REQUIRE_ARG(op);
  ENTGAP_REQUIRE_ARG(energy);
  return guarded([&] {
    *energy = entgap::thermal_energy(op->op, temperature);
    return ENTGAP_OK;
  });
}

entgap_status entgap_gap_temperature(const entgap_operator* op, double e_sep, double bisect_tol, double* temperature,
                                     double* scaled) {
  ENTGAP_REQUIRE_ARG(op);
  return guarded([&] {
    entgap::require(bisect_tol >= 0.0, "bisect_tol must be non-negative");
    entgap::TemperatureOptions o;
    o.t_tol = bisect_tol;
    const auto s = entgap::eig(op->op);
    const auto t = entgap::entanglement_gap_temperature(s.eigenvalues, e_sep, o);
    if (temperature) *temperature = or_nan(t);
    const double etot = s.max_energy() - s.ground_energy();
    if (scaled) *scaled = t && etot > 0 ? *t / etot : kNaN;
    if (!t) {
      last_error = "no finite entanglement-gap temperature: e_sep must lie strictly between E0 and the mean energy";
      return ENTGAP_NO_SOLUTION;
    }
    return ENTGAP_OK;
  });
}

entgap_status entgap_thermal_curve(const entgap_operator* op, const double* temperatures, size_t n, double* energies,
                                   int* ppt) {
  ENTGAP_REQUIRE_ARG(op);
  ENTGAP_REQUIRE_ARG(temperatures);
  ENTGAP_REQUIRE_ARG(energies);
  return guarded([&] {
    const auto curve =
        entgap::thermal_curve(op->op, std::vector<double>(temperatures, temperatures + n), std::nullopt);
    for (std::size_t i = 0; i < n; ++i) {
      energies[i] = curve.samples[i].U;
      if (ppt) ppt[i] = curve.samples[i].ppt ? 1 : 0;
    }
    return ENTGAP_OK;
  });
}

void entgap_window_options_default(entgap_window_options* options) {
  if (!options) return;
  const entgap::WindowOptions w;
  options->t_min = w.t_min;
  options->t_max = w.t_max;
  options->grid = w.grid;
  options->refine_tol = w.refine_tol;
}

entgap_status entgap_window(const entgap_operator* op, double e_sep_ref, const entgap_window_options* options,
                            double* t_low, double* t_high, int* found) {
  ENTGAP_REQUIRE_ARG(op);
  ENTGAP_REQUIRE_ARG(t_low);
  ENTGAP_REQUIRE_ARG(t_high);
  ENTGAP_REQUIRE_ARG(found);
  return guarded([&] {
    entgap::WindowOptions w;
    if (options) {
      w.t_min = options->t_min;
      w.t_max = options->t_max;
      w.grid = options->grid;
      w.refine_tol = options->refine_tol;
    }
    entgap::require(w.refine_tol > 0.0, "refine_tol must be positive");
    const auto win = entgap::bound_entanglement_window(op->op, e_sep_ref, w);
    *found = win ? 1 : 0;
    *t_low = win ? win->t_low : kNaN;
    *t_high = win ? win->t_high : kNaN;
    return ENTGAP_OK;
  });
}

entgap_status entgap_table1(size_t k_max, const entgap_gap_options* options, entgap_table1_row* rows, size_t cap,
                            size_t* n) {
  ENTGAP_REQUIRE_ARG(n);
  return guarded([&] {
    *n = k_max;
    if (!rows || cap < k_max) {
      last_error = "buffer too small for table1";
      return ENTGAP_BUFFER_TOO_SMALL;
    }
    const auto t = entgap::table1(k_max, gap_options(options).seesaw);
    for (std::size_t i = 0; i < t.size(); ++i)
      rows[i] = {t[i].k, t[i].e0_per_bond, t[i].e0_exact_per_bond, t[i].e_max_per_bond, t[i].esep_per_bond,
                 t[i].gap_per_bond, t[i].scaled_gap};
    return ENTGAP_OK;
  });
}

entgap_status entgap_table2(const entgap_gap_options* options, entgap_table2_row* rows, size_t cap, size_t* n) {
  ENTGAP_REQUIRE_ARG(n);
  return guarded([&] {
    const std::size_t count = entgap::reference_energy_table().size() + 4;
    *n = count;
    if (!rows || cap < count) {
      last_error = "buffer too small for table2";
      return ENTGAP_BUFFER_TOO_SMALL;
    }
    entgap::Table2Options o;
    o.seesaw = gap_options(options).seesaw;
    const auto t = entgap::table2(o);
    for (std::size_t i = 0; i < t.size(); ++i) {
      auto& r = rows[i];
      copy_text(r.lattice, sizeof r.lattice, t[i].lattice);
      r.coordination = t[i].coordination;
      r.e0_per_bond = t[i].e0_per_bond;
      r.e_max_per_bond = t[i].e_max_per_bond;
      r.esep_per_bond = t[i].esep_per_bond;
      r.esep_lower_per_bond = t[i].esep_lower_per_bond;
      r.gap_per_bond = t[i].gap_per_bond;
      r.scaled_gap = t[i].scaled_gap;
      copy_text(r.e0_source, sizeof r.e0_source, t[i].e0_source);
    }
    return ENTGAP_OK;
  });
}

entgap_status entgap_xy_scan(const double* gammas, size_t ng, const double* lambdas, size_t nl,
                             entgap_xy_point* out) {
  ENTGAP_REQUIRE_ARG(gammas);
  ENTGAP_REQUIRE_ARG(lambdas);
  ENTGAP_REQUIRE_ARG(out);
  return guarded([&] {
    const auto pts = entgap::xy_gap_surface(std::vector<double>(gammas, gammas + ng),
                                            std::vector<double>(lambdas, lambdas + nl));
    for (std::size_t i = 0; i < pts.size(); ++i)
      out[i] = {pts[i].gamma, pts[i].lambda, pts[i].e_sep_bond, pts[i].e0_site,
                pts[i].e_max_site, pts[i].gap_bond, pts[i].scaled_gap};
    return ENTGAP_OK;
  });
}

entgap_status entgap_search_2q(size_t samples, uint64_t seed, int singlet_ground, entgap_search_result* result) {
  ENTGAP_REQUIRE_ARG(result);
  return guarded([&] {
    entgap::SearchOptions o;
    o.samples = samples;
    o.seed = seed;
    o.singlet_ground = singlet_ground != 0;
    const auto r = entgap::random_search(o);
    result->max_t = r.max_t;
    result->e1 = r.e1;
    result->e2 = r.e2;
    copy_text(result->basis_hash, sizeof result->basis_hash, r.basis_hash);
    result->argmax_index = r.argmax_index;
    result->n_samples = r.n_samples;
    result->n_skipped_zero_gap = r.n_skipped_zero_gap;
    result->n_crosschecked = r.n_crosschecked;
    result->max_crosscheck_discrepancy = r.max_crosscheck_discrepancy;
    return ENTGAP_OK;
  });
}

entgap_status entgap_compare_temps(const size_t* dims, size_t n, const entgap_gap_options* options,
                                   size_t product_samples, entgap_temperature_row* rows) {
  ENTGAP_REQUIRE_ARG(dims);
  ENTGAP_REQUIRE_ARG(rows);
  return guarded([&] {
    entgap::ComparisonOptions o;
    const auto g = gap_options(options);
    o.seesaw = g.seesaw;
    o.ppt = g.ppt;
    if (product_samples > 0) o.product_samples = product_samples;
    const auto t = entgap::temperature_comparison(std::vector<std::size_t>(dims, dims + n), o);
    for (std::size_t i = 0; i < t.size(); ++i)
      rows[i] = {t[i].d,           or_nan(t[i].t_maxent), t[i].t_maxent_closed,  or_nan(t[i].t_sym),
                 t[i].t_sym_closed, t[i].ces_esep_lower,  t[i].ces_esep_upper,   or_nan(t[i].t_ces_lower),
                 or_nan(t[i].t_ces_upper)};
    return ENTGAP_OK;
  });
}

}  // extern "C"
