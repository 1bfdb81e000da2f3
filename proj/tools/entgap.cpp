// entgap command-line front end. Talks to the library only through the C API.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "entgap/entgap.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNotConverged = 3;

// Thrown for anything the user can fix; carries the offending flag.
struct UsageError {
  std::string flag;
  std::string message;
};

struct InternalError {
  std::string message;
};

struct RunConfig {
  std::uint64_t seed = 0;
  std::size_t restarts = 64;
  double sdp_tol = 1e-9;
  double bisect_tol = 0.0;
  std::size_t dense_cutoff = 4096;
  std::string output = "pretty";
  std::string out_path;
};

// Maps a library status onto the CLI contract. Returns true for
// non-convergence so the caller can still emit certified partial results.
bool check(entgap_status status, const std::string& flag) {
  switch (status) {
    case ENTGAP_OK:
      return false;
    case ENTGAP_NOT_CONVERGED:
      return true;
    case ENTGAP_INVALID_ARGUMENT:
    case ENTGAP_DIMENSION:
    case ENTGAP_IO:
    case ENTGAP_NO_SOLUTION:
      throw UsageError{flag, entgap_last_error()};
    default:
      throw InternalError{entgap_last_error()};
  }
}

Json number(double v) {
  if (std::isnan(v)) return nullptr;
  return v;
}

std::string shortest(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::string cell(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_boolean()) return v.get<bool>() ? "1" : "0";
  if (v.is_number_float()) return shortest(v.get<double>());
  if (v.is_number()) return v.dump();
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string pretty_cell(const Json& v) {
  if (v.is_null()) return "-";
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  return cell(v);
}

// CSV: the "rows" table when present, otherwise one row of the scalars.
std::string render_csv(const Json& doc) {
  std::ostringstream os;
  auto emit = [&](const Json& row, bool header) {
    bool first = true;
    for (auto it = row.begin(); it != row.end(); ++it) {
      if (it.value().is_structured()) continue;
      os << (first ? "" : ",") << (header ? it.key() : cell(it.value()));
      first = false;
    }
    os << '\n';
  };
  if (doc.contains("rows")) {
    const auto& rows = doc["rows"];
    if (!rows.empty()) emit(rows[0], true);
    for (const auto& r : rows) emit(r, false);
  } else {
    Json flat = doc;
    flat.erase("schema");
    emit(flat, true);
    emit(flat, false);
  }
  return os.str();
}

// Pretty output is generated from the same document as the machine formats,
// so it can never show a number they lack.
std::string render_pretty(const Json& doc) {
  std::ostringstream os;
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (it.key() == "schema" || it.key() == "rows") continue;
    os << it.key() << ": " << pretty_cell(it.value()) << '\n';
  }
  if (!doc.contains("rows") || doc["rows"].empty()) return os.str();
  const auto& rows = doc["rows"];
  std::vector<std::string> keys;
  for (auto it = rows[0].begin(); it != rows[0].end(); ++it) keys.push_back(it.key());
  std::vector<std::size_t> width(keys.size());
  for (std::size_t c = 0; c < keys.size(); ++c) {
    width[c] = keys[c].size();
    for (const auto& r : rows) width[c] = std::max(width[c], pretty_cell(r[keys[c]]).size());
  }
  auto line = [&](auto&& text) {
    for (std::size_t c = 0; c < keys.size(); ++c) {
      const std::string t = text(c);
      os << (c ? "  " : "") << t << std::string(width[c] - t.size(), ' ');
    }
    os << '\n';
  };
  line([&](std::size_t c) { return keys[c]; });
  for (const auto& r : rows) line([&](std::size_t c) { return pretty_cell(r[keys[c]]); });
  return os.str();
}

void emit(const RunConfig& cfg, Json doc) {
  std::string text;
  if (cfg.output == "json")
    text = doc.dump(2) + "\n";
  else if (cfg.output == "csv")
    text = render_csv(doc);
  else
    text = render_pretty(doc);
  if (cfg.out_path.empty()) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream f(cfg.out_path, std::ios::binary);
  if (!f) throw UsageError{"--out", "cannot open '" + cfg.out_path + "' for writing"};
  f << text;
  if (!f) throw UsageError{"--out", "write to '" + cfg.out_path + "' failed"};
}

entgap_gap_options gap_options(const RunConfig& cfg) {
  entgap_gap_options o;
  entgap_gap_options_default(&o);
  o.restarts = cfg.restarts;
  o.seed = cfg.seed;
  o.sdp_tol = cfg.sdp_tol;
  o.dense_cutoff = cfg.dense_cutoff;
  return o;
}

Json header(const char* command) {
  Json doc;
  doc["schema"] = 1;
  doc["command"] = command;
  return doc;
}

struct Operator {
  entgap_operator* h = nullptr;
  explicit Operator(const std::string& id) { check(entgap_model_create(id.c_str(), &h), "--model"); }
  ~Operator() { entgap_operator_free(h); }
  Operator(const Operator&) = delete;
  Operator& operator=(const Operator&) = delete;
};

struct Lattice {
  entgap_lattice* l = nullptr;
  explicit Lattice(const std::string& id) { check(entgap_lattice_create(id.c_str(), &l), "--lattice"); }
  ~Lattice() { entgap_lattice_free(l); }
  Lattice(const Lattice&) = delete;
  Lattice& operator=(const Lattice&) = delete;
};

// T_E and t_E for one E_sep value; NaN when no finite temperature exists.
std::pair<double, double> gap_temperature(const Operator& op, double e_sep, const RunConfig& cfg) {
  double t = NAN, scaled = NAN;
  const auto status = entgap_gap_temperature(op.h, e_sep, cfg.bisect_tol, &t, &scaled);
  if (status != ENTGAP_NO_SOLUTION) check(status, "--model");
  return {t, scaled};
}

// Seesaw-only E_sep estimate used as the default reference of temp/window.
double seesaw_esep(const Operator& op, const RunConfig& cfg) {
  auto o = gap_options(cfg);
  o.compute_ppt = 0;
  entgap_gap_report r;
  check(entgap_gap(op.h, &o, &r), "--model");
  return r.e_sep_upper;
}

// "a:b:step" (inclusive) or a single value.
std::vector<double> parse_grid(const std::string& text, const std::string& flag) {
  auto real = [&](const std::string& s) {
    double v = 0.0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size() || !std::isfinite(v))
      throw UsageError{flag, "malformed number '" + s + "' in grid '" + text + "'"};
    return v;
  };
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  if (parts.size() == 1) return {real(parts[0])};
  if (parts.size() != 3) throw UsageError{flag, "grid must be 'start:stop:step' or a single value, got '" + text + "'"};
  const double a = real(parts[0]), b = real(parts[1]), step = real(parts[2]);
  if (!(step > 0.0)) throw UsageError{flag, "grid step must be positive"};
  if (b < a) throw UsageError{flag, "grid stop must not be below start"};
  const double span = (b - a) / step;
  if (span > 1e6) throw UsageError{flag, "grid has more than a million points"};
  const auto n = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = a + step * double(i);
  return g;
}

std::vector<std::size_t> parse_dims(const std::string& text) {
  std::vector<std::size_t> dims;
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ',');) {
    std::size_t v = 0;
    auto [end, ec] = std::from_chars(p.data(), p.data() + p.size(), v);
    if (ec != std::errc() || end != p.data() + p.size() || p.empty())
      throw UsageError{"--dims", "malformed dimension '" + p + "'"};
    dims.push_back(v);
  }
  if (dims.empty()) throw UsageError{"--dims", "no dimensions given"};
  return dims;
}

int cmd_gap(const RunConfig& cfg, const std::string& model, const std::string& lattice, bool no_ppt) {
  Operator op(model);
  auto o = gap_options(cfg);
  if (no_ppt) o.compute_ppt = 0;
  entgap_gap_report r;
  bool unconverged = false;
  Json doc = header("gap");
  doc["model"] = model;
  if (lattice.empty()) {
    unconverged = check(entgap_gap(op.h, &o, &r), "--model");
    doc["lattice"] = nullptr;
  } else {
    Lattice lat(lattice);
    unconverged = check(entgap_lattice_gap(lat.l, op.h, &o, &r), "--lattice");
    doc["lattice"] = lattice;
  }
  doc["per_bond"] = !lattice.empty();
  doc["e0"] = r.e0;
  doc["e_max"] = r.e_max;
  doc["e_sep_lower"] = r.e_sep_lower;
  doc["e_sep_upper"] = r.e_sep_upper;
  doc["gap_lower"] = r.gap_lower;
  doc["gap_upper"] = r.gap_upper;
  doc["scaled_gap_lower"] = r.scaled_gap_lower;
  doc["scaled_gap_upper"] = r.scaled_gap_upper;
  doc["witness_offset"] = r.witness_offset;
  doc["lower_from_ppt"] = r.lower_from_ppt != 0;
  doc["ppt_converged"] = r.ppt_converged != 0;
  if (lattice.empty()) {
    // U(T) is increasing, so the E_sep bracket maps to a T_E bracket.
    const auto lo = gap_temperature(op, r.e_sep_lower, cfg);
    const auto hi = gap_temperature(op, r.e_sep_upper, cfg);
    doc["t_gap_lower"] = number(lo.first);
    doc["t_gap_upper"] = number(hi.first);
    doc["t_gap_scaled_lower"] = number(lo.second);
    doc["t_gap_scaled_upper"] = number(hi.second);
  }
  emit(cfg, doc);
  if (unconverged) std::cerr << "entgap: " << entgap_last_error() << '\n';
  return unconverged ? kExitNotConverged : kExitOk;
}

int cmd_temp(const RunConfig& cfg, const std::string& model, double t_min, double t_max, std::size_t points,
             std::optional<double> e_sep) {
  if (!(t_min > 0.0)) throw UsageError{"--t-min", "must be positive"};
  if (!(t_max > t_min)) throw UsageError{"--t-max", "must exceed --t-min"};
  if (points < 2) throw UsageError{"--points", "need at least two temperatures"};
  Operator op(model);
  const double esep = e_sep ? *e_sep : seesaw_esep(op, cfg);
  std::vector<double> temps(points), energies(points);
  const double a = std::log(t_min), b = std::log(t_max);
  for (std::size_t i = 0; i < points; ++i) temps[i] = std::exp(a + (b - a) * double(i) / double(points - 1));
  temps.front() = t_min;
  temps.back() = t_max;
  std::vector<int> ppt(points);
  check(entgap_thermal_curve(op.h, temps.data(), points, energies.data(), ppt.data()), "--model");
  const auto [t, scaled] = gap_temperature(op, esep, cfg);

  Json doc = header("temp");
  doc["model"] = model;
  doc["e_sep"] = esep;
  doc["t_gap"] = number(t);
  doc["t_gap_scaled"] = number(scaled);
  Json rows = Json::array();
  for (std::size_t i = 0; i < points; ++i) rows.push_back({{"T", temps[i]}, {"U", energies[i]}, {"ppt", ppt[i]}});
  doc["rows"] = rows;
  emit(cfg, doc);
  return kExitOk;
}

int cmd_window(const RunConfig& cfg, const std::string& model, std::optional<double> e_sep, double t_min,
               double t_max, std::size_t grid, double refine_tol) {
  if (!(t_min > 0.0)) throw UsageError{"--t-min", "must be positive"};
  if (!(t_max > t_min)) throw UsageError{"--t-max", "must exceed --t-min"};
  if (grid < 2) throw UsageError{"--grid", "need at least two grid points"};
  if (!(refine_tol > 0.0)) throw UsageError{"--refine-tol", "must be positive"};
  Operator op(model);
  const double esep = e_sep ? *e_sep : seesaw_esep(op, cfg);
  entgap_window_options w;
  entgap_window_options_default(&w);
  w.t_min = t_min;
  w.t_max = t_max;
  w.grid = grid;
  w.refine_tol = refine_tol;
  double lo = NAN, hi = NAN;
  int found = 0;
  check(entgap_window(op.h, esep, &w, &lo, &hi, &found), "--model");
  Json doc = header("window");
  doc["model"] = model;
  doc["e_sep_ref"] = esep;
  doc["found"] = found != 0;
  doc["t_low"] = number(lo);
  doc["t_high"] = number(hi);
  emit(cfg, doc);
  return kExitOk;
}

int cmd_table1(const RunConfig& cfg, std::size_t k_max) {
  if (k_max < 1) throw UsageError{"--k-max", "must be at least 1"};
  const auto o = gap_options(cfg);
  std::vector<entgap_table1_row> rows(k_max);
  std::size_t n = 0;
  check(entgap_table1(k_max, &o, rows.data(), rows.size(), &n), "--k-max");
  Json doc = header("table1");
  Json out = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& r = rows[i];
    out.push_back({{"k", r.k},
                   {"e0_per_bond", r.e0_per_bond},
                   {"e0_exact_per_bond", r.e0_exact_per_bond},
                   {"e_max_per_bond", r.e_max_per_bond},
                   {"esep_per_bond", r.esep_per_bond},
                   {"gap_per_bond", r.gap_per_bond},
                   {"scaled_gap", r.scaled_gap}});
  }
  doc["rows"] = out;
  emit(cfg, doc);
  return kExitOk;
}

int cmd_table2(const RunConfig& cfg) {
  const auto o = gap_options(cfg);
  std::size_t n = 0;
  entgap_table2(&o, nullptr, 0, &n);
  std::vector<entgap_table2_row> rows(n);
  check(entgap_table2(&o, rows.data(), rows.size(), &n), "--restarts");
  Json doc = header("table2");
  Json out = Json::array();
  for (const auto& r : rows)
    out.push_back({{"lattice", r.lattice},
                   {"coordination", r.coordination},
                   {"e0_per_bond", r.e0_per_bond},
                   {"e_max_per_bond", r.e_max_per_bond},
                   {"esep_per_bond", r.esep_per_bond},
                   {"esep_lower_per_bond", r.esep_lower_per_bond},
                   {"gap_per_bond", r.gap_per_bond},
                   {"scaled_gap", r.scaled_gap},
                   {"e0_source", r.e0_source}});
  doc["rows"] = out;
  emit(cfg, doc);
  return kExitOk;
}

int cmd_xy_scan(const RunConfig& cfg, const std::string& gamma, const std::string& lambda) {
  const auto gs = parse_grid(gamma, "--gamma");
  const auto ls = parse_grid(lambda, "--lambda");
  std::vector<entgap_xy_point> pts(gs.size() * ls.size());
  check(entgap_xy_scan(gs.data(), gs.size(), ls.data(), ls.size(), pts.data()), "--gamma");
  Json doc = header("xy-scan");
  Json out = Json::array();
  for (const auto& p : pts)
    out.push_back({{"gamma", p.gamma},
                   {"lambda", p.lambda},
                   {"e_sep", p.e_sep},
                   {"e0", p.e0},
                   {"e_max", p.e_max},
                   {"gap", p.gap},
                   {"scaled_gap", p.scaled_gap}});
  doc["rows"] = out;
  emit(cfg, doc);
  return kExitOk;
}

int cmd_search_2q(const RunConfig& cfg, std::size_t samples, bool singlet_ground) {
  if (samples < 1) throw UsageError{"--samples", "must be at least 1"};
  entgap_search_result r;
  check(entgap_search_2q(samples, cfg.seed, singlet_ground ? 1 : 0, &r), "--samples");
  Json doc = header("search-2q");
  doc["samples"] = r.n_samples;
  doc["seed"] = cfg.seed;
  doc["singlet_ground"] = singlet_ground;
  doc["max_t"] = r.max_t;
  doc["reference_t"] = 1.0 / std::log(3.0);
  doc["e1"] = r.e1;
  doc["e2"] = r.e2;
  doc["basis_hash"] = r.basis_hash;
  doc["eigenbasis_distribution"] = "haar";
  doc["argmax_index"] = r.argmax_index;
  doc["n_skipped_zero_gap"] = r.n_skipped_zero_gap;
  doc["n_crosschecked"] = r.n_crosschecked;
  doc["max_crosscheck_discrepancy"] = r.max_crosscheck_discrepancy;
  emit(cfg, doc);
  return kExitOk;
}

int cmd_compare_temps(const RunConfig& cfg, const std::string& dims_text, std::size_t product_samples) {
  const auto dims = parse_dims(dims_text);
  for (auto d : dims)
    if (d < 3 || d > 10) throw UsageError{"--dims", "dimensions must lie in 3..10, got " + std::to_string(d)};
  if (product_samples < 1) throw UsageError{"--product-samples", "must be at least 1"};
  const auto o = gap_options(cfg);
  std::vector<entgap_temperature_row> rows(dims.size());
  check(entgap_compare_temps(dims.data(), dims.size(), &o, product_samples, rows.data()), "--dims");
  Json doc = header("compare-temps");
  Json out = Json::array();
  for (const auto& r : rows)
    out.push_back({{"d", r.d},
                   {"t_maxent", number(r.t_maxent)},
                   {"t_maxent_closed", r.t_maxent_closed},
                   {"t_sym", number(r.t_sym)},
                   {"t_sym_closed", r.t_sym_closed},
                   {"ces_esep_lower", r.ces_esep_lower},
                   {"ces_esep_upper", r.ces_esep_upper},
                   {"t_ces_lower", number(r.t_ces_lower)},
                   {"t_ces_upper", number(r.t_ces_upper)}});
  doc["rows"] = out;
  emit(cfg, doc);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement gaps, separable-energy brackets and entanglement-gap temperatures"};
  app.set_version_flag("--version", std::string(entgap_version()));
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value file with defaults for the global options; flags win");
  app.allow_config_extras(CLI::config_extras_mode::error);

  RunConfig cfg;
  bool as_json = false, as_csv = false;
  app.add_option("--seed", cfg.seed, "Random seed");
  app.add_option("--restarts", cfg.restarts, "Seesaw restarts")->check(CLI::PositiveNumber);
  app.add_option("--sdp-tol", cfg.sdp_tol, "PPT program tolerance")->check(CLI::PositiveNumber);
  app.add_option("--bisect-tol", cfg.bisect_tol, "Temperature bisection tolerance (0: machine precision)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--dense-cutoff", cfg.dense_cutoff, "Largest side handled by dense diagonalization")
      ->check(CLI::PositiveNumber);
  app.add_option("--output", cfg.output, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
  auto* json_flag = app.add_flag("--json", as_json, "Same as --output json");
  app.add_flag("--csv", as_csv, "Same as --output csv")->excludes(json_flag);
  app.add_option("--out", cfg.out_path, "Write output to this file instead of stdout");

  std::string model, lattice, gamma = "0:1:0.25", lambda = "0:2:0.25", dims = "3,4,5,6";
  bool no_ppt = false, singlet_ground = false;
  std::optional<double> e_sep;
  double t_min = 0.01, t_max = 10.0, refine_tol = 1e-4;
  std::size_t points = 200, grid = 400, k_max = 6, samples = 100000, product_samples = 4096;

  auto* gap = app.add_subcommand("gap", "Entanglement gap of a model, optionally tiled on a lattice");
  gap->add_option("--model", model, "Model id or file:PATH")->required();
  gap->add_option("--lattice", lattice, "Lattice id (star:K, ring:N, chain:N, complete:N, triangle, tetrahedron)");
  gap->add_flag("--no-ppt", no_ppt, "Skip the PPT lower bound");

  auto* temp = app.add_subcommand("temp", "Thermal energy curve, PPT flags and T_E");
  temp->add_option("--model", model, "Model id or file:PATH")->required();
  temp->add_option("--e-sep", e_sep, "Separable energy (default: seesaw estimate)");
  temp->add_option("--t-min", t_min, "Lowest temperature");
  temp->add_option("--t-max", t_max, "Highest temperature");
  temp->add_option("--points", points, "Number of log-spaced temperatures");

  auto* window = app.add_subcommand("window", "Temperature window of PPT thermal states below E_sep");
  window->add_option("--model", model, "Model id or file:PATH")->required();
  window->add_option("--e-sep", e_sep, "Reference separable energy (default: seesaw estimate)");
  window->add_option("--t-min", t_min, "Lowest grid temperature");
  window->add_option("--t-max", t_max, "Highest grid temperature");
  window->add_option("--grid", grid, "Number of log-spaced grid temperatures");
  window->add_option("--refine-tol", refine_tol, "Endpoint bisection tolerance");

  auto* table1 = app.add_subcommand("table1", "Heisenberg star graphs");
  table1->add_option("--k-max", k_max, "Largest star");

  auto* table2 = app.add_subcommand("table2", "Heisenberg lattices and clusters");

  auto* xy = app.add_subcommand("xy-scan", "Gap surface of the XY chain");
  xy->add_option("--gamma", gamma, "Anisotropy grid start:stop:step");
  xy->add_option("--lambda", lambda, "Field grid start:stop:step");

  auto* search = app.add_subcommand("search-2q", "Random search over two-qubit Hamiltonians for the largest t_E");
  search->add_option("--samples", samples, "Number of random Hamiltonians");
  search->add_flag("--singlet-ground", singlet_ground, "Restrict to singlet ground states");

  auto* compare = app.add_subcommand("compare-temps", "T_E of maximal-gap, symmetric and CES Hamiltonians");
  compare->add_option("--dims", dims, "Comma-separated local dimensions");
  compare->add_option("--product-samples", product_samples, "Random product states for the CES upper bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "entgap: " << e.what() << '\n';
    return kExitUsage;
  }
  if (as_json) cfg.output = "json";
  if (as_csv) cfg.output = "csv";

  try {
    if (*gap) return cmd_gap(cfg, model, lattice, no_ppt);
    if (*temp) return cmd_temp(cfg, model, t_min, t_max, points, e_sep);
    if (*window) return cmd_window(cfg, model, e_sep, t_min, t_max, grid, refine_tol);
    if (*table1) return cmd_table1(cfg, k_max);
    if (*table2) return cmd_table2(cfg);
    if (*xy) return cmd_xy_scan(cfg, gamma, lambda);
    if (*search) return cmd_search_2q(cfg, samples, singlet_ground);
    if (*compare) return cmd_compare_temps(cfg, dims, product_samples);
  } catch (const UsageError& e) {
    std::cerr << "entgap: " << e.flag << ": " << e.message << '\n';
    return kExitUsage;
  } catch (const InternalError& e) {
    std::cerr << "entgap: internal error: " << e.message << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}
