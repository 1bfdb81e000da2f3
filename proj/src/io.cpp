#include "entgap/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "entgap/error.hpp"

namespace entgap {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), "cannot open '" + path + "' for reading", ErrorCode::Io);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::InvalidArgument, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

HermitianOperator operator_from_json(const std::string& text) {
  const json j = parse(text);
  require(j.is_object() && j.contains("dims") && j.contains("matrix"), "operator JSON needs 'dims' and 'matrix'");
  Dims dims;
  try {
    dims = j.at("dims").get<Dims>();
    const auto& rows = j.at("matrix");
    require(rows.is_array(), "'matrix' must be an array of rows");
    const auto n = static_cast<Eigen::Index>(rows.size());
    Matrix m(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
      const auto& row = rows[static_cast<std::size_t>(r)];
      require(row.is_array() && static_cast<Eigen::Index>(row.size()) == n, "operator matrix must be square",
              ErrorCode::DimensionMismatch);
      for (Eigen::Index c = 0; c < n; ++c) {
        const auto& z = row[static_cast<std::size_t>(c)];
        require(z.is_array() && z.size() == 2, "matrix entries must be [re, im] pairs");
        m(r, c) = Complex(z[0].get<double>(), z[1].get<double>());
      }
    }
    return {std::move(dims), std::move(m)};
  } catch (const json::exception& e) {
    fail(ErrorCode::InvalidArgument, std::string("invalid operator JSON: ") + e.what());
  }
}

std::string operator_to_json(const HermitianOperator& op) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < op.matrix().rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < op.matrix().cols(); ++c)
      row.push_back({op.matrix()(r, c).real(), op.matrix()(r, c).imag()});
    rows.push_back(std::move(row));
  }
  json j;
  j["dims"] = op.dims();
  j["matrix"] = std::move(rows);
  return j.dump();
}

HermitianOperator load_operator(const std::string& path) { return operator_from_json(read_file(path)); }

void save_operator(const HermitianOperator& op, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  require(static_cast<bool>(out), "cannot open '" + path + "' for writing", ErrorCode::Io);
  out << operator_to_json(op) << '\n';
  require(static_cast<bool>(out), "write to '" + path + "' failed", ErrorCode::Io);
}

LatticeSpec lattice_from_json(const std::string& text) {
  const json j = parse(text);
  LatticeSpec spec;
  try {
    spec.n_sites = j.at("n_sites").get<std::size_t>();
    spec.local_dim = j.value("local_dim", std::size_t{2});
    for (const auto& b : j.at("bonds")) {
      require(b.is_array() && b.size() == 2, "bonds must be [i, j] pairs");
      auto i = b[0].get<std::size_t>(), k = b[1].get<std::size_t>();
      require(i != k, "bond endpoints must be distinct");
      if (i > k) std::swap(i, k);
      spec.bonds.emplace_back(i, k);
    }
    if (j.contains("coloring")) spec.coloring = j.at("coloring").get<std::vector<int>>();
  } catch (const json::exception& e) {
    fail(ErrorCode::InvalidArgument, std::string("invalid lattice JSON: ") + e.what());
  }
  validate(spec);
  if (!spec.coloring) spec.coloring = find_bipartition(spec);
  return spec;
}

std::string lattice_to_json(const LatticeSpec& spec) {
  json j;
  j["n_sites"] = spec.n_sites;
  j["local_dim"] = spec.local_dim;
  json bonds = json::array();
  for (const auto& [a, b] : spec.bonds) bonds.push_back({a, b});
  j["bonds"] = std::move(bonds);
  if (spec.coloring) j["coloring"] = *spec.coloring;
  return j.dump();
}

LatticeSpec load_lattice(const std::string& path) { return lattice_from_json(read_file(path)); }

}  // namespace entgap
