#pragma once

// JSON interchange for operators and lattices.
//   operator: {"dims": [2,2], "matrix": [[[re,im], ...], ...]}  (outer index = row)
//   lattice:  {"n_sites": 4, "local_dim": 2, "bonds": [[0,1],[1,2],[2,3],[3,0]]}

#include <string>

#include "entgap/lattice.hpp"
#include "entgap/operator.hpp"

namespace entgap {

HermitianOperator operator_from_json(const std::string& text);
std::string operator_to_json(const HermitianOperator& op);

HermitianOperator load_operator(const std::string& path);
void save_operator(const HermitianOperator& op, const std::string& path);

LatticeSpec lattice_from_json(const std::string& text);
std::string lattice_to_json(const LatticeSpec& spec);
LatticeSpec load_lattice(const std::string& path);

/// Shortest decimal text that round-trips the double ("%.17g").
std::string format_double(double x);

}  // namespace entgap
