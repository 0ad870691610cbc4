#pragma once

#include <string>

#include <json.hpp>

#include "conley/chain_complex.hpp"
#include "conley/connection_solver.hpp"
#include "conley/morse_model.hpp"
#include "conley/zigzag.hpp"

namespace conley::io {

using json = nlohmann::json;

/// Read and parse a JSON document; throws ParseError with the file name and
/// position on failure.
json load_json_file(const std::string& path);

// Matrices serialize as arrays of 0/1 rows; the expected shape disambiguates
// empty data.
Gf2Matrix matrix_from_json(const json& j, int rows, int cols, const std::string& what);
json matrix_to_json(const Gf2Matrix& m);

// Complex files: {"cells": [[ids per dimension]...],
//                 "incidence": [[k, k-cell, (k-1)-cell, parity]...]}
CwComplex complex_from_json(const json& j);
json complex_to_json(const CwComplex& cw);

// Chain complexes as raw boundary data: {"dims": [...], "boundaries": [...]}
// with boundaries[k-1] the degree-k matrix.
ChainComplex chain_complex_from_json(const json& j);
json chain_complex_to_json(const ChainComplex& c);

// Short exact sequence files: {"a":, "b":, "c":, "inc": [per-degree rows],
// "proj": [...]}.
ShortExactSequence ses_from_json(const json& j);
json ses_to_json(const ShortExactSequence& s);

// Betti vectors as {"degree": dimension} objects with string keys.
BettiVector betti_from_json(const json& j);
json betti_to_json(const BettiVector& b);

// Scenario files as documented in the README.
Scenario scenario_from_json(const json& j);
json scenario_to_json(const Scenario& s);

std::string homology_text(const HomologyData& h);
json homology_json(const HomologyData& h);

std::string zigzag_text(const ShortExactSequence& s);
json zigzag_json(const ShortExactSequence& s);

std::string solver_report_text(const MorseDecomposition& d, const SolverReport& r,
                               bool list_admissible);
json solver_report_json(const MorseDecomposition& d, const SolverReport& r, bool list_admissible);

/// Components as nodes; guaranteed heteroclinics solid, possible ones dashed.
std::string solver_report_dot(const MorseDecomposition& d, const SolverReport& r);

}  // namespace conley::io
