#include "conley/io.hpp"

#include <fstream>
#include <sstream>

#include "conley/errors.hpp"

namespace conley::io {

namespace {

const json& member(const json& j, const char* key, const std::string& what) {
    if (!j.is_object()) throw ParseError(what + " must be a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(what + " is missing the '" + key + "' field");
    return *it;
}

int int_value(const json& j, const std::string& what) {
    if (!j.is_number_integer()) throw ParseError(what + " must be an integer");
    return j.get<int>();
}

std::string string_value(const json& j, const std::string& what) {
    if (!j.is_string()) throw ParseError(what + " must be a string");
    return j.get<std::string>();
}

std::string status_name(VariableStatus s) {
    switch (s) {
        case VariableStatus::forced_nonzero: return "forced nonzero";
        case VariableStatus::forced_zero: return "forced zero";
        default: return "undetermined";
    }
}

std::string matrix_rows_text(const Gf2Matrix& m, const std::string& indent) {
    if (m.rows() == 0 || m.cols() == 0)
        return indent + "(" + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ")\n";
    std::string out;
    for (int r = 0; r < m.rows(); ++r) {
        out += indent;
        for (int c = 0; c < m.cols(); ++c) out += m.get(r, c) ? '1' : '0';
        out += '\n';
    }
    return out;
}

}  // namespace

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

Gf2Matrix matrix_from_json(const json& j, int rows, int cols, const std::string& what) {
    if (!j.is_array()) throw ParseError(what + " must be an array of 0/1 rows");
    if (static_cast<int>(j.size()) != rows)
        throw ParseError(what + " has " + std::to_string(j.size()) + " rows, expected " +
                         std::to_string(rows));
    Gf2Matrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        const json& row = j[r];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw ParseError(what + " row " + std::to_string(r) + " must list " +
                             std::to_string(cols) + " entries");
        for (int c = 0; c < cols; ++c) {
            int bit = int_value(row[c], what + " entry");
            if (bit != 0 && bit != 1) throw ParseError(what + " entries must be 0 or 1");
            m.set(r, c, bit == 1);
        }
    }
    return m;
}

json matrix_to_json(const Gf2Matrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m.get(r, c) ? 1 : 0);
        rows.push_back(std::move(row));
    }
    return rows;
}

CwComplex complex_from_json(const json& j) {
    CwComplex cw;
    const json& cells = member(j, "cells", "complex");
    if (!cells.is_array()) throw ParseError("'cells' must be an array per dimension");
    for (const json& dim : cells) {
        if (!dim.is_array()) throw ParseError("'cells' entries must be arrays of cell ids");
        std::vector<std::string> ids;
        for (const json& id : dim) ids.push_back(string_value(id, "cell id"));
        cw.cells.push_back(std::move(ids));
    }
    if (j.contains("incidence")) {
        const json& inc = j["incidence"];
        if (!inc.is_array()) throw ParseError("'incidence' must be an array");
        for (const json& e : inc) {
            if (!e.is_array() || e.size() != 4)
                throw ParseError("incidence entries must be [k, cell, facet, parity]");
            IncidenceEntry entry;
            entry.dim = int_value(e[0], "incidence dimension");
            entry.cell = string_value(e[1], "incidence cell");
            entry.facet = string_value(e[2], "incidence facet");
            entry.parity = int_value(e[3], "incidence parity");
            if (entry.parity != 0 && entry.parity != 1)
                throw ParseError("incidence parity must be 0 or 1");
            cw.incidence.push_back(std::move(entry));
        }
    }
    return cw;
}

json complex_to_json(const CwComplex& cw) {
    json cells = json::array();
    for (const auto& dim : cw.cells) cells.push_back(dim);
    json incidence = json::array();
    for (const auto& e : cw.incidence) incidence.push_back(json::array({e.dim, e.cell, e.facet, e.parity}));
    return json{{"cells", std::move(cells)}, {"incidence", std::move(incidence)}};
}

ChainComplex chain_complex_from_json(const json& j) {
    const json& dims_json = member(j, "dims", "chain complex");
    if (!dims_json.is_array()) throw ParseError("'dims' must be an array of dimensions");
    std::vector<int> dims;
    for (const json& d : dims_json) {
        int v = int_value(d, "dimension");
        if (v < 0) throw ParseError("dimensions must be non-negative");
        dims.push_back(v);
    }

    std::vector<Gf2Matrix> boundaries(dims.size());
    if (j.contains("boundaries")) {
        const json& bnd = j["boundaries"];
        if (!bnd.is_array()) throw ParseError("'boundaries' must be an array of matrices");
        if (bnd.size() + 1 > dims.size() && !(dims.empty() && bnd.empty()))
            throw ParseError("more boundary matrices than positive degrees");
        for (std::size_t i = 0; i < bnd.size(); ++i) {
            int k = static_cast<int>(i) + 1;
            boundaries[k] = matrix_from_json(bnd[i], dims[k - 1], dims[k],
                                             "boundary of degree " + std::to_string(k));
        }
    }
    try {
        return ChainComplex(std::move(dims), std::move(boundaries));
    } catch (const DimensionError& e) {
        throw ParseError(e.what());
    }
}

json chain_complex_to_json(const ChainComplex& c) {
    json dims = json::array();
    for (int k = 0; k <= c.top_degree(); ++k) dims.push_back(c.dim(k));
    json boundaries = json::array();
    for (int k = 1; k <= c.top_degree(); ++k) boundaries.push_back(matrix_to_json(c.boundary(k)));
    return json{{"dims", std::move(dims)}, {"boundaries", std::move(boundaries)}};
}

namespace {

std::vector<Gf2Matrix> chain_map_from_json(const json& j, const ChainComplex& source,
                                           const ChainComplex& target, const std::string& what) {
    if (!j.is_array()) throw ParseError(what + " must be an array of per-degree matrices");
    std::vector<Gf2Matrix> maps;
    for (std::size_t k = 0; k < j.size(); ++k)
        maps.push_back(matrix_from_json(j[k], target.dim(static_cast<int>(k)),
                                        source.dim(static_cast<int>(k)),
                                        what + " at degree " + std::to_string(k)));
    return maps;
}

}  // namespace

ShortExactSequence ses_from_json(const json& j) {
    ChainComplex a = chain_complex_from_json(member(j, "a", "short exact sequence"));
    ChainComplex b = chain_complex_from_json(member(j, "b", "short exact sequence"));
    ChainComplex c = chain_complex_from_json(member(j, "c", "short exact sequence"));
    std::vector<Gf2Matrix> inc =
        chain_map_from_json(member(j, "inc", "short exact sequence"), a, b, "'inc'");
    std::vector<Gf2Matrix> proj =
        chain_map_from_json(member(j, "proj", "short exact sequence"), b, c, "'proj'");
    return make_ses(std::move(a), std::move(b), std::move(c), std::move(inc), std::move(proj));
}

json ses_to_json(const ShortExactSequence& s) {
    int top = std::max({s.a().top_degree(), s.b().top_degree(), s.c().top_degree()});
    json inc = json::array(), proj = json::array();
    for (int k = 0; k <= top; ++k) {
        inc.push_back(matrix_to_json(s.inc.at(k)));
        proj.push_back(matrix_to_json(s.proj.at(k)));
    }
    return json{{"a", chain_complex_to_json(s.a())},
                {"b", chain_complex_to_json(s.b())},
                {"c", chain_complex_to_json(s.c())},
                {"inc", std::move(inc)},
                {"proj", std::move(proj)}};
}

BettiVector betti_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("betti vector must be a {\"degree\": dimension} object");
    BettiVector b;
    for (const auto& [key, value] : j.items()) {
        int degree;
        try {
            std::size_t used = 0;
            degree = std::stoi(key, &used);
            if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
            throw ParseError("betti vector degree '" + key + "' is not a number");
        }
        if (degree < 0) throw ParseError("betti vector degrees must be non-negative");
        int dim = int_value(value, "betti dimension");
        if (dim < 0) throw ParseError("betti vector dimensions must be non-negative");
        if (dim > 0) b.set_dim(degree, b.dim(degree) + dim);
    }
    return b;
}

json betti_to_json(const BettiVector& b) {
    json out = json::object();
    for (const auto& [degree, dim] : b.entries()) out[std::to_string(degree)] = dim;
    return out;
}

namespace {

ComponentRef component_from_json(const json& j, const MorseDecomposition& d, const std::string& what) {
    if (!j.is_array() || j.size() != 2)
        throw ParseError(what + " must be a [\"set\", \"component\"] pair");
    std::string set_id = string_value(j[0], what + " set id");
    std::string comp_id = string_value(j[1], what + " component id");
    int set = d.set_index(set_id);
    if (set < 0) throw ParseError(what + " references unknown Morse set '" + set_id + "'");
    int comp = d.component_index(set, comp_id);
    if (comp < 0)
        throw ParseError(what + " references unknown component '" + comp_id + "' of set '" + set_id +
                         "'");
    return {set, comp};
}

}  // namespace

Scenario scenario_from_json(const json& j) {
    Scenario s;
    const json& sets = member(j, "morse_sets", "scenario");
    if (!sets.is_array()) throw ParseError("'morse_sets' must be an array");
    for (const json& set_json : sets) {
        MorseSet set;
        set.id = string_value(member(set_json, "id", "Morse set"), "Morse set id");
        set.level = int_value(member(set_json, "level", "Morse set '" + set.id + "'"), "level");
        const json& comps = member(set_json, "components", "Morse set '" + set.id + "'");
        if (!comps.is_array()) throw ParseError("'components' must be an array");
        for (const json& comp_json : comps) {
            MorseComponent comp;
            comp.id = string_value(member(comp_json, "id", "component"), "component id");
            comp.betti = betti_from_json(member(comp_json, "betti", "component '" + comp.id + "'"));
            set.components.push_back(std::move(comp));
        }
        s.decomposition.sets.push_back(std::move(set));
    }

    if (j.contains("symmetry_pairs")) {
        const json& pairs = j["symmetry_pairs"];
        if (!pairs.is_array()) throw ParseError("'symmetry_pairs' must be an array");
        for (const json& pair : pairs) {
            if (!pair.is_array() || pair.size() != 2)
                throw ParseError("symmetry pairs must list exactly two components");
            ComponentRef x = component_from_json(pair[0], s.decomposition, "symmetry pair");
            ComponentRef y = component_from_json(pair[1], s.decomposition, "symmetry pair");
            s.decomposition.symmetry_pairs.emplace_back(x, y);
        }
    }

    if (j.contains("interval_constraints")) {
        const json& constraints = j["interval_constraints"];
        if (!constraints.is_array()) throw ParseError("'interval_constraints' must be an array");
        for (const json& c_json : constraints) {
            const json& interval = member(c_json, "interval", "interval constraint");
            if (!interval.is_array() || interval.size() != 2)
                throw ParseError("'interval' must be [\"loSetId\", \"hiSetId\"]");
            std::string lo_id = string_value(interval[0], "interval endpoint");
            std::string hi_id = string_value(interval[1], "interval endpoint");
            int lo = s.decomposition.set_index(lo_id);
            int hi = s.decomposition.set_index(hi_id);
            if (lo < 0) throw ParseError("interval references unknown Morse set '" + lo_id + "'");
            if (hi < 0) throw ParseError("interval references unknown Morse set '" + hi_id + "'");
            if (lo > hi)
                throw ParseError("interval endpoints '" + lo_id + "' and '" + hi_id +
                                 "' are out of order");
            IntervalConstraint c;
            c.interval = {lo, hi};
            c.betti = betti_from_json(member(c_json, "betti", "interval constraint"));
            s.constraints.push_back(std::move(c));
        }
    }
    return s;
}

json scenario_to_json(const Scenario& s) {
    const MorseDecomposition& d = s.decomposition;
    json sets = json::array();
    for (const MorseSet& set : d.sets) {
        json comps = json::array();
        for (const MorseComponent& comp : set.components)
            comps.push_back(json{{"id", comp.id}, {"betti", betti_to_json(comp.betti)}});
        sets.push_back(json{{"id", set.id}, {"level", set.level}, {"components", std::move(comps)}});
    }
    json pairs = json::array();
    for (const auto& [x, y] : d.symmetry_pairs)
        pairs.push_back(json::array({json::array({d.sets[x.set].id, d.component(x).id}),
                                     json::array({d.sets[y.set].id, d.component(y).id})}));
    json constraints = json::array();
    for (const IntervalConstraint& c : s.constraints)
        constraints.push_back(
            json{{"interval", json::array({d.sets[c.interval.lo].id, d.sets[c.interval.hi].id})},
                 {"betti", betti_to_json(c.betti)}});
    return json{{"morse_sets", std::move(sets)},
                {"symmetry_pairs", std::move(pairs)},
                {"interval_constraints", std::move(constraints)}};
}

std::string homology_text(const HomologyData& h) {
    if (h.degrees.empty()) return "empty complex\n";
    std::string out;
    for (std::size_t k = 0; k < h.degrees.size(); ++k) {
        if (k) out += ' ';
        out += "H_" + std::to_string(k) + "=" + std::to_string(h.degrees[k].betti);
    }
    out += '\n';
    return out;
}

json homology_json(const HomologyData& h) {
    return json{{"betti", betti_to_json(h.betti_vector())}};
}

std::string zigzag_text(const ShortExactSequence& s) {
    std::ostringstream out;
    ValidationReport valid = validate_ses(s);
    if (!valid.ok) {
        out << "invalid short exact sequence: " << valid.message << "\n";
        return out.str();
    }
    out << "short exact sequence: valid\n";
    int top = std::max({s.a().top_degree(), s.b().top_degree(), s.c().top_degree()});
    out << "connecting homomorphisms:\n";
    for (int k = top; k >= 1; --k) {
        Gf2Matrix delta = connecting_homomorphism(s, k);
        out << "  H_" << k << "(C) -> H_" << k - 1 << "(A)  [" << delta.rows() << "x" << delta.cols()
            << "]\n";
        if (delta.rows() > 0 && delta.cols() > 0) out << matrix_rows_text(delta, "    ");
    }
    ValidationReport exact = check_exactness(long_exact_sequence(s));
    out << "long exact sequence: " << (exact.ok ? "exact at every node" : "NOT exact: " + exact.message)
        << "\n";
    return out.str();
}

json zigzag_json(const ShortExactSequence& s) {
    json out;
    ValidationReport valid = validate_ses(s);
    out["valid"] = valid.ok;
    if (!valid.ok) {
        out["error"] = valid.message;
        return out;
    }
    int top = std::max({s.a().top_degree(), s.b().top_degree(), s.c().top_degree()});
    json maps = json::object();
    for (int k = top; k >= 1; --k)
        maps[std::to_string(k)] = matrix_to_json(connecting_homomorphism(s, k));
    out["connecting"] = std::move(maps);
    LongExactSequence les = long_exact_sequence(s);
    ValidationReport exact = check_exactness(les);
    out["exact"] = exact.ok;
    json nodes = json::array();
    for (const LesNode& n : les.nodes) nodes.push_back(json{{"label", n.label}, {"dim", n.dim}});
    out["nodes"] = std::move(nodes);
    return out;
}

namespace {

std::string variable_name(const MorseDecomposition& d, const EntryVariable& v) {
    return component_name(d, v.target) + " <- " + component_name(d, v.source) + " @ degree " +
           std::to_string(v.degree);
}

}  // namespace

std::string solver_report_text(const MorseDecomposition& d, const SolverReport& r,
                               bool list_admissible) {
    std::ostringstream out;
    out << "admissible: " << r.admissible_count << "\n";
    if (!r.consistent)
        out << "no admissible matrix: the interval constraints are inconsistent for this "
               "decomposition\n";
    out << "variables:\n";
    if (r.variables.empty()) out << "  (none)\n";
    for (std::size_t v = 0; v < r.variables.size(); ++v)
        out << "  " << variable_name(d, r.variables[v]) << " [" << r.variables[v].rows << "x"
            << r.variables[v].cols << "]: " << status_name(r.status[v]) << "\n";
    out << "edges:\n";
    if (r.edges.empty()) out << "  (none)\n";
    for (const HeteroclinicEdge& e : r.edges)
        out << "  " << component_name(d, e.source) << " -> " << component_name(d, e.target) << ": "
            << (e.status == EdgeStatus::guaranteed ? "guaranteed" : "possible") << "\n";
    if (list_admissible) {
        out << "admissible matrices";
        if (r.truncated) out << " (first " << r.admissible.size() << " of " << r.admissible_count << ")";
        out << ":\n";
        for (std::size_t i = 0; i < r.admissible.size(); ++i) {
            out << "  #" << i + 1 << "\n";
            out << matrix_rows_text(r.admissible[i].assembled, "    ");
        }
    }
    return out.str();
}

json solver_report_json(const MorseDecomposition& d, const SolverReport& r, bool list_admissible) {
    json out;
    out["admissible_count"] = r.admissible_count;
    out["consistent"] = r.consistent;
    out["truncated"] = r.truncated;
    json vars = json::array();
    for (std::size_t v = 0; v < r.variables.size(); ++v) {
        const EntryVariable& var = r.variables[v];
        vars.push_back(json{
            {"source", json::array({d.sets[var.source.set].id, d.component(var.source).id})},
            {"target", json::array({d.sets[var.target.set].id, d.component(var.target).id})},
            {"degree", var.degree},
            {"shape", json::array({var.rows, var.cols})},
            {"status", status_name(r.status[v])},
        });
    }
    out["variables"] = std::move(vars);
    json edges = json::array();
    for (const HeteroclinicEdge& e : r.edges)
        edges.push_back(json{
            {"from", json::array({d.sets[e.source.set].id, d.component(e.source).id})},
            {"to", json::array({d.sets[e.target.set].id, d.component(e.target).id})},
            {"status", e.status == EdgeStatus::guaranteed ? "guaranteed" : "possible"},
        });
    out["edges"] = std::move(edges);
    if (list_admissible) {
        json mats = json::array();
        for (const ConnectionMatrix& cm : r.admissible) {
            json blocks = json::array();
            for (const Gf2Matrix& b : cm.blocks) blocks.push_back(matrix_to_json(b));
            mats.push_back(json{{"blocks", std::move(blocks)}, {"matrix", matrix_to_json(cm.assembled)}});
        }
        out["admissible"] = std::move(mats);
    }
    return out;
}

std::string solver_report_dot(const MorseDecomposition& d, const SolverReport& r) {
    std::ostringstream out;
    out << "digraph heteroclinics {\n";
    for (int i = 0; i < static_cast<int>(d.sets.size()); ++i)
        for (int j = 0; j < static_cast<int>(d.sets[i].components.size()); ++j)
            out << "  \"" << component_name(d, {i, j}) << "\";\n";
    for (const HeteroclinicEdge& e : r.edges)
        out << "  \"" << component_name(d, e.source) << "\" -> \"" << component_name(d, e.target)
            << "\" [style=" << (e.status == EdgeStatus::guaranteed ? "solid" : "dashed") << "];\n";
    out << "}\n";
    return out.str();
}

}  // namespace conley::io
