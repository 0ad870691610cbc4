#include "conley/chain_complex.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "conley/errors.hpp"

namespace conley {

namespace {

Gf2Matrix zero(int rows, int cols) { return Gf2Matrix(rows, cols); }

}  // namespace

ChainComplex::ChainComplex(std::vector<int> dims, std::vector<Gf2Matrix> boundaries)
    : dims_(std::move(dims)) {
    for (int d : dims_)
        if (d < 0) throw std::invalid_argument("chain complex dimensions must be non-negative");
    while (!dims_.empty() && dims_.back() == 0) dims_.pop_back();

    boundaries_.resize(dims_.size());
    for (int k = 0; k < static_cast<int>(dims_.size()); ++k) {
        int rows = k == 0 ? 0 : dims_[k - 1];
        if (k < static_cast<int>(boundaries.size()) && boundaries[k].rows() + boundaries[k].cols() > 0) {
            if (boundaries[k].rows() != rows || boundaries[k].cols() != dims_[k])
                throw DimensionError("boundary matrix of degree " + std::to_string(k) +
                                     " has shape " + std::to_string(boundaries[k].rows()) + "x" +
                                     std::to_string(boundaries[k].cols()) + ", expected " +
                                     std::to_string(rows) + "x" + std::to_string(dims_[k]));
            boundaries_[k] = std::move(boundaries[k]);
        } else {
            boundaries_[k] = zero(rows, dims_[k]);
        }
    }

    for (int k = 1; k + 1 <= top_degree(); ++k) {
        Gf2Matrix comp = mul(boundaries_[k], boundaries_[k + 1]);
        if (comp.is_zero()) continue;
        for (int i = 0; i < comp.rows(); ++i)
            for (int j = 0; j < comp.cols(); ++j)
                if (comp.get(i, j))
                    throw NotAComplexError(k, "#" + std::to_string(j), "#" + std::to_string(i));
    }
}

Gf2Matrix ChainComplex::boundary(int k) const {
    if (k >= 1 && k <= top_degree()) return boundaries_[k];
    return zero(dim(k - 1), dim(k));
}

ChainComplex from_cw(const CwComplex& cw) {
    std::map<std::string, std::pair<int, int>> index;  // id -> (dimension, position)
    for (int k = 0; k < static_cast<int>(cw.cells.size()); ++k)
        for (int j = 0; j < static_cast<int>(cw.cells[k].size()); ++j) {
            const std::string& id = cw.cells[k][j];
            if (!index.emplace(id, std::make_pair(k, j)).second)
                throw std::invalid_argument("duplicate cell id '" + id + "'");
        }

    std::vector<int> dims(cw.cells.size());
    for (std::size_t k = 0; k < cw.cells.size(); ++k) dims[k] = static_cast<int>(cw.cells[k].size());

    std::vector<Gf2Matrix> boundaries(dims.size());
    for (std::size_t k = 1; k < dims.size(); ++k) boundaries[k] = zero(dims[k - 1], dims[k]);

    for (const IncidenceEntry& e : cw.incidence) {
        auto cell = index.find(e.cell);
        if (cell == index.end())
            throw std::invalid_argument("incidence references unknown cell '" + e.cell + "'");
        auto facet = index.find(e.facet);
        if (facet == index.end())
            throw std::invalid_argument("incidence references unknown cell '" + e.facet + "'");
        if (e.dim < 1 || e.dim >= static_cast<int>(dims.size()) || cell->second.first != e.dim ||
            facet->second.first != e.dim - 1)
            throw std::invalid_argument("incidence entry for '" + e.cell + "' over '" + e.facet +
                                        "' does not join adjacent dimensions at degree " +
                                        std::to_string(e.dim));
        if (e.parity % 2 != 0) {
            Gf2Matrix& b = boundaries[e.dim];
            int r = facet->second.second, c = cell->second.second;
            b.set(r, c, !b.get(r, c));  // multiplicities accumulate mod 2
        }
    }

    // Check the boundary law here so violations name cells, not indices.
    for (std::size_t k = 1; k + 1 < dims.size(); ++k) {
        Gf2Matrix comp = mul(boundaries[k], boundaries[k + 1]);
        for (int i = 0; i < comp.rows(); ++i)
            for (int j = 0; j < comp.cols(); ++j)
                if (comp.get(i, j))
                    throw NotAComplexError(static_cast<int>(k), cw.cells[k + 1][j], cw.cells[k - 1][i]);
    }

    return ChainComplex(std::move(dims), std::move(boundaries));
}

ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b) {
    int top = std::max(a.top_degree(), b.top_degree());
    std::vector<int> dims(top + 1);
    std::vector<Gf2Matrix> boundaries(top + 1);
    for (int k = 0; k <= top; ++k) {
        dims[k] = a.dim(k) + b.dim(k);
        if (k >= 1)
            boundaries[k] = block_assemble({{a.boundary(k), zero(a.dim(k - 1), b.dim(k))},
                                            {zero(b.dim(k - 1), a.dim(k)), b.boundary(k)}});
    }
    return ChainComplex(std::move(dims), std::move(boundaries));
}

Gf2Matrix HomologyData::project(int k, const Gf2Matrix& cycles) const {
    if (k < 0 || k >= static_cast<int>(degrees.size())) {
        if (cycles.rows() != 0)
            throw DimensionError("projection at degree " + std::to_string(k) +
                                 " applied to nonempty chains");
        return Gf2Matrix(0, cycles.cols());
    }
    return mul(degrees[k].projection, cycles);
}

BettiVector HomologyData::betti_vector() const {
    BettiVector b;
    for (int k = 0; k < static_cast<int>(degrees.size()); ++k) b.set_dim(k, degrees[k].betti);
    return b;
}

HomologyData homology(const ChainComplex& c) {
    HomologyData out;
    out.degrees.resize(c.top_degree() + 1);
    for (int k = 0; k <= c.top_degree(); ++k) {
        int n = c.dim(k);
        Gf2Matrix cycles = kernel_basis(c.boundary(k));
        Gf2Matrix bounds = image_basis(c.boundary(k + 1));

        HomologyDegree deg;
        deg.betti = cycles.cols() - bounds.cols();

        // Representatives: kernel-basis columns that extend the boundary
        // space, scanned in order so the choice is canonical.
        std::vector<int> chosen;
        Gf2Matrix span = bounds;
        for (int j = 0; j < cycles.cols() && static_cast<int>(chosen.size()) < deg.betti; ++j) {
            Gf2Matrix candidate = Gf2Matrix::hcat(span, cycles.column(j));
            if (rank(candidate) > rank(span)) {
                chosen.push_back(j);
                span = candidate;
            }
        }
        deg.cycle_reps = cycles.select_columns(chosen);

        // Complete [reps | boundaries] to a basis with unit vectors, invert,
        // and keep the rows dual to the representatives.
        Gf2Matrix basis = Gf2Matrix::hcat(deg.cycle_reps, bounds);
        for (int e = 0; e < n && basis.cols() < n; ++e) {
            Gf2Matrix unit(n, 1);
            unit.set(e, 0, true);
            Gf2Matrix candidate = Gf2Matrix::hcat(basis, unit);
            if (rank(candidate) > rank(basis)) basis = candidate;
        }
        deg.projection = Gf2Matrix(deg.betti, n);
        if (n > 0) {
            Gf2Matrix inv = inverse(basis).value();
            for (int r = 0; r < deg.betti; ++r)
                for (int col = 0; col < n; ++col) deg.projection.set(r, col, inv.get(r, col));
        }
        out.degrees[k] = std::move(deg);
    }
    return out;
}

BettiVector reduce(const BettiVector& b) {
    if (b.dim(0) < 1)
        throw std::invalid_argument("reduced homology needs dimension >= 1 in degree 0");
    BettiVector out = b;
    out.set_dim(0, b.dim(0) - 1);
    return out;
}

CwComplex builtin_complex(const std::string& name, const std::vector<int>& params) {
    auto no_params = [&](const char* what) {
        if (!params.empty())
            throw std::invalid_argument(std::string(what) + " takes no parameters");
    };

    if (name == "point") {
        no_params("point");
        return CwComplex{{{"p"}}, {}};
    }
    if (name == "interval") {
        no_params("interval");
        return CwComplex{{{"a", "b"}, {"e"}}, {{1, "e", "a", 1}, {1, "e", "b", 1}}};
    }
    if (name == "circle") {
        // The single 1-cell attaches both endpoints to the 0-cell, so the
        // incidence count is even.
        no_params("circle");
        return CwComplex{{{"v"}, {"e"}}, {{1, "e", "v", 0}}};
    }
    if (name == "sphere_minimal") {
        if (params.size() != 1 || params[0] < 0)
            throw std::invalid_argument("sphere_minimal needs one parameter n >= 0");
        int n = params[0];
        if (n == 0) return CwComplex{{{"p", "q"}}, {}};
        CwComplex cw;
        cw.cells.resize(n + 1);
        cw.cells[0] = {"v"};
        cw.cells[n] = {"c"};
        return cw;
    }
    if (name == "sphere_equator") {
        // Equator structure of the 2-sphere with one 0-cell on the equator;
        // each hemisphere is glued once around the equator 1-cell.
        no_params("sphere_equator");
        return CwComplex{{{"v"}, {"e"}, {"u", "l"}},
                         {{1, "e", "v", 0}, {2, "u", "e", 1}, {2, "l", "e", 1}}};
    }
    if (name == "wedge_of_spheres") {
        CwComplex cw;
        cw.cells.resize(1);
        cw.cells[0] = {"v"};
        for (std::size_t i = 0; i < params.size(); ++i) {
            int m = params[i];
            if (m < 0) throw std::invalid_argument("wedge_of_spheres dimensions must be >= 0");
            if (m >= static_cast<int>(cw.cells.size())) cw.cells.resize(m + 1);
            cw.cells[m].push_back("s" + std::to_string(i + 1));
        }
        return cw;
    }
    throw std::invalid_argument("unknown builtin complex '" + name + "'");
}

}  // namespace conley
