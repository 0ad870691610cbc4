#pragma once

#include <string>
#include <vector>

#include "conley/betti_vector.hpp"
#include "conley/gf2.hpp"

namespace conley {

/// One gluing record: the k-cell `cell` meets the (k-1)-cell `facet` with the
/// given mod-2 multiplicity. Repeated records for the same pair accumulate
/// mod 2; a parity-0 record documents a gluing that cancels itself.
struct IncidenceEntry {
    int dim = 0;
    std::string cell;
    std::string facet;
    int parity = 0;
};

/// CW-complex description: cell ids listed per dimension plus the mod-2
/// incidence data of the attaching maps. The geometric degree of an
/// attaching map is input data here, never computed.
struct CwComplex {
    std::vector<std::vector<std::string>> cells;  // index = dimension
    std::vector<IncidenceEntry> incidence;
};

/// Named cell structures used throughout: point, interval, circle,
/// sphere_minimal(n), sphere_equator, wedge_of_spheres(dims...).
/// Unknown names and bad parameters throw std::invalid_argument.
CwComplex builtin_complex(const std::string& name, const std::vector<int>& params = {});

/// Graded sequence of boundary matrices over the two-element field with the
/// boundary-squared-zero law checked at construction. Degrees run
/// contiguously from 0 to top_degree(); absent degrees have dimension zero.
class ChainComplex {
public:
    ChainComplex() = default;

    /// `boundaries[k]` is the degree-k boundary matrix of shape
    /// dims[k-1] x dims[k]; index 0 may be left empty. Throws
    /// NotAComplexError when some composition is nonzero.
    ChainComplex(std::vector<int> dims, std::vector<Gf2Matrix> boundaries);

    int top_degree() const { return static_cast<int>(dims_.size()) - 1; }
    int dim(int k) const {
        return (k >= 0 && k < static_cast<int>(dims_.size())) ? dims_[k] : 0;
    }

    /// Boundary matrix of degree k, shape dim(k-1) x dim(k); zero matrices of
    /// the right shape outside the stored range.
    Gf2Matrix boundary(int k) const;

    friend bool operator==(const ChainComplex& a, const ChainComplex& b) {
        return a.dims_ == b.dims_ && a.boundaries_ == b.boundaries_;
    }

private:
    std::vector<int> dims_;
    std::vector<Gf2Matrix> boundaries_;  // boundaries_[k] = boundary of degree k, k >= 1
};

/// Build the cellular chain complex of a CW description. Cell order within
/// each dimension fixes the coordinate order. Throws NotAComplexError (with
/// the offending cell pair) when the incidence data violates the
/// boundary-squared-zero law, std::invalid_argument on malformed cell data.
ChainComplex from_cw(const CwComplex& cw);

/// Block-diagonal sum, modelling a disjoint union of spaces.
ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b);

/// Homology of one degree: dimension, chosen cycle representatives, and the
/// linear projection taking any cycle to its coordinates with respect to the
/// representatives (boundaries project to zero).
struct HomologyDegree {
    int betti = 0;
    Gf2Matrix cycle_reps;  // dim(k) x betti
    Gf2Matrix projection;  // betti x dim(k)
};

struct HomologyData {
    std::vector<HomologyDegree> degrees;  // index k, 0..top_degree

    int betti(int k) const {
        return (k >= 0 && k < static_cast<int>(degrees.size())) ? degrees[k].betti : 0;
    }

    /// Cycle representatives of degree k; empty outside the stored range.
    Gf2Matrix reps(int k) const {
        return (k >= 0 && k < static_cast<int>(degrees.size())) ? degrees[k].cycle_reps
                                                                : Gf2Matrix();
    }

    /// Coordinates of a cycle (given as dim(k) x m columns) in H_k.
    Gf2Matrix project(int k, const Gf2Matrix& cycles) const;

    BettiVector betti_vector() const;
};

/// Deterministic homology of every degree: representatives extend the
/// canonical boundary-space basis and are chosen greedily in kernel-basis
/// column order, so equal complexes yield identical output.
HomologyData homology(const ChainComplex& c);

/// Reduced-homology convention: decrement the degree-0 dimension. Requires
/// betti(0) >= 1 (any nonempty complex satisfies this).
BettiVector reduce(const BettiVector& b);

}  // namespace conley
