#pragma once

#include <cstdint>
#include <vector>

#include "conley/gf2.hpp"
#include "conley/morse_model.hpp"

namespace conley {

/// One potentially nonzero block of the connection matrix: a linear map
/// H_degree(source component) -> H_degree-1(target component) with the
/// target at strictly lower level. Pairs where either side is
/// zero-dimensional are not variables.
struct EntryVariable {
    ComponentRef source;
    ComponentRef target;
    int degree = 0;
    int rows = 0;  // dim H_degree-1(target)
    int cols = 0;  // dim H_degree(source)
};

/// All entry variables allowed by strict upper triangularity and the
/// degree-drop law, ordered by target set, source set, degree, then
/// component positions.
std::vector<EntryVariable> enumerate_variables(const MorseDecomposition& d);

/// A full assignment: per-variable blocks plus the assembled square matrix
/// over the total_space coordinates.
struct ConnectionMatrix {
    std::vector<Gf2Matrix> blocks;  // parallel to the variable list
    Gf2Matrix assembled;
};

ConnectionMatrix assemble(const MorseDecomposition& d, const std::vector<EntryVariable>& vars,
                          std::vector<Gf2Matrix> blocks);

/// Boundary-operator law on the assembled matrix.
bool check_square_zero(const ConnectionMatrix& cm);

/// Per-degree homology of the interval submatrix: kernel dimension at each
/// degree minus the rank of the incoming map from one degree up.
BettiVector interval_homology(const MorseDecomposition& d, const ConnectionMatrix& cm, Interval I);

/// Graded comparison of interval_homology against the constraint, degree by
/// degree.
bool check_interval(const MorseDecomposition& d, const ConnectionMatrix& cm,
                    const IntervalConstraint& c);

/// True when swapping paired components (identity on unpaired ones) maps the
/// assignment to itself.
bool check_symmetry(const MorseDecomposition& d, const std::vector<EntryVariable>& vars,
                    const ConnectionMatrix& cm);

struct SolverOptions {
    int max_vars = 24;          // budget on free scalar entries
    bool use_symmetry = true;   // honor the decomposition's symmetry pairs
    std::size_t store_cap = 64; // admissible matrices kept in the report
};

enum class VariableStatus { forced_nonzero, forced_zero, undetermined };
enum class EdgeStatus { guaranteed, possible };

/// Heteroclinic candidate between adjacent levels; the flow runs from the
/// higher-level source to the lower-level target.
struct HeteroclinicEdge {
    ComponentRef source;
    ComponentRef target;
    EdgeStatus status = EdgeStatus::possible;
};

struct SolverReport {
    std::vector<EntryVariable> variables;
    std::vector<VariableStatus> status;  // parallel to variables
    std::uint64_t admissible_count = 0;
    bool consistent = false;                   // at least one admissible matrix
    std::vector<ConnectionMatrix> admissible;  // canonical order, capped at store_cap
    bool truncated = false;
    std::vector<HeteroclinicEdge> edges;
};

/// Exhaustive search over all 0/1 assignments of the entry variables,
/// depth-first with early pruning on partial boundary-law products and
/// symmetry. A matrix is admissible when the assembled square is zero,
/// symmetry holds, and every interval constraint passes. The admissible
/// count is always exact; only the stored list is capped. Throws
/// VariableBudgetError when the free entries exceed options.max_vars; an
/// empty admissible set is a normal report outcome.
SolverReport solve(const MorseDecomposition& d, const std::vector<IntervalConstraint>& constraints,
                   const SolverOptions& options = {});

inline SolverReport solve(const Scenario& s, const SolverOptions& options = {}) {
    return solve(s.decomposition, s.constraints, options);
}

}  // namespace conley
