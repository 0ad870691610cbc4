#pragma once

#include <string>
#include <utility>
#include <vector>

#include "conley/betti_vector.hpp"

namespace conley {

/// Connected piece of a Morse set, carrying the homological index of its
/// isolating neighborhood.
struct MorseComponent {
    std::string id;
    BettiVector betti;
};

/// Morse set: all components share one Lyapunov level. Levels are abstract
/// ranks; only their order matters.
struct MorseSet {
    std::string id;
    int level = 0;
    std::vector<MorseComponent> components;
};

/// (set index, component index) into a MorseDecomposition.
struct ComponentRef {
    int set = -1;
    int comp = -1;

    friend bool operator==(const ComponentRef& a, const ComponentRef& b) {
        return a.set == b.set && a.comp == b.comp;
    }
    friend bool operator<(const ComponentRef& a, const ComponentRef& b) {
        return a.set != b.set ? a.set < b.set : a.comp < b.comp;
    }
};

/// Ordered Morse decomposition. Sets are listed by strictly increasing
/// level; heteroclinics can only run from higher to lower level. Symmetry
/// pairs assert a flow symmetry exchanging two components of one set.
struct MorseDecomposition {
    std::vector<MorseSet> sets;
    std::vector<std::pair<ComponentRef, ComponentRef>> symmetry_pairs;

    int set_index(const std::string& id) const;
    int component_index(int set, const std::string& id) const;
    const MorseComponent& component(ComponentRef ref) const { return sets[ref.set].components[ref.comp]; }
};

struct MorseValidation {
    bool ok = true;
    std::vector<std::string> problems;
};

/// Check every structural invariant, collecting one named diagnostic per
/// violation.
MorseValidation validate(const MorseDecomposition& d);

/// Contiguous range of set indices, lo <= hi.
struct Interval {
    int lo = 0;
    int hi = 0;
};

/// One coordinate of the direct sum of all component index homologies,
/// ordered by set, then component, then degree, then position within the
/// degree.
struct BasisLabel {
    int set = 0;
    int comp = 0;
    int degree = 0;
    int local = 0;

    friend bool operator==(const BasisLabel& a, const BasisLabel& b) {
        return a.set == b.set && a.comp == b.comp && a.degree == b.degree && a.local == b.local;
    }
};

std::vector<BasisLabel> total_space(const MorseDecomposition& d);

/// Slice of total_space over the sets of the interval; throws
/// std::out_of_range for indices outside the decomposition.
std::vector<BasisLabel> interval_subspace(const MorseDecomposition& d, Interval I);

/// Known index homology of the union of an interval's Morse sets and their
/// connections.
struct IntervalConstraint {
    Interval interval;
    BettiVector betti;
};

/// A decomposition bundled with its interval constraints: the solvable unit.
struct Scenario {
    MorseDecomposition decomposition;
    std::vector<IntervalConstraint> constraints;
};

/// Display name for a component: the set id alone when the set has a single
/// component, otherwise "set.component".
std::string component_name(const MorseDecomposition& d, ComponentRef ref);

}  // namespace conley
