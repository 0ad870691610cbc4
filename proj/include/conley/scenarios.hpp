#pragma once

#include "conley/morse_model.hpp"

namespace conley {

/// Three-level decomposition of a delay equation attractor: two periodic
/// orbits (unstable dimensions 0 and 2) below a hyperbolic equilibrium with
/// four unstable directions, constrained by the attractor index on the total
/// interval.
Scenario delay_scenario();

/// Bistable gradient-like cascade after n pitchfork bifurcations: sets
/// M_0..M_n with symmetric component pairs of Morse index i, topped by the
/// single equilibrium of index n+1, constrained by the attractor index on
/// the total interval. Symmetry pairs are emitted when with_symmetry is set.
Scenario chafee_infante(int n, bool with_symmetry = true);

}  // namespace conley
