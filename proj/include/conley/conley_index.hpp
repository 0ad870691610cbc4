#pragma once

#include "conley/betti_vector.hpp"

namespace conley {

// Homological Conley indices as graded Betti vectors, in the reduced-homology
// convention: a stable equilibrium is {0:1} and disjoint unions compose by
// degreewise sums with no basepoint bookkeeping.

/// Index of a hyperbolic equilibrium with n-dimensional unstable manifold:
/// dimension 1 in degree n, zero elsewhere.
BettiVector hyperbolic_equilibrium_index(int n);

/// Index of a normally hyperbolic periodic orbit with n unstable directions
/// (a pinched torus): dimension 1 in degrees n and n+1.
BettiVector periodic_orbit_index(int n);

/// Index of a compact global attractor: dimension 1 in degree 0.
BettiVector attractor_index();

/// Index of a disjoint union with exit sets identified: degreewise sum.
BettiVector wedge(const BettiVector& a, const BettiVector& b);

}  // namespace conley
