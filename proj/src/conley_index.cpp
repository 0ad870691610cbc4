#include "conley/conley_index.hpp"

#include <stdexcept>

namespace conley {

BettiVector hyperbolic_equilibrium_index(int n) {
    if (n < 0) throw std::invalid_argument("Morse index must be non-negative");
    BettiVector b;
    b.set_dim(n, 1);
    return b;
}

BettiVector periodic_orbit_index(int n) {
    if (n < 0) throw std::invalid_argument("unstable dimension must be non-negative");
    BettiVector b;
    b.set_dim(n, 1);
    b.set_dim(n + 1, 1);
    return b;
}

BettiVector attractor_index() {
    BettiVector b;
    b.set_dim(0, 1);
    return b;
}

BettiVector wedge(const BettiVector& a, const BettiVector& b) {
    BettiVector out = a;
    for (const auto& [k, v] : b.entries()) out.set_dim(k, out.dim(k) + v);
    return out;
}

}  // namespace conley
