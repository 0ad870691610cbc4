#include "conley/scenarios.hpp"

#include <stdexcept>

#include "conley/conley_index.hpp"

namespace conley {

Scenario delay_scenario() {
    MorseDecomposition d;
    d.sets.push_back({"M0", 0, {{"c", periodic_orbit_index(0)}}});
    d.sets.push_back({"M1", 1, {{"c", periodic_orbit_index(2)}}});
    d.sets.push_back({"M2", 2, {{"c", hyperbolic_equilibrium_index(4)}}});
    return Scenario{std::move(d), {{Interval{0, 2}, attractor_index()}}};
}

Scenario chafee_infante(int n, bool with_symmetry) {
    if (n < 0) throw std::invalid_argument("chafee_infante needs n >= 0");
    MorseDecomposition d;
    for (int i = 0; i <= n; ++i) {
        BettiVector index = hyperbolic_equilibrium_index(i);
        d.sets.push_back({"M" + std::to_string(i), i, {{"+", index}, {"-", index}}});
        if (with_symmetry) d.symmetry_pairs.push_back({ComponentRef{i, 0}, ComponentRef{i, 1}});
    }
    d.sets.push_back({"MN", n + 1, {{"e", hyperbolic_equilibrium_index(n + 1)}}});
    return Scenario{std::move(d), {{Interval{0, n + 1}, attractor_index()}}};
}

}  // namespace conley
