#include "conley/morse_model.hpp"

#include <set>
#include <stdexcept>

namespace conley {

int MorseDecomposition::set_index(const std::string& id) const {
    for (int i = 0; i < static_cast<int>(sets.size()); ++i)
        if (sets[i].id == id) return i;
    return -1;
}

int MorseDecomposition::component_index(int set, const std::string& id) const {
    const auto& comps = sets[set].components;
    for (int i = 0; i < static_cast<int>(comps.size()); ++i)
        if (comps[i].id == id) return i;
    return -1;
}

MorseValidation validate(const MorseDecomposition& d) {
    MorseValidation v;
    auto problem = [&](std::string msg) {
        v.ok = false;
        v.problems.push_back(std::move(msg));
    };

    std::set<std::string> set_ids;
    for (int i = 0; i < static_cast<int>(d.sets.size()); ++i) {
        const MorseSet& s = d.sets[i];
        if (!set_ids.insert(s.id).second) problem("duplicate Morse set id '" + s.id + "'");
        if (i > 0 && d.sets[i - 1].level >= s.level)
            problem("levels are not strictly increasing at set '" + s.id + "'");
        if (s.components.empty()) problem("Morse set '" + s.id + "' has no components");
        std::set<std::string> comp_ids;
        for (const MorseComponent& c : s.components)
            if (!comp_ids.insert(c.id).second)
                problem("duplicate component id '" + c.id + "' in set '" + s.id + "'");
    }

    auto in_range = [&](ComponentRef r) {
        return r.set >= 0 && r.set < static_cast<int>(d.sets.size()) && r.comp >= 0 &&
               r.comp < static_cast<int>(d.sets[r.set].components.size());
    };
    std::set<ComponentRef> paired;
    for (const auto& [x, y] : d.symmetry_pairs) {
        if (!in_range(x) || !in_range(y)) {
            problem("symmetry pair references a missing component");
            continue;
        }
        if (x == y) {
            problem("symmetry pair must join two distinct components");
            continue;
        }
        if (x.set != y.set)
            problem("symmetry pair joins components of different levels ('" + d.sets[x.set].id +
                    "' and '" + d.sets[y.set].id + "')");
        if (!(d.component(x).betti == d.component(y).betti))
            problem("symmetry pair joins components with different index homology ('" +
                    component_name(d, x) + "' and '" + component_name(d, y) + "')");
        if (!paired.insert(x).second)
            problem("component '" + component_name(d, x) + "' appears in more than one symmetry pair");
        if (!paired.insert(y).second)
            problem("component '" + component_name(d, y) + "' appears in more than one symmetry pair");
    }
    return v;
}

std::vector<BasisLabel> total_space(const MorseDecomposition& d) {
    std::vector<BasisLabel> labels;
    for (int i = 0; i < static_cast<int>(d.sets.size()); ++i)
        for (int j = 0; j < static_cast<int>(d.sets[i].components.size()); ++j)
            for (const auto& [degree, dim] : d.sets[i].components[j].betti.entries())
                for (int local = 0; local < dim; ++local) labels.push_back({i, j, degree, local});
    return labels;
}

std::vector<BasisLabel> interval_subspace(const MorseDecomposition& d, Interval I) {
    if (I.lo < 0 || I.hi >= static_cast<int>(d.sets.size()) || I.lo > I.hi)
        throw std::out_of_range("interval [" + std::to_string(I.lo) + "," + std::to_string(I.hi) +
                                "] is outside the decomposition");
    std::vector<BasisLabel> labels;
    for (const BasisLabel& l : total_space(d))
        if (l.set >= I.lo && l.set <= I.hi) labels.push_back(l);
    return labels;
}

std::string component_name(const MorseDecomposition& d, ComponentRef ref) {
    const MorseSet& s = d.sets[ref.set];
    if (s.components.size() == 1) return s.id;
    return s.id + "." + s.components[ref.comp].id;
}

}  // namespace conley
