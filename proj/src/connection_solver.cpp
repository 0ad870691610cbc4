#include "conley/connection_solver.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "conley/errors.hpp"

namespace conley {

namespace {

struct LabelIndex {
    int total = 0;
    // (set, comp, degree) -> position of the first coordinate of that block
    std::map<std::tuple<int, int, int>, int> offset;
    // positions of all interval labels, grouped by degree
    std::vector<BasisLabel> labels;

    explicit LabelIndex(const MorseDecomposition& d) : labels(total_space(d)) {
        total = static_cast<int>(labels.size());
        for (int p = 0; p < total; ++p) {
            const BasisLabel& l = labels[p];
            if (l.local == 0) offset[{l.set, l.comp, l.degree}] = p;
        }
    }
};

using VarKey = std::tuple<int, int, int, int, int>;  // source set/comp, target set/comp, degree

VarKey key_of(const EntryVariable& v) {
    return {v.source.set, v.source.comp, v.target.set, v.target.comp, v.degree};
}

/// Component involution induced by the symmetry pairs (identity elsewhere).
std::vector<std::vector<int>> component_involution(const MorseDecomposition& d) {
    std::vector<std::vector<int>> sigma(d.sets.size());
    for (std::size_t i = 0; i < d.sets.size(); ++i) {
        sigma[i].resize(d.sets[i].components.size());
        for (std::size_t j = 0; j < sigma[i].size(); ++j) sigma[i][j] = static_cast<int>(j);
    }
    for (const auto& [x, y] : d.symmetry_pairs) {
        sigma[x.set][x.comp] = y.comp;
        sigma[y.set][y.comp] = x.comp;
    }
    return sigma;
}

std::vector<bool> encode_assignment(const std::vector<Gf2Matrix>& blocks) {
    std::vector<bool> bits;
    for (const Gf2Matrix& b : blocks)
        for (int r = 0; r < b.rows(); ++r)
            for (int c = 0; c < b.cols(); ++c) bits.push_back(b.get(r, c));
    return bits;
}

}  // namespace

std::vector<EntryVariable> enumerate_variables(const MorseDecomposition& d) {
    std::vector<EntryVariable> vars;
    int nsets = static_cast<int>(d.sets.size());
    for (int ti = 0; ti < nsets; ++ti)
        for (int sj = ti + 1; sj < nsets; ++sj) {
            int max_deg = 0;
            for (const MorseComponent& c : d.sets[sj].components)
                max_deg = std::max(max_deg, c.betti.max_degree());
            for (int k = 1; k <= max_deg; ++k)
                for (int tc = 0; tc < static_cast<int>(d.sets[ti].components.size()); ++tc)
                    for (int sc = 0; sc < static_cast<int>(d.sets[sj].components.size()); ++sc) {
                        int rows = d.sets[ti].components[tc].betti.dim(k - 1);
                        int cols = d.sets[sj].components[sc].betti.dim(k);
                        if (rows > 0 && cols > 0)
                            vars.push_back({{sj, sc}, {ti, tc}, k, rows, cols});
                    }
        }
    return vars;
}

ConnectionMatrix assemble(const MorseDecomposition& d, const std::vector<EntryVariable>& vars,
                          std::vector<Gf2Matrix> blocks) {
    if (vars.size() != blocks.size())
        throw DimensionError("assemble: block count does not match the variable list");
    LabelIndex idx(d);
    Gf2Matrix m(idx.total, idx.total);
    for (std::size_t v = 0; v < vars.size(); ++v) {
        const EntryVariable& var = vars[v];
        const Gf2Matrix& blk = blocks[v];
        if (blk.rows() != var.rows || blk.cols() != var.cols)
            throw DimensionError("assemble: block " + std::to_string(v) + " has the wrong shape");
        int roff = idx.offset.at({var.target.set, var.target.comp, var.degree - 1});
        int coff = idx.offset.at({var.source.set, var.source.comp, var.degree});
        for (int r = 0; r < blk.rows(); ++r)
            for (int c = 0; c < blk.cols(); ++c)
                if (blk.get(r, c)) m.set(roff + r, coff + c, true);
    }
    return ConnectionMatrix{std::move(blocks), std::move(m)};
}

bool check_square_zero(const ConnectionMatrix& cm) {
    return mul(cm.assembled, cm.assembled).is_zero();
}

BettiVector interval_homology(const MorseDecomposition& d, const ConnectionMatrix& cm, Interval I) {
    std::vector<BasisLabel> sub = interval_subspace(d, I);
    LabelIndex idx(d);

    int max_deg = -1;
    for (const BasisLabel& l : sub) max_deg = std::max(max_deg, l.degree);
    std::vector<std::vector<int>> pos(max_deg + 2);
    for (const BasisLabel& l : sub)
        pos[l.degree].push_back(idx.offset.at({l.set, l.comp, l.degree}) + l.local);

    // rank of the map from degree k down to degree k-1 inside the interval
    auto rank_at = [&](int k) {
        if (k < 1 || k > max_deg) return 0;
        return rank(cm.assembled.select(pos[k - 1], pos[k]));
    };

    BettiVector out;
    for (int k = 0; k <= max_deg; ++k) {
        int n = static_cast<int>(pos[k].size());
        out.set_dim(k, n - rank_at(k) - rank_at(k + 1));
    }
    return out;
}

bool check_interval(const MorseDecomposition& d, const ConnectionMatrix& cm,
                    const IntervalConstraint& c) {
    return interval_homology(d, cm, c.interval) == c.betti;
}

bool check_symmetry(const MorseDecomposition& d, const std::vector<EntryVariable>& vars,
                    const ConnectionMatrix& cm) {
    if (d.symmetry_pairs.empty()) return true;
    std::vector<std::vector<int>> sigma = component_involution(d);
    std::map<VarKey, int> by_key;
    for (std::size_t v = 0; v < vars.size(); ++v) by_key[key_of(vars[v])] = static_cast<int>(v);

    for (std::size_t v = 0; v < vars.size(); ++v) {
        const EntryVariable& var = vars[v];
        VarKey mirrored{var.source.set, sigma[var.source.set][var.source.comp], var.target.set,
                        sigma[var.target.set][var.target.comp], var.degree};
        auto it = by_key.find(mirrored);
        if (it == by_key.end()) {
            // No mirrored slot: symmetry demands this block vanish.
            if (!cm.blocks[v].is_zero()) return false;
        } else if (cm.blocks[v] != cm.blocks[it->second]) {
            return false;
        }
    }
    return true;
}

namespace {

struct SearchStep {
    int var = -1;      // variable assigned freely at this step
    int partner = -1;  // mirrored variable assigned the same block, or -1
    int bits = 0;
};

struct Composition {
    // sum over middle components of blocks[left] * blocks[right]
    std::vector<std::pair<int, int>> terms;
    int ready_at = -1;  // last search step among the involved variables
};

}  // namespace

SolverReport solve(const MorseDecomposition& d, const std::vector<IntervalConstraint>& constraints,
                   const SolverOptions& options) {
    MorseValidation mv = validate(d);
    if (!mv.ok) throw std::invalid_argument("invalid Morse decomposition: " + mv.problems.front());
    for (const IntervalConstraint& c : constraints)
        interval_subspace(d, c.interval);  // throws on out-of-range intervals

    SolverReport report;
    report.variables = enumerate_variables(d);
    const std::vector<EntryVariable>& vars = report.variables;
    int nvars = static_cast<int>(vars.size());

    bool symmetric = options.use_symmetry && !d.symmetry_pairs.empty();
    std::vector<int> mirror(nvars, -1);
    if (symmetric) {
        std::vector<std::vector<int>> sigma = component_involution(d);
        std::map<VarKey, int> by_key;
        for (int v = 0; v < nvars; ++v) by_key[key_of(vars[v])] = v;
        for (int v = 0; v < nvars; ++v) {
            VarKey mirrored{vars[v].source.set, sigma[vars[v].source.set][vars[v].source.comp],
                            vars[v].target.set, sigma[vars[v].target.set][vars[v].target.comp],
                            vars[v].degree};
            auto it = by_key.find(mirrored);
            // Equal index homology of paired components (validated above)
            // guarantees the mirrored slot exists.
            mirror[v] = it == by_key.end() ? -1 : it->second;
        }
    }

    // Search order: high degree first so the cascade constraints bind early.
    std::vector<int> order(nvars);
    for (int v = 0; v < nvars; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        const EntryVariable &a = vars[x], &b = vars[y];
        return std::tie(b.degree, a.target.set, a.source.set, a.target.comp, a.source.comp) <
               std::tie(a.degree, b.target.set, b.source.set, b.target.comp, b.source.comp);
    });

    std::vector<SearchStep> steps;
    std::vector<int> step_of(nvars, -1);
    int free_bits = 0;
    for (int v : order) {
        if (step_of[v] >= 0) continue;  // already derived from its mirror
        SearchStep step;
        step.var = v;
        step.bits = vars[v].rows * vars[v].cols;
        if (step.bits > 62)
            throw std::invalid_argument("a single connection-matrix block has " +
                                        std::to_string(step.bits) +
                                        " entries; its assignments cannot be enumerated");
        step_of[v] = static_cast<int>(steps.size());
        if (symmetric && mirror[v] >= 0 && mirror[v] != v && step_of[mirror[v]] < 0) {
            step.partner = mirror[v];
            step_of[mirror[v]] = step_of[v];
        }
        free_bits += step.bits;
        steps.push_back(step);
    }
    if (free_bits > options.max_vars) throw VariableBudgetError(free_bits, options.max_vars);

    // Boundary-law products, grouped by (source, target, upper degree) and
    // checked as soon as the last factor is assigned.
    std::vector<Composition> compositions;
    {
        std::map<std::tuple<int, int, int, int, int>, std::size_t> comp_index;
        for (int w = 0; w < nvars; ++w)
            for (int v = 0; v < nvars; ++v) {
                if (!(vars[v].source == vars[w].target) || vars[v].degree != vars[w].degree - 1)
                    continue;
                std::tuple<int, int, int, int, int> key{vars[w].source.set, vars[w].source.comp,
                                                        vars[v].target.set, vars[v].target.comp,
                                                        vars[w].degree};
                auto [it, fresh] = comp_index.emplace(key, compositions.size());
                if (fresh) compositions.push_back({});
                Composition& comp = compositions[it->second];
                comp.terms.emplace_back(v, w);
                comp.ready_at = std::max({comp.ready_at, step_of[v], step_of[w]});
            }
    }
    std::vector<std::vector<int>> comps_at(steps.size());
    for (std::size_t ci = 0; ci < compositions.size(); ++ci)
        comps_at[compositions[ci].ready_at].push_back(static_cast<int>(ci));

    std::vector<Gf2Matrix> blocks(nvars);
    for (int v = 0; v < nvars; ++v) blocks[v] = Gf2Matrix(vars[v].rows, vars[v].cols);

    std::vector<char> seen_zero(nvars, 0), seen_nonzero(nvars, 0);

    auto decode_into = [&](int v, std::uint64_t code) {
        Gf2Matrix& b = blocks[v];
        for (int r = 0; r < b.rows(); ++r)
            for (int c = 0; c < b.cols(); ++c) b.set(r, c, (code >> (r * b.cols() + c)) & 1u);
    };

    auto leaf = [&]() {
        ConnectionMatrix cm = assemble(d, vars, blocks);
        // The pruning already covered these laws; re-verify on the assembled
        // matrix so reported results never depend on the pruning logic.
        if (!check_square_zero(cm)) return;
        if (symmetric && !check_symmetry(d, vars, cm)) return;
        for (const IntervalConstraint& c : constraints)
            if (!check_interval(d, cm, c)) return;

        ++report.admissible_count;
        for (int v = 0; v < nvars; ++v)
            (blocks[v].is_zero() ? seen_zero[v] : seen_nonzero[v]) = 1;
        if (report.admissible.size() < options.store_cap)
            report.admissible.push_back(std::move(cm));
        else
            report.truncated = true;
    };

    auto composition_ok = [&](int ci) {
        const Composition& comp = compositions[ci];
        Gf2Matrix sum;
        bool first = true;
        for (const auto& [v, w] : comp.terms) {
            Gf2Matrix prod = mul(blocks[v], blocks[w]);
            sum = first ? std::move(prod) : add(sum, prod);
            first = false;
        }
        return sum.is_zero();
    };

    auto dfs = [&](auto&& self, std::size_t si) -> void {
        if (si == steps.size()) {
            leaf();
            return;
        }
        const SearchStep& step = steps[si];
        std::uint64_t limit = std::uint64_t{1} << step.bits;
        for (std::uint64_t code = 0; code < limit; ++code) {
            decode_into(step.var, code);
            if (step.partner >= 0) decode_into(step.partner, code);
            bool viable = true;
            for (int ci : comps_at[si])
                if (!composition_ok(ci)) {
                    viable = false;
                    break;
                }
            if (viable) self(self, si + 1);
        }
        decode_into(step.var, 0);
        if (step.partner >= 0) decode_into(step.partner, 0);
    };
    dfs(dfs, 0);

    std::sort(report.admissible.begin(), report.admissible.end(),
              [](const ConnectionMatrix& a, const ConnectionMatrix& b) {
                  return encode_assignment(a.blocks) < encode_assignment(b.blocks);
              });

    report.consistent = report.admissible_count > 0;
    report.status.assign(nvars, VariableStatus::undetermined);
    if (report.consistent)
        for (int v = 0; v < nvars; ++v) {
            if (seen_nonzero[v] && !seen_zero[v]) report.status[v] = VariableStatus::forced_nonzero;
            if (seen_zero[v] && !seen_nonzero[v]) report.status[v] = VariableStatus::forced_zero;
        }

    if (report.consistent) {
        std::map<std::pair<ComponentRef, ComponentRef>, std::size_t> edge_index;
        for (int v = 0; v < nvars; ++v) {
            if (vars[v].source.set != vars[v].target.set + 1) continue;  // adjacent levels only
            if (!seen_nonzero[v]) continue;
            std::pair<ComponentRef, ComponentRef> key{vars[v].source, vars[v].target};
            auto [it, fresh] = edge_index.emplace(key, report.edges.size());
            if (fresh)
                report.edges.push_back({vars[v].source, vars[v].target, EdgeStatus::possible});
            if (report.status[v] == VariableStatus::forced_nonzero)
                report.edges[it->second].status = EdgeStatus::guaranteed;
        }
    }
    return report;
}

}  // namespace conley
