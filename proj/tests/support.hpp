#pragma once

// Shared test helpers: the seeded RNG behind every randomized property test,
// small random generators, and brute-force oracles that enumerate vector
// spaces directly instead of going through the library's elimination code.

#include <cstdint>
#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "conley/chain_complex.hpp"
#include "conley/connection_solver.hpp"
#include "conley/gf2.hpp"
#include "conley/morse_model.hpp"
#include "conley/zigzag.hpp"

namespace testsupport {

// Set once in main from the --seed option; every test derives its generator
// from this so runs are reproducible.
extern std::uint64_t seed;

inline std::mt19937_64 make_rng(std::uint64_t salt) { return std::mt19937_64(seed ^ salt); }

inline conley::Gf2Matrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
    conley::Gf2Matrix m(rows, cols);
    std::bernoulli_distribution bit(0.5);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.set(r, c, bit(rng));
    return m;
}

inline conley::Gf2Matrix random_permutation(std::mt19937_64& rng, int n) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    conley::Gf2Matrix p(n, n);
    for (int i = 0; i < n; ++i) p.set(perm[i], i, true);
    return p;
}

/// Random chain complex: the degree-1 boundary is free, and every higher
/// boundary is drawn inside the kernel of the one below it, so the boundary
/// law holds by construction.
inline conley::ChainComplex random_complex(std::mt19937_64& rng, int max_top = 3, int max_dim = 4) {
    std::uniform_int_distribution<int> top_dist(0, max_top);
    std::uniform_int_distribution<int> dim_dist(0, max_dim);
    int top = top_dist(rng);
    std::vector<int> dims(top + 1);
    for (int& d : dims) d = dim_dist(rng);

    std::vector<conley::Gf2Matrix> boundaries(top + 1);
    for (int k = 1; k <= top; ++k) {
        if (k == 1) {
            boundaries[1] = random_matrix(rng, dims[0], dims[1]);
        } else {
            conley::Gf2Matrix kernel = conley::kernel_basis(boundaries[k - 1]);
            boundaries[k] = mul(kernel, random_matrix(rng, kernel.cols(), dims[k]));
        }
    }
    return conley::ChainComplex(std::move(dims), std::move(boundaries));
}

/// All vectors of the column span, enumerated by brute force over the 2^cols
/// coefficient choices. Vectors are returned as 0/1 strings for set compare.
inline std::set<std::vector<int>> span_of_columns(const conley::Gf2Matrix& m) {
    std::set<std::vector<int>> out;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << m.cols()); ++code) {
        std::vector<int> v(m.rows(), 0);
        for (int c = 0; c < m.cols(); ++c)
            if ((code >> c) & 1u)
                for (int r = 0; r < m.rows(); ++r) v[r] ^= m.get(r, c) ? 1 : 0;
        out.insert(std::move(v));
    }
    return out;
}

/// Brute-force kernel: every x with m*x = 0, found by trying all 2^cols
/// candidates.
inline std::set<std::vector<int>> kernel_by_enumeration(const conley::Gf2Matrix& m) {
    std::set<std::vector<int>> out;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << m.cols()); ++code) {
        std::vector<int> x(m.cols(), 0);
        for (int c = 0; c < m.cols(); ++c) x[c] = (code >> c) & 1u;
        std::vector<int> y(m.rows(), 0);
        for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < m.cols(); ++c) y[r] ^= (m.get(r, c) && x[c]) ? 1 : 0;
        bool zero = true;
        for (int r : y) zero = zero && r == 0;
        if (zero) out.insert(std::move(x));
    }
    return out;
}

/// Naive connection-matrix search: try all 2^v assignments and keep those
/// passing the full public checks. Returns canonical bit encodings.
inline std::vector<std::vector<bool>> naive_admissible(
    const conley::MorseDecomposition& d, const std::vector<conley::IntervalConstraint>& constraints,
    bool use_symmetry) {
    std::vector<conley::EntryVariable> vars = conley::enumerate_variables(d);
    int total_bits = 0;
    for (const conley::EntryVariable& v : vars) total_bits += v.rows * v.cols;

    std::vector<std::vector<bool>> out;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << total_bits); ++code) {
        std::vector<conley::Gf2Matrix> blocks;
        int bit = 0;
        for (const conley::EntryVariable& v : vars) {
            conley::Gf2Matrix b(v.rows, v.cols);
            for (int r = 0; r < v.rows; ++r)
                for (int c = 0; c < v.cols; ++c) b.set(r, c, (code >> bit++) & 1u);
            blocks.push_back(std::move(b));
        }
        conley::ConnectionMatrix cm = conley::assemble(d, vars, std::move(blocks));
        if (!conley::check_square_zero(cm)) continue;
        if (use_symmetry && !conley::check_symmetry(d, vars, cm)) continue;
        bool ok = true;
        for (const conley::IntervalConstraint& c : constraints)
            ok = ok && conley::check_interval(d, cm, c);
        if (!ok) continue;

        std::vector<bool> bits(total_bits);
        for (int b = 0; b < total_bits; ++b) bits[b] = (code >> b) & 1u;
        out.push_back(std::move(bits));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<bool> encode_blocks(const std::vector<conley::Gf2Matrix>& blocks) {
    std::vector<bool> bits;
    for (const conley::Gf2Matrix& b : blocks)
        for (int r = 0; r < b.rows(); ++r)
            for (int c = 0; c < b.cols(); ++c) bits.push_back(b.get(r, c));
    return bits;
}

inline std::vector<std::vector<bool>> report_encodings(const conley::SolverReport& report) {
    std::vector<std::vector<bool>> out;
    for (const conley::ConnectionMatrix& cm : report.admissible) out.push_back(encode_blocks(cm.blocks));
    std::sort(out.begin(), out.end());
    return out;
}

/// Random Morse decomposition with between one and `max_bits` free entries.
/// Half the draws stack index degrees like a Morse ladder so the entry
/// variables chain into genuine boundary-law constraints; sets may carry
/// symmetric component pairs.
inline conley::MorseDecomposition random_decomposition(std::mt19937_64& rng, int max_bits = 12) {
    std::uniform_int_distribution<int> nsets_dist(2, 4);
    std::uniform_int_distribution<int> ncomp_dist(1, 2);
    std::uniform_int_distribution<int> degree_dist(0, 3);
    std::bernoulli_distribution coin(0.5);

    for (;;) {
        conley::MorseDecomposition d;
        int nsets = nsets_dist(rng);
        bool ladder = coin(rng);
        for (int i = 0; i < nsets; ++i) {
            conley::MorseSet set;
            set.id = "S" + std::to_string(i);
            set.level = i;
            int ncomp = ncomp_dist(rng);
            bool twins = ncomp == 2 && coin(rng);  // equal indices, maybe paired
            auto draw_betti = [&]() {
                conley::BettiVector b;
                int base = ladder ? i : degree_dist(rng);
                b.set_dim(base, 1);
                if (coin(rng)) b.set_dim(base + 1, 1);
                return b;
            };
            conley::BettiVector shared = draw_betti();
            for (int j = 0; j < ncomp; ++j) {
                set.components.push_back(
                    {std::string(1, static_cast<char>('a' + j)), twins ? shared : draw_betti()});
            }
            d.sets.push_back(std::move(set));
            if (twins && coin(rng))
                d.symmetry_pairs.push_back({conley::ComponentRef{i, 0}, conley::ComponentRef{i, 1}});
        }
        int bits = 0;
        for (const conley::EntryVariable& v : conley::enumerate_variables(d)) bits += v.rows * v.cols;
        if (bits >= 1 && bits <= max_bits) return d;
    }
}

/// Draw a random degree-drop family t with boundary(a) t + t boundary(c) = 0
/// by solving the linear condition entrywise and sampling its kernel. Such
/// families parametrize the extensions b = a (+) c with twisted boundary.
inline std::vector<conley::Gf2Matrix> random_twist(std::mt19937_64& rng, const conley::ChainComplex& a,
                                                   const conley::ChainComplex& c) {
    using conley::Gf2Matrix;
    int top = std::max(a.top_degree() + 1, c.top_degree());
    std::vector<int> offsets(top + 2, 0);
    for (int k = 1; k <= top; ++k) offsets[k + 1] = offsets[k] + a.dim(k - 1) * c.dim(k);
    int unknowns = offsets[top + 1];
    if (unknowns == 0) return {};

    auto var = [&](int k, int row, int col) { return offsets[k] + row * c.dim(k) + col; };

    // One linear constraint per entry (i, j) of the degree-k condition.
    std::vector<std::vector<int>> rows;
    for (int k = 2; k <= top; ++k) {
        Gf2Matrix da = a.boundary(k - 1);  // a.dim(k-2) x a.dim(k-1)
        Gf2Matrix dc = c.boundary(k);      // c.dim(k-1) x c.dim(k)
        for (int i = 0; i < a.dim(k - 2); ++i)
            for (int j = 0; j < c.dim(k); ++j) {
                std::vector<int> row(unknowns, 0);
                for (int m = 0; m < a.dim(k - 1); ++m)
                    if (da.get(i, m)) row[var(k, m, j)] ^= 1;
                for (int m = 0; m < c.dim(k - 1); ++m)
                    if (dc.get(m, j)) row[var(k - 1, i, m)] ^= 1;
                rows.push_back(std::move(row));
            }
    }

    Gf2Matrix kernel = conley::kernel_basis(Gf2Matrix::from_rows(rows, unknowns));
    Gf2Matrix flat = mul(kernel, random_matrix(rng, kernel.cols(), 1));

    std::vector<Gf2Matrix> twist(top + 1);
    for (int k = 1; k <= top; ++k) {
        twist[k] = Gf2Matrix(a.dim(k - 1), c.dim(k));
        for (int r = 0; r < a.dim(k - 1); ++r)
            for (int col = 0; col < c.dim(k); ++col) twist[k].set(r, col, flat.get(var(k, r, col), 0));
    }
    return twist;
}

/// The map a twist family induces on homology, computed without any diagram
/// chase: apply t to the chosen representatives and project.
inline conley::Gf2Matrix twist_induced_map(const std::vector<conley::Gf2Matrix>& twist,
                                           const conley::ChainComplex& a, const conley::ChainComplex& c,
                                           const conley::HomologyData& ha,
                                           const conley::HomologyData& hc, int k) {
    conley::Gf2Matrix t_k =
        (k >= 1 && k < static_cast<int>(twist.size()) && twist[k].rows() + twist[k].cols() > 0)
            ? twist[k]
            : conley::Gf2Matrix(a.dim(k - 1), c.dim(k));
    if (ha.betti(k - 1) == 0 || hc.betti(k) == 0)
        return conley::Gf2Matrix(ha.betti(k - 1), hc.betti(k));
    return ha.project(k - 1, mul(t_k, hc.degrees[k].cycle_reps));
}

}  // namespace testsupport
