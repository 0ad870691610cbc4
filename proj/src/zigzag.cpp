#include "conley/zigzag.hpp"

#include <algorithm>
#include <stdexcept>

#include "conley/errors.hpp"

namespace conley {

namespace {

Gf2Matrix zero(int rows, int cols) { return Gf2Matrix(rows, cols); }

ValidationReport fail(int degree, std::string message) {
    return ValidationReport{false, degree, std::move(message)};
}

}  // namespace

Gf2Matrix ChainMap::at(int k) const {
    if (k >= 0 && k < static_cast<int>(maps.size())) return maps[k];
    return zero(target.dim(k), source.dim(k));
}

ChainMap make_chain_map(ChainComplex source, ChainComplex target, std::vector<Gf2Matrix> maps) {
    int top = std::max(source.top_degree(), target.top_degree());
    maps.resize(top + 1);
    for (int k = 0; k <= top; ++k) {
        if (maps[k].rows() + maps[k].cols() == 0) maps[k] = zero(target.dim(k), source.dim(k));
        if (maps[k].rows() != target.dim(k) || maps[k].cols() != source.dim(k))
            throw DimensionError("chain map at degree " + std::to_string(k) + " has shape " +
                                 std::to_string(maps[k].rows()) + "x" + std::to_string(maps[k].cols()) +
                                 ", expected " + std::to_string(target.dim(k)) + "x" +
                                 std::to_string(source.dim(k)));
    }
    return ChainMap{std::move(source), std::move(target), std::move(maps)};
}

ValidationReport validate_chain_map(const ChainMap& f) {
    int top = std::max(f.source.top_degree(), f.target.top_degree());
    for (int k = 1; k <= top; ++k)
        if (mul(f.target.boundary(k), f.at(k)) != mul(f.at(k - 1), f.source.boundary(k)))
            return fail(k, "chain map does not commute with boundaries at degree " + std::to_string(k));
    return {};
}

ShortExactSequence make_ses(ChainComplex a, ChainComplex b, ChainComplex c,
                            std::vector<Gf2Matrix> inc_maps, std::vector<Gf2Matrix> proj_maps) {
    ChainMap inc = make_chain_map(std::move(a), b, std::move(inc_maps));
    ChainMap proj = make_chain_map(std::move(b), std::move(c), std::move(proj_maps));
    return ShortExactSequence{std::move(inc), std::move(proj)};
}

ShortExactSequence extension_by_twist(const ChainComplex& a, const ChainComplex& c,
                                      const std::vector<Gf2Matrix>& twist) {
    int top = std::max(a.top_degree(), c.top_degree());
    auto twist_at = [&](int k) {
        if (k >= 0 && k < static_cast<int>(twist.size()) && twist[k].rows() + twist[k].cols() > 0)
            return twist[k];
        return zero(a.dim(k - 1), c.dim(k));
    };

    std::vector<int> dims(top + 1);
    std::vector<Gf2Matrix> boundaries(top + 1);
    std::vector<Gf2Matrix> inc_maps(top + 1), proj_maps(top + 1);
    for (int k = 0; k <= top; ++k) {
        dims[k] = a.dim(k) + c.dim(k);
        if (k >= 1)
            boundaries[k] = block_assemble(
                {{a.boundary(k), twist_at(k)}, {zero(c.dim(k - 1), a.dim(k)), c.boundary(k)}});
        inc_maps[k] = block_assemble({{Gf2Matrix::identity(a.dim(k))}, {zero(c.dim(k), a.dim(k))}});
        proj_maps[k] = block_assemble({{zero(c.dim(k), a.dim(k)), Gf2Matrix::identity(c.dim(k))}});
    }
    ChainComplex b(std::move(dims), std::move(boundaries));
    return make_ses(a, std::move(b), c, std::move(inc_maps), std::move(proj_maps));
}

ValidationReport validate_ses(const ShortExactSequence& s) {
    if (!(s.inc.target == s.proj.source)) return fail(-1, "middle complexes of inc and proj differ");
    if (ValidationReport r = validate_chain_map(s.inc); !r.ok)
        return fail(r.degree, "inc: " + r.message);
    if (ValidationReport r = validate_chain_map(s.proj); !r.ok)
        return fail(r.degree, "proj: " + r.message);

    int top = std::max({s.a().top_degree(), s.b().top_degree(), s.c().top_degree()});
    for (int k = 0; k <= top; ++k) {
        Gf2Matrix inc_k = s.inc.at(k);
        Gf2Matrix proj_k = s.proj.at(k);
        if (rank(inc_k) != s.a().dim(k))
            return fail(k, "inc is not injective at degree " + std::to_string(k));
        if (rank(proj_k) != s.c().dim(k))
            return fail(k, "proj is not surjective at degree " + std::to_string(k));
        if (!mul(proj_k, inc_k).is_zero())
            return fail(k, "proj after inc is nonzero at degree " + std::to_string(k));
        // With proj o inc = 0, equality of image(inc) and kernel(proj) is a
        // dimension count.
        if (rank(inc_k) != s.b().dim(k) - rank(proj_k))
            return fail(k, "image of inc is smaller than kernel of proj at degree " + std::to_string(k));
    }
    return {};
}

namespace {

Gf2Matrix connecting(const ShortExactSequence& s, int k, const HomologyData& ha,
                     const HomologyData& hc) {
    int rows = ha.betti(k - 1);
    int cols = hc.betti(k);
    if (rows == 0 || cols == 0) return zero(rows, cols);

    const Gf2Matrix& reps = hc.degrees[k].cycle_reps;  // c.dim(k) x cols
    auto lifted = solve(s.proj.at(k), reps);
    if (!lifted) throw std::logic_error("connecting homomorphism: lift through proj failed");
    Gf2Matrix pushed = mul(s.b().boundary(k), *lifted);
    auto pulled = solve(s.inc.at(k - 1), pushed);
    if (!pulled) throw std::logic_error("connecting homomorphism: pull-back through inc failed");
    return ha.project(k - 1, *pulled);
}

}  // namespace

Gf2Matrix connecting_homomorphism(const ShortExactSequence& s, int k) {
    return connecting(s, k, homology(s.a()), homology(s.c()));
}

Gf2Matrix induced_map(const ChainMap& f, const HomologyData& source_h, const HomologyData& target_h,
                      int k) {
    int rows = target_h.betti(k);
    int cols = source_h.betti(k);
    if (rows == 0 || cols == 0) return zero(rows, cols);
    return target_h.project(k, mul(f.at(k), source_h.degrees[k].cycle_reps));
}

LongExactSequence long_exact_sequence(const ShortExactSequence& s) {
    HomologyData ha = homology(s.a());
    HomologyData hb = homology(s.b());
    HomologyData hc = homology(s.c());
    int top = std::max({s.a().top_degree(), s.b().top_degree(), s.c().top_degree()});

    LongExactSequence les;
    for (int k = top; k >= 0; --k) {
        les.nodes.push_back({"H_" + std::to_string(k) + "(A)", ha.betti(k)});
        les.maps.push_back(induced_map(s.inc, ha, hb, k));
        les.nodes.push_back({"H_" + std::to_string(k) + "(B)", hb.betti(k)});
        les.maps.push_back(induced_map(s.proj, hb, hc, k));
        les.nodes.push_back({"H_" + std::to_string(k) + "(C)", hc.betti(k)});
        if (k > 0) les.maps.push_back(connecting(s, k, ha, hc));
    }
    return les;
}

ValidationReport check_exactness(const LongExactSequence& les) {
    for (std::size_t i = 0; i < les.nodes.size(); ++i) {
        int n = les.nodes[i].dim;
        int rank_in = i == 0 ? 0 : rank(les.maps[i - 1]);
        int rank_out = i < les.maps.size() ? rank(les.maps[i]) : 0;
        if (i > 0 && i < les.maps.size() && !mul(les.maps[i], les.maps[i - 1]).is_zero())
            return fail(static_cast<int>(i),
                        "consecutive maps do not compose to zero at " + les.nodes[i].label);
        if (rank_in != n - rank_out)
            return fail(static_cast<int>(i), "image/kernel dimensions differ at " + les.nodes[i].label);
    }
    return {};
}

}  // namespace conley
