#pragma once

#include <string>
#include <vector>

#include "conley/chain_complex.hpp"
#include "conley/gf2.hpp"

namespace conley {

/// Degreewise linear map between chain complexes. The commutation law
/// (target boundary after the map equals the map after the source boundary)
/// is what validate_chain_map checks; construction does not enforce it.
struct ChainMap {
    ChainComplex source;
    ChainComplex target;
    std::vector<Gf2Matrix> maps;  // maps[k]: target.dim(k) x source.dim(k)

    Gf2Matrix at(int k) const;
};

ChainMap make_chain_map(ChainComplex source, ChainComplex target, std::vector<Gf2Matrix> maps);

struct ValidationReport {
    bool ok = true;
    int degree = -1;      // first failing degree when !ok
    std::string message;  // names the violated law
};

ValidationReport validate_chain_map(const ChainMap& f);

/// Short exact sequence of chain complexes 0 -> A -> B -> C -> 0, stored as
/// the inclusion-side and projection-side chain maps (inc.target and
/// proj.source must be the same complex).
struct ShortExactSequence {
    ChainMap inc;   // A -> B
    ChainMap proj;  // B -> C

    const ChainComplex& a() const { return inc.source; }
    const ChainComplex& b() const { return inc.target; }
    const ChainComplex& c() const { return proj.target; }
};

ShortExactSequence make_ses(ChainComplex a, ChainComplex b, ChainComplex c,
                            std::vector<Gf2Matrix> inc_maps, std::vector<Gf2Matrix> proj_maps);

/// Split sequence on a direct sum B = A (+) C with canonical maps and the
/// given degree-drop block t (empty t means the genuine split sum).
ShortExactSequence extension_by_twist(const ChainComplex& a, const ChainComplex& c,
                                      const std::vector<Gf2Matrix>& twist = {});

/// Degreewise checks: both maps commute with the boundaries, inc is
/// injective, proj is surjective, and image(inc) = kernel(proj). The report
/// names the first failing degree and law.
ValidationReport validate_ses(const ShortExactSequence& s);

/// The connecting homomorphism H_k(C) -> H_{k-1}(A) computed by the literal
/// diagram chase: lift each homology generator of C through proj, push down
/// by B's boundary, pull back through inc, and read off homology
/// coordinates in A. Requires a validated sequence; a failing internal lift
/// means the input was not exact and throws std::logic_error.
Gf2Matrix connecting_homomorphism(const ShortExactSequence& s, int k);

struct LesNode {
    std::string label;  // e.g. "H_2(A)"
    int dim = 0;
};

/// Long exact sequence ... -> H_k(A) -> H_k(B) -> H_k(C) -> H_{k-1}(A) -> ...
/// listed from the top homology degree down to H_0(C); maps[i] sends
/// nodes[i] to nodes[i+1].
struct LongExactSequence {
    std::vector<LesNode> nodes;
    std::vector<Gf2Matrix> maps;
};

LongExactSequence long_exact_sequence(const ShortExactSequence& s);

/// Exactness at every node (image of each map equals the kernel of the
/// next, with zero groups padding both ends).
ValidationReport check_exactness(const LongExactSequence& les);

/// Map induced on homology by a chain map, in the deterministic homology
/// coordinates of source and target.
Gf2Matrix induced_map(const ChainMap& f, const HomologyData& source_h, const HomologyData& target_h,
                      int k);

}  // namespace conley
