#include <catch2/catch_amalgamated.hpp>

#include "conley/chain_complex.hpp"
#include "conley/zigzag.hpp"
#include "support.hpp"

using conley::ChainComplex;
using conley::Gf2Matrix;
using conley::ShortExactSequence;
using testsupport::make_rng;
using testsupport::random_complex;
using testsupport::random_matrix;

using testsupport::random_twist;
using testsupport::twist_induced_map;

namespace {

int top_of(const ShortExactSequence& s) {
    return std::max({s.a().top_degree(), s.b().top_degree(), s.c().top_degree()});
}

ShortExactSequence conjugated(std::mt19937_64& rng, const ShortExactSequence& s,
                              std::vector<Gf2Matrix>& pa_out, std::vector<Gf2Matrix>& pc_out) {
    int top = top_of(s);
    std::vector<Gf2Matrix> pa(top + 1), pb(top + 1), pc(top + 1);
    std::vector<int> da(top + 1), db(top + 1), dc(top + 1);
    for (int k = 0; k <= top; ++k) {
        pa[k] = testsupport::random_permutation(rng, s.a().dim(k));
        pb[k] = testsupport::random_permutation(rng, s.b().dim(k));
        pc[k] = testsupport::random_permutation(rng, s.c().dim(k));
        da[k] = s.a().dim(k);
        db[k] = s.b().dim(k);
        dc[k] = s.c().dim(k);
    }
    auto conjugate = [&](const ChainComplex& x, const std::vector<Gf2Matrix>& p,
                         const std::vector<int>& dims) {
        std::vector<Gf2Matrix> boundaries(top + 1);
        for (int k = 1; k <= top; ++k)
            boundaries[k] = mul(mul(p[k - 1], x.boundary(k)), p[k].transposed());
        return ChainComplex(dims, std::move(boundaries));
    };
    std::vector<Gf2Matrix> inc(top + 1), proj(top + 1);
    for (int k = 0; k <= top; ++k) {
        inc[k] = mul(mul(pb[k], s.inc.at(k)), pa[k].transposed());
        proj[k] = mul(mul(pc[k], s.proj.at(k)), pb[k].transposed());
    }
    pa_out = pa;
    pc_out = pc;
    return make_ses(conjugate(s.a(), pa, da), conjugate(s.b(), pb, db), conjugate(s.c(), pc, dc),
                    std::move(inc), std::move(proj));
}

}  // namespace

TEST_CASE("split sums have zero connecting maps in every degree") {
    auto rng = make_rng(0x5111);
    for (int trial = 0; trial < 20; ++trial) {
        ShortExactSequence s = extension_by_twist(random_complex(rng), random_complex(rng));
        REQUIRE(validate_ses(s).ok);
        for (int k = 1; k <= top_of(s); ++k) CHECK(connecting_homomorphism(s, k).is_zero());
        CHECK(check_exactness(long_exact_sequence(s)).ok);
    }
}

TEST_CASE("saddle model: the connecting map is the identity") {
    // A concentrated in degree 1, C in degree 2, B joining them by an
    // isomorphism boundary. The one-step chase sends the generator of
    // H_2(C) to the generator of H_1(A).
    ChainComplex a({0, 1}, {});
    ChainComplex c({0, 0, 1}, {});
    ShortExactSequence s = extension_by_twist(a, c, {Gf2Matrix(), Gf2Matrix(),
                                                     Gf2Matrix::from_rows({{1}})});
    REQUIRE(validate_ses(s).ok);
    CHECK(connecting_homomorphism(s, 2) == Gf2Matrix::identity(1));

    // H(B) vanishes in degrees 1 and 2, so exactness forces an isomorphism.
    conley::HomologyData hb = conley::homology(s.b());
    CHECK(hb.betti(1) == 0);
    CHECK(hb.betti(2) == 0);
    CHECK(check_exactness(long_exact_sequence(s)).ok);

    // The same sequence written out explicitly.
    ChainComplex b({0, 1, 1}, {Gf2Matrix(), Gf2Matrix(0, 1), Gf2Matrix::from_rows({{1}})});
    ShortExactSequence explicit_s =
        make_ses(a, b, c, {Gf2Matrix(), Gf2Matrix::from_rows({{1}})},
                 {Gf2Matrix(), Gf2Matrix(), Gf2Matrix::from_rows({{1}})});
    REQUIRE(validate_ses(explicit_s).ok);
    CHECK(connecting_homomorphism(explicit_s, 2) == Gf2Matrix::identity(1));
}

TEST_CASE("trivial homology upstairs gives an empty connecting matrix") {
    ChainComplex a = conley::from_cw(conley::builtin_complex("circle"));
    ChainComplex c = conley::from_cw(conley::builtin_complex("point"));
    ShortExactSequence s = extension_by_twist(a, c);
    Gf2Matrix delta = connecting_homomorphism(s, 1);  // H_1(C) = 0
    CHECK(delta.rows() == 1);                         // dim H_0(A)
    CHECK(delta.cols() == 0);
}

TEST_CASE("validate_ses names the first failing degree and law") {
    ChainComplex pt({1}, {});
    ChainComplex two({2}, {});

    SECTION("dead projection column") {
        ShortExactSequence s = make_ses(pt, two, pt, {Gf2Matrix::from_rows({{1}, {0}})},
                                        {Gf2Matrix(1, 2)});
        conley::ValidationReport r = validate_ses(s);
        CHECK_FALSE(r.ok);
        CHECK(r.degree == 0);
        CHECK_THAT(r.message, Catch::Matchers::ContainsSubstring("surjective"));
    }
    SECTION("non-injective inclusion") {
        ShortExactSequence s = make_ses(pt, two, pt, {Gf2Matrix(2, 1)},
                                        {Gf2Matrix::from_rows({{1, 0}})});
        conley::ValidationReport r = validate_ses(s);
        CHECK_FALSE(r.ok);
        CHECK_THAT(r.message, Catch::Matchers::ContainsSubstring("injective"));
    }
    SECTION("image strictly smaller than kernel") {
        // inc embeds one point into three, proj kills two: kernel of proj is
        // two-dimensional but the image only one-dimensional.
        ChainComplex three({3}, {});
        ShortExactSequence s =
            make_ses(pt, three, pt, {Gf2Matrix::from_rows({{1}, {0}, {0}})},
                     {Gf2Matrix::from_rows({{0, 0, 1}})});
        conley::ValidationReport r = validate_ses(s);
        CHECK_FALSE(r.ok);
        CHECK_THAT(r.message, Catch::Matchers::ContainsSubstring("kernel"));
    }
    SECTION("broken commutation") {
        ChainComplex segment({1, 1}, {Gf2Matrix(), Gf2Matrix::from_rows({{1}})});
        conley::ChainMap f = make_chain_map(segment, segment,
                                            {Gf2Matrix::from_rows({{1}}), Gf2Matrix(1, 1)});
        conley::ValidationReport r = validate_chain_map(f);
        CHECK_FALSE(r.ok);
        CHECK(r.degree == 1);
    }
    SECTION("split sum is valid") {
        auto rng = make_rng(0xab);
        ShortExactSequence s = extension_by_twist(random_complex(rng), random_complex(rng));
        CHECK(validate_ses(s).ok);
    }
}

TEST_CASE("twist oracle: connecting map equals the twist-induced map") {
    auto rng = make_rng(0x771f);
    int nontrivial = 0;
    for (int trial = 0; trial < 100; ++trial) {
        ChainComplex a = random_complex(rng);
        ChainComplex c = random_complex(rng);
        std::vector<Gf2Matrix> twist = random_twist(rng, a, c);
        ShortExactSequence s = extension_by_twist(a, c, twist);
        REQUIRE(validate_ses(s).ok);

        conley::HomologyData ha = conley::homology(a);
        conley::HomologyData hc = conley::homology(c);
        for (int k = 1; k <= top_of(s); ++k) {
            Gf2Matrix chased = connecting_homomorphism(s, k);
            CHECK(chased == twist_induced_map(twist, a, c, ha, hc, k));
            if (!chased.is_zero()) ++nontrivial;
        }
        CHECK(check_exactness(long_exact_sequence(s)).ok);
    }
    CHECK(nontrivial > 5);  // the sample genuinely exercises nonzero chases
}

TEST_CASE("connecting map transports along cell reorderings") {
    auto rng = make_rng(0x9e4d);
    for (int trial = 0; trial < 30; ++trial) {
        ChainComplex a = random_complex(rng);
        ChainComplex c = random_complex(rng);
        ShortExactSequence s = extension_by_twist(a, c, random_twist(rng, a, c));
        std::vector<Gf2Matrix> pa, pc;
        ShortExactSequence s2 = conjugated(rng, s, pa, pc);
        REQUIRE(validate_ses(s2).ok);

        conley::HomologyData ha = conley::homology(s.a()), hc = conley::homology(s.c());
        conley::HomologyData ha2 = conley::homology(s2.a()), hc2 = conley::homology(s2.c());
        for (int k = 1; k <= top_of(s); ++k) {
            Gf2Matrix transport_c = hc2.project(k, mul(pc[k], hc.reps(k)));
            Gf2Matrix transport_a = ha2.project(k - 1, mul(pa[k - 1], ha.reps(k - 1)));
            CHECK(mul(connecting_homomorphism(s2, k), transport_c) ==
                  mul(transport_a, connecting_homomorphism(s, k)));
        }
    }
}

TEST_CASE("long exact sequence layout") {
    ChainComplex a({0, 1}, {});
    ChainComplex c({0, 0, 1}, {});
    ShortExactSequence s =
        extension_by_twist(a, c, {Gf2Matrix(), Gf2Matrix(), Gf2Matrix::from_rows({{1}})});
    conley::LongExactSequence les = long_exact_sequence(s);
    REQUIRE(les.nodes.size() == 9);  // degrees 2,1,0 for A,B,C
    CHECK(les.maps.size() == les.nodes.size() - 1);
    CHECK(les.nodes.front().label == "H_2(A)");
    CHECK(les.nodes.back().label == "H_0(C)");
    CHECK(check_exactness(les).ok);
}
