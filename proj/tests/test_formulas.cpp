#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "srbetti/betti.hpp"
#include "srbetti/formulas.hpp"
#include "srbetti/graphs.hpp"

using namespace srbetti;

namespace {

using Betti = std::vector<std::int64_t>;

const FieldSpec kDefault = FieldSpec::prime(kDefaultPrime);

ResolutionShape pure_shape(std::vector<int> degrees)
{
    ResolutionShape s;
    s.kind = ResolutionKind::pure;
    s.top = static_cast<int>(degrees.size()) - 1;
    s.t = degrees.front();
    s.degrees = std::move(degrees);
    return s;
}

} // namespace

TEST_CASE("betti_from_h on the named examples", "[formulas]")
{
    REQUIRE(betti_from_h({HVector{{1, 2, 1}}, 4, 2, pure_shape({2, 4})}) == Betti{2, 1});
    REQUIRE(betti_from_h({HVector{{1, 1}}, 2, 1, pure_shape({2})}) == Betti{1});
    REQUIRE(betti_from_h({HVector{{1, 1, 1}}, 3, 2, pure_shape({3})}) == Betti{1});
}

TEST_CASE("betti_from_h rejects inconsistent data", "[formulas]")
{
    // Wrong degree for the 4-cycle: the alternating sum comes out non-positive.
    REQUIRE_THROWS_AS(betti_from_h({HVector{{1, 2, 1}}, 4, 2, pure_shape({3, 4})}), NonPositiveResult);
    ResolutionShape general;
    REQUIRE_THROWS_AS(betti_from_h({HVector{{1, 2, 1}}, 4, 2, general}), NotPure);
    REQUIRE_THROWS_AS(betti_from_h({HVector{{1}}, 0, 0, pure_shape({2})}), InvalidArgument);
}

TEST_CASE("betti_from_h_linear specializes the pure formula", "[formulas]")
{
    REQUIRE(betti_from_h_linear(HVector{{1, 1, 0}}, 2, 0, 3, 2) == Betti{1});
    REQUIRE(betti_from_h_linear(HVector{{1, 1}}, 2, 0, 2, 1) == Betti{1});

    // Random chordal clique complexes are 2-linear; both routes must agree.
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Complex c = clique_complex(gen_chordal(7, 0.5, seed));
        BettiTable t = graded_betti(c, kDefault);
        ResolutionShape s = classify(t);
        if (s.kind == ResolutionKind::zero_ideal) continue;
        REQUIRE(s.is_linear());
        FVector f = f_vector(c);
        HVector h = h_vector(f);
        Betti linear = betti_from_h_linear(h, s.t, s.top, c.n(), f.d());
        REQUIRE(linear == betti_from_h({h, c.n(), f.d(), s}));
        REQUIRE(linear == pure_resolution(t, s).betti);
    }
}

TEST_CASE("h_relations residuals", "[formulas]")
{
    // Path on 3 vertices: only j = 3, residual h_3 - h_2 = 0.
    auto rel = h_relations(HVector{{1, 1, 0}}, 3, 2, 0, 2);
    REQUIRE(rel == std::vector<Relation>{{3, 0}});

    // Skeleta of a simplex have linear resolutions.
    for (int n = 3; n <= 7; ++n) {
        for (int k = 1; k < n - 1; ++k) {
            std::vector<VertexSet> facets;
            for (VertexSet s = 0; s < (VertexSet{1} << n); ++s)
                if (cardinality(s) == k + 1) facets.push_back(s);
            Complex skel = Complex::from_masks(oracle::numeric_labels(n), facets);
            ResolutionShape shape = classify(graded_betti(skel, kDefault));
            REQUIRE(shape.is_linear());
            FVector f = f_vector(skel);
            for (const auto& r : h_relations(h_vector(f), n, f.d(), shape.top, shape.t)) REQUIRE(r.residual == 0);
        }
    }

    // Corrupting an entry breaks some relation.
    Complex c = clique_complex(gen_chordal(8, 0.3, 5));
    FVector f = f_vector(c);
    HVector h = h_vector(f);
    ResolutionShape shape = classify(graded_betti(c, kDefault));
    REQUIRE(shape.is_linear());
    auto clean = h_relations(h, c.n(), f.d(), shape.top, shape.t);
    REQUIRE_FALSE(clean.empty());
    for (const auto& r : clean) REQUIRE(r.residual == 0);
    HVector bad = h;
    bad.entries.back() += 1;
    auto dirty = h_relations(bad, c.n(), f.d(), shape.top, shape.t);
    REQUIRE(std::any_of(dirty.begin(), dirty.end(), [](const Relation& r) { return r.residual != 0; }));
}

TEST_CASE("chordal_h_relations", "[formulas]")
{
    ChordalRelations p3 = chordal_h_relations(path_graph(3), kDefault);
    REQUIRE_FALSE(p3.zero_ideal);
    REQUIRE(p3.top == 0);
    REQUIRE(p3.residuals == std::vector<Relation>{{3, 0}});

    ChordalRelations k4 = chordal_h_relations(complete_graph(4), kDefault);
    REQUIRE(k4.zero_ideal);
    REQUIRE(k4.residuals.empty());

    REQUIRE_THROWS_AS(chordal_h_relations(cycle_graph(4), kDefault), NotChordal);

    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Graph g = gen_chordal(2 + static_cast<int>(seed % 8), 0.35, seed);
        ChordalRelations r = chordal_h_relations(g, kDefault);
        for (const auto& x : r.residuals) REQUIRE(x.residual == 0);
    }
}

TEST_CASE("check_lower_bound", "[formulas]")
{
    REQUIRE(check_lower_bound(Betti{2, 1}, 1) == std::vector<bool>{true, true});
    REQUIRE(check_lower_bound(Betti{1}, 0) == std::vector<bool>{true});
    REQUIRE(check_lower_bound(Betti{1, 1}, 1) == std::vector<bool>{true, true});
    REQUIRE(check_lower_bound(Betti{1, 1, 1}, 2) == std::vector<bool>{true, false, true});
    REQUIRE_THROWS_AS(check_lower_bound(Betti{1}, 1), InvalidArgument);
}

TEST_CASE("formula matches Hochster on every pure random complex", "[formulas][property]")
{
    Xorshift64Star rng(606);
    int pure_seen = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(7));
        Complex c = Complex::from_masks(oracle::numeric_labels(n),
                                        oracle::random_facets(n, 1 + static_cast<int>(rng.below(4)), rng));
        BettiTable t = graded_betti(c, kDefault);
        ResolutionShape s = classify(t);
        if (!s.is_pure()) continue;
        ++pure_seen;
        FVector f = f_vector(c);
        PureResolution pr = pure_resolution(t, s);
        REQUIRE(betti_from_h({h_vector(f), n, f.d(), s}) == pr.betti);
        for (bool v : check_lower_bound(pr.betti, pr.top)) REQUIRE(v);
    }
    REQUIRE(pure_seen > 10);
}
