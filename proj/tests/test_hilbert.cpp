#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "srbetti/betti.hpp"
#include "srbetti/graphs.hpp"
#include "srbetti/hilbert.hpp"

using namespace srbetti;

namespace {

using P = IntPolynomial;

const FieldSpec kDefault = FieldSpec::prime(kDefaultPrime);

} // namespace

TEST_CASE("IntPolynomial arithmetic", "[hilbert]")
{
    REQUIRE(P({0, 0}).is_zero());
    REQUIRE(P().degree() == -1);
    REQUIRE(P({1, 2, 0, 0}).degree() == 1);
    REQUIRE(P::one_minus_z_pow(2) == P({1, -2, 1}));
    REQUIRE(P({1, 1}) * P({1, -1}) == P({1, 0, -1}));
    REQUIRE(P({1, 0, -1}).divide_by_one_minus_z() == P({1, 1}));
    REQUIRE_THROWS_AS(P({1, 1}).divide_by_one_minus_z(), InvalidArgument);
    REQUIRE(P({1, 0, -2, 0, 1}).to_string() == "1 - 2z^2 + z^4");
    REQUIRE(P({0, -1, 3}).to_string() == "-z + 3z^2");
    REQUIRE(P().to_string() == "0");
    REQUIRE(P({2, 3}).evaluate(2) == 8);
}

TEST_CASE("series_from_f on the named examples", "[hilbert]")
{
    // 1 + 2z/(1-z) = (1+z)/(1-z).
    HilbertSeries two = series_from_f(FVector{{1, 2}});
    REQUIRE(two.numerator == P({1, 1}));
    REQUIRE(two.pole_order == 1);

    HilbertSeries c4 = series_from_f(FVector{{1, 4, 4}});
    REQUIRE(c4.numerator == P({1, 2, 1}));
    REQUIRE(c4.pole_order == 2);

    HilbertSeries simplex = series_from_f(FVector{{1, 3, 3, 1}});
    REQUIRE(simplex.numerator == P({1}));
    REQUIRE(simplex.pole_order == 3);

    HilbertSeries point = series_from_f(FVector{{1}});
    REQUIRE(point.numerator == P({1}));
    REQUIRE(point.pole_order == 0);
}

TEST_CASE("multiplicity is the sum of the h-vector", "[hilbert]")
{
    REQUIRE(multiplicity(HVector{{1, 2, 1}}) == 4);
    REQUIRE(f_vector(complex_from_facets({{"1", "2"}, {"2", "3"}, {"3", "4"}, {"1", "4"}})).entries.back() == 4);
    REQUIRE(multiplicity(HVector{{1, 0, 0, 0}}) == 1);
    REQUIRE(multiplicity(HVector{{1, 1, 1}}) == 3);
    REQUIRE(f_vector(complex_from_facets({{"1", "2"}, {"1", "3"}, {"2", "3"}})).entries.back() == 3);
}

TEST_CASE("hilbert_polynomial in the binomial basis", "[hilbert]")
{
    Complex c4 = complex_from_facets({{"1", "2"}, {"2", "3"}, {"3", "4"}, {"1", "4"}});
    for (int s = 1; s <= 6; ++s) REQUIRE(oracle::count_face_monomials(c4, s) == 4 * s);
    REQUIRE(hilbert_polynomial(HVector{{1, 2, 1}}, 2).binom_coeffs == std::vector<std::int64_t>{4, 0});

    REQUIRE(hilbert_polynomial(HVector{{1}}, 1).binom_coeffs == std::vector<std::int64_t>{1});

    Complex two = complex_from_facets({{"1"}, {"2"}});
    for (int s = 1; s <= 5; ++s) REQUIRE(oracle::count_face_monomials(two, s) == 2);
    REQUIRE(hilbert_polynomial(HVector{{1, 1}}, 1).binom_coeffs == std::vector<std::int64_t>{2});

    REQUIRE(hilbert_polynomial(HVector{{1}}, 0).binom_coeffs.empty());
}

TEST_CASE("Hilbert series and polynomial agree with brute force on random complexes", "[hilbert][property]")
{
    Xorshift64Star rng(4242);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(7));
        Complex c = Complex::from_masks(oracle::numeric_labels(n),
                                        oracle::random_facets(n, 1 + static_cast<int>(rng.below(4)), rng));
        FVector f = f_vector(c);
        HVector h = h_vector(f);
        const int d = f.d();

        HilbertSeries s = series_from_f(f);
        REQUIRE(s.numerator == P(h.entries));
        REQUIRE(s.pole_order == d);
        REQUIRE(multiplicity(h) == f.entries.back());

        HilbertPolynomial hp = hilbert_polynomial(h, d);
        REQUIRE(hp.binom_coeffs.front() == multiplicity(h));
        // The Hilbert function is polynomial for s > deg(h) - d; check four values past that.
        const int start = std::max(0, h.d() - d + 1);
        for (int k = start; k < start + 4; ++k) REQUIRE(hp.evaluate(k) == oracle::count_face_monomials(c, k));
    }
}

TEST_CASE("numerator_from_resolution and the series identity", "[hilbert]")
{
    REQUIRE(numerator_from_resolution(std::vector<int>{2}, std::vector<std::int64_t>{1}) == P({1, 0, -1}));
    REQUIRE(numerator_from_resolution(std::vector<int>{2, 4}, std::vector<std::int64_t>{2, 1}) == P({1, 0, -2, 0, 1}));
    REQUIRE(numerator_from_resolution(std::vector<int>{3}, std::vector<std::int64_t>{1}) == P({1, 0, 0, -1}));
    REQUIRE_THROWS_AS(numerator_from_resolution(std::vector<int>{3, 3}, std::vector<std::int64_t>{1, 1}),
                      InvalidArgument);

    // (1-z)^2 (1+2z+z^2) = 1 - 2z^2 + z^4
    REQUIRE(P::one_minus_z_pow(2) * P({1, 2, 1}) == P({1, 0, -2, 0, 1}));
    REQUIRE(verify_series_identity(HVector{{1, 2, 1}}, 4, 2, std::vector<int>{2, 4}, std::vector<std::int64_t>{2, 1})
                .is_zero());
    REQUIRE(verify_series_identity(HVector{{1, 1}}, 2, 1, std::vector<int>{2}, std::vector<std::int64_t>{1}).is_zero());
    REQUIRE_FALSE(
        verify_series_identity(HVector{{1, 2, 1}}, 4, 2, std::vector<int>{2, 4}, std::vector<std::int64_t>{3, 1})
            .is_zero());
}

TEST_CASE("table numerator matches the h-vector for every shape", "[hilbert][property]")
{
    Xorshift64Star rng(19);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(8));
        Complex c = Complex::from_masks(oracle::numeric_labels(n),
                                        oracle::random_facets(n, 1 + static_cast<int>(rng.below(5)), rng));
        FVector f = f_vector(c);
        BettiTable t = graded_betti(c, kDefault);
        REQUIRE(P::one_minus_z_pow(n - f.d()) * P(h_vector(f).entries) == numerator_from_table(t));
        ResolutionShape shape = classify(t);
        if (shape.is_pure())
            REQUIRE(verify_series_identity(h_vector(f), n, f.d(), pure_resolution(t, shape)).is_zero());
    }
}
