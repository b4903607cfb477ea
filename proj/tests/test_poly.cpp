#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hitchin/poly.hpp"
#include "hitchin/roots.hpp"

using namespace hitchin;

namespace {
Poly from_longs(std::initializer_list<long> cs) {
    std::vector<GaussianRational> v;
    for (long c : cs) v.push_back(gr(c));
    return Poly(v);
}
}  // namespace

TEST_CASE("arithmetic and division") {
    Poly p = from_longs({-6, 11, -6, 1});  // (z-1)(z-2)(z-3)
    Poly q = from_longs({-1, 1});
    auto [quot, rem] = Poly::divmod(p, q);
    CHECK(rem.is_zero());
    CHECK(quot == from_longs({6, -5, 1}));
    CHECK(Poly::exact_div(p, q) == quot);
    CHECK_THROWS(Poly::exact_div(p, from_longs({1, 1})));
    CHECK(p.derivative() == from_longs({11, -12, 3}));
    CHECK(p.eval(gr(2)) == gr(0));
    CHECK(p.eval(gr(4)) == gr(6));
}

TEST_CASE("gcd and square-free factorization") {
    Poly p = from_longs({-1, 1});
    Poly q = from_longs({-2, 1});
    Poly prod = p * p * q;
    CHECK(poly_gcd(prod, prod.derivative()) == p.monic());

    auto sf = square_free_factorization(prod);
    REQUIRE(sf.size() == 2);
    CHECK(sf[0].first == q.monic());
    CHECK(sf[0].second == 1);
    CHECK(sf[1].first == p.monic());
    CHECK(sf[1].second == 2);
}

TEST_CASE("triple root plus simple root") {
    // z^4 + 4z^3 - 16z - 16 = (z+2)^3 (z-2)
    Poly p = from_longs({-16, -16, 0, 4, 1});
    auto roots = roots_with_multiplicity(p, 1e-9);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].multiplicity == 3);
    CHECK(roots[0].location.real() == doctest::Approx(-2.0).epsilon(1e-9));
    CHECK(roots[0].location.imag() == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(roots[1].multiplicity == 1);
    CHECK(roots[1].location.real() == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("double root with fractional location") {
    // 4z^3 - 3z - 1 = (z-1)(2z+1)^2
    Poly p = from_longs({-1, -3, 0, 4});
    auto roots = roots_with_multiplicity(p, 1e-9);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].multiplicity == 2);
    CHECK(roots[0].location.real() == doctest::Approx(-0.5).epsilon(1e-9));
    CHECK(roots[1].multiplicity == 1);
    CHECK(roots[1].location.real() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("complex pair") {
    Poly p = from_longs({1, 0, 1});  // z^2 + 1
    auto roots = roots_with_multiplicity(p, 1e-9);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].location.imag() == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(roots[1].location.imag() == doctest::Approx(1.0).epsilon(1e-9));
    for (const auto& r : roots) CHECK(r.residual < 1e-9);
}

TEST_CASE("gaussian-rational coefficients") {
    // (z - i)^2 (z + 2i) = z^3 - ... with exact Q(i) coefficients
    Poly zi = Poly::from({gri(0, 1, -1, 1), gr(1)});
    Poly z2i = Poly::from({gri(0, 1, 2, 1), gr(1)});
    Poly p = zi * zi * z2i;
    auto roots = roots_with_multiplicity(p, 1e-9);
    REQUIRE(roots.size() == 2);
    bool found_double = false;
    for (const auto& r : roots)
        if (r.multiplicity == 2) {
            found_double = true;
            CHECK(r.location.imag() == doctest::Approx(1.0).epsilon(1e-9));
        }
    CHECK(found_double);
}

TEST_CASE("far roots pass the residual acceptance") {
    // Roots at 1000 and 1/1000: evaluation near the far root is dominated by
    // cancellation, so acceptance must scale with the evaluation magnitude.
    Poly p = Poly::from({gr(1), gr(-1000001, 1000), gr(1)});
    auto roots = roots_with_multiplicity(p, 1e-9);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].location.real() == doctest::Approx(1e-3).epsilon(1e-9));
    CHECK(roots[1].location.real() == doctest::Approx(1e3).epsilon(1e-9));
}

TEST_CASE("degenerate inputs") {
    CHECK_THROWS_AS(roots_with_multiplicity(Poly(), 1e-9), ZeroPolynomial);
    CHECK_THROWS_AS(roots_with_multiplicity(from_longs({1, 1}), 2.0), ToleranceOutOfRange);
    CHECK_THROWS_AS(roots_with_multiplicity(from_longs({1, 1}), 0.0), ToleranceOutOfRange);
    CHECK(roots_with_multiplicity(from_longs({7}), 1e-9).empty());
}
