#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "logtan/error.hpp"
#include "logtan/int_polynomial.hpp"
#include "logtan/moebius.hpp"
#include "logtan/projective_point.hpp"
#include "logtan/rational.hpp"
#include "oracles.hpp"

using namespace logtan;

namespace {

MoebiusMap map(long a, long b, long c, long d) {
    return {BigInt(a), BigInt(b), BigInt(c), BigInt(d)};
}

ProjectivePoint pt(long u, long v) { return {BigInt(u), BigInt(v)}; }

MoebiusMap random_map(std::mt19937_64& rng, long bound = 6) {
    std::uniform_int_distribution<long> dist(-bound, bound);
    while (true) {
        const long a = dist(rng), b = dist(rng), c = dist(rng), d = dist(rng);
        if (a * d - b * c != 0) return map(a, b, c, d);
    }
}

IntPolynomial random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(0, 5);
    std::uniform_int_distribution<unsigned> exp(0, 3);
    std::uniform_int_distribution<long> coeff(-9, 9);
    std::vector<std::pair<Monomial, BigInt>> terms;
    for (int t = nterms(rng); t > 0; --t) terms.push_back({{exp(rng), exp(rng), exp(rng)}, BigInt(coeff(rng))});
    return IntPolynomial::from_terms(terms);
}

}  // namespace

TEST_CASE("rational canonical form and text") {
    const Rational q(BigInt(6), BigInt(-4));
    CHECK(q.numerator() == -3);
    CHECK(q.denominator() == 2);
    CHECK(q.str() == "-3/2");
    CHECK(Rational(BigInt(8), BigInt(4)).str() == "2");
    CHECK(parse_rational("10/4") == Rational(BigInt(5), BigInt(2)));
    CHECK(parse_rational("-7") == Rational(-7L));
    CHECK(parse_rational("+3/9").str() == "1/3");
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), InputError);
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("1/-2"), InputError);
    CHECK_THROWS_AS(parse_rational("a/2"), InputError);
    CHECK_THROWS_AS(parse_rational(""), InputError);
    CHECK_THROWS_AS(parse_rational("1/2/3"), InputError);
    CHECK(Rational(BigInt(1), BigInt(3)) + Rational(BigInt(1), BigInt(6)) == Rational(BigInt(1), BigInt(2)));
    CHECK_THROWS(Rational(1L) / Rational(0L));
    CHECK(Rational(BigInt(-1), BigInt(2)) < Rational(0L));
}

TEST_CASE("projective point canonical form") {
    CHECK(pt(2, -4).str() == "1:-2");
    CHECK(pt(0, -3).str() == "0:1");
    CHECK(pt(-5, 0) == ProjectivePoint::infinity());
    CHECK(pt(-6, 4).str() == "3:-2");
    CHECK_THROWS_AS(pt(0, 0), InputError);
    CHECK(ProjectivePoint(Rational(BigInt(-3), BigInt(4))).value_str() == "-3/4");
    CHECK(ProjectivePoint::infinity().value_str() == "inf");
    CHECK(parse_projective_point("inf").is_infinity());
    CHECK(parse_projective_point("4:6") == pt(2, 3));
    CHECK(parse_projective_point("2/3") == pt(2, 3));
    CHECK(pt(0, 1).reciprocal().is_infinity());
    CHECK(ProjectivePoint::infinity().subtracted_from(BigInt(7)).is_infinity());
}

TEST_CASE("canonicalization is idempotent") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const MoebiusMap f = random_map(rng);
        CHECK(MoebiusMap(f.matrix()) == f);
        const Rational q = oracle::random_rational(rng);
        CHECK(Rational(q.numerator(), q.denominator()) == q);
        const ProjectivePoint p(q);
        CHECK(ProjectivePoint(p.u(), p.v()) == p);
    }
}

TEST_CASE("moebius map canonical form") {
    const MoebiusMap f = map(-2, 4, 0, -6);
    CHECK(f.a() == 1);
    CHECK(f.b() == -2);
    CHECK(f.c() == 0);
    CHECK(f.d() == 3);
    CHECK(map(0, -1, 1, 0) == map(0, 1, -1, 0));
    CHECK_THROWS_AS(map(1, 2, 2, 4), InputError);
    CHECK(f.str() == "[1, -2, 0, 3]");
}

TEST_CASE("moebius_compose") {
    std::mt19937_64 rng(3);
    const MoebiusMap g = random_map(rng);
    CHECK(compose(MoebiusMap::identity(), g) == g);
    // (0,1,-1,e2) o (0,1,-1,e1) = (-1, e1, -e2, e2 e1 - 1).
    const long e1 = 4, e2 = -3;
    CHECK(compose(map(0, 1, -1, e2), map(0, 1, -1, e1)) == map(-1, e1, -e2, e2 * e1 - 1));
    CHECK(compose(map(2, 0, 0, 1), map(2, 0, 0, 1)) == map(4, 0, 0, 1));
}

TEST_CASE("moebius_apply") {
    CHECK(apply(map(0, 1, -1, 2), pt(1, 1)) == pt(1, 1));
    const long e = 5;
    CHECK(apply(map(0, 1, -1, e), pt(e, 1)) == ProjectivePoint::infinity());
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        const ProjectivePoint p(oracle::random_rational(rng));
        CHECK(apply(MoebiusMap::identity(), p) == p);
    }
    CHECK(apply(map(1, 1, 0, 1), ProjectivePoint::infinity()).is_infinity());
}

TEST_CASE("moebius_is_identity") {
    CHECK(is_identity(map(1, 0, 0, 1)));
    CHECK_FALSE(is_identity(map(0, 1, -1, 0)));
    CHECK(is_identity(map(-3, 0, 0, -3)));
    CHECK_FALSE(is_identity(map(2, 0, 0, 1)));
}

TEST_CASE("moebius_fixed_points") {
    CHECK(fixed_points(MoebiusMap::identity()).kind == FixedPoints::Kind::Identity);
    CHECK(fixed_points(map(0, 1, -1, 0)).kind == FixedPoints::Kind::Irrational);

    const auto translation = fixed_points(map(1, 1, 0, 1));
    REQUIRE(translation.kind == FixedPoints::Kind::Points);
    REQUIRE(translation.points.size() == 1);
    CHECK(translation.points[0].is_infinity());

    // x -> 2x + 3 fixes -3 and infinity.
    const auto affine = fixed_points(map(2, 3, 0, 1));
    REQUIRE(affine.points.size() == 2);
    CHECK(affine.points[0].is_infinity());
    CHECK(affine.points[1] == pt(-3, 1));

    // x -> 1 / (2 - x) has the double fixed point 1.
    const auto parabolic = fixed_points(map(0, 1, -1, 2));
    REQUIRE(parabolic.points.size() == 1);
    CHECK(parabolic.points[0] == pt(1, 1));

    // x -> 6 / (x + 1) fixes 2 and -3.
    const auto hyperbolic = fixed_points(map(0, 6, 1, 1));
    REQUIRE(hyperbolic.points.size() == 2);
    CHECK(hyperbolic.points[0] == pt(2, 1));
    CHECK(hyperbolic.points[1] == pt(-3, 1));
}

TEST_CASE("moebius properties on random maps") {
    std::mt19937_64 rng(17);
    std::size_t with_points = 0;
    for (int i = 0; i < 500; ++i) {
        const MoebiusMap f = random_map(rng), g = random_map(rng), h = random_map(rng);
        CHECK(compose(f, compose(g, h)) == compose(compose(f, g), h));

        const ProjectivePoint p(oracle::random_rational(rng));
        CHECK(apply(compose(f, g), p) == apply(f, apply(g, p)));

        const auto fp = fixed_points(f);
        if (fp.kind == FixedPoints::Kind::Points) {
            ++with_points;
            CHECK(!fp.points.empty());
            for (const auto& q : fp.points) CHECK(apply(f, q) == q);
        }
    }
    CHECK(with_points > 50);
}

TEST_CASE("int polynomial arithmetic") {
    const auto z1 = IntPolynomial::variable(1);
    const auto z2 = IntPolynomial::variable(2);
    const IntPolynomial p = z1 * z2 - IntPolynomial(1L);
    CHECK(p == IntPolynomial::from_terms({{{1, 1}, BigInt(1)}, {{}, BigInt(-1)}}));
    CHECK(p.str() == "z1*z2 - 1");
    CHECK((p + (-p)).is_zero());
    CHECK((p + (-p)).terms().empty());
    CHECK(IntPolynomial(1L) * p == p);
    CHECK(p.times_variable(2) == p * z2);
    CHECK(IntPolynomial::from_terms({{{0, 0, 0}, BigInt(3)}, {{}, BigInt(-3)}}).is_zero());
    CHECK(IntPolynomial::from_terms({{{2, 0, 0}, BigInt(1)}}) == z1 * z1);
    CHECK(p.num_variables() == 2);
    CHECK(p.degree_in(2) == 1);
    CHECK(p.degree_in(3) == 0);
    CHECK((z1 * z1 * z2).total_degree() == 3);
    CHECK((z1 * z1 * IntPolynomial(-2L) + z2).str() == "-2*z1^2 + z2");
    CHECK(IntPolynomial().str() == "0");
    CHECK_THROWS_AS(IntPolynomial::variable(0), InputError);
}

TEST_CASE("poly_eval") {
    const IntPolynomial p = IntPolynomial::variable(1) * IntPolynomial::variable(2) - IntPolynomial(1L);
    const std::vector<Rational> at23{Rational(2L), Rational(3L)};
    CHECK(p.eval(at23) == Rational(5L));
    const std::vector<Rational> at11{Rational(1L), Rational(1L)};
    CHECK(p.eval(at11) == Rational(0L));
    CHECK(IntPolynomial().eval(std::vector<Rational>{}) == Rational(0L));
    CHECK(IntPolynomial().eval(at23) == Rational(0L));
    const std::vector<Rational> too_short{Rational(1L)};
    CHECK_THROWS_AS(p.eval(too_short), InputError);
    const std::vector<Rational> half{Rational(BigInt(1), BigInt(2)), Rational(4L)};
    CHECK(p.eval(half) == Rational(1L));
}

TEST_CASE("polynomial ring laws and evaluation homomorphism") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 200; ++i) {
        const auto p = random_poly(rng), q = random_poly(rng), s = random_poly(rng);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p + q) + s == p + (q + s));
        CHECK((p * q) * s == p * (q * s));
        CHECK(p * (q + s) == p * q + p * s);
        CHECK((p - q) + q == p);
        const IntPolynomial product = p * q;
        for (const auto& [m, c] : product.terms()) {
            CHECK(sgn(c) != 0);
            CHECK((m.empty() || m.back() != 0));
        }

        const std::vector<Rational> x{oracle::random_rational(rng, 7), oracle::random_rational(rng, 7),
                                      oracle::random_rational(rng, 7)};
        CHECK((p * q).eval(x) == p.eval(x) * q.eval(x));
        CHECK((p + q).eval(x) == p.eval(x) + q.eval(x));
    }
}

TEST_CASE("bigint parsing") {
    CHECK(parse_bigint("-123456789012345678901234567890") ==
          BigInt("-123456789012345678901234567890"));
    CHECK_THROWS_AS(parse_bigint("12a"), InputError);
    CHECK_THROWS_AS(parse_bigint("-"), InputError);
    CHECK(fits_int64(BigInt("9223372036854775807")));
    CHECK_FALSE(fits_int64(BigInt("9223372036854775808")));
    CHECK(*exact_sqrt(BigInt(49)) == 7);
    CHECK_FALSE(exact_sqrt(BigInt(50)));
    CHECK_FALSE(exact_sqrt(BigInt(-4)));
}
