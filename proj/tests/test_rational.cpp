#include <doctest.h>

#include <random>

#include "torsor/laurent.hpp"
#include "torsor/parse.hpp"

using namespace torsor;

TEST_CASE("parse normalizes: x^2/(x-1) over F_3 has monic denominator x+2") {
    auto spec = FieldSpec::prime(3);
    auto f = parse_rational("x^2/(x-1)", spec, 'x');
    CHECK(poly_str(f.num(), 'x') == "x^2");
    CHECK(poly_str(f.den(), 'x') == "x+2");
}

TEST_CASE("parse of 0 gives the zero function") {
    auto spec = FieldSpec::prime(2);
    auto f = parse_rational("0", spec, 'x');
    CHECK(f.is_zero());
}

TEST_CASE("gcd cancellation: (x+1)^2/(x^2+2x+1) = 1 over F_5") {
    auto spec = FieldSpec::prime(5);
    auto f = parse_rational("(x+1)^2/(x^2+2*x+1)", spec, 'x');
    CHECK(f == ring_one(f));
    // '*' is required between factors
    CHECK_THROWS_AS(parse_rational("2x", spec, 'x'), ParseError);
}

TEST_CASE("syntax errors carry a position") {
    auto spec = FieldSpec::prime(3);
    try {
        parse_rational("x^2 + (x", spec, 'x');
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 8);
    }
    CHECK_THROWS_AS(parse_rational("1/(x-x)", spec, 'x'), ParseError);  // division by zero
}

TEST_CASE("canonical form is unique and degree is additive") {
    auto spec = FieldSpec::prime(5);
    auto f = parse_rational("(x^2+1)/(x^3+x+2)", spec, 'x');
    auto g = parse_rational("(x+4)/(x^2+3)", spec, 'x');
    CHECK(f * g == g * f);
    CHECK((f * g).degree() == f.degree() + g.degree());
    auto h = parse_rational("(2*x^2+2)/(2*x^3+2*x+4)", spec, 'x');  // same function, scaled
    CHECK(h == f);
}

TEST_CASE("expansion examples") {
    auto spec5 = FieldSpec::prime(5);
    SUBCASE("1/x at infinity is u with valuation 1") {
        auto f = parse_rational("1/x", spec5, 'x');
        auto s = laurent_expand(f, PointOfP1::infinity(spec5.get()), 8);
        CHECK(s.valuation() == 1);
        CHECK(s.coeff(1) == Fq::from_int(spec5.get(), 1));
        for (long k = 2; k < 8; ++k) CHECK(s.coeff(k).is_zero());
    }
    SUBCASE("1/(x-1) at 1 is u^-1") {
        auto f = parse_rational("1/(x-1)", spec5, 'x');
        auto s = laurent_expand(f, PointOfP1::finite(Fq::from_int(spec5.get(), 1)), 6);
        CHECK(s.valuation() == -1);
        CHECK(s.coeff(-1) == Fq::from_int(spec5.get(), 1));
        for (long k = 0; k < 5; ++k) CHECK(s.coeff(k).is_zero());
    }
    SUBCASE("x/(x+1) at 0 over F_2: long-division oracle gives the coefficients") {
        auto spec2 = FieldSpec::prime(2);
        auto f = parse_rational("x/(x+1)", spec2, 'x');
        long N = 12;
        auto s = laurent_expand(f, PointOfP1::finite(Fq::from_int(spec2.get(), 0)), N);
        // oracle: long division of u by 1+u over F_2
        std::vector<long> rem = {0, 1};  // u
        std::vector<long> quot;
        for (long k = 0; k < N + 1; ++k) {
            long c = k < static_cast<long>(rem.size()) ? rem[static_cast<std::size_t>(k)] : 0;
            quot.push_back(c);
            if (c) {
                while (static_cast<long>(rem.size()) <= k + 1) rem.push_back(0);
                rem[static_cast<std::size_t>(k)] ^= 1;
                rem[static_cast<std::size_t>(k + 1)] ^= 1;
            }
        }
        CHECK(s.valuation() == 1);
        for (long k = 1; k <= N; ++k)
            CHECK(s.coeff(k).coeff(0) == quot[static_cast<std::size_t>(k)]);
    }
}

TEST_CASE("round-trip: partial expansion times (x-a)^v recovers f modulo (x-a)^(v+N)") {
    std::mt19937_64 rng(7);
    auto spec = FieldSpec::prime(3);
    RationalFunction x = RationalFunction::var(spec.get());
    for (int it = 0; it < 30; ++it) {
        RationalFunction f = RationalFunction::zero(spec.get());
        for (int k = 1; k <= 3; ++k) {
            f = f + RationalFunction(Fq::from_index(spec.get(), rng() % 3)) / x.pow(k);
            f = f + RationalFunction(Fq::from_index(spec.get(), rng() % 3)) *
                        x.pow(static_cast<long>(rng() % 3));
        }
        if (f.is_zero()) continue;
        Fq a = Fq::from_int(spec.get(), 2);
        long N = 9;
        auto s = laurent_expand(f, PointOfP1::finite(a), N);
        long v = s.valuation();
        RationalFunction acc = RationalFunction::zero(spec.get());
        RationalFunction xa = x - RationalFunction(a);
        for (long k = v; k < v + N; ++k)
            acc = acc + RationalFunction(s.coeff(k)) * xa.pow(k);
        RationalFunction diff = f - acc;
        if (!diff.is_zero()) {
            auto ds = laurent_expand(diff, PointOfP1::finite(a), 2);
            CHECK(ds.valuation() >= v + N);
        }
    }
}

TEST_CASE("residue examples and exactness") {
    auto spec = FieldSpec::prime(5);
    Fq one = Fq::from_int(spec.get(), 1);
    SUBCASE("residue of u^-1 is 1; of u^-2 + 3u is 0") {
        FqLaurent a = FqLaurent::monomial(one, -1);
        CHECK(a.residue() == one);
        FqLaurent b = FqLaurent::monomial(one, -2) +
                      FqLaurent::monomial(Fq::from_int(spec.get(), 3), 1);
        CHECK(b.residue().is_zero());
    }
    SUBCASE("geometric series: residue of u^-1 * dlog(1-cu) is -c") {
        auto u = RationalFunction::var(spec.get());
        Fq c = Fq::from_int(spec.get(), 3);
        auto g = ring_one(u) - RationalFunction(c) * u;
        auto dlog = expand_at_zero(g.derivative() / g, 10);
        auto f = FqLaurent::monomial(one, -1);
        CHECK((f * dlog).residue() == -c);
    }
    SUBCASE("insufficient precision raises") {
        FqLaurent z = FqLaurent::zero_mod(one, -3);  // zero modulo u^-3: index -1 unknown
        CHECK_THROWS_AS(z.residue(), PrecisionError);
    }
    SUBCASE("residues of derivatives vanish on random series") {
        std::mt19937_64 rng(11);
        for (int it = 0; it < 40; ++it) {
            std::vector<Fq> c;
            for (int k = 0; k < 12; ++k) c.push_back(Fq::from_index(spec.get(), rng() % 5));
            FqLaurent s(one, -5, 7, c);
            CHECK(s.derivative().residue().is_zero());
        }
    }
}
