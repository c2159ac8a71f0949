#include <doctest.h>

#include <random>

#include "torsor/laurent.hpp"
#include "torsor/parse.hpp"

using namespace torsor;

namespace {
FqLaurent rnd_series(std::mt19937_64& rng, const FieldSpec* spec, long lo, long len) {
    std::vector<Fq> c;
    for (long k = 0; k < len; ++k) c.push_back(Fq::from_index(spec, rng() % spec->order()));
    return FqLaurent(Fq::from_int(spec, 0), lo, lo + len, std::move(c));
}
}  // namespace

TEST_CASE("precision propagates pessimistically") {
    auto spec = FieldSpec::prime(3);
    Fq one = Fq::from_int(spec.get(), 1);
    FqLaurent a(one, -2, 5, {one, one, one, one, one, one, one});
    FqLaurent b(one, 1, 4, {one, one, one});
    SUBCASE("sum keeps the weaker window") { CHECK((a + b).precision() == 4); }
    SUBCASE("product adds valuations, min rule for precision") {
        auto prod = a * b;
        CHECK(prod.valuation() == -1);
        CHECK(prod.precision() == std::min(5 + 1, 4 + (-2)));
    }
    SUBCASE("derivative loses one index") { CHECK(a.derivative().precision() == 4); }
    SUBCASE("coefficient beyond the window throws") {
        CHECK_NOTHROW(a.coeff(4));
        CHECK_THROWS_AS(a.coeff(5), PrecisionError);
    }
}

TEST_CASE("inverse has the expected window and is a two-sided inverse") {
    std::mt19937_64 rng(3);
    auto spec = FieldSpec::prime(5);
    for (int it = 0; it < 30; ++it) {
        auto s = rnd_series(rng, spec.get(), -2 + static_cast<long>(rng() % 5), 10);
        if (s.is_zero() || s.coeff(s.valuation()).is_zero()) continue;
        auto inv = s.inverse();
        auto prod = s * inv;
        CHECK(prod.coeff(0).is_one());
        for (long k = 1; k < prod.precision(); ++k) CHECK(prod.coeff(k).is_zero());
    }
}

TEST_CASE("principal units form a group at each level") {
    std::mt19937_64 rng(5);
    auto spec = FieldSpec::prime(3);
    long n = 9;
    for (int it = 0; it < 25; ++it) {
        std::vector<Fq> c(static_cast<std::size_t>(n), Fq::from_int(spec.get(), 0));
        c[0] = Fq::from_int(spec.get(), 1);
        for (long k = 1; k < n; ++k) c[static_cast<std::size_t>(k)] = Fq::from_index(spec.get(), rng() % 3);
        auto v = PrincipalUnit::from_coeffs(n, c);
        CHECK((v * v.inverse()).is_one());
        CHECK(v.inverse().inverse() == v);
    }
    CHECK_THROWS_AS(PrincipalUnit::from_coeffs(
                        3, {Fq::from_int(spec.get(), 2), Fq::from_int(spec.get(), 0),
                            Fq::from_int(spec.get(), 0)}),
                    DomainError);
}

TEST_CASE("exact series from rational data keep the exact sentinel through + and *") {
    auto spec = FieldSpec::prime(2);
    auto z = expand_at_zero(RationalFunction::zero(spec.get()), 5);
    CHECK(z.is_zero());
    CHECK(z.precision() >= FqLaurent::kExact);
    auto u = RationalFunction::var(spec.get());
    auto s = expand_at_zero(u + u.pow(3), 4);  // polynomial: exact valuation
    CHECK(s.valuation() == 1);
}
