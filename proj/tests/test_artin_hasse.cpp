#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "torsor/artin_hasse.hpp"

using namespace torsor;

TEST_CASE("F(u) = 1 - u mod u^2 for every small p") {
    for (long p : {2L, 3L, 5L, 7L}) {
        auto f = artin_hasse_series_q(p, 2);
        CHECK(f[0] == 1);
        CHECK(f[1] == -1);
    }
}

TEST_CASE("F(u) * exp(sum u^(p^s)/p^s) = 1 over Q") {
    for (long p : {2L, 3L}) {
        long N = 24;
        auto f = artin_hasse_series_q(p, N);
        // E(u) = exp(sum_{p^s < N} u^(p^s)/p^s) via the same ODE trick, sign flipped
        std::vector<BigRat> e(static_cast<std::size_t>(N));
        e[0] = 1;
        for (long k = 0; k + 1 < N; ++k) {
            BigRat acc = 0;
            for (long ps = 1; ps - 1 <= k; ps *= p) acc += e[static_cast<std::size_t>(k - ps + 1)];
            e[static_cast<std::size_t>(k + 1)] = acc / BigRat(k + 1);
        }
        for (long k = 0; k < N; ++k) {
            BigRat conv = 0;
            for (long i = 0; i <= k; ++i)
                conv += f[static_cast<std::size_t>(i)] * e[static_cast<std::size_t>(k - i)];
            CHECK(conv == (k == 0 ? BigRat(1) : BigRat(0)));
        }
    }
}

TEST_CASE("F(u) agrees with the Moebius-product oracle to 64 terms") {
    for (long p : {2L, 3L, 5L}) {
        auto f = artin_hasse_series_q(p, 64);
        auto g = oracles::mobius_product(p, 64);
        for (long k = 0; k < 64; ++k) CHECK(f[static_cast<std::size_t>(k)] == g[static_cast<std::size_t>(k)]);
    }
}

TEST_CASE("mod-p reduction is p-integral") {
    for (long p : {2L, 3L, 5L, 7L}) {
        auto f = artin_hasse_series(p, 48);
        CHECK(f[0] == 1);
        CHECK(f[1] == p - 1);  // -1 mod p
    }
}

TEST_CASE("unit_from_witt examples") {
    auto spec = FieldSpec::prime(3);
    SUBCASE("zero Witt vector gives the unit 1") {
        auto a = WittVector<Fq>::zeros(3, slot_length(3, 9, 1), Fq::from_int(spec.get(), 0));
        CHECK(unit_from_witt(a, 1, 9).is_one());
    }
    SUBCASE("Teichmuller, i = 1, n = 2: E([c} u) = 1 - c u") {
        for (long p : {2L, 3L, 5L}) {
            auto sp = FieldSpec::prime(p);
            for (std::uint64_t ci = 0; ci < sp->order(); ++ci) {
                Fq c = Fq::from_index(sp.get(), ci);
                auto a = WittVector<Fq>::teichmuller(p, c, slot_length(p, 2, 1));
                auto v = unit_from_witt(a, 1, 2);
                CHECK(v.coeff(1) == -c);
            }
        }
    }
    SUBCASE("wrong Witt length and p | i are rejected") {
        auto a = WittVector<Fq>::zeros(3, 2, Fq::from_int(spec.get(), 0));
        CHECK_THROWS_AS(unit_from_witt(a, 3, 9), DomainError);   // p | i
        CHECK_THROWS_AS(unit_from_witt(a, 5, 9), DomainError);   // slot length is 1, not 2
    }
}

TEST_CASE("E((a + b) u^i) = E(a u^i) E(b u^i): the slot map is a homomorphism") {
    std::mt19937_64 rng(29);
    long p = 2, n = 8;
    auto spec = FieldSpec::prime(p);
    for (long i : {1L, 3L, 5L, 7L}) {
        int r = slot_length(p, n, i);
        for (int it = 0; it < 40; ++it) {
            std::vector<Fq> av, bv;
            for (int k = 0; k < r; ++k) {
                av.push_back(Fq::from_index(spec.get(), rng() % 2));
                bv.push_back(Fq::from_index(spec.get(), rng() % 2));
            }
            WittVector<Fq> a(p, av), b(p, bv);
            auto lhs = unit_from_witt(witt_add(a, b, true), i, n);
            auto rhs = unit_from_witt(a, i, n) * unit_from_witt(b, i, n);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("decompose_unit examples") {
    SUBCASE("the identity decomposes as all-zero slots") {
        auto spec = FieldSpec::prime(5);
        PrincipalUnit one(spec.get(), 6);
        auto dec = decompose_unit(one);
        for (auto& [i, a] : dec.slots) CHECK(a.is_zero());
        CHECK(dec.slot_total() == 5);
    }
    SUBCASE("p = 2, n = 2, v = 1 - u gives slot {i=1: [1]} with r_1 = 1") {
        auto spec = FieldSpec::prime(2);
        auto v = PrincipalUnit::from_coeffs(
            2, {Fq::from_int(spec.get(), 1), Fq::from_int(spec.get(), 1)});  // 1 - u = 1 + u
        auto dec = decompose_unit(v);
        REQUIRE(dec.slots.size() == 1);
        CHECK(dec.slots.at(1).length() == 1);
        CHECK(dec.slots.at(1).comp(0).is_one());
    }
    SUBCASE("p = 2, n = 4: slots have lengths {i=1: 2, i=3: 1} and roundtrip holds") {
        auto spec = FieldSpec::prime(2);
        std::mt19937_64 rng(31);
        for (int it = 0; it < 50; ++it) {
            std::vector<Fq> c{Fq::from_int(spec.get(), 1), Fq::from_index(spec.get(), rng() % 2),
                              Fq::from_index(spec.get(), rng() % 2),
                              Fq::from_index(spec.get(), rng() % 2)};
            auto v = PrincipalUnit::from_coeffs(4, c);
            auto dec = decompose_unit(v);
            REQUIRE(dec.slots.size() == 2);
            CHECK(dec.slots.at(1).length() == 2);
            CHECK(dec.slots.at(3).length() == 1);
            CHECK(reassemble_unit(dec, spec.get()) == v);
        }
    }
}

TEST_CASE("bijectivity and the homomorphism law, randomized over p in {2,3,5}, n <= 32") {
    std::mt19937_64 rng(37);
    for (long p : {2L, 3L, 5L}) {
        auto spec = FieldSpec::prime(p);
        for (int it = 0; it < 60; ++it) {
            long n = 2 + static_cast<long>(rng() % 31);
            auto rnd_unit = [&] {
                std::vector<Fq> c(static_cast<std::size_t>(n), Fq::from_int(spec.get(), 0));
                c[0] = Fq::from_int(spec.get(), 1);
                for (long k = 1; k < n; ++k)
                    c[static_cast<std::size_t>(k)] = Fq::from_index(spec.get(), rng() % p);
                return PrincipalUnit::from_coeffs(n, c);
            };
            auto v = rnd_unit(), w = rnd_unit();
            auto dv = decompose_unit(v), dw = decompose_unit(w), dvw = decompose_unit(v * w);
            CHECK(reassemble_unit(dv, spec.get()) == v);
            for (auto& [i, a] : dvw.slots)
                CHECK(a == witt_add(dv.slots.at(i), dw.slots.at(i), true));
        }
    }
}

TEST_CASE("sum of slot lengths is n - 1 for n <= 200") {
    for (long p : {2L, 3L, 5L, 7L}) {
        for (long n = 1; n <= 200; ++n) {
            long total = 0;
            for (auto& [i, r] : unipotent_slots(p, n)) {
                CHECK(i % p != 0);
                // r is least with i p^r >= n
                long w = i;
                for (int k = 0; k < r; ++k) w *= p;
                CHECK(w >= n);
                if (r > 0) CHECK(w / p < n);
                total += r;
            }
            CHECK(total == n - 1);
        }
    }
}
