#include <doctest.h>

#include <random>

#include "torsor/conductor.hpp"
#include "torsor/parse.hpp"

using namespace torsor;

namespace {

LocalWittElement elt(long p, const FieldSpecPtr& spec, std::initializer_list<const char*> comps) {
    std::vector<RationalFunction> c;
    for (auto* t : comps) c.push_back(parse_rational(t, spec, 'u'));
    return LocalWittElement(p, std::move(c));
}

}  // namespace

TEST_CASE("reduce_class examples") {
    auto spec = FieldSpec::prime(2);
    SUBCASE("alpha_p, p = 2: u^-2 = F(u^-1) reduces to 0") {
        auto g = GroupSpec::local_local(2, {{1, 1}});
        auto c = LocalTorsorClass::local_local(g, {elt(2, spec, {"1/u^2"})});
        auto red = reduce_class(c);
        CHECK(red.reps[0].comp(0).is_zero());
        CHECK(local_conductor(c) == 0);
    }
    SUBCASE("etale ASW, p = 2: u^-2 reduces to u^-1") {
        auto g = GroupSpec::etale_asw(2, 1);
        auto c = LocalTorsorClass::etale_asw(g, elt(2, spec, {"1/u^2"}));
        auto red = reduce_class(c);
        CHECK(red.reps[0].comp(0) == parse_rational("1/u", spec, 'u'));
    }
    SUBCASE("alpha_p, p = 2: u^-3 is already reduced (odd pole)") {
        auto g = GroupSpec::local_local(2, {{1, 1}});
        auto c = LocalTorsorClass::local_local(g, {elt(2, spec, {"1/u^3"})});
        auto red = reduce_class(c);
        CHECK(red.reps[0].comp(0) == parse_rational("1/u^3", spec, 'u'));
    }
    SUBCASE("W_1[F^2]: pole order must be divisible by p^2 to reduce") {
        auto g = GroupSpec::local_local(2, {{1, 2}});
        auto c = LocalTorsorClass::local_local(g, {elt(2, spec, {"1/u^2"})});
        CHECK(reduce_class(c).reps[0].comp(0) == parse_rational("1/u^2", spec, 'u'));
        auto c4 = LocalTorsorClass::local_local(g, {elt(2, spec, {"1/u^4"})});
        CHECK(reduce_class(c4).reps[0].comp(0).is_zero());
    }
}

TEST_CASE("local_conductor examples") {
    SUBCASE("alpha_p: class of u^-1 has conductor 2 for every p") {
        for (long p : {2L, 3L, 5L}) {
            auto spec = FieldSpec::prime(p);
            auto g = GroupSpec::local_local(p, {{1, 1}});
            auto c = LocalTorsorClass::local_local(g, {elt(p, spec, {"1/u"})});
            CHECK(local_conductor(c) == 2);
        }
    }
    SUBCASE("alpha_p, p = 2: class of u^-3 has conductor 4") {
        auto spec = FieldSpec::prime(2);
        auto g = GroupSpec::local_local(2, {{1, 1}});
        auto c = LocalTorsorClass::local_local(g, {elt(2, spec, {"1/u^3"})});
        CHECK(local_conductor(c) == 4);
    }
    SUBCASE("integral representatives have conductor 0 in every variant") {
        auto spec = FieldSpec::prime(3);
        auto gll = GroupSpec::local_local(3, {{2, 1}});
        auto c1 = LocalTorsorClass::local_local(gll, {elt(3, spec, {"1+u", "u^2"})});
        CHECK(local_conductor(c1) == 0);
        auto gasw = GroupSpec::etale_asw(3, 2);
        auto c2 = LocalTorsorClass::etale_asw(gasw, elt(3, spec, {"u", "2"}));
        CHECK(local_conductor(c2) == 0);
        CHECK(asw_conductor(c2) == 0);
    }
    SUBCASE("product groups take the max over factors") {
        auto spec = FieldSpec::prime(2);
        auto g = GroupSpec::local_local(2, {{1, 1}, {1, 2}});
        auto c = LocalTorsorClass::local_local(
            g, {elt(2, spec, {"1/u"}), elt(2, spec, {"1/u^3"})});
        CHECK(local_conductor(c) == 4);
    }
}

TEST_CASE("asw_conductor examples") {
    SUBCASE("m = 1, u^-1 has conductor 2 for every p (classical Artin-Schreier)") {
        for (long p : {2L, 3L, 5L}) {
            auto spec = FieldSpec::prime(p);
            auto g = GroupSpec::etale_asw(p, 1);
            auto c = LocalTorsorClass::etale_asw(g, elt(p, spec, {"1/u"}));
            CHECK(asw_conductor(c) == 2);
        }
    }
    SUBCASE("m = 1, p = 2: u^-2 reduces to u^-1, conductor 2") {
        auto spec = FieldSpec::prime(2);
        auto g = GroupSpec::etale_asw(2, 1);
        auto c = LocalTorsorClass::etale_asw(g, elt(2, spec, {"1/u^2"}));
        CHECK(asw_conductor(c) == 2);
    }
    SUBCASE("m = 2 weights the first component by p") {
        auto spec = FieldSpec::prime(3);
        auto g = GroupSpec::etale_asw(3, 2);
        auto c = LocalTorsorClass::etale_asw(g, elt(3, spec, {"1/u", "0"}));
        CHECK(asw_conductor(c) == 4);  // 1 + 3 * 1
        auto c2 = LocalTorsorClass::etale_asw(g, elt(3, spec, {"0", "1/u"}));
        CHECK(asw_conductor(c2) == 2);  // 1 + 1
    }
    SUBCASE("sampled cross-check against the filtration level of the reduced representative") {
        std::mt19937_64 rng(59);
        for (long p : {2L, 3L}) {
            auto spec = FieldSpec::prime(p);
            RationalFunction u = RationalFunction::var(spec.get());
            for (int it = 0; it < 20; ++it) {
                int m = 1 + static_cast<int>(rng() % 2);
                std::vector<RationalFunction> comps;
                for (int i = 0; i < m; ++i) {
                    RationalFunction f = RationalFunction::zero(spec.get());
                    for (long k = 1; k <= 3; ++k)
                        f = f + RationalFunction(Fq::from_index(spec.get(), rng() % p)) * u.pow(-k);
                    comps.push_back(f);
                }
                auto g = GroupSpec::etale_asw(p, m);
                auto c = LocalTorsorClass::etale_asw(g, LocalWittElement(p, comps));
                auto red = reduce_class(c);
                long formula = asw_conductor(c);
                long sweep = red.reps[0].is_integral() ? 0 : fil_level(red.reps[0]);
                CHECK(formula == sweep);
            }
        }
    }
}

TEST_CASE("class equality via reduction") {
    auto spec = FieldSpec::prime(2);
    auto g = GroupSpec::local_local(2, {{1, 1}});
    auto a = LocalTorsorClass::local_local(g, {elt(2, spec, {"1/u^3"})});
    // same class shifted by F(h), h = 1/u + 1
    auto b = LocalTorsorClass::local_local(g, {elt(2, spec, {"1/u^3+1/u^2+1"})});
    CHECK(classes_equal(a, b));
    auto c = LocalTorsorClass::local_local(g, {elt(2, spec, {"1/u"})});
    CHECK_FALSE(classes_equal(a, c));
}

TEST_CASE("well-definedness: conductor is representative- and resolution-independent") {
    std::mt19937_64 rng(61);
    for (long p : {2L, 3L}) {
        auto spec = FieldSpec::prime(p);
        RationalFunction u = RationalFunction::var(spec.get());
        for (int it = 0; it < 30; ++it) {
            int m = 1 + static_cast<int>(rng() % 2);
            int r = 1 + static_cast<int>(rng() % 2);
            auto g = GroupSpec::local_local(p, {{m, r}});
            std::vector<RationalFunction> comps;
            for (int i = 0; i < m; ++i) {
                RationalFunction f = RationalFunction(Fq::from_index(spec.get(), rng() % p));
                for (long k = 1; k <= 4; ++k)
                    f = f + RationalFunction(Fq::from_index(spec.get(), rng() % p)) * u.pow(-k);
                comps.push_back(f);
            }
            auto cls = LocalTorsorClass::local_local(g, {LocalWittElement(p, comps)});
            long c0 = local_conductor(cls);

            // shift the representative by a random F^r-image
            std::vector<RationalFunction> hs;
            for (int i = 0; i < m; ++i) {
                RationalFunction h = RationalFunction(Fq::from_index(spec.get(), rng() % p));
                for (long k = 1; k <= 2; ++k)
                    h = h + RationalFunction(Fq::from_index(spec.get(), rng() % p)) * u.pow(-k);
                hs.push_back(h);
            }
            WittVector<RationalFunction> h(p, hs);
            for (int k = 0; k < r; ++k) h = frobenius(h);
            auto shifted = witt_add(cls.reps[0].as_witt(), h, true);
            auto cls2 = LocalTorsorClass::local_local(g, {LocalWittElement(p, shifted.comps())});
            CHECK(local_conductor(cls2) == c0);

            // composite resolution: push into W_m[F^(r+1)] along F
            auto gplus = GroupSpec::local_local(p, {{m, r + 1}});
            auto fwd = frobenius(cls.reps[0].as_witt());
            auto cls3 = LocalTorsorClass::local_local(gplus, {LocalWittElement(p, fwd.comps())});
            CHECK(local_conductor(cls3) == c0);
        }
    }
}

TEST_CASE("greedy reduction attains the exhaustive minimum on the F_2 grid, poles <= 4") {
    // G = alpha_p, p = 2, m = 1: sweep every principal part over F_2 with pole <= 4,
    // compare the greedy conductor against brute-force minimization over all
    // F-shifts with poles <= 4
    auto spec = FieldSpec::prime(2);
    RationalFunction u = RationalFunction::var(spec.get());
    auto g = GroupSpec::local_local(2, {{1, 1}});
    auto fil_of = [&](const RationalFunction& f) {
        LocalWittElement e(2, {f});
        return e.is_integral() ? 0L : fil_level(e);
    };
    for (unsigned mask = 0; mask < 16; ++mask) {
        RationalFunction f = RationalFunction::zero(spec.get());
        for (long k = 1; k <= 4; ++k)
            if (mask & (1u << (k - 1))) f = f + u.pow(-k);
        auto cls = LocalTorsorClass::local_local(g, {LocalWittElement(2, {f})});
        long greedy = local_conductor(cls);
        long best = fil_of(f);
        for (unsigned hm = 0; hm < 32; ++hm) {
            RationalFunction h = RationalFunction::zero(spec.get());
            for (long k = 1; k <= 4; ++k)
                if (hm & (1u << (k - 1))) h = h + u.pow(-k);
            if (hm & 16u) h = h + ring_one(u);
            RationalFunction cand = f - h * h;  // F(h) = h^2 over F_2
            best = std::min(best, fil_of(cand));
        }
        CHECK(greedy == best);
    }
}

TEST_CASE("monotonicity: conductor of a sum is bounded by the max") {
    std::mt19937_64 rng(67);
    auto spec = FieldSpec::prime(2);
    RationalFunction u = RationalFunction::var(spec.get());
    auto g = GroupSpec::local_local(2, {{2, 1}});
    for (int it = 0; it < 25; ++it) {
        auto rnd_cls = [&] {
            std::vector<RationalFunction> comps;
            for (int i = 0; i < 2; ++i) {
                RationalFunction f = RationalFunction::zero(spec.get());
                for (long k = 1; k <= 3; ++k)
                    f = f + RationalFunction(Fq::from_index(spec.get(), rng() % 2)) * u.pow(-k);
                comps.push_back(f);
            }
            return LocalTorsorClass::local_local(g, {LocalWittElement(2, comps)});
        };
        auto a = rnd_cls(), b = rnd_cls();
        auto sum = LocalTorsorClass::local_local(
            g, {LocalWittElement(2, witt_add(a.reps[0].as_witt(), b.reps[0].as_witt(), true).comps())});
        CHECK(local_conductor(sum) <= std::max(local_conductor(a), local_conductor(b)));
    }
}

TEST_CASE("conductor 0 exactly when the reduction is integral") {
    std::mt19937_64 rng(71);
    auto spec = FieldSpec::prime(3);
    RationalFunction u = RationalFunction::var(spec.get());
    auto g = GroupSpec::local_local(3, {{1, 1}});
    for (int it = 0; it < 40; ++it) {
        RationalFunction f = RationalFunction::zero(spec.get());
        for (long k = 1; k <= 3; ++k)
            f = f + RationalFunction(Fq::from_index(spec.get(), rng() % 3)) * u.pow(-k);
        auto cls = LocalTorsorClass::local_local(g, {LocalWittElement(3, {f})});
        bool integral = reduce_class(cls).reps[0].is_integral();
        CHECK((local_conductor(cls) == 0) == integral);
    }
}

TEST_CASE("group and resolution descriptions") {
    CHECK(GroupSpec::local_local(2, {{1, 1}, {2, 3}}).str() == "W1[F^1]xW2[F^3]");
    CHECK(GroupSpec::etale_asw(3, 2).str() == "Z/p^2");
    CHECK(GroupSpec::kummer(5, 4).str() == "mu_4");
    CHECK_THROWS_AS(GroupSpec::kummer(5, 1), DomainError);
    CHECK_THROWS_AS(GroupSpec::local_local(2, {{0, 1}}), DomainError);
    CHECK_THROWS_AS(GroupSpec::local_local(2, {{1, 0}}), DomainError);
    CHECK_THROWS_AS(GroupSpec::etale_asw(2, 0), DomainError);
    CHECK(ResolutionSpec::for_factor(2, 1).str() == "0 -> W_2[F^1] -> W_2 --F^1--> W_2 -> 0");
    CHECK(ResolutionSpec::for_asw(2).str() == "0 -> Z/p^2 -> W_2 --F-1--> W_2 -> 0");
}
