#include <doctest.h>

#include "torsor/field.hpp"
#include "torsor/parse.hpp"

using namespace torsor;

TEST_CASE("prime field construction validates primality") {
    CHECK_NOTHROW(FieldSpec::prime(2));
    CHECK_NOTHROW(FieldSpec::prime(31));
    CHECK_THROWS_AS(FieldSpec::prime(1), DomainError);
    CHECK_THROWS_AS(FieldSpec::prime(4), DomainError);
    CHECK_THROWS_AS(FieldSpec::prime(91), DomainError);  // 7 * 13
}

TEST_CASE("extension modulus must be irreducible") {
    CHECK_NOTHROW(FieldSpec::extension(2, {1, 1, 1}));     // t^2+t+1
    CHECK_THROWS_AS(FieldSpec::extension(2, {1, 0, 1}), DomainError);  // (t+1)^2
    CHECK_NOTHROW(FieldSpec::extension(3, {1, 0, 1}));     // t^2+1 over F_3
    CHECK_THROWS_AS(FieldSpec::extension(5, {2, 0, 3, 0, 1}), DomainError);  // (t^2+1)(t^2+2)
    CHECK_NOTHROW(FieldSpec::extension(2, {1, 1, 0, 0, 1}));  // t^4+t+1
}

TEST_CASE("specs are interned") {
    auto a = FieldSpec::prime(5);
    auto b = FieldSpec::prime(5);
    CHECK(a.get() == b.get());
    auto c = FieldSpec::extension(2, {1, 1, 1});
    auto d = FieldSpec::extension(2, {1, 1, 1});
    CHECK(c.get() == d.get());
}

TEST_CASE("field axioms hold on every element of small fields") {
    for (auto spec : {FieldSpec::prime(7), FieldSpec::extension(2, {1, 1, 1}),
                      FieldSpec::extension(3, {2, 1, 1})}) {
        auto elts = all_elements(spec.get());
        Fq one = Fq::from_int(spec.get(), 1);
        for (auto& a : elts) {
            if (!a.is_zero()) CHECK(a * a.inverse() == one);
            CHECK(a + (-a) == ring_zero(a));
            for (auto& b : elts) {
                CHECK(a * b == b * a);
                CHECK(a + b == b + a);
            }
        }
    }
}

TEST_CASE("Frobenius is a field automorphism with unique p-th roots (p^d <= 512)") {
    for (auto spec :
         {FieldSpec::prime(2), FieldSpec::extension(2, {1, 1, 0, 0, 1}),  // F_16
          FieldSpec::extension(3, {1, 0, 1}),                             // F_9
          FieldSpec::extension(2, {1, 1, 0, 1, 1, 0, 0, 0, 1})}) {        // F_256: t^8+t^4+t^3+t+1
        auto elts = all_elements(spec.get());
        for (auto& a : elts) {
            CHECK(a.pth_root().pow(spec->p()) == a);
            CHECK(a.frobenius().pth_root() == a);
            for (auto& b : elts) {
                CHECK((a + b).frobenius() == a.frobenius() + b.frobenius());
                CHECK((a * b).frobenius() == a.frobenius() * b.frobenius());
                if (spec->order() > 16) break;  // additivity sweep only for tiny fields
            }
        }
    }
}

TEST_CASE("element printing round-trips through the parser") {
    auto spec = FieldSpec::extension(3, {1, 0, 1});
    for (auto& a : all_elements(spec.get())) {
        Fq back = parse_element(a.str(), spec);
        CHECK(back == a);
    }
}
