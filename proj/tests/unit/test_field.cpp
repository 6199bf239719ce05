#include "doctest.h"
#include "helpers.hpp"

#include "fqt/errors.hpp"
#include "fqt/field.hpp"

using namespace fqt;

namespace {

const std::vector<std::pair<unsigned, unsigned>> kSupported = {
    {2, 1}, {3, 1}, {5, 1}, {7, 1}, {11, 1}, {13, 1}, {2, 2}, {2, 3}, {3, 2}, {2, 4}, {5, 2},
    {3, 3}, {2, 5}, {7, 2}, {2, 6}, {31, 1}, {61, 1}};

} // namespace

TEST_SUITE("field") {

TEST_CASE("prime field examples") {
    const auto f2 = Field::make(2);
    CHECK(f2->add(1, 1) == 0);
    CHECK(f2->mul(1, 1) == 1);

    const auto f5 = Field::make(5);
    CHECK(f5->inv(2) == 3);

    const auto f3 = Field::make(3);
    CHECK(f3->add(2, 2) == 1);
}

TEST_CASE("F_4 with x^2+x+1: theta^2 = theta + 1") {
    const auto f4 = Field::make(2, 2, std::vector<unsigned>{1, 1, 1});
    CHECK(f4->mul(2, 2) == 3);
    // Full table against the independent schoolbook construction.
    const oracle::NaiveField naive{2, {1, 1, 1}};
    for (unsigned a = 0; a < 4; ++a)
        for (unsigned b = 0; b < 4; ++b) CHECK(f4->mul(Elem(a), Elem(b)) == naive.mul(a, b));
}

TEST_CASE("F_9 with x^2+1: theta^2 = -1") {
    const auto f9 = Field::make(3, 2);
    REQUIRE(f9->modulus() == std::vector<unsigned>{1, 0, 1});
    CHECK(f9->mul(3, 3) == 2);
}

TEST_CASE("tables agree with naive arithmetic for every supported field") {
    for (auto [p, r] : kSupported) {
        CAPTURE(p);
        CAPTURE(r);
        const auto f = Field::make(p, r);
        const auto naive = testutil::naive(*f);
        for (unsigned a = 0; a < f->q(); ++a) {
            CHECK(f->neg(Elem(a)) == naive.neg(a));
            for (unsigned b = 0; b < f->q(); ++b) {
                REQUIRE(f->add(Elem(a), Elem(b)) == naive.add(a, b));
                REQUIRE(f->mul(Elem(a), Elem(b)) == naive.mul(a, b));
            }
        }
    }
}

TEST_CASE("field axioms hold exhaustively for q <= 64") {
    for (auto [p, r] : kSupported) {
        const auto f = Field::make(p, r);
        if (f->q() > 64) continue;
        CAPTURE(f->spec());
        const unsigned q = f->q();
        bool ok = true;
        for (unsigned a = 0; a < q && ok; ++a) {
            if (a) ok &= f->mul(Elem(a), f->inv(Elem(a))) == 1;
            ok &= f->add(Elem(a), f->neg(Elem(a))) == 0;
            for (unsigned b = 0; b < q && ok; ++b) {
                ok &= f->add(Elem(a), Elem(b)) == f->add(Elem(b), Elem(a));
                ok &= f->mul(Elem(a), Elem(b)) == f->mul(Elem(b), Elem(a));
                ok &= f->sub(f->add(Elem(a), Elem(b)), Elem(b)) == a;
                for (unsigned c = 0; c < q && ok; ++c) {
                    const Elem x = Elem(a), y = Elem(b), z = Elem(c);
                    ok &= f->add(f->add(x, y), z) == f->add(x, f->add(y, z));
                    ok &= f->mul(f->mul(x, y), z) == f->mul(x, f->mul(y, z));
                    ok &= f->mul(x, f->add(y, z)) == f->add(f->mul(x, y), f->mul(x, z));
                }
            }
        }
        CHECK(ok);
    }
}

TEST_CASE("Frobenius is additive for q <= 64") {
    for (auto [p, r] : kSupported) {
        const auto f = Field::make(p, r);
        if (f->q() > 64) continue;
        CAPTURE(f->spec());
        for (unsigned a = 0; a < f->q(); ++a)
            for (unsigned b = 0; b < f->q(); ++b)
                REQUIRE(f->pow(f->add(Elem(a), Elem(b)), p) == f->add(f->pow(Elem(a), p), f->pow(Elem(b), p)));
    }
}

TEST_CASE("generator is primitive") {
    for (auto [p, r] : kSupported) {
        const auto f = Field::make(p, r);
        unsigned order = 0;
        Elem x = 1;
        do {
            x = f->mul(x, f->generator());
            ++order;
        } while (x != 1);
        CHECK(order == f->q() - 1);
    }
}

TEST_CASE("user modulus overrides the table") {
    const auto a = Field::make(2, 3, std::vector<unsigned>{1, 0, 1, 1});  // x^3 + x^2 + 1
    const auto b = Field::make(2, 3);
    CHECK_FALSE(*a == *b);
    CHECK(a->mul(2, 4) == 5);  // theta^3 = theta^2 + 1
    CHECK(b->mul(2, 4) == 3);  // theta^3 = theta + 1
    const auto f128 = Field::make(2, 7, std::vector<unsigned>{1, 1, 0, 0, 0, 0, 0, 1});
    CHECK(f128->q() == 128);
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(Field::make(4), InputError);
    CHECK_THROWS_AS(Field::make(1), InputError);
    CHECK_THROWS_AS(Field::make(2, 0), InputError);
    CHECK_THROWS_AS(Field::make(2, 2, std::vector<unsigned>{1, 0, 1}), InputError);  // (x+1)^2
    CHECK_THROWS_AS(Field::make(2, 3, std::vector<unsigned>{1, 1, 1}), InputError);  // wrong degree
    CHECK_THROWS_AS(Field::make(3, 2, std::vector<unsigned>{1, 0, 2}), InputError);  // not monic
    CHECK_THROWS_AS(Field::make(2, 7), InputError);                                   // no default for 128
    CHECK_THROWS_AS(Field::make(2, 9), InputError);                                   // q > 256
    CHECK_THROWS_AS(Field::make(2)->inv(0), DivisionByZero);
}

TEST_CASE("irreducibility test") {
    CHECK(is_irreducible_mod_p({1, 1, 1}, 2));
    CHECK_FALSE(is_irreducible_mod_p({1, 0, 1}, 2));
    CHECK(is_irreducible_mod_p({1, 0, 1}, 3));
    CHECK_FALSE(is_irreducible_mod_p({1, 0, 1}, 5));  // x^2 + 1 = (x+2)(x+3)
    CHECK_FALSE(is_irreducible_mod_p({1, 0, 1, 0, 1}, 2));  // (x^2+x+1)^2
}

}
