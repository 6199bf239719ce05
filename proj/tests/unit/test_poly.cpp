#include "doctest.h"
#include "helpers.hpp"

#include "fqt/errors.hpp"
#include "fqt/poly.hpp"

#include <random>

using namespace fqt;
using testutil::P;

TEST_SUITE("poly") {

TEST_CASE("arithmetic examples") {
    const auto f2 = Field::make(2);
    const auto f3 = Field::make(3);
    CHECK((P(f2, {1, 1}) + P(f2, {1, 1})).is_zero());
    CHECK(P(f2, {1, 1}).shifted(1) == P(f2, {0, 1, 1}));
    CHECK(P(f3, {1, 1}) * P(f3, {1, 1}) == P(f3, {1, 2, 1}));
}

TEST_CASE("canonical form and degree sentinel") {
    const auto f = Field::make(3);
    CHECK(P(f, {1, 2, 0, 0}).coeffs().size() == 2);
    CHECK(P(f, {0, 0}).is_zero());
    CHECK(Poly::zero(f).degree() == kNegInf);
    CHECK(kNegInf < Degree{0});
    CHECK(P(f, {2}).degree() == 0);
    CHECK(P(f, {0, 0, 2}).monic() == P(f, {0, 0, 1}));
    CHECK(P(f, {1, 2}).to_string() == "1,2");
    CHECK(Poly::zero(f).to_string() == "0");
    CHECK(P(f, {0, 0, 1, 2}).unshifted(2) == P(f, {1, 2}));
    CHECK_THROWS_AS(P(f, {1, 1}).unshifted(1), InvariantError);
}

TEST_CASE("mixed fields and out-of-range coefficients are rejected") {
    const auto f2 = Field::make(2);
    const auto f3 = Field::make(3);
    CHECK_THROWS_AS(P(f2, {1}) + P(f3, {1}), InputError);
    CHECK_THROWS_AS(P(f2, {1}) * P(f3, {1}), InputError);
    CHECK_THROWS_AS(P(f2, {2}), InputError);
    // Equal-by-value fields built separately are compatible.
    CHECK_NOTHROW(P(f2, {1}) + P(Field::make(2), {1}));
}

TEST_CASE("ring operations agree with naive polynomial arithmetic") {
    std::mt19937_64 rng(7);
    for (auto [p, r] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {5, 1}, {2, 2}, {3, 2}, {2, 4}}) {
        const auto f = Field::make(p, r);
        const oracle::NaivePolyRing ring{testutil::naive(*f)};
        std::uniform_int_distribution<unsigned> coef(0, f->q() - 1), len(0, 40);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<Elem> a(len(rng)), b(len(rng));
            for (auto& x : a) x = Elem(coef(rng));
            for (auto& x : b) x = Elem(coef(rng));
            const Poly pa(f, a), pb(f, b);
            CHECK(testutil::to_vec(pa + pb) == ring.add(testutil::to_vec(pa), testutil::to_vec(pb)));
            CHECK(testutil::to_vec(pa * pb) == ring.mul(testutil::to_vec(pa), testutil::to_vec(pb)));
            CHECK((pa - pb) + pb == pa);
            CHECK(pa + (-pa) == Poly::zero(f));
        }
    }
}

TEST_CASE("canonical order sorts by degree first") {
    const auto f = Field::make(3);
    CHECK(Poly::zero(f) < P(f, {2}));
    CHECK(P(f, {2}) < P(f, {0, 1}));
    CHECK(P(f, {2, 1}) < P(f, {0, 2}));
    CHECK(P(f, {1, 1}) < P(f, {2, 1}));
}

}
