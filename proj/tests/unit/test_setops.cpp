#include "doctest.h"
#include "helpers.hpp"

#include "fqt/entropy.hpp"
#include "fqt/errors.hpp"
#include "fqt/polyset.hpp"
#include "fqt/subspace.hpp"

#include <cmath>
#include <random>

using namespace fqt;
using testutil::P;

namespace {

PolySet random_set(const FieldPtr& f, std::mt19937_64& rng, std::size_t max_size, std::size_t max_len) {
    std::uniform_int_distribution<unsigned> coef(0, f->q() - 1);
    std::uniform_int_distribution<std::size_t> len(0, max_len), size(1, max_size);
    std::vector<Poly> elems;
    for (std::size_t i = size(rng); i-- > 0;) {
        std::vector<Elem> c(len(rng));
        for (auto& x : c) x = Elem(coef(rng));
        elems.emplace_back(f, std::move(c));
    }
    return PolySet(f, std::move(elems));
}

std::set<oracle::Vec> as_set(const PolySet& s) {
    std::set<oracle::Vec> out;
    for (const Poly& p : s) out.insert(testutil::to_vec(p));
    return out;
}

Poly t_of(const FieldPtr& f) { return P(f, {0, 1}); }

} // namespace

TEST_SUITE("setops") {

TEST_CASE("sumset examples") {
    const auto f2 = Field::make(2);
    const PolySet a(f2, Subspace::pol(f2, 2).elements(4));
    const PolySet s = sumset(a, dilate(a, t_of(f2)));
    CHECK(s == PolySet(f2, Subspace::pol(f2, 3).elements(8)));
    CHECK(s.size() == 8);

    const PolySet even(f2, Subspace::span(f2, {P(f2, {1}), P(f2, {0, 0, 1}), P(f2, {0, 0, 0, 0, 1})}).elements(8));
    CHECK(sumset(even, dilate(even, t_of(f2))).size() == 64);

    const PolySet zero(f2, {Poly::zero(f2)});
    CHECK(sumset(zero, zero) == zero);
}

TEST_CASE("sumset, difference set, dilate and translate match brute force") {
    std::mt19937_64 rng(1);
    for (auto [p, r] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {5, 1}, {2, 2}, {3, 2}}) {
        const auto f = Field::make(p, r);
        const oracle::NaivePolyRing ring{testutil::naive(*f)};
        for (int trial = 0; trial < 25; ++trial) {
            const PolySet a = random_set(f, rng, 30, 40), b = random_set(f, rng, 30, 40);
            CHECK(as_set(sumset(a, b)) == ring.sumset(as_set(a), as_set(b)));
            std::set<oracle::Vec> neg_b;
            for (const auto& y : as_set(b)) neg_b.insert(ring.scale(y, f->neg(1)));
            CHECK(as_set(difference_set(a, b)) == ring.sumset(as_set(a), neg_b));
            CHECK(sumset(a, b) == sumset(b, a));
            CHECK(sumset(a, b).size() >= std::max(a.size(), b.size()));
            const Poly c = P(f, {1, 0, 1});
            CHECK(dilate(a, c).size() == a.size());
            CHECK(translate(a, c).size() == a.size());
        }
    }
}

TEST_CASE("set argument errors") {
    const auto f2 = Field::make(2);
    const auto f3 = Field::make(3);
    const PolySet a(f2, {P(f2, {1})});
    CHECK_THROWS_AS(sumset(a, PolySet(f3, {P(f3, {1})})), InputError);
    CHECK_THROWS_AS(dilate(a, Poly::zero(f2)), InputError);
    CHECK_THROWS_AS(doubling_stats(PolySet(f2)), InputError);
    CHECK_THROWS_AS(ruzsa_cover(PolySet(f2), a), InputError);
    CHECK_THROWS_AS(entropic_distance(PolySet(f2), a), InputError);
    const PolySet big(f2, Subspace::pol(f2, 6).elements(64));
    CHECK_THROWS_AS(sumset(big, dilate(big, P(f2, {0, 0, 0, 0, 0, 0, 1})), 100), ResourceError);
}

TEST_CASE("doubling statistics") {
    const auto f2 = Field::make(2);
    const auto f3 = Field::make(3);
    for (unsigned n = 1; n <= 5; ++n) {
        const auto s = doubling_stats(PolySet(f3, Subspace::pol(f3, n).elements(1000)));
        CHECK(s.k1 == Rational(1, 1));
        CHECK(s.k2 == Rational(3, 1));
    }
    const auto s = doubling_stats(PolySet(f2, {Poly::zero(f2), P(f2, {1}), P(f2, {0, 1})}));
    CHECK(s.size == 3);
    CHECK(s.sum_size == 4);
    CHECK(s.k1 == Rational(4, 3));
    CHECK(s.dilate_sum_size == 7);
    CHECK(s.diff_size == 4);

    const auto single = doubling_stats(PolySet(f3, {P(f3, {2, 1})}));
    CHECK(single.k1 == Rational(1, 1));
    CHECK(single.k2 == Rational(1, 1));
}

TEST_CASE("iterated sumset") {
    const auto f2 = Field::make(2);
    const auto f3 = Field::make(3);
    const PolySet pol2(f2, Subspace::pol(f2, 2).elements(4));
    CHECK(iterated_sumset(pol2, 3) == pol2);
    CHECK(iterated_sumset(PolySet(f3, {Poly::zero(f3), P(f3, {1})}), 2) ==
          PolySet(f3, {Poly::zero(f3), P(f3, {1}), P(f3, {2})}));
    CHECK(iterated_sumset(PolySet(f2, {Poly::zero(f2), P(f2, {0, 1})}), 2) ==
          PolySet(f2, {Poly::zero(f2), P(f2, {0, 1})}));
    CHECK_THROWS_AS(iterated_sumset(pol2, 0), InputError);
}

TEST_CASE("Pluennecke-Ruzsa spot check: |3A| <= K^3 |A|") {
    std::mt19937_64 rng(12);
    for (auto [p, r] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {2, 2}}) {
        const auto f = Field::make(p, r);
        for (int trial = 0; trial < 40; ++trial) {
            const PolySet a = random_set(f, rng, 12, 5);
            const double k = static_cast<double>(sumset(a, a).size()) / static_cast<double>(a.size());
            const double triple = static_cast<double>(iterated_sumset(a, 3).size());
            CHECK(triple <= k * k * k * static_cast<double>(a.size()) + 1e-9);
        }
    }
}

TEST_CASE("Ruzsa covering examples") {
    const auto f2 = Field::make(2);
    const PolySet pol2(f2, Subspace::pol(f2, 2).elements(4));
    CHECK(ruzsa_cover(pol2, pol2).size() == 1);

    const PolySet zero(f2, {Poly::zero(f2)});
    const PolySet b(f2, {P(f2, {1}), P(f2, {0, 0, 1}), P(f2, {1, 1, 1})});
    CHECK(ruzsa_cover(zero, b) == b);

    const PolySet a01(f2, {Poly::zero(f2), P(f2, {1})});
    const PolySet b0t(f2, {Poly::zero(f2), P(f2, {0, 1})});
    const PolySet x = ruzsa_cover(a01, b0t);
    CHECK(x == b0t);
    CHECK(x.size() * a01.size() <= sumset(a01, b0t).size());
}

TEST_CASE("Ruzsa covering contract on random pairs") {
    std::mt19937_64 rng(99);
    for (auto [p, r] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {2, 2}}) {
        const auto f = Field::make(p, r);
        for (int trial = 0; trial < 40; ++trial) {
            const PolySet a = random_set(f, rng, 20, 5), b = random_set(f, rng, 20, 5);
            const PolySet x = ruzsa_cover(a, b);
            const PolySet reach = sumset(difference_set(a, a), x);
            for (const Poly& y : b) REQUIRE(reach.contains(y));
            for (const Poly& y : x) REQUIRE(b.contains(y));
            CHECK(x.size() * a.size() <= sumset(a, b).size());
        }
    }
}

TEST_CASE("entropy of an explicit distribution") {
    const auto f2 = Field::make(2);
    const Distribution d({{Poly::zero(f2), 0.5}, {P(f2, {1}), 0.25}, {P(f2, {0, 1}), 0.25}});
    CHECK(entropy(d, 2.0) == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(entropy(Distribution::uniform(PolySet(f2, Subspace::pol(f2, 3).elements(8))), 2.0) ==
          doctest::Approx(3.0).epsilon(1e-12));
    CHECK_THROWS_AS(Distribution({{Poly::zero(f2), 0.5}}), InputError);
    CHECK_THROWS_AS(Distribution({{Poly::zero(f2), 1.5}, {P(f2, {1}), -0.5}}), InputError);
}

TEST_CASE("entropic distance examples") {
    const auto f2 = Field::make(2);
    const auto f3 = Field::make(3);
    for (unsigned n = 1; n <= 4; ++n) {
        const PolySet pol(f3, Subspace::pol(f3, n).elements(100));
        CHECK(std::abs(entropic_distance(pol, pol).distance) <= 1e-9);
        CHECK(entropic_distance(pol, pol).h_a == doctest::Approx(double(n)));
    }

    // {0, 1, t} + {0, 1, t} over F_2: P(0) = 3/9, P(1) = P(t) = P(1+t) = 2/9 (9-outcome enumeration).
    const PolySet a(f2, {Poly::zero(f2), P(f2, {1}), P(f2, {0, 1})});
    const SumLaw law = sum_law(a, a);
    CHECK(law.total == 9);
    CHECK(law.values == std::vector<Poly>{Poly::zero(f2), P(f2, {1}), P(f2, {0, 1}), P(f2, {1, 1})});
    CHECK(law.counts == std::vector<std::uint64_t>{3, 2, 2, 2});
    const auto e = entropic_distance(a, a);
    CHECK(e.h_sum == doctest::Approx(1.974937501201927).epsilon(1e-12));
    CHECK(e.distance == doctest::Approx(0.3899750004807707).epsilon(1e-12));

    const PolySet zero(f3, {Poly::zero(f3)});
    const PolySet b(f3, {P(f3, {1}), P(f3, {2, 1}), P(f3, {0, 0, 1}), P(f3, {1, 1, 1}), P(f3, {2})});
    const auto z = entropic_distance(zero, b);
    CHECK(z.distance == doctest::Approx(z.h_b / 2).epsilon(1e-12));
}

TEST_CASE("entropic distance: nonnegative, triangle inequality, bounded by log doubling") {
    std::mt19937_64 rng(2718);
    for (auto [p, r] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {2, 2}}) {
        const auto f = Field::make(p, r);
        const double q = f->q();
        for (int trial = 0; trial < 40; ++trial) {
            const PolySet a = random_set(f, rng, 16, 5), b = random_set(f, rng, 16, 5), c = random_set(f, rng, 16, 5);
            const double ab = entropic_distance(a, b).distance;
            const double bc = entropic_distance(b, c).distance;
            const double ac = entropic_distance(a, c).distance;
            CHECK(ab >= -1e-9);
            CHECK(ac <= ab + bc + 1e-9);
            const double aa = entropic_distance(a, a).distance;
            CHECK(aa <= std::log(double(sumset(a, a).size()) / double(a.size())) / std::log(q) + 1e-9);
        }
    }
}

}
