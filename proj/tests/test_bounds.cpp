#include "doctest.h"

#include <stdexcept>

#include "cws/bounds.hpp"

using namespace cws;

TEST_CASE("binomial matches Pascal's rule") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(13, 5) == 1287);
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial(4, -1) == 0);
    for (int n = 1; n <= 20; ++n)
        for (int k = 1; k < n; ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("singleton bound") {
    CHECK(singleton_bound(5, 3) == 2);
    CHECK(singleton_bound(5, 2) == 8);
    CHECK(singleton_bound(4, 3) == 1);
    CHECK(singleton_bound(3, 3) == 0);
    CHECK(singleton_bound(14, 4) == 256);
}

TEST_CASE("odd-length distance-2 bound") {
    // 2^(n-2) (n-2)/(n-1), exactly.
    OddBound b5 = odd_n_d2_bound(5);
    CHECK(b5.exact == Rational(6));
    CHECK(b5.floor_value == 6);

    OddBound b7 = odd_n_d2_bound(7);
    CHECK(b7.exact == Rational(160, 6));
    CHECK(b7.floor_value == 26);

    CHECK(odd_n_d2_bound(9).floor_value == 112);
    CHECK(odd_n_d2_bound(11).floor_value == 460);
    CHECK(odd_n_d2_bound(13).floor_value == 1877);
    CHECK_THROWS_AS(odd_n_d2_bound(6), std::invalid_argument);
}

TEST_CASE("known family sizes") {
    CHECK(known_family_size(KnownFamily::rains, 5) == 6);
    CHECK(known_family_size(KnownFamily::rains, 7) == 24);
    CHECK(known_family_size(KnownFamily::rains, 9) == 96);
    CHECK(known_family_size(KnownFamily::rains, 11) == 384);
    CHECK(known_family_size(KnownFamily::smolin, 9) == 93);
    CHECK(known_family_size(KnownFamily::smolin, 11) == 386);
    CHECK(known_family_size(KnownFamily::smolin, 13) == 1586);
    CHECK(known_family_size(KnownFamily::smolin, 15) == 6476);
    CHECK_THROWS_AS(known_family_size(KnownFamily::rains, 8), std::invalid_argument);
    CHECK_THROWS_AS(known_family_size(KnownFamily::smolin, 8), std::invalid_argument);
}

TEST_CASE("lp_feasible brackets the distance-2 optima") {
    CHECK(lp_feasible(4, 2, Rational(4)));
    CHECK(!lp_feasible(4, 2, Rational(5)));
    CHECK(lp_feasible(5, 2, Rational(6)));
    CHECK(!lp_feasible(5, 2, Rational(7)));
    // Feasibility is monotone downward in K.
    CHECK(lp_feasible(5, 2, Rational(3)));
    CHECK(lp_feasible(5, 2, Rational(1)));
    CHECK(lp_feasible(9, 2, Rational(112)));
    CHECK(!lp_feasible(9, 2, Rational(113)));
}

TEST_CASE("lp_feasible handles the five-qubit code point") {
    // ((5,2,3)) exists (the perfect five-qubit code), so K = 2 is feasible;
    // K = 3 is not.
    CHECK(lp_feasible(5, 3, Rational(2)));
    CHECK(!lp_feasible(5, 3, Rational(3)));
    CHECK(lp_feasible(5, 3, Rational(2), /*pure=*/true));
}

TEST_CASE("lp_max_K reproduces the distance-2 column") {
    CHECK(lp_max_K(4, 2).best_integer == 4);
    CHECK(lp_max_K(5, 2).best_integer == 6);
    CHECK(lp_max_K(7, 2).best_integer == 26);
    CHECK(lp_max_K(9, 2).best_integer == 112);
    CHECK(lp_max_K(11, 2).best_integer == 460);
}

TEST_CASE("lp_max_K reproduces the higher-distance entries") {
    CHECK(lp_max_K(9, 3).best_integer == 13);
    CHECK(lp_max_K(11, 3).best_integer == 53);
    CHECK(lp_max_K(12, 4).best_integer == 20);
    CHECK(lp_max_K(13, 4).best_integer == 40);
    CHECK(lp_max_K(14, 4).best_integer == 102);
}

TEST_CASE("lp_max_K supremum stays within one of the integer part") {
    for (auto [n, d] : {std::pair{5, 2}, {7, 2}, {9, 3}, {13, 4}}) {
        LpBound b = lp_max_K(n, d);
        CHECK(b.sup >= Rational(b.best_integer));
        CHECK(b.sup < Rational(b.best_integer + 1));
        CHECK(lp_feasible(n, d, b.sup));
    }
    // At (9,2) and (13,4) the supremum is attained at the integer itself.
    CHECK(lp_max_K(9, 2).sup == Rational(112));
    CHECK(lp_max_K(13, 4).sup == Rational(40));
}

TEST_CASE("odd-length bound agrees with the LP integer part") {
    for (int n : {5, 7, 9, 11}) {
        CHECK(odd_n_d2_bound(n).floor_value == lp_max_K(n, 2).best_integer);
    }
}

TEST_CASE("pure LP bound is never above the general bound") {
    for (auto [n, d] : {std::pair{5, 2}, {6, 3}, {9, 3}}) {
        LpBound general = lp_max_K(n, d);
        LpBound pure = lp_max_K(n, d, /*pure=*/true);
        CHECK(pure.best_integer <= general.best_integer);
    }
}

TEST_CASE("one-dimensional codes are never excluded") {
    // A self-dual stabilizer state satisfies every K = 1 constraint, so the
    // LP floor is 1 even where the Singleton bound reports no qudit survives.
    CHECK(singleton_bound(3, 3) == 0);
    CHECK(lp_max_K(2, 3).best_integer == 1);
    CHECK(lp_max_K(3, 3).best_integer == 1);
    CHECK_THROWS_AS(lp_feasible(2, 4, Rational(1)), std::invalid_argument);
}
