#include "common.hpp"
#include "ozonelab/central.hpp"
#include "ozonelab/errors.hpp"
#include "ozonelab/ozone.hpp"

#include <doctest.h>

using namespace ozonelab;
using cyclo::CycNum;
using nc::Algebra;
using ozone::FiniteGroupTable;
using ozone::GradedAutomorphism;

TEST_CASE("automorphism verification") {
    Algebra A(testutil::quantum_plane("z3"), 4);
    CHECK_NOTHROW(ozone::verify_automorphism(A, {{"x", "z3*x"}, {"y", "-y"}}));
    CHECK_THROWS_AS(ozone::verify_automorphism(A, {{"x", "x + y"}, {"y", "y"}}), NotAutomorphism);
    CHECK_THROWS_AS(ozone::verify_automorphism(A, {{"x", "y"}, {"y", "x"}}), NotAutomorphism);
    CHECK_THROWS_AS(ozone::verify_automorphism(A, {{"x", "x^2"}, {"y", "y"}}), NotAutomorphism);
    CHECK_THROWS_AS(ozone::verify_automorphism(A, {{"x", "0"}, {"y", "y"}}), NotAutomorphism);
    Algebra B(testutil::quantum_plane("-1"), 4);
    auto swap = ozone::verify_automorphism(B, {{"x", "y"}, {"y", "x"}});
    CHECK(swap.kind() == GradedAutomorphism::Kind::PermutationDiagonal);
    CHECK(swap.compose(B, swap).is_identity());
}

TEST_CASE("automorphisms act multiplicatively") {
    Algebra A(testutil::presentation({"x", "y", "z"}, {"x*y + y*x - z^2", "x*z + z*x", "y*z + z*y"}), 5);
    auto g = ozone::verify_automorphism(A, {{"x", "z4*x"}, {"y", "-z4*y"}, {"z", "z"}});
    const char* samples[] = {"x", "y*z", "x*y - z^2", "z*x*y"};
    for (const char* a : samples)
        for (const char* b : samples) {
            auto fa = A.parse(a), fb = A.parse(b);
            if (*A.degree(fa) + *A.degree(fb) > 5) continue;
            CHECK(g.apply(A, A.multiply(fa, fb)) == A.multiply(g.apply(A, fa), g.apply(A, fb)));
        }
    CHECK(g.trace(A, 1) == CycNum(1));
}

TEST_CASE("group tables and invariant factors") {
    Algebra A(testutil::presentation({"x", "y"}, {"x*y - y*x"}), 3);
    auto a = GradedAutomorphism::diagonal(A, {CycNum::zeta(4), 1});
    auto b = GradedAutomorphism::diagonal(A, {1, CycNum::zeta(6)});
    auto G = FiniteGroupTable::closure(A, {a, b});
    CHECK(G.order() == 24);
    CHECK(G.invariant_factors() == std::vector<long>{12, 2});
    CHECK(ozone::factors_string(G.invariant_factors()) == "(12,2)");
    CHECK(FiniteGroupTable::closure(A, {}).invariant_factors().empty());
    auto H = FiniteGroupTable::closure(A, {a});
    CHECK(G.contains(H));
    CHECK_FALSE(H.contains(G));
    for (std::size_t i = 0; i < G.order(); ++i) {
        CHECK(G.multiply(i, G.identity()) == i);
        CHECK(G.power(i, static_cast<long>(G.element_order(i))) == G.identity());
    }
    auto swap = ozone::verify_automorphism(A, {{"x", "y"}, {"y", "x"}});
    auto S = FiniteGroupTable::closure(A, {swap, GradedAutomorphism::diagonal(A, {CycNum::zeta(3), 1})});
    CHECK(S.order() == 18);
    CHECK_FALSE(S.is_abelian());
    CHECK_THROWS_AS(S.invariant_factors(), NonAbelianGroup);
    CHECK_THROWS_AS(FiniteGroupTable::closure(A, {a, b}, 10), BudgetExceeded);
}

TEST_CASE("quantum planes at roots of unity") {
    for (int n : {2, 3, 4, 5}) {
        CAPTURE(n);
        std::string q = "z" + std::to_string(n);
        Algebra A(testutil::quantum_plane(q), 2 * n + 1);
        auto Z = central::center(A, 2 * n);
        auto rep = ozone::ozone_sandwich(A, Z, {}, 2 * n, 2 * n);
        CHECK(rep.exact);
        CHECK(rep.factors() == std::vector<long>{n, n});
        CHECK(ozone::divisibility_check(rep, static_cast<long>(n) * n));
        CHECK_FALSE(ozone::divisibility_check(rep, static_cast<long>(n) * n + 1));
        for (const auto& w : rep.witnesses) CHECK(central::eta_of_normal(A, w.element) == w.eta);
        CHECK(ozone::default_conductor(A, Z, 2 * n) % n == 0);
    }
}

TEST_CASE("the lower bound never exceeds the upper bound") {
    for (const char* q : {"-1", "z3", "z4", "z6"}) {
        Algebra A(testutil::quantum_plane(q), 7);
        auto Z = central::center(A, 6);
        auto rep = ozone::ozone_sandwich(A, Z, {}, 12, 6);
        CHECK(rep.upper.contains(rep.lower));
        for (const auto& g : rep.upper.elements()) CHECK(ozone::fixes_center(A, g, Z));
    }
}

TEST_CASE("commutative polynomial rings have trivial ozone group") {
    Algebra A(testutil::presentation({"x", "y"}, {"x*y - y*x"}), 5);
    auto Z = central::center(A, 4);
    CHECK(ozone::diagonal_upper_bound(A, Z, 12, 4).order() == 1);
    auto rep = ozone::ozone_sandwich(A, Z, {}, 12, 4);
    CHECK(rep.exact);
    CHECK(rep.order() == 1);
}

TEST_CASE("divisibility contradictions are reported") {
    Algebra A(testutil::quantum_plane("z4"), 9);
    auto Z = central::center(A, 8);
    CHECK_THROWS_AS(ozone::ozone_sandwich(A, Z, {}, 8, 8, 6), ContradictsDivisibility);
}

TEST_CASE("search space cap") {
    Algebra A(testutil::presentation({"a", "b", "c", "d", "e"}, {"a*b - b*a"}), 3);
    auto Z = central::center(A, 2);
    CHECK_THROWS_AS(ozone::diagonal_upper_bound(A, Z, 60, 2), SearchSpaceTooLarge);
}

TEST_CASE("skew recognition") {
    Algebra A(testutil::quantum_plane("z5"), 5);
    auto sp = ozone::skew_recognition(A, {A.parse("x"), A.parse("y")}, 4);
    CHECK(sp.pbw);
    CHECK(sp.p[0][1] == CycNum::zeta(5));
    CHECK(sp.p[1][0] == CycNum::zeta(5).inverse());
    Algebra B(testutil::presentation({"x", "y"}, {"x*y + y*x - x^2"}), 5);
    CHECK_THROWS_AS(ozone::skew_recognition(B, {B.parse("x"), B.parse("y")}, 4), NotSkew);
    CHECK_THROWS_AS(ozone::skew_recognition(A, {A.parse("x^2"), A.parse("y")}, 4), NotDegreeOneGenerated);
}

TEST_CASE("filtered realizations") {
    Algebra A(testutil::presentation({"x", "y"}, {"x*y - y*x - x^2"}), 4);
    auto t = std::vector<nc::FreeElt>{A.parse("x"), A.parse("y")};
    std::vector<std::vector<CycNum>> p{{1, 1}, {1, 1}};
    CHECK(ozone::filtered_realization_check(A, t, p).ok);
    std::vector<std::vector<CycNum>> bad{{1, -1}, {-1, 1}};
    CHECK_FALSE(ozone::filtered_realization_check(A, t, bad).ok);
}
