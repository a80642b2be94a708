#include "common.hpp"
#include "ozonelab/errors.hpp"
#include "ozonelab/families.hpp"
#include "ozonelab/smash.hpp"

#include <doctest.h>

using namespace ozonelab;
using cyclo::CycNum;
using nc::Algebra;
using ozone::FiniteGroupTable;
using ozone::GradedAutomorphism;

TEST_CASE("smash product multiplication") {
    Algebra A(testutil::quantum_plane("-1"), 5);
    auto G = FiniteGroupTable::closure(A, {GradedAutomorphism::diagonal(A, {-1, 1})});
    smash::SmashAlgebra S(A, G);
    auto g = *G.find(GradedAutomorphism::diagonal(A, {-1, 1}));
    auto xg = S.make(A.parse("x"), g);
    auto y1 = S.make(A.parse("y"), G.identity());
    // (x # g)(y # e) = x g(y) # g = x y # g
    CHECK(S.multiply(xg, y1) == S.make(A.parse("x*y"), g));
    // (y # e)(x # g) = y x # g = -x y # g
    CHECK(S.multiply(y1, xg) == S.make(A.parse("-x*y"), g));
    // (1 # g)(x # e) = -x # g
    CHECK(S.multiply(S.make(A.parse("1"), g), S.make(A.parse("x"), G.identity())) == S.make(A.parse("-x"), g));
    CHECK(S.dim(2) == 6);
    auto u = S.make(A.parse("x*y + y^2"), g);
    CHECK(S.element(2, S.coords(u, 2)) == u);
}

TEST_CASE("smash center of a faithful action on a commutative ring is the invariant ring") {
    Algebra A(testutil::presentation({"x", "y"}, {"x*y - y*x"}), 6);
    auto G = FiniteGroupTable::closure(A, {GradedAutomorphism::diagonal(A, {CycNum::zeta(3), CycNum::zeta(3)})});
    smash::SmashAlgebra S(A, G);
    auto Zs = smash::smash_center(S, 5);
    CHECK(Zs.dims() == std::vector<long>{1, 0, 0, 4, 0, 0});
}

TEST_CASE("smash center cross-check on a quantum plane") {
    Algebra A(testutil::quantum_plane("-1"), 6);
    auto G = FiniteGroupTable::closure(A, {GradedAutomorphism::diagonal(A, {-1, -1})});
    smash::SmashAlgebra S(A, G);
    for (int d = 0; d <= 5; ++d) {
        auto piece = smash::smash_center_degree(S, d);
        CHECK(piece.cross_checked);
    }
}

TEST_CASE("rank multiplicativity") {
    auto hA = hilbert::HilbertSeries::polynomial_ring(3);
    auto hZ = hilbert::HilbertSeries::parse("(1-t^6)/((1-t^2)^3*(1-t^3))");
    auto rc = smash::rank_multiplicativity_check(hA, 2, hZ, 4);
    CHECK(rc.ok);
    CHECK(rc.computed == 8);
    CHECK_FALSE(smash::rank_multiplicativity_check(hA, 3, hZ, 4 + 1).ok);
    CHECK_THROWS_AS(smash::rank_multiplicativity_check(hA, 2, std::nullopt, 4), SeriesUnavailable);
}
