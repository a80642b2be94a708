#include "common.hpp"
#include "ozonelab/central.hpp"
#include "ozonelab/errors.hpp"
#include "ozonelab/families.hpp"

#include <doctest.h>

using namespace ozonelab;
using central::AlgebraRing;
using nc::Algebra;
using ozone::GradedAutomorphism;

TEST_CASE("center of a quantum plane at a cube root of unity") {
    Algebra A(testutil::quantum_plane("z3"), 8);
    auto Z = central::center(A, 6);
    CHECK(Z.dims() == std::vector<long>{1, 0, 0, 2, 0, 0, 3});
    CHECK(central::is_central(A, A.parse("x^3")));
    CHECK(central::is_central(A, A.parse("x^3*y^3 + y^6")));
    CHECK_FALSE(central::is_central(A, A.parse("x*y")));
    AlgebraRing R(A);
    auto gens = central::subalgebra_generators(R, Z, 6);
    CHECK(gens.degrees() == std::vector<int>{3, 3});
    CHECK(central::find_relations(R, gens, 6).relations.empty());
}

TEST_CASE("the center of a commutative ring is everything") {
    Algebra A(testutil::presentation({"x", "y", "z"}, {"x*y - y*x", "y*z - z*y", "x*z - z*x"}), 5);
    auto Z = central::center(A, 4);
    CHECK(Z.dims() == std::vector<long>{1, 3, 6, 10, 15});
}

TEST_CASE("center degree requests beyond the completion") {
    Algebra A(testutil::quantum_plane("z3"), 4);
    CHECK_NOTHROW(central::center_degree(A, 3));
    CHECK_THROWS_AS(central::center_degree(A, 4), DegreeOutOfRange);
}

TEST_CASE("eta maps of normal elements") {
    Algebra A(testutil::quantum_plane("z3"), 6);
    auto ex = central::eta_of_normal(A, A.parse("x"));
    CHECK(ex == GradedAutomorphism::diagonal(A, {1, cyclo::CycNum::zeta(3)}));
    auto ey = central::eta_of_normal(A, A.parse("y"));
    CHECK(ey == GradedAutomorphism::diagonal(A, {cyclo::CycNum::zeta_power(3, 2), 1}));
    // eta_{fg} = eta_g o eta_f
    CHECK(central::eta_of_normal(A, A.parse("x*y")) == ey.compose(A, ex));
    CHECK(central::eta_of_normal(A, A.parse("x^3")).is_identity());
    CHECK(central::is_normal(A, A.parse("x^2*y")));
    CHECK_FALSE(central::is_normal(A, A.parse("x + y")));
    CHECK_THROWS_AS(central::eta_of_normal(A, A.parse("x + y")), NotNormal);
}

TEST_CASE("twisted centralizers contain exactly the normal elements with that eta") {
    Algebra A(testutil::quantum_plane("z3"), 6);
    auto phi = GradedAutomorphism::diagonal(A, {1, cyclo::CycNum::zeta(3)});
    CHECK(central::twisted_centralizer(A, phi, 1).dim() == 1);
    for (int d = 1; d <= 5; ++d) {
        auto T = central::twisted_centralizer(A, phi, d);
        for (const auto& v : T.rows()) CHECK(central::eta_of_normal(A, A.element(d, v)) == phi);
    }
    CHECK(central::twisted_centralizer(A, GradedAutomorphism::identity(A), 3) == central::center_degree(A, 3));
}

TEST_CASE("fixed rings and Molien averages") {
    Algebra A(testutil::quantum_plane("-1"), 7);
    auto minus = GradedAutomorphism::diagonal(A, {-1, -1});
    auto G = ozone::FiniteGroupTable::closure(A, {minus}).elements();
    auto F = central::fixed_ring(A, G, 6);
    CHECK(F.dims() == std::vector<long>{1, 0, 3, 0, 5, 0, 7});
    for (int d = 0; d <= 6; ++d) CHECK(central::molien_average(A, G, d) == cyclo::CycNum(F.dims()[static_cast<std::size_t>(d)]));
}

TEST_CASE("relations among invariants of a commutative ring") {
    Algebra A(testutil::presentation({"x", "y"}, {"x*y - y*x"}), 7);
    auto G = ozone::FiniteGroupTable::closure(A, {GradedAutomorphism::diagonal(A, {-1, -1})}).elements();
    auto F = central::fixed_ring(A, G, 6);
    AlgebraRing R(A);
    auto gens = central::subalgebra_generators(R, F, 6, "u");
    CHECK(gens.names() == std::vector<std::string>{"u1", "u2", "u3"});
    auto rels = central::find_relations(R, gens, 6);
    REQUIRE(rels.relations.size() == 1);
    const auto& rel = rels.relations.front();
    CHECK(rel.degree == 4);
    CHECK(rel.proportional_to({{2, 0, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}},
                              {0, 1, -1, 0, 0}));
    CHECK(central::evaluate(R, gens, rel).empty());
    CHECK(central::generates(R, gens, F, 6));
}

TEST_CASE("relation search rejects noncommuting generators") {
    Algebra A(testutil::quantum_plane("-1"), 4);
    AlgebraRing R(A);
    auto gens = central::subalgebra_generators(R, central::GradedSubspace{{la::Subspace(1), la::Subspace::full(2)}}, 1);
    CHECK_THROWS_AS(central::find_relations(R, gens, 2), NonCommutingGenerators);
}
