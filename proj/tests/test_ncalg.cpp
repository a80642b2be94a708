#include "ozonelab/errors.hpp"
#include "ozonelab/families.hpp"
#include "ozonelab/ncalg.hpp"
#include "common.hpp"
#include "support/oracle.hpp"

#include <doctest.h>

#include <random>

using namespace ozonelab;
using nc::Algebra;
using nc::AlgebraPresentation;
using nc::FreeElt;

using testutil::presentation;

TEST_CASE("free algebra expressions") {
    std::vector<nc::Generator> g{{"x", 1}, {"y", 1}};
    FreeElt a = nc::parse_element("x*y - 2*y*x", g);
    CHECK(a.size() == 2);
    CHECK(a.to_string(g) == "x*y - 2*y*x");
    CHECK(nc::parse_element(a.to_string(g), g) == a);
    CHECK(nc::parse_element("(x + y)^2", g) == nc::parse_element("x^2 + x*y + y*x + y^2", g));
    CHECK(nc::parse_element("q*x", g, {{"q", cyclo::CycNum::zeta(3)}}).coeff(std::string(1, '\0')) == cyclo::CycNum::zeta(3));
    CHECK(nc::parse_element("z4*x", g).coeff(std::string(1, '\0')) == cyclo::CycNum::zeta(4));
    CHECK_THROWS_AS(nc::parse_element("x*w", g), SyntaxError);
    CHECK_THROWS_AS(nc::parse_element("x*", g), SyntaxError);
}

TEST_CASE("quantum plane has the ordered monomials as normal words") {
    auto p = presentation({"x", "y"}, {"y*x - z3*x*y"});
    Algebra A(p, 6);
    CHECK(A.basis().dims() == std::vector<long>{1, 2, 3, 4, 5, 6, 7});
    FreeElt yx = A.parse("y*x");
    CHECK(A.normal_form(yx) == A.parse("z3*x*y"));
    CHECK(A.power(A.parse("x*y"), 3) == A.normal_form(A.parse("z3^3*x^3*y^3")));
    CHECK(A.conductor() == 3);
}

TEST_CASE("multiplication is associative in the quotient") {
    auto p = presentation({"x", "y", "z"}, {"x*y + y*x + z^2", "y*z + z*y + x^2", "z*x + x*z - y^2"});
    Algebra A(p, 6);
    const char* samples[] = {"x", "y + z", "x*y - z^2", "z*x*y", "x^2 + 3*y*z"};
    for (const char* a : samples)
        for (const char* b : samples)
            for (const char* c : samples) {
                FreeElt fa = A.parse(a), fb = A.parse(b), fc = A.parse(c);
                if (*A.degree(fa) + *A.degree(fb) + *A.degree(fc) > 6) continue;
                CHECK(A.multiply(A.multiply(fa, fb), fc) == A.multiply(fa, A.multiply(fb, fc)));
            }
}

TEST_CASE("normal forms respect the relations") {
    auto p = presentation({"x", "y", "z"}, {"x*y + y*x + z^2", "y*z + z*y + x^2", "z*x + x*z - y^2"});
    Algebra A(p, 5);
    for (const auto& r : p.relations) CHECK(A.normal_form(r).is_zero());
    for (const auto& r : p.relations)
        for (int g = 0; g < 3; ++g) {
            CHECK(A.normal_form(A.generator(g) * r).is_zero());
            CHECK(A.normal_form(r * A.generator(g) * A.generator(2 - g)).is_zero());
        }
}

TEST_CASE("every corpus presentation matches the tensor-quotient oracle") {
    for (const auto& f : families::corpus()) {
        CAPTURE(f.id);
        std::optional<std::vector<int>> prec;
        if (!f.order.empty()) prec = nc::parse_precedence(f.presentation, f.order);
        Algebra A(f.presentation, 6, prec);
        CHECK(A.basis().dims() == oracle::dims(f.presentation, 6));
        CHECK(A.certified());
    }
}

TEST_CASE("the oracle agrees on algebras that are not domains") {
    for (auto rels : std::vector<std::vector<std::string>>{{"x*y", "y*x"}, {"x^2", "y^2"}, {"x*y - y*x", "x^3"}}) {
        auto p = presentation({"x", "y"}, rels);
        Algebra A(p, 6);
        CHECK(A.basis().dims() == oracle::dims(p, 6));
    }
}

TEST_CASE("monomial orders give the same dimensions") {
    auto f = families::find_case("sklyanin_111m1");
    std::vector<std::vector<std::string>> orders{{"x", "y", "z"}, {"z", "y", "x"}, {"y", "z", "x"}};
    for (const auto& o : orders) {
        Algebra A(f.presentation, 5, nc::parse_precedence(f.presentation, o));
        CHECK(A.basis().dims() == std::vector<long>{1, 3, 6, 10, 15, 21});
    }
    CHECK_THROWS_AS(nc::parse_precedence(f.presentation, {"x", "y"}), InvalidPresentation);
    CHECK_THROWS_AS(nc::parse_precedence(f.presentation, {"x", "y", "w"}), InvalidPresentation);
}

TEST_CASE("certification reports the first disagreement") {
    auto p = presentation({"x", "y"}, {"x*y - y*x"});
    p.declared_hilbert = hilbert::HilbertSeries::polynomial_ring(3);
    Algebra A(p, 4);
    CHECK_FALSE(A.certified());
    CHECK(A.certification_failure() == 1);
}

TEST_CASE("inconsistent and out-of-range requests") {
    auto p = presentation({"x"}, {"x - 1"});
    CHECK_THROWS_AS(Algebra(p, 3), Error);
    auto q = presentation({"x", "y"}, {"x*y - y*x"});
    Algebra A(q, 3);
    CHECK_THROWS_AS(A.require_degree(4), DegreeOutOfRange);
    CHECK_THROWS_AS(A.normal_form(A.parse("x^5")), DegreeOutOfRange);
}

TEST_CASE("rule cap") {
    auto p = presentation({"x", "y", "z"}, {"x*y - 2*y*x + z*z", "y*z - 3*z*y + x*x"});
    CHECK_THROWS_AS(Algebra(p, 8, std::nullopt, 3), BudgetExceeded);
}

TEST_CASE("tensor products and Ore extensions") {
    auto a = presentation({"x", "y"}, {"y*x - z3*x*y"});
    auto b = presentation({"t"}, {});
    auto ab = nc::tensor_product(a, b);
    CHECK(ab.generators.size() == 3);
    CHECK(Algebra(ab, 4).basis().dims() == std::vector<long>{1, 3, 6, 10, 15});
    auto c = presentation({"x", "y"}, {"y*x + x*y"});
    auto oc = nc::ore_extension(c, {nc::parse_element("y", c.generators), nc::parse_element("x", c.generators)}, 1);
    CHECK(Algebra(oc, 4).basis().dims() == std::vector<long>{1, 3, 6, 10, 15});
    CHECK_THROWS_AS(nc::ore_extension(c, {nc::parse_element("x*y", c.generators), nc::parse_element("x", c.generators)}, 1),
                    NonGradedTwist);
}

TEST_CASE("leading words multiply on skew polynomial rings") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (const char* id : {"skew_q3", "skew_q4", "skew_cy3", "skew_comm3"}) {
        CAPTURE(id);
        auto f = families::find_case(id);
        Algebra A(f.presentation, 8);
        const auto& rs = A.rewrite_system();
        auto random_element = [&](int d) {
            FreeElt e;
            for (const auto& w : A.basis().words(d)) e.add_term(w, coef(rng));
            return e;
        };
        for (int trial = 0; trial < 20; ++trial) {
            int d1 = 1 + static_cast<int>(rng() % 4), d2 = 1 + static_cast<int>(rng() % 4);
            FreeElt a = random_element(d1), b = random_element(d2);
            if (a.is_zero() || b.is_zero()) continue;
            FreeElt ab = A.multiply(a, b);
            REQUIRE_FALSE(ab.is_zero());
            FreeElt lead = A.normal_form(FreeElt::word(rs.leading_word(a) + rs.leading_word(b)));
            CHECK(rs.leading_word(ab) == rs.leading_word(lead));
        }
    }
}
