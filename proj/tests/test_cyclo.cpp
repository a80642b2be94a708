#include "ozonelab/cyclo.hpp"
#include "ozonelab/errors.hpp"

#include <doctest.h>

#include <random>

using namespace ozonelab;
using cyclo::CycNum;

namespace {

CycNum random_element(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    std::vector<cyclo::Rational> c(static_cast<std::size_t>(n));
    for (auto& x : c) x = cyclo::Rational(num(rng), den(rng));
    return CycNum::from_powers(n, c);
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclo::cyclotomic_polynomial(1) == std::vector<long long>{-1, 1});
    CHECK(cyclo::cyclotomic_polynomial(4) == std::vector<long long>{1, 0, 1});
    CHECK(cyclo::cyclotomic_polynomial(6) == std::vector<long long>{1, -1, 1});
    CHECK(cyclo::cyclotomic_polynomial(12) == std::vector<long long>{1, 0, -1, 0, 1});
    for (int n = 1; n <= 30; ++n)
        CHECK(cyclo::cyclotomic_polynomial(n).size() == static_cast<std::size_t>(cyclo::euler_phi(n)) + 1);
}

TEST_CASE("roots of unity") {
    for (int n : {1, 2, 3, 4, 5, 6, 8, 9, 12}) {
        CycNum z = CycNum::zeta(n);
        CHECK(z.pow(n).is_one());
        CHECK(cyclo::root_order(z) == n);
        CHECK(z * z.pow(n - 1) == CycNum(1));
    }
    CHECK(CycNum::zeta(2) == CycNum(-1));
    CHECK(CycNum::zeta(3) + CycNum::zeta_power(3, 2) == CycNum(-1));
    CHECK(CycNum::zeta(4) * CycNum::zeta(4) == CycNum(-1));
    CHECK(cyclo::root_order(CycNum(2)) == std::nullopt);
    CHECK_THROWS_AS(cyclo::root_order(CycNum(0)), ZeroInput);
}

TEST_CASE("mixed conductors lift to the lcm") {
    CycNum a = CycNum::zeta(3), b = CycNum::zeta(4);
    CycNum c = a * b;
    CHECK(c.conductor() == 12);
    CHECK(cyclo::root_order(c) == 12);
    CHECK((a + b) - b == a);
    CHECK(CycNum::zeta(6) == -CycNum::zeta_power(3, 2));
    CHECK(CycNum::zeta(6).canonical().conductor() == 3);
    CHECK(CycNum(cyclo::Rational(1, 2), 12).canonical().conductor() == 1);
}

TEST_CASE("field axioms on random elements") {
    std::mt19937 rng(7);
    for (int n : {3, 4, 5, 7, 12}) {
        for (int trial = 0; trial < 20; ++trial) {
            CycNum a = random_element(rng, n), b = random_element(rng, n), c = random_element(rng, n);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            if (!a.is_zero()) CHECK(a * a.inverse() == CycNum(1));
            if (!b.is_zero()) CHECK((a / b) * b == a);
        }
    }
}

TEST_CASE("division by zero") {
    CHECK_THROWS_AS(CycNum(0).inverse(), DivisionByZero);
    CHECK_THROWS_AS(CycNum(1) / CycNum(0), DivisionByZero);
    CHECK_THROWS_AS(cyclo::parse_scalar("1/0"), DivisionByZero);
}

TEST_CASE("scalar literals") {
    CHECK(cyclo::parse_scalar("-1") == CycNum(-1));
    CHECK(cyclo::parse_scalar("3/6") == CycNum(cyclo::Rational(1, 2)));
    CHECK(cyclo::parse_scalar("z3^3") == CycNum(1));
    CHECK(cyclo::parse_scalar("z3 + z3^2") == CycNum(-1));
    CHECK(cyclo::parse_scalar("(1 - z4)*(1 + z4)") == CycNum(2));
    CHECK(cyclo::parse_scalar("-z6") == -CycNum::zeta(6));
    CHECK(CycNum::zeta(12).to_string() == "z12");
    CHECK(CycNum(cyclo::Rational(-3, 4)).to_string() == "-3/4");
}

TEST_CASE("literal syntax errors carry positions") {
    try {
        cyclo::parse_scalar("1 + * 2");
        FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
        CHECK(e.position() == 4);
    }
    CHECK_THROWS_AS(cyclo::parse_scalar("z"), SyntaxError);
    CHECK_THROWS_AS(cyclo::parse_scalar("(1"), SyntaxError);
    CHECK_THROWS_AS(cyclo::parse_scalar(""), SyntaxError);
}

TEST_CASE("printing round-trips through the parser") {
    std::mt19937 rng(11);
    for (int n : {1, 3, 4, 5, 8, 9, 12, 15}) {
        for (int trial = 0; trial < 15; ++trial) {
            CycNum a = random_element(rng, n);
            CHECK(cyclo::parse_scalar(a.to_string()) == a);
        }
    }
}
