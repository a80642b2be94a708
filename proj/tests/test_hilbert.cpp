#include "ozonelab/errors.hpp"
#include "ozonelab/hilbert.hpp"

#include <doctest.h>

using namespace ozonelab;
using hilbert::HilbertSeries;

namespace {

std::vector<long> expand_long(const HilbertSeries& h, int d) {
    std::vector<long> out;
    for (const auto& c : h.expand(d)) out.push_back(c.get_si());
    return out;
}

// Binomial-sum reference for 1/(1-t)^n.
long binom(long n, long k) {
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("parse and expand") {
    CHECK(expand_long(HilbertSeries::parse("1/(1-t)^3"), 5) == std::vector<long>{1, 3, 6, 10, 15, 21});
    CHECK(expand_long(HilbertSeries::parse("1/((1-t)^2*(1-t^2))"), 6) == std::vector<long>{1, 2, 4, 6, 9, 12, 16});
    CHECK(expand_long(HilbertSeries::parse("(1+t)/(1-t)"), 3) == std::vector<long>{1, 2, 2, 2});
    CHECK(expand_long(HilbertSeries::parse("1 + 2*t + t^2"), 3) == std::vector<long>{1, 2, 1, 0});
    for (int n = 1; n <= 5; ++n) {
        auto h = HilbertSeries::polynomial_ring(n);
        auto c = expand_long(h, 6);
        for (long d = 0; d <= 6; ++d) CHECK(c[static_cast<std::size_t>(d)] == binom(n + d - 1, d));
    }
}

TEST_CASE("reduction cancels common factors") {
    auto h = HilbertSeries::parse("(1-t^6)/((1-t^2)^3*(1-t^3))");
    CHECK(h.expand(20) == HilbertSeries::parse("(1+t^3)/(1-t^2)^3").expand(20));
    CHECK(h.denominator().count(1) == 0);
    CHECK(HilbertSeries::parse("(1-t)/(1-t)^2") == HilbertSeries::polynomial_ring(1));
}

TEST_CASE("printing round-trips") {
    for (const char* s : {"1/(1-t)^3", "(1-t^16)/((1-t^4)^3*(1-t^8))", "(1+t^2+t^4)/((1-t^2)^2*(1-t^3))",
                          "1 + t", "1/((1-t)^2*(1-t^2))"}) {
        auto h = HilbertSeries::parse(s);
        CHECK(HilbertSeries::parse(h.to_string()) == h);
    }
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(HilbertSeries::parse("1/(1+t)"), SyntaxError);
    CHECK_THROWS_AS(HilbertSeries::parse("1/(1-t"), SyntaxError);
    CHECK_THROWS_AS(HilbertSeries::parse("x"), SyntaxError);
    CHECK_THROWS_AS(HilbertSeries::parse(""), SyntaxError);
}

TEST_CASE("rank at one") {
    auto r = hilbert::rank_at_one(HilbertSeries::parse("1/(1-t)^3"),
                                  HilbertSeries::parse("(1-t^6)/((1-t^2)^3*(1-t^3))"));
    CHECK(r.rank == 4);
    REQUIRE(r.pi_degree);
    CHECK(*r.pi_degree == 2);
    for (int n = 1; n <= 6; ++n) {
        auto rk = hilbert::rank_at_one(HilbertSeries::polynomial_ring(2), HilbertSeries().over(n, 2));
        CHECK(rk.rank == n * n);
    }
    auto du = hilbert::rank_at_one(HilbertSeries::parse("1/((1-t)^2*(1-t^2))"),
                                   HilbertSeries::parse("(1-t^16)/((1-t^4)^3*(1-t^8))"));
    CHECK(du.rank == 16);
    CHECK_THROWS_AS(hilbert::rank_at_one(HilbertSeries::polynomial_ring(2), HilbertSeries::polynomial_ring(3)),
                    PoleAtOne);
    CHECK_THROWS_AS(hilbert::rank_at_one(HilbertSeries::polynomial_ring(1), HilbertSeries::parse("(1+t)/(1-t^3)")),
                    NonIntegerRank);
    CHECK_FALSE(hilbert::rank_at_one(HilbertSeries::polynomial_ring(2), HilbertSeries::parse("1/((1-t)*(1-t^2))")).pi_degree);
}

TEST_CASE("rank is multiplicative over towers") {
    // A over B over C: rk_C(A) = rk_B(A) * rk_C(B)
    auto A = HilbertSeries::polynomial_ring(3);
    auto B = HilbertSeries().over(2, 3);
    auto C = HilbertSeries().over(4, 3);
    CHECK(hilbert::rank_at_one(A, C).rank == hilbert::rank_at_one(A, B).rank * hilbert::rank_at_one(B, C).rank);
}

TEST_CASE("series fitting") {
    CHECK(hilbert::fit_series({1, 3, 6, 10}, HilbertSeries::polynomial_ring(3)));
    CHECK_FALSE(hilbert::fit_series({1, 3, 6, 11}, HilbertSeries::polynomial_ring(3)));
    CHECK(hilbert::fit_series({}, HilbertSeries::polynomial_ring(3)));
}
