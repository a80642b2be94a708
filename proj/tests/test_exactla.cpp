#include "ozonelab/exactla.hpp"

#include <doctest.h>

#include <random>

using namespace ozonelab;
using cyclo::CycNum;
using la::Matrix;
using la::Vector;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int n, int density) {
    std::uniform_int_distribution<int> val(-3, 3), pick(0, 9), power(0, n - 1);
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (pick(rng) < density) m.at(i, j) = CycNum(val(rng)) * CycNum::zeta_power(n, power(rng));
    return m;
}

}  // namespace

TEST_CASE("rref of a small rational matrix") {
    Matrix m = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
    auto [r, piv] = la::rref(m);
    CHECK(piv == std::vector<std::size_t>{0, 1});
    CHECK(r.row(0) == Vector{1, 0, 1});
    CHECK(r.row(1) == Vector{0, 1, 1});
    CHECK(r.row(2) == Vector{0, 0, 0});
    CHECK(la::rank(m) == 2);
}

TEST_CASE("rank plus nullity") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
        Matrix m = random_matrix(rng, r, c, 6, 4);
        la::Subspace K = la::kernel(m);
        CHECK(la::rank(m) + K.dim() == c);
        for (const auto& v : K.basis())
            for (const auto& x : m.apply(v)) CHECK(x.is_zero());
    }
}

TEST_CASE("solve returns a solution exactly when one exists") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        Matrix m = random_matrix(rng, 4, 3, 4, 6);
        Vector x0{CycNum(1), CycNum::zeta(4), CycNum(-2)};
        Vector b = m.apply(x0);
        auto x = la::solve(m, b);
        REQUIRE(x.has_value());
        CHECK(m.apply(*x) == b);
    }
    Matrix z = Matrix::from_rows({{1, 1}, {1, 1}}, 2);
    CHECK_FALSE(la::solve(z, Vector{1, 2}).has_value());
}

TEST_CASE("subspace operations") {
    la::Subspace U = la::Subspace::span({{1, 0, 0}, {0, 1, 0}}, 3);
    la::Subspace W = la::Subspace::span({{0, 1, 0}, {0, 0, 1}}, 3);
    CHECK(U.intersect(W).dim() == 1);
    CHECK(U.sum(W).dim() == 3);
    CHECK(U.contains(Vector{2, 3, 0}));
    CHECK_FALSE(U.contains(Vector{0, 0, 1}));
    CHECK(U.annihilator().dim() == 1);
    CHECK(U.intersect(W).contains(Vector{0, 5, 0}));
    CHECK(la::Subspace::full(3).contains(U));
    CHECK(U.reduce(la::SparseVec::from_dense(Vector{1, 1, 0})).empty());
}

TEST_CASE("dimension formula for sums and intersections") {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix a = random_matrix(rng, 3, 5, 3, 5), b = random_matrix(rng, 3, 5, 3, 5);
        std::vector<Vector> ra, rb;
        for (std::size_t i = 0; i < 3; ++i) {
            ra.push_back(a.row(i));
            rb.push_back(b.row(i));
        }
        la::Subspace U = la::Subspace::span(ra, 5), W = la::Subspace::span(rb, 5);
        CHECK(U.sum(W).dim() + U.intersect(W).dim() == U.dim() + W.dim());
    }
}

TEST_CASE("sparse and dense routes agree") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 15; ++trial) {
        Matrix m = random_matrix(rng, 5, 6, 5, 3);
        std::vector<la::SparseVec> rows;
        for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(la::SparseVec::from_dense(m.row(i)));
        CHECK(la::kernel_sparse(rows, 6) == la::kernel(m));
        CHECK(la::rref_sparse(rows, 6).rows.size() == la::rank(m));
    }
}
