#pragma once

// Exact linear algebra over Q(zeta_N).

#include "ozonelab/cyclo.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace ozonelab::la {

using cyclo::CycNum;
using Vector = std::vector<CycNum>;

/// Sparse vector: (index, value) pairs sorted by index, no stored zeros.
class SparseVec {
public:
    using Entry = std::pair<std::size_t, CycNum>;

    SparseVec() = default;
    static SparseVec from_dense(const Vector& v);

    const std::vector<Entry>& entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }
    std::size_t size() const noexcept { return entries_.size(); }
    std::size_t lead() const { return entries_.front().first; }
    const CycNum& lead_value() const { return entries_.front().second; }
    CycNum get(std::size_t index) const;

    /// Appends an entry; indices must be pushed in increasing order.
    void push(std::size_t index, CycNum value);
    void scale(const CycNum& c);
    /// this += c * other
    void axpy(const CycNum& c, const SparseVec& other);
    Vector to_dense(std::size_t n) const;

    friend bool operator==(const SparseVec& a, const SparseVec& b) { return a.entries_ == b.entries_; }

private:
    std::vector<Entry> entries_;
};

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    CycNum& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const CycNum& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Vector row(std::size_t i) const;
    Vector apply(const Vector& v) const;
    Matrix operator*(const Matrix& rhs) const;
    Matrix transpose() const;
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<CycNum> data_;
};

/// Reduced row echelon form of a set of sparse rows in an ambient space of
/// dimension `cols`. Zero rows are dropped; rows come back ordered by pivot.
struct Echelon {
    std::vector<SparseVec> rows;
    std::vector<std::size_t> pivots;
};

Echelon rref_sparse(std::vector<SparseVec> rows, std::size_t cols);

/// Dense wrapper: returns the reduced matrix (same shape, zero rows at the
/// bottom) and the pivot columns.
std::pair<Matrix, std::vector<std::size_t>> rref(const Matrix& m);
std::size_t rank(const Matrix& m);

class Subspace {
public:
    explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}
    static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient);
    static Subspace span_sparse(std::vector<SparseVec> vectors, std::size_t ambient);
    static Subspace full(std::size_t ambient);

    std::size_t ambient() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return echelon_.rows.size(); }
    const std::vector<SparseVec>& rows() const noexcept { return echelon_.rows; }
    const std::vector<std::size_t>& pivots() const noexcept { return echelon_.pivots; }
    std::vector<Vector> basis() const;

    /// Coordinates relative to rows() when v lies in the subspace.
    std::optional<Vector> member(const Vector& v) const;
    std::optional<Vector> member(const SparseVec& v) const;
    bool contains(const Vector& v) const { return member(v).has_value(); }
    bool contains(const SparseVec& v) const { return member(v).has_value(); }
    /// v minus its combination of basis rows read off at the pivot columns;
    /// zero exactly when v lies in the subspace.
    SparseVec reduce(const SparseVec& v) const;

    /// Vectors annihilated by every basis row under the standard pairing.
    Subspace annihilator() const;
    Subspace intersect(const Subspace& other) const;
    Subspace sum(const Subspace& other) const;
    bool contains(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.echelon_.pivots == b.echelon_.pivots &&
               a.echelon_.rows == b.echelon_.rows;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    std::size_t ambient_;
    Echelon echelon_;
};

/// Right null space of the matrix whose rows are given sparsely.
Subspace kernel_sparse(std::vector<SparseVec> rows, std::size_t cols);
Subspace kernel(const Matrix& m);
/// Null space of the matrix with the given sparse columns and `rows` rows.
Subspace kernel_from_columns(const std::vector<SparseVec>& columns, std::size_t rows);
/// Transposes a list of sparse columns into sparse rows.
std::vector<SparseVec> columns_to_rows(const std::vector<SparseVec>& columns, std::size_t rows);

/// One solution x of m * x = b, or nullopt when inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);
std::optional<Vector> solve_columns(const std::vector<SparseVec>& columns, std::size_t rows, const SparseVec& b);

}  // namespace ozonelab::la
