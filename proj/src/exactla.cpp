#include "ozonelab/exactla.hpp"

#include "ozonelab/errors.hpp"

#include <algorithm>
#include <map>

namespace ozonelab::la {

SparseVec SparseVec::from_dense(const Vector& v) {
    SparseVec s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) s.entries_.emplace_back(i, v[i]);
    return s;
}

CycNum SparseVec::get(std::size_t index) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                               [](const Entry& e, std::size_t i) { return e.first < i; });
    if (it != entries_.end() && it->first == index) return it->second;
    return CycNum();
}

void SparseVec::push(std::size_t index, CycNum value) {
    if (!value.is_zero()) entries_.emplace_back(index, std::move(value));
}

void SparseVec::scale(const CycNum& c) {
    if (c.is_zero()) {
        entries_.clear();
        return;
    }
    for (auto& e : entries_) e.second *= c;
}

void SparseVec::axpy(const CycNum& c, const SparseVec& other) {
    if (c.is_zero() || other.empty()) return;
    std::vector<Entry> out;
    out.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
        if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
            out.push_back(std::move(*a++));
        } else if (a == entries_.end() || b->first < a->first) {
            out.emplace_back(b->first, c * b->second);
            ++b;
        } else {
            CycNum v = std::move(a->second);
            v += c * b->second;
            if (!v.is_zero()) out.emplace_back(a->first, std::move(v));
            ++a;
            ++b;
        }
    }
    entries_ = std::move(out);
}

Vector SparseVec::to_dense(std::size_t n) const {
    Vector v(n);
    for (const auto& [i, c] : entries_) v.at(i) = c;
    return v;
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = CycNum(1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw DimensionMismatch("row length differs from column count");
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Vector Matrix::row(std::size_t i) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::apply(const Vector& v) const {
    if (v.size() != cols_) throw DimensionMismatch("vector length differs from column count");
    Vector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
    return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw DimensionMismatch("matrix product shapes");
    Matrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                if (!rhs.at(k, j).is_zero()) out.at(i, j) += at(i, k) * rhs.at(k, j);
        }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Echelon rref_sparse(std::vector<SparseVec> rows, std::size_t cols) {
    // Rows bucketed by leading column; each column eliminates inside its bucket.
    std::map<std::size_t, std::vector<SparseVec>> buckets;
    for (auto& r : rows) {
        if (r.empty()) continue;
        if (r.entries().back().first >= cols) throw DimensionMismatch("row index beyond ambient dimension");
        std::size_t lead = r.lead();
        buckets[lead].push_back(std::move(r));
    }
    Echelon out;
    while (!buckets.empty()) {
        auto node = buckets.extract(buckets.begin());
        std::size_t col = node.key();
        auto& bucket = node.mapped();
        auto best = std::min_element(bucket.begin(), bucket.end(),
                                     [](const SparseVec& a, const SparseVec& b) { return a.size() < b.size(); });
        SparseVec pivot = std::move(*best);
        bucket.erase(best);
        pivot.scale(pivot.lead_value().inverse());
        for (auto& r : bucket) {
            CycNum c = -r.lead_value();
            r.axpy(c, pivot);
            if (!r.empty()) buckets[r.lead()].push_back(std::move(r));
        }
        out.rows.push_back(std::move(pivot));
        out.pivots.push_back(col);
    }
    // Back substitution from the last pivot upward.
    for (std::size_t k = out.rows.size(); k-- > 0;) {
        std::size_t p = out.pivots[k];
        for (std::size_t i = 0; i < k; ++i) {
            CycNum c = out.rows[i].get(p);
            if (!c.is_zero()) out.rows[i].axpy(-c, out.rows[k]);
        }
    }
    return out;
}

std::pair<Matrix, std::vector<std::size_t>> rref(const Matrix& m) {
    std::vector<SparseVec> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(SparseVec::from_dense(m.row(i)));
    Echelon e = rref_sparse(std::move(rows), m.cols());
    Matrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < e.rows.size(); ++i)
        for (const auto& [j, c] : e.rows[i].entries()) out.at(i, j) = c;
    return {out, e.pivots};
}

std::size_t rank(const Matrix& m) {
    return rref(m).second.size();
}

Subspace Subspace::span(const std::vector<Vector>& vectors, std::size_t ambient) {
    std::vector<SparseVec> rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors) {
        if (v.size() != ambient) throw DimensionMismatch("vector length differs from ambient dimension");
        rows.push_back(SparseVec::from_dense(v));
    }
    return span_sparse(std::move(rows), ambient);
}

Subspace Subspace::span_sparse(std::vector<SparseVec> vectors, std::size_t ambient) {
    Subspace s(ambient);
    s.echelon_ = rref_sparse(std::move(vectors), ambient);
    return s;
}

Subspace Subspace::full(std::size_t ambient) {
    Subspace s(ambient);
    for (std::size_t i = 0; i < ambient; ++i) {
        SparseVec v;
        v.push(i, CycNum(1));
        s.echelon_.rows.push_back(std::move(v));
        s.echelon_.pivots.push_back(i);
    }
    return s;
}

std::vector<Vector> Subspace::basis() const {
    std::vector<Vector> out;
    out.reserve(echelon_.rows.size());
    for (const auto& r : echelon_.rows) out.push_back(r.to_dense(ambient_));
    return out;
}

std::optional<Vector> Subspace::member(const Vector& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("vector length differs from ambient dimension");
    return member(SparseVec::from_dense(v));
}

std::optional<Vector> Subspace::member(const SparseVec& v) const {
    SparseVec rest = v;
    Vector coords(echelon_.rows.size());
    for (std::size_t i = 0; i < echelon_.rows.size(); ++i) {
        // Pivot columns of other rows vanish, so the coordinate is read off directly.
        coords[i] = v.get(echelon_.pivots[i]);
        if (!coords[i].is_zero()) rest.axpy(-coords[i], echelon_.rows[i]);
    }
    if (!rest.empty()) return std::nullopt;
    return coords;
}

SparseVec Subspace::reduce(const SparseVec& v) const {
    SparseVec rest = v;
    for (std::size_t i = 0; i < echelon_.rows.size(); ++i) {
        CycNum c = v.get(echelon_.pivots[i]);
        if (!c.is_zero()) rest.axpy(-c, echelon_.rows[i]);
    }
    return rest;
}

Subspace Subspace::annihilator() const {
    return kernel_sparse(echelon_.rows, ambient_);
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionMismatch("subspaces of different ambient spaces");
    Subspace a = annihilator();
    Subspace b = other.annihilator();
    std::vector<SparseVec> rows = a.echelon_.rows;
    rows.insert(rows.end(), b.echelon_.rows.begin(), b.echelon_.rows.end());
    return kernel_sparse(std::move(rows), ambient_);
}

Subspace Subspace::sum(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionMismatch("subspaces of different ambient spaces");
    std::vector<SparseVec> rows = echelon_.rows;
    rows.insert(rows.end(), other.echelon_.rows.begin(), other.echelon_.rows.end());
    return span_sparse(std::move(rows), ambient_);
}

bool Subspace::contains(const Subspace& other) const {
    for (const auto& r : other.rows())
        if (!member(r)) return false;
    return true;
}

Subspace kernel_sparse(std::vector<SparseVec> rows, std::size_t cols) {
    Echelon e = rref_sparse(std::move(rows), cols);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : e.pivots) is_pivot[p] = true;
    std::vector<SparseVec> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::map<std::size_t, CycNum> entries;
        entries.emplace(f, CycNum(1));
        for (std::size_t i = 0; i < e.rows.size(); ++i) {
            CycNum c = e.rows[i].get(f);
            if (!c.is_zero()) entries.emplace(e.pivots[i], -c);
        }
        SparseVec v;
        for (auto& [i, c] : entries) v.push(i, std::move(c));
        basis.push_back(std::move(v));
    }
    return Subspace::span_sparse(std::move(basis), cols);
}

Subspace kernel(const Matrix& m) {
    std::vector<SparseVec> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(SparseVec::from_dense(m.row(i)));
    return kernel_sparse(std::move(rows), m.cols());
}

std::vector<SparseVec> columns_to_rows(const std::vector<SparseVec>& columns, std::size_t rows) {
    std::vector<SparseVec> out(rows);
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (const auto& [i, c] : columns[j].entries()) {
            if (i >= rows) throw DimensionMismatch("column entry beyond row count");
            out[i].push(j, c);
        }
    return out;
}

Subspace kernel_from_columns(const std::vector<SparseVec>& columns, std::size_t rows) {
    return kernel_sparse(columns_to_rows(columns, rows), columns.size());
}

std::optional<Vector> solve_columns(const std::vector<SparseVec>& columns, std::size_t rows, const SparseVec& b) {
    std::vector<SparseVec> augmented = columns;
    augmented.push_back(b);
    Echelon e = rref_sparse(columns_to_rows(augmented, rows), columns.size() + 1);
    Vector x(columns.size());
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
        if (e.pivots[i] == columns.size()) return std::nullopt;
        x[e.pivots[i]] = e.rows[i].get(columns.size());
    }
    return x;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
    if (b.size() != m.rows()) throw DimensionMismatch("right-hand side length differs from row count");
    std::vector<SparseVec> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Vector r = m.row(i);
        r.push_back(b[i]);
        rows.push_back(SparseVec::from_dense(r));
    }
    Echelon e = rref_sparse(std::move(rows), m.cols() + 1);
    Vector x(m.cols());
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
        if (e.pivots[i] == m.cols()) return std::nullopt;
        x[e.pivots[i]] = e.rows[i].get(m.cols());
    }
    return x;
}

}  // namespace ozonelab::la
