#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "liequad/rational.hpp"

namespace liequad {

/**
 * Sparse matrix over the exact rationals.
 *
 * Entries are keyed by (row, col); only nonzero values are stored, so
 * operator== is exact structural equality. Elimination-style algorithms
 * (rank, solve, kernel) copy to a dense layout first; everything else
 * stays sparse. Pivoting is deterministic: first nonzero in row-major
 * order, no exchanges, so bases and golden outputs are reproducible.
 */
class RMatrix {
public:
    using Index = std::size_t;
    using EntryMap = std::map<std::pair<Index, Index>, Rational>;

    RMatrix() = default;
    RMatrix(Index rows, Index cols) : rows_(rows), cols_(cols) {}

    static RMatrix identity(Index n) {
        RMatrix m(n, n);
        for (Index i = 0; i < n; ++i) m.set(i, i, 1);
        return m;
    }

    static RMatrix column(const std::vector<Rational>& v) {
        RMatrix m(v.size(), 1);
        for (Index i = 0; i < v.size(); ++i) m.set(i, 0, v[i]);
        return m;
    }

    static RMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
        Index nc = rows.empty() ? 0 : rows.front().size();
        RMatrix m(rows.size(), nc);
        for (Index i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != nc) throw Error("ragged row list");
            for (Index j = 0; j < nc; ++j) m.set(i, j, rows[i][j]);
        }
        return m;
    }

    Index rows() const { return rows_; }
    Index cols() const { return cols_; }
    const EntryMap& entries() const { return entries_; }
    Index nnz() const { return entries_.size(); }
    bool is_zero() const { return entries_.empty(); }

    Rational get(Index i, Index j) const {
        check_index(i, j);
        auto it = entries_.find({i, j});
        return it == entries_.end() ? Rational(0) : it->second;
    }

    void set(Index i, Index j, const Rational& value) {
        check_index(i, j);
        if (value == 0)
            entries_.erase({i, j});
        else
            entries_[{i, j}] = value;
    }

    void add_to(Index i, Index j, const Rational& value) {
        if (value == 0) return;
        check_index(i, j);
        auto [it, inserted] = entries_.try_emplace({i, j}, value);
        if (!inserted) {
            it->second += value;
            if (it->second == 0) entries_.erase(it);
        }
    }

    bool operator==(const RMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
    }
    bool operator!=(const RMatrix& other) const { return !(*this == other); }

    RMatrix operator+(const RMatrix& other) const {
        require_shape(other);
        RMatrix out = *this;
        for (const auto& [ij, v] : other.entries_) out.add_to(ij.first, ij.second, v);
        return out;
    }

    RMatrix operator-(const RMatrix& other) const {
        require_shape(other);
        RMatrix out = *this;
        for (const auto& [ij, v] : other.entries_) out.add_to(ij.first, ij.second, -v);
        return out;
    }

    RMatrix operator-() const {
        RMatrix out(rows_, cols_);
        for (const auto& [ij, v] : entries_) out.entries_[ij] = -v;
        return out;
    }

    RMatrix operator*(const Rational& s) const {
        RMatrix out(rows_, cols_);
        if (s == 0) return out;
        for (const auto& [ij, v] : entries_) out.entries_[ij] = v * s;
        return out;
    }

    friend RMatrix operator*(const Rational& s, const RMatrix& m) { return m * s; }

    RMatrix operator*(const RMatrix& other) const {
        if (cols_ != other.rows_) throw Error("matrix product shape mismatch");
        // Bucket the right factor by row so the product only walks nonzeros.
        std::vector<std::vector<std::pair<Index, const Rational*>>> brows(other.rows_);
        for (const auto& [ij, v] : other.entries_) brows[ij.first].push_back({ij.second, &v});
        RMatrix out(rows_, other.cols_);
        for (const auto& [ij, a] : entries_) {
            for (const auto& [j, b] : brows[ij.second]) out.add_to(ij.first, j, a * *b);
        }
        return out;
    }

    RMatrix transpose() const {
        RMatrix out(cols_, rows_);
        for (const auto& [ij, v] : entries_) out.entries_[{ij.second, ij.first}] = v;
        return out;
    }

    Rational trace() const {
        if (rows_ != cols_) throw Error("trace of non-square matrix");
        Rational t = 0;
        for (const auto& [ij, v] : entries_)
            if (ij.first == ij.second) t += v;
        return t;
    }

    RMatrix col(Index j) const {
        RMatrix out(rows_, 1);
        for (const auto& [ij, v] : entries_)
            if (ij.second == j) out.entries_[{ij.first, 0}] = v;
        return out;
    }

    std::vector<Rational> col_vector(Index j) const {
        std::vector<Rational> out(rows_, Rational(0));
        for (const auto& [ij, v] : entries_)
            if (ij.second == j) out[ij.first] = v;
        return out;
    }

    std::vector<std::vector<Rational>> to_dense() const {
        std::vector<std::vector<Rational>> d(rows_, std::vector<Rational>(cols_, Rational(0)));
        for (const auto& [ij, v] : entries_) d[ij.first][ij.second] = v;
        return d;
    }

    /// Row-major flattening, used when a matrix is treated as a vector of
    /// V (x) V or as a row of a span computation.
    std::map<Index, Rational> flatten() const {
        std::map<Index, Rational> out;
        for (const auto& [ij, v] : entries_) out[ij.first * cols_ + ij.second] = v;
        return out;
    }

private:
    void check_index(Index i, Index j) const {
        if (i >= rows_ || j >= cols_) throw Error("matrix index out of bounds");
    }
    void require_shape(const RMatrix& other) const {
        if (rows_ != other.rows_ || cols_ != other.cols_) throw Error("matrix shape mismatch");
    }

    Index rows_ = 0;
    Index cols_ = 0;
    EntryMap entries_;
};

inline RMatrix commutator(const RMatrix& a, const RMatrix& b) { return a * b - b * a; }

/// tr(A * B) walking only the nonzeros of B.
inline Rational trace_product(const RMatrix& a, const RMatrix& b) {
    if (a.cols() != b.rows() || a.rows() != b.cols()) throw Error("trace_product shape mismatch");
    Rational t = 0;
    for (const auto& [ij, v] : b.entries()) {
        auto it = a.entries().find({ij.second, ij.first});
        if (it != a.entries().end()) t += it->second * v;
    }
    return t;
}

namespace detail {

// Reduced row echelon form with deterministic pivoting: columns left to
// right, pivot in the first remaining row with a nonzero entry. Returns
// the pivot column of each eliminated row, in order.
inline std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t nrows = m.size(), ncols = m.front().size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
        std::size_t pivot_row = row;
        while (pivot_row < nrows && m[pivot_row][col] == 0) ++pivot_row;
        if (pivot_row == nrows) continue;
        std::swap(m[row], m[pivot_row]);
        const Rational inv = Rational(1) / m[row][col];
        for (std::size_t j = col; j < ncols; ++j) m[row][j] *= inv;
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == row || m[i][col] == 0) continue;
            const Rational f = m[i][col];
            for (std::size_t j = col; j < ncols; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace detail

/// Exact rank over the rationals.
inline std::size_t rank(const RMatrix& m) {
    auto d = m.to_dense();
    return detail::rref(d).size();
}

/// One exact solution of A x = b (free variables set to zero), or nullopt
/// when the system is inconsistent.
inline std::optional<RMatrix> solve(const RMatrix& a, const RMatrix& b) {
    if (a.rows() != b.rows() || b.cols() != 1) throw Error("solve: shape mismatch");
    std::vector<std::vector<Rational>> aug(a.rows(), std::vector<Rational>(a.cols() + 1, Rational(0)));
    for (const auto& [ij, v] : a.entries()) aug[ij.first][ij.second] = v;
    for (const auto& [ij, v] : b.entries()) aug[ij.first][a.cols()] = v;
    auto pivots = detail::rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    RMatrix x(a.cols(), 1);
    for (std::size_t r = 0; r < pivots.size(); ++r) x.set(pivots[r], 0, aug[r][a.cols()]);
    return x;
}

/// Exact basis of the null space; empty iff rank = cols.
inline std::vector<RMatrix> kernel(const RMatrix& a) {
    auto d = a.to_dense();
    if (d.empty()) d.assign(1, std::vector<Rational>(a.cols(), Rational(0)));
    auto pivots = detail::rref(d);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<RMatrix> basis;
    for (std::size_t j = 0; j < a.cols(); ++j) {
        if (is_pivot[j]) continue;
        RMatrix v(a.cols(), 1);
        v.set(j, 0, 1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v.set(pivots[r], 0, -d[r][j]);
        basis.push_back(v);
    }
    return basis;
}

/// Exact inverse, or nullopt if singular.
inline std::optional<RMatrix> inverse(const RMatrix& a) {
    if (a.rows() != a.cols()) throw Error("inverse of non-square matrix");
    const std::size_t n = a.rows();
    std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(2 * n, Rational(0)));
    for (const auto& [ij, v] : a.entries()) aug[ij.first][ij.second] = v;
    for (std::size_t i = 0; i < n; ++i) aug[i][n + i] = 1;
    auto pivots = detail::rref(aug);
    if (pivots.size() < n || pivots.back() >= n) return std::nullopt;
    RMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (aug[i][n + j] != 0) inv.set(i, j, aug[i][n + j]);
    return inv;
}

/**
 * Kronecker product with the convention
 *   (i,j) (x) (k,l)  ->  ((i-1)*B.rows + k, (j-1)*B.cols + l)   [1-based]
 * so that kron(A,B) * vec(u (x) v) = vec(Au (x) Bv) with the tensor index
 * of e_i (x) e_k at (i-1)*dim + k.
 */
inline RMatrix kron(const RMatrix& a, const RMatrix& b) {
    RMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (const auto& [ij, va] : a.entries())
        for (const auto& [kl, vb] : b.entries())
            out.set(ij.first * b.rows() + kl.first, ij.second * b.cols() + kl.second, va * vb);
    return out;
}

/**
 * Incremental row-echelon span tracker over sparse rows. Besides rank
 * queries it can expand a vector as an exact linear combination of the
 * vectors previously accepted by add().
 */
class RowSpan {
public:
    explicit RowSpan(std::size_t width) : width_(width) {}

    std::size_t size() const { return rows_.size(); }

    /// Adds v to the span; returns false (and stores nothing) if v already
    /// lies in it.
    bool add(const std::map<std::size_t, Rational>& v) {
        auto [residual, combo] = reduce(v);
        if (residual.empty()) return false;
        const auto pivot = residual.begin()->first;
        const Rational inv = Rational(1) / residual.begin()->second;
        for (auto& [j, val] : residual) val *= inv;
        for (auto& c : combo) c *= -inv;
        combo.resize(added_ + 1, Rational(0));
        combo[added_] = inv;
        EchelonRow row{pivot, std::move(residual), std::move(combo)};
        auto pos = rows_.begin();
        while (pos != rows_.end() && pos->pivot < pivot) ++pos;
        rows_.insert(pos, std::move(row));
        ++added_;
        return true;
    }

    bool add(const RMatrix& m) { return add(m.flatten()); }

    bool contains(const std::map<std::size_t, Rational>& v) const {
        return reduce(v).first.empty();
    }
    bool contains(const RMatrix& m) const { return contains(m.flatten()); }

    /// Coordinates of v over the accepted vectors, or nullopt if v is
    /// outside the span.
    std::optional<std::vector<Rational>> coordinates(const std::map<std::size_t, Rational>& v) const {
        auto [residual, combo] = reduce(v);
        if (!residual.empty()) return std::nullopt;
        combo.resize(added_, Rational(0));
        return combo;
    }
    std::optional<std::vector<Rational>> coordinates(const RMatrix& m) const {
        return coordinates(m.flatten());
    }

private:
    struct EchelonRow {
        std::size_t pivot;
        std::map<std::size_t, Rational> vec;      // leading coefficient 1
        std::vector<Rational> combo;              // expression over accepted vectors
    };

    // Returns (residual after reduction, accumulated combination) where
    // v = residual + sum combo[k] * accepted_k.
    std::pair<std::map<std::size_t, Rational>, std::vector<Rational>> reduce(
        std::map<std::size_t, Rational> r) const {
        std::vector<Rational> combo(added_, Rational(0));
        for (const auto& row : rows_) {
            auto it = r.find(row.pivot);
            if (it == r.end()) continue;
            const Rational c = it->second;
            for (const auto& [j, val] : row.vec) {
                auto rit = r.find(j);
                if (rit == r.end()) {
                    r.emplace(j, -c * val);
                } else {
                    rit->second -= c * val;
                    if (rit->second == 0) r.erase(rit);
                }
            }
            for (std::size_t k = 0; k < row.combo.size(); ++k) combo[k] += c * row.combo[k];
        }
        return {std::move(r), std::move(combo)};
    }

    std::size_t width_;
    std::size_t added_ = 0;
    std::vector<EchelonRow> rows_;  // sorted by pivot
};

} // namespace liequad
