#include "gaudin/matrix.hpp"

#include <algorithm>
#include <utility>

#include "gaudin/errors.hpp"

namespace gaudin {

GfMatrix::GfMatrix(Prime p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), a_(rows * cols, p.zero()) {}

GfMatrix::GfMatrix(Prime p, const std::vector<std::vector<std::int64_t>>& rows)
    : GfMatrix(p, rows.size(), rows.empty() ? 0 : rows.front().size()) {
    for (std::size_t r = 0; r < rows_; ++r) {
        if (rows[r].size() != cols_) throw InvalidInput("ragged matrix literal");
        for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = p(rows[r][c]);
    }
}

GfMatrix GfMatrix::identity(Prime p, std::size_t n) {
    GfMatrix out(p, n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = p.one();
    return out;
}

GfMatrix GfMatrix::from_columns(Prime p, std::size_t rows, const std::vector<FpVec>& columns) {
    GfMatrix out(p, rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) throw InvalidInput("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) out(r, c) = columns[c][r];
    }
    return out;
}

FpVec GfMatrix::column(std::size_t c) const {
    FpVec out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return out;
}

FpVec GfMatrix::row(std::size_t r) const {
    return FpVec(a_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                 a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

bool GfMatrix::is_zero() const { return is_zero_vector(a_); }

GfMatrix& GfMatrix::operator+=(const GfMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidInput("matrix shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

GfMatrix& GfMatrix::operator-=(const GfMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidInput("matrix shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

GfMatrix& GfMatrix::operator*=(const Fp& c) {
    for (auto& x : a_) x *= c;
    return *this;
}

GfMatrix operator*(const GfMatrix& a, const GfMatrix& b) {
    if (a.cols_ != b.rows_) throw InvalidInput("matrix shape mismatch in product");
    GfMatrix out(a.p_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t l = 0; l < a.cols_; ++l) {
            const Fp& x = a(i, l);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(l, j);
        }
    }
    return out;
}

FpVec operator*(const GfMatrix& a, const FpVec& v) {
    if (a.cols_ != v.size()) throw InvalidInput("matrix-vector shape mismatch");
    FpVec out(a.rows_, a.p_.zero());
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
    return out;
}

GfMatrix GfMatrix::transpose() const {
    GfMatrix out(p_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
}

GfMatrix GfMatrix::rref(std::vector<std::size_t>* pivots) const {
    GfMatrix m = *this;
    std::vector<std::size_t> piv;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t sel = row;
        while (sel < rows_ && m(sel, col).is_zero()) ++sel;
        if (sel == rows_) continue;
        if (sel != row)
            for (std::size_t c = 0; c < cols_; ++c) std::swap(m(sel, c), m(row, c));
        const Fp scale = m(row, col).inv();
        for (std::size_t c = 0; c < cols_; ++c) m(row, c) *= scale;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            const Fp factor = m(r, col);
            for (std::size_t c = 0; c < cols_; ++c) m(r, c) -= factor * m(row, c);
        }
        piv.push_back(col);
        ++row;
    }
    if (pivots != nullptr) *pivots = std::move(piv);
    return m;
}

std::size_t GfMatrix::rank() const {
    std::vector<std::size_t> piv;
    rref(&piv);
    return piv.size();
}

std::vector<FpVec> GfMatrix::kernel() const {
    std::vector<std::size_t> piv;
    const GfMatrix r = rref(&piv);
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<FpVec> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        FpVec v(cols_, p_.zero());
        v[free] = p_.one();
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<FpVec> GfMatrix::solve(const FpVec& b) const {
    if (b.size() != rows_) throw InvalidInput("right-hand side length mismatch");
    GfMatrix aug(p_, rows_, cols_ + 1);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) aug(r, c) = (*this)(r, c);
        aug(r, cols_) = b[r];
    }
    std::vector<std::size_t> piv;
    const GfMatrix red = aug.rref(&piv);
    if (!piv.empty() && piv.back() == cols_) return std::nullopt;
    FpVec x(cols_, p_.zero());
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = red(i, cols_);
    return x;
}

std::optional<GfMatrix> GfMatrix::inverse() const {
    if (rows_ != cols_) throw InvalidInput("inverse of a non-square matrix");
    GfMatrix aug(p_, rows_, 2 * cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) aug(r, c) = (*this)(r, c);
        aug(r, cols_ + r) = p_.one();
    }
    std::vector<std::size_t> piv;
    const GfMatrix red = aug.rref(&piv);
    if (piv.size() < rows_ || (rows_ > 0 && piv[rows_ - 1] >= cols_)) return std::nullopt;
    GfMatrix out(p_, rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(r, c) = red(r, cols_ + c);
    return out;
}

std::vector<std::vector<std::uint64_t>> GfMatrix::to_integers() const {
    std::vector<std::vector<std::uint64_t>> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = representatives(row(r));
    return out;
}

GfMatrix commutator(const GfMatrix& a, const GfMatrix& b) { return a * b - b * a; }

std::size_t rank_of(Prime p, const std::vector<FpVec>& vectors) {
    if (vectors.empty()) return 0;
    GfMatrix m(p, vectors.size(), vectors.front().size());
    for (std::size_t r = 0; r < vectors.size(); ++r) {
        if (vectors[r].size() != m.cols()) throw InvalidInput("vector length mismatch");
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = vectors[r][c];
    }
    return m.rank();
}

bool is_zero_vector(const FpVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Fp& x) { return x.is_zero(); });
}

} // namespace gaudin
