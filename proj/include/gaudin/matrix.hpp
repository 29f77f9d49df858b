#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "gaudin/prime_field.hpp"

namespace gaudin {

/// Dense row-major matrix over F_p.
class GfMatrix {
public:
    GfMatrix(Prime p, std::size_t rows, std::size_t cols);
    GfMatrix(Prime p, const std::vector<std::vector<std::int64_t>>& rows);

    static GfMatrix identity(Prime p, std::size_t n);
    /// Matrix whose columns are the given vectors (all of length rows).
    static GfMatrix from_columns(Prime p, std::size_t rows, const std::vector<FpVec>& columns);

    Prime prime() const noexcept { return p_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Fp& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Fp& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    FpVec column(std::size_t c) const;
    FpVec row(std::size_t r) const;
    /// Entries in row-major order.
    const FpVec& entries() const noexcept { return a_; }

    bool is_zero() const;

    GfMatrix& operator+=(const GfMatrix& o);
    GfMatrix& operator-=(const GfMatrix& o);
    GfMatrix& operator*=(const Fp& c);
    friend GfMatrix operator+(GfMatrix a, const GfMatrix& b) { return a += b; }
    friend GfMatrix operator-(GfMatrix a, const GfMatrix& b) { return a -= b; }
    friend GfMatrix operator*(GfMatrix a, const Fp& c) { return a *= c; }
    friend GfMatrix operator*(const Fp& c, GfMatrix a) { return a *= c; }
    friend GfMatrix operator*(const GfMatrix& a, const GfMatrix& b);
    friend FpVec operator*(const GfMatrix& a, const FpVec& v);

    friend bool operator==(const GfMatrix& a, const GfMatrix& b) {
        return a.p_ == b.p_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    GfMatrix transpose() const;

    /// Reduced row echelon form; pivot columns are reported through `pivots`.
    GfMatrix rref(std::vector<std::size_t>* pivots = nullptr) const;
    std::size_t rank() const;
    /// Basis of the right null space {v : A v = 0}, one vector per free column.
    std::vector<FpVec> kernel() const;
    /// Some solution of A x = b, if one exists.
    std::optional<FpVec> solve(const FpVec& b) const;
    /// Inverse of a square matrix, if it is nonsingular.
    std::optional<GfMatrix> inverse() const;

    std::vector<std::vector<std::uint64_t>> to_integers() const;

private:
    Prime p_;
    std::size_t rows_;
    std::size_t cols_;
    FpVec a_;
};

GfMatrix commutator(const GfMatrix& a, const GfMatrix& b);

/// Rank of a list of vectors of equal length.
std::size_t rank_of(Prime p, const std::vector<FpVec>& vectors);

bool is_zero_vector(const FpVec& v);

} // namespace gaudin
