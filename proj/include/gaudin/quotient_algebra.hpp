#pragma once

#include <cstddef>
#include <optional>

#include "gaudin/matrix.hpp"
#include "gaudin/poly.hpp"

namespace gaudin {

/// F_p[t] / (modulus) for a monic modulus of degree d. Elements are reduced
/// polynomials of degree < d; coordinates are taken in the basis 1, t, ..., t^{d-1}.
class QuotientAlgebra {
public:
    explicit QuotientAlgebra(Poly modulus);

    const Poly& modulus() const noexcept { return modulus_; }
    Prime prime() const noexcept { return modulus_.prime(); }
    std::size_t dim() const noexcept { return static_cast<std::size_t>(modulus_.degree()); }

    Poly reduce(const Poly& a) const { return a % modulus_; }
    Poly mul(const Poly& a, const Poly& b) const { return (a * b) % modulus_; }
    std::optional<Poly> inverse(const Poly& a) const { return inverse_mod(a, modulus_); }

    FpVec coords(const Poly& a) const;
    Poly from_coords(const FpVec& c) const;

    /// Matrix of multiplication by a in the power basis.
    GfMatrix regular_matrix(const Poly& a) const;
    /// Matrix of multiplication by t.
    GfMatrix companion() const;

private:
    Poly modulus_;
};

} // namespace gaudin
