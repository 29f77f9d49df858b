#include "gaudin/quotient_algebra.hpp"

#include "gaudin/errors.hpp"

namespace gaudin {

QuotientAlgebra::QuotientAlgebra(Poly modulus) : modulus_(std::move(modulus)) {
    if (!modulus_.is_monic()) throw InvalidInput("quotient algebra modulus must be monic");
}

FpVec QuotientAlgebra::coords(const Poly& a) const {
    const Poly r = reduce(a);
    FpVec out;
    out.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(r.coeff(i));
    return out;
}

Poly QuotientAlgebra::from_coords(const FpVec& c) const {
    if (c.size() != dim()) throw InvalidInput("coordinate count does not match algebra dimension");
    return Poly(prime(), c);
}

GfMatrix QuotientAlgebra::regular_matrix(const Poly& a) const {
    std::vector<FpVec> cols;
    for (std::size_t i = 0; i < dim(); ++i) cols.push_back(coords(mul(a, Poly::monomial(prime().one(), i))));
    return GfMatrix::from_columns(prime(), dim(), cols);
}

GfMatrix QuotientAlgebra::companion() const {
    return regular_matrix(Poly::monomial(prime().one(), 1));
}

} // namespace gaudin
