#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "gaudin/bethe.hpp"
#include "gaudin/poly.hpp"
#include "gaudin/quotient_algebra.hpp"

namespace gaudin {

/// T(x) = prod_s (x - z_s)^{m_s}
Poly master_polynomial(const FpVec& z, const std::vector<int>& m);

/// Basis (y_tilde, y) of a two-dimensional space of polynomials with
/// Wr(y_tilde, y) = T; y is monic with the Bethe parameters as roots.
struct PolyPair {
    Poly y;
    Poly y_tilde;
};

/// Builds y_tilde from a Bethe solution by integrating the partial-fraction
/// expansion of T / y^2. Requires p > |m| + 1 and p > n + k; throws
/// PreconditionError when t does not solve the Bethe equations and
/// TheoremViolation if the result fails Wr(y_tilde, y) = T or the degree count.
PolyPair construct_tilde_y(const BetheProblem& prob, const FpVec& t);

/// Converse direction: given Wr(y_tilde, y) = T with y split over F_p into
/// distinct linear factors away from z, returns the roots of y (ascending) after
/// checking that they solve the Bethe equations.
FpVec verify_pair_gives_solution(const PolyPair& pair, const FpVec& z, const std::vector<int>& m);

/// A point of the space of pairs <g1, x - t> with g1 monic of degree n and no
/// x^1 term.
struct NormalizedPair {
    Fp t;
    Poly g1;

    Poly g2() const { return Poly::linear_root(t); }
};

/// Wr(g1, g2) / (n - 1), a monic polynomial of degree n.
Poly wronski_map(const NormalizedPair& pair);

/// All normalized pairs with Wr(g1, g2) = (n - 1) T, one per distinct root of
/// dT/dx in F_p. T must be monic of degree n >= 2 with p > n + 1.
std::vector<NormalizedPair> wronski_fiber(const Poly& t_poly);

/// Fiber sizes of the Wronski map over all p^3 monic cubics.
struct CensusRecord {
    std::uint64_t p;
    std::map<unsigned, std::uint64_t> counts;     ///< fiber size -> number of cubics
    std::map<unsigned, std::uint64_t> predicted;  ///< same, from the discriminant
    bool agrees;                                  ///< prediction matched every cubic
};

/// Fiber size predicted from sigma_1^2 - 3 sigma_2: 1 when zero, 2 when a
/// nonzero square, 0 otherwise.
unsigned predicted_fiber_size_n3(const Poly& cubic);

CensusRecord fiber_census_n3(Prime p, unsigned jobs = 1);

/// F_p[t] / (dT/dt), with the derivative made monic.
QuotientAlgebra c_tilde_algebra(const Poly& t_poly);

} // namespace gaudin
