#pragma once

#include <cstddef>
#include <vector>

#include "gaudin/bethe.hpp"
#include "gaudin/matrix.hpp"
#include "gaudin/poly.hpp"
#include "gaudin/quotient_algebra.hpp"
#include "gaudin/report.hpp"
#include "gaudin/sl2.hpp"

namespace gaudin {

// One Bethe parameter (k = 1). Everything here needs n >= 2, p > |m| + 1 and
// pairwise distinct points z; violations raise PreconditionError.

/// The level-1 weight space with the basis f^(s) = f in slot s, and the
/// singular vectors w_s = f^(s) - (m_s / |m|) sum_l f^(l).
struct K1Space {
    TensorConfig config;
    FpVec z;
    std::vector<WeightVector> f;
    std::vector<WeightVector> w;

    std::size_t n() const noexcept { return config.n(); }
    /// Coordinates of a singular level-1 vector in the basis w_1, ..., w_{n-1}.
    FpVec w_coords(const WeightVector& v) const;
    WeightVector from_w_coords(const FpVec& c) const;
};

K1Space build_k1_space(const TensorConfig& config, const FpVec& z);

/// P(t) = sum_s m_s prod_{l != s} (t - z_l)
Poly p_polynomial(const FpVec& z, const std::vector<int>& m);

/// A(z, m) = F_p[t] / (P), with u_s the class of m_s / (t - z_s).
struct AAlgebra {
    TensorConfig config;
    FpVec z;
    Poly p_poly;
    QuotientAlgebra algebra;
    std::vector<Poly> u;

    std::size_t dim() const noexcept { return algebra.dim(); }
    Poly one() const;
    /// Coordinates in the basis u_1, ..., u_{n-1}.
    FpVec u_coords(const Poly& g) const;
};

/// Builds A and asserts sum_s u_s = 0, dim A = n - 1, that u_1..u_{n-1} is a
/// basis, and the multiplication table of the u_s.
AAlgebra a_algebra(const TensorConfig& config, const FpVec& z);

/// u_i u_s as given by the closed multiplication table, expanded over u_1..u_n.
FpVec u_product_table(const AAlgebra& a, std::size_t i, std::size_t s);

/// Checks the expansions of [1], [t] and the recursion for [t^i] (i <= max_power)
/// in terms of the u_s against direct reduction mod P.
Verification verify_power_expansions(const AAlgebra& a, int max_power);

/// The Bethe algebra on the singular level-1 space: H_s restricted and written
/// in the basis w_1, ..., w_{n-1}, plus a basis of the unital algebra they generate.
struct BAlgebra {
    std::vector<GfMatrix> hamiltonians;
    std::vector<GfMatrix> basis;

    std::size_t dim() const noexcept { return basis.size(); }
};

/// Restriction of the full level-1 Gaudin matrix H_s to the w-basis.
GfMatrix restricted_hamiltonian(const K1Space& space, std::size_t s);
/// The same restriction from the closed action formulas on the w_s.
GfMatrix restricted_hamiltonian_closed_form(const K1Space& space, std::size_t s);

/// Builds B from both restriction routes; throws TheoremViolation if they differ.
BAlgebra b_algebra(const K1Space& space);

/// sum_{j != s} (m_s m_j / 2) / (z_s - z_j)
Fp hamiltonian_shift(const TensorConfig& config, const FpVec& z, std::size_t s);

/// The linear map beta: A -> B with [1] -> Id and
/// u_s -> H_s - hamiltonian_shift(s) Id, applied to an element of A.
GfMatrix beta(const AAlgebra& a, const BAlgebra& b, const Poly& g);

/// Checks that beta is an algebra isomorphism and that alpha: u_s -> w_s
/// intertwines the regular representation of A with B.
Verification beta_iso_check(const AAlgebra& a, const BAlgebra& b);

/// Horner evaluation of a polynomial at a square matrix.
GfMatrix evaluate_at(const Poly& f, const GfMatrix& x);
/// Monic minimal polynomial of a square matrix.
Poly minimal_polynomial(const GfMatrix& x);

/// {t} = beta([t]) through the expansion of [t] in the u_s. Throws
/// TheoremViolation unless P({t}) = 0 and Id, {t}, ..., {t}^{n-2} are independent.
GfMatrix t_operator(const AAlgebra& a, const BAlgebra& b);

struct Eigenline {
    Fp root;
    unsigned multiplicity;
    FpVec w_coords;       ///< Q({t}) <1> in the w-basis
    WeightVector vector;  ///< the same vector in the level-1 weight space
    FpVec eigenvalues;    ///< lambda_s(root, z), s = 1..n
};

/// One eigenline per distinct root t0 of P: the vector Q({t}) <1> with
/// P = (t - t0) Q. Asserts it is a common eigenvector of every H_s with
/// eigenvalue lambda_s, and that beta(u_s) acts on it by m_s / (t0 - z_s).
std::vector<Eigenline> eigenlines(const AAlgebra& a, const BAlgebra& b, const K1Space& space);

struct CoincidenceEntry {
    Fp root;
    unsigned multiplicity;
    bool checked;            ///< false for repeated roots, which are only reported
    bool expansions_agree;   ///< sum f^(s)/(t0-z_s) == sum w_s/(t0-z_s)
    bool matches_bethe_vector;
    bool proportional;       ///< Bethe vector and Q({t})<1> span one line
};

struct CoincidenceReport {
    std::vector<CoincidenceEntry> entries;
    Verification verification;

    bool passed() const noexcept { return verification.passed(); }
};

/// Compares the Bethe vector of every simple root of P with the eigenline
/// Q({t}) <1>. `prob` must have k = 1 and the same (m, z) as the algebras.
CoincidenceReport coincidence_check(const BetheProblem& prob, const AAlgebra& a, const BAlgebra& b,
                                    const K1Space& space);

/// True iff P is irreducible; then A is additionally certified to have no zero
/// divisors (every nonzero element is tested when p^{n-1} <= 4096).
bool field_check(const AAlgebra& a);

} // namespace gaudin
