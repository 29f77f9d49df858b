#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gaudin/prime_field.hpp"
#include "gaudin/sl2.hpp"

namespace gaudin {

/// Bethe ansatz data: the tensor product, the number k of Bethe parameters and
/// the pairwise distinct points z.
class BetheProblem {
public:
    BetheProblem(TensorConfig config, int k, FpVec z);

    const TensorConfig& config() const noexcept { return config_; }
    Prime prime() const noexcept { return config_.prime(); }
    int k() const noexcept { return k_; }
    const FpVec& z() const noexcept { return z_; }

private:
    TensorConfig config_;
    int k_;
    FpVec z_;
};

/// An unordered solution t = {t_1, ..., t_k}, stored ascending.
struct BetheSolution {
    FpVec t;

    friend bool operator==(const BetheSolution&, const BetheSolution&) = default;
};

/// Throws InvalidInput unless t has k entries and (t, z) has distinct coordinates.
void require_distinct_coordinates(const BetheProblem& prob, const FpVec& t);

/// sum_{j != i} 2 / (t_i - t_j) - sum_s m_s / (t_i - z_s)
Fp bae_residual(const BetheProblem& prob, const FpVec& t, std::size_t i);

/// Every k-subset of F_p \ {z} on which all residuals vanish, in ascending
/// lexicographic order. The result does not depend on `jobs`.
std::vector<BetheSolution> solve_bae(const BetheProblem& prob, unsigned jobs = 1);

/// W_J(t, z): the symmetrization over all k! orderings of t of
/// prod_s prod_{i <= j_s} 1 / (t_{j_1 + ... + j_{s-1} + i} - z_s), divided by
/// j_1! ... j_n!.
Fp weight_function(const BetheProblem& prob, const MultiIndex& j, const FpVec& t);

/// sum_{J in I_k} W_J(t, z) f_J v_m
WeightVector bethe_vector(const BetheProblem& prob, const FpVec& t);

/// lambda_s = sum_{l != s} (m_s m_l / 2) / (z_s - z_l) - sum_i m_s / (z_s - t_i)
Fp eigenvalue(const BetheProblem& prob, const FpVec& t, std::size_t s);

struct CheckFailure {
    std::string check;  ///< "nonzero", "singular", "relations" or "eigen"
    std::size_t index;  ///< basis position, relation index or Hamiltonian index
    std::string detail;
};

/// Outcome of checking that the Bethe vector of t is a singular common
/// eigenvector of the Gaudin Hamiltonians.
struct BetheVectorReport {
    WeightVector vector;
    FpVec eigenvalues;
    bool nonzero = false;
    bool singular = false;   ///< e kills the vector
    bool relations = false;  ///< coefficient-wise singularity relations
    bool eigen = false;      ///< H_s v = lambda_s v for every s
    std::vector<CheckFailure> failures;

    /// Singularity (both forms) and the eigenvector equations. A zero vector
    /// satisfies these vacuously and is reported through `nonzero`.
    bool holds() const noexcept { return singular && relations && eigen; }
};

/// Runs every check on t; the Gaudin matrices are rebuilt from scratch.
/// t need not be a solution: failures are recorded, not thrown.
BetheVectorReport verify_bethe_vector(const BetheProblem& prob, const FpVec& t);

} // namespace gaudin
