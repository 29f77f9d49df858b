#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "gaudin/matrix.hpp"
#include "gaudin/prime_field.hpp"

namespace gaudin {

/// Highest weights m = (m_1, ..., m_n) of the factors of L_{m_1} x ... x L_{m_n}
/// together with the field. Requires every m_s >= 1 and p > |m|.
class TensorConfig {
public:
    TensorConfig(Prime p, std::vector<int> m);

    Prime prime() const noexcept { return p_; }
    const std::vector<int>& weights() const noexcept { return m_; }
    std::size_t n() const noexcept { return m_.size(); }
    /// |m|
    int total() const noexcept { return total_; }

    friend bool operator==(const TensorConfig& a, const TensorConfig& b) {
        return a.p_ == b.p_ && a.m_ == b.m_;
    }

private:
    Prime p_;
    std::vector<int> m_;
    int total_;
};

/// Exponents J = (j_1, ..., j_n) of the basis vector f^{j_1} v x ... x f^{j_n} v.
using MultiIndex = std::vector<int>;

/// The weight subspace L[|m| - 2k] with its canonical basis: all J with |J| = k
/// and j_s <= m_s, in descending lexicographic order. Levels outside [0, |m|]
/// give the zero space.
class WeightSpace {
public:
    WeightSpace(const TensorConfig& config, int k);

    int level() const noexcept { return k_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    const std::vector<MultiIndex>& basis() const noexcept { return basis_; }
    std::optional<std::size_t> position(const MultiIndex& j) const;

private:
    int k_;
    std::vector<MultiIndex> basis_;
    std::map<MultiIndex, std::size_t> index_;
};

/// Canonical basis of level k; throws InvalidInput unless 0 <= k <= |m|.
std::vector<MultiIndex> basis_of_weight_space(const TensorConfig& config, int k);

/// Vector of the level-k weight space, coordinates in the canonical basis.
class WeightVector {
public:
    WeightVector(TensorConfig config, int k, FpVec coords);

    static WeightVector zero(const TensorConfig& config, int k);
    /// The basis vector f_J v_m.
    static WeightVector basis_vector(const TensorConfig& config, const MultiIndex& j);

    const TensorConfig& config() const noexcept { return config_; }
    int level() const noexcept { return k_; }
    const FpVec& coords() const noexcept { return coords_; }
    Fp coeff(const MultiIndex& j) const;
    bool is_zero() const { return is_zero_vector(coords_); }

    WeightVector& operator+=(const WeightVector& o);
    WeightVector& operator-=(const WeightVector& o);
    WeightVector& operator*=(const Fp& c);
    friend WeightVector operator+(WeightVector a, const WeightVector& b) { return a += b; }
    friend WeightVector operator-(WeightVector a, const WeightVector& b) { return a -= b; }
    friend WeightVector operator*(const Fp& c, WeightVector a) { return a *= c; }

    friend bool operator==(const WeightVector& a, const WeightVector& b) {
        return a.config_ == b.config_ && a.k_ == b.k_ && a.coords_ == b.coords_;
    }

private:
    void require_compatible(const WeightVector& o) const;

    TensorConfig config_;
    int k_;
    FpVec coords_;
};

/// Diagonal action of e (level k -> k-1), f (k -> k+1) and h (k -> k).
WeightVector act_e(const WeightVector& v);
WeightVector act_f(const WeightVector& v);
WeightVector act_h(const WeightVector& v);

/// Matrices of the diagonal actions with source level k; columns are images of
/// basis vectors.
GfMatrix e_matrix(const TensorConfig& config, int k);
GfMatrix f_matrix(const TensorConfig& config, int k);
GfMatrix h_matrix(const TensorConfig& config, int k);

/// Basis of the kernel of e on level k.
std::vector<WeightVector> singular_subspace(const TensorConfig& config, int k);

/// Omega = e x f + f x e + h x h / 2 placed in factors i and j (0-based, i != j).
WeightVector casimir_on_pair(const WeightVector& v, std::size_t i, std::size_t j);
GfMatrix casimir_matrix(const TensorConfig& config, int k, std::size_t i, std::size_t j);

/// H_s(z) = sum_{l != s} Omega^{(s,l)} / (z_s - z_l) on level k (s is 0-based).
GfMatrix gaudin_hamiltonian(const TensorConfig& config, const FpVec& z, std::size_t s, int k);

/// Image of v under a level-preserving or level-shifting matrix.
WeightVector apply(const GfMatrix& op, const WeightVector& v, int target_level);

/// Checks that z has one distinct point per factor, all in the config's field.
void require_valid_points(const TensorConfig& config, const FpVec& z);

} // namespace gaudin
