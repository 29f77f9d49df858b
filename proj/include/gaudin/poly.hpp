#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gaudin/prime_field.hpp"

namespace gaudin {

/// Dense univariate polynomial over F_p. Coefficient i multiplies x^i; there
/// are never trailing zeros, so the zero polynomial has no coefficients.
class Poly {
public:
    /// Degree reported for the zero polynomial.
    static constexpr int kZeroDegree = -1;

    explicit Poly(Prime p) : p_(p) {}
    Poly(Prime p, const std::vector<std::int64_t>& coeffs);
    Poly(Prime p, FpVec coeffs);

    static Poly constant(const Fp& c);
    static Poly monomial(const Fp& c, std::size_t degree);
    /// x - a
    static Poly linear_root(const Fp& a);
    /// prod (x - r_i)
    static Poly from_roots(Prime p, const FpVec& roots);

    Prime prime() const noexcept { return p_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_monic() const noexcept { return !c_.empty() && c_.back().value() == 1; }
    const FpVec& coeffs() const noexcept { return c_; }
    /// Coefficient of x^i, zero past the degree.
    Fp coeff(std::size_t i) const;
    Fp lead() const;

    Fp operator()(const Fp& x) const;

    Poly derivative() const;
    /// Term-wise antiderivative with zero constant; needs degree + 1 < p.
    Poly antiderivative() const;
    Poly monic() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Fp& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const Fp& c) { return a *= c; }
    friend Poly operator*(const Fp& c, Poly a) { return a *= c; }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.p_ == b.p_ && a.c_ == b.c_;
    }

    std::vector<std::uint64_t> to_integers() const { return representatives(c_); }

private:
    void trim();
    void require_same_field(const Poly& o) const;

    Prime p_;
    FpVec c_;
};

/// g' h - g h'
Poly wronskian(const Poly& g, const Poly& h);

/// Euclidean division: f = q g + r with deg r < deg g.
std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g);
Poly operator%(const Poly& f, const Poly& g);
/// Quotient of a division that must be exact; throws InvalidInput otherwise.
Poly exact_quotient(const Poly& f, const Poly& g);

/// Monic gcd (zero when both inputs are zero).
Poly gcd(const Poly& f, const Poly& g);

/// Inverse of a modulo m when gcd(a, m) = 1.
std::optional<Poly> inverse_mod(const Poly& a, const Poly& m);

/// base^e mod m by square-and-multiply.
Poly powmod(const Poly& base, std::uint64_t e, const Poly& m);

struct RootMultiplicity {
    Fp root;
    unsigned multiplicity;
};

/// All roots in F_p, ascending, found by evaluating at every field element.
std::vector<RootMultiplicity> roots_in_fp(const Poly& f);

/// Distinct roots in F_p, ascending.
FpVec distinct_roots(const Poly& f);

/// Rabin's test: x^{p^d} = x mod f and gcd(x^{p^{d/q}} - x, f) = 1 for every
/// prime q | d.
bool is_irreducible(const Poly& f);

struct PoleTerm {
    Fp location;
    unsigned order;                 ///< 1 or 2
    Fp simple;                      ///< coefficient of 1/(x - t)
    std::optional<Fp> double_pole;  ///< coefficient of 1/(x - t)^2 when order == 2
};

/// T / prod (x - t_i)^{d_i} = quotient + sum_i sum_j a_{i,j} / (x - t_i)^j.
struct PartialFractions {
    Poly quotient;
    std::vector<PoleTerm> poles;

    /// quotient * D + sum of numerators over the common denominator D.
    Poly reassemble() const;
};

struct Pole {
    Fp location;
    unsigned order;
};

/// Decomposition of T over poles of order at most 2. The coefficient of
/// (x - t_i)^{-j} is the (d_i - j)-th Taylor coefficient at t_i of
/// T / prod_{l != i} (x - t_l)^{d_l}.
PartialFractions partial_fractions(const Poly& numerator, const std::vector<Pole>& poles);

} // namespace gaudin
