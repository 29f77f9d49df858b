#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace gaudin {

class Fp;

/// An odd prime p < 2^31, certified by trial division on construction.
class Prime {
public:
    explicit Prime(std::uint64_t p);

    std::uint64_t value() const noexcept { return p_; }

    Fp zero() const;
    Fp one() const;
    /// Canonical residue of a signed integer.
    Fp operator()(std::int64_t n) const;

    friend bool operator==(Prime a, Prime b) noexcept { return a.p_ == b.p_; }

private:
    std::uint64_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Element of F_p. The value is always the canonical representative in [0, p).
class Fp {
public:
    Fp(std::uint64_t canonical, Prime field);

    std::uint64_t value() const noexcept { return v_; }
    Prime prime() const noexcept { return p_; }
    bool is_zero() const noexcept { return v_ == 0; }

    Fp operator-() const;
    Fp& operator+=(const Fp& o);
    Fp& operator-=(const Fp& o);
    Fp& operator*=(const Fp& o);
    Fp& operator/=(const Fp& o);

    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    Fp inv() const;
    Fp pow(std::uint64_t e) const;

    /// True iff the element is a square in F_p (zero counts as a square).
    bool is_square() const;

    friend bool operator==(const Fp& a, const Fp& b) noexcept {
        return a.v_ == b.v_ && a.p_ == b.p_;
    }
    /// Orders by representative; only meaningful within one field.
    friend std::strong_ordering operator<=>(const Fp& a, const Fp& b) noexcept {
        return a.v_ <=> b.v_;
    }

private:
    void require_same_field(const Fp& o) const;

    std::uint64_t v_;
    Prime p_;
};

using FpVec = std::vector<Fp>;

std::ostream& operator<<(std::ostream& os, const Fp& a);

/// n! in F_p; requires n < p.
Fp factorial(unsigned n, Prime p);

/// Residues of a list of signed integers.
FpVec to_field(const std::vector<std::int64_t>& values, Prime p);

/// Canonical integer representatives, the serialized form of field elements.
std::vector<std::uint64_t> representatives(const FpVec& values);

/// "[a, b, c]" with canonical representatives.
std::string to_string(const FpVec& values);

/// True when no two entries coincide.
bool pairwise_distinct(const FpVec& values);

} // namespace gaudin
