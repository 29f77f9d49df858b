#include "gaudin/prime_field.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "gaudin/errors.hpp"

namespace gaudin {

namespace {

constexpr std::uint64_t kMaxPrime = std::uint64_t{1} << 31;

__extension__ using Wide = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<Wide>(a) * b % p);
}

} // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Prime::Prime(std::uint64_t p) : p_(p) {
    if (p >= kMaxPrime)
        throw InvalidInput("prime must be below 2^31, got " + std::to_string(p));
    if (!is_prime(p))
        throw InvalidInput(std::to_string(p) + " is not prime");
    if (p == 2)
        throw InvalidInput("p = 2 is not supported: every formula divides by 2");
}

Fp Prime::zero() const { return Fp(0, *this); }
Fp Prime::one() const { return Fp(1, *this); }

Fp Prime::operator()(std::int64_t n) const {
    const auto p = static_cast<std::int64_t>(p_);
    std::int64_t r = n % p;
    if (r < 0) r += p;
    return Fp(static_cast<std::uint64_t>(r), *this);
}

Fp::Fp(std::uint64_t canonical, Prime field) : v_(canonical), p_(field) {
    if (canonical >= field.value())
        throw InvalidInput("non-canonical residue " + std::to_string(canonical) + " mod " +
                           std::to_string(field.value()));
}

void Fp::require_same_field(const Fp& o) const {
    if (!(p_ == o.p_))
        throw ContextError("mixing F_" + std::to_string(p_.value()) + " and F_" +
                           std::to_string(o.p_.value()));
}

Fp Fp::operator-() const { return Fp(v_ == 0 ? 0 : p_.value() - v_, p_); }

Fp& Fp::operator+=(const Fp& o) {
    require_same_field(o);
    v_ += o.v_;
    if (v_ >= p_.value()) v_ -= p_.value();
    return *this;
}

Fp& Fp::operator-=(const Fp& o) {
    require_same_field(o);
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_.value() - o.v_;
    return *this;
}

Fp& Fp::operator*=(const Fp& o) {
    require_same_field(o);
    v_ = mulmod(v_, o.v_, p_.value());
    return *this;
}

Fp& Fp::operator/=(const Fp& o) {
    require_same_field(o);
    return *this *= o.inv();
}

Fp Fp::inv() const {
    if (v_ == 0) throw DivisionByZero("inverse of zero in F_" + std::to_string(p_.value()));
    // Extended Euclid on (v, p); track only the coefficient of v.
    std::int64_t r0 = static_cast<std::int64_t>(p_.value());
    std::int64_t r1 = static_cast<std::int64_t>(v_);
    std::int64_t s0 = 0;
    std::int64_t s1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        r0 = std::exchange(r1, r0 - q * r1);
        s0 = std::exchange(s1, s0 - q * s1);
    }
    return p_(s0);
}

Fp Fp::pow(std::uint64_t e) const {
    std::uint64_t result = 1 % p_.value();
    std::uint64_t base = v_;
    while (e != 0) {
        if (e & 1U) result = mulmod(result, base, p_.value());
        base = mulmod(base, base, p_.value());
        e >>= 1U;
    }
    return Fp(result, p_);
}

bool Fp::is_square() const {
    if (v_ == 0) return true;
    return pow((p_.value() - 1) / 2).v_ == 1;
}

std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.value(); }

Fp factorial(unsigned n, Prime p) {
    if (n >= p.value())
        throw InvalidInput("factorial " + std::to_string(n) + "! vanishes mod " +
                           std::to_string(p.value()));
    Fp out = p.one();
    for (unsigned i = 2; i <= n; ++i) out *= p(i);
    return out;
}

FpVec to_field(const std::vector<std::int64_t>& values, Prime p) {
    FpVec out;
    out.reserve(values.size());
    for (auto v : values) out.push_back(p(v));
    return out;
}

std::vector<std::uint64_t> representatives(const FpVec& values) {
    std::vector<std::uint64_t> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(v.value());
    return out;
}

std::string to_string(const FpVec& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ", " : "") + std::to_string(values[i].value());
    return out + "]";
}

bool pairwise_distinct(const FpVec& values) {
    auto sorted = representatives(values);
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

} // namespace gaudin
