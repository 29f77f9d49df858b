#include "gaudin/poly.hpp"

#include <algorithm>
#include <string>

#include "gaudin/errors.hpp"

namespace gaudin {

Poly::Poly(Prime p, const std::vector<std::int64_t>& coeffs) : p_(p), c_(to_field(coeffs, p)) {
    trim();
}

Poly::Poly(Prime p, FpVec coeffs) : p_(p), c_(std::move(coeffs)) {
    for (const auto& c : c_)
        if (!(c.prime() == p_)) throw ContextError("coefficient from a different field");
    trim();
}

Poly Poly::constant(const Fp& c) { return Poly(c.prime(), FpVec{c}); }

Poly Poly::monomial(const Fp& c, std::size_t degree) {
    FpVec coeffs(degree + 1, c.prime().zero());
    coeffs[degree] = c;
    return Poly(c.prime(), std::move(coeffs));
}

Poly Poly::linear_root(const Fp& a) {
    return Poly(a.prime(), FpVec{-a, a.prime().one()});
}

Poly Poly::from_roots(Prime p, const FpVec& roots) {
    Poly out = constant(p.one());
    for (const auto& r : roots) out *= linear_root(r);
    return out;
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void Poly::require_same_field(const Poly& o) const {
    if (!(p_ == o.p_)) throw ContextError("polynomials over different prime fields");
}

Fp Poly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : p_.zero(); }

Fp Poly::lead() const {
    if (c_.empty()) throw InvalidInput("zero polynomial has no leading coefficient");
    return c_.back();
}

Fp Poly::operator()(const Fp& x) const {
    Fp acc = p_.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly(p_);
    FpVec d;
    d.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(p_(static_cast<std::int64_t>(i)) * c_[i]);
    return Poly(p_, std::move(d));
}

Poly Poly::antiderivative() const {
    if (c_.empty()) return Poly(p_);
    if (c_.size() >= p_.value())
        throw InvalidInput("antiderivative of degree " + std::to_string(degree()) +
                           " needs to divide by a multiple of p");
    FpVec a(c_.size() + 1, p_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i)
        a[i + 1] = c_[i] / p_(static_cast<std::int64_t>(i + 1));
    return Poly(p_, std::move(a));
}

Poly Poly::monic() const { return *this * lead().inv(); }

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    require_same_field(o);
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), p_.zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    require_same_field(o);
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), p_.zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    require_same_field(o);
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    FpVec prod(c_.size() + o.c_.size() - 1, p_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) prod[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(prod);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Fp& c) {
    if (!(c.prime() == p_)) throw ContextError("scalar from a different field");
    for (auto& x : c_) x *= c;
    trim();
    return *this;
}

Poly wronskian(const Poly& g, const Poly& h) { return g.derivative() * h - g * h.derivative(); }

std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g) {
    if (!(f.prime() == g.prime())) throw ContextError("polynomials over different prime fields");
    if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
    const Prime p = f.prime();
    FpVec rem = f.coeffs();
    const auto dg = static_cast<std::size_t>(g.degree());
    if (rem.size() <= dg) return {Poly(p), f};
    FpVec quot(rem.size() - dg, p.zero());
    const Fp lead_inv = g.lead().inv();
    for (std::size_t i = rem.size(); i-- > dg;) {
        const Fp c = rem[i] * lead_inv;
        quot[i - dg] = c;
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j <= dg; ++j) rem[i - dg + j] -= c * g.coeffs()[j];
    }
    rem.resize(dg, p.zero());
    return {Poly(p, std::move(quot)), Poly(p, std::move(rem))};
}

Poly operator%(const Poly& f, const Poly& g) { return divmod(f, g).second; }

Poly exact_quotient(const Poly& f, const Poly& g) {
    auto [q, r] = divmod(f, g);
    if (!r.is_zero()) throw InvalidInput("division is not exact");
    return q;
}

Poly gcd(const Poly& f, const Poly& g) {
    Poly a = f;
    Poly b = g;
    while (!b.is_zero()) a = std::exchange(b, a % b);
    return a.is_zero() ? a : a.monic();
}

std::optional<Poly> inverse_mod(const Poly& a, const Poly& m) {
    const Prime p = m.prime();
    // Invariant: r_i = s_i a (mod m).
    Poly r0 = m;
    Poly r1 = a % m;
    Poly s0(p);
    Poly s1 = Poly::constant(p.one());
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::exchange(r1, r);
        s0 = std::exchange(s1, s0 - q * s1);
    }
    if (r0.degree() != 0) return std::nullopt;
    return (s0 * r0.lead().inv()) % m;
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& m) {
    Poly result = Poly::constant(m.prime().one()) % m;
    Poly b = base % m;
    while (e != 0) {
        if (e & 1U) result = (result * b) % m;
        b = (b * b) % m;
        e >>= 1U;
    }
    return result;
}

std::vector<RootMultiplicity> roots_in_fp(const Poly& f) {
    if (f.is_zero()) throw InvalidInput("roots of the zero polynomial");
    const Prime p = f.prime();
    std::vector<RootMultiplicity> out;
    for (std::uint64_t v = 0; v < p.value(); ++v) {
        const Fp x(v, p);
        if (!f(x).is_zero()) continue;
        const Poly factor = Poly::linear_root(x);
        Poly rest = f;
        unsigned mult = 0;
        for (;;) {
            auto [q, r] = divmod(rest, factor);
            if (!r.is_zero()) break;
            rest = std::move(q);
            ++mult;
        }
        out.push_back({x, mult});
    }
    return out;
}

FpVec distinct_roots(const Poly& f) {
    FpVec out;
    for (const auto& r : roots_in_fp(f)) out.push_back(r.root);
    return out;
}

namespace {

std::vector<unsigned> prime_divisors(unsigned d) {
    std::vector<unsigned> out;
    for (unsigned q = 2; q * q <= d; ++q) {
        if (d % q != 0) continue;
        out.push_back(q);
        while (d % q == 0) d /= q;
    }
    if (d > 1) out.push_back(d);
    return out;
}

} // namespace

bool is_irreducible(const Poly& f) {
    if (f.degree() < 1) throw InvalidInput("irreducibility needs degree >= 1");
    const Prime p = f.prime();
    const auto d = static_cast<unsigned>(f.degree());
    if (d == 1) return true;
    const Poly x = Poly::monomial(p.one(), 1);
    // frob[i] = x^{p^i} mod f
    std::vector<Poly> frob{x % f};
    for (unsigned i = 1; i <= d; ++i) frob.push_back(powmod(frob.back(), p.value(), f));
    if (!(frob[d] == x % f)) return false;
    for (unsigned q : prime_divisors(d)) {
        if (gcd(frob[d / q] - x, f).degree() != 0) return false;
    }
    return true;
}

Poly PartialFractions::reassemble() const {
    const Prime p = quotient.prime();
    Poly denom = Poly::constant(p.one());
    for (const auto& pole : poles) {
        for (unsigned j = 0; j < pole.order; ++j) denom *= Poly::linear_root(pole.location);
    }
    Poly total = quotient * denom;
    for (const auto& pole : poles) {
        const Poly lin = Poly::linear_root(pole.location);
        const Poly cofactor = exact_quotient(denom, pole.order == 2 ? lin * lin : lin);
        // a_{i,j} / (x - t)^j over D is a_{i,j} * cofactor * (x - t)^{d - j}.
        if (pole.order == 2) {
            total += cofactor * *pole.double_pole;
            total += cofactor * lin * pole.simple;
        } else {
            total += cofactor * pole.simple;
        }
    }
    return total;
}

PartialFractions partial_fractions(const Poly& numerator, const std::vector<Pole>& poles) {
    const Prime p = numerator.prime();
    FpVec locations;
    for (const auto& pole : poles) {
        if (pole.order != 1 && pole.order != 2)
            throw InvalidInput("pole orders must be 1 or 2");
        locations.push_back(pole.location);
    }
    if (!pairwise_distinct(locations)) throw InvalidInput("repeated pole location");

    Poly denom = Poly::constant(p.one());
    for (const auto& pole : poles)
        for (unsigned j = 0; j < pole.order; ++j) denom *= Poly::linear_root(pole.location);

    PartialFractions out{divmod(numerator, denom).first, {}};
    const Poly dnum = numerator.derivative();
    for (std::size_t i = 0; i < poles.size(); ++i) {
        Poly others = Poly::constant(p.one());
        for (std::size_t l = 0; l < poles.size(); ++l) {
            if (l == i) continue;
            for (unsigned j = 0; j < poles[l].order; ++j) others *= Poly::linear_root(poles[l].location);
        }
        const Fp t = poles[i].location;
        // G = T / others; G(t) and G'(t) by the quotient rule.
        const Fp o = others(t);
        const Fp value = numerator(t) / o;
        PoleTerm term{t, poles[i].order, value, std::nullopt};
        if (poles[i].order == 2) {
            const Fp slope = (dnum(t) * o - numerator(t) * others.derivative()(t)) / (o * o);
            term.double_pole = value;
            term.simple = slope;
        }
        out.poles.push_back(term);
    }
    return out;
}

} // namespace gaudin
