#include "gaudin/k1.hpp"

#include <string>

#include "gaudin/errors.hpp"

namespace gaudin {

namespace {

void require_k1_hypotheses(const TensorConfig& config, const FpVec& z) {
    if (config.n() < 2) throw PreconditionError("the k = 1 theory needs n >= 2 factors");
    if (config.prime().value() <= static_cast<std::uint64_t>(config.total()) + 1)
        throw PreconditionError("hypothesis p > |m| + 1 fails: p = " +
                                std::to_string(config.prime().value()) +
                                ", |m| = " + std::to_string(config.total()));
    require_valid_points(config, z);
}

std::string idx(std::size_t i) { return std::to_string(i + 1); }

// Flattened entries, for rank tests on sets of matrices.
FpVec flatten(const GfMatrix& m) { return m.entries(); }

bool independent_of(const std::vector<GfMatrix>& basis, const GfMatrix& candidate) {
    std::vector<FpVec> rows;
    for (const auto& b : basis) rows.push_back(flatten(b));
    const std::size_t before = rank_of(candidate.prime(), rows);
    rows.push_back(flatten(candidate));
    return rank_of(candidate.prime(), rows) > before;
}

// sum_j c_j u_j for a coefficient vector over all n generators.
Poly combine_u(const AAlgebra& a, const FpVec& c) {
    Poly out(a.config.prime());
    for (std::size_t j = 0; j < c.size(); ++j) out += a.u[j] * c[j];
    return out;
}

// Coefficients over w_1..w_n folded onto w_1..w_{n-1} using w_n = -sum.
FpVec fold_last(const FpVec& c) {
    FpVec out(c.begin(), c.end() - 1);
    for (auto& x : out) x -= c.back();
    return out;
}

} // namespace

FpVec K1Space::w_coords(const WeightVector& v) const {
    std::vector<FpVec> cols;
    for (std::size_t s = 0; s + 1 < n(); ++s) cols.push_back(w[s].coords());
    const GfMatrix basis = GfMatrix::from_columns(config.prime(), n(), cols);
    auto c = basis.solve(v.coords());
    if (!c) throw InvalidInput("vector is not in the singular level-1 subspace");
    return *c;
}

WeightVector K1Space::from_w_coords(const FpVec& c) const {
    if (c.size() + 1 != n()) throw InvalidInput("expected n - 1 coordinates");
    WeightVector out = WeightVector::zero(config, 1);
    for (std::size_t s = 0; s < c.size(); ++s) out += c[s] * w[s];
    return out;
}

K1Space build_k1_space(const TensorConfig& config, const FpVec& z) {
    require_k1_hypotheses(config, z);
    const Prime p = config.prime();
    const auto& m = config.weights();
    const std::size_t n = config.n();
    K1Space space{config, z, {}, {}};
    WeightVector sum_f = WeightVector::zero(config, 1);
    for (std::size_t s = 0; s < n; ++s) {
        MultiIndex j(n, 0);
        j[s] = 1;
        space.f.push_back(WeightVector::basis_vector(config, j));
        sum_f += space.f.back();
    }
    const Fp inv_total = p(config.total()).inv();
    for (std::size_t s = 0; s < n; ++s) space.w.push_back(space.f[s] - (p(m[s]) * inv_total) * sum_f);

    WeightVector sum_w = WeightVector::zero(config, 1);
    for (const auto& w : space.w) {
        sum_w += w;
        if (!act_e(w).is_zero()) throw TheoremViolation("some w_s is not singular");
    }
    if (!sum_w.is_zero()) throw TheoremViolation("w_1 + ... + w_n != 0");
    for (std::size_t drop = 0; drop < n; ++drop) {
        std::vector<FpVec> rows;
        for (std::size_t s = 0; s < n; ++s)
            if (s != drop) rows.push_back(space.w[s].coords());
        if (rank_of(p, rows) != n - 1)
            throw TheoremViolation("the w_s without w_" + idx(drop) + " are dependent");
    }
    return space;
}

Poly p_polynomial(const FpVec& z, const std::vector<int>& m) {
    if (z.empty() || z.size() != m.size()) throw InvalidInput("need one multiplicity per point");
    if (!pairwise_distinct(z)) throw InvalidInput("points z must be pairwise distinct");
    const Prime p = z.front().prime();
    Poly out(p);
    for (std::size_t s = 0; s < z.size(); ++s) {
        Poly term = Poly::constant(p(m[s]));
        for (std::size_t l = 0; l < z.size(); ++l)
            if (l != s) term *= Poly::linear_root(z[l]);
        out += term;
    }
    return out;
}

Poly AAlgebra::one() const { return algebra.reduce(Poly::constant(config.prime().one())); }

FpVec AAlgebra::u_coords(const Poly& g) const {
    std::vector<FpVec> cols;
    for (std::size_t s = 0; s + 1 < u.size(); ++s) cols.push_back(algebra.coords(u[s]));
    const GfMatrix basis = GfMatrix::from_columns(config.prime(), dim(), cols);
    auto c = basis.solve(algebra.coords(g));
    if (!c) throw TheoremViolation("u_1, ..., u_{n-1} do not span A");
    return *c;
}

FpVec u_product_table(const AAlgebra& a, std::size_t i, std::size_t s) {
    const Prime p = a.config.prime();
    const auto& m = a.config.weights();
    const auto& z = a.z;
    FpVec c(m.size(), p.zero());
    if (i != s) {
        const Fp d = (z[i] - z[s]).inv();
        c[i] += p(m[s]) * d;
        c[s] -= p(m[i]) * d;
    } else {
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (j == i) continue;
            const Fp d = (z[i] - z[j]).inv();
            c[j] += p(m[i]) * d;
            c[i] -= p(m[j]) * d;
        }
    }
    return c;
}

AAlgebra a_algebra(const TensorConfig& config, const FpVec& z) {
    require_k1_hypotheses(config, z);
    const Prime p = config.prime();
    const auto& m = config.weights();
    const std::size_t n = config.n();
    Poly P = p_polynomial(z, m);
    AAlgebra a{config, z, P, QuotientAlgebra(P.monic()), {}};

    if (a.dim() != n - 1) throw TheoremViolation("dim A != n - 1");
    for (std::size_t s = 0; s < n; ++s) {
        auto inv = a.algebra.inverse(Poly::linear_root(z[s]));
        if (!inv) throw TheoremViolation("t - z_" + idx(s) + " is not a unit in A");
        a.u.push_back(*inv * p(m[s]));
    }
    Poly sum(p);
    for (const auto& us : a.u) sum += us;
    if (!a.algebra.reduce(sum).is_zero()) throw TheoremViolation("u_1 + ... + u_n != 0 in A");
    std::vector<FpVec> rows;
    for (std::size_t s = 0; s + 1 < n; ++s) rows.push_back(a.algebra.coords(a.u[s]));
    if (rank_of(p, rows) != n - 1) throw TheoremViolation("u_1, ..., u_{n-1} are dependent");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t s = 0; s < n; ++s)
            if (!(a.algebra.mul(a.u[i], a.u[s]) == a.algebra.reduce(combine_u(a, u_product_table(a, i, s)))))
                throw TheoremViolation("multiplication table fails for u_" + idx(i) + " u_" + idx(s));
    return a;
}

Verification verify_power_expansions(const AAlgebra& a, int max_power) {
    const Prime p = a.config.prime();
    const auto& m = a.config.weights();
    const auto& z = a.z;
    const std::size_t n = m.size();
    const Fp neg_inv_total = -p(a.config.total()).inv();
    Verification v;

    // weighted_power_sum[j] = sum_s z_s^j m_s
    auto weighted_power_sum = [&](int j) {
        Fp acc = p.zero();
        for (std::size_t s = 0; s < n; ++s) acc += z[s].pow(static_cast<std::uint64_t>(j)) * p(m[s]);
        return acc;
    };
    auto moment = [&](int j) {  // sum_s z_s^j u_s
        Poly acc(p);
        for (std::size_t s = 0; s < n; ++s) acc += a.u[s] * z[s].pow(static_cast<std::uint64_t>(j));
        return a.algebra.reduce(acc);
    };

    const Poly one = a.one();
    const Poly t = a.algebra.reduce(Poly::monomial(p.one(), 1));
    v.require(one == a.algebra.reduce(moment(1) * neg_inv_total), "[1] expansion");
    const Poly t_closed = moment(1) * (weighted_power_sum(1) * neg_inv_total * neg_inv_total) +
                          moment(2) * neg_inv_total;
    v.require(t == a.algebra.reduce(t_closed), "[t] expansion");

    std::vector<Poly> powers;  // [t^i] from the recursion alone
    for (int i = 0; i <= max_power; ++i) {
        Poly acc = moment(i + 1);
        for (int j = 1; j <= i; ++j) acc += powers[static_cast<std::size_t>(i - j)] * weighted_power_sum(j);
        powers.push_back(a.algebra.reduce(acc * neg_inv_total));
        const Poly direct = a.algebra.reduce(Poly::monomial(p.one(), static_cast<std::size_t>(i)));
        v.require(powers.back() == direct, "[t^" + std::to_string(i) + "] recursion");
    }
    return v;
}

Fp hamiltonian_shift(const TensorConfig& config, const FpVec& z, std::size_t s) {
    const Prime p = config.prime();
    const auto& m = config.weights();
    const Fp half = p(2).inv();
    Fp c = p.zero();
    for (std::size_t j = 0; j < m.size(); ++j)
        if (j != s) c += p(m[s] * m[j]) * half * (z[s] - z[j]).inv();
    return c;
}

GfMatrix restricted_hamiltonian(const K1Space& space, std::size_t s) {
    const GfMatrix full = gaudin_hamiltonian(space.config, space.z, s, 1);
    std::vector<FpVec> cols;
    for (std::size_t j = 0; j + 1 < space.n(); ++j) cols.push_back(space.w_coords(apply(full, space.w[j], 1)));
    return GfMatrix::from_columns(space.config.prime(), space.n() - 1, cols);
}

GfMatrix restricted_hamiltonian_closed_form(const K1Space& space, std::size_t i) {
    const Prime p = space.config.prime();
    const auto& m = space.config.weights();
    const auto& z = space.z;
    const std::size_t n = space.n();
    const Fp shift = hamiltonian_shift(space.config, z, i);
    std::vector<FpVec> cols;
    for (std::size_t s = 0; s + 1 < n; ++s) {
        FpVec c(n, p.zero());  // image of w_s over w_1..w_n
        c[s] += shift;
        if (s != i) {
            const Fp d = (z[i] - z[s]).inv();
            c[i] += p(m[s]) * d;
            c[s] -= p(m[i]) * d;
        } else {
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                const Fp d = (z[i] - z[j]).inv();
                c[j] += p(m[i]) * d;
                c[i] -= p(m[j]) * d;
            }
        }
        cols.push_back(fold_last(c));
    }
    return GfMatrix::from_columns(p, n - 1, cols);
}

BAlgebra b_algebra(const K1Space& space) {
    const Prime p = space.config.prime();
    BAlgebra b;
    for (std::size_t s = 0; s < space.n(); ++s) {
        GfMatrix from_tensor = restricted_hamiltonian(space, s);
        if (!(from_tensor == restricted_hamiltonian_closed_form(space, s)))
            throw TheoremViolation("restricted H_" + idx(s) + " disagrees with the closed formulas");
        b.hamiltonians.push_back(std::move(from_tensor));
    }
    // Close {Id} under multiplication by the generators.
    b.basis.push_back(GfMatrix::identity(p, space.n() - 1));
    for (std::size_t next = 0; next < b.basis.size(); ++next) {
        for (const auto& h : b.hamiltonians) {
            GfMatrix prod = h * b.basis[next];
            if (independent_of(b.basis, prod)) b.basis.push_back(std::move(prod));
        }
    }
    return b;
}

GfMatrix beta(const AAlgebra& a, const BAlgebra& b, const Poly& g) {
    const Prime p = a.config.prime();
    const FpVec c = a.u_coords(g);
    const std::size_t d = a.dim();
    GfMatrix out(p, d, d);
    const GfMatrix id = GfMatrix::identity(p, d);
    for (std::size_t s = 0; s < c.size(); ++s)
        out += (b.hamiltonians[s] - id * hamiltonian_shift(a.config, a.z, s)) * c[s];
    return out;
}

Verification beta_iso_check(const AAlgebra& a, const BAlgebra& b) {
    const Prime p = a.config.prime();
    const std::size_t n = a.config.n();
    const std::size_t d = a.dim();
    const GfMatrix id = GfMatrix::identity(p, d);
    Verification v;
    if (b.hamiltonians.size() != n || (n > 0 && b.hamiltonians.front().rows() != d)) {
        v.require(false, "A and B come from different instances");
        return v;
    }

    // Spanning set {[1], u_1, ..., u_n} with their prescribed images.
    std::vector<Poly> span{a.one()};
    std::vector<GfMatrix> image{id};
    std::vector<std::string> name{"[1]"};
    for (std::size_t s = 0; s < n; ++s) {
        span.push_back(a.u[s]);
        image.push_back(b.hamiltonians[s] - id * hamiltonian_shift(a.config, a.z, s));
        name.push_back("u_" + idx(s));
    }
    for (std::size_t g = 0; g < span.size(); ++g)
        v.require(beta(a, b, span[g]) == image[g], "beta(" + name[g] + ") is not the prescribed operator");

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t s = 0; s < n; ++s) {
            const GfMatrix lhs = image[i + 1] * image[s + 1];
            const Poly by_table = a.algebra.reduce(combine_u(a, u_product_table(a, i, s)));
            v.require(beta(a, b, by_table) == lhs,
                      "beta(u_" + idx(i) + " u_" + idx(s) + ") via the product table");
        }
    }
    for (std::size_t g = 0; g < span.size(); ++g)
        for (std::size_t h = 0; h < span.size(); ++h)
            v.require(beta(a, b, a.algebra.mul(span[g], span[h])) == image[g] * image[h],
                      "beta(" + name[g] + " " + name[h] + ") != beta(" + name[g] + ") beta(" + name[h] + ")");

    std::vector<FpVec> rows;
    for (std::size_t s = 0; s + 1 < n; ++s) rows.push_back(flatten(image[s + 1]));
    v.require(rank_of(p, rows) == n - 1, "beta(u_1), ..., beta(u_{n-1}) are dependent");
    v.require(b.dim() == n - 1, "dim B = " + std::to_string(b.dim()) + ", expected n - 1");

    // alpha is the identity on coordinates: u-basis of A -> w-basis of Sing.
    auto alpha = [&](const Poly& g) { return a.u_coords(g); };
    FpVec one_expected(d, p.zero());
    const Fp neg_inv_total = -p(a.config.total()).inv();
    for (std::size_t s = 0; s < n; ++s) {
        FpVec ws(d, p.zero());  // w-coordinates of w_s
        if (s + 1 < n) {
            ws[s] = p.one();
        } else {
            for (auto& x : ws) x = -p.one();
        }
        for (std::size_t j = 0; j < d; ++j) one_expected[j] += neg_inv_total * a.z[s] * ws[j];
        v.require(image[s + 1] * alpha(a.one()) == ws, "(H_s - shift) <1> != w_s for s = " + idx(s));
    }
    v.require(alpha(a.one()) == one_expected, "<1> != -(1/|m|) sum z_s w_s");
    for (std::size_t g = 0; g < span.size(); ++g)
        for (std::size_t h = 0; h < span.size(); ++h)
            v.require(alpha(a.algebra.mul(span[g], span[h])) == image[g] * alpha(span[h]),
                      "alpha(" + name[g] + " " + name[h] + ") != beta(" + name[g] + ") alpha(" + name[h] + ")");
    return v;
}

GfMatrix evaluate_at(const Poly& f, const GfMatrix& x) {
    const Prime p = x.prime();
    GfMatrix acc(p, x.rows(), x.cols());
    const GfMatrix id = GfMatrix::identity(p, x.rows());
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) acc = acc * x + id * *it;
    return acc;
}

Poly minimal_polynomial(const GfMatrix& x) {
    const Prime p = x.prime();
    std::vector<FpVec> powers{flatten(GfMatrix::identity(p, x.rows()))};
    GfMatrix cur = GfMatrix::identity(p, x.rows());
    for (;;) {
        cur = cur * x;
        const GfMatrix lower = GfMatrix::from_columns(p, cur.entries().size(), powers);
        if (auto c = lower.solve(cur.entries())) {
            FpVec coeffs;
            for (const auto& ci : *c) coeffs.push_back(-ci);
            coeffs.push_back(p.one());
            return Poly(p, std::move(coeffs));
        }
        powers.push_back(flatten(cur));
    }
}

GfMatrix t_operator(const AAlgebra& a, const BAlgebra& b) {
    const Prime p = a.config.prime();
    const auto& m = a.config.weights();
    const auto& z = a.z;
    const std::size_t n = m.size();
    const std::size_t d = a.dim();
    const GfMatrix id = GfMatrix::identity(p, d);
    const Fp inv_total = p(a.config.total()).inv();

    Fp zm = p.zero();
    for (std::size_t s = 0; s < n; ++s) zm += z[s] * p(m[s]);
    GfMatrix op(p, d, d);
    for (std::size_t s = 0; s < n; ++s) {
        const GfMatrix bu = b.hamiltonians[s] - id * hamiltonian_shift(a.config, z, s);
        op += bu * (inv_total * inv_total * zm * z[s] - inv_total * z[s] * z[s]);
    }

    if (!(op == beta(a, b, a.algebra.reduce(Poly::monomial(p.one(), 1)))))
        throw TheoremViolation("{t} from the u-expansion differs from beta([t])");
    if (!evaluate_at(a.p_poly, op).is_zero()) throw TheoremViolation("P({t}) != 0");
    std::vector<FpVec> rows;
    GfMatrix power = id;
    for (std::size_t i = 0; i < d; ++i) {
        rows.push_back(flatten(power));
        power = power * op;
    }
    if (rank_of(p, rows) != d) throw TheoremViolation("Id, {t}, ..., {t}^{n-2} are dependent");
    return op;
}

std::vector<Eigenline> eigenlines(const AAlgebra& a, const BAlgebra& b, const K1Space& space) {
    const Prime p = a.config.prime();
    const auto& m = a.config.weights();
    const std::size_t n = m.size();
    const GfMatrix top = t_operator(a, b);
    const FpVec one = a.u_coords(a.one());
    const BetheProblem prob(a.config, 1, a.z);
    const GfMatrix id = GfMatrix::identity(p, a.dim());

    std::vector<GfMatrix> full;
    for (std::size_t s = 0; s < n; ++s) full.push_back(gaudin_hamiltonian(a.config, a.z, s, 1));

    std::vector<Eigenline> out;
    for (const auto& [root, mult] : roots_in_fp(a.p_poly)) {
        const Poly q = exact_quotient(a.p_poly, Poly::linear_root(root));
        const FpVec omega = evaluate_at(q, top) * one;
        if (is_zero_vector(omega))
            throw TheoremViolation("Q({t}) <1> vanishes at root " + std::to_string(root.value()));
        WeightVector vec = space.from_w_coords(omega);
        FpVec lambdas;
        for (std::size_t s = 0; s < n; ++s) {
            const Fp lam = eigenvalue(prob, {root}, s);
            const Fp mu = p(m[s]) / (root - a.z[s]);
            if (!(lam == hamiltonian_shift(a.config, a.z, s) + mu))
                throw TheoremViolation("lambda_s disagrees with the shifted action of beta(u_s)");
            if (!((b.hamiltonians[s] - id * hamiltonian_shift(a.config, a.z, s)) * omega ==
                  (id * mu) * omega))
                throw TheoremViolation("beta(u_" + idx(s) + ") does not act by m_s / (t0 - z_s)");
            if (!(apply(full[s], vec, 1) == lam * vec))
                throw TheoremViolation("eigenline is not an eigenvector of H_" + idx(s));
            lambdas.push_back(lam);
        }
        out.push_back({root, mult, omega, std::move(vec), std::move(lambdas)});
    }
    return out;
}

CoincidenceReport coincidence_check(const BetheProblem& prob, const AAlgebra& a, const BAlgebra& b,
                                    const K1Space& space) {
    if (prob.k() != 1 || !(prob.config() == a.config) || !(prob.z() == a.z))
        throw InvalidInput("coincidence check needs the k = 1 problem of the same instance");
    const Prime p = a.config.prime();
    CoincidenceReport rep;
    for (const auto& line : eigenlines(a, b, space)) {
        CoincidenceEntry e{line.root, line.multiplicity, line.multiplicity == 1, false, false, false};
        WeightVector by_f = WeightVector::zero(a.config, 1);
        WeightVector by_w = WeightVector::zero(a.config, 1);
        for (std::size_t s = 0; s < space.n(); ++s) {
            const Fp c = (line.root - a.z[s]).inv();
            by_f += c * space.f[s];
            by_w += c * space.w[s];
        }
        e.expansions_agree = by_f == by_w;
        e.matches_bethe_vector = by_f == bethe_vector(prob, {line.root});
        e.proportional = rank_of(p, {space.w_coords(by_w), line.w_coords}) == 1;
        if (e.checked) {
            const std::string at = " at t0 = " + std::to_string(line.root.value());
            rep.verification.require(e.expansions_agree, "f- and w-expansions of the Bethe vector differ" + at);
            rep.verification.require(e.matches_bethe_vector, "Bethe vector mismatch" + at);
            rep.verification.require(e.proportional, "Bethe vector and Q({t})<1> are not proportional" + at);
        }
        rep.entries.push_back(e);
    }
    return rep;
}

bool field_check(const AAlgebra& a) {
    if (!is_irreducible(a.p_poly)) return false;
    const Prime p = a.config.prime();
    const std::size_t d = a.dim();
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < d && size <= 4096; ++i) size *= p.value();
    if (size <= 4096) {
        // Every nonzero element must be invertible.
        FpVec c(d, p.zero());
        for (std::uint64_t code = 1; code < size; ++code) {
            std::uint64_t rest = code;
            for (std::size_t i = 0; i < d; ++i) {
                c[i] = Fp(rest % p.value(), p);
                rest /= p.value();
            }
            if (!a.algebra.inverse(a.algebra.from_coords(c))) return false;
        }
        return true;
    }
    std::vector<Poly> span{a.one()};
    span.insert(span.end(), a.u.begin(), a.u.end());
    for (const auto& g : span)
        for (const auto& h : span)
            if (!g.is_zero() && !h.is_zero() && a.algebra.mul(g, h).is_zero()) return false;
    return true;
}

} // namespace gaudin
