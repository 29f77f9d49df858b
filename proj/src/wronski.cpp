#include "gaudin/wronski.hpp"

#include <algorithm>
#include <future>
#include <string>

#include "gaudin/errors.hpp"

namespace gaudin {

Poly master_polynomial(const FpVec& z, const std::vector<int>& m) {
    if (z.empty() || z.size() != m.size()) throw InvalidInput("need one multiplicity per point");
    if (!pairwise_distinct(z)) throw InvalidInput("points z must be pairwise distinct");
    const Prime p = z.front().prime();
    Poly out = Poly::constant(p.one());
    for (std::size_t s = 0; s < z.size(); ++s) {
        if (m[s] < 0) throw InvalidInput("negative multiplicity");
        for (int e = 0; e < m[s]; ++e) out *= Poly::linear_root(z[s]);
    }
    return out;
}

PolyPair construct_tilde_y(const BetheProblem& prob, const FpVec& t) {
    const auto& cfg = prob.config();
    const Prime p = prob.prime();
    const auto pv = p.value();
    const auto total = static_cast<std::uint64_t>(cfg.total());
    if (pv <= total + 1)
        throw PreconditionError("hypothesis p > |m| + 1 fails: p = " + std::to_string(pv) +
                                ", |m| = " + std::to_string(total));
    if (pv <= cfg.n() + static_cast<std::uint64_t>(prob.k()))
        throw PreconditionError("hypothesis p > n + k fails");
    require_distinct_coordinates(prob, t);

    const Poly T = master_polynomial(prob.z(), cfg.weights());
    const Poly y = Poly::from_roots(p, t);
    std::vector<Pole> poles;
    for (const auto& ti : t) poles.push_back({ti, 2});
    const PartialFractions pf = partial_fractions(T, poles);
    for (const auto& term : pf.poles)
        if (!term.simple.is_zero())
            throw PreconditionError("t is not a solution of the Bethe equations: residue at " +
                                    std::to_string(term.location.value()) + " is nonzero");

    // y_tilde / y = integral of Q - sum_i a_{i,2} / (x - t_i)
    Poly y_tilde = y * pf.quotient.antiderivative();
    for (const auto& term : pf.poles)
        y_tilde -= exact_quotient(y, Poly::linear_root(term.location)) * *term.double_pole;

    if (!(wronskian(y_tilde, y) == T))
        throw TheoremViolation("constructed y_tilde does not satisfy Wr(y_tilde, y) = T");
    if (y_tilde.degree() != cfg.total() + 1 - prob.k())
        throw TheoremViolation("deg y_tilde = " + std::to_string(y_tilde.degree()) +
                               " differs from |m| + 1 - k");
    return {y, y_tilde};
}

FpVec verify_pair_gives_solution(const PolyPair& pair, const FpVec& z, const std::vector<int>& m) {
    const Prime p = pair.y.prime();
    TensorConfig cfg(p, m);
    require_valid_points(cfg, z);
    const Poly T = master_polynomial(z, m);
    if (!(wronskian(pair.y_tilde, pair.y) == T))
        throw PreconditionError("pair does not satisfy Wr(y_tilde, y) = T");
    if (static_cast<std::uint64_t>(std::max(pair.y.degree(), pair.y_tilde.degree())) >= p.value())
        throw PreconditionError("degrees must stay below p");
    const int k = pair.y.degree();

    FpVec roots;
    for (const auto& r : roots_in_fp(pair.y)) {
        if (r.multiplicity != 1) throw PreconditionError("y has a repeated root");
        roots.push_back(r.root);
    }
    if (static_cast<int>(roots.size()) != k)
        throw PreconditionError("y does not split into linear factors over F_p");
    for (const auto& r : roots)
        if (std::find(z.begin(), z.end(), r) != z.end())
            throw PreconditionError("a root of y coincides with some z_s");

    if (k > cfg.total() + 1 || 2 * k == cfg.total() + 1)
        throw TheoremViolation("degree constraints k <= |m| + 1, 2k != |m| + 1 fail");
    BetheProblem prob(cfg, k, z);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        const Fp r = bae_residual(prob, roots, i);
        if (!r.is_zero())
            throw TheoremViolation("root " + std::to_string(roots[i].value()) +
                                   " of y violates the Bethe equations (residual " +
                                   std::to_string(r.value()) + ")");
    }
    return roots;
}

Poly wronski_map(const NormalizedPair& pair) {
    const int n = pair.g1.degree();
    return wronskian(pair.g1, pair.g2()) * pair.g1.prime()(n - 1).inv();
}

std::vector<NormalizedPair> wronski_fiber(const Poly& t_poly) {
    const Prime p = t_poly.prime();
    const int n = t_poly.degree();
    if (!t_poly.is_monic()) throw InvalidInput("Wronski fiber needs a monic polynomial");
    if (n < 2) throw InvalidInput("Wronski fiber needs degree n >= 2");
    if (p.value() <= static_cast<std::uint64_t>(n) + 1)
        throw PreconditionError("hypothesis p > n + 1 fails");

    const Fp scale = p(n - 1);
    std::vector<NormalizedPair> out;
    for (const Fp& t : distinct_roots(t_poly.derivative())) {
        // Coefficient of x^j in g1'(x - t) - g1 is (j - 1) c_j - (j + 1) t c_{j+1};
        // match it against (n - 1) T_j from the top down.
        FpVec c(static_cast<std::size_t>(n) + 1, p.zero());
        c[n] = p.one();
        for (int j = n - 1; j >= 2; --j)
            c[j] = (scale * t_poly.coeff(j) + p(j + 1) * t * c[j + 1]) / p(j - 1);
        if (!(scale * t_poly.coeff(1) + p(2) * t * c[2]).is_zero())
            throw TheoremViolation("triangular system inconsistent at t = " + std::to_string(t.value()));
        c[0] = -(scale * t_poly.coeff(0));
        NormalizedPair pair{t, Poly(p, std::move(c))};
        if (!(wronskian(pair.g1, pair.g2()) == t_poly * scale))
            throw TheoremViolation("fiber point fails Wr(g1, g2) = (n - 1) T");
        out.push_back(std::move(pair));
    }
    return out;
}

unsigned predicted_fiber_size_n3(const Poly& cubic) {
    const Prime p = cubic.prime();
    const Fp disc = cubic.coeff(2) * cubic.coeff(2) - p(3) * cubic.coeff(1);
    if (disc.is_zero()) return 1;
    return disc.is_square() ? 2 : 0;
}

CensusRecord fiber_census_n3(Prime p, unsigned jobs) {
    if (p.value() <= 4) throw PreconditionError("census for n = 3 needs p > 4");
    const std::uint64_t q = p.value();
    struct Tally {
        std::map<unsigned, std::uint64_t> counts, predicted;
        bool agrees = true;
    };
    auto run_slice = [&](std::uint64_t s1) {
        Tally tally;
        for (std::uint64_t s2 = 0; s2 < q; ++s2) {
            for (std::uint64_t s3 = 0; s3 < q; ++s3) {
                const Poly cubic(p, FpVec{Fp(s3, p), Fp(s2, p), Fp(s1, p), p.one()});
                const auto size = static_cast<unsigned>(wronski_fiber(cubic).size());
                const unsigned guess = predicted_fiber_size_n3(cubic);
                ++tally.counts[size];
                ++tally.predicted[guess];
                tally.agrees = tally.agrees && size == guess;
            }
        }
        return tally;
    };

    std::vector<Tally> slices(q);
    jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(q)));
    if (jobs == 1) {
        for (std::uint64_t s1 = 0; s1 < q; ++s1) slices[s1] = run_slice(s1);
    } else {
        std::vector<std::future<void>> workers;
        for (unsigned w = 0; w < jobs; ++w)
            workers.push_back(std::async(std::launch::async, [&, w] {
                for (std::uint64_t s1 = w; s1 < q; s1 += jobs) slices[s1] = run_slice(s1);
            }));
        for (auto& f : workers) f.get();
    }

    CensusRecord rec{q, {{0, 0}, {1, 0}, {2, 0}}, {{0, 0}, {1, 0}, {2, 0}}, true};
    for (const auto& t : slices) {
        for (const auto& [k, v] : t.counts) rec.counts[k] += v;
        for (const auto& [k, v] : t.predicted) rec.predicted[k] += v;
        rec.agrees = rec.agrees && t.agrees;
    }
    return rec;
}

QuotientAlgebra c_tilde_algebra(const Poly& t_poly) {
    const Poly d = t_poly.derivative();
    if (d.is_zero()) throw InvalidInput("dT/dt vanishes identically: degenerate modulus");
    return QuotientAlgebra(d.monic());
}

} // namespace gaudin
