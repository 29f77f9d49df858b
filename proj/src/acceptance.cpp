#include "gaudin/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "gaudin/bethe.hpp"
#include "gaudin/errors.hpp"
#include "gaudin/k1.hpp"
#include "gaudin/pipeline.hpp"
#include "gaudin/wronski.hpp"

namespace gaudin {

namespace {

constexpr std::size_t kTuplesPerConfig = 20;
constexpr std::uint32_t kSweepSeed = 20240601;

// Collects failures but keeps only the first few messages.
struct Tally {
    std::size_t checks = 0;
    std::size_t failed = 0;
    std::vector<std::string> first;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (ok) return;
        ++failed;
        if (first.size() < 3) first.push_back(what);
    }
    std::string summary(const std::string& counts) const {
        std::string out = counts;
        for (const auto& f : first) out += "; " + f;
        return out;
    }
};

std::string describe(const TensorConfig& c, const FpVec& z, int k) {
    std::ostringstream os;
    os << "p=" << c.prime().value() << " m=(";
    for (std::size_t i = 0; i < c.n(); ++i) os << (i ? "," : "") << c.weights()[i];
    os << ") z=" << to_string(z) << " k=" << k;
    return os.str();
}

// All m = (m_1, ..., m_n) with 1 <= m_s <= cap and |m| <= max_total.
std::vector<std::vector<int>> weight_vectors(std::size_t n, int cap, int max_total) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int left) {
        if (cur.size() == n) {
            out.push_back(cur);
            return;
        }
        for (int v = 1; v <= std::min(cap, left); ++v) {
            cur.push_back(v);
            rec(left - v);
            cur.pop_back();
        }
    };
    rec(max_total);
    return out;
}

// Up to `count` tuples; all of them when there are no more than that.
std::vector<FpVec> pick_tuples(Prime p, std::size_t n, std::size_t count, std::mt19937& rng) {
    std::vector<FpVec> all = distinct_tuples(p, n);
    if (all.size() <= count) return all;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(count);
    std::sort(all.begin(), all.end(), [](const FpVec& a, const FpVec& b) {
        return representatives(a) < representatives(b);
    });
    return all;
}

struct Instance {
    TensorConfig config;
    int k;
    FpVec z;
};

// p in {7, 11, 13}, n <= 3, |m| <= p - 1, k <= 2, 20 tuples per (p, m).
std::vector<Instance> bethe_sweep() {
    std::vector<Instance> out;
    std::mt19937 rng(kSweepSeed);
    for (std::uint64_t pv : {7u, 11u, 13u}) {
        const Prime p(pv);
        const int max_total = static_cast<int>(pv) - 1;
        for (std::size_t n = 1; n <= 3; ++n) {
            for (const auto& m : weight_vectors(n, max_total, max_total)) {
                const TensorConfig config(p, m);
                for (const auto& z : pick_tuples(p, n, kTuplesPerConfig, rng))
                    for (int k = 0; k <= 2; ++k) out.push_back({config, k, z});
            }
        }
    }
    return out;
}

CriterionResult eigenvector_sweep(unsigned jobs) {
    Tally tally;
    std::size_t solutions = 0;
    std::size_t zero_vectors = 0;
    for (const auto& inst : bethe_sweep()) {
        const BetheProblem prob(inst.config, inst.k, inst.z);
        for (const auto& sol : solve_bae(prob, jobs)) {
            ++solutions;
            const BetheVectorReport rep = verify_bethe_vector(prob, sol.t);
            if (!rep.nonzero) ++zero_vectors;
            tally.expect(rep.singular && rep.relations,
                         "not singular: " + describe(inst.config, inst.z, inst.k) + " t=" + to_string(sol.t));
            tally.expect(rep.eigen, "eigen equations fail: " + describe(inst.config, inst.z, inst.k));
        }
    }
    return {1, "Bethe vectors are singular eigenvectors", tally.failed == 0,
            tally.summary(std::to_string(solutions) + " solutions verified, " + std::to_string(zero_vectors) +
                          " zero Bethe vectors"),
            0, 0};
}

CriterionResult wronski_round_trip(unsigned jobs) {
    Tally tally;
    std::size_t pairs = 0;
    for (const auto& inst : bethe_sweep()) {
        const std::uint64_t p = inst.config.prime().value();
        const auto total = static_cast<std::uint64_t>(inst.config.total());
        if (p <= total + 1 || p <= inst.config.n() + static_cast<std::uint64_t>(inst.k)) continue;
        const BetheProblem prob(inst.config, inst.k, inst.z);
        const Poly t_poly = master_polynomial(inst.z, inst.config.weights());
        for (const auto& sol : solve_bae(prob, jobs)) {
            ++pairs;
            const std::string where = describe(inst.config, inst.z, inst.k) + " t=" + to_string(sol.t);
            try {
                const PolyPair pair = construct_tilde_y(prob, sol.t);
                tally.expect(pair.y_tilde.degree() == inst.config.total() + 1 - inst.k, "deg y_tilde: " + where);
                tally.expect(wronskian(pair.y_tilde, pair.y) == t_poly, "Wr != T: " + where);
                tally.expect(verify_pair_gives_solution(pair, inst.z, inst.config.weights()) == sol.t,
                             "roots not recovered: " + where);
            } catch (const Error& e) {
                tally.expect(false, where + ": " + e.what());
            }
        }
    }

    // Converse, exhaustively: p = 7, m = (1,1), every y = x - t and every
    // y_tilde of degree <= 3.
    const Prime p(7);
    const TensorConfig config(p, {1, 1});
    std::size_t converse = 0;
    for (const auto& z : distinct_tuples(p, 2)) {
        const BetheProblem prob(config, 1, z);
        const Poly t_poly = master_polynomial(z, config.weights());
        std::vector<BetheSolution> found;
        for (std::uint64_t tv = 0; tv < 7; ++tv) {
            const Fp t(tv, p);
            if (t == z[0] || t == z[1]) continue;
            const Poly y = Poly::linear_root(t);
            bool admits = false;
            for (std::uint64_t code = 0; code < 7 * 7 * 7 * 7; ++code) {
                FpVec c;
                for (std::uint64_t r = code, i = 0; i < 4; ++i, r /= 7) c.push_back(Fp(r % 7, p));
                const Poly y_tilde(p, c);
                if (!(wronskian(y_tilde, y) == t_poly)) continue;
                admits = true;
                ++converse;
                tally.expect(bae_residual(prob, {t}, 0).is_zero(),
                             "converse residual nonzero: z=" + to_string(z) + " t=" + to_string({t}));
                try {
                    tally.expect(verify_pair_gives_solution({y, y_tilde}, z, config.weights()) == FpVec{t},
                                 "converse recovery: z=" + to_string(z));
                } catch (const Error& e) {
                    tally.expect(false, std::string("converse: ") + e.what());
                }
            }
            if (admits) found.push_back({{t}});
        }
        tally.expect(found == solve_bae(prob, jobs), "converse root set differs from solver: z=" + to_string(z));
    }
    return {2, "Wronskian round trip and converse", tally.failed == 0,
            tally.summary(std::to_string(pairs) + " pairs built, " + std::to_string(converse) +
                          " converse pairs checked"),
            0, 0};
}

CriterionResult census(unsigned jobs) {
    Tally tally;
    for (std::uint64_t pv : {5u, 7u, 11u}) {
        const CensusRecord rec = fiber_census_n3(Prime(pv), jobs);
        const std::uint64_t sq = pv * pv;
        const std::map<unsigned, std::uint64_t> expected{{0, (pv - 1) / 2 * sq}, {1, sq}, {2, (pv - 1) / 2 * sq}};
        tally.expect(rec.counts == expected, "census counts differ at p=" + std::to_string(pv));
        tally.expect(rec.predicted == expected, "discriminant prediction differs at p=" + std::to_string(pv));
        tally.expect(rec.agrees, "prediction disagrees cubic-by-cubic at p=" + std::to_string(pv));
    }
    return {3, "Wronski map fiber census for n = 3", tally.failed == 0,
            tally.summary("p = 5, 7, 11 censused"), 0, 0};
}

CriterionResult irreducible_example(unsigned) {
    Tally tally;
    const Prime p(5);
    const TensorConfig config(p, {1, 1, 1});
    std::size_t triples = 0;
    for (const auto& z : distinct_tuples(p, 3)) {
        ++triples;
        const std::string where = "z=" + to_string(z);
        const AAlgebra a = a_algebra(config, z);
        const BAlgebra b = b_algebra(build_k1_space(config, z));
        tally.expect(is_irreducible(a.p_poly), "P reducible: " + where);
        tally.expect(field_check(a), "A is not a field: " + where);
        tally.expect(a.dim() == 2 && b.dim() == 2, "dimension: " + where);
    }
    tally.expect(triples == 60, "expected 60 triples");
    return {4, "P irreducible for all triples at p = 5, m = (1,1,1)", tally.failed == 0,
            tally.summary(std::to_string(triples) + " triples"), 0, 0};
}

CriterionResult k1_algebra(unsigned) {
    Tally tally;
    std::size_t instances = 0;
    std::size_t simple_roots = 0;
    for (std::uint64_t pv : {5u, 7u}) {
        const Prime p(pv);
        for (std::size_t n = 2; n <= 3; ++n) {
            for (const auto& m : weight_vectors(n, 2, static_cast<int>(pv) - 2)) {
                const TensorConfig config(p, m);
                for (const auto& z : distinct_tuples(p, n)) {
                    ++instances;
                    const std::string where = describe(config, z, 1);
                    try {
                        const K1Space space = build_k1_space(config, z);
                        const AAlgebra a = a_algebra(config, z);
                        const BAlgebra b = b_algebra(space);
                        const Verification iso = beta_iso_check(a, b);
                        tally.expect(iso.passed(), "beta: " + where);
                        tally.expect(verify_power_expansions(a, static_cast<int>(2 * n)).passed(),
                                     "power expansions: " + where);
                        tally.expect(evaluate_at(a.p_poly, t_operator(a, b)).is_zero(), "P({t}) != 0: " + where);
                        const CoincidenceReport coin = coincidence_check(BetheProblem(config, 1, z), a, b, space);
                        for (const auto& e : coin.entries) simple_roots += e.checked ? 1 : 0;
                        tally.expect(coin.passed(), "coincidence: " + where);
                    } catch (const Error& e) {
                        tally.expect(false, where + ": " + e.what());
                    }
                }
            }
        }
    }
    return {5, "k = 1 Bethe algebra isomorphism and eigenlines", tally.failed == 0,
            tally.summary(std::to_string(instances) + " instances, " + std::to_string(simple_roots) +
                          " simple roots compared"),
            0, 0};
}

CriterionResult structural(unsigned) {
    Tally tally;
    std::mt19937 rng(kSweepSeed + 6);
    std::size_t levels = 0;
    for (std::uint64_t pv : {7u, 11u}) {
        const Prime p(pv);
        for (std::size_t n = 1; n <= 3; ++n) {
            for (const auto& m : weight_vectors(n, 2, static_cast<int>(pv) - 1)) {
                const TensorConfig config(p, m);
                const int top = config.total();
                for (const auto& z : pick_tuples(p, n, 3, rng)) {
                    const std::string where = describe(config, z, 0);
                    for (int k = 0; k <= top; ++k) {
                        ++levels;
                        const GfMatrix e = e_matrix(config, k);
                        const GfMatrix f = f_matrix(config, k);
                        const GfMatrix h = h_matrix(config, k);
                        std::vector<GfMatrix> hs, hs_down, hs_up;
                        GfMatrix sum(p, h.rows(), h.cols());
                        for (std::size_t s = 0; s < n; ++s) {
                            hs.push_back(gaudin_hamiltonian(config, z, s, k));
                            sum += hs.back();
                            if (k > 0) hs_down.push_back(gaudin_hamiltonian(config, z, s, k - 1));
                            if (k < top) hs_up.push_back(gaudin_hamiltonian(config, z, s, k + 1));
                        }
                        tally.expect(n == 1 || sum.is_zero(), "sum of H_s != 0: " + where);
                        for (std::size_t s = 0; s < n; ++s) {
                            for (std::size_t l = s + 1; l < n; ++l)
                                tally.expect(commutator(hs[s], hs[l]).is_zero(), "[H_s, H_l] != 0: " + where);
                            tally.expect(commutator(hs[s], h).is_zero(), "[H_s, h] != 0: " + where);
                            if (k > 0) tally.expect(e * hs[s] == hs_down[s] * e, "[H_s, e] != 0: " + where);
                            if (k < top) tally.expect(f * hs[s] == hs_up[s] * f, "[H_s, f] != 0: " + where);
                        }
                    }
                }
                // sl2 relations on every level: [e,f] = h, [h,e] = 2e, [h,f] = -2f.
                for (int k = 0; k <= top; ++k) {
                    const GfMatrix h = h_matrix(config, k);
                    GfMatrix ef(p, h.rows(), h.cols());
                    if (k < top) ef += e_matrix(config, k + 1) * f_matrix(config, k);
                    if (k > 0) ef -= f_matrix(config, k - 1) * e_matrix(config, k);
                    tally.expect(ef == h, "[e, f] != h at level " + std::to_string(k));
                    if (k > 0) {
                        const GfMatrix e = e_matrix(config, k);
                        tally.expect(h_matrix(config, k - 1) * e - e * h == e * p(2), "[h, e] != 2e");
                    }
                    if (k < top) {
                        const GfMatrix f = f_matrix(config, k);
                        tally.expect(h_matrix(config, k + 1) * f - f * h == f * p(-2), "[h, f] != -2f");
                    }
                }
            }
        }
    }
    return {6, "Gaudin Hamiltonians commute with each other and with sl2", tally.failed == 0,
            tally.summary(std::to_string(levels) + " weight levels, " + std::to_string(tally.checks) + " identities"),
            0, 0};
}

CriterionResult k1_consistency(unsigned jobs) {
    Tally tally;
    std::mt19937 rng(kSweepSeed + 7);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t v = 3; v <= 101; ++v)
        if (is_prime(v)) primes.push_back(v);
    std::size_t roots = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::uint64_t pv = primes[std::uniform_int_distribution<std::size_t>(0, primes.size() - 1)(rng)];
        const Prime p(pv);
        const auto max_n = static_cast<std::size_t>(std::min<std::uint64_t>(4, pv - 1));
        const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_n)(rng);
        const int cap = std::max(1, static_cast<int>((pv - 1) / n));
        std::vector<int> m(n);
        for (auto& ms : m) ms = std::uniform_int_distribution<int>(1, cap)(rng);
        std::vector<std::uint64_t> pool(pv);
        for (std::uint64_t v = 0; v < pv; ++v) pool[v] = v;
        std::shuffle(pool.begin(), pool.end(), rng);
        FpVec z;
        for (std::size_t s = 0; s < n; ++s) z.push_back(Fp(pool[s], p));

        const TensorConfig config(p, m);
        FpVec solved;
        for (const auto& sol : solve_bae(BetheProblem(config, 1, z), jobs)) solved.push_back(sol.t.front());
        FpVec expected = distinct_roots(p_polynomial(z, m));
        std::sort(expected.begin(), expected.end());
        roots += expected.size();
        tally.expect(solved == expected, "solver differs from roots of P: " + describe(config, z, 1));
    }
    return {7, "k = 1 solutions are the roots of P", tally.failed == 0,
            tally.summary("100 random instances, " + std::to_string(roots) + " roots"), 0, 0};
}

struct Entry {
    CriterionResult (*run)(unsigned);
    double budget;
};

constexpr Entry kCriteria[kCriterionCount] = {
    {eigenvector_sweep, 60.0}, {wronski_round_trip, 30.0}, {census, 30.0}, {irreducible_example, 5.0},
    {k1_algebra, 60.0},        {structural, 30.0},         {k1_consistency, 30.0},
};

} // namespace

CriterionResult run_criterion(int id, unsigned jobs) {
    if (id < 1 || id > kCriterionCount) throw InvalidInput("no acceptance criterion " + std::to_string(id));
    const Entry& entry = kCriteria[id - 1];
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r{id, "", false, "", 0, entry.budget};
    try {
        r = entry.run(jobs);
    } catch (const std::exception& e) {
        r = {id, "criterion " + std::to_string(id), false, std::string("aborted: ") + e.what(), 0, 0};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.budget = entry.budget;
    if (r.seconds > r.budget) {
        r.passed = false;
        r.detail += "; over the time budget";
    }
    return r;
}

std::vector<CriterionResult> run_acceptance(unsigned jobs) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, jobs));
    return out;
}

std::string format_line(const CriterionResult& r) {
    char timing[64];
    std::snprintf(timing, sizeof timing, "(%.2f s / %.0f s)", r.seconds, r.budget);
    return std::string(r.passed ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.title + " " + timing +
           ": " + r.detail;
}

} // namespace gaudin
