#include "gaudin/bethe.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <sstream>

#include "gaudin/errors.hpp"
#include "gaudin/matrix.hpp"

namespace gaudin {

BetheProblem::BetheProblem(TensorConfig config, int k, FpVec z)
    : config_(std::move(config)), k_(k), z_(std::move(z)) {
    if (k_ < 0) throw InvalidInput("number of Bethe parameters must be nonnegative");
    require_valid_points(config_, z_);
}

void require_distinct_coordinates(const BetheProblem& prob, const FpVec& t) {
    if (t.size() != static_cast<std::size_t>(prob.k()))
        throw InvalidInput("expected " + std::to_string(prob.k()) + " Bethe parameters, got " +
                           std::to_string(t.size()));
    FpVec all = t;
    for (const auto& x : t)
        if (!(x.prime() == prob.prime())) throw ContextError("parameter from a different field");
    all.insert(all.end(), prob.z().begin(), prob.z().end());
    if (!pairwise_distinct(all)) throw InvalidInput("coordinates of (t, z) must be pairwise distinct");
}

namespace {

Fp residual_unchecked(const BetheProblem& prob, const FpVec& t, std::size_t i) {
    const Prime p = prob.prime();
    const auto& m = prob.config().weights();
    Fp r = p.zero();
    for (std::size_t j = 0; j < t.size(); ++j)
        if (j != i) r += p(2) * (t[i] - t[j]).inv();
    for (std::size_t s = 0; s < m.size(); ++s) r -= p(m[s]) * (t[i] - prob.z()[s]).inv();
    return r;
}

bool is_solution(const BetheProblem& prob, const FpVec& t) {
    for (std::size_t i = 0; i < t.size(); ++i)
        if (!residual_unchecked(prob, t, i).is_zero()) return false;
    return true;
}

// Solutions whose smallest element is candidates[first].
void search_from(const BetheProblem& prob, const FpVec& candidates, std::size_t first,
                 std::vector<BetheSolution>& out) {
    const auto k = static_cast<std::size_t>(prob.k());
    std::vector<std::size_t> idx(k);
    idx[0] = first;
    // Odometer over the remaining k - 1 positions, strictly increasing.
    std::size_t depth = 1;
    if (k == 1) {
        FpVec t{candidates[first]};
        if (is_solution(prob, t)) out.push_back({t});
        return;
    }
    idx[1] = first;
    while (depth > 0) {
        ++idx[depth];
        if (idx[depth] + (k - 1 - depth) >= candidates.size()) {
            --depth;
            continue;
        }
        if (depth + 1 < k) {
            idx[depth + 1] = idx[depth];
            ++depth;
            continue;
        }
        FpVec t;
        t.reserve(k);
        for (auto i : idx) t.push_back(candidates[i]);
        if (is_solution(prob, t)) out.push_back({std::move(t)});
    }
}

} // namespace

Fp bae_residual(const BetheProblem& prob, const FpVec& t, std::size_t i) {
    require_distinct_coordinates(prob, t);
    if (i >= t.size()) throw InvalidInput("residual index out of range");
    return residual_unchecked(prob, t, i);
}

std::vector<BetheSolution> solve_bae(const BetheProblem& prob, unsigned jobs) {
    const Prime p = prob.prime();
    if (prob.k() == 0) return {BetheSolution{}};
    FpVec candidates;
    for (std::uint64_t v = 0; v < p.value(); ++v) {
        const Fp x(v, p);
        if (std::find(prob.z().begin(), prob.z().end(), x) == prob.z().end()) candidates.push_back(x);
    }
    const auto k = static_cast<std::size_t>(prob.k());
    if (candidates.size() < k) return {};
    const std::size_t firsts = candidates.size() - k + 1;

    std::vector<std::vector<BetheSolution>> parts(firsts);
    jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(firsts)));
    if (jobs == 1) {
        for (std::size_t f = 0; f < firsts; ++f) search_from(prob, candidates, f, parts[f]);
    } else {
        std::vector<std::future<void>> workers;
        for (unsigned w = 0; w < jobs; ++w) {
            workers.push_back(std::async(std::launch::async, [&, w] {
                for (std::size_t f = w; f < firsts; f += jobs) search_from(prob, candidates, f, parts[f]);
            }));
        }
        for (auto& fut : workers) fut.get();
    }
    std::vector<BetheSolution> out;
    for (auto& part : parts)
        for (auto& s : part) out.push_back(std::move(s));
    return out;
}

Fp weight_function(const BetheProblem& prob, const MultiIndex& j, const FpVec& t) {
    const auto& cfg = prob.config();
    if (j.size() != cfg.n()) throw InvalidInput("multi-index has the wrong length");
    if (std::accumulate(j.begin(), j.end(), 0) != prob.k())
        throw InvalidInput("multi-index weight |J| must equal k");
    require_distinct_coordinates(prob, t);
    const Prime p = prob.prime();
    const auto k = static_cast<std::size_t>(prob.k());

    // owner[a] = factor whose block contains position a.
    std::vector<std::size_t> owner;
    for (std::size_t s = 0; s < j.size(); ++s) {
        if (j[s] < 0) throw InvalidInput("negative multi-index entry");
        owner.insert(owner.end(), static_cast<std::size_t>(j[s]), s);
    }
    // inv[i][s] = 1 / (t_i - z_s)
    std::vector<FpVec> inv(k);
    for (std::size_t i = 0; i < k; ++i)
        for (const auto& zs : prob.z()) inv[i].push_back((t[i] - zs).inv());

    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    Fp sum = p.zero();
    do {
        Fp term = p.one();
        for (std::size_t a = 0; a < k; ++a) term *= inv[perm[a]][owner[a]];
        sum += term;
    } while (std::next_permutation(perm.begin(), perm.end()));

    Fp norm = p.one();
    for (int js : j) norm *= factorial(static_cast<unsigned>(js), p);
    return sum / norm;
}

WeightVector bethe_vector(const BetheProblem& prob, const FpVec& t) {
    require_distinct_coordinates(prob, t);
    WeightSpace space(prob.config(), prob.k());
    FpVec coords;
    coords.reserve(space.dim());
    for (const auto& j : space.basis()) coords.push_back(weight_function(prob, j, t));
    return WeightVector(prob.config(), prob.k(), std::move(coords));
}

Fp eigenvalue(const BetheProblem& prob, const FpVec& t, std::size_t s) {
    require_distinct_coordinates(prob, t);
    const auto& m = prob.config().weights();
    if (s >= m.size()) throw InvalidInput("eigenvalue index out of range");
    const Prime p = prob.prime();
    const auto& z = prob.z();
    const Fp half = p(2).inv();
    Fp lam = p.zero();
    for (std::size_t l = 0; l < m.size(); ++l)
        if (l != s) lam += p(m[s] * m[l]) * half * (z[s] - z[l]).inv();
    for (const auto& ti : t) lam -= p(m[s]) * (z[s] - ti).inv();
    return lam;
}

namespace {

std::string describe(const FpVec& v) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ']';
    return os.str();
}

} // namespace

BetheVectorReport verify_bethe_vector(const BetheProblem& prob, const FpVec& t) {
    const auto& cfg = prob.config();
    const auto& m = cfg.weights();
    const Prime p = prob.prime();
    const int k = prob.k();

    BetheVectorReport rep{bethe_vector(prob, t), {}, false, false, false, false, {}};
    const WeightVector& w = rep.vector;

    rep.nonzero = !w.is_zero();
    if (!rep.nonzero) rep.failures.push_back({"nonzero", 0, "Bethe vector vanishes"});

    const WeightVector ew = act_e(w);
    rep.singular = ew.is_zero();
    for (std::size_t i = 0; i < ew.coords().size(); ++i)
        if (!ew.coords()[i].is_zero())
            rep.failures.push_back({"singular", i, "e-image coordinate " + std::to_string(ew.coords()[i].value())});

    // sum_s (j_s + 1)(m_s - j_s) W_{J + 1_s} = 0 for every J in I_{k-1}
    rep.relations = true;
    WeightSpace lower(cfg, k - 1);
    for (std::size_t r = 0; r < lower.dim(); ++r) {
        MultiIndex j = lower.basis()[r];
        Fp sum = p.zero();
        for (std::size_t s = 0; s < cfg.n(); ++s) {
            if (j[s] == m[s]) continue;
            ++j[s];
            sum += p((j[s]) * (m[s] - j[s] + 1)) * weight_function(prob, j, t);
            --j[s];
        }
        if (!sum.is_zero()) {
            rep.relations = false;
            rep.failures.push_back({"relations", r, "defect " + std::to_string(sum.value())});
        }
    }

    rep.eigen = true;
    for (std::size_t s = 0; s < cfg.n(); ++s) {
        const Fp lam = eigenvalue(prob, t, s);
        rep.eigenvalues.push_back(lam);
        const GfMatrix hs = gaudin_hamiltonian(cfg, prob.z(), s, k);
        const WeightVector defect = apply(hs, w, k) - lam * w;
        if (!defect.is_zero()) {
            rep.eigen = false;
            rep.failures.push_back({"eigen", s, "H_s v - lambda_s v = " + describe(defect.coords())});
        }
    }
    return rep;
}

} // namespace gaudin
