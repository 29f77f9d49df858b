#include "gaudin/pipeline.hpp"

#include <string>

#include "gaudin/errors.hpp"
#include "gaudin/k1.hpp"
#include "gaudin/wronski.hpp"

namespace gaudin {

namespace {

Json header(const BetheProblem& prob) {
    return Json{{"p", prob.prime().value()},
                {"m", prob.config().weights()},
                {"z", to_json(prob.z())},
                {"k", prob.k()}};
}

} // namespace

RunResult run_solve(const BetheProblem& prob, unsigned jobs) {
    RunResult res{header(prob)};
    res.doc["solutions"] = to_json(solve_bae(prob, jobs));
    return res;
}

RunResult run_verify(const BetheProblem& prob, unsigned jobs) {
    RunResult res{header(prob)};
    Json reports = Json::array();
    for (const auto& sol : solve_bae(prob, jobs)) {
        const BetheVectorReport rep = verify_bethe_vector(prob, sol.t);
        Json entry{{"t", to_json(sol.t)}};
        entry.update(to_json(rep));
        reports.push_back(std::move(entry));
        res.passed = res.passed && rep.holds();
    }
    res.doc["solutions"] = std::move(reports);
    res.doc["passed"] = res.passed;
    return res;
}

RunResult run_wronski(const BetheProblem& prob, unsigned jobs) {
    const auto total = static_cast<std::uint64_t>(prob.config().total());
    const std::uint64_t p = prob.prime().value();
    if (p <= total + 1)
        throw PreconditionError("hypothesis p > |m| + 1 fails: p = " + std::to_string(p) +
                                ", |m| = " + std::to_string(total));
    if (p <= prob.config().n() + static_cast<std::uint64_t>(prob.k()))
        throw PreconditionError("hypothesis p > n + k fails: p = " + std::to_string(p) +
                                ", n + k = " + std::to_string(prob.config().n() + prob.k()));
    RunResult res{header(prob)};
    const Poly t_poly = master_polynomial(prob.z(), prob.config().weights());
    res.doc["T"] = to_json(t_poly);
    Json pairs = Json::array();
    for (const auto& sol : solve_bae(prob, jobs)) {
        Json entry{{"t", to_json(sol.t)}};
        try {
            const PolyPair pair = construct_tilde_y(prob, sol.t);
            entry["y"] = to_json(pair.y);
            entry["y_tilde"] = to_json(pair.y_tilde);
            entry["wronskian_is_T"] = wronskian(pair.y_tilde, pair.y) == t_poly;
            const FpVec back = verify_pair_gives_solution(pair, prob.z(), prob.config().weights());
            entry["recovered"] = to_json(back);
            const bool ok = entry["wronskian_is_T"].get<bool>() && back == sol.t;
            entry["passed"] = ok;
            res.passed = res.passed && ok;
        } catch (const TheoremViolation& e) {
            entry["passed"] = false;
            entry["error"] = e.what();
            res.passed = false;
        }
        pairs.push_back(std::move(entry));
    }
    res.doc["pairs"] = std::move(pairs);
    res.doc["passed"] = res.passed;
    return res;
}

RunResult run_census(Prime p, unsigned jobs) {
    const CensusRecord rec = fiber_census_n3(p, jobs);
    return {to_json(rec), rec.agrees};
}

RunResult run_k1(const TensorConfig& config, const FpVec& z) {
    const Prime p = config.prime();
    RunResult res{Json{{"p", p.value()}, {"m", config.weights()}, {"z", to_json(z)}}};
    // Preconditions are checked here so they surface as PreconditionError,
    // not as a failed report.
    const K1Space space = build_k1_space(config, z);
    try {
        const AAlgebra a = a_algebra(config, z);
        res.doc["P"] = to_json(a.p_poly);
        res.doc["irreducible"] = is_irreducible(a.p_poly);
        res.doc["field"] = field_check(a);
        const BAlgebra b = b_algebra(space);
        res.doc["dim_A"] = a.dim();
        res.doc["dim_B"] = b.dim();
        Verification checks = beta_iso_check(a, b);
        checks.merge(verify_power_expansions(a, static_cast<int>(2 * config.n())));
        res.doc["algebra_checks"] = to_json(checks);
        const GfMatrix top = t_operator(a, b);
        res.doc["t_operator"] = to_json(top);
        res.doc["minimal_polynomial"] = to_json(minimal_polynomial(top));
        Json roots = Json::array();
        Json lines = Json::array();
        for (const auto& line : eigenlines(a, b, space)) {
            roots.push_back(line.root.value());
            lines.push_back(to_json(line));
        }
        res.doc["eigenline_roots"] = std::move(roots);
        res.doc["eigenlines"] = std::move(lines);
        const CoincidenceReport coin = coincidence_check(BetheProblem(config, 1, z), a, b, space);
        Json entries = Json::array();
        for (const auto& e : coin.entries) entries.push_back(to_json(e));
        res.doc["coincidence"] = std::move(entries);
        res.passed = checks.passed() && coin.passed();
        if (!coin.passed()) res.doc["coincidence_failures"] = coin.verification.failures;
    } catch (const TheoremViolation& e) {
        res.passed = false;
        res.doc["error"] = e.what();
    }
    res.doc["passed"] = res.passed;
    return res;
}

std::vector<FpVec> distinct_tuples(Prime p, std::size_t n) {
    std::vector<FpVec> out;
    FpVec cur;
    std::vector<bool> used(p.value(), false);
    auto rec = [&](auto&& self) -> void {
        if (cur.size() == n) {
            out.push_back(cur);
            return;
        }
        for (std::uint64_t v = 0; v < p.value(); ++v) {
            if (used[v]) continue;
            used[v] = true;
            cur.push_back(Fp(v, p));
            self(self);
            cur.pop_back();
            used[v] = false;
        }
    };
    if (n <= p.value()) rec(rec);
    return out;
}

} // namespace gaudin
