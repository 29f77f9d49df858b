#pragma once

#include <cstddef>
#include <vector>

#include "gaudin/bethe.hpp"
#include "gaudin/json.hpp"

namespace gaudin {

/// A JSON document plus whether every assertion behind it held.
struct RunResult {
    Json doc;
    bool passed = true;
};

/// Sorted solutions of the Bethe equations.
RunResult run_solve(const BetheProblem& prob, unsigned jobs = 1);
/// Solutions together with the eigenvector report of each Bethe vector.
RunResult run_verify(const BetheProblem& prob, unsigned jobs = 1);
/// For each solution: y, y_tilde, the Wronskian check and the recovered roots.
/// Throws PreconditionError unless p > |m| + 1 and p > n + k.
RunResult run_wronski(const BetheProblem& prob, unsigned jobs = 1);
RunResult run_census(Prime p, unsigned jobs = 1);
/// The k = 1 algebra pipeline: P, field check, A, B, beta, eigenlines and the
/// comparison with Bethe vectors.
RunResult run_k1(const TensorConfig& config, const FpVec& z);

/// Every ordered n-tuple of pairwise distinct elements of F_p, lexicographic.
std::vector<FpVec> distinct_tuples(Prime p, std::size_t n);

} // namespace gaudin
