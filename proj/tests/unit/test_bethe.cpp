#include <doctest.h>

#include <algorithm>

#include "gaudin/bethe.hpp"
#include "gaudin/errors.hpp"
#include "oracle.hpp"

using namespace gaudin;

namespace {

BetheProblem problem(std::uint64_t p, std::vector<int> m, std::vector<std::int64_t> z, int k) {
    const Prime pr(p);
    return BetheProblem(TensorConfig(pr, std::move(m)), k, to_field(z, pr));
}

std::vector<std::vector<std::uint64_t>> reps(const std::vector<BetheSolution>& sols) {
    std::vector<std::vector<std::uint64_t>> out;
    for (const auto& s : sols) out.push_back(representatives(s.t));
    return out;
}

} // namespace

TEST_CASE("problem validation") {
    CHECK_THROWS_AS(problem(5, {1, 1}, {0, 0}, 1), InvalidInput);
    CHECK_THROWS_AS(problem(5, {1, 1}, {0}, 1), InvalidInput);
    CHECK_THROWS_AS(problem(5, {1, 1}, {0, 1}, -1), InvalidInput);
    CHECK_THROWS_AS(problem(5, {2, 3}, {0, 1}, 1), PreconditionError);
}

TEST_CASE("residuals") {
    const BetheProblem prob = problem(5, {1, 1}, {0, 1}, 1);
    const Prime p(5);
    CHECK(bae_residual(prob, {p(3)}, 0).is_zero());
    // -(1/2 + 1/1) = -4
    CHECK(bae_residual(prob, {p(2)}, 0) == p(1));
    const BetheProblem single = problem(5, {1}, {0}, 1);
    for (int t = 1; t < 5; ++t) CHECK_FALSE(bae_residual(single, {p(t)}, 0).is_zero());
    CHECK_THROWS_AS(bae_residual(prob, {p(1)}, 0), InvalidInput);
    CHECK_THROWS_AS(bae_residual(prob, {p(3)}, 1), InvalidInput);
    CHECK_THROWS_AS(bae_residual(prob, {p(3), p(4)}, 0), InvalidInput);
    CHECK_THROWS_AS(bae_residual(prob, {Prime(7)(3)}, 0), ContextError);
}

TEST_CASE("solver fixtures") {
    using R = std::vector<std::vector<std::uint64_t>>;
    CHECK(reps(solve_bae(problem(5, {1, 1}, {0, 1}, 1))) == R{{3}});
    CHECK(reps(solve_bae(problem(5, {1, 1}, {0, 1}, 2))) == R{{2, 4}});
    CHECK(solve_bae(problem(5, {2}, {0}, 1)).empty());
    CHECK(solve_bae(problem(5, {2}, {3}, 1)).empty());
    CHECK(solve_bae(problem(7, {1, 1, 1}, {0, 1, 2}, 1)).empty());
    CHECK(solve_bae(problem(7, {2, 1}, {0, 3}, 2)).empty());
    CHECK(solve_bae(problem(11, {1, 1, 1}, {0, 1, 3}, 2)).empty());
    CHECK(reps(solve_bae(problem(5, {1}, {0}, 2))) == R{{1, 4}, {2, 3}});
    CHECK(reps(solve_bae(problem(5, {1, 1}, {0, 1}, 0))) == R{{}});
    CHECK(solve_bae(problem(5, {1, 1}, {0, 1}, 4)).empty());
}

TEST_CASE("solver agrees with brute-force enumeration of ordered tuples") {
    struct Case {
        std::uint64_t p;
        std::vector<int> m;
        std::vector<std::int64_t> z;
    };
    const std::vector<Case> cases{{7, {1, 1}, {0, 1}},    {7, {2, 3}, {1, 5}},      {11, {1, 1, 1}, {0, 1, 3}},
                                  {11, {3, 2}, {4, 7}},   {13, {1, 2, 3}, {0, 5, 9}}, {13, {4, 4}, {0, 1}},
                                  {11, {1, 1, 1, 1}, {0, 1, 2, 3}}};
    for (const auto& c : cases)
        for (int k = 1; k <= 3; ++k) {
            const auto brute = oracle::bae_brute(c.m, c.z, k, static_cast<oracle::I>(c.p));
            std::vector<std::vector<std::uint64_t>> expected;
            for (const auto& t : brute) expected.emplace_back(t.begin(), t.end());
            const BetheProblem prob = problem(c.p, c.m, c.z, k);
            CHECK(reps(solve_bae(prob)) == expected);
            CHECK(solve_bae(prob, 3) == solve_bae(prob, 1));
        }
}

TEST_CASE("weight functions") {
    const Prime p(11);
    const BetheProblem k1 = problem(11, {1, 2, 1}, {0, 1, 2}, 1);
    const FpVec t1{p(5)};
    CHECK(weight_function(k1, {1, 0, 0}, t1) == (p(5) - p(0)).inv());

    const BetheProblem k2 = problem(11, {2, 2}, {1, 3}, 2);
    const FpVec t{p(5), p(7)};
    const Fp z1 = p(1), z2 = p(3);
    CHECK(weight_function(k2, {2, 0}, t) == ((t[0] - z1) * (t[1] - z1)).inv());
    CHECK(weight_function(k2, {1, 1}, t) ==
          ((t[0] - z1) * (t[1] - z2)).inv() + ((t[1] - z1) * (t[0] - z2)).inv());
    CHECK_THROWS_AS(weight_function(k2, {1, 0}, t), InvalidInput);
    CHECK_THROWS_AS(weight_function(k2, {1, 1, 0}, t), InvalidInput);

    const BetheProblem k3 = problem(13, {2, 1, 2}, {0, 1, 2}, 3);
    FpVec t3{Prime(13)(4), Prime(13)(7), Prime(13)(11)};
    const Fp w = weight_function(k3, {1, 1, 1}, t3);
    const Fp w2 = weight_function(k3, {2, 0, 1}, t3);
    std::sort(t3.begin(), t3.end());
    do {
        CHECK(weight_function(k3, {1, 1, 1}, t3) == w);
        CHECK(weight_function(k3, {2, 0, 1}, t3) == w2);
    } while (std::next_permutation(t3.begin(), t3.end()));
}

TEST_CASE("Bethe vector and eigenvalues of the smallest example") {
    const Prime p(5);
    const BetheProblem prob = problem(5, {1, 1}, {0, 1}, 1);
    const WeightVector v = bethe_vector(prob, {p(3)});
    CHECK(v.coeff({1, 0}) == p(2));
    CHECK(v.coeff({0, 1}) == p(3));
    CHECK(act_e(v).is_zero());
    CHECK(eigenvalue(prob, {p(3)}, 0) == p(4));
    CHECK(eigenvalue(prob, {p(3)}, 1) == p(1));
    CHECK_THROWS_AS(eigenvalue(prob, {p(3)}, 2), InvalidInput);

    const BetheProblem empty = problem(5, {1, 2}, {0, 1}, 0);
    CHECK(bethe_vector(empty, {}) == WeightVector::basis_vector(empty.config(), {0, 0}));
}

TEST_CASE("verification reports") {
    const Prime p(5);
    const BetheProblem prob = problem(5, {1, 1}, {0, 1}, 1);
    const BetheVectorReport ok = verify_bethe_vector(prob, {p(3)});
    CHECK(ok.holds());
    CHECK(ok.nonzero);
    CHECK(ok.failures.empty());
    CHECK(ok.eigenvalues == FpVec{p(4), p(1)});

    const BetheVectorReport bad = verify_bethe_vector(prob, {p(2)});
    CHECK_FALSE(bad.holds());
    CHECK_FALSE(bad.eigen);
    CHECK_FALSE(bad.failures.empty());
    CHECK(std::any_of(bad.failures.begin(), bad.failures.end(), [](const CheckFailure& f) { return f.check == "eigen"; }));

    // Above the middle level the singular subspace is zero, and so is the
    // Bethe vector of every solution.
    const BetheProblem over = problem(5, {1}, {0}, 2);
    for (const auto& sol : solve_bae(over)) {
        const BetheVectorReport r = verify_bethe_vector(over, sol.t);
        CHECK(r.holds());
        CHECK_FALSE(r.nonzero);
    }
}

TEST_CASE("every solution passes, and nonzero below the middle level") {
    for (std::uint64_t pv : {7u, 11u}) {
        const Prime p(pv);
        for (const auto& m : std::vector<std::vector<int>>{{1, 1}, {2, 1}, {1, 2, 1}, {3, 2}, {1, 1, 1, 1}}) {
            const TensorConfig c(p, m);
            if (static_cast<std::uint64_t>(c.total()) >= pv) continue;
            for (int k = 1; k <= 2; ++k) {
                FpVec z = to_field({0, 1, 3, 6}, p);
                z.resize(m.size(), p.zero());
                const BetheProblem prob(c, k, z);
                for (const auto& sol : solve_bae(prob)) {
                    const BetheVectorReport r = verify_bethe_vector(prob, sol.t);
                    CHECK(r.holds());
                    if (2 * k <= c.total()) CHECK(r.nonzero);
                }
            }
        }
    }
}

TEST_CASE("relabeling factors permutes eigenvalues") {
    const Prime p(13);
    const BetheProblem a = problem(13, {1, 2, 3}, {0, 4, 9}, 2);
    const BetheProblem b = problem(13, {3, 1, 2}, {9, 0, 4}, 2);
    const auto sa = solve_bae(a);
    REQUIRE(sa == solve_bae(b));
    for (const auto& sol : sa) {
        CHECK(eigenvalue(a, sol.t, 0) == eigenvalue(b, sol.t, 1));
        CHECK(eigenvalue(a, sol.t, 1) == eigenvalue(b, sol.t, 2));
        CHECK(eigenvalue(a, sol.t, 2) == eigenvalue(b, sol.t, 0));
        Fp sum = p.zero();
        for (std::size_t s = 0; s < 3; ++s) sum += eigenvalue(a, sol.t, s);
        CHECK(sum.is_zero());
    }
}
