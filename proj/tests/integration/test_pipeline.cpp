#include <doctest.h>

#include "gaudin/errors.hpp"
#include "gaudin/json.hpp"
#include "gaudin/pipeline.hpp"

using namespace gaudin;

TEST_CASE("serialized forms") {
    const Prime p(5);
    CHECK(to_json(Poly(p, std::vector<std::int64_t>{0, -1, 1})).dump() == "[0,4,1]");
    CHECK(to_json(Poly(p)).dump() == "[]");
    CHECK(to_json(GfMatrix(p, {{1, 2}, {3, 4}})).dump() == "[[1,2],[3,4]]");
    const BetheProblem prob(TensorConfig(p, {1, 1}), 1, {p(0), p(1)});
    CHECK(to_json(bethe_vector(prob, {p(3)})).dump() == R"({"k":1,"coords":[[[1,0],2],[[0,1],3]]})");
    CHECK(to_json(solve_bae(prob)).dump() == "[[3]]");
    CHECK(to_json(fiber_census_n3(p)).dump() ==
          R"({"p":5,"counts":{"0":50,"1":25,"2":50},"predicted":{"0":50,"1":25,"2":50},"agrees":true})");
}

TEST_CASE("command pipelines") {
    const Prime p(5);
    const BetheProblem prob(TensorConfig(p, {1, 1}), 1, {p(0), p(1)});
    const RunResult solve = run_solve(prob);
    CHECK(solve.doc["solutions"].dump() == "[[3]]");

    const RunResult verify = run_verify(prob);
    CHECK(verify.passed);
    CHECK(verify.doc["solutions"][0]["eigenvalues"].dump() == "[4,1]");

    const RunResult wr = run_wronski(prob);
    CHECK(wr.passed);
    CHECK(wr.doc["pairs"][0]["y_tilde"].dump() == "[4,2,1]");
    CHECK(wr.doc["T"].dump() == "[0,4,1]");
    CHECK_THROWS_AS(run_wronski(BetheProblem(TensorConfig(Prime(3), {1, 1}), 1, {Prime(3)(0), Prime(3)(1)})),
                    PreconditionError);
    CHECK_THROWS_AS(run_wronski(BetheProblem(TensorConfig(p, {1, 1, 1}), 2, {p(0), p(1), p(2)})), PreconditionError);

    const RunResult k1 = run_k1(TensorConfig(p, {1, 1, 1}), {p(0), p(1), p(3)});
    CHECK(k1.passed);
    CHECK(k1.doc["irreducible"] == true);
    CHECK(k1.doc["eigenline_roots"].dump() == "[]");
    CHECK(k1.doc["dim_B"] == 2);
    CHECK_THROWS_AS(run_k1(TensorConfig(p, {2, 2}), {p(0), p(1)}), PreconditionError);

    CHECK(run_census(Prime(7)).doc.dump() == run_census(Prime(7), 3).doc.dump());
    CHECK(run_verify(prob, 1).doc.dump() == run_verify(prob, 4).doc.dump());
}

TEST_CASE("distinct tuples") {
    const Prime p(5);
    CHECK(distinct_tuples(p, 2).size() == 20);
    CHECK(distinct_tuples(p, 3).size() == 60);
    CHECK(distinct_tuples(p, 6).empty());
    CHECK(distinct_tuples(p, 2).front() == FpVec{p(0), p(1)});
    for (const auto& z : distinct_tuples(p, 3)) CHECK(pairwise_distinct(z));
}
