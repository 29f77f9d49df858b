#include <doctest.h>

#include <algorithm>

#include "gaudin/k1.hpp"
#include "gaudin/pipeline.hpp"
#include "gaudin/wronski.hpp"
#include "generators.hpp"
#include "oracle.hpp"

using namespace gaudin;

TEST_CASE("field axioms, exhaustively for small primes") {
    for (std::uint64_t pv : {3u, 5u, 7u, 11u, 13u}) {
        const Prime p(pv);
        const auto n = static_cast<std::int64_t>(pv);
        for (std::int64_t a = 0; a < n; ++a) {
            const Fp x = p(a);
            if (a != 0) CHECK(x * x.inv() == p.one());
            CHECK(x + (-x) == p.zero());
            for (std::int64_t b = 0; b < n; ++b) {
                const Fp y = p(b);
                CHECK(x + y == y + x);
                CHECK(x * y == y * x);
                CHECK((x - y) + y == x);
                if (b != 0) CHECK((x / y) * y == x);
                for (std::int64_t c = 0; c < n; ++c) {
                    const Fp w = p(c);
                    CHECK((x + y) + w == x + (y + w));
                    CHECK((x * y) * w == x * (y * w));
                    CHECK(x * (y + w) == x * y + x * w);
                }
            }
        }
    }
}

TEST_CASE("reduction of integers is a ring homomorphism") {
    gen::Gen g(1);
    for (int trial = 0; trial < 2000; ++trial) {
        const Prime p = g.prime(3, 1000);
        const std::int64_t a = g.integer(-1000000, 1000000), b = g.integer(-1000000, 1000000);
        CHECK(p(a + b) == p(a) + p(b));
        CHECK(p(a * b) == p(a) * p(b));
        CHECK(p(a - b) == p(a) - p(b));
    }
}

TEST_CASE("Wronskian identities") {
    gen::Gen g(2);
    for (int trial = 0; trial < 500; ++trial) {
        const Prime p = g.prime(3, 31);
        const Poly f = g.poly(p, 6), u = g.poly(p, 6), v = g.poly(p, 6);
        const Fp c = g.elem(p);
        CHECK(wronskian(f, u) == -(wronskian(u, f)));
        CHECK(wronskian(f, u + v) == wronskian(f, u) + wronskian(f, v));
        CHECK(wronskian(f + u * c, u) == wronskian(f, u));
        CHECK(wronskian(f * c, u) == wronskian(f, u) * c);
    }
    for (std::uint64_t pv : {5u, 7u}) {
        const Prime p(pv);
        for (std::size_t a = 0; a < pv; ++a)
            for (std::size_t b = 0; b < pv; ++b) {
                const Poly lhs = wronskian(Poly::monomial(p.one(), a), Poly::monomial(p.one(), b));
                const Fp coeff = p(static_cast<std::int64_t>(a) - static_cast<std::int64_t>(b));
                const Poly rhs = (a + b == 0) ? Poly(p) : Poly::monomial(coeff, a + b - 1);
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("division, gcd and inverses") {
    gen::Gen g(3);
    for (int trial = 0; trial < 500; ++trial) {
        const Prime p = g.prime(3, 31);
        const Poly f = g.poly(p, 8);
        Poly d = g.poly(p, 4);
        if (d.is_zero()) d = Poly::constant(p.one());
        const auto [q, r] = divmod(f, d);
        CHECK(q * d + r == f);
        CHECK(r.degree() < d.degree());
        const Poly h = gcd(f, d);
        CHECK((f % h).is_zero());
        CHECK((d % h).is_zero());
        if (d.degree() >= 1) {
            const auto inv = inverse_mod(f, d.monic());
            CHECK(inv.has_value() == (gcd(f, d).degree() == 0));
            if (inv) CHECK((*inv * f) % d.monic() == Poly::constant(p.one()) % d.monic());
        }
    }
}

TEST_CASE("partial fractions reassemble") {
    gen::Gen g(4);
    for (int trial = 0; trial < 400; ++trial) {
        const Prime p = g.prime(5, 31);
        const std::size_t k = static_cast<std::size_t>(g.integer(1, 3));
        const FpVec locs = g.distinct(p, k);
        std::vector<Pole> poles;
        for (const auto& t : locs) poles.push_back({t, static_cast<unsigned>(g.integer(1, 2))});
        const Poly num = g.poly(p, 7);
        const PartialFractions pf = partial_fractions(num, poles);
        CHECK(pf.reassemble() == num);
        for (std::size_t i = 0; i < k; ++i) CHECK(pf.poles[i].double_pole.has_value() == (poles[i].order == 2));
    }
}

TEST_CASE("root multiplicities match derivative vanishing") {
    gen::Gen g(5);
    for (int trial = 0; trial < 300; ++trial) {
        const Prime p = g.prime(5, 23);
        Poly f = Poly::constant(g.nonzero(p));
        for (int i = 0; i < g.integer(0, 4); ++i) f *= Poly::linear_root(g.elem(p));
        f *= g.poly(p, 2) + Poly::monomial(p.one(), 3);
        for (const auto& r : roots_in_fp(f)) {
            CHECK(f(r.root).is_zero());
            CHECK((r.multiplicity >= 2) == f.derivative()(r.root).is_zero());
        }
        std::size_t count = 0;
        for (std::uint64_t x = 0; x < p.value(); ++x) count += f(Fp(x, p)).is_zero() ? 1 : 0;
        CHECK(count == roots_in_fp(f).size());
    }
}

TEST_CASE("irreducibility agrees with trial division at p = 5") {
    const Prime p(5);
    for (int d = 1; d <= 3; ++d) {
        std::int64_t combos = 1;
        for (int i = 0; i < d; ++i) combos *= 5;
        for (std::int64_t code = 0; code < combos; ++code) {
            oracle::Vec c(d + 1, 0);
            std::int64_t r = code;
            for (int i = 0; i < d; ++i, r /= 5) c[i] = r % 5;
            c[d] = 1;
            for (std::int64_t lead = 1; lead < 5; lead += 2) {
                oracle::Vec scaled = c;
                for (auto& x : scaled) x = x * lead % 5;
                const Poly f(p, std::vector<std::int64_t>(scaled.begin(), scaled.end()));
                CHECK(is_irreducible(f) == oracle::irreducible_brute(c, 5));
            }
        }
    }
}

TEST_CASE("matrices: rank-nullity, kernels and inverses") {
    gen::Gen g(6);
    for (int trial = 0; trial < 300; ++trial) {
        const Prime p = g.prime(3, 13);
        const auto rows = static_cast<std::size_t>(g.integer(1, 5)), cols = static_cast<std::size_t>(g.integer(1, 5));
        GfMatrix a(p, rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) a(r, c) = g.coin() ? g.elem(p) : p.zero();
        const auto ker = a.kernel();
        CHECK(a.rank() + ker.size() == cols);
        for (const auto& v : ker) CHECK(is_zero_vector(a * v));
        CHECK(rank_of(p, ker) == ker.size());
        if (rows == cols) {
            const auto inv = a.inverse();
            CHECK(inv.has_value() == (a.rank() == rows));
            if (inv) CHECK(*inv * a == GfMatrix::identity(p, rows));
        }
    }
}

TEST_CASE("solver against brute force on random instances") {
    gen::Gen g(7);
    for (int trial = 0; trial < 150; ++trial) {
        const Prime p = g.prime(5, 17);
        const auto n = static_cast<std::size_t>(g.integer(1, 3));
        const std::vector<int> m = g.weights(n, 4, static_cast<int>(p.value()) - 1);
        const FpVec z = g.distinct(p, n);
        const int k = static_cast<int>(g.integer(1, 3));
        const BetheProblem prob(TensorConfig(p, m), k, z);
        std::vector<std::int64_t> zi;
        for (const auto& x : z) zi.push_back(static_cast<std::int64_t>(x.value()));
        const auto brute = oracle::bae_brute(m, zi, k, static_cast<oracle::I>(p.value()));
        const auto sols = solve_bae(prob, static_cast<unsigned>(g.integer(1, 4)));
        REQUIRE(sols.size() == brute.size());
        std::size_t i = 0;
        for (const auto& t : brute) {
            CHECK(representatives(sols[i].t) == std::vector<std::uint64_t>(t.begin(), t.end()));
            ++i;
        }
        for (const auto& sol : sols) {
            const BetheVectorReport rep = verify_bethe_vector(prob, sol.t);
            CHECK(rep.holds());
            CHECK(rep.nonzero == (2 * k <= TensorConfig(p, m).total()));
        }
    }
}

TEST_CASE("weight functions are symmetric in t") {
    gen::Gen g(8);
    for (int trial = 0; trial < 100; ++trial) {
        const Prime p = g.prime(11, 29);
        const auto n = static_cast<std::size_t>(g.integer(1, 3));
        const std::vector<int> m = g.weights(n, 3, static_cast<int>(p.value()) - 1);
        const TensorConfig c(p, m);
        const int k = static_cast<int>(g.integer(1, std::min(3, c.total())));
        const FpVec pts = g.distinct(p, n + static_cast<std::size_t>(k));
        const FpVec z(pts.begin(), pts.begin() + static_cast<long>(n));
        FpVec t(pts.begin() + static_cast<long>(n), pts.end());
        const BetheProblem prob(c, k, z);
        const auto basis = basis_of_weight_space(c, k);
        std::vector<Fp> ref;
        for (const auto& j : basis) ref.push_back(weight_function(prob, j, t));
        std::sort(t.begin(), t.end());
        do {
            for (std::size_t i = 0; i < basis.size(); ++i) CHECK(weight_function(prob, basis[i], t) == ref[i]);
        } while (std::next_permutation(t.begin(), t.end()));
    }
}

TEST_CASE("k = 1 theory on random instances") {
    gen::Gen g(9);
    for (int trial = 0; trial < 60; ++trial) {
        const Prime p = g.prime(11, 13);
        const auto n = static_cast<std::size_t>(g.integer(2, 4));
        const std::vector<int> m = g.weights(n, 4, std::min(9, static_cast<int>(p.value()) - 2));
        const TensorConfig c(p, m);
        const FpVec z = g.distinct(p, n);
        const K1Space space = build_k1_space(c, z);
        const AAlgebra a = a_algebra(c, z);
        const BAlgebra b = b_algebra(space);
        CHECK(beta_iso_check(a, b).passed());
        CHECK(verify_power_expansions(a, 2 * static_cast<int>(n)).passed());
        CHECK(evaluate_at(a.p_poly, t_operator(a, b)).is_zero());
        const BetheProblem prob(c, 1, z);
        CHECK(coincidence_check(prob, a, b, space).passed());
        FpVec sols;
        for (const auto& s : solve_bae(prob)) sols.push_back(s.t[0]);
        CHECK(sols == distinct_roots(a.p_poly));
        if (distinct_roots(a.p_poly).size() == n - 1) CHECK(minimal_polynomial(t_operator(a, b)) == a.p_poly.monic());
    }
}

TEST_CASE("Wronski pairs: normalization freedom and round trips") {
    gen::Gen g(10);
    for (int trial = 0; trial < 100; ++trial) {
        const Prime p = g.prime(11, 23);
        const auto n = static_cast<std::size_t>(g.integer(1, 3));
        const std::vector<int> m = g.weights(n, 3, static_cast<int>(p.value()) - 2);
        const FpVec z = g.distinct(p, n);
        const int k = static_cast<int>(g.integer(1, 2));
        const BetheProblem prob(TensorConfig(p, m), k, z);
        for (const auto& sol : solve_bae(prob)) {
            const PolyPair pair = construct_tilde_y(prob, sol.t);
            const Fp c = g.elem(p);
            CHECK(verify_pair_gives_solution({pair.y, pair.y_tilde + pair.y * c}, z, m) == sol.t);
        }
    }
}
