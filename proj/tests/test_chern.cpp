#include "support.hpp"

#include "projkit/chern.hpp"

using namespace projkit;

namespace {

ChernData with_total(int N, long rank, std::vector<long> c) {
    ChernData e(N, rank);
    for (std::size_t i = 0; i < c.size() && static_cast<int>(i) <= N; ++i) e.total[i] = Rational(c[i]);
    return e;
}

// Pushforward from {z^eps = 0} of a split bundle with Chern roots a_i: each O(a) has the
// filtration O_H(a), O_H(a-1), ..., so c = prod (1 + a_i h) / (1 + (a_i - eps) h).
Series split_pushforward(const std::vector<long>& roots, long eps, int N) {
    Series acc(N + 1, Rational(0));
    acc[0] = Rational(1);
    for (long a : roots) {
        Series num(N + 1, Rational(0)), den(N + 1, Rational(0));
        num[0] = den[0] = Rational(1);
        if (N >= 1) {
            num[1] = Rational(a);
            den[1] = Rational(a - eps);
        }
        acc = series_mul(acc, series_div(num, den));
    }
    return acc;
}

long e_sym(const std::vector<long>& r, int k) {
    long acc = 0;
    const int n = static_cast<int>(r.size());
    for (int mask = 0; mask < (1 << n); ++mask) {
        if (std::popcount(static_cast<unsigned>(mask)) != k) continue;
        long p = 1;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) p *= r[i];
        acc += p;
    }
    return acc;
}

Rational binom_poly(long t, long n) {
    // C(t + n, n) as a polynomial in t, valid for negative t as well
    Rational acc(1);
    for (long i = 1; i <= n; ++i) acc = acc * Rational(t + i) / Rational(i);
    return acc;
}

}  // namespace

TEST_SUITE("chern") {
    TEST_CASE("series arithmetic") {
        const Series a{Rational(1), Rational(2), Rational(0)};
        const Series inv = series_inverse(a);
        CHECK(inv == Series{Rational(1), Rational(-2), Rational(4)});
        CHECK(series_mul(a, inv) == Series{Rational(1), Rational(0), Rational(0)});
        CHECK(series_pow(a, 2) == Series{Rational(1), Rational(4), Rational(4)});
        CHECK(series_exp_linear(Rational(2), 3) == Series{Rational(1), Rational(2), Rational(2), Rational(4, 3)});
    }

    TEST_CASE("sums of line bundles") {
        CHECK(chern_of_twist_sum({0, 0, 0, 0}, 4).total == with_total(4, 4, {1}).total);
        const auto e = chern_of_twist_sum({5, 4, 2, 1}, 5);
        CHECK(e.rank == 4);
        CHECK(e.total == with_total(5, 4, {1, 12, 49, 78, 40, 0}).total);
        CHECK(chern_of_twist_sum({-1}, 3).total == with_total(3, 1, {1, -1}).total);
    }

    TEST_CASE("exact sequences") {
        const auto mid = with_total(2, 2, {1, 0, -1});
        const auto sub = with_total(2, 1, {1, -1});
        CHECK(exact_seq_solve(mid, sub, SeqPosition::Sub).total == with_total(2, 1, {1, 1}).total);
        CHECK(exact_seq_solve(mid, sub, SeqPosition::Sub).rank == 1);
        CHECK(exact_seq_solve(mid, mid, SeqPosition::Quot).total == with_total(2, 0, {1}).total);

        const auto trivial = with_total(4, 2, {1});
        const auto push = with_total(4, 0, {1, 4, 8, 8, 0});
        const auto g = exact_seq_solve(trivial, push, SeqPosition::Quot);
        CHECK(g.total == with_total(4, 2, {1, -4, 8, -8, 0}).total);
    }

    TEST_CASE("character round trips") {
        for (const auto& roots : std::vector<std::vector<long>>{{1, 2}, {-3, 0, 4}, {2, 2, -1, 5}}) {
            const auto e = chern_of_twist_sum(roots, 4);
            const auto ch = chern_character(e);
            Series direct(5, Rational(0));
            for (long a : roots) {
                const auto ea = series_exp_linear(Rational(a), 4);
                for (int i = 0; i <= 4; ++i) direct[i] += ea[i];
            }
            CHECK(ch == direct);
            const auto back = from_character(ch);
            CHECK(back.total == e.total);
            CHECK(back.rank == e.rank);

            std::vector<long> shifted, negated;
            for (long a : roots) {
                shifted.push_back(a + 3);
                negated.push_back(-a);
            }
            CHECK(twisted(e, 3).total == chern_of_twist_sum(shifted, 4).total);
            CHECK(dual(e).total == chern_of_twist_sum(negated, 4).total);
        }
        CHECK(truncated(chern_of_twist_sum({1, 1}, 4), 1).total == Series{Rational(1), Rational(2)});
    }

    TEST_CASE("Riemann-Roch normalization") {
        for (int N = 1; N <= 5; ++N) {
            const auto chi = chi_polynomial(chern_of_twist_sum({0}, N));
            for (long t = -N - 2; t <= 4; ++t) CHECK(eval_polynomial(chi, Rational(t)) == binom_poly(t, N));
        }
        const auto o_minus = chi_polynomial(chern_of_twist_sum({-1}, 3));
        CHECK(eval_polynomial(o_minus, Rational(0)) == Rational(0));
        // the pushforward of O from a plane in P^3 has the Hilbert polynomial of P^2
        const auto plane = chi_polynomial(with_total(3, 0, {1, 1, 1, 1}));
        for (long t = -3; t <= 5; ++t) CHECK(eval_polynomial(plane, Rational(t)) == binom_poly(t, 2));
        CHECK(todd_projective(2) == Series{Rational(1), Rational(3, 2), Rational(1)});
    }

    TEST_CASE("pushforward anchors") {
        CHECK(pushforward_chern(1, 0, 0, 0, 1, 4) == std::vector<Rational>{1, 1, 1, 1});
        CHECK(pushforward_chern(2, 0, 0, 0, 1, 4) == std::vector<Rational>{2, 3, 4, 5});
        const auto p = pushforward_chern(2, 2, 2, 0, 2, 4);
        CHECK(p[0] == Rational(4));
        CHECK(p[1] == Rational(8));
        CHECK(p[2] == Rational(8));
        CHECK(pushforward_chern_oracle(1, 0, 0, 0, 1, 4) == std::vector<Rational>{1, 1, 1, 1});
        CHECK(pushforward_chern_oracle(2, 0, 0, 0, 1, 4) == std::vector<Rational>{2, 3, 4, 5});
        CHECK(pushforward_chern_oracle(3, 1, 2, 1, 3, 5) == pushforward_chern(3, 1, 2, 1, 3, 5));
    }

    TEST_CASE("pushforward of split bundles") {
        const std::vector<std::vector<long>> samples{{0}, {3}, {-2, 1}, {1, 1, 2}, {-1, 0, 2}, {2, -3, 1}};
        for (const auto& roots : samples)
            for (long eps = 1; eps <= 4; ++eps)
                for (int N = 4; N <= 6; ++N) {
                    const long r = static_cast<long>(roots.size());
                    const auto closed =
                        pushforward_chern(r, e_sym(roots, 1), e_sym(roots, 2), e_sym(roots, 3), eps, N);
                    const auto split = split_pushforward(roots, eps, N);
                    for (std::size_t i = 0; i < closed.size(); ++i) CHECK(closed[i] == split[i + 1]);
                }
    }

    TEST_CASE("pushforward data and integrality") {
        const auto d = pushforward_data(2, 2, 2, 0, 2, 4);
        CHECK(d.rank == 0);
        CHECK(d.c(1) == Rational(4));
        CHECK_NOTHROW(require_integral(d, "push"));
        auto half = with_total(2, 1, {1});
        half.total[1] = Rational(1, 2);
        CHECK_THROWS_AS(require_integral(half, "half"), Error);
    }

    TEST_CASE("irreducibility of rank-2 Chern polynomials") {
        CHECK(chern_poly_irreducible(with_total(4, 2, {1, -2, 4})));
        CHECK_FALSE(chern_poly_irreducible(with_total(4, 2, {1, 3, 2})));
        CHECK_FALSE(chern_poly_irreducible(with_total(4, 2, {1, 2, 1})));
        CHECK_THROWS_AS(chern_poly_irreducible(with_total(4, 3, {1, 1, 1})), Error);
        CHECK(chern_polynomial_string(with_total(4, 2, {1, -2, 4})) == "1 - 2h + 4h^2");
        CHECK(chern_polynomial_string(with_total(4, 2, {1})) == "1");
    }

    TEST_CASE("Binet-Cauchy pair at (1,1,1)") {
        const auto rep = binet_cauchy_invariants(1, 1, 1, 0);
        CHECK(rep.all_agree());
        CHECK(rep.find("c1(B)")->chain == Rational(2));
        CHECK(rep.find("c2(B)")->chain == Rational(2));
        CHECK(rep.find("c1(A)")->chain == Rational(-2));
        CHECK(rep.find("c2(A)")->chain == Rational(2));
        // (1 - 2h + 2h^2)(1 + 2h + 2h^2) = 1 mod h^4
        const Series a{Rational(1), Rational(-2), Rational(2), Rational(0)};
        const Series b{Rational(1), Rational(2), Rational(2), Rational(0)};
        CHECK(series_mul(a, b) == Series{Rational(1), Rational(0), Rational(0), Rational(0)});
        bool whitney = false;
        for (const auto& [k, v] : rep.facts)
            if (k == "c(A)c(B) == c(F) mod h^4") whitney = v == "true";
        CHECK(whitney);
    }

    TEST_CASE("Binet-Cauchy pairs over the region") {
        for (long w2 = 1; w2 <= 4; ++w2)
            for (long v2 = 1; v2 <= w2; ++v2)
                for (long w1 = std::max(0L, w2 - v2); w1 <= w2 + v2; ++w1)
                    for (long a1 = 0; a1 <= 2; ++a1) CHECK(binet_cauchy_invariants(w1, w2, v2, a1).all_agree());
        CHECK_THROWS_AS(binet_cauchy_invariants(5, 1, 1), Error);
        CHECK_THROWS_AS(binet_cauchy_invariants(1, 0, 1), Error);
    }

    TEST_CASE("rank-3 lift") {
        CHECK(rank_three_invariants(1, 1, 1).all_agree());
        CHECK(rank_three_invariants(3, 4, 2).all_agree());
        CHECK(rank_three_invariants(2, 2, 1).all_agree());
    }

    TEST_CASE("diagonal family") {
        for (long n = 1; n <= 3; ++n) {
            const auto rep = diagonal_family_invariants(n);
            CHECK(rep.all_agree());
            CHECK(rep.find("c1(E2)")->chain == Rational(-2 * n));
            CHECK(rep.find("c2(E2)")->chain == Rational(4 * n * n));
            CHECK(rep.find("c3(E2)")->chain == Rational(0));
        }
    }

    TEST_CASE("weighted construction: first Chern class of G") {
        for (long n = 1; n <= 3; ++n) {
            std::vector<long> b;
            for (long i = 1; i <= 2 * n - 1; ++i) b.push_back(i);
            const long gamma = (2 * n + 1) + 1;
            const auto balanced = weighted_kpr_invariants(build_ledger({n, 1, -1, gamma}), 1, b);
            CHECK(balanced.find("c1(G)")->agrees());
            CHECK(balanced.find("c1(G)")->chain == Rational(-4 * n * gamma));
            const auto l = build_ledger({n, 2, 1, 7 * n});
            const auto rep = weighted_kpr_invariants(l, 1, b);
            CHECK(rep.find("c1(G)")->discrepancy() == Rational(2 * n * (2 * n + 1) * 3));
        }
    }

    TEST_CASE("self-duality of the weighted null-correlation bundle") {
        for (long n = 1; n <= 3; ++n) CHECK(null_correlation_self_duality(build_ledger({n, 2, 1, 7 * n + 1})).all_agree());
    }
}
