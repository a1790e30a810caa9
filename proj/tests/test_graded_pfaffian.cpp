#include "support.hpp"

#include "projkit/pfaffian.hpp"

using namespace projkit;
using namespace testing;

namespace {

// M with linear S_ij in four variables, Pf(M) generic (nonzero).
GradedMatrix<Rational> linear_m() {
    const int nv = 4;
    GradedMatrix<Rational> m(Twists(4, 0), Twists(4, 1), nv);
    m.entries = antisym4<Rational>(x(nv, 0), x(nv, 1), x(nv, 2), x(nv, 3), x(nv, 0) + x(nv, 1), x(nv, 2) - x(nv, 3));
    return m;
}

// Binet-Cauchy M with T = (x0, x1), W = (x2, x3), U = (x1, x0), V = (x3, x2): Pf(M) = 0.
GradedMatrix<Rational> q_zero_m() {
    const int nv = 4;
    const auto t1 = x(nv, 0), t2 = x(nv, 1), w1 = x(nv, 2), w2 = x(nv, 3);
    const auto u1 = x(nv, 1), u2 = x(nv, 0), v1 = x(nv, 3), v2 = x(nv, 2);
    GradedMatrix<Rational> m(Twists(4, -1), Twists(4, 1), nv);
    m.entries = antisym4<Rational>(t1 * u1 + t2 * u2, t1 * w1 + t2 * w2, t1 * v2 - t2 * v1, u2 * w1 - u1 * w2,
                                   u1 * v1 + u2 * v2, v1 * w1 + v2 * w2);
    return m;
}

}  // namespace

TEST_SUITE("graded") {
    TEST_CASE("composition") {
        const int nv = 2;
        GradedMatrix<Rational> f(Twists{0}, Twists{1}, nv), g(Twists{1}, Twists{2}, nv);
        f(0, 0) = x(nv, 1);
        g(0, 0) = x(nv, 0);
        const auto h = graded_compose(g, f);
        CHECK(h(0, 0) == x(nv, 0) * x(nv, 1));
        CHECK(h.source == Twists{0});
        CHECK(h.target == Twists{2});

        GradedMatrix<Rational> id(Twists{1}, Twists{1}, nv);
        id(0, 0) = konst(nv, 1);
        CHECK(same_entries(graded_compose(id, f).entries, f.entries));
        CHECK_THROWS_AS(graded_compose(f, f), Error);
    }

    TEST_CASE("degree validation") {
        const int nv = 3;
        GradedMatrix<Rational> m(Twists{0, 0}, Twists{1, 2}, nv);
        CHECK(graded_validate(m).empty());
        m(0, 0) = x(nv, 0) * x(nv, 1);
        const auto v = graded_validate(m);
        REQUIRE(v.size() == 1);
        CHECK(v[0].row == 0);
        CHECK(v[0].col == 0);
        CHECK(v[0].expected == 1);
        CHECK(v[0].actual == 2);
        m(0, 0) = x(nv, 2);
        m(1, 1) = x(nv, 0) * x(nv, 2);
        CHECK(graded_validate(m).empty());
        CHECK(graded_validate(linear_m()).empty());
    }

    TEST_CASE("rank at a point") {
        const int nv = 4;
        GradedMatrix<Rational> z(Twists(3, 0), Twists(3, 1), nv);
        CHECK(rank_at_point(z, {Rational(1), Rational(2), Rational(3), Rational(4)}) == 0);
        GradedMatrix<Rational> d(Twists(2, 0), Twists(2, 1), nv);
        d(0, 0) = x(nv, 0);
        d(1, 1) = x(nv, 0);
        CHECK(rank_at_point(d, {Rational(1), Rational(0), Rational(0), Rational(0)}) == 2);
        const auto m = q_zero_m();
        CHECK(rank_at_point(m, {Rational(1), Rational(1), Rational(1), Rational(1)}) == 2);
        CHECK(rank_at_point(m, {Rational(1), Rational(0), Rational(0), Rational(0)}) == 0);
        CHECK_THROWS_AS(rank_at_point(m, {Rational(1)}), Error);
    }

    TEST_CASE("generic rank") {
        const auto f7 = FieldSpec::prime(7);
        GradedMatrix<Zp> z(Twists(4, 0), Twists(4, 1), 4);
        CHECK(generic_rank(z, 10, 1, f7) == 0);
        const auto phi = make_rank2n_phi<Zp>(1, Twists(4, 1), f7, 4, 3);
        CHECK(generic_rank(phi, 20, 1, f7) == 2);
        GradedMatrix<Zp> g(Twists(4, 0), Twists(4, 1), 4);
        g.entries = antisym4<Zp>(xp(4, 0, 7), xp(4, 1, 7), xp(4, 2, 7), xp(4, 3, 7), xp(4, 0, 7), xp(4, 1, 7));
        CHECK(generic_rank(g, 20, 1, f7) == 4);
    }
}

TEST_SUITE("pfaffian") {
    TEST_CASE("base cases and the 4x4 formula") {
        const int nv = 2;
        GradedMatrix<Rational> a(Twists(2, 0), Twists(2, 1), nv);
        a(0, 1) = x(nv, 0);
        a(1, 0) = -x(nv, 0);
        CHECK(pfaffian(a) == x(nv, 0));

        const auto m = linear_m();
        const auto& s = m.entries;
        const auto expected = s(0, 1) * s(2, 3) - s(0, 2) * s(1, 3) + s(0, 3) * s(1, 2);
        CHECK(pfaffian(m) == expected);
        CHECK(sub_pfaffian(m, {0, 1}) == s(2, 3));
        CHECK(sub_pfaffian(m, {}) == pfaffian(m));
        CHECK(pfaffian(q_zero_m()).is_zero());
    }

    TEST_CASE("errors") {
        auto m = linear_m();
        CHECK_THROWS_AS(sub_pfaffian(m, {0}), Error);
        CHECK_THROWS_AS(sub_pfaffian(m, {0, 0}), Error);
        CHECK_THROWS_AS(sub_pfaffian(m, {0, 7}), Error);
        m(1, 0) = x(4, 0);
        CHECK_THROWS_AS(pfaffian(m), Error);
        GradedMatrix<Rational> odd(Twists(3, 0), Twists(3, 0), 2);
        try {
            pfaffian(odd);
            FAIL("expected OddSize");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::OddSize);
        }
    }

    TEST_CASE("pf squared equals det on scalar matrices") {
        std::mt19937_64 rng(17);
        for (int n = 2; n <= 8; n += 2)
            for (int t = 0; t < 10; ++t) {
                ScalarMatrix<Rational> a = ScalarMatrix<Rational>::Zero(n, n);
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j) {
                        a(i, j) = Rational(static_cast<long>(rng() % 11) - 5);
                        a(j, i) = -a(i, j);
                    }
                const Rational pf = pfaffian_of(a);
                CHECK(pf * pf == leibniz_det<Rational>(a));
            }
    }

    TEST_CASE("symplectic gram matrices") {
        const int nv = 4;
        FormMatrix<Rational> sigma = FormMatrix<Rational>::Constant(2, 4, Form<Rational>(0));
        sigma(0, 0) = konst(nv, 1);
        sigma(1, 1) = konst(nv, 1);
        const auto s = symplectic_gram(sigma, 1);
        CHECK(s(0, 1) == konst(nv, 1));
        CHECK(s(1, 0) == konst(nv, -1));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (!((i == 0 && j == 1) || (i == 1 && j == 0))) CHECK(s(i, j).is_zero());

        std::mt19937_64 rng(2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 4; ++j) sigma(i, j) = konst(nv, static_cast<long>(rng() % 5) - 2);
        GradedMatrix<Rational> phi(Twists(4, 0), Twists(4, 0), nv);
        phi.entries = symplectic_gram(sigma, 1);
        CHECK(pfaffian(phi).is_zero());
    }

    TEST_CASE("every 6-pfaffian of a rank-4 phi vanishes") {
        const auto f7 = FieldSpec::prime(7);
        const auto phi = make_rank2n_phi<Zp>(2, Twists(8, 1), f7, 6, 9);
        CHECK(all_pfaffians_vanish(phi, 6));
        CHECK_FALSE(all_pfaffians_vanish(phi, 4));
        CHECK(graded_validate(phi).empty());
    }

    TEST_CASE("psi for the Binet-Cauchy M is its pfaffian adjugate") {
        const auto m = q_zero_m();
        const auto psi = make_psi(m, 1);
        const auto& s = m.entries;
        REQUIRE(psi.rows() == 4);
        // row {1}: [0, S34, -S24, S23]; row {2}: [-S34, 0, S14, -S13]
        CHECK(psi(0, 0).is_zero());
        CHECK(psi(0, 1) == s(2, 3));
        CHECK(psi(0, 2) == -s(1, 3));
        CHECK(psi(0, 3) == s(1, 2));
        CHECK(psi(1, 0) == -s(2, 3));
        CHECK(psi(1, 2) == s(0, 3));
        CHECK(psi(1, 3) == -s(0, 2));
        CHECK(is_zero_matrix(graded_compose(psi, m).entries));
        CHECK(is_zero_matrix(FormMatrix<Rational>(m.entries * psi.entries)));
        CHECK(graded_validate(psi).empty());
    }

    TEST_CASE("psi of a constant rank-2 phi") {
        const int nv = 4;
        GradedMatrix<Rational> phi(Twists(4, 0), Twists(4, 0), nv);
        phi(0, 1) = konst(nv, 1);
        phi(1, 0) = konst(nv, -1);
        const auto psi = make_psi(phi, 1);
        CHECK(is_zero_matrix(graded_compose(psi, phi).entries));
        CHECK(psi(2, 3) == konst(nv, 1));
    }

    TEST_CASE("psi rejects phi of rank above 2n") {
        const auto m = linear_m();
        GradedMatrix<Rational> g(Twists(4, 0), Twists(4, 1), 4);
        g.entries = m.entries;
        CHECK_THROWS_AS(make_psi(g, 1), Error);
    }

    TEST_CASE("expansion identity") {
        const auto f7 = FieldSpec::prime(7);
        const auto phi = make_rank2n_phi<Zp>(1, Twists(4, 1), f7, 4, 21);
        for (int i = 0; i < 4; ++i) CHECK(expansion_identity(phi, {}, i).is_zero());
        const auto phi2 = make_rank2n_phi<Zp>(2, Twists(8, 0), f7, 6, 4);
        for (const auto& l : combinations(8, 2))
            for (int i = 0; i < 8; ++i)
                if (std::find(l.begin(), l.end(), i) == l.end()) CHECK(expansion_identity(phi2, l, i).is_zero());
    }

    TEST_CASE("combinatorics") {
        CHECK(combinations(4, 2).size() == 6);
        CHECK(combinations(8, 3).size() == 56);
        CHECK(combinations(4, 2).front() == std::vector<int>{0, 1});
        CHECK(combinations(4, 2).back() == std::vector<int>{2, 3});
        CHECK(permutation_sign({0, 1, 2}) == 1);
        CHECK(permutation_sign({1, 0, 2}) == -1);
        CHECK(permutation_sign({2, 0, 1}) == 1);
    }
}
