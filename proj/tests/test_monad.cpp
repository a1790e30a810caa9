#include "support.hpp"

#include "projkit/monad.hpp"
#include "projkit/symplectic.hpp"

#include <set>

using namespace projkit;
using namespace testing;

namespace {

// Exhaustive scan over all nonzero vectors of F_p^nvars, independent of the normalized enumeration.
bool naive_has_common_zero(const std::vector<Form<Rational>>& forms, std::uint32_t p, int nvars) {
    std::vector<std::int64_t> v(nvars, 0);
    while (true) {
        int i = 0;
        while (i < nvars && ++v[i] == p) v[i++] = 0;
        if (i == nvars) return false;
        std::vector<Zp> pt;
        for (auto c : v) pt.emplace_back(c, p);
        if (std::all_of(forms.begin(), forms.end(), [&](const auto& f) { return reduce_mod(f, p).eval(pt).is_zero(); }))
            return true;
    }
}

std::vector<Form<Rational>> cubes() {
    std::vector<Form<Rational>> g;
    for (int i = 0; i < 4; ++i) g.push_back(power(x(4, i), 3));
    return g;
}

}  // namespace

TEST_SUITE("monad") {
    TEST_CASE("null-correlation monad with cubes") {
        const auto l = build_ledger({1, 0, 0, 3});
        CHECK(l.g_degrees == std::vector<long>{3, 3, 3, 3});
        MonadData m{monad_column(cubes(), 4), antidiagonal_form({Rational(-1), Rational(-1)}), l};
        CHECK(m.f(0, 3) == Rational(-1));
        CHECK(m.f(3, 0) == Rational(1));
        const auto rep = verify_monad(m);
        CHECK(rep.ok());
        CHECK(rep.composition_zero);
        CHECK(rep.f_antisymmetric);
        CHECK(rep.f_nondegenerate);
        CHECK(rep.quotient_rank == 3);
        CHECK(rep.null_correlation_rank == 2);
    }

    TEST_CASE("composition cancels for any antisymmetric f") {
        std::mt19937_64 rng(4);
        std::vector<Form<Rational>> g;
        for (int i = 0; i < 6; ++i) g.push_back(random_form<Rational>(6, 1 + i % 3, FieldSpec::rationals(), rng));
        ScalarMatrix<Rational> f = ScalarMatrix<Rational>::Zero(6, 6);
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j) {
                f(i, j) = Rational(static_cast<long>(rng() % 7) - 3);
                f(j, i) = -f(i, j);
            }
        CHECK(monad_composition(g, f).empty());
        f(0, 1) += Rational(1);
        CHECK_FALSE(monad_composition(g, f).empty());
    }

    TEST_CASE("wrong degrees and degenerate f are reported") {
        const auto l = build_ledger({1, 0, 0, 3});
        auto g = cubes();
        g[2] = power(x(4, 2), 2);
        MonadData m{monad_column(g, 4), antidiagonal_form({Rational(1), Rational(1)}), l};
        auto rep = verify_monad(m);
        CHECK_FALSE(rep.ok());
        CHECK_FALSE(rep.degree_failures.empty());
        CHECK(rep.degree_failures.back().row == 2);

        MonadData d{monad_column(cubes(), 4), ScalarMatrix<Rational>::Zero(4, 4), l};
        rep = verify_monad(d);
        CHECK_FALSE(rep.f_nondegenerate);
        CHECK_FALSE(rep.ok());
    }

    TEST_CASE("projective enumeration") {
        CHECK(projective_point_count(5, 4) == 156);
        CHECK(projective_point_count(5, 5) == 781);
        CHECK(projective_point_count(2, 3) == 7);
        std::set<std::vector<std::int64_t>> seen;
        const long total = projective_point_count(3, 4);
        for (long k = 0; k < total; ++k) {
            const auto pt = projective_point(3, 4, k);
            const auto lead = std::find_if(pt.begin(), pt.end(), [](auto c) { return c != 0; });
            REQUIRE(lead != pt.end());
            CHECK(*lead == 1);
            seen.insert(pt);
        }
        CHECK(static_cast<long>(seen.size()) == total);
        CHECK_THROWS_AS(projective_point(3, 4, total), Error);
    }

    TEST_CASE("coordinates have no common zero") {
        std::vector<Form<Rational>> xs;
        for (int i = 0; i < 4; ++i) xs.push_back(x(4, i));
        const auto c = zero_locus_certificate(xs, 2, 4);
        CHECK(c.empty());
        CHECK(c.points_scanned == 15);
        CHECK(c.points_total == 15);
    }

    TEST_CASE("common zero witness") {
        const std::vector<Form<Rational>> forms{x(4, 0) * x(4, 1), x(4, 0) * x(4, 2)};
        const auto c = zero_locus_certificate(forms, 2, 4);
        REQUIRE_FALSE(c.empty());
        std::vector<Rational> pt;
        for (auto v : *c.witness) pt.emplace_back(static_cast<long>(v));
        for (const auto& f : forms) CHECK(f.eval(pt).is_zero());
        CHECK(*c.witness == std::vector<std::int64_t>{0, 0, 0, 1});
    }

    TEST_CASE("scan agrees with a naive search and is thread-count invariant") {
        std::mt19937_64 rng(12);
        for (int t = 0; t < 12; ++t) {
            std::vector<Form<Rational>> forms;
            for (int k = 0; k < 3; ++k) forms.push_back(random_form<Rational>(4, 2, FieldSpec::rationals(), rng));
            for (std::uint32_t p : {2u, 3u, 5u}) {
                const auto one = zero_locus_certificate(forms, p, 4, 1);
                const auto four = zero_locus_certificate(forms, p, 4, 4);
                CHECK(one.empty() == !naive_has_common_zero(forms, p, 4));
                CHECK(one.witness == four.witness);
            }
        }
        CHECK_THROWS_AS(zero_locus_certificate(std::vector<Form<Rational>>{x(2, 0)}, 4, 2), Error);
    }

    TEST_CASE("several primes") {
        const auto certs = zero_locus_certificates(cubes(), {2, 3, 5, 7}, 4);
        REQUIRE(certs.size() == 4);
        for (const auto& c : certs) CHECK(c.empty());
        CHECK(certs[3].points_total == 400);
    }
}
