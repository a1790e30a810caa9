#include "support.hpp"

#include "projkit/kpr.hpp"

using namespace projkit;
using namespace testing;

namespace {

Form<Rational> zpow(int nv, int eps) {
    Exponent e(nv, 0);
    e[nv - 1] = eps;
    return Form<Rational>::monomial(e, Rational(1));
}

std::vector<long> first_b(long n) {
    std::vector<long> b;
    for (long i = 1; i <= 2 * n - 1; ++i) b.push_back(i);
    return b;
}

bool has_check(const KprReport& r, const std::string& name) {
    return std::any_of(r.checks.begin(), r.checks.end(), [&](const NamedCheck& c) { return c.name == name; });
}

}  // namespace

TEST_SUITE("kpr") {
    TEST_CASE("assembly with zero blocks") {
        GradedMatrix<Rational> phi(Twists(4, 0), Twists(4, 0), 4), psi(Twists(4, 0), Twists(4, 0), 4);
        const auto d = assemble_delta(phi, psi, 3);
        CHECK(d.rows() == 8);
        CHECK(d.cols() == 8);
        CHECK(d.num_vars == 5);
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) {
                if (i == j && i < 4) CHECK(d(i, j) == zpow(5, 3));
                else CHECK(d(i, j).is_zero());
            }
        CHECK(graded_validate(d).empty());
    }

    TEST_CASE("assembly errors") {
        GradedMatrix<Rational> phi(Twists(4, 0), Twists(4, 0), 4), psi(Twists(4, 0), Twists(4, 0), 4);
        CHECK_THROWS_AS(assemble_delta(phi, psi, 0), Error);
        GradedMatrix<Rational> off(Twists(4, 1), Twists(4, 0), 4);
        try {
            assemble_delta(phi, off, 1);
            FAIL("expected TwistMismatch");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::TwistMismatch);
        }
        phi(0, 1) = konst(4, 1);
        phi(1, 0) = konst(4, -1);
        psi(0, 0) = konst(4, 1);
        try {
            assemble_delta(phi, psi, 1);
            FAIL("expected CompositionNonzero");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::CompositionNonzero);
        }
    }

    TEST_CASE("merging columns and rows") {
        GradedMatrix<Rational> m(Twists{0, 0, 1}, Twists{1, 1}, 2);
        m(0, 0) = x(2, 0);
        m(0, 1) = x(2, 1);
        const auto c = merge_source_pair(m, 0, 1);
        CHECK(c(0, 0) == x(2, 0) + x(2, 1));
        CHECK(c.source == Twists{0});
        CHECK_THROWS_AS(merge_source_pair(m, 0, 2), Error);
        const auto r = merge_target_pair(m, 0, 1);
        CHECK(r(0, 1) == x(2, 1));
        CHECK_THROWS_AS(merge_target_pair(m, 0, 5), Error);
    }

    TEST_CASE("Binet-Cauchy family with linear inputs") {
        BinetCauchyForms<Rational> f;
        f.t = {x(4, 0), x(4, 1)};
        f.w = {x(4, 2), x(4, 3)};
        f.u = {x(4, 1), x(4, 0)};
        f.v = {x(4, 3), x(4, 2)};
        const auto fam = binet_cauchy_family(f, 1, 1, 1, 4);
        CHECK(fam.s(0, 2) == x(4, 0) * x(4, 2) + x(4, 1) * x(4, 3));
        CHECK(check_binet_cauchy(fam).all());
    }

    TEST_CASE("Binet-Cauchy family with constant inputs") {
        BinetCauchyForms<Rational> f;
        f.t = {konst(4, 1), Form<Rational>(4, 0)};
        f.w = {konst(4, 1), Form<Rational>(4, 0)};
        f.u = {Form<Rational>(4, 0), konst(4, 1)};
        f.v = {Form<Rational>(4, 0), konst(4, 1)};
        const auto fam = binet_cauchy_family(f, 0, 0, 0, 4);
        CHECK(fam.s(0, 2) == konst(4, 1));
        CHECK(fam.s(1, 3) == konst(4, 1));
        CHECK(fam.s(0, 1).is_zero());
        CHECK(fam.s(2, 3).is_zero());
        CHECK(pfaffian(fam.m).is_zero());
    }

    TEST_CASE("random Binet-Cauchy families over F_5") {
        std::mt19937_64 rng(50);
        const auto f5 = FieldSpec::prime(5);
        for (int t = 0; t < 50; ++t) {
            const auto forms = random_binet_cauchy_forms<Zp>(1, 1, 1, f5, 4, rng);
            CHECK(check_binet_cauchy(binet_cauchy_family(forms, 1, 1, 1, 4)).all());
        }
        CHECK_THROWS_AS(binet_cauchy_family(random_binet_cauchy_forms<Zp>(1, 1, 1, f5, 4, rng), 2, 1, 1, 4), Error);
    }

    TEST_CASE("tau and delta on the diagonal instance") {
        const auto fam = seeded_binet_cauchy_family(1, 1, 1, 6);
        const auto bd = binet_cauchy_delta(fam, 2);
        const int nv = 5;
        auto s = [&](int i, int j) { return fam.s(i - 1, j - 1).with_extra_variables(1); };
        const auto tau = extract_tau(bd.delta);
        const std::vector<Form<Rational>> want_tau{zpow(nv, 2), s(1, 2), s(1, 3), s(1, 4),
                                                   Form<Rational>(0), s(3, 4), -s(2, 4), s(2, 3)};
        REQUIRE(tau.cols() == 1);
        for (int i = 0; i < 8; ++i) CHECK(tau(i, 0) == want_tau[i]);
        const auto delta = extract_delta_row(bd.delta);
        const std::vector<Form<Rational>> want_delta{s(2, 3), -s(1, 3), s(1, 2), zpow(nv, 2),
                                                     s(1, 4), s(2, 4), s(3, 4), Form<Rational>(0)};
        REQUIRE(delta.rows() == 1);
        for (int j = 0; j < 8; ++j) CHECK(delta(0, j) == want_delta[j]);
        CHECK_THROWS_AS(extract_tau(binet_cauchy_delta(fam, 3).delta), Error);
    }

    TEST_CASE("weighted extraction at n = 1") {
        const auto l = build_ledger({1, 0, 0, 1});
        const auto phi = ledger_phi<Rational>(l, FieldSpec::rationals(), 3);
        const auto psi = make_psi(phi, 1);
        const auto d1 = assemble_delta(phi, psi, l.epsilon1);
        const auto bar = extract_mu_bar(d1, l, {1}, l.epsilon1);
        CHECK(bar.merged == std::vector<std::pair<int, int>>{{0, 7}});
        CHECK(graded_validate(bar.matrix).empty());
        CHECK_THROWS_AS(extract_mu_bar(d1, l, {1}, l.epsilon1 + 1), Error);

        const auto mu = extract_mu(d1, l, {1}, l.epsilon2);
        REQUIRE(mu.psi_rows.size() == 1);
        CHECK(admissible_psi_row(mu.psi_rows[0], 1, 1));
        CHECK(graded_validate(mu.matrix).empty());
        CHECK_THROWS_AS(extract_mu(d1, l, {1, 2}, l.epsilon2), Error);
    }

    TEST_CASE("weighted extraction at n = 2") {
        const auto l = build_ledger({2, 0, 0, 1});
        const auto phi = ledger_phi<Rational>(l, FieldSpec::rationals(), 1);
        const auto psi = make_psi(phi, 2);
        const auto d = assemble_delta(phi, psi, l.epsilon2);
        CHECK(d.rows() == 8 + 56);
        CHECK(d.cols() == 16);
        const auto mu = extract_mu(d, l, {1, 2, 3}, l.epsilon2);
        REQUIRE(mu.psi_rows.size() == 3);
        for (std::size_t k = 0; k < 3; ++k) CHECK(admissible_psi_row(mu.psi_rows[k], static_cast<long>(k + 1), 2));
        for (int x0 : mu.psi_rows[0])
            CHECK(std::find(mu.psi_rows[1].begin(), mu.psi_rows[1].end(), x0) == mu.psi_rows[1].end());
        CHECK(graded_validate(mu.matrix).empty());
        const auto z = zpow(d.num_vars, static_cast<int>(l.epsilon2));
        for (Eigen::Index r = 0; r < mu.matrix.rows(); ++r) {
            bool found = false;
            for (Eigen::Index c = 0; c < mu.matrix.cols(); ++c)
                found = found || !mu.matrix(r, c).coeff(z.terms().begin()->first).is_zero();
            CHECK(found);
        }
    }

    TEST_CASE("admissible psi rows") {
        CHECK(admissible_psi_row({3}, 1, 1));
        CHECK_FALSE(admissible_psi_row({2}, 1, 1));
        CHECK(admissible_psi_row({0, 6, 7}, 2, 2));
        CHECK_FALSE(admissible_psi_row({0, 5, 6}, 2, 2));
    }

    TEST_CASE("P^4 pairs") {
        const auto l = build_ledger({1, 0, 0, 1});
        const CertificateConfig cfg{{2}, 1};
        const auto r3 = p4_epsilon_construction(l, 3, 1, cfg);
        CHECK(has_check(r3, "columns 1 + 5 contains z^eps"));
        CHECK(has_check(r3, "rows 4 + 8 contains z^eps"));
        CHECK(r3.checks_passed());
        const auto r6 = p4_epsilon_construction(l, 6, 1, cfg);
        CHECK(has_check(r6, "columns 4 + 8 contains z^eps"));
        CHECK(has_check(r6, "rows 1 + 5 contains z^eps"));
        CHECK_THROWS_AS(p4_epsilon_construction(build_ledger({1, 3, 0, 1}), 6, 1, cfg), Error);
        CHECK_THROWS_AS(p4_epsilon_construction(l, 7, 1, cfg), Error);
        CHECK_THROWS_AS(p4_epsilon_construction(build_ledger({2, 0, 0, 1}), 3, 1, cfg), Error);
    }

    TEST_CASE("weighted constructions report their checks") {
        const auto l = build_ledger({1, 0, 0, 1});
        const CertificateConfig cfg{{2, 3}, 2};
        for (int part : {1, 2}) {
            const auto rep = weighted_kpr_construction(l, part, first_b(1), 5, cfg);
            CHECK(rep.checks_passed());
            CHECK_FALSE(rep.certificates.empty());
            REQUIRE(rep.invariants);
            CHECK(rep.invariants->all_agree());
            CHECK(rep.verdict().rfind(rep.certified() ? "certified" : "checks passed", 0) == 0);
        }
    }

    TEST_CASE("certified Binet-Cauchy instance") {
        const auto seed = find_zero_free_seed(1, 1, 1, 5, 1, 20);
        REQUIRE(seed);
        const auto rep = binet_cauchy_construction(1, 1, 1, *seed, CertificateConfig{{5}, 2});
        CHECK(rep.checks_passed());
        CHECK(rep.certified());
        CHECK(rep.verdict() == "certified at primes {5}");
        REQUIRE(rep.extracted.size() == 4);
        CHECK(rep.extracted[2].first == "tau");
        CHECK(rep.extracted[3].first == "delta");
    }

    TEST_CASE("verdicts") {
        KprReport r;
        r.primes = {2, 3};
        r.checks.push_back({"a", true, ""});
        CHECK(r.verdict() == "checks passed; no zero-locus certificates");
        ZeroCertificate empty;
        empty.prime = 2;
        ZeroCertificate hit;
        hit.prime = 3;
        hit.witness = std::vector<std::int64_t>{0, 1};
        r.certificates.push_back({"col", 2, {empty, hit}});
        CHECK(r.verdict() == "checks passed; common zero found for [col over F_3]");
        r.certificates.back().per_prime = {empty, empty};
        CHECK(r.verdict() == "certified at primes {2, 3}");
        r.checks.push_back({"b", false, ""});
        CHECK(r.verdict() == "failed: [b]");
    }
}
