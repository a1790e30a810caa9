#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "projkit/chern.hpp"
#include "projkit/monad.hpp"
#include "projkit/pfaffian.hpp"
#include "projkit/weights.hpp"

namespace projkit {

namespace detail {
template <class K>
FieldSpec field_of_entries(const FormMatrix<K>& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) return ScalarOps<K>::field_of(m(i, j).terms().begin()->second);
    return FieldSpec::rationals();
}

template <class K>
K one_like(const FieldSpec& f) {
    if constexpr (std::is_same_v<K, Zp>) {
        return f.kind == FieldSpec::Kind::PrimeField ? Zp(1, f.characteristic) : Zp(1);
    } else {
        return K(1);
    }
}
}  // namespace detail

// [[z^eps I, Phi], [Psi, 0]] with z adjoined as the last variable.
// Source twists (Phi.target - eps) ++ Phi.source, target Phi.target ++ (Psi.target - eps).
template <class K>
GradedMatrix<K> assemble_delta(const GradedMatrix<K>& phi, const GradedMatrix<K>& psi, long eps) {
    if (eps < 1) throw Error(ErrorKind::DegreeInfeasible, "epsilon must be positive");
    if (psi.source != phi.target) throw Error(ErrorKind::TwistMismatch, "source of Psi differs from target of Phi");
    if (!is_zero_matrix(graded_compose(psi, phi).entries))
        throw Error(ErrorKind::CompositionNonzero, "Psi * Phi is not zero");

    const Eigen::Index r = phi.rows(), c = phi.cols(), q = psi.rows();
    const int nv = phi.num_vars + 1;
    Twists source, target;
    for (long t : phi.target) source.push_back(t - eps);
    source.insert(source.end(), phi.source.begin(), phi.source.end());
    target = phi.target;
    for (long t : psi.target) target.push_back(t - eps);

    GradedMatrix<K> delta(source, target, nv);
    const FieldSpec field = detail::field_of_entries(phi.entries);
    Exponent ze(nv, 0);
    ze[nv - 1] = static_cast<int>(eps);
    const Form<K> zpow = Form<K>::monomial(ze, detail::one_like<K>(field));
    for (Eigen::Index i = 0; i < r; ++i) delta(i, i) = zpow;
    for (Eigen::Index i = 0; i < r; ++i)
        for (Eigen::Index j = 0; j < c; ++j)
            if (!phi(i, j).is_zero()) delta(i, r + j) = phi(i, j).lifted(phi.num_vars).with_extra_variables(1);
    for (Eigen::Index i = 0; i < q; ++i)
        for (Eigen::Index j = 0; j < r; ++j)
            if (!psi(i, j).is_zero()) delta(r + i, j) = psi(i, j).lifted(psi.num_vars).with_extra_variables(1);
    if (!graded_validate(delta).empty()) throw Error(ErrorKind::DegreeInfeasible, "assembled matrix is not graded");
    return delta;
}

// Sum of columns i and j (0-based); their source twists must agree.
template <class K>
GradedMatrix<K> merge_source_pairs(const GradedMatrix<K>& m, const std::vector<std::pair<int, int>>& pairs) {
    Twists source;
    for (auto [i, j] : pairs) {
        if (i < 0 || j < 0 || i >= m.cols() || j >= m.cols()) throw Error(ErrorKind::IndexOutOfRange, "column index");
        if (m.source[i] != m.source[j])
            throw Error(ErrorKind::HomogeneityViolated, "columns " + std::to_string(i + 1) + " and " +
                                                            std::to_string(j + 1) + " have twists " +
                                                            std::to_string(m.source[i]) + " and " + std::to_string(m.source[j]));
        source.push_back(m.source[i]);
    }
    GradedMatrix<K> out(source, m.target, m.num_vars);
    for (std::size_t k = 0; k < pairs.size(); ++k)
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            Form<K> s = m(r, pairs[k].first) + m(r, pairs[k].second);
            if (!s.is_zero()) out(r, static_cast<Eigen::Index>(k)) = s.lifted(m.num_vars);
        }
    return out;
}

// Sum of rows i and j (0-based); their target twists must agree.
template <class K>
GradedMatrix<K> merge_target_pairs(const GradedMatrix<K>& m, const std::vector<std::pair<int, int>>& pairs) {
    Twists target;
    for (auto [i, j] : pairs) {
        if (i < 0 || j < 0 || i >= m.rows() || j >= m.rows()) throw Error(ErrorKind::IndexOutOfRange, "row index");
        if (m.target[i] != m.target[j])
            throw Error(ErrorKind::HomogeneityViolated, "rows " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                                            " have twists " + std::to_string(m.target[i]) + " and " +
                                                            std::to_string(m.target[j]));
        target.push_back(m.target[i]);
    }
    GradedMatrix<K> out(m.source, target, m.num_vars);
    for (std::size_t k = 0; k < pairs.size(); ++k)
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            Form<K> s = m(pairs[k].first, c) + m(pairs[k].second, c);
            if (!s.is_zero()) out(static_cast<Eigen::Index>(k), c) = s.lifted(m.num_vars);
        }
    return out;
}

template <class K>
GradedMatrix<K> merge_source_pair(const GradedMatrix<K>& m, int i, int j) { return merge_source_pairs(m, {{i, j}}); }
template <class K>
GradedMatrix<K> merge_target_pair(const GradedMatrix<K>& m, int i, int j) { return merge_target_pairs(m, {{i, j}}); }

// ---- Binet-Cauchy family ------------------------------------------------

template <class K>
struct BinetCauchyForms {
    std::array<Form<K>, 2> t, w, v, u;
};

template <class K>
struct BinetCauchyFamily {
    GradedMatrix<K> m;  // F -> F*(c1B), entry (i,j) = S_ij above the diagonal
    GradedMatrix<K> n;  // pfaffian adjugate of m
    BinetCauchyDegrees degrees;
    FormMatrix<K> s;    // S_ij, antisymmetric, same as m.entries
};

template <class K>
BinetCauchyFamily<K> binet_cauchy_family(const BinetCauchyForms<K>& f, long w1, long w2, long v2, int nvars,
                                         long a1 = 0) {
    const BinetCauchyDegrees d = binet_cauchy_degree_table(w1, w2, v2, a1);
    auto expect = [&](const Form<K>& g, long deg, const char* name) {
        if (!g.is_zero() && g.degree() != deg)
            throw Error(ErrorKind::DegreeConstraintViolated,
                        std::string(name) + " has degree " + std::to_string(g.degree()) + ", expected " + std::to_string(deg));
        return g.lifted(nvars);
    };
    const Form<K> t1 = expect(f.t[0], d.t1, "T1"), t2 = expect(f.t[1], d.t2, "T2");
    const Form<K> w1f = expect(f.w[0], d.w1, "W1"), w2f = expect(f.w[1], d.w2, "W2");
    const Form<K> v1 = expect(f.v[0], d.v1, "V1"), v2f = expect(f.v[1], d.v2, "V2");
    const Form<K> u1 = expect(f.u[0], d.u1, "U1"), u2 = expect(f.u[1], d.u2, "U2");

    FormMatrix<K> s = FormMatrix<K>::Constant(4, 4, Form<K>(0));
    auto put = [&](int i, int j, const Form<K>& x) {
        s(i, j) = x;
        s(j, i) = -x;
    };
    put(0, 2, t1 * w1f + t2 * w2f);
    put(1, 3, u1 * v1 + u2 * v2f);
    put(0, 1, t1 * u1 + t2 * u2);
    put(2, 3, v1 * w1f + v2f * w2f);
    put(0, 3, t1 * v2f - t2 * v1);
    put(1, 2, u2 * w1f - u1 * w2f);

    const long c1b = 3 * w2 - w1 + 2 * a1;
    Twists target;
    for (long a : d.f_twists) target.push_back(c1b - a);
    BinetCauchyFamily<K> fam;
    fam.degrees = d;
    fam.m = GradedMatrix<K>(d.f_twists, target, nvars);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (!s(i, j).is_zero()) fam.m(i, j) = s(i, j).lifted(nvars);
    fam.s = fam.m.entries;
    if (!graded_validate(fam.m).empty()) throw Error(ErrorKind::DegreeConstraintViolated, "S_ij degrees do not fit the twists");
    fam.n = make_psi(fam.m, 1);
    return fam;
}

template <class K>
BinetCauchyForms<K> random_binet_cauchy_forms(long w1, long w2, long v2, const FieldSpec& field, int nvars,
                                              std::mt19937_64& rng) {
    const BinetCauchyDegrees d = binet_cauchy_degree_table(w1, w2, v2);
    auto r = [&](long deg) { return random_form<K>(nvars, static_cast<int>(deg), field, rng); };
    BinetCauchyForms<K> f;
    f.t = {r(d.t1), r(d.t2)};
    f.w = {r(d.w1), r(d.w2)};
    f.v = {r(d.v1), r(d.v2)};
    f.u = {r(d.u1), r(d.u2)};
    return f;
}

struct BinetCauchyChecks {
    bool pfaffian_zero = false;
    bool mn_zero = false;
    bool nm_zero = false;
    bool degrees_valid = false;
    bool all() const { return pfaffian_zero && mn_zero && nm_zero && degrees_valid; }
};

template <class K>
BinetCauchyChecks check_binet_cauchy(const BinetCauchyFamily<K>& fam) {
    BinetCauchyChecks c;
    c.pfaffian_zero = pfaffian(fam.m).is_zero();
    FormMatrix<K> mn = fam.m.entries * fam.n.entries;
    FormMatrix<K> nm = fam.n.entries * fam.m.entries;
    c.mn_zero = is_zero_matrix(mn);
    c.nm_zero = is_zero_matrix(nm);
    c.degrees_valid = graded_validate(fam.m).empty() && graded_validate(fam.n).empty();
    return c;
}

// Phi = -M (= M^T) with Psi its pfaffian adjugate, assembled with z^eps.
template <class K>
struct BinetCauchyDelta {
    GradedMatrix<K> phi, psi, delta;
    long eps = 0;
};

template <class K>
BinetCauchyDelta<K> binet_cauchy_delta(const BinetCauchyFamily<K>& fam, long eps) {
    BinetCauchyDelta<K> out;
    out.eps = eps;
    out.phi = fam.m;
    out.phi.entries = -fam.m.entries;
    out.psi = make_psi(out.phi, 1);
    out.delta = assemble_delta(out.phi, out.psi, eps);
    return out;
}

// Column pair (1,5) and row pair (4,8) of the rank-3 lift.
template <class K>
GradedMatrix<K> extract_tau(const GradedMatrix<K>& delta) { return merge_source_pair(delta, 0, 4); }
template <class K>
GradedMatrix<K> extract_delta_row(const GradedMatrix<K>& delta) { return merge_target_pair(delta, 3, 7); }

// ---- weighted construction ---------------------------------------------

// Phi with target twists zeta and source -zeta - hbar1, entries S_i ^ S_j of degree zeta_i + zeta_j + hbar1.
// Throws DegreeInfeasible when 2 min(zeta) + hbar1 < 0.
template <class K>
GradedMatrix<K> ledger_phi(const DegreeLedger& l, const FieldSpec& field, std::uint64_t seed) {
    const long k = *std::min_element(l.zetas.begin(), l.zetas.end());
    if (2 * k + l.hbar1 < 0) throw Error(ErrorKind::DegreeInfeasible, "2 min(zeta) + hbar1 < 0");
    Twists sd;
    for (long z : l.zetas) sd.push_back(z - k);
    const int n = static_cast<int>(l.params.n);
    return retwisted(make_rank2n_phi<K>(n, sd, field, 2 * n + 2, seed, l.hbar1 + 2 * k), k);
}

template <class K>
struct Extraction {
    GradedMatrix<K> matrix;
    std::vector<std::pair<int, int>> merged;  // 0-based
    std::vector<std::vector<int>> psi_rows;   // index set L of each selected psi row (mu only), 0-based
};

inline void require_b_indices(const DegreeLedger& l, const std::vector<long>& b) {
    const long n = l.params.n;
    if (static_cast<long>(b.size()) != 2 * n - 1)
        throw Error(ErrorKind::InvalidParams, "need 2n-1 indices b, got " + std::to_string(b.size()));
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i] < 1 || b[i] > 4 * n) throw Error(ErrorKind::IndexOutOfRange, "b index " + std::to_string(b[i]));
        if (i > 0 && b[i] <= b[i - 1]) throw Error(ErrorKind::InvalidParams, "b indices must increase strictly");
    }
}

// Columns b and 8n+1-b summed, for eps = eps1.
template <class K>
Extraction<K> extract_mu_bar(const GradedMatrix<K>& delta, const DegreeLedger& l, const std::vector<long>& b, long eps) {
    require_b_indices(l, b);
    const long n = l.params.n;
    if (delta.cols() != 8 * n) throw Error(ErrorKind::ArityMismatch, "Delta must have 8n columns");
    Extraction<K> out;
    for (long bi : b) {
        if (!homogeneity_check_eps1(l, bi, eps))
            throw Error(ErrorKind::HomogeneityViolated, "column " + std::to_string(bi) + " fails the eps1 condition");
        out.merged.emplace_back(static_cast<int>(bi - 1), static_cast<int>(8 * n - bi));
    }
    out.matrix = merge_source_pairs(delta, out.merged);
    return out;
}

// A psi row L (0-based) is admissible for b when it contains 4n+1-b and the rest of L is a union
// of complementary pairs {l, 4n+1-l}.
inline bool admissible_psi_row(const std::vector<int>& L, long b, long n) {
    const int partner = static_cast<int>(4 * n - b);  // 0-based index of 4n+1-b
    if (std::find(L.begin(), L.end(), partner) == L.end()) return false;
    for (int x : L) {
        if (x == partner) continue;
        const int comp = static_cast<int>(4 * n - 1 - x);
        if (comp == partner || std::find(L.begin(), L.end(), comp) == L.end()) return false;
    }
    return true;
}

// Row b summed with a psi row, for eps = eps2. Depth-first over the b's in order, candidate
// rows in lexicographic order: the first assignment found is taken. Admissible rows must match
// the twist of row b; the index sets of the first two selected rows must be disjoint.
template <class K>
Extraction<K> extract_mu(const GradedMatrix<K>& delta, const DegreeLedger& l, const std::vector<long>& b, long eps) {
    require_b_indices(l, b);
    const long n = l.params.n;
    const auto rows = combinations(static_cast<int>(4 * n), static_cast<int>(2 * n - 1));
    if (delta.rows() != 4 * n + static_cast<Eigen::Index>(rows.size()))
        throw Error(ErrorKind::ArityMismatch, "Delta has the wrong number of rows");
    std::vector<std::vector<std::size_t>> candidates;
    for (long bi : b) {
        if (!homogeneity_check_eps2(l, bi, eps))
            throw Error(ErrorKind::HomogeneityViolated, "row " + std::to_string(bi) + " fails the eps2 condition");
        std::vector<std::size_t> c;
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (admissible_psi_row(rows[r], bi, n) && delta.target[4 * n + r] == delta.target[bi - 1]) c.push_back(r);
        if (c.empty()) throw Error(ErrorKind::NoCompatibleRow, "no admissible psi row for b = " + std::to_string(bi));
        candidates.push_back(std::move(c));
    }
    auto disjoint = [&](std::size_t r, std::size_t s) {
        return std::none_of(rows[r].begin(), rows[r].end(),
                            [&](int x) { return std::find(rows[s].begin(), rows[s].end(), x) != rows[s].end(); });
    };
    std::vector<std::size_t> pick;
    auto search = [&](auto& self, std::size_t k) -> bool {
        if (k == candidates.size()) return true;
        for (std::size_t r : candidates[k]) {
            if (std::find(pick.begin(), pick.end(), r) != pick.end()) continue;
            if (k == 1 && !disjoint(pick[0], r)) continue;
            pick.push_back(r);
            if (self(self, k + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    if (!search(search, 0)) throw Error(ErrorKind::NoCompatibleRow, "no choice of psi rows with disjoint index sets");

    Extraction<K> out;
    for (std::size_t k = 0; k < b.size(); ++k) {
        out.merged.emplace_back(static_cast<int>(b[k] - 1), static_cast<int>(4 * n + pick[k]));
        out.psi_rows.push_back(rows[pick[k]]);
    }
    out.matrix = merge_target_pairs(delta, out.merged);
    return out;
}

// ---- reports ----------------------------------------------------------------

struct NamedCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct EntryCertificate {
    std::string entry_set;
    int num_vars = 0;
    std::vector<ZeroCertificate> per_prime;
    bool empty() const {
        return std::all_of(per_prime.begin(), per_prime.end(), [](const ZeroCertificate& c) { return c.empty(); });
    }
};

struct KprReport {
    std::string construction;
    std::vector<std::pair<std::string, long>> parameters;
    std::uint64_t seed = 0;
    std::vector<std::uint32_t> primes;
    std::vector<NamedCheck> checks;
    std::vector<EntryCertificate> certificates;
    std::string certificate_scope;
    std::vector<std::pair<std::string, GradedMatrix<Rational>>> extracted;
    std::optional<InvariantReport> invariants;
    std::vector<std::pair<std::string, std::string>> notes;

    bool checks_passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.passed; });
    }
    bool certified() const {
        return checks_passed() && !certificates.empty() &&
               std::all_of(certificates.begin(), certificates.end(), [](const EntryCertificate& c) { return c.empty(); });
    }
    std::string verdict() const;
};

struct CertificateConfig {
    std::vector<std::uint32_t> primes{2, 3, 5, 7};
    unsigned threads = 1;
};

// Nonzero entries of row r / column c.
std::vector<Form<Rational>> row_entries(const GradedMatrix<Rational>& m, Eigen::Index r);
std::vector<Form<Rational>> column_entries(const GradedMatrix<Rational>& m, Eigen::Index c);
EntryCertificate certify_entries(const std::string& name, const std::vector<Form<Rational>>& forms, int nvars,
                                 const CertificateConfig& cfg);

// Weighted construction on P^{2n+2}: part 1 extracts mu-bar at eps1, part 2 extracts mu at eps2.
KprReport weighted_kpr_construction(const DegreeLedger& l, int part, const std::vector<long>& b, std::uint64_t seed,
                                    const CertificateConfig& cfg);

// n = 1, which in 3..6: column pair (which-2, which+2) and row pair (7-which, 11-which).
KprReport p4_epsilon_construction(const DegreeLedger& l, int which, std::uint64_t seed, const CertificateConfig& cfg);

// Random family over Q (coefficients in -3..3), checks, S_ij certificate on P^3, and the tau/delta
// extraction at eps = -c1(A) when both merges are homogeneous.
KprReport binet_cauchy_construction(long w1, long w2, long v2, std::uint64_t seed, const CertificateConfig& cfg);
KprReport binet_cauchy_construction(const BinetCauchyFamily<Rational>& fam, std::uint64_t seed,
                                    const CertificateConfig& cfg);

// First seed at or after `seed` whose six S_ij have no common zero on P^3(F_p).
std::optional<std::uint64_t> find_zero_free_seed(long w1, long w2, long v2, std::uint32_t p, std::uint64_t seed,
                                                 int max_tries);
BinetCauchyFamily<Rational> seeded_binet_cauchy_family(long w1, long w2, long v2, std::uint64_t seed);

}  // namespace projkit
