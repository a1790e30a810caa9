#include "projkit/kpr.hpp"

#include <sstream>

namespace projkit {

std::string KprReport::verdict() const {
    if (!checks_passed()) {
        std::string out = "failed:";
        for (const auto& c : checks)
            if (!c.passed) out += " [" + c.name + "]";
        return out;
    }
    if (certificates.empty()) return "checks passed; no zero-locus certificates";
    std::ostringstream os;
    if (certified()) {
        os << "certified at primes {";
        for (std::size_t i = 0; i < primes.size(); ++i) os << (i ? ", " : "") << primes[i];
        os << "}";
        return os.str();
    }
    os << "checks passed; common zero found for";
    for (const auto& c : certificates)
        for (const auto& z : c.per_prime)
            if (!z.empty()) os << " [" << c.entry_set << " over F_" << z.prime << "]";
    return os.str();
}

std::vector<Form<Rational>> row_entries(const GradedMatrix<Rational>& m, Eigen::Index r) {
    std::vector<Form<Rational>> out;
    for (Eigen::Index c = 0; c < m.cols(); ++c)
        if (!m(r, c).is_zero()) out.push_back(m(r, c));
    return out;
}

std::vector<Form<Rational>> column_entries(const GradedMatrix<Rational>& m, Eigen::Index c) {
    std::vector<Form<Rational>> out;
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        if (!m(r, c).is_zero()) out.push_back(m(r, c));
    return out;
}

EntryCertificate certify_entries(const std::string& name, const std::vector<Form<Rational>>& forms, int nvars,
                                 const CertificateConfig& cfg) {
    EntryCertificate e;
    e.entry_set = name;
    e.num_vars = nvars;
    e.per_prime = zero_locus_certificates(forms, cfg.primes, nvars, cfg.threads);
    return e;
}

namespace {

Form<Rational> z_power(int nvars, long eps) {
    Exponent e(nvars, 0);
    e[nvars - 1] = static_cast<int>(eps);
    return Form<Rational>::monomial(e, Rational(1));
}

bool contains(const std::vector<Form<Rational>>& forms, const Form<Rational>& f) {
    return std::any_of(forms.begin(), forms.end(), [&](const Form<Rational>& g) { return g == f; });
}

// z^eps occurs as a term of some entry (in the general pairing it is summed with a phi or psi entry).
bool has_z_term(const std::vector<Form<Rational>>& forms, const Form<Rational>& zeps) {
    const Exponent& e = zeps.terms().begin()->first;
    return std::any_of(forms.begin(), forms.end(), [&](const Form<Rational>& g) { return !g.coeff(e).is_zero(); });
}

void add_degree_check(KprReport& rep, const std::string& name, const GradedMatrix<Rational>& m) {
    const auto v = graded_validate(m);
    rep.checks.push_back({name, v.empty(), v.empty() ? "" : std::to_string(v.size()) + " entries of the wrong degree"});
}

struct LedgerPair {
    GradedMatrix<Rational> phi, psi;
};

LedgerPair ledger_pair(KprReport& rep, const DegreeLedger& l, std::uint64_t seed) {
    const int n = static_cast<int>(l.params.n);
    LedgerPair out;
    out.phi = ledger_phi<Rational>(l, FieldSpec::rationals(), seed);
    add_degree_check(rep, "phi degrees", out.phi);
    out.psi = make_psi(out.phi, n, FieldSpec::rationals(), seed);
    add_degree_check(rep, "psi degrees", out.psi);
    return out;
}

std::string pair_name(const char* what, int i, int j) {
    return std::string(what) + " " + std::to_string(i + 1) + " + " + std::to_string(j + 1);
}

}  // namespace

KprReport weighted_kpr_construction(const DegreeLedger& l, int part, const std::vector<long>& b, std::uint64_t seed,
                                    const CertificateConfig& cfg) {
    if (part != 1 && part != 2) throw Error(ErrorKind::InvalidParams, "part must be 1 or 2");
    require_b_indices(l, b);
    const long n = l.params.n;
    const long eps = part == 1 ? l.epsilon1 : l.epsilon2;
    KprReport rep;
    rep.construction = part == 1 ? "weighted rank 2n+1 bundle, column merges at eps1"
                                 : "weighted rank 2n+1 bundle, row merges at eps2";
    rep.parameters = {{"n", n}, {"alpha", l.params.alpha}, {"beta", l.params.beta}, {"gamma", l.params.gamma},
                      {"epsilon", eps}, {"part", part}};
    rep.seed = seed;
    rep.primes = cfg.primes;

    const auto pair = ledger_pair(rep, l, seed);
    const GradedMatrix<Rational> delta = assemble_delta(pair.phi, pair.psi, eps);
    rep.checks.push_back({"psi * phi = 0 (symbolic)", true, "verified during assembly"});
    add_degree_check(rep, "Delta degrees", delta);
    const int nv = delta.num_vars;
    const Form<Rational> zeps = z_power(nv, eps);

    for (long bi : b) {
        const bool ok = part == 1 ? homogeneity_check_eps1(l, bi, eps) : homogeneity_check_eps2(l, bi, eps);
        rep.checks.push_back({(part == 1 ? "eps1 homogeneity at b = " : "eps2 homogeneity at b = ") + std::to_string(bi), ok, ""});
    }

    const Extraction<Rational> ex = part == 1 ? extract_mu_bar(delta, l, b, eps) : extract_mu(delta, l, b, eps);
    rep.extracted.emplace_back(part == 1 ? "mu_bar" : "mu", ex.matrix);
    for (std::size_t k = 0; k < ex.merged.size(); ++k) {
        const auto [i, j] = ex.merged[k];
        const auto entries = part == 1 ? column_entries(ex.matrix, static_cast<Eigen::Index>(k))
                                       : row_entries(ex.matrix, static_cast<Eigen::Index>(k));
        const std::string name = pair_name(part == 1 ? "columns" : "rows", i, j);
        rep.checks.push_back({name + " has a z^eps term", has_z_term(entries, zeps), ""});
        if (part == 2) {
            // the psi half of the merged row vanishes exactly on the selected index set
            const auto& L = ex.psi_rows[k];
            bool pattern = true;
            for (int c = 0; c < 4 * n; ++c) {
                const bool in_l = std::find(L.begin(), L.end(), c) != L.end();
                const bool z = pair.psi(static_cast<Eigen::Index>(j - 4 * n), c).is_zero();
                if (in_l && !z) pattern = false;
            }
            rep.checks.push_back({name + " psi zero pattern", pattern, ""});
        }
        rep.certificates.push_back(certify_entries(name, entries, nv, cfg));
    }
    rep.certificate_scope = n == 1 ? "maximal minors (one merged column/row: the minors are its entries)"
                                   : "entry sets of each merged column/row; maximal minors not computed for n >= 2";
    rep.invariants = weighted_kpr_invariants(l, part, b);
    return rep;
}

KprReport p4_epsilon_construction(const DegreeLedger& l, int which, std::uint64_t seed, const CertificateConfig& cfg) {
    if (l.params.n != 1) throw Error(ErrorKind::InvalidParams, "the P^4 constructions need n = 1");
    if (which < 3 || which > 6) throw Error(ErrorKind::InvalidParams, "eps index must be 3, 4, 5 or 6");
    const long eps = l.epsilons_p4.at(which - 3);
    if (eps <= 0) throw Error(ErrorKind::InvalidParams, "eps_" + std::to_string(which) + " = " + std::to_string(eps) + " <= 0");

    KprReport rep;
    rep.construction = "rank-3 bundles on P^4 at eps_" + std::to_string(which);
    rep.parameters = {{"n", 1}, {"alpha", l.params.alpha}, {"beta", l.params.beta}, {"gamma", l.params.gamma},
                      {"epsilon", eps}, {"which", which}};
    rep.seed = seed;
    rep.primes = cfg.primes;

    const auto pair = ledger_pair(rep, l, seed);
    const GradedMatrix<Rational> delta = assemble_delta(pair.phi, pair.psi, eps);
    rep.checks.push_back({"psi * phi = 0 (symbolic)", true, "verified during assembly"});
    add_degree_check(rep, "Delta degrees", delta);
    const int nv = delta.num_vars;
    const Form<Rational> zeps = z_power(nv, eps);

    const int col = which - 3, row = 6 - which;  // 0-based; partners at +4
    const auto tau = merge_source_pair(delta, col, col + 4);
    const auto delta_row = merge_target_pair(delta, row, row + 4);
    rep.extracted.emplace_back("column merge", tau);
    rep.extracted.emplace_back("row merge", delta_row);
    const auto tau_entries = column_entries(tau, 0);
    const auto row_entries_ = row_entries(delta_row, 0);
    rep.checks.push_back({pair_name("columns", col, col + 4) + " contains z^eps", contains(tau_entries, zeps), ""});
    rep.checks.push_back({pair_name("rows", row, row + 4) + " contains z^eps", contains(row_entries_, zeps), ""});
    rep.certificates.push_back(certify_entries(pair_name("columns", col, col + 4), tau_entries, nv, cfg));
    rep.certificates.push_back(certify_entries(pair_name("rows", row, row + 4), row_entries_, nv, cfg));
    rep.certificate_scope = "maximal minors (one merged column/row: the minors are its entries)";

    // c1 along the chain: G from the twist sum and the pushforward, then one line bundle off.
    InvariantReport inv;
    inv.construction = rep.construction;
    inv.parameters = rep.parameters;
    const ChernData upsilon = chern_of_twist_sum(l.zetas, 1);
    const ChernData g = exact_seq_solve(upsilon, pushforward_data(2, 0, 0, 0, eps, 1), SeqPosition::Quot);
    const long zc = l.zeta(col + 1), zr = l.zeta(row + 1);
    const ChernData e = exact_seq_solve(g, chern_of_twist_sum({zc - eps}, 1), SeqPosition::Sub);
    const ChernData k = exact_seq_solve(g, chern_of_twist_sum({zr}, 1), SeqPosition::Quot);
    const auto& p = l.params;
    inv.checks.push_back({"c1(G)", g.c(1), std::nullopt});
    std::optional<Rational> e_printed, k_printed;
    if (which == 3) {
        e_printed = Rational(-2 * p.gamma + 12 * p.beta);
        k_printed = Rational(3 * (3 * p.beta - p.alpha) - 4 * p.gamma);
    }
    inv.checks.push_back({"c1(E" + std::to_string(col + 1) + ")", e.c(1), e_printed});
    inv.checks.push_back({"c1(K" + std::to_string(row + 1) + ")", k.c(1), k_printed});
    inv.facts.emplace_back("rank(E)", std::to_string(e.rank));
    inv.facts.emplace_back("rank(K)", std::to_string(k.rank));
    rep.invariants = inv;
    return rep;
}

BinetCauchyFamily<Rational> seeded_binet_cauchy_family(long w1, long w2, long v2, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto forms = random_binet_cauchy_forms<Rational>(w1, w2, v2, FieldSpec::rationals(), 4, rng);
    return binet_cauchy_family(forms, w1, w2, v2, 4);
}

namespace {
std::vector<Form<Rational>> six_entries(const BinetCauchyFamily<Rational>& fam) {
    std::vector<Form<Rational>> out;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) out.push_back(fam.s(i, j));
    return out;
}
}  // namespace

std::optional<std::uint64_t> find_zero_free_seed(long w1, long w2, long v2, std::uint32_t p, std::uint64_t seed,
                                                 int max_tries) {
    for (int t = 0; t < max_tries; ++t, ++seed) {
        const auto fam = seeded_binet_cauchy_family(w1, w2, v2, seed);
        if (zero_locus_certificate(six_entries(fam), p, 4).empty()) return seed;
    }
    return std::nullopt;
}

KprReport binet_cauchy_construction(const BinetCauchyFamily<Rational>& fam, std::uint64_t seed,
                                    const CertificateConfig& cfg) {
    const auto& d = fam.degrees;
    KprReport rep;
    rep.construction = "Binet-Cauchy family on P^3 and its rank-3 lift to P^4";
    rep.parameters = {{"w1", d.w1}, {"w2", d.w2}, {"v2", d.v2}, {"a1", d.f_twists[0]}};
    rep.seed = seed;
    rep.primes = cfg.primes;

    const auto c = check_binet_cauchy(fam);
    rep.checks.push_back({"Pf(M) = 0 (symbolic)", c.pfaffian_zero, ""});
    rep.checks.push_back({"M N = 0 (symbolic)", c.mn_zero, ""});
    rep.checks.push_back({"N M = 0 (symbolic)", c.nm_zero, ""});
    rep.checks.push_back({"M, N degrees", c.degrees_valid, ""});
    rep.extracted.emplace_back("M", fam.m);
    rep.extracted.emplace_back("N", fam.n);
    rep.certificates.push_back(certify_entries("S_ij on P^3", six_entries(fam), 4, cfg));
    rep.certificate_scope = "entries; on P^4 one merged column/row, whose maximal minors are its entries";

    const long a1 = d.f_twists[0], a4 = d.f_twists[3];
    const long c1b = 3 * d.w2 - d.w1 + 2 * a1;
    const long c1a = c1b - d.d;
    const long eps = -c1a;
    rep.parameters.emplace_back("epsilon", eps);
    const bool columns_ok = eps == c1b - 2 * a1;
    const bool rows_ok = eps == -c1a + 2 * a4;
    if (eps >= 1 && columns_ok && rows_ok) {
        const auto lift = binet_cauchy_delta(fam, eps);
        add_degree_check(rep, "Delta degrees", lift.delta);
        const auto tau = extract_tau(lift.delta);
        const auto delta_row = extract_delta_row(lift.delta);
        rep.extracted.emplace_back("tau", tau);
        rep.extracted.emplace_back("delta", delta_row);
        rep.certificates.push_back(certify_entries("tau", column_entries(tau, 0), 5, cfg));
        rep.certificates.push_back(certify_entries("delta", row_entries(delta_row, 0), 5, cfg));
    } else {
        rep.notes.emplace_back("tau/delta", "not extracted: columns 1, 5 need eps = " + std::to_string(c1b - 2 * a1) +
                                                 ", rows 4, 8 need eps = " + std::to_string(-c1a + 2 * a4) +
                                                 ", have eps = " + std::to_string(eps));
    }
    if (d.w2 > 0 && d.v2 > 0) rep.invariants = binet_cauchy_invariants(d.w1, d.w2, d.v2, a1);
    return rep;
}

KprReport binet_cauchy_construction(long w1, long w2, long v2, std::uint64_t seed, const CertificateConfig& cfg) {
    return binet_cauchy_construction(seeded_binet_cauchy_family(w1, w2, v2, seed), seed, cfg);
}

}  // namespace projkit
