#include "projkit/monad.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "projkit/errors.hpp"

namespace projkit {

GradedMatrix<Rational> monad_column(const std::vector<Form<Rational>>& forms, int nvars) {
    Twists target;
    for (const auto& f : forms) target.push_back(f.degree());
    GradedMatrix<Rational> g({0}, target, nvars);
    for (std::size_t i = 0; i < forms.size(); ++i)
        if (!forms[i].is_zero()) g(static_cast<Eigen::Index>(i), 0) = forms[i].lifted(nvars);
    return g;
}

std::map<int, Form<Rational>> monad_composition(const std::vector<Form<Rational>>& g, const ScalarMatrix<Rational>& f) {
    if (f.rows() != static_cast<Eigen::Index>(g.size()) || f.cols() != f.rows())
        throw Error(ErrorKind::ArityMismatch, "f must be square of the length of g");
    std::map<int, Form<Rational>> parts;
    for (Eigen::Index i = 0; i < f.rows(); ++i)
        for (Eigen::Index j = 0; j < f.cols(); ++j) {
            if (f(i, j).is_zero() || g[i].is_zero() || g[j].is_zero()) continue;
            Form<Rational> term = (g[i] * g[j]).scaled(f(i, j));
            auto [it, fresh] = parts.try_emplace(term.degree(), term);
            if (!fresh) it->second += term;
        }
    std::erase_if(parts, [](const auto& kv) { return kv.second.is_zero(); });
    return parts;
}

MonadReport verify_monad(const MonadData& m) {
    MonadReport rep;
    const long n = m.ledger.params.n;
    const long size = 2 * n + 2;

    if (m.g.cols() != 1 || m.g.rows() != size)
        rep.failures.push_back("g must be a column of " + std::to_string(size) + " forms");
    if (m.f.rows() != size || m.f.cols() != size)
        rep.failures.push_back("f must be " + std::to_string(size) + " x " + std::to_string(size));
    if (!rep.failures.empty()) return rep;

    std::vector<Form<Rational>> g;
    for (Eigen::Index i = 0; i < size; ++i) g.push_back(m.g(i, 0));
    const auto residue = monad_composition(g, m.f);
    rep.composition_zero = residue.empty();
    for (const auto& [deg, form] : residue) rep.composition_residue.push_back(form.str());
    if (!rep.composition_zero) rep.failures.push_back("g^T f g does not cancel");

    rep.degree_failures = graded_validate(m.g);
    for (Eigen::Index i = 0; i < size; ++i) {
        const long want = m.ledger.g_degrees[i];
        if (m.g.target[i] != want || (!g[i].is_zero() && g[i].degree() != want))
            rep.degree_failures.push_back({i, 0, want, g[i].is_zero() ? static_cast<int>(m.g.target[i]) : g[i].degree()});
    }
    if (!rep.degree_failures.empty()) rep.failures.push_back("g has entries of the wrong degree");

    rep.f_antisymmetric = true;
    for (Eigen::Index i = 0; i < size; ++i)
        for (Eigen::Index j = 0; j < size; ++j)
            if (!(m.f(i, j) == -m.f(j, i))) rep.f_antisymmetric = false;
    if (!rep.f_antisymmetric) rep.failures.push_back("f is not antisymmetric");
    rep.f_nondegenerate = !exact_determinant<Rational>(m.f).is_zero();
    if (!rep.f_nondegenerate) rep.failures.push_back("f is degenerate");

    // O(-gamma) -> V (x) O -> O(gamma'): kernel of the surjection, then quotient by g
    rep.quotient_rank = size - 1;
    rep.null_correlation_rank = size - 2;
    return rep;
}

long projective_point_count(std::uint32_t p, int nvars) {
    long count = 0, block = 1;
    for (int j = 0; j < nvars; ++j) {
        if (count > std::numeric_limits<long>::max() - block)
            throw Error(ErrorKind::InvalidParams, "projective space too large to enumerate");
        count += block;
        if (j + 1 < nvars) block *= static_cast<long>(p);
    }
    return count;
}

std::vector<std::int64_t> projective_point(std::uint32_t p, int nvars, long k) {
    std::vector<std::int64_t> pt(nvars, 0);
    long block = 1;
    for (int lead = nvars - 1; lead >= 0; --lead) {
        if (k < block) {
            pt[lead] = 1;
            for (int i = nvars - 1; i > lead; --i) {
                pt[i] = k % p;
                k /= p;
            }
            return pt;
        }
        k -= block;
        block *= static_cast<long>(p);
    }
    throw Error(ErrorKind::IndexOutOfRange, "point index past the end of the enumeration");
}

namespace {

struct FlatForm {
    std::vector<std::vector<int>> exps;
    std::vector<std::int64_t> coefs;
};

FlatForm flatten(const Form<Zp>& f) {
    FlatForm out;
    for (const auto& [e, c] : f.terms()) {
        out.exps.push_back(e);
        out.coefs.push_back(c.v);
    }
    return out;
}

bool vanishes_at(const FlatForm& f, const std::vector<std::vector<std::int64_t>>& powers, std::int64_t p) {
    std::int64_t acc = 0;
    for (std::size_t t = 0; t < f.coefs.size(); ++t) {
        std::int64_t v = f.coefs[t];
        const auto& e = f.exps[t];
        for (std::size_t i = 0; i < e.size() && v; ++i)
            if (e[i]) v = v * powers[i][e[i]] % p;
        acc = (acc + v) % p;
    }
    return acc == 0;
}

}  // namespace

ZeroCertificate zero_locus_certificate(const std::vector<Form<Zp>>& forms, std::uint32_t p, int nvars,
                                       unsigned threads) {
    if (!is_prime(p)) throw Error(ErrorKind::InvalidParams, std::to_string(p) + " is not prime");
    if (nvars < 1) throw Error(ErrorKind::ArityMismatch, "need at least one variable");
    int max_deg = 0;
    std::vector<FlatForm> flat;
    for (const auto& f : forms) {
        if (f.is_zero()) continue;
        if (!f.context_free() && f.num_vars() != nvars)
            throw Error(ErrorKind::ArityMismatch, "form in " + std::to_string(f.num_vars()) + " variables");
        for (const auto& [e, c] : f.terms())
            if (c.bound() && c.modulus() != p) throw Error(ErrorKind::FieldMismatch, "form reduced modulo another prime");
        flat.push_back(flatten(f.lifted(nvars)));
        max_deg = std::max(max_deg, f.degree());
    }

    ZeroCertificate cert;
    cert.prime = p;
    cert.points_total = projective_point_count(p, nvars);
    const long total = cert.points_total;
    const std::int64_t mod = p;

    std::atomic<long> first{total};
    auto scan = [&](long lo, long hi) {
        std::vector<std::vector<std::int64_t>> powers(nvars, std::vector<std::int64_t>(max_deg + 1, 1));
        for (long k = lo; k < hi && k < first.load(std::memory_order_relaxed); ++k) {
            auto pt = projective_point(p, nvars, k);
            for (int i = 0; i < nvars; ++i)
                for (int d = 1; d <= max_deg; ++d) powers[i][d] = powers[i][d - 1] * pt[i] % mod;
            bool all = std::all_of(flat.begin(), flat.end(), [&](const FlatForm& f) { return vanishes_at(f, powers, mod); });
            if (all) {
                long cur = first.load();
                while (k < cur && !first.compare_exchange_weak(cur, k)) {
                }
                break;
            }
        }
    };

    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::min<long>(total, 64))));
    if (workers == 1) {
        scan(0, total);
    } else {
        std::vector<std::jthread> pool;
        const long chunk = (total + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(scan, w * chunk, std::min(total, (w + 1) * chunk));
    }

    const long hit = first.load();
    if (hit < total) {
        cert.witness = projective_point(p, nvars, hit);
        cert.points_scanned = hit + 1;
    } else {
        cert.points_scanned = total;
    }
    return cert;
}

ZeroCertificate zero_locus_certificate(const std::vector<Form<Rational>>& forms, std::uint32_t p, int nvars,
                                       unsigned threads) {
    std::vector<Form<Zp>> reduced;
    for (const auto& f : forms) reduced.push_back(reduce_mod(f, p));
    return zero_locus_certificate(reduced, p, nvars, threads);
}

std::vector<ZeroCertificate> zero_locus_certificates(const std::vector<Form<Rational>>& forms,
                                                     const std::vector<std::uint32_t>& primes, int nvars,
                                                     unsigned threads) {
    std::vector<ZeroCertificate> out;
    for (auto p : primes) out.push_back(zero_locus_certificate(forms, p, nvars, threads));
    return out;
}

}  // namespace projkit
