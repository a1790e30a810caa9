#include "projkit/symplectic.hpp"

#include <random>

#include "projkit/exact_la.hpp"
#include "projkit/pfaffian.hpp"
#include "projkit/weights.hpp"

namespace projkit {

mpz_class factorial(long k) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

namespace {

void check_index(int n, const WedgeIndex& z) {
    if (z.p < 0 || z.q > 2 * n + 1 || z.p >= z.q)
        throw Error(ErrorKind::IndexOutOfRange, "z_{" + std::to_string(z.p) + "," + std::to_string(z.q) + "}");
}

}  // namespace

Rational pairing(int n, const WedgeIndex& a, const WedgeIndex& b) {
    check_index(n, a);
    check_index(n, b);
    const int i = a.p, j = a.q, s = b.p, t = b.q;
    if (j + s != 2 * n + 1 || i + t != 2 * n + 1) return Rational(0);
    mpz_class v = factorial(i) * factorial(t) * factorial(j) * factorial(s);
    if ((i + j + 1) % 2) v = -v;
    return Rational(v);
}

Rational pairing(int n, const WedgeCombination& a, const WedgeCombination& b) {
    Rational acc(0);
    for (const auto& [x, cx] : a)
        for (const auto& [y, cy] : b) acc += cx * cy * pairing(n, x, y);
    return acc;
}

std::map<int, std::vector<WedgeIndex>> weight_decomposition(int n) {
    std::map<int, std::vector<WedgeIndex>> out;
    for (int k = 1; k <= 4 * n + 1; ++k) out[k];
    for (int p = 0; p <= 2 * n + 1; ++p)
        for (int q = p + 1; q <= 2 * n + 1; ++q) out[p + q].push_back({p, q});
    return out;
}

long wedge_dimension(int n) { return binomial(2 * n + 2, 2); }
long tango_dimension(int n) { return binomial(2 * n + 2, 2) - (4 * n + 1); }

WedgeCombination SymplecticForm::as_combination() const {
    WedgeCombination c;
    const int top = static_cast<int>(coefficients.size()) * 2 - 1;
    for (int p = 0; p < static_cast<int>(coefficients.size()); ++p) c[{p, top - p}] = coefficients[p];
    return c;
}

ScalarMatrix<Rational> antidiagonal_form(const std::vector<Rational>& coeffs) {
    const int size = 2 * static_cast<int>(coeffs.size());
    ScalarMatrix<Rational> m = ScalarMatrix<Rational>::Zero(size, size);
    for (int p = 0; p < static_cast<int>(coeffs.size()); ++p) {
        m(p, size - 1 - p) = coeffs[p];
        m(size - 1 - p, p) = -coeffs[p];
    }
    return m;
}

SymplecticForm build_fW(int n, const std::vector<Rational>& functional) {
    if (static_cast<int>(functional.size()) != n + 1)
        throw Error(ErrorKind::InvalidParams, "functional on E_{2n+1} needs n+1 coordinates");
    if (std::all_of(functional.begin(), functional.end(), [](const Rational& x) { return x.is_zero(); }))
        throw Error(ErrorKind::InvalidParams, "zero functional does not cut a hyperplane");
    const int top = 2 * n + 1;
    SymplecticForm out;
    // On E_{2n+1} the pairing is diagonal: <z_p, z_p> = (p! (2n+1-p)!)^2.
    for (int p = 0; p <= n; ++p) {
        if (functional[p].is_zero())
            throw Error(ErrorKind::DegenerateW, "z_{" + std::to_string(p) + "," + std::to_string(top - p) +
                                                    "} lies in the hyperplane; f would be degenerate");
        out.coefficients.push_back(functional[p] / pairing(n, WedgeIndex{p, top - p}, WedgeIndex{p, top - p}));
    }
    out.matrix = antidiagonal_form(out.coefficients);
    int pivot = 0;
    for (int p = 1; p <= n; ++p) {
        WedgeCombination w;
        w[{p, top - p}] = functional[pivot];
        w[{pivot, top - pivot}] = -functional[p];
        out.hyperplane_basis.push_back(w);
    }
    return out;
}

SigmaInvariance check_sigma_invariance(const ScalarMatrix<Rational>& f, const std::vector<long>& weights) {
    SigmaInvariance out;
    for (Eigen::Index i = 0; i < f.rows(); ++i)
        for (Eigen::Index j = 0; j < f.cols(); ++j) {
            if (f(i, j).is_zero()) continue;
            const long d = weights.at(i) + weights.at(j);
            if (!out.exponent) out.exponent = d;
            else if (*out.exponent != d) {
                out.invariant = false;
                out.exponent.reset();
                return out;
            }
        }
    return out;
}

long decomposable_samples(const std::vector<ScalarMatrix<Rational>>& span, std::uint32_t prime, int samples,
                          std::uint64_t seed) {
    if (span.empty()) return 0;
    const FieldSpec field = FieldSpec::prime(prime);
    std::mt19937_64 rng(seed);
    const Eigen::Index size = span.front().rows();
    const auto quads = combinations(static_cast<int>(size), 4);
    long hits = 0;
    for (int s = 0; s < samples; ++s) {
        ScalarMatrix<Zp> w = ScalarMatrix<Zp>::Constant(size, size, Zp(0, prime));
        bool nonzero = false;
        for (const auto& b : span) {
            Zp c = ScalarOps<Zp>::random(rng, field);
            if (c.is_zero()) continue;
            nonzero = true;
            for (Eigen::Index i = 0; i < size; ++i)
                for (Eigen::Index j = 0; j < size; ++j) w(i, j) += c * reduce_mod(b(i, j), prime);
        }
        if (!nonzero) continue;
        PfaffianTable<Zp> table(w);
        bool rank_two = std::all_of(quads.begin(), quads.end(), [&](const auto& q) { return table.of_kept(q).is_zero(); });
        if (rank_two && exact_rank<Zp>(w) > 0) ++hits;
    }
    return hits;
}

}  // namespace projkit
