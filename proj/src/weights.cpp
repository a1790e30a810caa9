#include "projkit/weights.hpp"

#include <cstdlib>
#include <numeric>

#include "projkit/errors.hpp"

namespace projkit {

std::optional<std::string> violated_constraint(const WeightParams& p) {
    if (p.n < 1) return "n >= 1";
    if (p.alpha < 0) return "alpha >= 0";
    if (p.gamma < 1) return "gamma >= 1";
    if (p.alpha < p.beta) return "alpha >= beta";
    if (p.alpha + p.beta < 0) return "alpha + beta >= 0";
    if (p.gamma <= (2 * p.n + 1) * std::labs(p.beta)) return "gamma > (2n+1)|beta|";
    return std::nullopt;
}

bool strong_bound_holds(const WeightParams& p) {
    const long s = p.alpha + p.beta;
    const long a = std::labs(p.alpha + p.beta * (4 * p.n + 1)) + (2 * p.n + 1) * s;
    const long b = p.alpha * (4 * p.n + 1) + p.beta;
    return p.gamma > std::max(a, b);
}

DegreeLedger build_ledger(const WeightParams& p) {
    if (auto bad = violated_constraint(p)) throw Error(ErrorKind::InvalidParams, "violated: " + *bad);
    DegreeLedger l;
    l.params = p;
    const long n = p.n, s = p.alpha + p.beta, m = 2 * n + 1;
    for (long k = 1; k <= 4 * n + 1; ++k)
        if (k != m) l.zetas.push_back(2 * p.alpha * m + k * (p.beta - p.alpha));
    l.hbar1 = 2 * p.gamma - m * s;
    l.hbar2 = 2 * n * p.gamma + 3 * n * m * s;
    l.epsilon1 = 2 * p.gamma + m * s;
    l.epsilon2 = 2 * n * p.gamma + n * m * s;
    for (long i = 0; i <= 2 * n + 1; ++i) l.g_degrees.push_back(p.gamma + m * p.alpha + i * (p.beta - p.alpha));
    if (n == 1)
        l.epsilons_p4 = {2 * p.gamma + 7 * p.alpha - p.beta, 2 * p.gamma + 5 * p.alpha + p.beta,
                         2 * p.gamma + p.alpha + 5 * p.beta, 2 * p.gamma - p.alpha + 7 * p.beta};
    l.strong_bound = strong_bound_holds(p);
    return l;
}

long DegreeLedger::zeta(long i) const {
    if (i < 1 || i > static_cast<long>(zetas.size())) throw Error(ErrorKind::IndexOutOfRange, "zeta index " + std::to_string(i));
    return zetas[i - 1];
}

bool homogeneity_check_eps1(const DegreeLedger& l, long b, std::optional<long> eps) {
    const long e = eps.value_or(l.epsilon1);
    const long n = l.params.n;
    return -e + l.zeta(b) == -l.zeta(4 * n + 1 - b) - l.hbar1;
}

bool homogeneity_check_eps2(const DegreeLedger& l, long b, std::optional<long> eps) {
    const long e = eps.value_or(l.epsilon2);
    const long n = l.params.n;
    return l.zeta(b) == -l.zeta(4 * n + 1 - b) - 2 * (n - 1) * (2 * n + 1) * l.weight_sum() - e + l.hbar2;
}

long binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace projkit
