#pragma once

#include <optional>
#include <string>
#include <vector>

namespace projkit {

struct WeightParams {
    long n = 1;
    long alpha = 0;
    long beta = 0;
    long gamma = 1;
};

struct DegreeLedger {
    WeightParams params;
    std::vector<long> zetas;      // zeta_1..zeta_{4n}
    long hbar1 = 0;
    long hbar2 = 0;
    long epsilon1 = 0;
    long epsilon2 = 0;
    std::vector<long> g_degrees;  // 2n+2 entries
    std::vector<long> epsilons_p4;  // eps_3..eps_6, only for n == 1
    bool strong_bound = false;

    long zeta(long i) const;  // 1-based
    long weight_sum() const { return params.alpha + params.beta; }
};

// Empty when valid; otherwise the violated inequality.
std::optional<std::string> violated_constraint(const WeightParams& p);
bool strong_bound_holds(const WeightParams& p);

// Throws InvalidParams.
DegreeLedger build_ledger(const WeightParams& p);

// -eps + zeta_b == -zeta_{4n+1-b} - hbar1 ; b is 1-based.
bool homogeneity_check_eps1(const DegreeLedger& l, long b, std::optional<long> eps = std::nullopt);
// zeta_b == -zeta_{4n+1-b} - 2(n-1)(2n+1)(alpha+beta) - eps + hbar2
bool homogeneity_check_eps2(const DegreeLedger& l, long b, std::optional<long> eps = std::nullopt);

long binomial(long n, long k);

}  // namespace projkit
