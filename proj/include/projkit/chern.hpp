#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "projkit/scalar.hpp"
#include "projkit/weights.hpp"

namespace projkit {

// Truncated series a_0 + a_1 h + ... + a_N h^N.
using Series = std::vector<Rational>;

Series series_mul(const Series& a, const Series& b);
Series series_inverse(const Series& a);  // requires a_0 != 0
Series series_div(const Series& a, const Series& b);
Series series_pow(const Series& a, long k);
Series series_exp_linear(const Rational& a, int N);  // e^{a h}

// Total Chern class of a (virtual) sheaf on P^N.
struct ChernData {
    int ambient_dim = 0;
    long rank = 0;
    Series total;  // length ambient_dim + 1, total[0] == 1

    ChernData() = default;
    ChernData(int n, long r) : ambient_dim(n), rank(r), total(n + 1, Rational(0)) { total[0] = Rational(1); }
    Rational c(int i) const { return i < static_cast<int>(total.size()) ? total[i] : Rational(0); }
};

ChernData chern_of_twist_sum(const std::vector<long>& twists, int N);

enum class SeqPosition { Sub, Quot };

// Whitney: total(mid) = total(sub) * total(quot); returns the missing term.
ChernData exact_seq_solve(const ChernData& mid, const ChernData& known, SeqPosition known_position);

Series chern_character(const ChernData& e);  // ch_0..ch_N via Newton's identities
ChernData from_character(const Series& ch);  // inverse Newton; rank = ch_0
ChernData twisted(const ChernData& e, long a);
ChernData dual(const ChernData& e);
ChernData truncated(const ChernData& e, int N);

// td(P^N) = (h / (1 - e^{-h}))^{N+1}.
Series todd_projective(int N);

// Coefficients of t^0..t^N of t -> chi(P^N, E(t)).
std::vector<Rational> chi_polynomial(const ChernData& e);
std::vector<Rational> chi_from_character(const Series& ch);
Rational eval_polynomial(const std::vector<Rational>& coeffs, const Rational& t);

// Chern classes c'_1..c'_{min(4,N)} of the pushforward, from P^{N-1} x {z^eps = 0},
// of a rank-r bundle with classes c1, c2, c3 (closed form).
std::vector<Rational> pushforward_chern(long r, const Rational& c1, const Rational& c2, const Rational& c3, long eps,
                                        int N);
// Same numbers from Riemann-Roch: chi matching plus an exact linear solve.
std::vector<Rational> pushforward_chern_oracle(long r, const Rational& c1, const Rational& c2, const Rational& c3,
                                               long eps, int N);
// Rank-0 ChernData on P^N carrying the closed-form pushforward classes.
ChernData pushforward_data(long r, const Rational& c1, const Rational& c2, const Rational& c3, long eps, int N);

// Throws IntegralityViolation.
void require_integral(const ChernData& e, const std::string& what);

// Throws RankNotTwo.
bool chern_poly_irreducible(const ChernData& e);

// "1 - 2h + 4h^2"
std::string chern_polynomial_string(const ChernData& e);

// One invariant computed along the exact-sequence chain, optionally next to
// the value printed as a closed formula.
struct InvariantCheck {
    std::string quantity;
    Rational chain;
    std::optional<Rational> closed_form;
    bool agrees() const { return !closed_form || *closed_form == chain; }
    Rational discrepancy() const { return closed_form ? chain - *closed_form : Rational(0); }
};

struct InvariantReport {
    std::string construction;
    std::vector<std::pair<std::string, long>> parameters;
    std::vector<InvariantCheck> checks;
    std::vector<std::pair<std::string, std::string>> facts;
    bool all_agree() const;
    const InvariantCheck* find(const std::string& quantity) const;
};

// Weighted rank 2n+1 construction on P^{2n+2}; part 1 uses eps_1, part 2 eps_2.
InvariantReport weighted_kpr_invariants(const DegreeLedger& ledger, int part, const std::vector<long>& b_indices);

// Self-duality of the weighted null-correlation bundle at the level of Chern classes.
InvariantReport null_correlation_self_duality(const DegreeLedger& ledger);

// Region 0 <= w2 - v2 <= w1 <= w2 + v2, w2, v2 > 0. Throws DegreeConstraintViolated.
void require_binet_cauchy_region(long w1, long w2, long v2);

struct BinetCauchyDegrees {
    long t1, t2, u1, u2, v1, v2, w1, w2;
    std::vector<long> f_twists;  // twists a_1..a_4 of F
    long d13, d24, d12, d34, d14, d23;
    long d;  // 2(w2 + v2)
};
BinetCauchyDegrees binet_cauchy_degrees(long w1, long w2, long v2, long a1 = 0);
// Same table without the positivity of w2, v2; throws DegreeConstraintViolated.
BinetCauchyDegrees binet_cauchy_degree_table(long w1, long w2, long v2, long a1 = 0);

// Rank-2 pair A, B on P^3.
InvariantReport binet_cauchy_invariants(long w1, long w2, long v2, long a1 = 0);
ChernData binet_cauchy_quotient(long w1, long w2, long v2, long a1 = 0);  // c(B) on P^3

// Rank-3 bundle on P^4 with eps = -c1(A).
InvariantReport rank_three_invariants(long w1, long w2, long v2);

// Diagonal family w1 = w2 = v2 = n, eps = 2n.
InvariantReport diagonal_family_invariants(long n);

}  // namespace projkit
