#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "projkit/graded.hpp"
#include "projkit/weights.hpp"

namespace projkit {

// g : O(0) -> (+)O(deg g_i), a single column; f constant antisymmetric.
struct MonadData {
    GradedMatrix<Rational> g;
    ScalarMatrix<Rational> f;
    DegreeLedger ledger;
};

GradedMatrix<Rational> monad_column(const std::vector<Form<Rational>>& forms, int nvars);

struct MonadReport {
    bool composition_zero = false;
    std::vector<std::string> composition_residue;  // nonzero homogeneous parts, if any
    std::vector<DegreeViolation> degree_failures;
    bool f_antisymmetric = false;
    bool f_nondegenerate = false;
    long quotient_rank = 0;
    long null_correlation_rank = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

MonadReport verify_monad(const MonadData& m);

// g^T f g, grouped by degree so that g_i of unequal degrees can be paired.
std::map<int, Form<Rational>> monad_composition(const std::vector<Form<Rational>>& g, const ScalarMatrix<Rational>& f);

struct ZeroCertificate {
    std::uint32_t prime = 0;
    long points_scanned = 0;
    long points_total = 0;
    std::optional<std::vector<std::int64_t>> witness;  // normalized, first nonzero coordinate 1
    bool empty() const { return !witness; }
};

long projective_point_count(std::uint32_t p, int nvars);
// k-th normalized point of P^{nvars-1}(F_p) in lexicographic order.
std::vector<std::int64_t> projective_point(std::uint32_t p, int nvars, long k);

// Exhaustive scan; the reported witness is the first common zero in
// enumeration order regardless of the thread count.
ZeroCertificate zero_locus_certificate(const std::vector<Form<Zp>>& forms, std::uint32_t p, int nvars,
                                       unsigned threads = 1);
ZeroCertificate zero_locus_certificate(const std::vector<Form<Rational>>& forms, std::uint32_t p, int nvars,
                                       unsigned threads = 1);
std::vector<ZeroCertificate> zero_locus_certificates(const std::vector<Form<Rational>>& forms,
                                                     const std::vector<std::uint32_t>& primes, int nvars,
                                                     unsigned threads = 1);

}  // namespace projkit
