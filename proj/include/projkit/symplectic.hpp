#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "projkit/scalar.hpp"

namespace projkit {

// z_{p,q} = x^{2n+1-p} y^p  ^  x^{2n+1-q} y^q, with p < q.
struct WedgeIndex {
    int p = 0;
    int q = 1;
    friend auto operator<=>(const WedgeIndex&, const WedgeIndex&) = default;
};

using WedgeCombination = std::map<WedgeIndex, Rational>;

mpz_class factorial(long k);

// Throws IndexOutOfRange.
Rational pairing(int n, const WedgeIndex& a, const WedgeIndex& b);
Rational pairing(int n, const WedgeCombination& a, const WedgeCombination& b);

// E_k spanned by z_{p,q} with p + q = k, for k = 1..4n+1.
std::map<int, std::vector<WedgeIndex>> weight_decomposition(int n);

long wedge_dimension(int n);   // C(2n+2, 2)
long tango_dimension(int n);   // C(2n+2, 2) - (4n+1)

struct SymplecticForm {
    std::vector<Rational> coefficients;  // f_p on z_{p,2n+1-p}, p = 0..n
    ScalarMatrix<Rational> matrix;       // (2n+2) x (2n+2) antidiagonal
    std::vector<WedgeCombination> hyperplane_basis;
    WedgeCombination as_combination() const;
};

// Pairing-orthogonal complement of ker(functional) inside E_{2n+1}.
// Throws InvalidParams for the zero functional and DegenerateW when the
// kernel contains a basis vector.
SymplecticForm build_fW(int n, const std::vector<Rational>& functional);

struct SigmaInvariance {
    bool invariant = true;
    std::optional<long> exponent;
};

// Every nonzero f_ij must share the weight sum a_i + a_j.
SigmaInvariance check_sigma_invariance(const ScalarMatrix<Rational>& f, const std::vector<long>& weights);

// Antidiagonal antisymmetric matrix with F(p, 2n+1-p) = coeffs[p] for p <= n.
ScalarMatrix<Rational> antidiagonal_form(const std::vector<Rational>& coeffs);

// Evidence only: counts decomposable (rank <= 2) elements among `samples`
// random F_p-combinations of `span`.
long decomposable_samples(const std::vector<ScalarMatrix<Rational>>& span, std::uint32_t prime, int samples,
                          std::uint64_t seed);

}  // namespace projkit
