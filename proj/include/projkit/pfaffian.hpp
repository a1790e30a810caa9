#pragma once

#include <bit>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "projkit/graded.hpp"

namespace projkit {

namespace detail {
template <class K>
bool vanishes(const Form<K>& f) { return f.is_zero(); }
inline bool vanishes(const Rational& x) { return x.is_zero(); }
inline bool vanishes(const Zp& x) { return x.is_zero(); }
}  // namespace detail

// Pfaffians of principal submatrices of one antisymmetric matrix, memoized on
// the bitmask of kept indices. Expansion is along the smallest kept index.
template <class T>
class PfaffianTable {
public:
    using Matrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;

    explicit PfaffianTable(const Matrix& m) : m_(m) {
        if (m.rows() > 64) throw Error(ErrorKind::IndexOutOfRange, "pfaffian tables support at most 64 indices");
    }

    T of_mask(std::uint64_t mask) {
        if (mask == 0) return T(1);
        if (std::popcount(mask) % 2) return T(0);
        if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
        const int first = std::countr_zero(mask);
        const std::uint64_t rest = mask & ~(std::uint64_t{1} << first);
        T acc(0);
        int k = 0;
        for (std::uint64_t bits = rest; bits; bits &= bits - 1) {
            const int j = std::countr_zero(bits);
            ++k;
            const T& a = m_(first, j);
            if (detail::vanishes(a)) continue;
            T sub = of_mask(rest & ~(std::uint64_t{1} << j));
            if (detail::vanishes(sub)) continue;
            if (k % 2) acc += a * sub;
            else acc -= a * sub;
        }
        memo_.emplace(mask, acc);
        return acc;
    }

    T of_kept(const std::vector<int>& keep) { return of_mask(mask_of(keep)); }

    T without(const std::vector<int>& removed) {
        std::uint64_t all = m_.rows() == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << m_.rows()) - 1);
        return of_mask(all & ~mask_of(removed));
    }

    T full() { return without({}); }

    static std::uint64_t mask_of(const std::vector<int>& idx) {
        std::uint64_t m = 0;
        for (int i : idx) m |= std::uint64_t{1} << i;
        return m;
    }

private:
    const Matrix& m_;
    std::unordered_map<std::uint64_t, T> memo_;
};

template <class T>
T pfaffian_of(const Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>& m) {
    if (m.rows() % 2) throw Error(ErrorKind::OddSize, "pfaffian of odd-size matrix");
    PfaffianTable<T> t(m);
    return t.full();
}

// Throws NotAntisymmetric / OddSize.
template <class K>
void require_antisymmetric(const GradedMatrix<K>& m) {
    if (m.rows() != m.cols()) throw Error(ErrorKind::NotAntisymmetric, "matrix is not square");
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        if (!m(i, i).is_zero()) throw Error(ErrorKind::NotAntisymmetric, "nonzero diagonal entry");
        for (Eigen::Index j = i + 1; j < m.cols(); ++j)
            if (!(m(i, j) == -m(j, i)))
                throw Error(ErrorKind::NotAntisymmetric,
                            "entries (" + std::to_string(i) + "," + std::to_string(j) + ") and transpose disagree");
    }
    if (m.rows() % 2) throw Error(ErrorKind::OddSize, "antisymmetric matrix of odd size");
}

template <class K>
Form<K> pfaffian(const GradedMatrix<K>& m) {
    require_antisymmetric(m);
    return pfaffian_of(m.entries).lifted(m.num_vars);
}

// Pfaffian of the principal submatrix with `removed` (0-based) deleted.
template <class K>
Form<K> sub_pfaffian(const GradedMatrix<K>& m, std::vector<int> removed) {
    if (m.rows() != m.cols()) throw Error(ErrorKind::NotAntisymmetric, "matrix is not square");
    std::sort(removed.begin(), removed.end());
    if (std::adjacent_find(removed.begin(), removed.end()) != removed.end())
        throw Error(ErrorKind::IndexOutOfRange, "repeated index");
    for (int r : removed)
        if (r < 0 || r >= m.rows()) throw Error(ErrorKind::IndexOutOfRange, "index " + std::to_string(r));
    if ((m.rows() - static_cast<Eigen::Index>(removed.size())) % 2)
        throw Error(ErrorKind::OddSize, "complement of removed set has odd size");
    require_antisymmetric(m);
    PfaffianTable<Form<K>> t(m.entries);
    return t.without(removed).lifted(m.num_vars);
}

// Lexicographic k-subsets of {0..n-1}.
std::vector<std::vector<int>> combinations(int n, int k);

// Parity of the permutation given as a sequence of distinct integers 0..n-1.
int permutation_sign(const std::vector<int>& seq);

// phi = Sigma^T J Sigma, J the standard 2n x 2n symplectic matrix.
template <class K>
FormMatrix<K> symplectic_gram(const FormMatrix<K>& sigma, int n) {
    if (sigma.rows() != 2 * n) throw Error(ErrorKind::ArityMismatch, "Sigma must have 2n rows");
    FormMatrix<K> j = FormMatrix<K>::Constant(2 * n, 2 * n, Form<K>(0));
    for (int k = 0; k < n; ++k) {
        j(k, k + n) = Form<K>(1);
        j(k + n, k) = Form<K>(-1);
    }
    FormMatrix<K> left = sigma.transpose() * j;
    FormMatrix<K> s = left * sigma;
    for (Eigen::Index a = 0; a < s.rows(); ++a) s(a, a) = Form<K>(0);
    return s;
}

// Wrap Sigma^T J Sigma as a graded map with target twists `target` and
// source twists -target - shift (entry (i,j) of degree t_i + t_j + shift).
template <class K>
GradedMatrix<K> phi_from_sections(const FormMatrix<K>& sigma, int n, const Twists& target, long shift, int nvars) {
    Twists source;
    for (long t : target) source.push_back(-t - shift);
    GradedMatrix<K> phi(source, target, nvars);
    FormMatrix<K> s = symplectic_gram(sigma, n);
    for (Eigen::Index a = 0; a < s.rows(); ++a)
        for (Eigen::Index b = 0; b < s.cols(); ++b)
            if (!s(a, b).is_zero()) phi(a, b) = s(a, b).lifted(nvars);
    return phi;
}

// Random rank-2n antisymmetric phi = Sigma^T J Sigma. Column j of Sigma has
// degree section_degrees[j] in rows 0..n-1 and section_degrees[j] + lower_shift
// in rows n..2n-1.
template <class K>
GradedMatrix<K> make_rank2n_phi(int n, const Twists& section_degrees, const FieldSpec& field, int nvars,
                                std::uint64_t seed, long lower_shift = 0) {
    if (n < 1 || static_cast<int>(section_degrees.size()) != 4 * n)
        throw Error(ErrorKind::DegreeInfeasible, "need 4n section degrees");
    for (long d : section_degrees)
        if (d < 0 || d + lower_shift < 0) throw Error(ErrorKind::DegreeInfeasible, "negative section degree");
    std::mt19937_64 rng(seed);
    FormMatrix<K> sigma(2 * n, 4 * n);
    for (int k = 0; k < 2 * n; ++k)
        for (int j = 0; j < 4 * n; ++j)
            sigma(k, j) = random_form<K>(nvars, static_cast<int>(section_degrees[j] + (k >= n ? lower_shift : 0)), field, rng);
    return phi_from_sections<K>(sigma, n, section_degrees, lower_shift, nvars);
}

// Twist sum a_i + b_i, required constant for an antisymmetric graded map.
template <class K>
long antisymmetric_twist_sum(const GradedMatrix<K>& phi) {
    long c = phi.source.at(0) + phi.target.at(0);
    for (std::size_t i = 1; i < phi.source.size(); ++i)
        if (phi.source[i] + phi.target[i] != c)
            throw Error(ErrorKind::DegreeInfeasible, "source + target twists are not constant");
    return c;
}

// Every pfaffian of size `size` vanishes identically.
template <class K>
bool all_pfaffians_vanish(const GradedMatrix<K>& phi, int size) {
    PfaffianTable<Form<K>> t(phi.entries);
    for (const auto& keep : combinations(static_cast<int>(phi.rows()), size))
        if (!t.of_kept(keep).is_zero()) return false;
    return true;
}

template <class K>
bool sampled_pfaffians_vanish(const GradedMatrix<K>& phi, int size, int trials, std::uint64_t seed, const FieldSpec& field) {
    std::mt19937_64 rng(seed);
    auto subsets = combinations(static_cast<int>(phi.rows()), size);
    for (int t = 0; t < trials; ++t) {
        auto pt = random_point<K>(phi.num_vars, field, rng);
        ScalarMatrix<K> s = evaluate(phi.entries, pt);
        PfaffianTable<K> table(s);
        for (const auto& keep : subsets)
            if (!(table.of_kept(keep) == K(0))) return false;
    }
    return true;
}

// Rows of psi are the (2n-1)-subsets L in lexicographic order; entry (L, j)
// is sign(L, j, rest) * Pf(phi without L and j), zero when j is in L.
template <class K>
GradedMatrix<K> make_psi(const GradedMatrix<K>& phi, int n, const FieldSpec& field = FieldSpec::rationals(),
                         std::uint64_t seed = 0) {
    require_antisymmetric(phi);
    const int size = 4 * n;
    if (phi.rows() != size) throw Error(ErrorKind::ArityMismatch, "phi must be 4n x 4n");
    const long twist_sum = antisymmetric_twist_sum(phi);
    const bool prereq = size <= 12 ? all_pfaffians_vanish(phi, 2 * n + 2)
                                   : sampled_pfaffians_vanish(phi, 2 * n + 2, 4, seed, field);
    if (!prereq) throw Error(ErrorKind::RankPrereqViolated, "a (2n+2)-pfaffian of phi is nonzero");

    const auto rows = combinations(size, 2 * n - 1);
    Twists target;
    for (const auto& l : rows) {
        long c = -static_cast<long>(n) * twist_sum;
        for (int k = 0; k < size; ++k)
            if (std::find(l.begin(), l.end(), k) == l.end()) c += phi.target[k];
        target.push_back(c);
    }
    GradedMatrix<K> psi(phi.target, target, phi.num_vars);
    PfaffianTable<Form<K>> table(phi.entries);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& l = rows[r];
        for (int j = 0; j < size; ++j) {
            if (std::find(l.begin(), l.end(), j) != l.end()) continue;
            std::vector<int> seq(l.begin(), l.end());
            seq.push_back(j);
            std::vector<int> removed = seq;
            for (int k = 0; k < size; ++k)
                if (std::find(removed.begin(), removed.end(), k) == removed.end()) seq.push_back(k);
            Form<K> pf = table.without(removed);
            if (pf.is_zero()) continue;
            psi(static_cast<Eigen::Index>(r), j) = (permutation_sign(seq) > 0 ? pf : -pf).lifted(phi.num_vars);
        }
    }
    return psi;
}

// sum_k (-1)^k phi(i, j_k) Pf(phi without l, i, j_k), j_k running over the
// complement of l and i in increasing order, k from 1. Vanishes whenever the
// (2n+2)-pfaffians of phi do.
template <class K>
Form<K> expansion_identity(const GradedMatrix<K>& phi, const std::vector<int>& l, int i) {
    PfaffianTable<Form<K>> table(phi.entries);
    Form<K> acc(0);
    int k = 0;
    for (int j = 0; j < phi.rows(); ++j) {
        if (j == i || std::find(l.begin(), l.end(), j) != l.end()) continue;
        ++k;
        std::vector<int> removed = l;
        removed.push_back(i);
        removed.push_back(j);
        Form<K> term = phi(i, j) * table.without(removed);
        if (k % 2) acc -= term;
        else acc += term;
    }
    return acc.lifted(phi.num_vars);
}

}  // namespace projkit
