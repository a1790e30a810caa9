#pragma once

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "projkit/form.hpp"
#include "projkit/graded.hpp"

namespace testing {

using projkit::Form;
using projkit::Rational;
using projkit::Zp;

inline Form<Rational> x(int nv, int i) { return Form<Rational>::variable(nv, i, Rational(1)); }
inline Form<Zp> xp(int nv, int i, std::uint32_t p) { return Form<Zp>::variable(nv, i, Zp(1, p)); }
inline Form<Rational> konst(int nv, long c) { return Form<Rational>::constant(nv, Rational(c)); }

// Determinant by the Leibniz permutation sum: an oracle independent of elimination.
template <class K>
K leibniz_det(const projkit::ScalarMatrix<K>& a) {
    const int n = static_cast<int>(a.rows());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    K acc(0);
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inv;
        K term(1);
        for (int i = 0; i < n; ++i) term = term * a(i, perm[i]);
        acc = inv % 2 ? acc - term : acc + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

// Antisymmetric 4x4 form matrix from the six entries S12, S13, S14, S23, S24, S34.
template <class K>
projkit::FormMatrix<K> antisym4(const Form<K>& s12, const Form<K>& s13, const Form<K>& s14, const Form<K>& s23,
                                const Form<K>& s24, const Form<K>& s34) {
    projkit::FormMatrix<K> m = projkit::FormMatrix<K>::Constant(4, 4, Form<K>(0));
    auto put = [&](int i, int j, const Form<K>& f) {
        m(i, j) = f;
        m(j, i) = -f;
    };
    put(0, 1, s12);
    put(0, 2, s13);
    put(0, 3, s14);
    put(1, 2, s23);
    put(1, 3, s24);
    put(2, 3, s34);
    return m;
}

}  // namespace testing
