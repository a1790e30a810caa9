#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "projkit/exact_la.hpp"
#include "projkit/form.hpp"

namespace projkit {

template <class K>
using FormMatrix = Eigen::Matrix<Form<K>, Eigen::Dynamic, Eigen::Dynamic>;

using Twists = std::vector<long>;

// Map of twisted free modules  (+)O(source_j) -> (+)O(target_i).
template <class K>
struct GradedMatrix {
    Twists source;
    Twists target;
    FormMatrix<K> entries;
    int num_vars = 0;

    GradedMatrix() = default;
    GradedMatrix(Twists src, Twists tgt, int nvars)
        : source(std::move(src)), target(std::move(tgt)), num_vars(nvars) {
        entries.resize(static_cast<Eigen::Index>(target.size()), static_cast<Eigen::Index>(source.size()));
        for (Eigen::Index i = 0; i < entries.rows(); ++i)
            for (Eigen::Index j = 0; j < entries.cols(); ++j) entries(i, j) = zero_at(i, j);
    }

    Eigen::Index rows() const { return entries.rows(); }
    Eigen::Index cols() const { return entries.cols(); }
    long expected_degree(Eigen::Index i, Eigen::Index j) const { return target[i] - source[j]; }
    Form<K> zero_at(Eigen::Index i, Eigen::Index j) const {
        return Form<K>(num_vars, static_cast<int>(target[i] - source[j]));
    }
    const Form<K>& operator()(Eigen::Index i, Eigen::Index j) const { return entries(i, j); }
    Form<K>& operator()(Eigen::Index i, Eigen::Index j) { return entries(i, j); }
};

struct DegreeViolation {
    Eigen::Index row = 0;
    Eigen::Index col = 0;
    long expected = 0;
    int actual = 0;
};

template <class K>
std::vector<DegreeViolation> graded_validate(const GradedMatrix<K>& m) {
    std::vector<DegreeViolation> out;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            const auto& f = m(i, j);
            if (f.is_zero()) continue;
            long want = m.expected_degree(i, j);
            if (f.degree() != want || (!f.context_free() && f.num_vars() != m.num_vars))
                out.push_back({i, j, want, f.degree()});
        }
    return out;
}

template <class K>
bool is_zero_matrix(const FormMatrix<K>& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) return false;
    return true;
}

// g o f.
template <class K>
GradedMatrix<K> graded_compose(const GradedMatrix<K>& g, const GradedMatrix<K>& f) {
    if (f.target != g.source) throw Error(ErrorKind::TwistMismatch, "target of f differs from source of g");
    if (f.num_vars != g.num_vars) throw Error(ErrorKind::ArityMismatch, "operands live in different polynomial rings");
    GradedMatrix<K> out(f.source, g.target, f.num_vars);
    FormMatrix<K> prod = g.entries * f.entries;
    for (Eigen::Index i = 0; i < out.rows(); ++i)
        for (Eigen::Index j = 0; j < out.cols(); ++j)
            if (!prod(i, j).is_zero()) out(i, j) = prod(i, j).lifted(out.num_vars);
    return out;
}

template <class K>
ScalarMatrix<K> evaluate(const FormMatrix<K>& m, const std::vector<K>& point) {
    ScalarMatrix<K> s(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) s(i, j) = m(i, j).eval(point);
    return s;
}

template <class K>
Eigen::Index rank_at_point(const GradedMatrix<K>& m, const std::vector<K>& point) {
    if (static_cast<int>(point.size()) != m.num_vars)
        throw Error(ErrorKind::ArityMismatch, "point length differs from the number of variables");
    return exact_rank<K>(evaluate(m.entries, point));
}

template <class K>
std::vector<K> random_point(int nvars, const FieldSpec& field, std::mt19937_64& rng) {
    std::vector<K> pt;
    pt.reserve(nvars);
    for (int i = 0; i < nvars; ++i) pt.push_back(ScalarOps<K>::random(rng, field));
    return pt;
}

// Probabilistic evidence: maximum rank over pseudorandom nonzero points.
template <class K>
Eigen::Index generic_rank(const GradedMatrix<K>& m, int trials, std::uint64_t seed, const FieldSpec& field) {
    std::mt19937_64 rng(seed);
    Eigen::Index best = 0;
    for (int t = 0; t < trials; ++t) {
        auto pt = random_point<K>(m.num_vars, field, rng);
        if (std::all_of(pt.begin(), pt.end(), [](const K& x) { return x == K(0); })) continue;
        best = std::max(best, rank_at_point(m, pt));
    }
    return best;
}

// Shift every twist by k; entry degrees are unchanged.
template <class K>
GradedMatrix<K> retwisted(GradedMatrix<K> m, long k) {
    for (auto& a : m.source) a += k;
    for (auto& b : m.target) b += k;
    return m;
}

template <class K>
bool same_entries(const FormMatrix<K>& a, const FormMatrix<K>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (!(a(i, j) == b(i, j))) return false;
    return true;
}

}  // namespace projkit
