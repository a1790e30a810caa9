#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "projkit/scalar.hpp"

namespace projkit {

using Exponent = std::vector<int>;

// All exponent vectors of total degree `deg` in `nvars` variables, lexicographically decreasing.
inline std::vector<Exponent> monomials(int nvars, int deg) {
    std::vector<Exponent> out;
    if (nvars <= 0 || deg < 0) return out;
    Exponent e(nvars, 0);
    auto rec = [&](auto& self, int i, int left) -> void {
        if (i == nvars - 1) {
            e[i] = left;
            out.push_back(e);
            return;
        }
        for (int k = left; k >= 0; --k) {
            e[i] = k;
            self(self, i + 1, left - k);
        }
    };
    rec(rec, 0, deg);
    return out;
}

// Homogeneous polynomial over K. A form with num_vars() == 0 is a
// context-free constant (what Eigen produces from Scalar(0) or Scalar(1));
// it adopts the arity of whatever it is combined with.
template <class K>
class Form {
public:
    using Terms = std::map<Exponent, K>;

    Form() = default;
    template <std::integral I>
    Form(I c) {
        if (c != 0) terms_.emplace(Exponent{}, K(c));
    }
    Form(int nvars, int nominal_degree) : nvars_(nvars), deg_(nominal_degree) {}

    static Form constant(int nvars, const K& c) {
        Form f(nvars, 0);
        if (!(c == K(0))) f.terms_.emplace(Exponent(nvars, 0), c);
        return f;
    }

    static Form monomial(const Exponent& e, const K& c) {
        Form f(static_cast<int>(e.size()), std::accumulate(e.begin(), e.end(), 0));
        if (!(c == K(0))) f.terms_.emplace(e, c);
        return f;
    }

    static Form variable(int nvars, int i, const K& one) {
        if (i < 0 || i >= nvars) throw Error(ErrorKind::IndexOutOfRange, "variable index " + std::to_string(i));
        Exponent e(nvars, 0);
        e[i] = 1;
        return monomial(e, one);
    }

    // Validates shape and homogeneity; zero coefficients are dropped.
    static Form from_terms(int nvars, int nominal_degree, const std::vector<std::pair<Exponent, K>>& terms) {
        Form f(nvars, nominal_degree);
        bool first = true;
        for (const auto& [e, c] : terms) {
            if (static_cast<int>(e.size()) != nvars)
                throw Error(ErrorKind::ArityMismatch, "exponent length differs from vars");
            int d = std::accumulate(e.begin(), e.end(), 0);
            if (std::any_of(e.begin(), e.end(), [](int x) { return x < 0; }))
                throw Error(ErrorKind::MalformedInput, "negative exponent");
            if (first) {
                f.deg_ = d;
                first = false;
            } else if (d != f.deg_) {
                throw Error(ErrorKind::DegreeMismatch, "terms of degrees " + std::to_string(f.deg_) + " and " + std::to_string(d));
            }
            auto [it, fresh] = f.terms_.emplace(e, c);
            if (!fresh) it->second += c;
        }
        f.prune();
        if (!f.terms_.empty() && f.deg_ != nominal_degree && nominal_degree >= 0)
            throw Error(ErrorKind::DegreeMismatch, "declared degree " + std::to_string(nominal_degree) +
                                                       ", terms have degree " + std::to_string(f.deg_));
        return f;
    }

    int num_vars() const { return nvars_; }
    // Nominal for the zero form.
    int degree() const { return deg_; }
    bool is_zero() const { return terms_.empty(); }
    bool context_free() const { return nvars_ == 0; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    // Coefficient of a monomial, zero when absent.
    K coeff(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? K(0) : it->second;
    }

    // Same polynomial viewed in `nvars` variables (only changes context-free constants).
    Form lifted(int nvars) const {
        if (nvars_ == nvars || nvars == 0) return *this;
        if (nvars_ != 0)
            throw Error(ErrorKind::ArityMismatch, std::to_string(nvars_) + " vs " + std::to_string(nvars) + " variables");
        Form f(nvars, 0);
        for (const auto& [e, c] : terms_) f.terms_.emplace(Exponent(nvars, 0), c);
        return f;
    }

    // Append `k` new variables (exponent zero) after the existing ones.
    Form with_extra_variables(int k) const {
        Form f(nvars_ + k, deg_);
        for (const auto& [e, c] : terms_) {
            Exponent x = e;
            x.resize(nvars_ + k, 0);
            f.terms_.emplace(std::move(x), c);
        }
        return f;
    }

    Form scaled(const K& s) const {
        Form f(nvars_, deg_);
        if (s == K(0)) return f;
        for (const auto& [e, c] : terms_) f.terms_.emplace(e, c * s);
        f.prune();
        return f;
    }

    K eval(const std::vector<K>& point) const {
        if (!context_free() && static_cast<int>(point.size()) != nvars_)
            throw Error(ErrorKind::ArityMismatch, "point of length " + std::to_string(point.size()) +
                                                      " for a form in " + std::to_string(nvars_) + " variables");
        K acc(0);
        for (const auto& [e, c] : terms_) {
            K t = c;
            for (std::size_t i = 0; i < e.size(); ++i)
                for (int k = 0; k < e[i]; ++k) t *= point[i];
            acc += t;
        }
        return acc;
    }

    Form& operator+=(const Form& o) { return *this = add(*this, o, false); }
    Form& operator-=(const Form& o) { return *this = add(*this, o, true); }
    Form& operator*=(const Form& o) { return *this = mul(*this, o); }

    friend Form operator+(const Form& a, const Form& b) { return add(a, b, false); }
    friend Form operator-(const Form& a, const Form& b) { return add(a, b, true); }
    friend Form operator*(const Form& a, const Form& b) { return mul(a, b); }
    friend Form operator-(const Form& a) { return a.scaled(K(-1)); }

    friend bool operator==(const Form& a, const Form& b) {
        if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
        int nv = common_arity(a, b);
        Form x = a.lifted(nv), y = b.lifted(nv);
        if (x.terms_.size() != y.terms_.size()) return false;
        auto i = x.terms_.begin();
        for (auto j = y.terms_.begin(); j != y.terms_.end(); ++i, ++j)
            if (i->first != j->first || !(i->second == j->second)) return false;
        return true;
    }

    std::string str(const std::vector<std::string>& names = {}) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        // print highest monomials first
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            std::string cs = ScalarOps<K>::str(c);
            bool neg = !cs.empty() && cs[0] == '-';
            if (neg) cs.erase(0, 1);
            if (first) os << (neg ? "-" : "");
            else os << (neg ? " - " : " + ");
            first = false;
            bool unit = cs == "1";
            bool any_var = std::any_of(e.begin(), e.end(), [](int x) { return x > 0; });
            if (!unit || !any_var) os << cs;
            bool need_star = !unit || !any_var;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (need_star) os << '*';
                os << (i < names.size() ? names[i] : "x" + std::to_string(i));
                if (e[i] > 1) os << '^' << e[i];
                need_star = true;
            }
        }
        return os.str();
    }

private:
    static int common_arity(const Form& a, const Form& b) {
        if (a.nvars_ == b.nvars_) return a.nvars_;
        if (a.nvars_ == 0) return b.nvars_;
        if (b.nvars_ == 0) return a.nvars_;
        throw Error(ErrorKind::ArityMismatch, std::to_string(a.nvars_) + " vs " + std::to_string(b.nvars_) + " variables");
    }

    void prune() {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (it->second == K(0)) it = terms_.erase(it);
            else ++it;
        }
    }

    static Form add(const Form& a, const Form& b, bool subtract) {
        int nv = common_arity(a, b);
        if (b.is_zero()) {
            Form r = a.lifted(nv);
            return r;
        }
        if (a.is_zero()) {
            Form r = b.lifted(nv);
            return subtract ? -r : r;
        }
        if (a.deg_ != b.deg_)
            throw Error(ErrorKind::DegreeMismatch, "adding forms of degrees " + std::to_string(a.deg_) + " and " + std::to_string(b.deg_));
        Form r = a.lifted(nv);
        Form y = b.lifted(nv);
        for (const auto& [e, c] : y.terms_) {
            auto [it, fresh] = r.terms_.emplace(e, subtract ? -c : c);
            if (!fresh) {
                if (subtract) it->second -= c;
                else it->second += c;
            }
            if (it->second == K(0)) r.terms_.erase(it);
        }
        return r;
    }

    static Form mul(const Form& a, const Form& b) {
        int nv = common_arity(a, b);
        Form r(nv, a.deg_ + b.deg_);
        if (a.is_zero() || b.is_zero()) return r;
        Form x = a.lifted(nv), y = b.lifted(nv);
        Exponent e(nv);
        for (const auto& [ea, ca] : x.terms_)
            for (const auto& [eb, cb] : y.terms_) {
                for (int i = 0; i < nv; ++i) e[i] = ea[i] + eb[i];
                K c = ca * cb;
                auto [it, fresh] = r.terms_.emplace(e, c);
                if (!fresh) it->second += c;
            }
        r.prune();
        return r;
    }

    int nvars_ = 0;
    int deg_ = 0;
    Terms terms_;
};

template <class K>
Form<K> form_add(const Form<K>& a, const Form<K>& b) { return a + b; }
template <class K>
Form<K> form_mul(const Form<K>& a, const Form<K>& b) { return a * b; }
template <class K>
K form_eval(const Form<K>& f, const std::vector<K>& point) { return f.eval(point); }

template <class K>
Form<K> power(const Form<K>& f, int k) {
    Form<K> r = Form<K>(1).lifted(f.num_vars());
    for (int i = 0; i < k; ++i) r = r * f;
    return r;
}

// Uniformly random coefficients on every monomial of the given degree.
template <class K>
Form<K> random_form(int nvars, int deg, const FieldSpec& field, std::mt19937_64& rng) {
    std::vector<std::pair<Exponent, K>> t;
    for (auto& e : monomials(nvars, deg)) t.emplace_back(std::move(e), ScalarOps<K>::random(rng, field));
    return Form<K>::from_terms(nvars, deg, t);
}

template <class K>
Form<K> linear_form(const std::vector<K>& coeffs) {
    int nv = static_cast<int>(coeffs.size());
    std::vector<std::pair<Exponent, K>> t;
    for (int i = 0; i < nv; ++i) {
        Exponent e(nv, 0);
        e[i] = 1;
        t.emplace_back(e, coeffs[i]);
    }
    return Form<K>::from_terms(nv, 1, t);
}

// Reduce rational coefficients modulo p.
inline Form<Zp> reduce_mod(const Form<Rational>& f, std::uint32_t p) {
    std::vector<std::pair<Exponent, Zp>> t;
    for (const auto& [e, c] : f.terms()) t.emplace_back(e, reduce_mod(c, p));
    return Form<Zp>::from_terms(f.num_vars(), f.degree(), t);
}

}  // namespace projkit

namespace Eigen {

template <class K>
struct NumTraits<projkit::Form<K>> : GenericNumTraits<projkit::Form<K>> {
    using Real = projkit::Form<K>;
    using NonInteger = projkit::Form<K>;
    using Nested = projkit::Form<K>;
    using Literal = projkit::Form<K>;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 64,
        MulCost = 256
    };
    static inline int digits10() { return 0; }
};

}  // namespace Eigen
