#include "projkit/scalar.hpp"

#include <ostream>

namespace projkit {

std::string_view to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::DegreeMismatch: return "DegreeMismatch";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::ArityMismatch: return "ArityMismatch";
        case ErrorKind::TwistMismatch: return "TwistMismatch";
        case ErrorKind::NotAntisymmetric: return "NotAntisymmetric";
        case ErrorKind::OddSize: return "OddSize";
        case ErrorKind::DegreeInfeasible: return "DegreeInfeasible";
        case ErrorKind::RankPrereqViolated: return "RankPrereqViolated";
        case ErrorKind::InvalidParams: return "InvalidParams";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::DegenerateW: return "DegenerateW";
        case ErrorKind::CompositionNonzero: return "CompositionNonzero";
        case ErrorKind::DegreeConstraintViolated: return "DegreeConstraintViolated";
        case ErrorKind::HomogeneityViolated: return "HomogeneityViolated";
        case ErrorKind::NoCompatibleRow: return "NoCompatibleRow";
        case ErrorKind::SingularSystem: return "SingularSystem";
        case ErrorKind::IntegralityViolation: return "IntegralityViolation";
        case ErrorKind::RankNotTwo: return "RankNotTwo";
        case ErrorKind::MalformedInput: return "MalformedInput";
    }
    return "Unknown";
}

Rational::Rational(long num, long den) {
    if (den == 0) throw Error(ErrorKind::MalformedInput, "zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view s) {
    std::string t(s);
    if (t.empty()) throw Error(ErrorKind::MalformedInput, "empty rational literal");
    mpq_class q;
    if (q.set_str(t, 10) != 0) throw Error(ErrorKind::MalformedInput, "bad rational literal '" + t + "'");
    if (q.get_den() == 0) throw Error(ErrorKind::MalformedInput, "zero denominator in '" + t + "'");
    q.canonicalize();
    return Rational(q);
}

long Rational::to_long() const {
    if (!is_integer() || !v_.get_num().fits_slong_p())
        throw Error(ErrorKind::IntegralityViolation, "value " + str() + " is not a machine integer");
    return v_.get_num().get_si();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorKind::SingularSystem, "division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

namespace {

std::int64_t mod_norm(std::int64_t x, std::uint32_t p) {
    std::int64_t r = x % static_cast<std::int64_t>(p);
    return r < 0 ? r + p : r;
}

// Bring both operands to a common modulus.
std::uint32_t unify(Zp& a, Zp b) {
    if (a.p == b.p) return a.p;
    if (a.p == 0) {
        a.v = mod_norm(a.v, b.p);
        a.p = b.p;
        return a.p;
    }
    if (b.p == 0) return a.p;
    throw Error(ErrorKind::FieldMismatch,
                "residues modulo " + std::to_string(a.p) + " and " + std::to_string(b.p));
}

std::int64_t normalized_rhs(const Zp& b, std::uint32_t p) { return p ? mod_norm(b.v, p) : b.v; }

}  // namespace

Zp::Zp(std::int64_t x, std::uint32_t mod) : v(mod ? mod_norm(x, mod) : x), p(mod) {}

Zp& Zp::operator+=(const Zp& o) {
    auto m = unify(*this, o);
    v += normalized_rhs(o, m);
    if (m) v = mod_norm(v, m);
    return *this;
}

Zp& Zp::operator-=(const Zp& o) {
    auto m = unify(*this, o);
    v -= normalized_rhs(o, m);
    if (m) v = mod_norm(v, m);
    return *this;
}

Zp& Zp::operator*=(const Zp& o) {
    auto m = unify(*this, o);
    v *= normalized_rhs(o, m);
    if (m) v = mod_norm(v, m);
    return *this;
}

Zp Zp::inverse() const {
    if (p == 0) {
        if (v == 1 || v == -1) return Zp(v);
        throw Error(ErrorKind::FieldMismatch, "inverse of an unbound integer");
    }
    if (v == 0) throw Error(ErrorKind::SingularSystem, "inverse of zero residue");
    // extended Euclid
    std::int64_t t = 0, nt = 1, r = p, nr = v;
    while (nr != 0) {
        std::int64_t q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    return Zp(t, p);
}

Zp& Zp::operator/=(const Zp& o) {
    auto m = unify(*this, o);
    Zp d(normalized_rhs(o, m), m);
    return *this *= d.inverse();
}

bool operator==(const Zp& a, const Zp& b) {
    if (a.p == b.p) return a.v == b.v;
    if (a.p == 0) return mod_norm(a.v, b.p) == b.v;
    if (b.p == 0) return mod_norm(b.v, a.p) == a.v;
    return false;
}

std::ostream& operator<<(std::ostream& os, const Zp& z) { return os << z.v; }

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
    if (!is_prime(p) || p >= (1u << 31))
        throw Error(ErrorKind::InvalidParams, std::to_string(p) + " is not a prime below 2^31");
    return {Kind::PrimeField, p};
}

Zp ScalarOps<Zp>::parse(std::string_view s, const FieldSpec& f) {
    Rational r = Rational::parse(s);
    return reduce_mod(r, f.characteristic);
}

Zp reduce_mod(const Rational& r, std::uint32_t p) {
    mpz_class pp(p);
    mpz_class n = r.num() % pp;
    mpz_class d = r.den() % pp;
    if (d == 0) throw Error(ErrorKind::FieldMismatch, "denominator of " + r.str() + " vanishes mod " + std::to_string(p));
    Zp zn(n.get_si(), p), zd(d.get_si(), p);
    return zn / zd;
}

}  // namespace projkit
