#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <string_view>

#include <Eigen/Core>
#include <gmpxx.h>

#include "projkit/errors.hpp"

namespace projkit {

// Exact rational. Wraps mpq_class so that every operator returns a concrete
// value; gmpxx expression templates do not survive inside Eigen kernels.
class Rational {
public:
    Rational() = default;
    template <std::integral I>
    Rational(I v) : v_(static_cast<long>(v)) {}
    Rational(long num, long den);
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
    explicit Rational(const mpz_class& v) : v_(v) {}

    // "a" or "a/b"; throws MalformedInput.
    static Rational parse(std::string_view s);

    std::string str() const { return v_.get_str(); }
    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    // Requires is_integer() and a value fitting in long.
    long to_long() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Residue modulo a prime p < 2^31. p == 0 marks an integer not yet bound to a
// modulus (Eigen builds Scalar(0) and Scalar(1) without context); it adopts
// the modulus of the other operand.
struct Zp {
    std::int64_t v = 0;
    std::uint32_t p = 0;

    Zp() = default;
    template <std::integral I>
    Zp(I x) : v(static_cast<std::int64_t>(x)) {}
    Zp(std::int64_t x, std::uint32_t mod);

    bool bound() const { return p != 0; }
    bool is_zero() const { return v == 0; }
    std::uint32_t modulus() const { return p; }
    std::string str() const { return std::to_string(v); }

    Zp inverse() const;

    Zp& operator+=(const Zp& o);
    Zp& operator-=(const Zp& o);
    Zp& operator*=(const Zp& o);
    Zp& operator/=(const Zp& o);

    friend Zp operator+(Zp a, const Zp& b) { return a += b; }
    friend Zp operator-(Zp a, const Zp& b) { return a -= b; }
    friend Zp operator*(Zp a, const Zp& b) { return a *= b; }
    friend Zp operator/(Zp a, const Zp& b) { return a /= b; }
    friend Zp operator-(const Zp& a) { return Zp(0) - a; }
    friend bool operator==(const Zp& a, const Zp& b);
    // Total order on residues, used only to keep containers canonical.
    friend bool operator<(const Zp& a, const Zp& b) { return a.v < b.v; }
};

std::ostream& operator<<(std::ostream& os, const Zp& z);

bool is_prime(std::uint64_t n);

struct FieldSpec {
    enum class Kind { Rationals, PrimeField };
    Kind kind = Kind::Rationals;
    std::uint32_t characteristic = 0;

    static FieldSpec rationals() { return {}; }
    // Throws InvalidParams unless p is a prime < 2^31.
    static FieldSpec prime(std::uint32_t p);

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

// Per-scalar hooks used by generic code.
template <class K>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
    static Rational from_int(long v, const FieldSpec&) { return Rational(v); }
    static Rational random(std::mt19937_64& rng, const FieldSpec&) {
        return Rational(static_cast<long>(rng() % 7) - 3);
    }
    static Rational parse(std::string_view s, const FieldSpec&) { return Rational::parse(s); }
    static std::string str(const Rational& r) { return r.str(); }
    static FieldSpec field_of(const Rational&) { return FieldSpec::rationals(); }
};

template <>
struct ScalarOps<Zp> {
    static Zp from_int(long v, const FieldSpec& f) { return Zp(v, f.characteristic); }
    static Zp random(std::mt19937_64& rng, const FieldSpec& f) {
        return Zp(static_cast<std::int64_t>(rng() % f.characteristic), f.characteristic);
    }
    static Zp parse(std::string_view s, const FieldSpec& f);
    static std::string str(const Zp& z) { return z.str(); }
    static FieldSpec field_of(const Zp& z) {
        return z.bound() ? FieldSpec{FieldSpec::Kind::PrimeField, z.p} : FieldSpec::rationals();
    }
};

// Reduce a rational modulo p; throws FieldMismatch when p divides the denominator.
Zp reduce_mod(const Rational& r, std::uint32_t p);

}  // namespace projkit

namespace Eigen {

template <>
struct NumTraits<projkit::Rational> : GenericNumTraits<projkit::Rational> {
    using Real = projkit::Rational;
    using NonInteger = projkit::Rational;
    using Nested = projkit::Rational;
    using Literal = projkit::Rational;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 16,
        MulCost = 32
    };
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<projkit::Zp> : GenericNumTraits<projkit::Zp> {
    using Real = projkit::Zp;
    using NonInteger = projkit::Zp;
    using Nested = projkit::Zp;
    using Literal = projkit::Zp;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 2,
        MulCost = 4
    };
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace projkit {

template <class K>
using ScalarMatrix = Eigen::Matrix<K, Eigen::Dynamic, Eigen::Dynamic>;
template <class K>
using ScalarVector = Eigen::Matrix<K, Eigen::Dynamic, 1>;

}  // namespace projkit
