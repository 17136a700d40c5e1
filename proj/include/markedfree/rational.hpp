#pragma once

/// \file rational.hpp
/// Exact arbitrary-precision rationals, the number type for every coordinate,
/// slope and offset in the project. Backed by GMP's mpq_class; always stored
/// in lowest terms with positive denominator (GMP canonicalizes on
/// construction). No floating point exists anywhere downstream of this type.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace markedfree {

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d) : v_(n, d) { require_nonzero_den(); v_.canonicalize(); }
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& n, const mpz_class& d) : v_(n, d) { require_nonzero_den(); v_.canonicalize(); }
    explicit Rational(mpq_class q) : v_(std::move(q)) { require_nonzero_den(); v_.canonicalize(); }

    /// Parses "num/den" or plain "num" (base 10). Throws std::invalid_argument.
    static Rational parse(const std::string& s);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    /// True iff the denominator is a power of two (integers included).
    bool is_dyadic() const;

    /// True iff the value is 2^k for some integer k; on success stores k.
    bool is_power_of_two(long* exponent = nullptr) const;

    /// Exponent e of the denominator 2^e for dyadic values (0 for integers).
    long dyadic_exponent() const;

    /// Largest integer <= value.
    mpz_class floor() const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(v_ / o.v_));
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    Rational reciprocal() const {
        if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
        return Rational(mpq_class(1 / v_));
    }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    /// Exact "num/den" string, denominator always present ("3/1", "-5/2").
    std::string str() const;

    /// 2^e for any integer e (negative allowed).
    static Rational pow2(long e);

private:
    void require_nonzero_den() {
        if (sgn(v_.get_den()) == 0) throw std::domain_error("Rational: zero denominator");
    }
    mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

} // namespace markedfree
