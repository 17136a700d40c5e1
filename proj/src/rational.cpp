#include "markedfree/rational.hpp"

namespace markedfree {

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(mpz_class(s));
        }
        mpz_class n(s.substr(0, slash));
        mpz_class d(s.substr(slash + 1));
        if (sgn(d) == 0) throw std::invalid_argument("Rational::parse: zero denominator");
        return Rational(n, d);
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("Rational::parse: bad literal '" + s + "'");
    }
}

bool Rational::is_dyadic() const {
    const mpz_class& d = v_.get_den();
    return mpz_popcount(d.get_mpz_t()) == 1; // den > 0 and a power of two
}

bool Rational::is_power_of_two(long* exponent) const {
    if (sign() <= 0) return false;
    const mpz_class& n = v_.get_num();
    const mpz_class& d = v_.get_den();
    if (n == 1) {
        if (mpz_popcount(d.get_mpz_t()) != 1) return false;
        if (exponent) *exponent = -static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2) - 1);
        return true;
    }
    if (d == 1) {
        if (mpz_popcount(n.get_mpz_t()) != 1) return false;
        if (exponent) *exponent = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2) - 1);
        return true;
    }
    return false; // lowest terms: a 2-power has numerator or denominator equal to 1
}

long Rational::dyadic_exponent() const {
    if (!is_dyadic()) throw std::domain_error("Rational: not dyadic");
    return static_cast<long>(mpz_sizeinbase(v_.get_den().get_mpz_t(), 2) - 1);
}

mpz_class Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

std::string Rational::str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::pow2(long e) {
    mpz_class p(1);
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(e < 0 ? -e : e));
    return e >= 0 ? Rational(p) : Rational(mpz_class(1), p);
}

} // namespace markedfree
