// Exact arbitrary-precision integers and rationals, the scalar type of
// every computation in this library.  Backed by GMP; the wrappers pin
// down canonical form (reduced, positive denominator, zero = 0/1) and
// the "p/q" serialization with "/q" omitted when q = 1.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace prymcalc {

class Integer {
public:
    Integer() = default;
    Integer(long long v) : v_(static_cast<long>(v)) {}
    Integer(int v) : v_(v) {}
    explicit Integer(const std::string& decimal) {
        try {
            v_ = mpz_class(decimal);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("not a decimal integer: \"" + decimal + "\"");
        }
    }
    explicit Integer(mpz_class v) : v_(std::move(v)) {}

    const mpz_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    std::string to_string() const { return v_.get_str(); }

    // Throws when the value does not fit; used where interfaces are 64-bit.
    long long to_int64() const {
        if (!v_.fits_slong_p())
            throw std::overflow_error("integer does not fit in 64 bits: " + to_string());
        return v_.get_si();
    }

    friend Integer operator+(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ + b.v_)); }
    friend Integer operator-(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ - b.v_)); }
    friend Integer operator-(const Integer& a) { return Integer(mpz_class(-a.v_)); }
    friend Integer operator*(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ * b.v_)); }

    Integer& operator+=(const Integer& b) { v_ += b.v_; return *this; }
    Integer& operator-=(const Integer& b) { v_ -= b.v_; return *this; }
    Integer& operator*=(const Integer& b) { v_ *= b.v_; return *this; }

    friend bool operator==(const Integer& a, const Integer& b) { return cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Integer& a, const Integer& b) { return cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const Integer& a, const Integer& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Integer& a, const Integer& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Integer& a, const Integer& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Integer& a, const Integer& b) { return cmp(a.v_, b.v_) >= 0; }

private:
    mpz_class v_;
};

// Quotient a/b that must be exact; a nonzero remainder is a logic error in
// the caller's formula and is reported, never truncated.
inline Integer div_exact(const Integer& a, const Integer& b) {
    if (b.is_zero())
        throw std::domain_error("exact division by zero");
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    if (sgn(r) != 0)
        throw std::domain_error("division is not exact: " + a.to_string() + " / " + b.to_string());
    return Integer(q);
}

inline Integer factorial(long long n) {
    if (n < 0)
        throw std::invalid_argument("factorial of negative argument");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return Integer(r);
}

inline Integer pow2(long long exponent) {
    if (exponent < 0)
        throw std::invalid_argument("negative power of two");
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(exponent));
    return Integer(r);
}

// binom(top, k) with integer top (0 for k < 0 handled by caller conventions).
inline Integer binomial(const Integer& top, long long k) {
    if (k < 0)
        throw std::invalid_argument("binomial with negative lower index");
    mpz_class r;
    mpz_bin_ui(r.get_mpz_t(), top.raw().get_mpz_t(), static_cast<unsigned long>(k));
    return Integer(r);
}

inline Integer gcd(const Integer& a, const Integer& b) {
    mpz_class r;
    mpz_gcd(r.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return Integer(r);
}

class Rational {
public:
    Rational() = default;
    Rational(long long v) : v_(static_cast<long>(v)) {}
    Rational(int v) : v_(v) {}
    Rational(const Integer& v) : v_(v.raw()) {}
    Rational(const Integer& num, const Integer& den) {
        if (den.is_zero())
            throw std::domain_error("rational with zero denominator");
        v_ = mpq_class(num.raw()) / mpq_class(den.raw());
    }
    Rational(long long num, long long den) : Rational(Integer(num), Integer(den)) {}

    // Accepts "p" or "p/q" with optional leading sign, ASCII digits only.
    static Rational parse(std::string_view s) {
        auto slash = s.find('/');
        if (slash == std::string_view::npos)
            return Rational(Integer(std::string(s)));
        Integer num{std::string(s.substr(0, slash))};
        Integer den{std::string(s.substr(slash + 1))};
        return Rational(num, den);
    }

    Integer numerator() const { return Integer(mpz_class(v_.get_num())); }
    Integer denominator() const { return Integer(mpz_class(v_.get_den())); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }

    // "p/q" with "/q" dropped when q = 1.
    std::string to_string() const {
        if (is_integer())
            return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    // Re-normalization must be the identity on values built through this
    // API; exposed so tests can assert canonical-form idempotence.
    Rational normalized() const {
        mpq_class c = v_;
        c.canonicalize();
        Rational r;
        r.v_ = c;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) { return from(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return from(mpq_class(a.v_ - b.v_)); }
    friend Rational operator-(const Rational& a) { return from(mpq_class(-a.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return from(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero())
            throw std::domain_error("rational division by zero");
        return from(mpq_class(a.v_ / b.v_));
    }

    Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
    Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }
    Rational& operator*=(const Rational& b) { v_ *= b.v_; return *this; }
    Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

private:
    static Rational from(mpq_class q) {
        Rational r;
        r.v_ = std::move(q);
        return r;
    }
    mpq_class v_;  // canonical: reduced, positive denominator
};

}  // namespace prymcalc
