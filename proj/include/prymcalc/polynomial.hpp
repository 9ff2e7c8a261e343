// Dense univariate polynomials over Rational, in the formal variable t.
#pragma once

#include "prymcalc/rational.hpp"

#include <string>
#include <vector>

namespace prymcalc {

class RationalPolynomial {
public:
    RationalPolynomial() = default;  // the zero polynomial
    explicit RationalPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static RationalPolynomial constant(const Rational& v) { return RationalPolynomial({v}); }
    static RationalPolynomial variable() { return RationalPolynomial({Rational(0), Rational(1)}); }

    // Degree of the zero polynomial is the sentinel -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    const Rational& coeff(std::size_t i) const {
        static const Rational zero;
        return i < c_.size() ? c_[i] : zero;
    }
    const Rational& leading_coeff() const {
        if (c_.empty())
            throw std::domain_error("leading coefficient of the zero polynomial");
        return c_.back();
    }

    Rational evaluate(const Rational& t) const {
        Rational acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * t + *it;
        return acc;
    }

    friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
        return RationalPolynomial(std::move(c));
    }
    friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
        return RationalPolynomial(std::move(c));
    }
    friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] += a.c_[i] * b.c_[j];
        return RationalPolynomial(std::move(c));
    }
    friend RationalPolynomial operator*(const Rational& s, const RationalPolynomial& p) {
        std::vector<Rational> c(p.c_.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = s * p.c_[i];
        return RationalPolynomial(std::move(c));
    }

    friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const RationalPolynomial& a, const RationalPolynomial& b) { return !(a == b); }

    // "7*t^2 - 7*t + 7"; unit coefficients print as "t^k", the zero
    // polynomial as "0".
    std::string to_string() const {
        if (c_.empty())
            return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            const Rational& a = c_[static_cast<std::size_t>(i)];
            if (a.is_zero())
                continue;
            Rational mag = a.sign() < 0 ? -a : a;
            if (out.empty())
                out += a.sign() < 0 ? "-" : "";
            else
                out += a.sign() < 0 ? " - " : " + ";
            bool unit = (mag == Rational(1));
            if (i == 0) {
                out += mag.to_string();
            } else {
                if (!unit)
                    out += mag.to_string() + "*";
                out += (i == 1) ? "t" : "t^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero())
            c_.pop_back();
    }
    std::vector<Rational> c_;  // c_[i] is the coefficient of t^i; no trailing zeros
};

// binom(t + shift, n) = (t+shift)(t+shift-1)...(t+shift-n+1)/n! as an exact
// polynomial in t; the empty product (n = 0) is the constant 1.
inline RationalPolynomial binomial_polynomial(long long shift, long long n) {
    if (n < 0)
        throw std::invalid_argument("binomial polynomial with negative order");
    RationalPolynomial p = RationalPolynomial::constant(1);
    for (long long k = 0; k < n; ++k)
        p = p * RationalPolynomial({Rational(shift - k), Rational(1)});
    return Rational(Integer(1), factorial(n)) * p;
}

}  // namespace prymcalc
