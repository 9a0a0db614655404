#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace listgap {

using BigInt = mpz_class;
using Rational = mpq_class;

std::string to_string(const BigInt &v);
/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational &v);
/// Parses "p" or "p/q"; throws std::invalid_argument.
Rational parse_rational(const std::string &text);

/// x^e for a signed exponent; x must be nonzero when e < 0.
Rational power(const Rational &x, long e);

/// Dense univariate polynomial, coefficient i multiplies x^i.
/// Trailing zeros are always trimmed, so the zero polynomial has no coefficients.
template <class Coeff>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial monomial(Coeff c, std::size_t power)
    {
        std::vector<Coeff> v(power + 1);
        v[power] = std::move(c);
        return Polynomial(std::move(v));
    }

    const std::vector<Coeff> &coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

    Coeff coeff(std::size_t power) const { return power < coeffs_.size() ? coeffs_[power] : Coeff(0); }

    Rational evaluate(const Rational &x) const
    {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc *= x;
            acc += Rational(*it);
        }
        return acc;
    }

    Polynomial &operator+=(const Polynomial &o)
    {
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    Polynomial &operator-=(const Polynomial &o)
    {
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }

    friend Polynomial operator*(const Polynomial &a, const Polynomial &b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(out));
    }

    friend bool operator==(const Polynomial &a, const Polynomial &b)
    {
        if (a.coeffs_.size() != b.coeffs_.size())
            return false;
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            if (a.coeffs_[i] != b.coeffs_[i])
                return false;
        return true;
    }

    /// Constant term first, exact decimal strings.
    std::vector<std::string> coefficient_strings() const
    {
        std::vector<std::string> out;
        out.reserve(coeffs_.size());
        for (const auto &c : coeffs_)
            out.push_back(listgap::to_string(c));
        return out;
    }

    /// Human-readable form, highest power first, e.g. "x^3 - 3x^2 + 2x".
    std::string pretty() const
    {
        if (is_zero())
            return "0";
        std::string out;
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            const Coeff &c = coeffs_[k];
            if (c == 0)
                continue;
            bool negative = c < 0;
            Coeff mag = negative ? Coeff(-c) : c;
            if (out.empty())
                out += negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            bool unit = mag == 1;
            if (!unit || k == 0)
                out += listgap::to_string(mag);
            if (k >= 1)
                out += "x";
            if (k >= 2)
                out += "^" + std::to_string(k);
        }
        return out;
    }

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back() == 0)
            coeffs_.pop_back();
    }

    std::vector<Coeff> coeffs_;
};

using IntPolynomial = Polynomial<BigInt>;
using RatPolynomial = Polynomial<Rational>;

inline Rational eval_poly(const IntPolynomial &p, const Rational &x) { return p.evaluate(x); }
inline Rational eval_poly(const RatPolynomial &p, const Rational &x) { return p.evaluate(x); }

} // namespace listgap
