#include "listgap/polynomial.hpp"

#include <stdexcept>

namespace listgap {

std::string to_string(const BigInt &v) { return v.get_str(); }

std::string to_string(const Rational &v)
{
    Rational c = v;
    c.canonicalize();
    if (c.get_den() == 1)
        return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(const std::string &text)
{
    if (text.empty())
        throw std::invalid_argument("empty rational");
    Rational r;
    if (r.set_str(text, 10) != 0)
        throw std::invalid_argument("malformed rational \"" + text + "\"");
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator in \"" + text + "\"");
    r.canonicalize();
    return r;
}

Rational power(const Rational &x, long e)
{
    if (e < 0) {
        if (x == 0)
            throw std::domain_error("zero to a negative power");
        Rational inv = 1 / x;
        return power(inv, -e);
    }
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(out.get_den_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(e));
    return out;
}

} // namespace listgap
