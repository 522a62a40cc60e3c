#include "delsarte/exactq.hpp"

#include <cstdio>

namespace delsarte {

Rational power(const Rational& x, long e)
{
    if (e < 0) {
        if (x == 0) throw MathError("zero raised to a negative power");
        Rational inv = 1 / x;
        return power(inv, -e);
    }
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(e));
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational q_int(long n, const Rational& q)
{
    if (q == 1) throw MathError("undefined base");
    if (n < 0) throw MathError("q_int needs n >= 0");
    return (power(q, n) - 1) / (q - 1);
}

Rational q_pochhammer(const Rational& a, long k, const Rational& q)
{
    Rational prod = 1;
    Rational qi = 1;
    for (long i = 0; i < k; ++i) {
        prod *= 1 - a * qi;
        qi *= q;
    }
    return prod;
}

Rational q_binomial(long n, long k, const Rational& q)
{
    if (k < 0 || k > n) return 0;
    Rational num = 1, den = 1;
    for (long j = 1; j <= k; ++j) {
        Rational d = power(q, j) - 1;
        if (d == 0) throw MathError("degenerate base");
        num *= power(q, n - j + 1) - 1;
        den *= d;
    }
    return num / den;
}

Rational basic_hypergeometric(const std::vector<Rational>& upper,
                              const std::vector<Rational>& lower,
                              const Rational& base, const Rational& z, long terms)
{
    const long shift = 1 + static_cast<long>(lower.size()) - static_cast<long>(upper.size());
    Rational total = 0;
    Rational term = 1;
    for (long l = 0; l <= terms; ++l) {
        if (l > 0) {
            // ratio of consecutive terms
            Rational ratio = z;
            for (const auto& a : upper) ratio *= 1 - a * power(base, l - 1);
            for (const auto& b : lower) {
                Rational f = 1 - b * power(base, l - 1);
                if (f == 0) throw MathError("degenerate base");
                ratio /= f;
            }
            Rational f = 1 - power(base, l);
            if (f == 0) throw MathError("degenerate base");
            ratio /= f;
            if (shift != 0) {
                // (-1)^{shift l} base^{shift C(l,2)} grows by (-base^{l-1})^shift
                ratio *= power(-power(base, l - 1), shift);
            }
            term *= ratio;
        }
        if (term == 0) break;
        total += term;
    }
    return total;
}

Integer binomial(long n, long k)
{
    if (n < 0 || k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

long choose2(long n) { return n * (n - 1) / 2; }

std::string to_string(const Rational& x) { return x.get_str(); }

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    if (s.empty() || s.find_first_of(" \t\n") != std::string::npos)
        throw MathError("malformed rational: '" + s + "'");
    Rational r;
    if (r.set_str(s, 10) != 0) throw MathError("malformed rational: '" + s + "'");
    if (r.get_den() == 0) throw MathError("zero denominator");
    r.canonicalize();
    return r;
}

std::string to_decimal(const Rational& x, int digits)
{
    mpf_class f(x, 256);
    char buf[128];
    gmp_snprintf(buf, sizeof buf, "%.*Fg", digits, f.get_mpf_t());
    return buf;
}

Rational sum(const std::vector<Rational>& xs)
{
    Rational s = 0;
    for (const auto& x : xs) s += x;
    return s;
}

}  // namespace delsarte
