#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace delsarte {

using Rational = mpq_class;
using Integer = mpz_class;

class MathError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

Rational power(const Rational& x, long e);

// (q^n - 1)/(q - 1); q = 1 is rejected rather than taking the limit.
Rational q_int(long n, const Rational& q);

// (a;q)_k = prod_{i<k} (1 - a q^i)
Rational q_pochhammer(const Rational& a, long k, const Rational& q);

// Gaussian binomial by the defining product. Zero outside 0 <= k <= n.
Rational q_binomial(long n, long k, const Rational& q);

// Terminating basic hypergeometric series r_phi_s summed for l = 0..terms.
Rational basic_hypergeometric(const std::vector<Rational>& upper,
                              const std::vector<Rational>& lower,
                              const Rational& base, const Rational& z, long terms);

Integer binomial(long n, long k);
long choose2(long n);

inline int sign(const Rational& x) { return sgn(x); }

std::string to_string(const Rational& x);
Rational parse_rational(std::string_view text);
std::string to_decimal(const Rational& x, int digits = 6);

Rational sum(const std::vector<Rational>& xs);

}  // namespace delsarte
