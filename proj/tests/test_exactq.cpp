#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "delsarte/exactq.hpp"

using namespace delsarte;

namespace {

// q-integer computed as the plain sum 1 + q + ... + q^{n-1}
Rational naive_q_int(long n, const Rational& q)
{
    Rational s = 0, t = 1;
    for (long i = 0; i < n; ++i) {
        s += t;
        t *= q;
    }
    return s;
}

// Gaussian binomial through the q-Pascal recurrence
Rational pascal_q_binomial(long n, long k, const Rational& q)
{
    if (k < 0 || k > n) return 0;
    if (k == 0 || k == n) return 1;
    return pascal_q_binomial(n - 1, k - 1, q) + power(q, k) * pascal_q_binomial(n - 1, k, q);
}

}  // namespace

TEST_CASE("q-integers")
{
    CHECK(q_int(3, 2) == 7);
    CHECK(q_int(2, -2) == -1);
    CHECK(q_int(0, 5) == 0);
    for (long q : {-3, -2, 2, 3, 4})
        for (long n = 0; n <= 6; ++n) CHECK(q_int(n, q) == naive_q_int(n, q));
    CHECK(q_int(3, Rational(1, 2)) == Rational(7, 4));
    CHECK_THROWS_AS(q_int(3, 1), MathError);
}

TEST_CASE("pochhammer and binomials")
{
    CHECK(q_pochhammer(2, 2, 2) == 3);
    CHECK(q_pochhammer(5, 0, 3) == 1);
    CHECK(q_binomial(4, 2, 2) == 35);
    CHECK(q_binomial(2, 1, -2) == -1);
    CHECK(q_binomial(3, 5, 2) == 0);
    CHECK(q_binomial(3, -1, 2) == 0);
    for (long q : {-2, 2, 3, 4})
        for (long n = 0; n <= 6; ++n)
            for (long k = 0; k <= n; ++k) CHECK(q_binomial(n, k, q) == pascal_q_binomial(n, k, q));
    CHECK(binomial(7, 3) == 35);
    CHECK(choose2(5) == 10);
}

TEST_CASE("powers")
{
    CHECK(power(-2, -2) == Rational(1, 4));
    CHECK(power(3, 0) == 1);
    CHECK(power(Rational(2, 3), 3) == Rational(8, 27));
    CHECK_THROWS_AS(power(0, -1), MathError);
}

TEST_CASE("basic hypergeometric series")
{
    // 1phi0(q^-n; -; q, z) = (z q^-n; q)_n
    const Rational q = 2, z = 3;
    for (long n = 0; n <= 4; ++n) {
        const Rational lhs = basic_hypergeometric({power(q, -n)}, {}, q, z, n);
        CHECK(lhs == q_pochhammer(z * power(q, -n), n, q));
    }
}

TEST_CASE("rational formatting")
{
    CHECK(to_string(Rational(-3, 4)) == "-3/4");
    CHECK(to_string(Rational(6) / 3) == "2");
    CHECK(parse_rational("-3/4") == Rational(-3, 4));
    CHECK(parse_rational("10/4") == Rational(5, 2));
    CHECK_THROWS(parse_rational("abc"));
    CHECK(to_decimal(Rational(1, 3), 4) == "0.3333");
    CHECK(sum({Rational(1, 2), Rational(1, 3)}) == Rational(5, 6));
}
