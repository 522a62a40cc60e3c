#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "delsarte/schemes.hpp"

#include <stdexcept>

using namespace delsarte;

namespace {

Rational krawtchouk(long n, long q, long k, long x)
{
    Rational s = 0;
    for (long j = 0; j <= k; ++j) {
        const Rational term = power(-1, j) * power(q - 1, k - j) * Rational(binomial(x, j)) *
                              Rational(binomial(n - x, k - j));
        s += term;
    }
    return s;
}

// rank of a 2 x 3 binary matrix stored as two 3-bit rows
int rank_f2(int r1, int r2)
{
    if (r1 == 0 && r2 == 0) return 0;
    if (r1 == 0 || r2 == 0 || r1 == r2) return 1;
    return 2;
}

std::vector<SchemeSpec> small_grid()
{
    std::vector<SchemeSpec> out;
    for (long q : {2, 3})
        for (long n = 1; n <= 3; ++n) {
            out.push_back(make_scheme(Family::Hamming, q, n));
            out.push_back(make_scheme(Family::QJohnson, q, n, n + 1));
            out.push_back(make_scheme(Family::Bilinear, q, n, n + 1));
            out.push_back(make_scheme(Family::HermitianForms, q, n));
            out.push_back(make_scheme(Family::PolarA2nMinus1, q, n));
            out.push_back(make_scheme(Family::PolarA2nMinus1, q, n, {}, Ordering::Standard));
            out.push_back(make_scheme(Family::PolarA2n, q, n));
            out.push_back(make_scheme(Family::PolarB, q, n));
            out.push_back(make_scheme(Family::PolarC, q, n));
            out.push_back(make_scheme(Family::PolarD, q, n));
            out.push_back(make_scheme(Family::PolarD2Elliptic, q, n));
            out.push_back(make_scheme(Family::Alternating, q, {}, 2 * n + 1));
            out.push_back(make_scheme(Family::HalfD, q, {}, 2 * n));
        }
    out.push_back(make_scheme(Family::Johnson, 2, 2, 4));
    return out;
}

}  // namespace

TEST_CASE("scheme parameters")
{
    const auto bil = make_scheme(Family::Bilinear, 2, 2, 3);
    CHECK(bil.b == 2);
    CHECK(bil.c == 2);
    CHECK(bil.num_vertices == 64);

    const auto her = make_scheme(Family::HermitianForms, 3, 2);
    CHECK(her.b == -3);
    CHECK(her.c == -1);
    CHECK(her.num_vertices == 81);

    const auto alt4 = make_scheme(Family::Alternating, 2, {}, 4);
    CHECK(alt4.n == 2);
    CHECK(alt4.b == 4);
    CHECK(alt4.c == Rational(1) / 2);
    CHECK(alt4.num_vertices == 64);
    const auto alt5 = make_scheme(Family::Alternating, 2, {}, 5);
    CHECK(alt5.c == 2);
    CHECK(alt5.num_vertices == 1024);

    const auto pc = make_scheme(Family::PolarC, 2, 2);
    CHECK(pc.num_vertices == 15);
    CHECK(valency(pc, 2) == 8);

    const auto qj = make_scheme(Family::QJohnson, 2, 2, 3);
    CHECK(qj.num_vertices == 155);
    CHECK(multiplicity(qj, 1) == 30);

    CHECK(make_scheme(Family::Johnson, 2, 3, 4).num_vertices == 35);
    CHECK(make_scheme(Family::PolarA2nMinus1, 2, 2).ordering == Ordering::Second);
    CHECK(make_scheme(Family::HalfD, 2, {}, 6).ordering == Ordering::Second);
}

TEST_CASE("scheme construction errors")
{
    CHECK_THROWS_AS(make_scheme(Family::Bilinear, 2, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(make_scheme(Family::Bilinear, 1, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(make_scheme(Family::Alternating, 2, 3, 5), std::invalid_argument);
    CHECK_THROWS_AS(make_scheme(Family::PolarC, 2, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("nonsense"), std::invalid_argument);
    CHECK(parse_family(scheme_id(Family::PolarD2Elliptic)) == Family::PolarD2Elliptic);
}

TEST_CASE("second ordering permutation")
{
    CHECK(second_ordering_permutation(4) == std::vector<long>{0, 4, 1, 3, 2});
    CHECK(second_ordering_permutation(3) == std::vector<long>{0, 3, 1, 2});
}

TEST_CASE("bilinear valencies match a rank count")
{
    long counts[3] = {0, 0, 0};
    for (int r1 = 0; r1 < 8; ++r1)
        for (int r2 = 0; r2 < 8; ++r2) ++counts[rank_f2(r1, r2)];
    const auto bil = make_scheme(Family::Bilinear, 2, 2, 3);
    for (long i = 0; i <= 2; ++i) CHECK(valency(bil, i) == counts[i]);
    CHECK(valency(make_scheme(Family::Bilinear, 3, 2, 2), 1) == 32);
}

TEST_CASE("Hamming tables are Krawtchouk values")
{
    for (long q : {2, 3, 4})
        for (long n = 1; n <= 5; ++n) {
            const auto h = make_scheme(Family::Hamming, q, n);
            for (long i = 0; i <= n; ++i)
                for (long k = 0; k <= n; ++k) CHECK(p_number(h, i, k) == krawtchouk(n, q, i, k));
        }
}

TEST_CASE("eigenmatrices are mutually inverse up to |X|")
{
    for (const auto& s : small_grid()) {
        CAPTURE(describe(s));
        const auto& t = s.tables();
        const long n = s.n;
        Rational vsum = 0, msum = 0;
        for (long i = 0; i <= n; ++i) vsum += t.valency[i];
        for (long k = 0; k <= n; ++k) msum += t.multiplicity[k];
        CHECK(vsum == Rational(s.num_vertices));
        CHECK(msum == Rational(s.num_vertices));
        for (long i = 0; i <= n; ++i)
            for (long j = 0; j <= n; ++j) {
                Rational acc = 0;
                for (long k = 0; k <= n; ++k) acc += t.pnum[i][k] * t.qnum[k][j];
                CHECK(acc == (i == j ? Rational(s.num_vertices) : Rational(0)));
            }
    }
}

TEST_CASE("polar space sizes by the product over isotropic flags")
{
    // prod_{i<n} (1 + r^{i} s) with (r, s) per family
    auto expect = [](long r, long s, long n) -> Rational {
        Rational prod = 1;
        for (long i = 0; i < n; ++i) prod *= 1 + power(r, i) * s;
        return prod;
    };
    for (long q : {2, 3, 4})
        for (long n = 1; n <= 4; ++n) {
            CAPTURE(q);
            CAPTURE(n);
            CHECK(make_scheme(Family::PolarB, q, n).num_vertices == expect(q, q, n));
            CHECK(make_scheme(Family::PolarC, q, n).num_vertices == expect(q, q, n));
            CHECK(make_scheme(Family::PolarD, q, n).num_vertices == expect(q, 1, n));
            CHECK(make_scheme(Family::PolarD2Elliptic, q, n).num_vertices == expect(q, q * q, n));
            CHECK(make_scheme(Family::PolarA2nMinus1, q, n).num_vertices == expect(q * q, q, n));
            CHECK(make_scheme(Family::PolarA2n, q, n).num_vertices == expect(q * q, q * q * q, n));
        }
}
