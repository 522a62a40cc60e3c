#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "delsarte/certificates.hpp"

#include <bit>
#include <stdexcept>

using namespace delsarte;

namespace {

Rational total(const std::vector<Rational>& xs)
{
    Rational s = 0;
    for (const auto& x : xs) s += x;
    return s;
}

// |X| / (c b^n)^{d-1}, the Singleton-type size for the affine families with odd or unrestricted d
Rational singleton_size(const SchemeSpec& s, long d)
{
    return Rational(s.num_vertices) / power(s.c * power(s.b, s.n), d - 1);
}

Matrix multiply(const Matrix& a, const Matrix& b)
{
    Matrix out(a.size(), std::vector<Rational>(b[0].size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            for (std::size_t j = 0; j < b[0].size(); ++j) out[i][j] += a[i][k] * b[k][j];
    return out;
}

}  // namespace

TEST_CASE("affine dual certificate on 2x2 bilinear forms")
{
    const auto bil = make_scheme(Family::Bilinear, 2, 2, 2);
    const auto cert = dual_singleton_affine(bil, 2);
    CHECK(cert.feasible);
    CHECK(cert.closed_form_match);
    CHECK(cert.y.entries == std::vector<Rational>{1, Rational(1) / 3, 0});
    CHECK(cert.objective == 4);

    const auto dist = inner_distribution_affine(bil, 2);
    CHECK(dist.inner.entries == std::vector<Rational>{1, 0, 3});
    for (const auto& x : dist.dual.entries) CHECK(x >= 0);
}

TEST_CASE("affine sizes agree with the Singleton-type count")
{
    for (long q : {2, 3})
        for (long n = 1; n <= 3; ++n) {
            std::vector<SchemeSpec> specs = {make_scheme(Family::Bilinear, q, n, n),
                                             make_scheme(Family::Bilinear, q, n, n + 2),
                                             make_scheme(Family::Alternating, q, {}, 2 * n),
                                             make_scheme(Family::Alternating, q, {}, 2 * n + 1)};
            for (const auto& s : specs)
                for (long d = 1; d <= n; ++d) {
                    CAPTURE(describe(s));
                    CAPTURE(d);
                    CHECK(affine_code_size(s, d) == singleton_size(s, d));
                    const auto cert = dual_singleton_affine(s, d);
                    CHECK(cert.feasible);
                    CHECK(cert.objective == singleton_size(s, d));
                    CHECK(total(inner_distribution_affine(s, d).inner.entries) == singleton_size(s, d));
                }
            const auto her = make_scheme(Family::HermitianForms, q, n);
            for (long d = 1; d <= n; d += 2) CHECK(affine_code_size(her, d) == singleton_size(her, d));
        }
    CHECK(dual_singleton_affine(make_scheme(Family::Alternating, 2, {}, 5), 2).objective == 32);
}

TEST_CASE("minimum distance n leaves one nonzero class")
{
    const auto bil = make_scheme(Family::Bilinear, 3, 2, 3);
    const auto inner = inner_distribution_affine(bil, 2).inner.entries;
    CHECK(inner[0] == 1);
    CHECK(inner[1] == 0);
    CHECK(inner[2] == bil.c * power(bil.b, 2) - 1);
}

TEST_CASE("ordinary q-analogs")
{
    const auto qj = make_scheme(Family::QJohnson, 2, 2, 2);
    CHECK(ordinary_code_size(qj, 2) == 5);
    const auto cert = dual_singleton_ordinary(qj, 2);
    CHECK(cert.feasible);
    CHECK(cert.objective == 5);
    CHECK(total(inner_distribution_ordinary(qj, 2).inner.entries) == 5);

    const auto a2 = make_scheme(Family::PolarA2nMinus1, 2, 2);
    CHECK(ordinary_code_size(a2, 1) == 27);
    const auto one = inner_distribution_ordinary(a2, 1).inner.entries;
    for (long i = 0; i <= 2; ++i) CHECK(one[i] == valency(a2, i));

    CHECK_THROWS_AS(dual_singleton_ordinary(make_scheme(Family::PolarB, 2, 2), 1), std::invalid_argument);
    CHECK_THROWS_AS(dual_singleton_ordinary(a2, 2), std::invalid_argument);
}

TEST_CASE("even distance in Hermitian schemes")
{
    const auto her = make_scheme(Family::HermitianForms, 2, 2);
    CHECK_THROWS_AS(dual_singleton_affine(her, 2), std::invalid_argument);
    const auto cert = dual_hermitian_forms_even(her, 2);
    CHECK(cert.feasible);
    CHECK(cert.objective == 6);
    CHECK(cert.closed_coefficients[1] == 0);
    CHECK(hermitian_forms_even_size(her, 2) == 6);
    CHECK(total(hermitian_forms_even_distributions(her, 2).inner.entries) == 6);
    CHECK_THROWS_AS(dual_hermitian_forms_even(her, 1), std::invalid_argument);

    const auto polar = make_scheme(Family::PolarA2nMinus1, 2, 2);
    const auto pc = dual_hermitian_polar_even(polar, 2);
    CHECK(pc.feasible);
    CHECK(pc.objective == hermitian_polar_even_size(polar, 2));
    CHECK(total(hermitian_polar_even_distributions(polar, 2).inner.entries) == pc.objective);
}

TEST_CASE("epsilon factor")
{
    CHECK(epsilon_nd(2, 2, 2) == -3);
    CHECK_THROWS_AS(epsilon_nd(3, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(epsilon_nd(2, 4, 2), std::invalid_argument);
}

TEST_CASE("C matrix inverse and the QC^{-1} closed form")
{
    for (const auto& s : {make_scheme(Family::QJohnson, 2, 3, 3), make_scheme(Family::PolarA2nMinus1, 3, 3),
                          make_scheme(Family::HalfD, 2, {}, 7)}) {
        CAPTURE(describe(s));
        const long n = s.n;
        const Matrix id = multiply(c_matrix(s), c_inverse(s));
        for (long i = 0; i <= n; ++i)
            for (long j = 0; j <= n; ++j) CHECK(id[i][j] == (i == j ? 1 : 0));
        const Matrix expected = multiply(s.tables().qnum, c_inverse(s));
        CHECK(qc_inverse_product(s) == expected);
    }
}

TEST_CASE("Hamming primal codes under the Piret condition")
{
    const auto code = piret_primal_hamming(3, 3, 2);
    CHECK(total(code.entries) == 9);
    CHECK(code.entries[0] == 1);
    CHECK(code.entries[1] == 0);
    CHECK(dual_singleton_classical(make_scheme(Family::Hamming, 3, 3), 2).objective == 9);
    try {
        piret_primal_hamming(5, 2, 3);
        FAIL("expected a Piret failure");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("Piret") != std::string::npos);
    }
}

TEST_CASE("Fano fixture matches the Fano plane")
{
    const int points[7][3] = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
    std::vector<unsigned> lines;
    for (const auto& l : points) lines.push_back(1u << l[0] | 1u << l[1] | 1u << l[2]);
    std::vector<Rational> inner(4, 0);
    for (unsigned a : lines)
        for (unsigned b : lines) inner[3 - std::popcount(a & b)] += Rational(1) / 7;
    CHECK(johnson_fano_fixture().entries == inner);
    const auto pair = verify_strong_duality(make_scheme(Family::Johnson, 2, 3, 4), 2);
    CHECK(pair.duality_gap_zero);
    CHECK(pair.primal_objective == 7);
}

TEST_CASE("strong duality from closed forms")
{
    const std::vector<std::pair<SchemeSpec, long>> cases = {
        {make_scheme(Family::Bilinear, 2, 2, 3), 2},
        {make_scheme(Family::Alternating, 3, {}, 6), 2},
        {make_scheme(Family::HermitianForms, 2, 3), 2},
        {make_scheme(Family::HermitianForms, 2, 3), 3},
        {make_scheme(Family::QJohnson, 3, 2, 3), 2},
        {make_scheme(Family::PolarA2nMinus1, 2, 3), 3},
        {make_scheme(Family::PolarA2nMinus1, 2, 2), 2},
        {make_scheme(Family::HalfD, 2, {}, 6), 2},
        {make_scheme(Family::Hamming, 4, 3), 2},
    };
    for (const auto& [s, d] : cases) {
        CAPTURE(describe(s));
        CAPTURE(d);
        const auto pair = verify_strong_duality(s, d);
        CHECK(pair.duality_gap_zero);
        CHECK_FALSE(pair.violated.has_value());
        CHECK(pair.primal_objective == lp_opt(s, d));
    }
    CHECK_THROWS_AS(verify_strong_duality(make_scheme(Family::PolarB, 2, 2), 1), std::invalid_argument);
    CHECK_THROWS_AS(verify_strong_duality(make_scheme(Family::Bilinear, 2, 2, 2), 3), std::invalid_argument);
}
