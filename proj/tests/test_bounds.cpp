#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "delsarte/bounds.hpp"
#include "delsarte/delsartelp.hpp"

#include <stdexcept>

using namespace delsarte;

TEST_CASE("closed-form LP optima")
{
    CHECK(lp_optimum_formula(make_scheme(Family::Bilinear, 2, 2, 3), 2) == 8);
    CHECK(lp_optimum_formula(make_scheme(Family::Hamming, 4, 3), 2) == 16);
    CHECK(lp_optimum_formula(make_scheme(Family::PolarA2nMinus1, 2, 2), 2) == 9);
    CHECK(lp_optimum_formula(make_scheme(Family::HermitianForms, 2, 2), 2) == 6);
    CHECK(lp_optimum_formula(make_scheme(Family::QJohnson, 2, 2, 2), 2) == 5);
    try {
        lp_optimum_formula(make_scheme(Family::Hamming, 2, 5), 3);
        FAIL("expected a Piret failure");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()) == "Piret condition fails: q < max{d, n-d+2}");
    }
    CHECK_THROWS_AS(lp_optimum_formula(make_scheme(Family::PolarB, 2, 3), 2), std::invalid_argument);
}

TEST_CASE("printed product forms agree with the solver")
{
    for (long q : {2, 3})
        for (long n = 1; n <= 3; ++n)
            for (const auto& s : {make_scheme(Family::Bilinear, q, n, n + 1), make_scheme(Family::HermitianForms, q, n),
                                  make_scheme(Family::QJohnson, q, n, n), make_scheme(Family::PolarA2nMinus1, q, n),
                                  make_scheme(Family::Alternating, q, {}, 2 * n + 1)})
                for (long d = 1; d <= n; ++d) {
                    if (s.family == Family::QJohnson && d == 1) continue;
                    CAPTURE(describe(s));
                    CAPTURE(d);
                    bool covered = true;
                    Rational formula;
                    try {
                        formula = lp_optimum_formula(s, d);
                    } catch (const std::invalid_argument&) {
                        covered = false;
                    }
                    if (!covered) continue;
                    CHECK(formula == lp_optimum_product_form(s, d));
                    CHECK(formula == lp_opt(s, d));
                }
}

TEST_CASE("polar spaces of types B, C and D")
{
    CHECK(lp_optimum_bcd(Family::PolarC, 2, 2, 1) == 15);
    CHECK(lp_optimum_bcd(Family::PolarC, 2, 3, 3) == 9);
    const Integer d4 = make_scheme(Family::PolarD, 2, 4).num_vertices;
    CHECK(lp_optimum_bcd(Family::PolarD, 2, 4, 2) == Rational(d4) / 2);
    CHECK_THROWS_AS(lp_optimum_bcd(Family::PolarC, 2, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(lp_optimum_bcd(Family::PolarD, 2, 3, 1), std::invalid_argument);
    for (long q : {2, 3})
        for (long n = 2; n <= 4; ++n) {
            for (long d = 1; d <= n; d += 2) {
                CAPTURE(n);
                CAPTURE(d);
                CHECK(lp_optimum_bcd(Family::PolarC, q, n, d) == lp_optimum_bcd_direct(Family::PolarC, q, n, d));
                CHECK(lp_optimum_bcd(Family::PolarB, q, n, d) == lp_optimum_bcd_reduced(Family::PolarB, q, n, d));
            }
            for (long d = 2; d <= n; d += 2)
                CHECK(lp_optimum_bcd(Family::PolarD, q, n, d) == lp_optimum_bcd_direct(Family::PolarD, q, n, d));
        }
}

TEST_CASE("t-intersecting bounds")
{
    CHECK(ekr_bound(make_scheme(Family::QJohnson, 2, 2, 2), 1) == 7);
    CHECK(ekr_bound(make_scheme(Family::Bilinear, 2, 2, 2), 1) == 4);
    CHECK(ekr_bound(make_scheme(Family::Hamming, 4, 3), 1) == 16);
    const auto bil = make_scheme(Family::Bilinear, 3, 3, 4);
    for (long t = 1; t <= 3; ++t) {
        CHECK(ekr_bound(bil, t) == ekr_bound_via_lp(bil, t));
        CHECK(ekr_bound(bil, t) == ekr_bound_via_lp(bil, t, true));
    }
    const auto rep = ekr_report(make_scheme(Family::QJohnson, 2, 2, 2), 1);
    CHECK(rep.param_name == "t");
    CHECK(rep.verdict == Verdict::Match);
}

TEST_CASE("simplified polar bounds")
{
    CHECK(ekr_simple_bound(Family::PolarC, 2, 5, 3) == 128);
    CHECK(ekr_simple_bound(Family::PolarD, 2, 5, 2) == 256);
    for (const auto fam : {Family::PolarB, Family::PolarC, Family::PolarD, Family::PolarA2nMinus1})
        for (long q : {2, 3})
            for (long n = 3; n <= 6; ++n)
                for (long t = 2; t < n; ++t) {
                    if (!ekr_simple_admissible(fam, n, t)) continue;
                    CAPTURE(scheme_id(fam));
                    CAPTURE(n);
                    CAPTURE(t);
                    CHECK(ekr_bound(make_scheme(fam, q, n), t) <= ekr_simple_bound(fam, q, n, t));
                }
}

TEST_CASE("D_n conjecture checker")
{
    const auto r = check_conjecture_dn(2, 3, 1);
    CHECK(r.verdict == Verdict::Match);
    CHECK(r.formula_value == Rational(make_scheme(Family::PolarD, 2, 3).num_vertices));
    CHECK(check_conjecture_dn(2, 3, 3).solver_value.has_value());
    CHECK_THROWS_AS(check_conjecture_dn(2, 4, 1), std::invalid_argument);
}

TEST_CASE("report formatting")
{
    const auto r = bound_report(make_scheme(Family::Bilinear, 2, 2, 2), 2);
    CHECK(r.verdict == Verdict::Match);
    CHECK(r.formula_value == 4);
    CHECK(*r.solver_value == 4);
    CHECK(*r.certificate_value == 4);
    const auto j = to_json(r);
    CHECK(j["verdict"] == "match");
    CHECK_FALSE(j.contains("millis"));
    CHECK(to_json(r, false, true).contains("millis"));
    CHECK(to_csv(r).find("match") != std::string::npos);
    CHECK(csv_header().find("verdict") != std::string::npos);
    CHECK(to_text(r, true).find('4') != std::string::npos);
}
