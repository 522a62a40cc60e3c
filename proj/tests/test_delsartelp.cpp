#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "delsarte/delsartelp.hpp"

#include <bit>

using namespace delsarte;

namespace {

// 2 x 2 binary matrix as 4 bits, rows in the low and high pair
int rank_2x2(int mtx)
{
    const int r1 = mtx & 3, r2 = mtx >> 2;
    if (r1 == 0 && r2 == 0) return 0;
    if (r1 == 0 || r2 == 0 || r1 == r2) return 1;
    return 2;
}

// Largest set of 2x2 binary matrices with all pairwise differences of full rank.
long bilinear_2x2_max_code()
{
    long best = 0;
    for (unsigned mask = 1; mask < (1u << 16); ++mask) {
        const long size = std::popcount(mask);
        if (size <= best) continue;
        bool ok = true;
        for (int x = 0; x < 16 && ok; ++x)
            for (int y = x + 1; y < 16 && ok; ++y)
                if ((mask >> x & 1) && (mask >> y & 1) && rank_2x2(x ^ y) != 2) ok = false;
        if (ok) best = size;
    }
    return best;
}

// Largest binary code of length n and minimum distance d, by subset enumeration.
long binary_max_code(long n, long d)
{
    const unsigned words = 1u << n;
    long best = 0;
    for (unsigned long mask = 1; mask < (1ul << words); ++mask) {
        const long size = std::popcount(mask);
        if (size <= best) continue;
        bool ok = true;
        for (unsigned x = 0; x < words && ok; ++x)
            for (unsigned y = x + 1; y < words && ok; ++y)
                if ((mask >> x & 1) && (mask >> y & 1) && std::popcount(x ^ y) < d) ok = false;
        if (ok) best = size;
    }
    return best;
}

}  // namespace

TEST_CASE("exact simplex on small programs")
{
    LinearProgram lp;
    lp.num_vars = 2;
    lp.objective = {3, 2};
    lp.rows = {{{1, 1}, Relation::LessEq, 4}, {{1, 3}, Relation::LessEq, 6}, {{1, 0}, Relation::LessEq, 3}};
    lp.nonneg_vars = {0, 1};
    auto sol = solve_exact(lp);
    REQUIRE(sol.status == LPStatus::Optimal);
    CHECK(sol.objective_value == 11);
    CHECK(sol.variable_values == std::vector<Rational>{3, 1});
    CHECK(satisfies(lp, sol.variable_values));

    LinearProgram half;
    half.num_vars = 2;
    half.objective = {1, 1};
    half.rows = {{{2, 1}, Relation::LessEq, 2}, {{1, 2}, Relation::LessEq, 2}};
    half.nonneg_vars = {0, 1};
    CHECK(solve_exact(half).objective_value == Rational(4) / 3);

    LinearProgram mn;
    mn.num_vars = 2;
    mn.sense = Sense::Minimize;
    mn.objective = {1, 1};
    mn.rows = {{{1, 2}, Relation::GreaterEq, 3}, {{1, -1}, Relation::Equal, 0}};
    mn.nonneg_vars = {0, 1};
    auto msol = solve_exact(mn);
    REQUIRE(msol.status == LPStatus::Optimal);
    CHECK(msol.objective_value == 2);

    LinearProgram infeasible = half;
    infeasible.rows.push_back({{1, 1}, Relation::GreaterEq, 5});
    CHECK(solve_exact(infeasible).status == LPStatus::Infeasible);

    LinearProgram unbounded;
    unbounded.num_vars = 1;
    unbounded.objective = {1};
    unbounded.rows = {{{1}, Relation::GreaterEq, 0}};
    unbounded.nonneg_vars = {0};
    CHECK(solve_exact(unbounded).status == LPStatus::Unbounded);

    LinearProgram pinned = half;
    pinned.fixed = {Rational(0), std::nullopt};
    CHECK(solve_exact(pinned).objective_value == 1);
}

TEST_CASE("Delsarte LP optima on small schemes")
{
    const auto bil = make_scheme(Family::Bilinear, 2, 2, 2);
    CHECK(lp_opt(bil, 2) == 4);
    CHECK(lp_opt_set(bil, {2}) == 4);
    CHECK(lp_dual_opt_set(bil, {2}) == 4);
    CHECK(lp_opt_set(bil, {}) == 1);
    CHECK(lp_opt_set(bil, {1, 2}) == 16);

    const auto ham = make_scheme(Family::Hamming, 4, 3);
    CHECK(lp_opt_set(ham, {2, 3}) == 16);

    const auto qj = make_scheme(Family::QJohnson, 2, 2, 2);
    CHECK(lp_opt(qj, 2) == 5);
    CHECK(lp_dual_opt_set(qj, {2}) == 5);
    CHECK(lp_opt_set(qj, {1}) == 7);

    CHECK(lp_opt(make_scheme(Family::Alternating, 2, {}, 4), 2) == 8);
    CHECK(lp_opt(make_scheme(Family::HermitianForms, 2, 3), 3) == 8);
    CHECK(lp_opt(make_scheme(Family::HermitianForms, 2, 2), 2) == 6);
    CHECK(lp_opt(make_scheme(Family::PolarC, 2, 2), 2) == 5);  // a spread of W(3,2)

    CHECK(distance_set_from(2, 4) == std::set<long>{2, 3, 4});
}

TEST_CASE("LP bound dominates brute-force optimal codes")
{
    const long bil_best = bilinear_2x2_max_code();
    CHECK(bil_best == 4);
    CHECK(lp_opt(make_scheme(Family::Bilinear, 2, 2, 2), 2) == bil_best);

    for (long n = 2; n <= 4; ++n)
        for (long d = 1; d <= n; ++d) {
            CAPTURE(n);
            CAPTURE(d);
            CHECK(Rational(binary_max_code(n, d)) <= lp_opt(make_scheme(Family::Hamming, 2, n), d));
        }
    CHECK(lp_opt(make_scheme(Family::Hamming, 2, 3), 2) == binary_max_code(3, 2));
}

TEST_CASE("strong duality across a grid")
{
    for (long q : {2, 3})
        for (long n = 1; n <= 3; ++n)
            for (const auto& s : {make_scheme(Family::Bilinear, q, n, n + 1), make_scheme(Family::PolarB, q, n),
                                  make_scheme(Family::HermitianForms, q, n)})
                for (long d = 1; d <= n; ++d) {
                    CAPTURE(describe(s));
                    CAPTURE(d);
                    const auto dist = distance_set_from(d, n);
                    CHECK(lp_opt_set(s, dist) == lp_dual_opt_set(s, dist));
                }
}

TEST_CASE("primal program shape")
{
    const auto bil = make_scheme(Family::Bilinear, 2, 2, 2);
    const auto lp = build_primal(bil, {2});
    CHECK(lp.num_vars == 3);
    CHECK(lp.sense == Sense::Maximize);
    const auto sol = solve_exact(lp);
    CHECK(sol.objective_value == 4);
    CHECK(satisfies(lp, sol.variable_values));
    CHECK(solve_exact(lp).variable_values == sol.variable_values);
    const auto js = to_json(sol);
    CHECK(js["objective"] == "4");
}

TEST_CASE("polynomial dual certificates")
{
    const auto bil = make_scheme(Family::Bilinear, 2, 2, 2);
    const auto poly = singleton_polynomial(bil, 2);
    const auto dual = dual_bound_from_polynomial(bil, poly, {2});
    CHECK(dual.feasible);
    CHECK(dual.coefficients == std::vector<Rational>{1, Rational(1) / 3, 0});
    CHECK(dual.objective == 4);

    const auto ham = make_scheme(Family::Hamming, 4, 3);
    const auto hd = dual_bound_from_polynomial(ham, singleton_polynomial(ham, 2), {2, 3});
    CHECK(hd.feasible);
    CHECK(hd.objective == 16);

    const auto one = dual_bound_from_values(bil, {1, 1, 1}, {});
    CHECK(one.feasible);
    CHECK(one.objective == 1);

    CHECK_THROWS_AS(dual_bound_from_values(bil, {0, 0, 0}, {2}), MathError);
}

TEST_CASE("dual distribution of the whole space")
{
    const auto bil = make_scheme(Family::Bilinear, 2, 2, 2);
    const auto& t = bil.tables();
    const auto dd = dual_distribution(bil, t.valency);
    CHECK(dd[0] == 16);
    CHECK(dd[1] == 0);
    CHECK(dd[2] == 0);
}
