#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "delsarte/oracle.hpp"

#include <bit>
#include <random>

using namespace delsarte;

namespace {

int rank_2x2_f2(const std::vector<int>& a, const std::vector<int>& b)
{
    int e[4];
    for (int i = 0; i < 4; ++i) e[i] = (a[i] + b[i]) % 2;
    if (!e[0] && !e[1] && !e[2] && !e[3]) return 0;
    return ((e[0] * e[3] + e[1] * e[2]) % 2) ? 2 : 1;
}

long brute_clique(const std::vector<std::vector<bool>>& adj)
{
    const std::size_t n = adj.size();
    long best = 0;
    for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
        const long size = std::popcount(mask);
        if (size <= best) continue;
        bool ok = true;
        for (std::size_t x = 0; x < n && ok; ++x)
            for (std::size_t y = x + 1; y < n && ok; ++y)
                if ((mask >> x & 1) && (mask >> y & 1) && !adj[x][y]) ok = false;
        if (ok) best = size;
    }
    return best;
}

}  // namespace

TEST_CASE("finite fields")
{
    CHECK(prime_power(8) == std::make_optional(std::make_pair(2L, 3L)));
    CHECK_FALSE(prime_power(6).has_value());
    CHECK_THROWS(FiniteField(6));

    const FiniteField f4(4);
    CHECK(f4.modulus() == std::vector<long>{1, 1, 1});
    CHECK(FiniteField(9).modulus() == std::vector<long>{1, 0, 1});
    for (long order : {4, 8, 9}) {
        const FiniteField f(order);
        for (int a = 0; a < order; ++a) {
            CHECK(f.add(a, f.neg(a)) == 0);
            CHECK(f.mul(a, 1) == a);
            if (a != 0) {
                bool has_inverse = false;
                for (int b = 0; b < order; ++b) has_inverse |= f.mul(a, b) == 1;
                CHECK(has_inverse);
                CHECK(f.pow(a, order - 1) == 1);
            }
            for (int b = 0; b < order; ++b)
                for (int c = 0; c < order; ++c) {
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                    CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
                }
        }
    }
}

TEST_CASE("matrix rank")
{
    const FiniteField f3(3);
    CHECK(matrix_rank(f3, {{1, 2}, {2, 1}}) == 1);
    CHECK(matrix_rank(f3, {{1, 0}, {0, 1}}) == 2);
    CHECK(matrix_rank(f3, {{0, 0, 0}, {0, 0, 0}}) == 0);
    CHECK(matrix_rank(f3, {{1, 1, 0}, {0, 1, 1}, {1, 2, 1}}) == 2);
}

TEST_CASE("instances enumerate the right matrices")
{
    const auto bil = build_instance(Family::Bilinear, 2, 2, 2);
    REQUIRE(bil.size() == 16);
    CHECK(bil.vertices[0] == std::vector<int>{0, 0, 0, 0});
    for (std::size_t x = 0; x < bil.size(); ++x)
        for (std::size_t y = 0; y < bil.size(); ++y)
            CHECK(bil.distance(x, y) == rank_2x2_f2(bil.vertices[x], bil.vertices[y]));

    const auto alt = build_instance(Family::Alternating, 2, 2, 4);
    CHECK(alt.size() == 64);
    for (const auto& v : alt.vertices)
        for (long i = 0; i < 4; ++i) {
            CHECK(v[i * 4 + i] == 0);
            for (long j = 0; j < 4; ++j) CHECK(v[i * 4 + j] == alt.field.neg(v[j * 4 + i]));
        }

    const auto her = build_instance(Family::HermitianForms, 2, 2, 2);
    CHECK(her.size() == 16);
    for (const auto& v : her.vertices)
        for (long i = 0; i < 2; ++i)
            for (long j = 0; j < 2; ++j) CHECK(v[i * 2 + j] == her.field.pow(v[j * 2 + i], 2));

    CHECK_THROWS_AS(build_instance(Family::Bilinear, 4, 4, 4), CapExceeded);
}

TEST_CASE("valencies and eigenvalues from the instance")
{
    for (const auto& spec : {make_scheme(Family::Bilinear, 2, 2, 3), make_scheme(Family::Alternating, 2, {}, 4),
                             make_scheme(Family::HermitianForms, 2, 2), make_scheme(Family::Bilinear, 3, 2, 2)}) {
        CAPTURE(describe(spec));
        const auto inst = build_instance(spec);
        CHECK(empirical_valencies(inst) == spec.tables().valency);
        for (long i = 0; i <= spec.n; ++i) CHECK(empirical_eigenvalues(inst, spec, i).all_hold);
        const auto rep = random_subset_dual_check(inst, spec, 50);
        CHECK(rep.failures == 0);
        CHECK(rep.trials == 50);
    }
}

TEST_CASE("inner distributions of fixed subsets")
{
    const auto spec = make_scheme(Family::Bilinear, 2, 2, 2);
    const auto inst = build_instance(spec);
    CHECK(inner_distribution_of(inst, {5}) == std::vector<Rational>{1, 0, 0});
    std::vector<std::size_t> all(inst.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    CHECK(inner_distribution_of(inst, all) == spec.tables().valency);
}

TEST_CASE("maximum codes")
{
    const auto bil = build_instance(Family::Bilinear, 2, 2, 2);
    const auto best = max_code_bruteforce(bil, 2);
    CHECK(best.size == 4);
    CHECK(best.complete);
    for (std::size_t a = 0; a < best.witness.size(); ++a)
        for (std::size_t b = a + 1; b < best.witness.size(); ++b)
            CHECK(rank_2x2_f2(bil.vertices[best.witness[a]], bil.vertices[best.witness[b]]) == 2);
    const auto serial = max_code_bruteforce_serial(bil, 2);
    CHECK(serial.size == best.size);
    CHECK(serial.witness == best.witness);
    CHECK(max_code_bruteforce(bil, 1).size == 16);

    const auto her = build_instance(Family::HermitianForms, 2, 2, 2);
    const auto hbest = max_code_bruteforce(her, 2);
    CHECK(hbest.complete);
    CHECK(hbest.size <= 6);

    const auto js = witness_json(bil, best.witness);
    CHECK(js["field_order"] == 2);
    CHECK(js["code"].size() == 4);

    const auto alt = build_instance(Family::Alternating, 2, 2, 5);
    CliqueOptions tiny;
    tiny.node_budget = 10;
    CHECK_FALSE(max_code_bruteforce(alt, 2, tiny).complete);
}

TEST_CASE("clique search against subset enumeration")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 4 + trial % 9;
        std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = x + 1; y < n; ++y) adj[x][y] = adj[y][x] = rng() % 2 == 0;
        const long expect = brute_clique(adj);
        const auto par = max_clique(adj, true);
        const auto ser = max_clique(adj, false);
        CHECK(par.size == expect);
        CHECK(ser.size == expect);
        CHECK(par.witness == ser.witness);
    }
}
