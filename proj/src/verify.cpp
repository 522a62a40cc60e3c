#include "delsarte/verify.hpp"

#include "delsarte/bounds.hpp"
#include "delsarte/certificates.hpp"
#include "delsarte/delsartelp.hpp"
#include "delsarte/grid.hpp"
#include "delsarte/oracle.hpp"

#include <functional>
#include <map>
#include <sstream>

namespace delsarte {

namespace {

using Task = std::function<std::vector<Check>()>;

Check make(const std::string& suite, std::string instance, bool pass, std::string detail = {})
{
    return Check{suite, std::move(instance), pass, false, std::move(detail)};
}

std::string with_param(const SchemeSpec& spec, const char* name, long value)
{
    return describe(spec) + " " + name + "=" + std::to_string(value);
}

std::vector<long> q_values(const GridOptions& opts, std::vector<long> defaults)
{
    if (opts.q) return {*opts.q};
    return defaults;
}

std::vector<long> n_values(const GridOptions& opts, long lo, long hi)
{
    if (opts.n) {
        if (*opts.n < lo || *opts.n > hi) return {};
        return {*opts.n};
    }
    std::vector<long> out;
    for (long n = lo; n <= hi; ++n) out.push_back(n);
    return out;
}

// Alternating / half-D specs whose n = floor(m/2) lies in the n filter
std::vector<long> m_values_halved(const GridOptions& opts, long lo, long hi)
{
    std::vector<long> out;
    for (long m = lo; m <= hi; ++m)
        if (!opts.n || m / 2 == *opts.n) out.push_back(m);
    return out;
}

std::vector<Check> flatten(std::vector<std::vector<Check>> parts)
{
    std::vector<Check> out;
    for (auto& p : parts)
        for (auto& c : p) out.push_back(std::move(c));
    return out;
}

std::vector<Check> run(const std::vector<Task>& tasks, const GridOptions& opts)
{
    return flatten(run_tasks<std::vector<Check>>(tasks, opts.parallel));
}

// guards a task: any exception becomes a failing check
Task guarded(const std::string& suite, const std::string& instance, std::function<std::vector<Check>()> body)
{
    return [=]() -> std::vector<Check> {
        try {
            return body();
        } catch (const std::exception& e) {
            return {make(suite, instance, false, std::string("exception: ") + e.what())};
        }
    };
}

Matrix multiply(const Matrix& a, const Matrix& b)
{
    Matrix out(a.size(), std::vector<Rational>(b[0].size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < b[0].size(); ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

Matrix identity(std::size_t n)
{
    Matrix out(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
    return out;
}

Rational delta(long a, long b) { return a == b ? 1 : 0; }

// ---------------------------------------------------------------- q-series

std::vector<Check> q_series_checks()
{
    const std::string suite = "q-series";
    std::vector<Check> out;
    const std::vector<Rational> bases{2, 3, -2, -3, 4, Rational(1, 2)};

    for (const auto& b : bases) {
        bool ok = true;
        std::string where;
        for (long k = 0; k <= 6; ++k)
            for (long i = 0; i <= k; ++i) {
                Rational s1 = 0, s2 = 0;
                for (long j = i; j <= k; ++j) {
                    const Rational bb = q_binomial(j, i, b) * q_binomial(k, j, b);
                    s1 += ((j - i) % 2 ? -1 : 1) * power(b, choose2(j - i)) * bb;
                    s2 += ((k - j) % 2 ? -1 : 1) * power(b, choose2(k - j)) * bb;
                }
                if (s1 != delta(i, k) || s2 != delta(i, k)) {
                    ok = false;
                    where = "i=" + std::to_string(i) + " k=" + std::to_string(k);
                }
            }
        out.push_back(make(suite, "binomial inversion base " + to_string(b), ok, where));
    }

    const std::vector<Rational> as{2, -3, Rational(1, 3), Rational(-5, 2)};
    const std::vector<Rational> qs{2, 3, Rational(1, 2), -2};
    bool sum_ok = true, diff_ok = true;
    for (const auto& a : as)
        for (const auto& q : qs)
            for (long n = 0; n <= 6; ++n)
                for (long k = 0; k <= 6; ++k) {
                    if (q_pochhammer(a, n + k, q) != q_pochhammer(a, n, q) * q_pochhammer(a * power(q, n), k, q))
                        sum_ok = false;
                    if (k > n) continue;
                    const Rational den = q_pochhammer(1 / a * power(q, 1 - n), k, q);
                    if (den == 0) continue;
                    const Rational rhs =
                        q_pochhammer(a, n, q) / den * power(-a, -k) * power(q, choose2(k) - n * k + k);
                    if (q_pochhammer(a, n - k, q) != rhs) diff_ok = false;
                }
    out.push_back(make(suite, "pochhammer index sum", sum_ok));
    out.push_back(make(suite, "pochhammer index difference", diff_ok));

    bool chu_ok = true, poch_ok = true;
    for (const auto& b : bases) {
        for (long x = 0; x <= 5; ++x)
            for (long y = 0; y <= 5; ++y)
                for (long z = 0; z <= 5; ++z) {
                    Rational s = 0;
                    for (long i = 0; i <= x; ++i)
                        s += power(b, i * (y - z + i)) * q_binomial(x, i, b) * q_binomial(y, z - i, b);
                    if (s != q_binomial(x + y, z, b)) chu_ok = false;
                }
        for (long n = 0; n <= 6; ++n)
            for (long k = 0; k <= n; ++k) {
                const Rational rhs = q_pochhammer(power(b, -n), k, b) / q_pochhammer(b, k, b) *
                                     (k % 2 ? -1 : 1) * power(b, k * n - choose2(k));
                if (rhs != q_binomial(n, k, b)) poch_ok = false;
            }
    }
    out.push_back(make(suite, "q-Chu-Vandermonde", chu_ok));
    out.push_back(make(suite, "q-binomial as pochhammer quotient", poch_ok));
    return out;
}

// ---------------------------------------------------------------- lemmas

std::vector<Check> epsilon_bound_checks(const GridOptions& opts)
{
    const std::string suite = "epsilon-bounds";
    std::vector<Check> out;
    for (const long q : q_values(opts, {2, 3, 4}))
        for (const long n : n_values(opts, 2, 8))
            for (long d = 2; d <= n; d += 2) {
                const Rational eps = epsilon_nd(n, d, q);
                const Rational Q = q;
                Rational lo, hi;
                if (n % 2 == 0) {
                    lo = -(power(Q, n + d - 1) + 1) / (power(Q, d - 1) - 1);
                    hi = -power(Q, n) / (Q + 1);
                } else {
                    lo = power(Q, d - 2) * (power(Q, n - d + 1) - 1) / 2;
                    hi = (power(Q, n + d - 1) - 1) / (power(Q, d - 1) - 1);
                }
                std::ostringstream inst;
                inst << "q=" << q << " n=" << n << " d=" << d;
                out.push_back(make(suite, inst.str(), lo < eps && eps < hi,
                                   to_string(lo) + " < " + to_string(eps) + " < " + to_string(hi)));
            }
    return out;
}

std::vector<Check> product_bound_checks(const GridOptions& opts)
{
    const std::string suite = "product-bounds";
    std::vector<Check> out;
    for (const long q : q_values(opts, {2, 3, 4})) {
        Rational plus = 1, minus = 1;
        bool ok = true;
        std::string where;
        for (long n = 1; n <= 20; ++n) {
            plus *= 1 + power(Rational(q), -n);
            minus *= 1 - power(Rational(q), -n);
            if (opts.n && n != *opts.n) continue;
            if (!(plus < Rational(5, 2)) || !(minus >= Rational(1, 4))) {
                ok = false;
                where = "n=" + std::to_string(n);
            }
        }
        out.push_back(make(suite, "q=" + std::to_string(q) + " n<=20", ok, where));
    }
    return out;
}

std::vector<Check> size_sandwich_checks(const GridOptions& opts)
{
    const std::string suite = "size-sandwich";
    std::vector<Check> out;
    for (const long q : q_values(opts, {2, 3}))
        for (const long n : n_values(opts, 2, 7))
            for (long d = 2; d <= n; d += 2) {
                const auto spec = make_scheme(Family::HermitianForms, q, n);
                const Rational y = hermitian_forms_even_size(spec, d);
                const Rational top = power(Rational(q), n * (n - d + 2));
                const bool ok = top / (3 * q) <= y && y <= top / 2;
                out.push_back(make(suite, with_param(spec, "d", d), ok, "|Y| = " + to_string(y)));
            }
    return out;
}

// ---------------------------------------------------------------- certificates

std::vector<Check> design_and_slackness(const std::string& suite, const SchemeSpec& spec, long d)
{
    const auto pair = verify_strong_duality(spec, d);
    const auto& x = pair.primal.entries;
    const auto dual = dual_distribution(spec, x);
    const long n = spec.n;
    const std::string inst = with_param(spec, "d", d);
    std::vector<Check> out;

    bool nonneg = true;
    for (const auto& v : x) nonneg = nonneg && v >= 0;
    for (const auto& v : dual) nonneg = nonneg && v >= 0;
    out.push_back(make(suite, inst + " nonnegative", nonneg && !pair.violated, pair.violated.value_or("")));

    bool slack = true;
    for (long k = 1; k <= n; ++k) slack = slack && pair.dual.entries[k] * dual[k] == 0;
    out.push_back(make(suite, inst + " complementary slackness", slack));

    const bool hermitian_even =
        d % 2 == 0 && (spec.family == Family::HermitianForms || spec.family == Family::PolarA2nMinus1);
    bool design = true;
    if (hermitian_even) {
        for (long k = 2; k <= n - d + 2; ++k) design = design && dual[k] == 0;
        design = design && dual[1] >= 0;
    } else {
        for (long k = 1; k <= n - d + 1; ++k) design = design && dual[k] == 0;
    }
    out.push_back(make(suite, inst + " design property", design));
    return out;
}

// the even-d Hermitian distributions checked straight from their closed forms
std::vector<Check> hermitian_even_nonnegativity(const SchemeSpec& spec, long d)
{
    const std::string suite = "nonnegativity";
    const Distributions dist = spec.family == Family::HermitianForms ? hermitian_forms_even_distributions(spec, d)
                                                                     : hermitian_polar_even_distributions(spec, d);
    bool nonneg = true;
    for (const auto& v : dist.inner.entries) nonneg = nonneg && v >= 0;
    for (const auto& v : dist.dual.entries) nonneg = nonneg && v >= 0;
    const bool consistent = dual_distribution(spec, dist.inner.entries) == dist.dual.entries;
    bool zeros = dist.inner.entries[0] == 1;
    for (long i = 1; i < d; ++i) zeros = zeros && dist.inner.entries[i] == 0;
    const std::string inst = with_param(spec, "d", d);
    return {make(suite, inst + " closed-form entries nonnegative", nonneg),
            make(suite, inst + " closed-form dual matches transform", consistent && zeros)};
}

struct CertTarget {
    SchemeSpec spec;
    long d;
};

std::vector<CertTarget> affine_targets(const GridOptions& opts)
{
    std::vector<CertTarget> out;
    for (const long q : q_values(opts, {2, 3})) {
        for (const long n : n_values(opts, 1, 4))
            for (long m = n; m <= n + 2; ++m)
                for (long d = 1; d <= n; ++d) out.push_back({make_scheme(Family::Bilinear, q, n, m), d});
        for (const long m : m_values_halved(opts, 2, 9)) {
            const auto spec = make_scheme(Family::Alternating, q, {}, m);
            for (long d = 1; d <= spec.n; ++d) out.push_back({spec, d});
        }
        for (const long n : n_values(opts, 1, 4))
            for (long d = 1; d <= n; d += 2) out.push_back({make_scheme(Family::HermitianForms, q, n), d});
    }
    return out;
}

std::vector<CertTarget> hermitian_even_targets(const GridOptions& opts, long max_n)
{
    std::vector<CertTarget> out;
    for (const long q : q_values(opts, {2, 3}))
        for (const long n : n_values(opts, 2, max_n))
            for (long d = 2; d <= n; d += 2) out.push_back({make_scheme(Family::HermitianForms, q, n), d});
    return out;
}

std::vector<CertTarget> ordinary_targets(const GridOptions& opts)
{
    std::vector<CertTarget> out;
    for (const long q : q_values(opts, {2, 3})) {
        for (const long n : n_values(opts, 1, 3))
            for (long m = n; m <= 4; ++m)
                for (long d = 1; d <= n; ++d) out.push_back({make_scheme(Family::QJohnson, q, n, m), d});
        for (const long n : n_values(opts, 1, 4))
            for (long d = 1; d <= n; ++d) out.push_back({make_scheme(Family::PolarA2nMinus1, q, n), d});
        for (const long m : m_values_halved(opts, 2, 8)) {
            const auto spec = make_scheme(Family::HalfD, q, {}, m);
            for (long d = 1; d <= spec.n; ++d) out.push_back({spec, d});
        }
    }
    return out;
}

std::vector<Check> four_way_suite(const std::string& suite, const std::vector<CertTarget>& targets,
                                  const GridOptions& opts)
{
    std::vector<Task> tasks;
    for (const auto& t : targets)
        tasks.push_back(guarded(suite, with_param(t.spec, "d", t.d),
                                [=] { return std::vector<Check>{four_way_check(suite, t.spec, t.d)}; }));
    return run(tasks, opts);
}

Check spot(const std::string& suite, const std::string& what, const Rational& got, const Rational& want)
{
    return make(suite, what, got == want, to_string(got) + " (expected " + to_string(want) + ")");
}

std::vector<Check> affine_suite(const GridOptions& opts)
{
    return four_way_suite("affine-optima", affine_targets(opts), opts);
}

std::vector<Check> hermitian_even_suite(const GridOptions& opts)
{
    auto out = four_way_suite("hermitian-even", hermitian_even_targets(opts, 5), opts);
    if (!opts.q || *opts.q == 2) {
        const auto spec = make_scheme(Family::HermitianForms, 2, 2);
        out.push_back(spot("hermitian-even", "spot hermitian(q=2,n=2) d=2 solver", lp_opt(spec, 2), 6));
    }
    return out;
}

std::vector<Check> ordinary_suite(const GridOptions& opts)
{
    auto out = four_way_suite("ordinary-optima", ordinary_targets(opts), opts);
    if (!opts.q || *opts.q == 2) {
        out.push_back(spot("ordinary-optima", "spot qjohnson(q=2,n=2,m=2) d=2",
                           lp_opt(make_scheme(Family::QJohnson, 2, 2, 2), 2), 5));
        out.push_back(spot("ordinary-optima", "spot polar-2a-odd(q=2,n=2) d=2",
                           lp_opt(make_scheme(Family::PolarA2nMinus1, 2, 2), 2), 9));
    }
    return out;
}

std::vector<Check> polar_reduction_suite(const GridOptions& opts)
{
    const std::string suite = "polar-reduction";
    std::vector<Task> tasks;
    for (const long q : q_values(opts, {2, 3}))
        for (const long n : n_values(opts, 1, 4))
            for (const Family f : {Family::PolarB, Family::PolarC, Family::PolarD})
                for (long d = 1; d <= n; ++d) {
                    if ((f == Family::PolarD) != (d % 2 == 0)) continue;
                    const std::string inst = with_param(make_scheme(f, q, n), "d", d);
                    tasks.push_back(guarded(suite, inst, [=]() -> std::vector<Check> {
                        const Rational a = lp_optimum_bcd(f, q, n, d);
                        const Rational b = lp_optimum_bcd_reduced(f, q, n, d);
                        const Rational c = lp_optimum_bcd_direct(f, q, n, d);
                        return {make(suite, inst, a == b && b == c,
                                     to_string(a) + " / " + to_string(b) + " / " + to_string(c))};
                    }));
                }
    auto out = run(tasks, opts);
    if (!opts.q || *opts.q == 2)
        out.push_back(spot(suite, "spot polar-c(q=2,n=3) d=3", lp_optimum_bcd_direct(Family::PolarC, 2, 3, 3), 9));
    return out;
}

std::vector<Check> classical_suite(const GridOptions& opts)
{
    const std::string suite = "classical";
    std::vector<Task> tasks;
    for (const long q : q_values(opts, {2, 3, 4, 5}))
        for (const long n : n_values(opts, 1, 5))
            for (long d = 1; d <= n; ++d) {
                if (q < std::max(d, n - d + 2)) continue;
                const auto spec = make_scheme(Family::Hamming, q, n);
                const std::string inst = with_param(spec, "d", d);
                tasks.push_back(guarded(suite, inst, [=]() -> std::vector<Check> {
                    const auto pair = verify_strong_duality(spec, d);
                    const Rational solver = lp_opt(spec, d);
                    const Rational closed = power(Rational(q), n - d + 1);
                    const bool ok = pair.duality_gap_zero && pair.primal_objective == closed &&
                                    pair.dual_objective == closed && solver == closed;
                    return {make(suite, inst, ok,
                                 "primal " + to_string(pair.primal_objective) + ", dual " +
                                     to_string(pair.dual_objective) + ", solver " + to_string(solver))};
                }));
            }
    auto out = run(tasks, opts);
    if (!opts.q || *opts.q == 4)
        out.push_back(spot(suite, "spot hamming(q=4,n=3) d=2", lp_opt(make_scheme(Family::Hamming, 4, 3), 2), 16));
    if (!opts.n || *opts.n == 3) {
        const auto johnson = make_scheme(Family::Johnson, 2, 3, 4);
        const auto pair = verify_strong_duality(johnson, 2);
        out.push_back(make(suite, "fixture johnson(n=3,m=4) d=2",
                           pair.duality_gap_zero && pair.primal_objective == 7 && lp_opt(johnson, 2) == 7,
                           "fano plane inner distribution, value " + to_string(pair.primal_objective)));
    }
    return out;
}

std::vector<Check> nonnegativity_suite(const GridOptions& opts)
{
    const std::string suite = "nonnegativity";
    std::vector<Task> tasks;
    std::vector<CertTarget> targets = affine_targets(opts);
    for (auto& t : hermitian_even_targets(opts, 4)) targets.push_back(t);
    for (auto& t : ordinary_targets(opts)) targets.push_back(t);
    for (const auto& t : targets)
        tasks.push_back(guarded(suite, with_param(t.spec, "d", t.d),
                                [=] { return design_and_slackness(suite, t.spec, t.d); }));
    // even-d Hermitian cases up to n = 7, forms and polar space
    for (const long q : q_values(opts, {2, 3}))
        for (const long n : n_values(opts, 2, 7))
            for (const Family f : {Family::HermitianForms, Family::PolarA2nMinus1})
                for (long d = 2; d <= n; d += 2) {
                    const auto spec = make_scheme(f, q, n);
                    tasks.push_back(guarded(suite, with_param(spec, "d", d),
                                            [=] { return hermitian_even_nonnegativity(spec, d); }));
                }
    return run(tasks, opts);
}

// ---------------------------------------------------------------- LP

std::vector<Check> lp_duality_suite(const GridOptions& opts)
{
    const std::string suite = "lp-duality";
    std::vector<Task> tasks;
    for (const auto& spec : scheme_grid(opts))
        for (long d = 1; d <= spec.n; ++d) {
            const std::string inst = with_param(spec, "d", d);
            tasks.push_back(guarded(suite, inst, [=]() -> std::vector<Check> {
                const auto set = distance_set_from(d, spec.n);
                const Rational primal = lp_opt_set(spec, set);
                const Rational dual = lp_dual_opt_set(spec, set);
                return {make(suite, inst, primal == dual, to_string(primal) + " vs " + to_string(dual))};
            }));
        }
    return run(tasks, opts);
}

std::vector<Check> complement_product_suite(const GridOptions& opts)
{
    const std::string suite = "complement-product";
    std::vector<Task> tasks;
    for (const auto& spec : scheme_grid(opts)) {
        if (spec.n > 3) continue;
        const std::string inst = describe(spec);
        tasks.push_back(guarded(suite, inst, [=]() -> std::vector<Check> {
            const long n = spec.n;
            bool ok = true;
            std::string where;
            for (long mask = 0; mask < (1L << n); ++mask) {
                std::set<long> in, out;
                for (long i = 1; i <= n; ++i) (mask >> (i - 1) & 1 ? in : out).insert(i);
                const Rational prod = lp_opt_set(spec, in) * lp_opt_set(spec, out);
                if (prod > Rational(spec.num_vertices)) {
                    ok = false;
                    where = "mask " + std::to_string(mask) + ": " + to_string(prod);
                }
            }
            return {make(suite, inst, ok, where)};
        }));
    }
    return run(tasks, opts);
}

// ---------------------------------------------------------------- EKR

std::vector<SchemeSpec> ekr_specs(const GridOptions& opts)
{
    std::vector<SchemeSpec> specs;
    for (const long q : q_values(opts, {2, 3})) {
        for (const long n : n_values(opts, 1, 4)) {
            for (long m = n; m <= n + 2; ++m) {
                specs.push_back(make_scheme(Family::Bilinear, q, n, m));
                specs.push_back(make_scheme(Family::QJohnson, q, n, m));
            }
            for (const Family f : {Family::HermitianForms, Family::PolarA2nMinus1, Family::PolarB, Family::PolarC,
                                   Family::PolarD})
                specs.push_back(make_scheme(f, q, n));
        }
        for (const long m : m_values_halved(opts, 2, 8)) {
            specs.push_back(make_scheme(Family::Alternating, q, {}, m));
            specs.push_back(make_scheme(Family::HalfD, q, {}, m));
        }
    }
    for (const long q : q_values(opts, {2, 3, 4, 5}))
        for (const long n : n_values(opts, 1, 5)) specs.push_back(make_scheme(Family::Hamming, q, n));
    if (!opts.n || *opts.n == 3) specs.push_back(make_scheme(Family::Johnson, 2, 3, 4));
    return specs;
}

std::vector<Check> ekr_suite(const GridOptions& opts)
{
    const std::string suite = "ekr";
    std::vector<Task> tasks;
    for (const auto& spec : ekr_specs(opts)) {
        const bool by_m = spec.family == Family::Alternating || spec.family == Family::HalfD;
        const long size = by_m ? *spec.m : spec.n;
        const std::string inst = describe(spec);
        tasks.push_back(guarded(suite, inst, [=]() -> std::vector<Check> {
            std::vector<Check> out;
            std::optional<Rational> previous;
            bool monotone = true;
            for (long t = 1; t <= size; ++t) {
                if (!ekr_admissible(spec, t)) continue;
                const Rational printed = ekr_bound(spec, t);
                const Rational via_formula = ekr_bound_via_lp(spec, t);
                const Rational via_solver = ekr_bound_via_lp(spec, t, true);
                out.push_back(make(suite, inst + " t=" + std::to_string(t),
                                   printed == via_formula && printed == via_solver,
                                   to_string(printed) + " / " + to_string(via_formula) + " / " +
                                       to_string(via_solver)));
                if (previous && printed > *previous) monotone = false;
                previous = printed;
            }
            out.push_back(make(suite, inst + " nonincreasing in t", monotone));
            return out;
        }));
    }
    for (const long q : q_values(opts, {2, 3}))
        for (const long n : n_values(opts, 3, 7))
            for (const Family f : {Family::PolarA2nMinus1, Family::PolarB, Family::PolarC, Family::PolarD})
                for (long t = 1; t <= n; ++t) {
                    if (!ekr_simple_admissible(f, n, t)) continue;
                    const auto spec = make_scheme(f, q, n);
                    const std::string inst = describe(spec) + " t=" + std::to_string(t) + " simplified";
                    tasks.push_back(guarded(suite, inst, [=]() -> std::vector<Check> {
                        const Rational exact = ekr_bound(spec, t);
                        const Rational simple = ekr_simple_bound(f, q, n, t);
                        return {make(suite, inst, exact <= simple, to_string(exact) + " <= " + to_string(simple))};
                    }));
                }
    auto out = run(tasks, opts);
    if (!opts.q || *opts.q == 2)
        out.push_back(spot(suite, "spot qjohnson(q=2,n=2,m=2) t=1", ekr_bound(make_scheme(Family::QJohnson, 2, 2, 2), 1),
                           7));
    return out;
}

// ---------------------------------------------------------------- oracle

struct OracleTarget {
    Family family;
    long q, n, m;
};

std::vector<OracleTarget> oracle_targets(const GridOptions& opts)
{
    std::vector<OracleTarget> out;
    const auto fits = [](long q, long e) { return power(Rational(q), e) <= kDefaultVertexCap; };
    for (const long q : q_values(opts, {2, 3, 4, 5, 7, 8})) {
        for (long n = 1; n <= 6; ++n)
            for (long m = n; m <= 12; ++m)
                if ((!opts.n || n == *opts.n) && fits(q, n * m)) out.push_back({Family::Bilinear, q, n, m});
        for (long m = 2; m <= 6; ++m)
            if ((!opts.n || m / 2 == *opts.n) && fits(q, choose2(m))) out.push_back({Family::Alternating, q, m / 2, m});
        for (long n = 1; n <= 3; ++n)
            if ((!opts.n || n == *opts.n) && fits(q, n * n) && q <= 16)
                out.push_back({Family::HermitianForms, q, n, n});
    }
    return out;
}

std::vector<Check> oracle_instance_checks(const OracleTarget& t)
{
    const std::string suite = "oracle";
    const auto spec = t.family == Family::Alternating ? make_scheme(t.family, t.q, {}, t.m)
                      : t.family == Family::Bilinear  ? make_scheme(t.family, t.q, t.n, t.m)
                                                      : make_scheme(t.family, t.q, t.n);
    const auto inst = build_instance(spec);
    const std::string name = describe(spec);
    std::vector<Check> out;

    const auto val = empirical_valencies(inst);
    out.push_back(make(suite, name + " valencies",
                       Integer(static_cast<long>(inst.size())) == spec.num_vertices && val == spec.tables().valency));

    const auto subsets = random_subset_dual_check(inst, spec, 200);
    out.push_back(make(suite, name + " random subsets", subsets.failures == 0 && subsets.trials == 200,
                       subsets.first_failure));

    if (static_cast<long>(inst.size()) <= kEigenCap) {
        bool ok = true;
        std::string why;
        for (long i = 0; i <= spec.n && ok; ++i) {
            const auto e = empirical_eigenvalues(inst, spec, i);
            ok = e.all_hold;
            why = e.failure;
        }
        out.push_back(make(suite, name + " eigenvalues", ok, why));

        CliqueOptions copt;
        copt.node_budget = 200'000;
        for (long d = 2; d <= spec.n; ++d) {
            const auto res = max_code_bruteforce(inst, d, copt);
            const Rational lp = lp_opt(spec, d);
            bool valid = true;
            for (std::size_t a = 0; a < res.witness.size(); ++a)
                for (std::size_t b = a + 1; b < res.witness.size(); ++b)
                    valid = valid && inst.distance(res.witness[a], res.witness[b]) >= d;
            valid = valid && static_cast<long>(res.witness.size()) == res.size;
            // a code meeting the bound at odd d has the predicted inner distribution
            bool predicted = true;
            const bool affine_formula = t.family != Family::HermitianForms || d % 2 == 1;
            if (affine_formula && Rational(res.size) == lp)
                predicted = inner_distribution_of(inst, res.witness) == inner_distribution_affine(spec, d).inner.entries;
            std::string detail = std::to_string(res.size) + " <= " + to_string(lp);
            if (!res.complete) detail += " (search budget exhausted; lower bound)";
            out.push_back(make(suite, name + " d=" + std::to_string(d) + " max code",
                               valid && predicted && Rational(res.size) <= lp, detail));
        }
    }
    return out;
}

std::vector<Check> oracle_suite(const GridOptions& opts)
{
    const std::string suite = "oracle";
    std::vector<Task> tasks;
    for (const auto& t : oracle_targets(opts)) {
        const std::string inst = scheme_id(t.family) + " q=" + std::to_string(t.q) + " n=" + std::to_string(t.n);
        tasks.push_back(guarded(suite, inst, [=] { return oracle_instance_checks(t); }));
    }
    // the clique search runs its own parallel loop; instances are visited in order
    GridOptions serial = opts;
    serial.parallel = false;
    auto out = run(tasks, serial);
    if (!opts.q || *opts.q == 2) {
        const auto inst = build_instance(Family::Bilinear, 2, 2, 2);
        const auto res = max_code_bruteforce(inst, 2);
        out.push_back(make(suite, "spot bilinear(q=2,n=2,m=2) d=2 attains the bound",
                           res.complete && res.size == 4 && lp_opt(make_scheme(Family::Bilinear, 2, 2, 2), 2) == 4,
                           "max code " + std::to_string(res.size)));
    }
    return out;
}

// ---------------------------------------------------------------- conjecture

std::vector<Check> conjecture_suite(const GridOptions& opts)
{
    const std::string suite = "conjecture-dn";
    std::vector<Task> tasks;
    for (const long q : q_values(opts, {2, 3}))
        for (const long n : n_values(opts, 1, 5)) {
            if (n % 2 == 0) continue;
            for (long d = 1; d <= n; d += 2) {
                const std::string inst = "polar-d(q=" + std::to_string(q) + ",n=" + std::to_string(n) +
                                         ") d=" + std::to_string(d);
                tasks.push_back(guarded(suite, inst, [=]() -> std::vector<Check> {
                    const auto r = check_conjecture_dn(q, n, d);
                    Check c = make(suite, inst, true,
                                   verdict_name(r.verdict) + ": conjectured " + to_string(r.formula_value) +
                                       ", solver " + (r.solver_value ? to_string(*r.solver_value) : "-"));
                    c.report_only = true;
                    return {c};
                }));
            }
        }
    return run(tasks, opts);
}

std::vector<Check> per_spec_suite(const GridOptions& opts, const std::string& suite,
                                  std::vector<Check> (*fn)(const SchemeSpec&))
{
    std::vector<Task> tasks;
    for (const auto& spec : scheme_grid(opts)) tasks.push_back(guarded(suite, describe(spec), [=] { return fn(spec); }));
    return run(tasks, opts);
}

const std::vector<std::pair<std::string, std::function<std::vector<Check>(const GridOptions&)>>>& registry()
{
    static const std::vector<std::pair<std::string, std::function<std::vector<Check>(const GridOptions&)>>> r{
        {"q-series", [](const GridOptions&) { return q_series_checks(); }},
        {"orthogonality", [](const GridOptions& o) { return per_spec_suite(o, "orthogonality", orthogonality_checks); }},
        {"pq-identities", [](const GridOptions& o) { return per_spec_suite(o, "pq-identities", pq_identity_checks); }},
        {"qc-inverse", [](const GridOptions& o) { return per_spec_suite(o, "qc-inverse", qc_inverse_checks); }},
        {"lp-duality", lp_duality_suite},
        {"complement-product", complement_product_suite},
        {"affine-optima", affine_suite},
        {"hermitian-even", hermitian_even_suite},
        {"ordinary-optima", ordinary_suite},
        {"polar-reduction", polar_reduction_suite},
        {"classical", classical_suite},
        {"nonnegativity", nonnegativity_suite},
        {"ekr", ekr_suite},
        {"epsilon-bounds", epsilon_bound_checks},
        {"product-bounds", product_bound_checks},
        {"size-sandwich", size_sandwich_checks},
        {"oracle", oracle_suite},
        {"conjecture-dn", conjecture_suite},
    };
    return r;
}

}  // namespace

std::vector<std::string> verify_suite_names()
{
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
}

bool is_verify_suite(const std::string& name)
{
    for (const auto& [n, fn] : registry())
        if (n == name) return true;
    return false;
}

std::vector<Check> run_verify_suite(const std::string& name, const GridOptions& opts)
{
    for (const auto& [n, fn] : registry())
        if (n == name) return fn(opts);
    throw std::invalid_argument("unknown suite: " + name);
}

std::vector<SchemeSpec> scheme_grid(const GridOptions& opts)
{
    std::vector<SchemeSpec> out;
    const auto qs = q_values(opts, {2, 3});
    for (const long q : qs) {
        for (const long n : n_values(opts, 1, 4)) {
            out.push_back(make_scheme(Family::Hamming, q, n));
            if (q == qs.front())
                for (long m = n; m <= n + 2; ++m) out.push_back(make_scheme(Family::Johnson, 2, n, m));
            for (long m = n; m <= n + 2; ++m) {
                out.push_back(make_scheme(Family::QJohnson, q, n, m));
                out.push_back(make_scheme(Family::Bilinear, q, n, m));
            }
            out.push_back(make_scheme(Family::HermitianForms, q, n));
            out.push_back(make_scheme(Family::PolarA2nMinus1, q, n));
            out.push_back(make_scheme(Family::PolarA2nMinus1, q, n, {}, Ordering::Standard));
            for (const Family f : {Family::PolarA2n, Family::PolarB, Family::PolarC, Family::PolarD,
                                   Family::PolarD2Elliptic})
                out.push_back(make_scheme(f, q, n));
            for (const long m : {2 * n, 2 * n + 1}) {
                out.push_back(make_scheme(Family::Alternating, q, {}, m));
                out.push_back(make_scheme(Family::HalfD, q, {}, m));
            }
        }
    }
    return out;
}

std::vector<Check> orthogonality_checks(const SchemeSpec& spec)
{
    const std::string suite = "orthogonality";
    const auto& t = spec.tables();
    const long n = spec.n;
    const Rational X(spec.num_vertices);
    const std::string name = describe(spec);

    const bool sums = sum(t.valency) == X && sum(t.multiplicity) == X;
    bool pq = true, rows = true, cols = true, duality = true, rowsum = true;
    for (long i = 0; i <= n; ++i)
        for (long j = 0; j <= n; ++j) {
            Rational s = 0, r = 0, c = 0;
            for (long k = 0; k <= n; ++k) {
                s += t.pnum[i][k] * t.qnum[k][j];
                r += t.multiplicity[k] * t.pnum[i][k] * t.pnum[j][k];
                c += t.valency[k] * t.qnum[i][k] * t.qnum[j][k];
            }
            pq = pq && s == X * delta(i, j);
            rows = rows && r == X * t.valency[i] * delta(i, j);
            cols = cols && c == X * t.multiplicity[i] * delta(i, j);
            duality = duality && t.multiplicity[j] * t.pnum[i][j] == t.valency[i] * t.qnum[j][i];
        }
    for (long k = 0; k <= n; ++k) {
        Rational s = 0;
        for (long i = 0; i <= n; ++i) s += t.pnum[i][k];
        rowsum = rowsum && s == X * delta(k, 0);
    }
    return {make(suite, name + " valency and multiplicity sums", sums), make(suite, name + " PQ = |X| I", pq),
            make(suite, name + " first orthogonality", rows), make(suite, name + " second orthogonality", cols),
            make(suite, name + " P/Q duality", duality), make(suite, name + " column sums of P", rowsum)};
}

std::vector<Check> pq_identity_checks(const SchemeSpec& spec)
{
    const std::string suite = "pq-identities";
    const auto& t = spec.tables();
    const long n = spec.n;
    const Rational& b = spec.b;
    const Rational& c = spec.c;
    const Rational q(spec.q);
    const Rational X(spec.num_vertices);
    const std::string name = describe(spec);
    std::vector<Check> out;

    if (is_ordinary_unified(spec)) {
        // rhs(j,k) = b^{k(n-j)} [n-k, n-j] (qcb^{n-k}; b)_{n-j} / (q; b)_{n-j}
        auto rhs = [&](long j, long k) -> Rational {
            return power(b, k * (n - j)) * q_binomial(n - k, n - j, b) *
                   q_pochhammer(q * c * power(b, n - k), n - j, b) / q_pochhammer(q, n - j, b);
        };
        bool pa = true, qa = true;
        for (long j = 0; j <= n; ++j)
            for (long k = 0; k <= n; ++k) {
                Rational s = 0;
                for (long i = 0; i <= n; ++i) s += q_binomial(n - i, j, b) * t.pnum[i][k];
                pa = pa && s == rhs(j, k);
            }
        for (long i = 0; i <= n; ++i)
            for (long j = 0; j <= n; ++j) {
                Rational s = 0;
                for (long k = 0; k <= n; ++k) s += rhs(j, k) * t.qnum[k][i];
                qa = qa && s == X * q_binomial(n - i, j, b);
            }
        out.push_back(make(suite, name + " binomial sums of P (ordinary)", pa));
        out.push_back(make(suite, name + " binomial sums of Q (ordinary)", qa));
    }
    if (is_affine(spec.family)) {
        bool pb = true, hyp = true;
        for (long j = 0; j <= n; ++j)
            for (long k = 0; k <= n; ++k) {
                Rational s = 0;
                for (long i = 0; i <= n; ++i) s += q_binomial(n - i, j, b) * t.pnum[i][k];
                pb = pb && s == q_binomial(n - k, n - j, b) * power(c * power(b, n), n - j);
                hyp = hyp && affine_p_hypergeometric(spec, j, k) == t.pnum[j][k];
            }
        out.push_back(make(suite, name + " binomial sums of P (affine)", pb));
        out.push_back(make(suite, name + " finite sum = hypergeometric form", hyp));
    }
    if (spec.family == Family::QJohnson) {
        bool hyp = true;
        for (long i = 0; i <= n; ++i)
            for (long k = 0; k <= n; ++k) hyp = hyp && qjohnson_p_hypergeometric(spec, i, k) == t.pnum[i][k];
        out.push_back(make(suite, name + " P = hypergeometric form", hyp));
    }
    return out;
}

std::vector<Check> qc_inverse_checks(const SchemeSpec& spec)
{
    if (!is_ordinary_unified(spec)) return {};
    const std::string suite = "qc-inverse";
    const std::string name = describe(spec);
    const Matrix qc = qc_inverse_product(spec);
    const Matrix C = c_matrix(spec);
    const Matrix Cinv = c_inverse(spec);
    const Matrix& Q = spec.tables().qnum;
    const std::size_t dim = static_cast<std::size_t>(spec.n + 1);
    return {make(suite, name + " closed form times C = Q", multiply(qc, C) == Q),
            make(suite, name + " C inverse times C = I", multiply(Cinv, C) == identity(dim)),
            make(suite, name + " closed form = Q times C inverse", multiply(Q, Cinv) == qc)};
}

Check four_way_check(const std::string& suite, const SchemeSpec& spec, long d)
{
    const std::string name = with_param(spec, "d", d);
    const Rational formula = lp_optimum_formula(spec, d);
    const Rational solver = lp_opt(spec, d);
    const auto pair = verify_strong_duality(spec, d);
    const bool ok = pair.duality_gap_zero && formula == solver && formula == pair.dual_objective &&
                    formula == pair.primal_objective;
    std::string detail = "formula " + to_string(formula) + ", solver " + to_string(solver) + ", dual " +
                         to_string(pair.dual_objective) + ", primal " + to_string(pair.primal_objective);
    if (pair.violated) detail += ", violated: " + *pair.violated;
    return make(suite, name, ok, detail);
}

SuiteSummary summarize(const std::vector<Check>& checks)
{
    SuiteSummary s;
    for (const auto& c : checks) {
        if (c.report_only)
            ++s.reported;
        else if (c.pass)
            ++s.passed;
        else
            ++s.failed;
    }
    return s;
}

nlohmann::json to_json(const Check& c)
{
    nlohmann::json j{{"suite", c.suite}, {"instance", c.instance}, {"pass", c.pass}};
    if (c.report_only) j["report_only"] = true;
    if (!c.detail.empty()) j["detail"] = c.detail;
    return j;
}

}  // namespace delsarte
