#include "delsarte/bounds.hpp"

#include "delsarte/certificates.hpp"
#include "delsarte/delsartelp.hpp"

#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace delsarte {

namespace {

Rational qpow(long q, long e) { return power(Rational(q), e); }

Rational sgn_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

bool odd(long x) { return x % 2 != 0; }

void require_d(const SchemeSpec& spec, long d)
{
    if (d < 1 || d > spec.n) throw std::invalid_argument("d must lie in 1..n");
}

// matrix size for Alternating, rank for HalfD, n otherwise
long ekr_size(const SchemeSpec& spec)
{
    if (spec.family == Family::Alternating || spec.family == Family::HalfD) return *spec.m;
    return spec.n;
}

bool johnson_divisibility(const SchemeSpec& spec, long d)
{
    const long n = spec.n;
    const long m = *spec.m;
    for (long i = 0; i <= n - d; ++i) {
        const Integer top = binomial(m + n - i, m + d - 1);
        const Integer div = binomial(n - i, d - 1);
        if (div == 0 || top % div != 0) return false;
    }
    return true;
}

Rational ordinary_product(const SchemeSpec& spec, long d)
{
    const Rational q(spec.q);
    Rational prod(spec.num_vertices);
    for (long i = 0; i <= d - 2; ++i)
        prod *= (q * power(spec.b, i) - 1) / (q * spec.c * power(spec.b, spec.n + i) - 1);
    return prod;
}

std::string opt_str(const std::optional<Rational>& x) { return x ? to_string(*x) : ""; }

}  // namespace

Rational lp_optimum_formula(const SchemeSpec& spec, long d)
{
    require_d(spec, d);
    const long n = spec.n;
    const long q = spec.q;
    switch (spec.family) {
    case Family::Hamming:
        if (q < std::max(d, n - d + 2))
            throw std::invalid_argument("Piret condition fails: q < max{d, n-d+2}");
        return qpow(q, n - d + 1);
    case Family::Johnson: {
        if (!johnson_divisibility(spec, d))
            throw std::invalid_argument("Johnson divisibility condition fails");
        return Rational(binomial(*spec.m + n, n - d + 1)) / Rational(binomial(n, n - d + 1));
    }
    case Family::Bilinear:
    case Family::Alternating: return affine_code_size(spec, d);
    case Family::HermitianForms:
        return odd(d) ? affine_code_size(spec, d) : hermitian_forms_even_size(spec, d);
    case Family::QJohnson:
    case Family::HalfD: return ordinary_code_size(spec, d);
    case Family::PolarA2nMinus1:
        return odd(d) ? ordinary_code_size(spec, d) : hermitian_polar_even_size(spec, d);
    case Family::PolarB:
    case Family::PolarC:
    case Family::PolarD: return lp_optimum_bcd(spec.family, q, n, d);
    default: break;
    }
    throw std::invalid_argument("no closed-form LP optimum for " + scheme_id(spec.family));
}

Rational lp_optimum_product_form(const SchemeSpec& spec, long d)
{
    require_d(spec, d);
    const Rational q(spec.q);
    switch (spec.family) {
    case Family::Bilinear:
    case Family::Alternating:
    case Family::HermitianForms: {
        if (spec.family == Family::HermitianForms && !odd(d)) return hermitian_forms_even_size(spec, d);
        Rational prod(spec.num_vertices);
        for (long l = 0; l <= d - 2; ++l)
            prod *= q * power(spec.b, l) / (q * spec.c * power(spec.b, spec.n + l));
        return prod;
    }
    case Family::QJohnson:
    case Family::HalfD: return ordinary_product(spec, d);
    case Family::PolarA2nMinus1:
        return odd(d) ? ordinary_product(spec, d) : ordinary_product(spec, d) * epsilon_nd(spec.n, d, spec.q);
    default: return lp_optimum_formula(spec, d);
    }
}

bool formula_is_certifiable(const SchemeSpec& spec, long d)
{
    if (spec.family != Family::Johnson) return true;
    return spec.n == 3 && spec.m && *spec.m == 4 && d == 2;
}

Rational lp_optimum_bcd(Family family, long q, long n, long d)
{
    if (d < 1 || d > n) throw std::invalid_argument("d must lie in 1..n");
    Rational prod = vertex_count_closed_form(make_scheme(family, q, n));
    if (family == Family::PolarB || family == Family::PolarC) {
        if (!odd(d)) throw std::invalid_argument("B_n and C_n need odd d");
        for (long i = 1; i <= (d - 1) / 2; ++i)
            prod *= (qpow(q, 2 * i - 1) - 1) / (qpow(q, odd(n) ? n + 2 * i - 1 : n + 2 * i) - 1);
        return prod;
    }
    if (family == Family::PolarD) {
        if (odd(d) || d < 2) throw std::invalid_argument("D_n needs even d >= 2");
        prod /= 2;
        for (long i = 1; i <= d / 2 - 1; ++i)
            prod *= (qpow(q, 2 * i - 1) - 1) / (qpow(q, odd(n) ? n + 2 * i - 1 : n + 2 * i - 2) - 1);
        return prod;
    }
    throw std::invalid_argument("family must be polar-b, polar-c or polar-d");
}

Rational lp_optimum_bcd_reduced(Family family, long q, long n, long d)
{
    if (family == Family::PolarB || family == Family::PolarC) {
        if (!odd(d)) throw std::invalid_argument("B_n and C_n need odd d");
        SchemeSpec half = make_scheme(Family::HalfD, q, {}, n + 1);
        return lp_opt(half, (d + 1) / 2);
    }
    if (family == Family::PolarD) {
        if (odd(d) || d < 2) throw std::invalid_argument("D_n needs even d >= 2");
        SchemeSpec half = make_scheme(Family::HalfD, q, {}, n);
        return lp_opt(half, d / 2);
    }
    throw std::invalid_argument("family must be polar-b, polar-c or polar-d");
}

Rational lp_optimum_bcd_direct(Family family, long q, long n, long d)
{
    SchemeSpec spec = make_scheme(family, q, n);
    if (family == Family::PolarD) {
        if (odd(d) || d < 2) throw std::invalid_argument("D_n needs even d >= 2");
        std::set<long> even;
        for (long i = d; i <= n; ++i)
            if (!odd(i)) even.insert(i);
        return lp_opt_set(spec, even);
    }
    if (!odd(d)) throw std::invalid_argument("B_n and C_n need odd d");
    return lp_opt(spec, d);
}

bool ekr_admissible(const SchemeSpec& spec, long t)
{
    const long size = ekr_size(spec);
    const long n = spec.n;
    if (t < 1 || t > size) return false;
    switch (spec.family) {
    case Family::Hamming: return spec.q >= std::max(t + 1, n - t + 1);
    case Family::Johnson: {
        const long v = *spec.m + n;
        for (long i = 0; i <= t - 1; ++i) {
            const Integer div = binomial(n - i, n - t);
            if (div == 0 || binomial(v - i, v - t) % div != 0) return false;
        }
        return true;
    }
    case Family::PolarB:
    case Family::PolarC: return odd(n) == odd(t);
    case Family::PolarD: return odd(n) != odd(t) && t <= n - 1;
    case Family::QJohnson:
    case Family::Bilinear:
    case Family::Alternating:
    case Family::HermitianForms:
    case Family::PolarA2nMinus1:
    case Family::HalfD: return true;
    default: return false;
    }
}

Rational ekr_bound(const SchemeSpec& spec, long t)
{
    if (!ekr_admissible(spec, t)) throw std::invalid_argument("t outside the admissible range for this family");
    const long n = spec.n;
    const long q = spec.q;
    switch (spec.family) {
    case Family::Johnson: {
        const long v = *spec.m + n;
        return Rational(binomial(v - t, n - t));
    }
    case Family::Hamming: return qpow(q, n - t);
    case Family::QJohnson: return q_binomial(*spec.m + n - t, n - t, Rational(q));
    case Family::Bilinear: return qpow(q, *spec.m * (n - t));
    case Family::Alternating: {
        const long size = *spec.m;
        if (!odd(size) && !odd(t)) return qpow(q, (size - t) * (size - 1) / 2);
        if (odd(size) && odd(t)) return qpow(q, size * (size - t) / 2);
        if (!odd(size)) return qpow(q, (size - t - 1) * (size - 1) / 2);
        return qpow(q, size * (size - t - 1) / 2);
    }
    case Family::HermitianForms: {
        const Rational base = qpow(q, n * (n - t));
        const Rational top = qpow(q, t + 1) + qpow(q, t);
        if (!odd(n - t)) return base;
        if (!odd(n)) return base * top / (qpow(q, n + t) + qpow(q, n) - qpow(q, t + 1) + 1);
        return base * top / (qpow(q, n + t) - qpow(q, n) + qpow(q, t + 1) + 1);
    }
    case Family::PolarA2nMinus1: {
        Rational prod = 1;
        for (long i = 0; i <= n - t - 1; ++i)
            prod *= (qpow(q, n + 1 + i) + sgn_pow(n + i)) / (qpow(q, i + 1) + sgn_pow(i + 1));
        if (!odd(n - t)) return prod;
        return sgn_pow(n + 1) / epsilon_nd(n, n - t + 1, q) * prod;
    }
    case Family::PolarB:
    case Family::PolarC: {
        Rational prod = 1;
        for (long i = 1; i <= (n - t) / 2; ++i)
            prod *= (qpow(q, odd(n) ? n + 2 * i - 1 : n + 2 * i) - 1) / (qpow(q, 2 * i - 1) - 1);
        return prod;
    }
    case Family::PolarD: {
        Rational prod = 2;
        for (long i = 1; i <= (n - t - 1) / 2; ++i)
            prod *= (qpow(q, odd(n) ? n + 2 * i - 1 : n + 2 * i - 2) - 1) / (qpow(q, 2 * i - 1) - 1);
        return prod;
    }
    case Family::HalfD: {
        // the product runs over the rank m; the exponents use n = floor(m/2)
        const long rank = *spec.m;
        Rational prod = 1;
        const long top = (rank - t - 2 >= 0) ? (rank - t - 2) / 2 : -1;
        for (long i = 0; i <= top; ++i)
            prod *= (qpow(q, odd(rank) ? 2 * n + 2 * i + 2 : 2 * n + 2 * i) - 1) / (qpow(q, 2 * i + 1) - 1);
        return prod;
    }
    default: break;
    }
    throw std::invalid_argument("no intersecting-set bound for " + scheme_id(spec.family));
}

Rational ekr_bound_via_lp(const SchemeSpec& spec, long t, bool use_solver)
{
    if (!ekr_admissible(spec, t)) throw std::invalid_argument("t outside the admissible range for this family");
    const Rational size(spec.num_vertices);
    long d = spec.n - t + 1;
    if (spec.family == Family::Alternating || spec.family == Family::HalfD) d = (*spec.m - t) / 2 + 1;
    if (d > spec.n) return size;  // every class is allowed: the complement LP is trivial
    if (!use_solver) return size / lp_optimum_formula(spec, d);
    if (spec.family == Family::PolarD) return size / lp_optimum_bcd_direct(spec.family, spec.q, spec.n, d);
    return size / lp_opt(spec, d);
}

bool ekr_simple_admissible(Family family, long n, long t)
{
    if (!(1 < t && t < n)) return false;
    switch (family) {
    case Family::PolarA2nMinus1: return true;
    case Family::PolarB:
    case Family::PolarC: return odd(n) == odd(t);
    case Family::PolarD: return odd(n) != odd(t);
    default: return false;
    }
}

Rational ekr_simple_bound(Family family, long q, long n, long t)
{
    if (q < 2 || !ekr_simple_admissible(family, n, t))
        throw std::invalid_argument("simplified bound needs 1 < t < n and matching parities");
    switch (family) {
    case Family::PolarA2nMinus1:
        if (!odd(n - t)) return 8 * qpow(q, n * (n - t));
        if (odd(n)) return 43 * qpow(q, n * (n - t - 1) + 1);
        return 26 * qpow(q, n * (n - t - 1) + 1);
    case Family::PolarB:
    case Family::PolarC:
        if (odd(n)) return 4 * qpow(q, n * (n - t) / 2);
        return 4 * qpow(q, (n + 1) * (n - t) / 2);
    case Family::PolarD:
        if (odd(n)) return 8 * qpow(q, n * (n - t - 1) / 2);
        return 8 * qpow(q, (n - 1) * (n - t - 1) / 2);
    default: break;
    }
    throw std::invalid_argument("simplified bounds exist only for polar spaces");
}

BoundReport check_conjecture_dn(long q, long n, long d)
{
    if (!odd(n) || !odd(d)) throw std::invalid_argument("conjecture needs odd n and odd d");
    if (d < 1 || d > n) throw std::invalid_argument("d must lie in 1..n");
    const auto start = std::chrono::steady_clock::now();
    SchemeSpec spec = make_scheme(Family::PolarD, q, n);
    BoundReport r;
    r.scheme = scheme_id(Family::PolarD);
    r.q = q;
    r.n = n;
    r.param = d;
    Rational prod(spec.num_vertices);
    for (long i = 1; i <= (d - 1) / 2; ++i) prod *= (qpow(q, 2 * i - 1) - 1) / (qpow(q, n + 2 * i - 1) - 1);
    r.formula_value = prod;
    r.solver_value = lp_opt(spec, d);
    r.verdict = (*r.solver_value == prod) ? Verdict::Match : Verdict::Mismatch;
    r.note = "conjecture";
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

BoundReport bound_report(const SchemeSpec& spec, long d, bool with_certificate)
{
    const auto start = std::chrono::steady_clock::now();
    BoundReport r;
    r.scheme = scheme_id(spec.family);
    r.q = spec.q;
    r.n = spec.n;
    r.m = spec.m;
    r.param = d;
    r.formula_value = lp_optimum_formula(spec, d);
    if (spec.family == Family::PolarD)
        r.solver_value = lp_optimum_bcd_direct(spec.family, spec.q, spec.n, d);
    else
        r.solver_value = lp_opt(spec, d);

    if (with_certificate) {
        std::optional<CertificatePair> pair;
        switch (spec.family) {
        case Family::PolarB:
        case Family::PolarC:
            pair = verify_strong_duality(make_scheme(Family::HalfD, spec.q, {}, spec.n + 1), (d + 1) / 2);
            break;
        case Family::PolarD:
            pair = verify_strong_duality(make_scheme(Family::HalfD, spec.q, {}, spec.n), d / 2);
            break;
        case Family::Johnson:
            if (formula_is_certifiable(spec, d)) pair = verify_strong_duality(spec, d);
            break;
        default: pair = verify_strong_duality(spec, d);
        }
        if (pair) {
            if (pair->duality_gap_zero)
                r.certificate_value = pair->primal_objective;
            else
                r.note = pair->violated.value_or("certificate failed");
        }
    }

    bool agree = !r.note.size();
    if (r.solver_value && *r.solver_value != r.formula_value) agree = false;
    if (r.certificate_value && *r.certificate_value != r.formula_value) agree = false;
    if (!agree)
        r.verdict = Verdict::Mismatch;
    else if (!formula_is_certifiable(spec, d))
        r.verdict = Verdict::Unverified;
    else
        r.verdict = Verdict::Match;
    if (r.verdict == Verdict::Unverified) r.note = "design existence not certified";
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::string verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::Match: return "match";
    case Verdict::Mismatch: return "mismatch";
    case Verdict::Unverified: return "unverified";
    }
    return "unknown";
}

BoundReport ekr_report(const SchemeSpec& spec, long t)
{
    const auto start = std::chrono::steady_clock::now();
    BoundReport r;
    r.scheme = scheme_id(spec.family);
    r.q = spec.q;
    r.n = spec.n;
    r.m = spec.m;
    r.param_name = "t";
    r.param = t;
    r.formula_value = ekr_bound(spec, t);
    r.solver_value = ekr_bound_via_lp(spec, t, true);
    r.certificate_value = ekr_bound_via_lp(spec, t, false);
    const bool agree = *r.solver_value == r.formula_value && *r.certificate_value == r.formula_value;
    if (!agree)
        r.verdict = Verdict::Mismatch;
    else if (spec.family == Family::Hamming || spec.family == Family::Johnson)
        r.verdict = Verdict::Unverified;
    else
        r.verdict = Verdict::Match;
    if (r.verdict == Verdict::Unverified) r.note = "size hypothesis not certified";
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

nlohmann::json to_json(const BoundReport& r, bool decimal, bool timing)
{
    nlohmann::json out = {
        {"family", r.scheme},
        {"q", r.q},
        {"n", r.n},
        {"m", r.m ? nlohmann::json(*r.m) : nlohmann::json(nullptr)},
        {r.param_name, r.param},
        {"formula", to_string(r.formula_value)},
        {"solver", r.solver_value ? nlohmann::json(to_string(*r.solver_value)) : nlohmann::json(nullptr)},
        {"certificate",
         r.certificate_value ? nlohmann::json(to_string(*r.certificate_value)) : nlohmann::json(nullptr)},
        {"verdict", verdict_name(r.verdict)},
    };
    if (!r.note.empty()) out["note"] = r.note;
    if (decimal) out["formula_approx"] = to_decimal(r.formula_value);
    if (timing) out["millis"] = r.millis;
    return out;
}

std::string csv_header(bool decimal, bool timing)
{
    std::string h = "family,q,n,m,param,value,formula,solver,certificate,verdict";
    if (decimal) h += ",formula_approx";
    if (timing) h += ",millis";
    return h;
}

std::string to_csv(const BoundReport& r, bool decimal, bool timing)
{
    std::ostringstream os;
    os << r.scheme << ',' << r.q << ',' << r.n << ',' << (r.m ? std::to_string(*r.m) : "") << ','
       << r.param_name << ',' << r.param << ',' << to_string(r.formula_value) << ',' << opt_str(r.solver_value)
       << ',' << opt_str(r.certificate_value) << ',' << verdict_name(r.verdict);
    if (decimal) os << ',' << to_decimal(r.formula_value);
    if (timing) os << ',' << std::llround(r.millis);
    return os.str();
}

std::string to_text(const BoundReport& r, bool decimal, bool timing)
{
    std::ostringstream os;
    os << r.scheme << " q=" << r.q << " n=" << r.n;
    if (r.m) os << " m=" << *r.m;
    os << ' ' << r.param_name << '=' << r.param << "  formula=" << to_string(r.formula_value);
    if (decimal) os << " (~" << to_decimal(r.formula_value) << ')';
    if (r.solver_value) os << "  solver=" << to_string(*r.solver_value);
    if (r.certificate_value) os << "  certificate=" << to_string(*r.certificate_value);
    os << "  " << verdict_name(r.verdict);
    if (!r.note.empty()) os << "  [" << r.note << ']';
    if (timing) os << "  " << std::llround(r.millis) << " ms";
    return os.str();
}

}  // namespace delsarte
