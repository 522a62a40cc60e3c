#include "delsarte/schemes.hpp"

#include <algorithm>
#include <sstream>

namespace delsarte {

namespace {

struct FamilyName {
    Family family;
    const char* id;
};

constexpr FamilyName kNames[] = {
    {Family::Hamming, "hamming"},
    {Family::Johnson, "johnson"},
    {Family::QJohnson, "qjohnson"},
    {Family::Bilinear, "bilinear"},
    {Family::Alternating, "alternating"},
    {Family::HermitianForms, "hermitian"},
    {Family::PolarA2nMinus1, "polar-2a-odd"},
    {Family::PolarA2n, "polar-2a-even"},
    {Family::PolarB, "polar-b"},
    {Family::PolarC, "polar-c"},
    {Family::PolarD, "polar-d"},
    {Family::PolarD2Elliptic, "polar-2d"},
    {Family::HalfD, "half-d"},
};

void check_index(const SchemeSpec& spec, long i)
{
    if (i < 0 || i > spec.n)
        throw std::out_of_range("class index " + std::to_string(i) + " outside 0.." +
                                std::to_string(spec.n));
}

// prod_{j<len} (1 + p^{(h0 + 2j)/2}), i.e. (-p^{h0/2}; p)_len
Rational polar_neg_poch(const SchemeSpec& spec, long h0, long len)
{
    Rational prod = 1;
    for (long j = 0; j < len; ++j) prod *= 1 + polar_pow(spec, h0 + 2 * j);
    return prod;
}

Rational polar_kernel_sum(const SchemeSpec& spec, long i, long k)
{
    const Rational p = polar_p(spec);
    const long n = spec.n;
    const long two_e = *spec.polar_two_e;
    Rational total = 0;
    for (long l = 0; l <= i; ++l) {
        Rational term = q_binomial(n - i, k - l, p) * q_binomial(i, l, p) *
                        polar_pow(spec, 2 * l * (l - i - 1) - l * two_e);
        if (l % 2) total -= term; else total += term;
    }
    return total / q_binomial(n, k, p);
}

Rational affine_valency(const SchemeSpec& spec, long i)
{
    const Rational& b = spec.b;
    Rational prod = power(b, choose2(i)) * q_binomial(spec.n, i, b);
    for (long j = 0; j < i; ++j) prod *= spec.c * power(b, spec.n - j) - 1;
    return prod;
}

Rational affine_p(const SchemeSpec& spec, long i, long k)
{
    const Rational& b = spec.b;
    const long n = spec.n;
    const Rational cbn = spec.c * power(b, n);
    Rational total = 0;
    for (long j = 0; j <= i; ++j) {
        Rational term = power(b, choose2(i - j)) * q_binomial(n - j, n - i, b) *
                        q_binomial(n - k, j, b) * power(cbn, j);
        if ((i - j) % 2) total -= term; else total += term;
    }
    return total;
}

Rational qjohnson_p(const SchemeSpec& spec, long i, long k)
{
    const Rational q = spec.q;
    const long n = spec.n, m = *spec.m;
    Rational total = 0;
    for (long j = 0; j <= i; ++j) {
        Rational term = q_binomial(n - j, i - j, q) * q_binomial(n - k, j, q) *
                        q_binomial(m + j - k, j, q) * power(q, j * k + choose2(i - j));
        if ((i - j) % 2) total -= term; else total += term;
    }
    return total;
}

Rational hamming_p(const SchemeSpec& spec, long i, long k)
{
    const long n = spec.n;
    Integer total = 0;
    Integer qm1 = spec.q - 1;
    for (long j = 0; j <= i; ++j) {
        Integer pw;
        mpz_pow_ui(pw.get_mpz_t(), qm1.get_mpz_t(), static_cast<unsigned long>(i - j));
        Integer term = pw * binomial(k, j) * binomial(n - k, i - j);
        if (j % 2) total -= term; else total += term;
    }
    return Rational(total);
}

Rational johnson_p(const SchemeSpec& spec, long i, long k)
{
    const long n = spec.n, m = *spec.m;
    Integer total = 0;
    for (long j = 0; j <= i; ++j) {
        Integer term = binomial(k, j) * binomial(n - k, i - j) * binomial(m - k, i - j);
        if (j % 2) total -= term; else total += term;
    }
    return Rational(total);
}

Rational raw_valency(const SchemeSpec& spec, long i)
{
    switch (spec.family) {
    case Family::Hamming: {
        Integer pw;
        Integer qm1 = spec.q - 1;
        mpz_pow_ui(pw.get_mpz_t(), qm1.get_mpz_t(), static_cast<unsigned long>(i));
        return Rational(binomial(spec.n, i) * pw);
    }
    case Family::Johnson:
        return Rational(binomial(spec.n, i) * binomial(*spec.m, i));
    case Family::QJohnson: {
        const Rational q = spec.q;
        return power(q, i * i) * q_binomial(spec.n, i, q) * q_binomial(*spec.m, i, q);
    }
    case Family::Bilinear:
    case Family::Alternating:
    case Family::HermitianForms:
        return affine_valency(spec, i);
    case Family::HalfD: {
        const Rational q = spec.q;
        return power(q, choose2(2 * i)) * q_binomial(*spec.m, 2 * i, q);
    }
    default:
        // the second ordering only permutes eigenspaces, valencies are unchanged
        return polar_standard_valency(spec, i);
    }
}

Rational raw_p(const SchemeSpec& spec, const std::vector<Rational>& val, long i, long k)
{
    switch (spec.family) {
    case Family::Hamming: return hamming_p(spec, i, k);
    case Family::Johnson: return johnson_p(spec, i, k);
    case Family::QJohnson: return qjohnson_p(spec, i, k);
    case Family::Bilinear:
    case Family::Alternating:
    case Family::HermitianForms: return affine_p(spec, i, k);
    case Family::HalfD: return val[i] * unified_series(spec, i, k);
    default: {
        long kk = k;
        if (spec.ordering == Ordering::Second) kk = second_ordering_permutation(spec.n)[k];
        return polar_standard_p(spec, i, kk);
    }
    }
}

SchemeTables build_tables(const SchemeSpec& spec)
{
    const long n = spec.n;
    SchemeTables t;
    t.valency.resize(n + 1);
    t.multiplicity.resize(n + 1);
    t.pnum.assign(n + 1, std::vector<Rational>(n + 1));
    t.qnum.assign(n + 1, std::vector<Rational>(n + 1));
    for (long i = 0; i <= n; ++i) t.valency[i] = raw_valency(spec, i);
    for (long i = 0; i <= n; ++i)
        for (long k = 0; k <= n; ++k) t.pnum[i][k] = raw_p(spec, t.valency, i, k);

    for (long k = 0; k <= n; ++k) {
        switch (spec.family) {
        case Family::Hamming:
        case Family::Bilinear:
        case Family::Alternating:
        case Family::HermitianForms:
            t.multiplicity[k] = t.valency[k];
            break;
        case Family::Johnson:
            t.multiplicity[k] = Rational(binomial(*spec.m + n, k) - binomial(*spec.m + n, k - 1));
            break;
        case Family::QJohnson: {
            const Rational q = spec.q;
            t.multiplicity[k] = q_binomial(*spec.m + n, k, q) - q_binomial(*spec.m + n, k - 1, q);
            break;
        }
        case Family::HalfD:
            t.multiplicity[k] = halfd_multiplicity_from_dm(spec, k);
            break;
        default: {
            long kk = k;
            if (spec.ordering == Ordering::Second) kk = second_ordering_permutation(n)[k];
            t.multiplicity[k] = polar_standard_multiplicity(spec, kk);
        }
        }
    }
    for (long k = 0; k <= n; ++k)
        for (long i = 0; i <= n; ++i)
            t.qnum[k][i] = t.multiplicity[k] * t.pnum[i][k] / t.valency[i];
    return t;
}

}  // namespace

const SchemeTables& SchemeSpec::tables() const
{
    std::call_once(cache->once, [this] { cache->tables = build_tables(*this); });
    return cache->tables;
}

std::string scheme_id(Family f)
{
    for (const auto& e : kNames)
        if (e.family == f) return e.id;
    throw std::invalid_argument("unknown family");
}

Family parse_family(const std::string& id)
{
    for (const auto& e : kNames)
        if (id == e.id) return e.family;
    throw std::invalid_argument("unknown scheme '" + id + "'");
}

bool is_affine(Family f)
{
    return f == Family::Bilinear || f == Family::Alternating || f == Family::HermitianForms;
}

bool is_polar(Family f)
{
    switch (f) {
    case Family::PolarA2nMinus1:
    case Family::PolarA2n:
    case Family::PolarB:
    case Family::PolarC:
    case Family::PolarD:
    case Family::PolarD2Elliptic: return true;
    default: return false;
    }
}

bool is_ordinary_unified(const SchemeSpec& spec)
{
    return spec.family == Family::QJohnson || spec.family == Family::HalfD ||
           (spec.family == Family::PolarA2nMinus1 && spec.ordering == Ordering::Second);
}

SchemeSpec make_scheme(Family family, long q, std::optional<long> n, std::optional<long> m,
                       std::optional<Ordering> ordering)
{
    if (q < 2) throw std::invalid_argument("q must be at least 2");
    SchemeSpec s;
    s.family = family;
    s.q = q;
    const Rational qr = q;

    if (family == Family::Alternating || family == Family::HalfD) {
        if (!m) throw std::invalid_argument(scheme_id(family) + " needs m");
        if (*m < 2) throw std::invalid_argument("m must be at least 2");
        if (n && *n != *m / 2)
            throw std::invalid_argument("n must equal floor(m/2) for " + scheme_id(family));
        s.m = m;
        s.n = *m / 2;
    } else {
        if (!n) throw std::invalid_argument(scheme_id(family) + " needs n");
        s.n = *n;
        if (family == Family::Johnson || family == Family::QJohnson || family == Family::Bilinear) {
            if (!m) throw std::invalid_argument(scheme_id(family) + " needs m");
            if (*m < *n) throw std::invalid_argument("m must be at least n");
            s.m = m;
        } else if (m) {
            throw std::invalid_argument(scheme_id(family) + " takes no m");
        }
    }
    if (s.n < 1) throw std::invalid_argument("n must be at least 1");

    s.ordering = Ordering::Standard;
    if (family == Family::PolarA2nMinus1 || family == Family::HalfD) s.ordering = Ordering::Second;
    if (ordering) {
        if (*ordering == Ordering::Second && family != Family::PolarA2nMinus1 &&
            family != Family::HalfD)
            throw std::invalid_argument("second ordering only exists for polar-2a-odd");
        if (*ordering == Ordering::Standard && family == Family::HalfD)
            throw std::invalid_argument("half-d is only implemented in its Q-polynomial ordering");
        s.ordering = *ordering;
    }

    switch (family) {
    case Family::Hamming:
    case Family::Johnson:
        s.b = 1;
        s.c = 1;
        break;
    case Family::Bilinear:
    case Family::QJohnson:
        s.b = qr;
        s.c = power(qr, *s.m - s.n);
        break;
    case Family::HermitianForms:
    case Family::PolarA2nMinus1:
        s.b = -qr;
        s.c = -1;
        break;
    case Family::Alternating:
    case Family::HalfD:
        s.b = qr * qr;
        s.c = (*s.m % 2 == 0) ? Rational(1, q) : qr;
        s.c.canonicalize();
        break;
    default:
        // 2A_{2n}, B, C, D, 2D_{n+1}: no (b,c) parametrisation is used
        s.b = 0;
        s.c = 0;
    }

    switch (family) {
    case Family::PolarA2nMinus1: s.polar_sqrt_p = q; s.polar_two_e = -1; break;
    case Family::PolarA2n: s.polar_sqrt_p = q; s.polar_two_e = 1; break;
    case Family::PolarB:
    case Family::PolarC: s.polar_two_e = 0; break;
    case Family::PolarD: s.polar_two_e = -2; break;
    case Family::PolarD2Elliptic: s.polar_two_e = 2; break;
    default: break;
    }

    Rational count = vertex_count_closed_form(s);
    if (count.get_den() != 1) throw MathError("vertex count is not an integer");
    s.num_vertices = count.get_num();
    return s;
}

Rational vertex_count_closed_form(const SchemeSpec& s)
{
    const Rational q = s.q;
    switch (s.family) {
    case Family::Hamming: return power(q, s.n);
    case Family::Johnson: return Rational(binomial(*s.m + s.n, s.n));
    case Family::QJohnson: return q_binomial(*s.m + s.n, s.n, q);
    case Family::Bilinear: return power(q, *s.m * s.n);
    case Family::Alternating: return power(q, choose2(*s.m));
    case Family::HermitianForms: return power(q, s.n * s.n);
    case Family::HalfD: {
        // half of prod_{i=1}^{m} (1 + q^{i-1})
        Rational prod = 1;
        for (long i = 1; i < *s.m; ++i) prod *= 1 + power(q, i);
        return prod;
    }
    default: {
        Rational prod = 1;
        for (long i = 1; i <= s.n; ++i) prod *= 1 + polar_pow(s, 2 * i + *s.polar_two_e);
        return prod;
    }
    }
}

std::string describe(const SchemeSpec& spec)
{
    std::ostringstream os;
    os << scheme_id(spec.family) << "(q=" << spec.q << ",n=" << spec.n;
    if (spec.m) os << ",m=" << *spec.m;
    if (spec.family == Family::PolarA2nMinus1 && spec.ordering == Ordering::Standard)
        os << ",standard";
    os << ")";
    return os.str();
}

Rational valency(const SchemeSpec& spec, long i)
{
    check_index(spec, i);
    return spec.tables().valency[i];
}

Rational multiplicity(const SchemeSpec& spec, long k)
{
    check_index(spec, k);
    return spec.tables().multiplicity[k];
}

Rational p_number(const SchemeSpec& spec, long i, long k)
{
    check_index(spec, i);
    check_index(spec, k);
    return spec.tables().pnum[i][k];
}

Rational q_number(const SchemeSpec& spec, long k, long i)
{
    check_index(spec, i);
    check_index(spec, k);
    return spec.tables().qnum[k][i];
}

std::vector<long> second_ordering_permutation(long n)
{
    std::vector<long> perm(n + 1);
    for (long k = 0; k <= n; ++k) perm[k] = (k % 2 == 0) ? k / 2 : n - (k - 1) / 2;
    return perm;
}

Rational z_point(const SchemeSpec& spec, long i)
{
    check_index(spec, i);
    switch (spec.family) {
    case Family::Hamming:
    case Family::Johnson: return i;
    default: break;
    }
    if (is_polar(spec.family) && spec.ordering == Ordering::Standard)
        return power(polar_p(spec), -i);
    return power(spec.b, -i);
}

Rational polar_p(const SchemeSpec& spec)
{
    if (!spec.polar_two_e) throw std::invalid_argument("not a polar space");
    return spec.polar_sqrt_p ? Rational(spec.q * spec.q) : Rational(spec.q);
}

Rational polar_pow(const SchemeSpec& spec, long h)
{
    const Rational q = spec.q;
    if (spec.polar_sqrt_p) return power(q, h);
    if (h % 2 != 0) throw MathError("half-integer power of p for an integral polar parameter");
    return power(q, h / 2);
}

Rational polar_standard_valency(const SchemeSpec& spec, long i)
{
    return polar_pow(spec, 2 * choose2(i + 1) + i * *spec.polar_two_e) *
           q_binomial(spec.n, i, polar_p(spec));
}

Rational polar_standard_multiplicity(const SchemeSpec& spec, long k)
{
    const long n = spec.n;
    const long two_e = *spec.polar_two_e;
    Rational num = polar_pow(spec, 2 * k * (k - n)) * q_binomial(n, k, polar_p(spec)) *
                   polar_neg_poch(spec, two_e + 2, n);
    Rational den = polar_neg_poch(spec, two_e - 2 * k + 2, n - k) *
                   polar_neg_poch(spec, 2 * k - 2 * n - two_e - 2, k);
    return num / den;
}

Rational polar_standard_p(const SchemeSpec& spec, long i, long k)
{
    return polar_standard_valency(spec, i) * polar_kernel_sum(spec, i, k);
}

Rational polar_standard_q(const SchemeSpec& spec, long k, long i)
{
    return polar_standard_multiplicity(spec, k) * polar_kernel_sum(spec, i, k);
}

Rational unified_series(const SchemeSpec& spec, long i, long k)
{
    const Rational& b = spec.b;
    const Rational& c = spec.c;
    const long n = spec.n;
    const Rational q = spec.q;
    std::vector<Rational> upper = {power(b, -i), power(b, -k), power(b, k - 2 * n) / (q * c)};
    std::vector<Rational> lower = {power(b, -n), power(b, -n) / c};
    return basic_hypergeometric(upper, lower, b, b, std::min(i, k));
}

Rational affine_p_hypergeometric(const SchemeSpec& spec, long i, long k)
{
    const Rational& b = spec.b;
    const long n = spec.n;
    std::vector<Rational> upper = {power(b, -k), power(b, -i), 0};
    std::vector<Rational> lower = {power(b, -n) / spec.c, power(b, -n)};
    return affine_valency(spec, i) * basic_hypergeometric(upper, lower, b, b, std::min(i, k));
}

Rational qjohnson_p_hypergeometric(const SchemeSpec& spec, long i, long k)
{
    return raw_valency(spec, i) * unified_series(spec, i, k);
}

Rational halfd_multiplicity_from_dm(const SchemeSpec& spec, long k)
{
    SchemeSpec dm = make_scheme(Family::PolarD, spec.q, *spec.m);
    Rational mu = polar_standard_multiplicity(dm, k);
    if (*spec.m % 2 == 0 && 2 * k == *spec.m) mu /= 2;
    return mu;
}

}  // namespace delsarte
