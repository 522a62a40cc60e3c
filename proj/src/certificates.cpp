#include "delsarte/certificates.hpp"

#include <stdexcept>

namespace delsarte {

namespace {

Rational gb(long n, long k, const Rational& base) { return q_binomial(n, k, base); }

Rational poch(const Rational& a, long k, const Rational& base) { return q_pochhammer(a, k, base); }

Rational sgn_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

void require_range(const SchemeSpec& spec, long d)
{
    if (d < 1 || d > spec.n) throw std::invalid_argument("d must lie in 1..n");
}

void require_even(long d)
{
    if (d % 2 != 0) throw std::invalid_argument("d must be even");
}

Rational cbn(const SchemeSpec& spec) { return spec.c * power(spec.b, spec.n); }

DualCertificate finish_dual(const SchemeSpec& spec, long d, const std::vector<Rational>& values,
                            std::vector<Rational> closed)
{
    DualCertificate out;
    const long n = spec.n;
    const Rational size(spec.num_vertices);
    out.raw_coefficients.assign(n + 1, 0);
    for (long k = 0; k <= n; ++k) {
        for (long i = 0; i <= n; ++i) out.raw_coefficients[k] += values[i] * p_number(spec, i, k);
        out.raw_coefficients[k] /= size;
    }
    out.closed_coefficients = std::move(closed);
    out.closed_form_match = out.raw_coefficients == out.closed_coefficients;

    PolynomialDual poly = dual_bound_from_values(spec, values, distance_set_from(d, n));
    out.y.kind = DistKind::DualSolution;
    out.y.entries = poly.coefficients;
    out.objective = poly.objective;
    out.feasible = poly.feasible;
    out.violation = poly.violation;
    return out;
}

// sum_{j=i}^{top} (-1)^{j-i} b^{C(j-i,2)} [j,i] g(j); the q-binomial inversion kernel
template <class G>
Rational inversion_sum(const Rational& b, long i, long top, G g)
{
    Rational acc = 0;
    for (long j = i; j <= top; ++j)
        acc += sgn_pow(j - i) * power(b, choose2(j - i)) * gb(j, i, b) * g(j);
    return acc;
}

Distributions make_dists(long n)
{
    Distributions out;
    out.inner.kind = DistKind::Inner;
    out.inner.entries.assign(n + 1, 0);
    out.dual.kind = DistKind::Dual;
    out.dual.entries.assign(n + 1, 0);
    return out;
}

bool ordinary_family(const SchemeSpec& spec)
{
    return spec.family == Family::QJohnson || spec.family == Family::HalfD ||
           (spec.family == Family::PolarA2nMinus1 && spec.ordering == Ordering::Second);
}

}  // namespace

Rational affine_code_size(const SchemeSpec& spec, long d) { return power(cbn(spec), spec.n - d + 1); }

Rational ordinary_code_size(const SchemeSpec& spec, long d)
{
    const Rational q(spec.q);
    return Rational(spec.num_vertices) * poch(q, d - 1, spec.b) / poch(q * cbn(spec), d - 1, spec.b);
}

Rational hermitian_forms_even_size(const SchemeSpec& spec, long d)
{
    const Rational& b = spec.b;
    const long n = spec.n;
    return affine_code_size(spec, d) *
           ((power(b, n - d + 2) - 1) + power(b, n) * (power(b, n - d + 1) - 1)) /
           (power(b, n - d + 2) - power(b, n - d + 1));
}

Rational hermitian_polar_even_size(const SchemeSpec& spec, long d)
{
    return ordinary_code_size(spec, d) * epsilon_nd(spec.n, d, spec.q);
}

Rational epsilon_nd(long n, long d, long q)
{
    require_even(d);
    if (d < 2 || d > n) throw std::invalid_argument("epsilon needs 2 <= d <= n");
    const Rational x(-q);
    const Rational qq(q);
    const Rational head = power(x, n - d + 2) - 1;
    const Rational tail = power(x, n - d + 1) - 1;
    const Rational top = power(x, n + d - 2) - 1;
    const Rational num = head + qq * top / (qq * power(x, d - 2) - 1) * tail;
    const Rational den = head + qq * top / (power(x, n + d - 1) - 1) * tail;
    return num / den;
}

DualCertificate dual_singleton_affine(const SchemeSpec& spec, long d)
{
    if (!is_affine(spec.family)) throw std::invalid_argument("affine scheme required");
    require_range(spec, d);
    if (spec.family == Family::HermitianForms && d % 2 == 0)
        throw std::invalid_argument("use dual_hermitian_forms_even");
    const long n = spec.n;
    const Rational& b = spec.b;
    std::vector<Rational> values(n + 1), closed(n + 1);
    for (long i = 0; i <= n; ++i) values[i] = affine_code_size(spec, d) * gb(n - i, n - d + 1, b);
    for (long k = 0; k <= n; ++k) closed[k] = gb(n - k, d - 1, b);
    return finish_dual(spec, d, values, closed);
}

DualCertificate dual_singleton_ordinary(const SchemeSpec& spec, long d)
{
    if (!ordinary_family(spec)) throw std::invalid_argument("ordinary q-analog in the second ordering required");
    require_range(spec, d);
    if (spec.family == Family::PolarA2nMinus1 && d % 2 == 0)
        throw std::invalid_argument("use dual_hermitian_polar_even");
    const long n = spec.n;
    const Rational& b = spec.b;
    const Rational q(spec.q);
    const Rational size(spec.num_vertices);
    std::vector<Rational> values(n + 1), closed(n + 1);
    for (long i = 0; i <= n; ++i) values[i] = gb(n - i, n - d + 1, b);
    for (long k = 0; k <= n; ++k)
        closed[k] = power(b, k * (d - 1)) * gb(n - k, d - 1, b) *
                    poch(q * spec.c * power(b, n - k), d - 1, b) / poch(q, d - 1, b) / size;
    return finish_dual(spec, d, values, closed);
}

DualCertificate dual_hermitian_forms_even(const SchemeSpec& spec, long d)
{
    if (spec.family != Family::HermitianForms) throw std::invalid_argument("Hermitian forms scheme required");
    require_range(spec, d);
    require_even(d);
    const long n = spec.n;
    const Rational& b = spec.b;
    const Rational q(spec.q);
    std::vector<Rational> values(n + 1), closed(n + 1);
    for (long i = 0; i <= n; ++i)
        values[i] = power(q, n * (n - d + 1)) * gb(n - 1, d - 2, b) * gb(n - i, n - d + 1, b) +
                    sgn_pow(n) * power(q, n * (n - d + 2)) * gb(n - 1, d - 1, b) * gb(n - i, n - d + 2, b);
    for (long k = 0; k <= n; ++k)
        closed[k] = sgn_pow(n + 1) * (gb(n - 1, d - 2, b) * gb(n - k, d - 1, b) -
                                      gb(n - 1, d - 1, b) * gb(n - k, d - 2, b));
    return finish_dual(spec, d, values, closed);
}

DualCertificate dual_hermitian_polar_even(const SchemeSpec& spec, long d)
{
    if (spec.family != Family::PolarA2nMinus1 || spec.ordering != Ordering::Second)
        throw std::invalid_argument("polar space 2A_{2n-1} in the second ordering required");
    require_range(spec, d);
    require_even(d);
    const long n = spec.n;
    const Rational& b = spec.b;
    const Rational q(spec.q);
    const Rational size(spec.num_vertices);
    const Rational weight = b * (power(b, n + d - 2) - 1) / (q * power(b, d - 2) - 1);
    std::vector<Rational> values(n + 1), closed(n + 1);
    for (long i = 0; i <= n; ++i)
        values[i] = gb(n - 1, d - 2, b) * gb(n - i, n - d + 1, b) -
                    weight * gb(n - 1, d - 1, b) * gb(n - i, n - d + 2, b);
    for (long k = 0; k <= n; ++k) {
        const Rational lead = power(b, k * (d - 1)) * poch(power(b, n - k + 1), d - 1, b) / poch(q, d - 1, b) *
                              gb(n - 1, d - 2, b) * gb(n - k, d - 1, b);
        const Rational second = power(b, k * (d - 2) + 1) * (power(b, n + d - 2) - 1) /
                                (q * power(b, d - 2) - 1) * poch(power(b, n - k + 1), d - 2, b) /
                                poch(q, d - 2, b) * gb(n - 1, d - 1, b) * gb(n - k, d - 2, b);
        closed[k] = (lead - second) / size;
    }
    return finish_dual(spec, d, values, closed);
}

DualCertificate dual_singleton_classical(const SchemeSpec& spec, long d)
{
    if (spec.family != Family::Hamming && spec.family != Family::Johnson)
        throw std::invalid_argument("Hamming or Johnson scheme required");
    require_range(spec, d);
    const long n = spec.n;
    std::vector<Rational> values(n + 1, 1);
    for (long i = 0; i <= n; ++i)
        for (long j = d; j <= n; ++j) values[i] *= Rational(i - j);
    DualCertificate out = finish_dual(spec, d, values, {});
    out.closed_form_match = true;  // no closed form to compare against
    return out;
}

Distributions inner_distribution_affine(const SchemeSpec& spec, long d)
{
    if (!is_affine(spec.family)) throw std::invalid_argument("affine scheme required");
    require_range(spec, d);
    if (spec.family == Family::HermitianForms && d % 2 == 0)
        throw std::invalid_argument("use hermitian_forms_even_distributions");
    const long n = spec.n;
    const Rational& b = spec.b;
    const Rational base = cbn(spec);
    Distributions out = make_dists(n);
    out.inner.entries[0] = 1;
    out.dual.entries[0] = affine_code_size(spec, d);
    for (long i = 0; i <= n - 1; ++i) {
        out.inner.entries[n - i] = inversion_sum(b, i, n - d, [&](long j) -> Rational {
            return gb(n, j, b) * (power(base, n - d + 1 - j) - 1);
        });
        out.dual.entries[n - i] = power(base, n - d + 1) * inversion_sum(b, i, d - 2, [&](long j) -> Rational {
            return gb(n, j, b) * (power(base, d - 1 - j) - 1);
        });
    }
    return out;
}

Distributions inner_distribution_ordinary(const SchemeSpec& spec, long d)
{
    if (!ordinary_family(spec)) throw std::invalid_argument("ordinary q-analog in the second ordering required");
    require_range(spec, d);
    if (spec.family == Family::PolarA2nMinus1 && d % 2 == 0)
        throw std::invalid_argument("use hermitian_polar_even_distributions");
    const long n = spec.n;
    const Rational& b = spec.b;
    const Rational& c = spec.c;
    const Rational q(spec.q);
    const Rational qcbn = q * cbn(spec);
    Distributions out = make_dists(n);
    out.inner.entries[0] = 1;
    out.dual.entries[0] = ordinary_code_size(spec, d);
    for (long i = 0; i <= n - 1; ++i)
        out.inner.entries[n - i] = inversion_sum(b, i, n - d, [&](long j) -> Rational {
            return gb(n, j, b) * (poch(qcbn, n - j, b) * poch(q, d - 1, b) /
                                      (poch(qcbn, d - 1, b) * poch(q, n - j, b)) -
                                  1);
        });
    for (long k = 0; k <= n - 1; ++k) {
        const long len = n - k;
        const Rational ck = multiplicity(spec, n - k) * power(-power(b, 1 - n) / q, len) *
                            poch(q * power(b, k), len, b) * poch(power(b, -n - k) / (q * c), len, b) /
                            (poch(power(b, -n) / c, len, b) * poch(power(b, 1 - n) / q, len, b));
        Rational acc = 0;
        for (long j = 0; j <= d - 2 - k; ++j)
            acc += sgn_pow(j) * power(b, choose2(n - k - j)) * poch(q * power(b, k), j, b) /
                   poch(q * c * power(b, 2 * k + 1), j, b) * gb(n - k, j, b) *
                   (1 - poch(q * power(b, k + j), d - k - j - 1, b) /
                            poch(q * c * power(b, n + k + j), d - k - j - 1, b));
        out.dual.entries[n - k] = ck * acc;
    }
    return out;
}

Distributions hermitian_forms_even_distributions(const SchemeSpec& spec, long d)
{
    if (spec.family != Family::HermitianForms) throw std::invalid_argument("Hermitian forms scheme required");
    require_range(spec, d);
    require_even(d);
    const long n = spec.n;
    const Rational& b = spec.b;
    const Rational q(spec.q);
    const Rational size_y = hermitian_forms_even_size(spec, d);
    const Rational gap = power(b, n - d + 1) - 1;
    Distributions out = make_dists(n);
    out.inner.entries[0] = 1;
    for (long i = 0; i <= n - 1; ++i)
        out.inner.entries[n - i] = inversion_sum(b, i, n - d, [&](long j) -> Rational {
            const Rational scaled = sgn_pow(j) * size_y / power(b, n * j);
            return gb(n, j, b) * (scaled - 1 - (power(b, j) - 1) / gap *
                                                   (scaled + sgn_pow(n + j) * power(b, n * (n - d + 1 - j))));
        });
    out.dual.entries[0] = size_y;
    out.dual.entries[1] = (power(b, n) - 1) / gap * (sgn_pow(n + 1) * power(q, n * (n - d + 1)) - size_y);
    const Rational shifted = size_y + sgn_pow(n) * power(q, n * (n - d + 1));
    for (long k = 0; k <= n - 2; ++k) {
        Rational acc = 0;
        for (long j = 0; j <= d - k - 3; ++j) {
            const long r = n - j - k;
            const Rational delta = sgn_pow(r) * size_y / power(b, n * r) -
                                   sgn_pow(r) * (power(b, r) - 1) / gap * shifted / power(b, n * r);
            acc += sgn_pow(n - k) * power(b, choose2(j) + n * r) * gb(n, k, b) * gb(n - k, j, b) * (1 - delta);
        }
        out.dual.entries[n - k] = acc;
    }
    return out;
}

Distributions hermitian_polar_even_distributions(const SchemeSpec& spec, long d)
{
    if (spec.family != Family::PolarA2nMinus1 || spec.ordering != Ordering::Second)
        throw std::invalid_argument("polar space 2A_{2n-1} in the second ordering required");
    require_range(spec, d);
    require_even(d);
    const long n = spec.n;
    const Rational& b = spec.b;
    const Rational q(spec.q);
    const Rational size_x(spec.num_vertices);
    const Rational eps = epsilon_nd(n, d, spec.q);
    const Rational size_y = hermitian_polar_even_size(spec, d);
    const Rational gap = power(b, n - d + 1) - 1;
    Distributions out = make_dists(n);
    out.inner.entries[0] = 1;
    for (long i = 0; i <= n - 1; ++i)
        out.inner.entries[n - i] = size_y / size_x * inversion_sum(b, i, n - d, [&](long j) -> Rational {
            const Rational bracket =
                1 - (1 - 1 / eps) * power(b, n - j - d + 1) * (power(b, n + d - 1) - 1) * (power(b, j) - 1) /
                        (gap * (power(b, 2 * n - j) - 1)) -
                poch(q * power(b, d - 1), n - j - d + 1, b) / poch(power(b, n + d), n - j - d + 1, b) / eps;
            return gb(n, j, b) * poch(power(b, n + 1), n - j, b) / poch(q, n - j, b) * bracket;
        });
    out.dual.entries[0] = size_y;
    out.dual.entries[1] = size_x * power(b, 1 - d) * poch(q, d - 1, b) / poch(power(b, n), d - 1, b) *
                          (power(b, n) - 1) / gap * (1 - eps);
    const Rational neg = -power(b, -n);
    for (long k = 0; k <= n - 2; ++k) {
        const long len = n - k;
        const Rational ck = multiplicity(spec, n - k) * power(b, choose2(len) - n * len) *
                            poch(q * power(b, k), len, b) / poch(neg, len, b);
        Rational acc = 0;
        for (long j = 0; j <= d - k - 3; ++j) {
            const long s = d - k - j - 1;
            const Rational lead = poch(q * power(b, k + j), s, b);
            const Rational delta = eps * lead / poch(power(b, n + k + j + 1), s, b) +
                                   (1 - eps) * power(b, k + j - d + 1) * (power(b, n - k - j) - 1) / gap * lead /
                                       poch(power(b, n + k + j), s, b);
            acc += power(b, choose2(j) - n * j) * poch(power(b, -n - 1 - k), len - j, b) / poch(neg, len - j, b) *
                   gb(len, j, b) * (1 - delta);
        }
        out.dual.entries[n - k] = ck * acc;
    }
    return out;
}

Matrix c_matrix(const SchemeSpec& spec)
{
    const long n = spec.n;
    Matrix out(n + 1, std::vector<Rational>(n + 1));
    for (long j = 0; j <= n; ++j)
        for (long i = 0; i <= n; ++i) out[j][i] = gb(n - i, j, spec.b);
    return out;
}

Matrix c_inverse(const SchemeSpec& spec)
{
    const long n = spec.n;
    Matrix out(n + 1, std::vector<Rational>(n + 1, 0));
    for (long i = 0; i <= n; ++i)
        for (long j = 0; j <= n; ++j) {
            const long e = i + j - n;
            if (e < 0) continue;
            out[i][j] = sgn_pow(e) * power(spec.b, choose2(e)) * gb(j, n - i, spec.b);
        }
    return out;
}

Matrix qc_inverse_product(const SchemeSpec& spec)
{
    if (!ordinary_family(spec)) throw std::invalid_argument("ordinary q-analog in the second ordering required");
    const long n = spec.n;
    const Rational& b = spec.b;
    const Rational& c = spec.c;
    const Rational q(spec.q);
    const Rational a = 1 / (q * c * power(b, 2 * n));
    Matrix out(n + 1, std::vector<Rational>(n + 1));
    for (long k = 0; k <= n; ++k) {
        const Rational row = multiplicity(spec, k) * power(a, k) * power(b, k * k) *
                             poch(q * power(b, n - k), k, b) / poch(power(b, -n) / c, k, b);
        for (long j = 0; j <= n; ++j)
            out[k][j] = row * power(b, choose2(j)) * power(-b * c, j) * poch(power(b, -k), j, b) *
                        poch(a * power(b, k), j, b) /
                        (poch(power(b, -n), j, b) * poch(power(b, 1 - n) / q, j, b));
    }
    return out;
}

DistVector piret_primal_hamming(long n, long q, long d)
{
    if (d < 1 || d > n) throw std::invalid_argument("d must lie in 1..n");
    if (q < std::max(d, n - d + 2)) throw std::invalid_argument("Piret condition fails: q < max{d, n-d+2}");
    DistVector out;
    out.kind = DistKind::PrimalSolution;
    out.entries.assign(n + 1, 0);
    out.entries[0] = 1;
    const Rational qq(q);
    for (long i = d; i <= n; ++i) {
        Rational acc = 0;
        for (long j = 0; j <= i - d; ++j)
            acc += sgn_pow(j) * Rational(binomial(i, j)) * (power(qq, i - d + 1 - j) - 1);
        out.entries[i] = Rational(binomial(n, i)) * acc;
    }
    return out;
}

DistVector johnson_fano_fixture()
{
    // lines of the Fano plane pairwise meet in one point: distance 3 - 1 = 2
    return DistVector{{1, 0, 6, 0}, DistKind::Inner};
}

CertificatePair verify_strong_duality(const SchemeSpec& spec, long d)
{
    require_range(spec, d);
    CertificatePair pair;
    pair.scheme = spec;
    pair.d = d;
    const long n = spec.n;

    DualCertificate dual;
    std::optional<Distributions> dists;
    switch (spec.family) {
    case Family::Bilinear:
    case Family::Alternating:
        dual = dual_singleton_affine(spec, d);
        dists = inner_distribution_affine(spec, d);
        break;
    case Family::HermitianForms:
        if (d % 2 == 0) {
            dual = dual_hermitian_forms_even(spec, d);
            dists = hermitian_forms_even_distributions(spec, d);
        } else {
            dual = dual_singleton_affine(spec, d);
            dists = inner_distribution_affine(spec, d);
        }
        break;
    case Family::QJohnson:
    case Family::HalfD:
        dual = dual_singleton_ordinary(spec, d);
        dists = inner_distribution_ordinary(spec, d);
        break;
    case Family::PolarA2nMinus1:
        if (d % 2 == 0) {
            dual = dual_hermitian_polar_even(spec, d);
            dists = hermitian_polar_even_distributions(spec, d);
        } else {
            dual = dual_singleton_ordinary(spec, d);
            dists = inner_distribution_ordinary(spec, d);
        }
        break;
    case Family::Hamming:
        dual = dual_singleton_classical(spec, d);
        dists = Distributions{piret_primal_hamming(n, spec.q, d), {}};
        break;
    case Family::Johnson:
        if (!(spec.n == 3 && spec.m && *spec.m == 4 && d == 2))
            throw std::invalid_argument("Johnson primal certificates exist only as the J(3,4) fixture");
        dual = dual_singleton_classical(spec, d);
        dists = Distributions{johnson_fano_fixture(), {}};
        break;
    default:
        throw std::invalid_argument("no closed-form certificates for " + scheme_id(spec.family));
    }

    pair.primal = dists->inner;
    pair.primal.kind = DistKind::PrimalSolution;
    pair.dual = dual.y;
    pair.primal_objective = sum(pair.primal.entries);
    pair.dual_objective = 0;
    for (long k = 0; k <= n; ++k) pair.dual_objective += multiplicity(spec, k) * pair.dual.entries[k];

    auto fail = [&](std::string why) {
        if (!pair.violated) pair.violated = std::move(why);
    };
    if (!dual.feasible) fail("dual certificate: " + dual.violation);
    if (!dual.closed_form_match) fail("dual certificate: coefficients differ from the closed form");
    const auto& x = pair.primal.entries;
    if (x[0] != 1) fail("primal x_0 != 1");
    for (long i = 1; i < d; ++i)
        if (x[i] != 0) fail("primal x_" + std::to_string(i) + " != 0");
    for (long i = d; i <= n; ++i)
        if (x[i] < 0) fail("primal x_" + std::to_string(i) + " < 0");
    const std::vector<Rational> transform = dual_distribution(spec, x);
    for (long k = 0; k <= n; ++k)
        if (transform[k] < 0) fail("primal dual-transform row " + std::to_string(k) + " < 0");
    if (!dists->dual.entries.empty() && transform != dists->dual.entries)
        fail("closed-form dual distribution differs from the transform of the inner distribution");
    pair.duality_gap_zero = !pair.violated && pair.primal_objective == pair.dual_objective;
    if (!pair.violated && !pair.duality_gap_zero) fail("objectives differ");
    return pair;
}

std::string kind_name(DistKind kind)
{
    switch (kind) {
    case DistKind::Inner: return "inner";
    case DistKind::Dual: return "dual";
    case DistKind::PrimalSolution: return "primal_solution";
    case DistKind::DualSolution: return "dual_solution";
    }
    return "unknown";
}

nlohmann::json to_json(const DistVector& v)
{
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& x : v.entries) entries.push_back(to_string(x));
    return {{"kind", kind_name(v.kind)}, {"entries", entries}};
}

nlohmann::json to_json(const CertificatePair& pair)
{
    nlohmann::json out = {
        {"scheme", scheme_id(pair.scheme.family)},
        {"q", pair.scheme.q},
        {"n", pair.scheme.n},
        {"d", pair.d},
        {"primal", to_json(pair.primal)},
        {"dual", to_json(pair.dual)},
        {"primal_objective", to_string(pair.primal_objective)},
        {"dual_objective", to_string(pair.dual_objective)},
        {"duality_gap_zero", pair.duality_gap_zero},
    };
    if (pair.scheme.m) out["m"] = *pair.scheme.m;
    out["violated"] = pair.violated ? nlohmann::json(*pair.violated) : nlohmann::json(nullptr);
    return out;
}

}  // namespace delsarte
