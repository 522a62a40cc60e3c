#pragma once

#include "delsarte/exactq.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace delsarte {

enum class Family {
    Hamming,
    Johnson,
    QJohnson,
    Bilinear,
    Alternating,
    HermitianForms,
    PolarA2nMinus1,
    PolarA2n,
    PolarB,
    PolarC,
    PolarD,
    PolarD2Elliptic,
    HalfD,
};

enum class Ordering { Standard, Second };

using Matrix = std::vector<std::vector<Rational>>;

struct SchemeTables {
    std::vector<Rational> valency;
    std::vector<Rational> multiplicity;
    Matrix pnum;  // pnum[i][k] = P_i(k)
    Matrix qnum;  // qnum[k][i] = Q_k(i)
};

struct SchemeSpec {
    Family family = Family::Hamming;
    long q = 2;
    long n = 1;
    std::optional<long> m;
    Rational b;
    Rational c;
    Integer num_vertices;
    std::optional<long> polar_sqrt_p;
    std::optional<long> polar_two_e;
    Ordering ordering = Ordering::Standard;

    const SchemeTables& tables() const;

    struct Cache {
        std::once_flag once;
        SchemeTables tables;
    };
    std::shared_ptr<Cache> cache = std::make_shared<Cache>();
};

std::string scheme_id(Family f);
Family parse_family(const std::string& id);
bool is_affine(Family f);
bool is_polar(Family f);
// QJohnson, PolarA2nMinus1 under the second ordering, HalfD
bool is_ordinary_unified(const SchemeSpec& spec);

// For Alternating and HalfD the size parameter is m and n = floor(m/2); n may then be omitted.
SchemeSpec make_scheme(Family family, long q, std::optional<long> n, std::optional<long> m = {},
                       std::optional<Ordering> ordering = {});

std::string describe(const SchemeSpec& spec);

Rational valency(const SchemeSpec& spec, long i);
Rational multiplicity(const SchemeSpec& spec, long k);
Rational p_number(const SchemeSpec& spec, long i, long k);
Rational q_number(const SchemeSpec& spec, long k, long i);

std::vector<long> second_ordering_permutation(long n);

// Point z_i at which Q_k(i) = g_k(z_i) for the Q-polynomial ordering in use.
Rational z_point(const SchemeSpec& spec, long i);

// Raw formulas, exposed for cross-checks.
Rational polar_p(const SchemeSpec& spec);
Rational polar_pow(const SchemeSpec& spec, long twice_exponent);  // p^{h/2}
Rational polar_standard_valency(const SchemeSpec& spec, long i);
Rational polar_standard_multiplicity(const SchemeSpec& spec, long k);
Rational polar_standard_p(const SchemeSpec& spec, long i, long k);
Rational polar_standard_q(const SchemeSpec& spec, long k, long i);
Rational unified_series(const SchemeSpec& spec, long i, long k);  // the 3phi2 factor
Rational affine_p_hypergeometric(const SchemeSpec& spec, long i, long k);
Rational qjohnson_p_hypergeometric(const SchemeSpec& spec, long i, long k);
Rational vertex_count_closed_form(const SchemeSpec& spec);
// mu'_k of the bipartite half read off the D_m table (middle index halved when m is even).
Rational halfd_multiplicity_from_dm(const SchemeSpec& spec, long k);

}  // namespace delsarte
