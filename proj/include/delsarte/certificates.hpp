#pragma once

#include "delsarte/delsartelp.hpp"
#include "delsarte/schemes.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace delsarte {

enum class DistKind { Inner, Dual, PrimalSolution, DualSolution };

struct DistVector {
    std::vector<Rational> entries;
    DistKind kind = DistKind::Inner;
};

// A normalized dual certificate together with the coefficients F_k predicted
// by the closed form. closed_form_match compares them after scaling both by F_0.
struct DualCertificate {
    DistVector y;
    Rational objective = 0;
    std::vector<Rational> raw_coefficients;     // F_k computed from F(z_i) through P
    std::vector<Rational> closed_coefficients;  // F_k from the closed form
    bool closed_form_match = false;
    bool feasible = false;
    std::string violation;
};

struct Distributions {
    DistVector inner;
    DistVector dual;
};

struct CertificatePair {
    SchemeSpec scheme;
    long d = 0;
    DistVector primal;
    DistVector dual;
    Rational primal_objective = 0;
    Rational dual_objective = 0;
    bool duality_gap_zero = false;
    std::optional<std::string> violated;
};

DualCertificate dual_singleton_affine(const SchemeSpec& spec, long d);
DualCertificate dual_singleton_ordinary(const SchemeSpec& spec, long d);
DualCertificate dual_hermitian_forms_even(const SchemeSpec& spec, long d);
DualCertificate dual_hermitian_polar_even(const SchemeSpec& spec, long d);
// Hamming and Johnson: c * prod_{i=d}^n (z - i)
DualCertificate dual_singleton_classical(const SchemeSpec& spec, long d);

Distributions inner_distribution_affine(const SchemeSpec& spec, long d);
Distributions inner_distribution_ordinary(const SchemeSpec& spec, long d);
Distributions hermitian_forms_even_distributions(const SchemeSpec& spec, long d);
Distributions hermitian_polar_even_distributions(const SchemeSpec& spec, long d);

// (QC^{-1})_{k,j} from the closed form; C_{j,i} = [n-i, j]_b.
Matrix qc_inverse_product(const SchemeSpec& spec);
Matrix c_matrix(const SchemeSpec& spec);
Matrix c_inverse(const SchemeSpec& spec);

Rational epsilon_nd(long n, long d, long q);

DistVector piret_primal_hamming(long n, long q, long d);

// Inner distribution of the Fano plane viewed as a 2-code in J(3,4). Regression fixture.
DistVector johnson_fano_fixture();

// Size of the putative optimal code; the rewritten Pochhammer forms.
Rational affine_code_size(const SchemeSpec& spec, long d);
Rational ordinary_code_size(const SchemeSpec& spec, long d);
Rational hermitian_forms_even_size(const SchemeSpec& spec, long d);
Rational hermitian_polar_even_size(const SchemeSpec& spec, long d);

CertificatePair verify_strong_duality(const SchemeSpec& spec, long d);

std::string kind_name(DistKind kind);
nlohmann::json to_json(const DistVector& v);
nlohmann::json to_json(const CertificatePair& pair);

}  // namespace delsarte
