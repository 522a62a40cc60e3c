#pragma once

#include "delsarte/schemes.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace delsarte {

enum class Verdict { Match, Mismatch, Unverified };

struct BoundReport {
    std::string scheme;
    long q = 0;
    long n = 0;
    std::optional<long> m;
    std::string param_name = "d";  // "d" or "t"
    long param = 0;
    Rational formula_value = 0;
    std::optional<Rational> solver_value;
    std::optional<Rational> certificate_value;
    Verdict verdict = Verdict::Unverified;
    std::string note;
    double millis = 0;
};

// Closed-form LP optimum. Throws std::invalid_argument when the family/parity is not
// covered or a side condition fails. Johnson values carry an asymptotic hypothesis,
// see formula_is_certifiable.
Rational lp_optimum_formula(const SchemeSpec& spec, long d);
// The product forms as printed in the main theorem; equal to lp_optimum_formula.
Rational lp_optimum_product_form(const SchemeSpec& spec, long d);
bool formula_is_certifiable(const SchemeSpec& spec, long d);

// B_n, C_n (odd d) and D_n (even d).
Rational lp_optimum_bcd(Family family, long q, long n, long d);
// The same optimum obtained by solving the bipartite-half LP.
Rational lp_optimum_bcd_reduced(Family family, long q, long n, long d);
// The same optimum obtained by solving the polar-space LP directly
// (D_n additionally forbids odd distances).
Rational lp_optimum_bcd_direct(Family family, long q, long n, long d);

// t-intersecting bounds. For Alternating and HalfD the parameter t refers to the
// matrix size / rank m, otherwise to n.
Rational ekr_bound(const SchemeSpec& spec, long t);
// |X| / LP(complement), computed from the LP optima rather than the printed forms.
Rational ekr_bound_via_lp(const SchemeSpec& spec, long t, bool use_solver = false);
bool ekr_admissible(const SchemeSpec& spec, long t);

// Simplified polar-space bounds; family in {PolarA2nMinus1, PolarB, PolarC, PolarD}.
Rational ekr_simple_bound(Family family, long q, long n, long t);
bool ekr_simple_admissible(Family family, long n, long t);

BoundReport check_conjecture_dn(long q, long n, long d);

// Formula, solver and certificate for one (spec, d).
BoundReport bound_report(const SchemeSpec& spec, long d, bool with_certificate = true);

// Printed form, |X|/LP through the solver (solver column) and through the
// closed-form optimum (certificate column).
BoundReport ekr_report(const SchemeSpec& spec, long t);

std::string verdict_name(Verdict v);
// millis only appears with timing = true so that default output is reproducible
nlohmann::json to_json(const BoundReport& r, bool decimal = false, bool timing = false);
std::string csv_header(bool decimal = false, bool timing = false);
std::string to_csv(const BoundReport& r, bool decimal = false, bool timing = false);
std::string to_text(const BoundReport& r, bool decimal = false, bool timing = false);

}  // namespace delsarte
