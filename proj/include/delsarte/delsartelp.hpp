#pragma once

#include "delsarte/schemes.hpp"

#include "json.hpp"

#include <optional>
#include <set>
#include <vector>

namespace delsarte {

enum class Relation { LessEq, GreaterEq, Equal };
enum class Sense { Maximize, Minimize };

struct LinearRow {
    std::vector<Rational> coeffs;
    Relation relation = Relation::GreaterEq;
    Rational rhs = 0;
};

struct LinearProgram {
    std::size_t num_vars = 0;
    std::vector<Rational> objective;
    Sense sense = Sense::Maximize;
    std::vector<LinearRow> rows;
    std::set<std::size_t> nonneg_vars;
    // variables pinned to a value; substituted out before the simplex runs
    std::vector<std::optional<Rational>> fixed;
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPSolution {
    LPStatus status = LPStatus::Infeasible;
    Rational objective_value = 0;
    std::vector<Rational> variable_values;
    std::set<std::size_t> active_constraints;
};

LinearProgram build_primal(const SchemeSpec& spec, const std::set<long>& distances);
LinearProgram build_dual(const SchemeSpec& spec, const std::set<long>& distances);

LPSolution solve_exact(const LinearProgram& lp);

// {d, ..., n}
std::set<long> distance_set_from(long d, long n);

Rational lp_opt(const SchemeSpec& spec, long d);
Rational lp_opt_set(const SchemeSpec& spec, const std::set<long>& distances);
Rational lp_dual_opt_set(const SchemeSpec& spec, const std::set<long>& distances);

bool satisfies(const LinearProgram& lp, const std::vector<Rational>& x);

struct PolynomialDual {
    bool feasible = false;
    std::vector<Rational> coefficients;  // F_k / F_0
    Rational objective = 0;
    std::string violation;
};

// F given by its values F(z_i), i = 0..n.
PolynomialDual dual_bound_from_values(const SchemeSpec& spec, const std::vector<Rational>& values,
                                      const std::set<long>& distances);
// F given by coefficients in z (constant term first).
PolynomialDual dual_bound_from_polynomial(const SchemeSpec& spec,
                                          const std::vector<Rational>& coeffs,
                                          const std::set<long>& distances);
// c * prod_{i=d}^{n} (z - z_i)
std::vector<Rational> singleton_polynomial(const SchemeSpec& spec, long d);

// sum_k Q_k(i) A_i for every k
std::vector<Rational> dual_distribution(const SchemeSpec& spec, const std::vector<Rational>& inner);

nlohmann::json to_json(const LinearProgram& lp);
nlohmann::json to_json(const LPSolution& sol);

}  // namespace delsarte
