#include "delsarte/delsartelp.hpp"

#include <algorithm>

namespace delsarte {

namespace {

struct Tableau {
    std::vector<std::vector<Rational>> rows;  // last entry is the right-hand side
    std::vector<std::size_t> basis;
    std::size_t cols = 0;
};

void pivot(Tableau& t, std::size_t r, std::size_t col)
{
    auto& prow = t.rows[r];
    const Rational piv = prow[col];
    for (auto& v : prow) v /= piv;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        if (i == r) continue;
        const Rational f = t.rows[i][col];
        if (f == 0) continue;
        for (std::size_t j = 0; j <= t.cols; ++j)
            if (prow[j] != 0) t.rows[i][j] -= f * prow[j];
    }
    t.basis[r] = col;
}

enum class PhaseResult { Optimal, Unbounded };

// Maximizes cost . x over the tableau; Bland's rule on both choices.
PhaseResult run_phase(Tableau& t, const std::vector<Rational>& cost, const std::vector<bool>& allowed)
{
    for (;;) {
        std::size_t entering = t.cols;
        for (std::size_t j = 0; j < t.cols && entering == t.cols; ++j) {
            if (!allowed[j]) continue;
            Rational reduced = cost[j];
            for (std::size_t r = 0; r < t.rows.size(); ++r)
                if (t.rows[r][j] != 0) reduced -= cost[t.basis[r]] * t.rows[r][j];
            if (reduced > 0) entering = j;
        }
        if (entering == t.cols) return PhaseResult::Optimal;

        std::size_t leaving = t.rows.size();
        Rational best_ratio;
        for (std::size_t r = 0; r < t.rows.size(); ++r) {
            const Rational& a = t.rows[r][entering];
            if (a <= 0) continue;
            Rational ratio = t.rows[r][t.cols] / a;
            if (leaving == t.rows.size() || ratio < best_ratio ||
                (ratio == best_ratio && t.basis[r] < t.basis[leaving])) {
                leaving = r;
                best_ratio = ratio;
            }
        }
        if (leaving == t.rows.size()) return PhaseResult::Unbounded;
        pivot(t, leaving, entering);
    }
}

Rational row_value(const LinearRow& row, const std::vector<Rational>& x)
{
    Rational s = 0;
    for (std::size_t j = 0; j < row.coeffs.size(); ++j)
        if (row.coeffs[j] != 0) s += row.coeffs[j] * x[j];
    return s;
}

}  // namespace

std::set<long> distance_set_from(long d, long n)
{
    std::set<long> out;
    for (long i = std::max(d, 1L); i <= n; ++i) out.insert(i);
    return out;
}

LinearProgram build_primal(const SchemeSpec& spec, const std::set<long>& distances)
{
    const long n = spec.n;
    LinearProgram lp;
    lp.num_vars = n + 1;
    lp.objective.assign(n + 1, 1);
    lp.sense = Sense::Maximize;
    lp.fixed.assign(n + 1, std::nullopt);
    lp.fixed[0] = Rational(1);
    for (long i = 0; i <= n; ++i) {
        lp.nonneg_vars.insert(i);
        if (i > 0 && !distances.count(i)) lp.fixed[i] = Rational(0);
    }
    for (long k = 1; k <= n; ++k) {
        LinearRow row;
        row.coeffs.resize(n + 1);
        for (long i = 0; i <= n; ++i) row.coeffs[i] = q_number(spec, k, i);
        row.relation = Relation::GreaterEq;
        row.rhs = 0;
        lp.rows.push_back(std::move(row));
    }
    return lp;
}

LinearProgram build_dual(const SchemeSpec& spec, const std::set<long>& distances)
{
    const long n = spec.n;
    LinearProgram lp;
    lp.num_vars = n + 1;
    lp.objective.resize(n + 1);
    for (long k = 0; k <= n; ++k) lp.objective[k] = multiplicity(spec, k);
    lp.sense = Sense::Minimize;
    lp.fixed.assign(n + 1, std::nullopt);
    lp.fixed[0] = Rational(1);
    for (long k = 1; k <= n; ++k) lp.nonneg_vars.insert(k);
    for (long i : distances) {
        LinearRow row;
        row.coeffs.resize(n + 1);
        for (long k = 0; k <= n; ++k) row.coeffs[k] = q_number(spec, k, i);
        row.relation = Relation::LessEq;
        row.rhs = 0;
        lp.rows.push_back(std::move(row));
    }
    return lp;
}

LPSolution solve_exact(const LinearProgram& lp)
{
    const std::size_t nv = lp.num_vars;
    std::vector<std::optional<Rational>> fixed = lp.fixed;
    fixed.resize(nv);

    // column layout: for each free original variable, a plus column and possibly a minus column
    std::vector<long> plus_col(nv, -1), minus_col(nv, -1);
    std::size_t ncols = 0;
    for (std::size_t j = 0; j < nv; ++j) {
        if (fixed[j]) continue;
        plus_col[j] = static_cast<long>(ncols++);
        if (!lp.nonneg_vars.count(j)) minus_col[j] = static_cast<long>(ncols++);
    }
    const std::size_t structural = ncols;

    struct StdRow {
        std::vector<Rational> coeffs;
        Relation relation;
        Rational rhs;
    };
    std::vector<StdRow> std_rows;
    for (const auto& row : lp.rows) {
        StdRow s{std::vector<Rational>(structural), row.relation, row.rhs};
        for (std::size_t j = 0; j < nv; ++j) {
            const Rational& a = row.coeffs[j];
            if (a == 0) continue;
            if (fixed[j]) {
                s.rhs -= a * *fixed[j];
                continue;
            }
            s.coeffs[plus_col[j]] += a;
            if (minus_col[j] >= 0) s.coeffs[minus_col[j]] -= a;
        }
        if (s.rhs < 0) {
            for (auto& v : s.coeffs) v = -v;
            s.rhs = -s.rhs;
            if (s.relation == Relation::LessEq) s.relation = Relation::GreaterEq;
            else if (s.relation == Relation::GreaterEq) s.relation = Relation::LessEq;
        }
        std_rows.push_back(std::move(s));
    }

    // slack/surplus then artificial columns
    std::size_t slack_count = 0, art_count = 0;
    for (const auto& s : std_rows) {
        if (s.relation != Relation::Equal) ++slack_count;
        if (s.relation != Relation::LessEq) ++art_count;
    }
    const std::size_t first_art = structural + slack_count;
    Tableau t;
    t.cols = first_art + art_count;
    t.rows.assign(std_rows.size(), std::vector<Rational>(t.cols + 1));
    t.basis.assign(std_rows.size(), 0);
    std::size_t next_slack = structural, next_art = first_art;
    for (std::size_t r = 0; r < std_rows.size(); ++r) {
        const auto& s = std_rows[r];
        for (std::size_t j = 0; j < structural; ++j) t.rows[r][j] = s.coeffs[j];
        t.rows[r][t.cols] = s.rhs;
        if (s.relation == Relation::LessEq) {
            t.rows[r][next_slack] = 1;
            t.basis[r] = next_slack++;
        } else {
            if (s.relation == Relation::GreaterEq) t.rows[r][next_slack++] = -1;
            t.rows[r][next_art] = 1;
            t.basis[r] = next_art++;
        }
    }

    LPSolution sol;
    std::vector<bool> allowed(t.cols, true);
    if (art_count > 0) {
        std::vector<Rational> phase1(t.cols, 0);
        for (std::size_t j = first_art; j < t.cols; ++j) phase1[j] = -1;
        run_phase(t, phase1, allowed);
        Rational infeas = 0;
        for (std::size_t r = 0; r < t.rows.size(); ++r)
            if (t.basis[r] >= first_art) infeas += t.rows[r][t.cols];
        if (infeas != 0) {
            sol.status = LPStatus::Infeasible;
            return sol;
        }
        // drive zero-level artificials out of the basis, dropping redundant rows
        for (std::size_t r = 0; r < t.rows.size();) {
            if (t.basis[r] < first_art) {
                ++r;
                continue;
            }
            std::size_t col = first_art;
            for (std::size_t j = 0; j < first_art; ++j)
                if (t.rows[r][j] != 0) {
                    col = j;
                    break;
                }
            if (col < first_art) {
                pivot(t, r, col);
                ++r;
            } else {
                t.rows.erase(t.rows.begin() + static_cast<long>(r));
                t.basis.erase(t.basis.begin() + static_cast<long>(r));
            }
        }
        for (std::size_t j = first_art; j < t.cols; ++j) allowed[j] = false;
    }

    std::vector<Rational> cost(t.cols, 0);
    const bool minimize = lp.sense == Sense::Minimize;
    for (std::size_t j = 0; j < nv; ++j) {
        if (fixed[j]) continue;
        Rational c = minimize ? Rational(-lp.objective[j]) : lp.objective[j];
        cost[plus_col[j]] = c;
        if (minus_col[j] >= 0) cost[minus_col[j]] = -c;
    }
    if (run_phase(t, cost, allowed) == PhaseResult::Unbounded) {
        sol.status = LPStatus::Unbounded;
        return sol;
    }

    std::vector<Rational> colval(t.cols, 0);
    for (std::size_t r = 0; r < t.rows.size(); ++r) colval[t.basis[r]] = t.rows[r][t.cols];
    sol.variable_values.assign(nv, 0);
    for (std::size_t j = 0; j < nv; ++j) {
        if (fixed[j]) {
            sol.variable_values[j] = *fixed[j];
            continue;
        }
        Rational v = colval[plus_col[j]];
        if (minus_col[j] >= 0) v -= colval[minus_col[j]];
        sol.variable_values[j] = v;
    }
    sol.status = LPStatus::Optimal;
    sol.objective_value = 0;
    for (std::size_t j = 0; j < nv; ++j) sol.objective_value += lp.objective[j] * sol.variable_values[j];
    for (std::size_t r = 0; r < lp.rows.size(); ++r)
        if (row_value(lp.rows[r], sol.variable_values) == lp.rows[r].rhs) sol.active_constraints.insert(r);
    return sol;
}

bool satisfies(const LinearProgram& lp, const std::vector<Rational>& x)
{
    if (x.size() != lp.num_vars) return false;
    for (std::size_t j = 0; j < lp.num_vars; ++j) {
        if (j < lp.fixed.size() && lp.fixed[j] && x[j] != *lp.fixed[j]) return false;
        if (lp.nonneg_vars.count(j) && x[j] < 0) return false;
    }
    for (const auto& row : lp.rows) {
        Rational v = row_value(row, x);
        switch (row.relation) {
        case Relation::LessEq: if (v > row.rhs) return false; break;
        case Relation::GreaterEq: if (v < row.rhs) return false; break;
        case Relation::Equal: if (v != row.rhs) return false; break;
        }
    }
    return true;
}

Rational lp_opt_set(const SchemeSpec& spec, const std::set<long>& distances)
{
    LPSolution sol = solve_exact(build_primal(spec, distances));
    if (sol.status != LPStatus::Optimal) throw MathError("Delsarte primal not optimal");
    return sol.objective_value;
}

Rational lp_dual_opt_set(const SchemeSpec& spec, const std::set<long>& distances)
{
    LPSolution sol = solve_exact(build_dual(spec, distances));
    if (sol.status != LPStatus::Optimal) throw MathError("Delsarte dual not optimal");
    return sol.objective_value;
}

Rational lp_opt(const SchemeSpec& spec, long d)
{
    if (d < 1 || d > spec.n) throw std::invalid_argument("d must lie in 1..n");
    return lp_opt_set(spec, distance_set_from(d, spec.n));
}

PolynomialDual dual_bound_from_values(const SchemeSpec& spec, const std::vector<Rational>& values,
                                      const std::set<long>& distances)
{
    const long n = spec.n;
    const Rational size(spec.num_vertices);
    std::vector<Rational> coef(n + 1, 0);
    for (long k = 0; k <= n; ++k) {
        for (long i = 0; i <= n; ++i) coef[k] += values[i] * p_number(spec, i, k);
        coef[k] /= size;
    }
    if (coef[0] == 0) throw MathError("degenerate certificate");
    PolynomialDual out;
    const Rational f0 = coef[0];
    for (auto& v : coef) v /= f0;
    out.coefficients = coef;
    out.objective = 0;
    for (long k = 0; k <= n; ++k) out.objective += multiplicity(spec, k) * coef[k];
    out.feasible = true;
    for (long k = 1; k <= n && out.feasible; ++k)
        if (coef[k] < 0) {
            out.feasible = false;
            out.violation = "y_" + std::to_string(k) + " < 0";
        }
    for (long i : distances) {
        if (!out.feasible) break;
        Rational s = 0;
        for (long k = 0; k <= n; ++k) s += q_number(spec, k, i) * coef[k];
        if (s > 0) {
            out.feasible = false;
            out.violation = "dual row " + std::to_string(i) + " positive";
        }
    }
    return out;
}

PolynomialDual dual_bound_from_polynomial(const SchemeSpec& spec, const std::vector<Rational>& coeffs,
                                          const std::set<long>& distances)
{
    std::vector<Rational> values(spec.n + 1);
    for (long i = 0; i <= spec.n; ++i) {
        const Rational z = z_point(spec, i);
        Rational acc = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
        values[i] = acc;
    }
    return dual_bound_from_values(spec, values, distances);
}

std::vector<Rational> singleton_polynomial(const SchemeSpec& spec, long d)
{
    std::vector<Rational> poly = {1};
    for (long i = d; i <= spec.n; ++i) {
        const Rational z = z_point(spec, i);
        std::vector<Rational> next(poly.size() + 1, 0);
        for (std::size_t j = 0; j < poly.size(); ++j) {
            next[j + 1] += poly[j];
            next[j] -= z * poly[j];
        }
        poly = std::move(next);
    }
    return poly;
}

std::vector<Rational> dual_distribution(const SchemeSpec& spec, const std::vector<Rational>& inner)
{
    std::vector<Rational> out(spec.n + 1, 0);
    for (long k = 0; k <= spec.n; ++k)
        for (long i = 0; i <= spec.n; ++i) out[k] += q_number(spec, k, i) * inner[i];
    return out;
}

nlohmann::json to_json(const LinearProgram& lp)
{
    auto vec = [](const std::vector<Rational>& v) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& x : v) a.push_back(to_string(x));
        return a;
    };
    nlohmann::json j;
    j["num_vars"] = lp.num_vars;
    j["sense"] = lp.sense == Sense::Maximize ? "maximize" : "minimize";
    j["objective"] = vec(lp.objective);
    j["nonneg"] = std::vector<std::size_t>(lp.nonneg_vars.begin(), lp.nonneg_vars.end());
    nlohmann::json fixed = nlohmann::json::object();
    for (std::size_t i = 0; i < lp.fixed.size(); ++i)
        if (lp.fixed[i]) fixed["x" + std::to_string(i)] = to_string(*lp.fixed[i]);
    j["fixed"] = fixed;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : lp.rows) {
        const char* rel = r.relation == Relation::LessEq ? "<=" : r.relation == Relation::GreaterEq ? ">=" : "=";
        rows.push_back({{"coeffs", vec(r.coeffs)}, {"relation", rel}, {"rhs", to_string(r.rhs)}});
    }
    j["rows"] = rows;
    return j;
}

nlohmann::json to_json(const LPSolution& sol)
{
    nlohmann::json j;
    j["status"] = sol.status == LPStatus::Optimal ? "optimal"
                  : sol.status == LPStatus::Infeasible ? "infeasible" : "unbounded";
    if (sol.status == LPStatus::Optimal) {
        j["objective"] = to_string(sol.objective_value);
        nlohmann::json v = nlohmann::json::array();
        for (const auto& x : sol.variable_values) v.push_back(to_string(x));
        j["values"] = v;
        j["active"] = std::vector<std::size_t>(sol.active_constraints.begin(), sol.active_constraints.end());
    }
    return j;
}

}  // namespace delsarte
