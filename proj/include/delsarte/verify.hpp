#pragma once

#include "delsarte/schemes.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace delsarte {

struct Check {
    std::string suite;
    std::string instance;
    bool pass = false;
    bool report_only = false;  // outcome is printed but never counts as a failure
    std::string detail;
};

struct GridOptions {
    std::optional<long> q;  // restrict every grid to this q
    std::optional<long> n;  // restrict every grid to this n
    bool parallel = true;
};

std::vector<std::string> verify_suite_names();
bool is_verify_suite(const std::string& name);
// Throws std::invalid_argument for an unknown suite name.
std::vector<Check> run_verify_suite(const std::string& name, const GridOptions& opts = {});

// All families, q in {2,3}, n <= 4, m in n..n+2 (Alternating and half-D: m in {2n, 2n+1}).
std::vector<SchemeSpec> scheme_grid(const GridOptions& opts = {});

// Single-instance checks, exposed for tests and the benchmark.
std::vector<Check> orthogonality_checks(const SchemeSpec& spec);
std::vector<Check> pq_identity_checks(const SchemeSpec& spec);
std::vector<Check> qc_inverse_checks(const SchemeSpec& spec);
// formula = solver = dual certificate objective = inner-distribution total
Check four_way_check(const std::string& suite, const SchemeSpec& spec, long d);

struct SuiteSummary {
    long passed = 0;
    long failed = 0;
    long reported = 0;
};
SuiteSummary summarize(const std::vector<Check>& checks);

nlohmann::json to_json(const Check& c);

}  // namespace delsarte
