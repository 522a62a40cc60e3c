// One PASS/FAIL line per acceptance criterion, built from the verification suites.
#include "delsarte/verify.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

using namespace delsarte;

namespace {

struct Criterion {
    int number;
    std::string title;
    std::vector<std::string> suites;
};

}  // namespace

int main(int argc, char** argv)
{
    const bool verbose = argc > 1 && std::string(argv[1]) == "-v";
    const std::vector<Criterion> criteria = {
        {1, "affine LP optima, four-way equality", {"affine-optima"}},
        {2, "even-d Hermitian forms", {"hermitian-even"}},
        {3, "ordinary q-analogs", {"ordinary-optima"}},
        {4, "polar spaces B, C, D", {"polar-reduction"}},
        {5, "Hamming under the Piret condition", {"classical"}},
        {6, "identity suite", {"orthogonality", "pq-identities", "qc-inverse"}},
        {7, "nonnegativity of distributions", {"nonnegativity"}},
        {8, "t-intersecting bounds", {"ekr"}},
        {9, "oracle agreement", {"oracle"}},
        {10, "inequality checks", {"epsilon-bounds", "product-bounds", "size-sandwich"}},
    };

    int failed_criteria = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        SuiteSummary total;
        std::vector<Check> failures;
        for (const auto& suite : c.suites) {
            const auto checks = run_verify_suite(suite);
            const auto s = summarize(checks);
            total.passed += s.passed;
            total.failed += s.failed;
            total.reported += s.reported;
            for (const auto& ch : checks)
                if (!ch.pass && !ch.report_only) failures.push_back(ch);
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool pass = total.failed == 0 && total.passed > 0;
        if (!pass) ++failed_criteria;
        std::printf("criterion %d: %s  %s (%ld checks, %ld failed, %.2fs)\n", c.number, pass ? "PASS" : "FAIL",
                    c.title.c_str(), total.passed + total.failed, total.failed, secs);
        for (std::size_t i = 0; i < failures.size() && (verbose || i < 5); ++i)
            std::printf("    FAIL %s %s: %s\n", failures[i].suite.c_str(), failures[i].instance.c_str(),
                        failures[i].detail.c_str());
    }

    // Reported, never asserted.
    for (const auto& ch : run_verify_suite("conjecture-dn"))
        std::printf("note: D_n conjecture %s: %s\n", ch.instance.c_str(), ch.detail.c_str());
    for (const auto& ch : run_verify_suite("classical"))
        if (ch.instance.find("johnson") != std::string::npos)
            std::printf("note: Johnson %s: %s (fixture only, asymptotic hypothesis not checked)\n",
                        ch.instance.c_str(), ch.pass ? "pass" : "fail");

    std::printf("%s: %d of %zu criteria failed\n", failed_criteria ? "FAIL" : "PASS", failed_criteria,
                criteria.size());
    return failed_criteria ? 1 : 0;
}
