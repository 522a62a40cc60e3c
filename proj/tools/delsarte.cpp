// delsarte: command-line front end for the LP bound library.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource cap.

#include "delsarte/bounds.hpp"
#include "delsarte/certificates.hpp"
#include "delsarte/delsartelp.hpp"
#include "delsarte/grid.hpp"
#include "delsarte/oracle.hpp"
#include "delsarte/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

using namespace delsarte;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kCap = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string schemes;
    std::string q, n, m, d, t;
    std::string format = "text";
    std::string out;
    long cap = kDefaultVertexCap;
    std::uint64_t clique_budget = CliqueOptions{}.node_budget;
    long trials = 200;
    std::string only;
    bool decimal = false;
    bool timing = false;
    bool serial = false;
};

// "3", "1..4", "2,3,5" and mixtures such as "1..3,5"
std::vector<long> parse_range(const std::string& text, const char* flag)
{
    std::vector<long> out;
    std::stringstream ss(text);
    std::string part;
    try {
        while (std::getline(ss, part, ',')) {
            const auto dots = part.find("..");
            if (dots == std::string::npos) {
                out.push_back(std::stol(part));
                continue;
            }
            const long lo = std::stol(part.substr(0, dots));
            const long hi = std::stol(part.substr(dots + 2));
            if (hi < lo || hi - lo > 1000) throw UsageError("bad range");
            for (long v = lo; v <= hi; ++v) out.push_back(v);
        }
    } catch (const std::exception&) {
        throw UsageError(std::string("cannot parse --") + flag + " '" + text + "'");
    }
    if (out.empty()) throw UsageError(std::string("empty --") + flag);
    return out;
}

std::vector<std::string> split(const std::string& text)
{
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ','))
        if (!part.empty()) out.push_back(part);
    return out;
}

bool uses_m_as_size(Family f) { return f == Family::Alternating || f == Family::HalfD; }
bool needs_m(Family f) { return f == Family::Bilinear || f == Family::QJohnson || f == Family::Johnson; }

// Expands scheme/q/n/m selectors into specs. Missing ranges fall back to the given defaults.
std::vector<SchemeSpec> expand_specs(const RunConfig& cfg, const std::string& default_schemes,
                                     const std::string& default_q, const std::string& default_n, bool default_m)
{
    const std::string scheme_text = cfg.schemes.empty() ? default_schemes : cfg.schemes;
    if (scheme_text.empty()) throw UsageError("--scheme is required");
    const auto qs = parse_range(cfg.q.empty() ? default_q : cfg.q, "q");
    std::vector<SchemeSpec> specs;
    for (const auto& id : split(scheme_text)) {
        Family family;
        try {
            family = parse_family(id);
        } catch (const std::exception& e) {
            throw UsageError(e.what());
        }
        const std::string n_text = cfg.n.empty() ? default_n : cfg.n;
        for (const long q : family == Family::Johnson ? std::vector<long>{2} : qs) {
            try {
                if (uses_m_as_size(family)) {
                    std::vector<long> ms;
                    if (!cfg.m.empty()) {
                        ms = parse_range(cfg.m, "m");
                    } else if (!n_text.empty()) {
                        for (const long n : parse_range(n_text, "n"))
                            for (const long m : {2 * n, 2 * n + 1}) ms.push_back(m);
                    } else {
                        throw UsageError(id + " needs --m");
                    }
                    for (const long m : ms) specs.push_back(make_scheme(family, q, {}, m));
                    continue;
                }
                if (n_text.empty()) throw UsageError(id + " needs --n");
                for (const long n : parse_range(n_text, "n")) {
                    if (!needs_m(family)) {
                        specs.push_back(make_scheme(family, q, n));
                        continue;
                    }
                    std::vector<long> ms;
                    if (!cfg.m.empty())
                        ms = parse_range(cfg.m, "m");
                    else if (default_m)
                        for (long m = n; m <= n + 2; ++m) ms.push_back(m);
                    else
                        throw UsageError(id + " needs --m");
                    for (const long m : ms)
                        if (m >= n) specs.push_back(make_scheme(family, q, n, m));
                }
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
        }
    }
    if (specs.empty()) throw UsageError("no scheme instances selected");
    return specs;
}

std::vector<long> param_values(const std::string& text, const char* flag, long lo, long hi)
{
    if (text.empty()) {
        std::vector<long> all;
        for (long v = lo; v <= hi; ++v) all.push_back(v);
        return all;
    }
    const auto vals = parse_range(text, flag);
    for (const long v : vals)
        if (v < lo || v > hi)
            throw UsageError(std::string("--") + flag + "=" + std::to_string(v) + " outside " + std::to_string(lo) +
                             ".." + std::to_string(hi));
    return vals;
}

class Output {
public:
    explicit Output(const std::string& path)
    {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw UsageError("cannot open " + path);
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

void check_format(const RunConfig& cfg)
{
    if (cfg.format != "json" && cfg.format != "csv" && cfg.format != "text")
        throw UsageError("--format must be json, csv or text");
}

// ------------------------------------------------------------------ bound / table

struct BoundTask {
    SchemeSpec spec;
    std::string param;  // "d" or "t"
    long value;
};

std::vector<BoundTask> bound_tasks(const std::vector<SchemeSpec>& specs, const RunConfig& cfg, bool skip_uncovered)
{
    if (!cfg.d.empty() && !cfg.t.empty()) throw UsageError("--d and --t are exclusive");
    std::vector<BoundTask> tasks;
    for (const auto& spec : specs) {
        if (!cfg.t.empty()) {
            const long size = uses_m_as_size(spec.family) ? *spec.m : spec.n;
            for (const long t : param_values(cfg.t, "t", 1, size)) {
                if (!ekr_admissible(spec, t)) {
                    if (skip_uncovered) continue;
                    throw UsageError("t=" + std::to_string(t) + " is not admissible for " + describe(spec));
                }
                try {
                    ekr_bound(spec, t);
                } catch (const std::invalid_argument& e) {
                    if (skip_uncovered) continue;
                    throw UsageError(e.what());
                }
                tasks.push_back({spec, "t", t});
            }
            continue;
        }
        for (const long d : param_values(cfg.d, "d", 1, spec.n)) {
            try {
                lp_optimum_formula(spec, d);  // validates coverage and side conditions
            } catch (const std::invalid_argument& e) {
                if (skip_uncovered) continue;
                throw UsageError(e.what());
            }
            tasks.push_back({spec, "d", d});
        }
    }
    if (tasks.empty()) throw UsageError("no covered (scheme, parameter) combinations selected");
    return tasks;
}

int run_bounds(const RunConfig& cfg, const std::vector<BoundTask>& tasks)
{
    Output out(cfg.out);
    auto& os = out.stream();
    std::vector<std::function<BoundReport()>> work;
    for (const auto& t : tasks)
        work.push_back([t] { return t.param == "t" ? ekr_report(t.spec, t.value) : bound_report(t.spec, t.value); });

    bool ok = true;
    if (cfg.format == "csv") os << csv_header(cfg.decimal, cfg.timing) << '\n';
    if (cfg.format == "json") os << "[\n";
    // rows stream in parameter order as soon as their prefix is complete
    run_tasks<BoundReport>(work, !cfg.serial, [&](std::size_t i, const BoundReport& r) {
        if (r.verdict == Verdict::Mismatch) ok = false;
        if (cfg.format == "csv")
            os << to_csv(r, cfg.decimal, cfg.timing) << '\n';
        else if (cfg.format == "json")
            os << "  " << to_json(r, cfg.decimal, cfg.timing).dump() << (i + 1 < tasks.size() ? ",\n" : "\n");
        else
            os << to_text(r, cfg.decimal, cfg.timing) << '\n';
        os.flush();
    });
    if (cfg.format == "json") os << "]\n";
    return ok ? kOk : kFailed;
}

int cmd_bound(const RunConfig& cfg)
{
    check_format(cfg);
    const auto specs = expand_specs(cfg, "", "", "", false);
    return run_bounds(cfg, bound_tasks(specs, cfg, false));
}

int cmd_table(const RunConfig& cfg)
{
    check_format(cfg);
    const auto specs = expand_specs(
        cfg, "hamming,qjohnson,bilinear,alternating,hermitian,polar-2a-odd,polar-b,polar-c,polar-d,half-d", "2,3",
        "1..4", true);
    return run_bounds(cfg, bound_tasks(specs, cfg, true));
}

// ------------------------------------------------------------------ certify

int cmd_certify(const RunConfig& cfg)
{
    check_format(cfg);
    const auto specs = expand_specs(cfg, "", "", "", false);
    std::vector<std::pair<SchemeSpec, long>> targets;
    for (const auto& spec : specs)
        for (const long d : param_values(cfg.d, "d", 1, spec.n)) targets.emplace_back(spec, d);

    std::vector<CertificatePair> pairs;
    for (const auto& [spec, d] : targets) {
        try {
            pairs.push_back(verify_strong_duality(spec, d));
        } catch (const std::invalid_argument& e) {
            throw UsageError(describe(spec) + " d=" + std::to_string(d) + ": " + e.what());
        }
    }

    Output out(cfg.out);
    auto& os = out.stream();
    bool ok = true;
    if (cfg.format == "csv") os << "family,q,n,m,d,primal_objective,dual_objective,duality_gap_zero,violated\n";
    json all = json::array();
    for (const auto& p : pairs) {
        ok = ok && p.duality_gap_zero;
        const auto& s = p.scheme;
        if (cfg.format == "json") {
            json j = to_json(p);
            if (cfg.decimal) j["objective_approx"] = to_decimal(p.primal_objective);
            all.push_back(j);
        } else if (cfg.format == "csv") {
            os << scheme_id(s.family) << ',' << s.q << ',' << s.n << ',' << (s.m ? std::to_string(*s.m) : "") << ','
               << p.d << ',' << to_string(p.primal_objective) << ',' << to_string(p.dual_objective) << ','
               << (p.duality_gap_zero ? "true" : "false") << ',' << p.violated.value_or("") << '\n';
        } else {
            os << describe(s) << " d=" << p.d << "  primal=" << to_string(p.primal_objective)
               << "  dual=" << to_string(p.dual_objective);
            if (cfg.decimal) os << " (~" << to_decimal(p.primal_objective) << ')';
            os << "  " << (p.duality_gap_zero ? "gap zero" : "FAILED");
            if (p.violated) os << "  [" << *p.violated << ']';
            os << '\n';
            os << "  inner:";
            for (const auto& x : p.primal.entries) os << ' ' << to_string(x);
            os << "\n  dual certificate:";
            for (const auto& y : p.dual.entries) os << ' ' << to_string(y);
            os << '\n';
        }
    }
    if (cfg.format == "json") os << (all.size() == 1 ? all[0] : all).dump(2) << '\n';
    return ok ? kOk : kFailed;
}

// ------------------------------------------------------------------ verify

int cmd_verify(const RunConfig& cfg)
{
    check_format(cfg);
    GridOptions opts;
    opts.parallel = !cfg.serial;
    if (!cfg.q.empty()) {
        const auto qs = parse_range(cfg.q, "q");
        if (qs.size() != 1 || qs[0] < 2) throw UsageError("verify takes a single --q >= 2");
        opts.q = qs[0];
    }
    if (!cfg.n.empty()) {
        const auto ns = parse_range(cfg.n, "n");
        if (ns.size() != 1 || ns[0] < 1) throw UsageError("verify takes a single --n >= 1");
        opts.n = ns[0];
    }
    std::vector<std::string> suites = cfg.only.empty() ? verify_suite_names() : split(cfg.only);
    for (const auto& s : suites)
        if (!is_verify_suite(s)) throw UsageError("unknown suite '" + s + "'");

    Output out(cfg.out);
    auto& os = out.stream();
    long failed = 0;
    json all = json::array();
    if (cfg.format == "csv") os << "suite,instance,pass,report_only,detail\n";
    for (const auto& name : suites) {
        std::vector<Check> checks;
        try {
            checks = run_verify_suite(name, opts);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        const auto sum = summarize(checks);
        failed += sum.failed;
        if (cfg.format == "json") {
            json j{{"suite", name}, {"passed", sum.passed}, {"failed", sum.failed}, {"reported", sum.reported}};
            json list = json::array();
            for (const auto& c : checks) list.push_back(to_json(c));
            j["checks"] = list;
            all.push_back(j);
        } else if (cfg.format == "csv") {
            for (const auto& c : checks) {
                std::string detail = c.detail;
                for (auto& ch : detail)
                    if (ch == ',') ch = ';';
                os << c.suite << ',' << c.instance << ',' << (c.pass ? "true" : "false") << ','
                   << (c.report_only ? "true" : "false") << ',' << detail << '\n';
            }
        } else {
            os << name << ": " << sum.passed << " passed, " << sum.failed << " failed";
            if (sum.reported) os << ", " << sum.reported << " reported";
            os << '\n';
            for (const auto& c : checks) {
                if (c.report_only)
                    os << "  report  " << c.instance << ": " << c.detail << '\n';
                else if (!c.pass)
                    os << "  FAIL    " << c.instance << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
            }
        }
        os.flush();
    }
    if (cfg.format == "json") os << all.dump(2) << '\n';
    if (cfg.format == "text") os << (failed ? "FAILED" : "all checks passed") << '\n';
    return failed ? kFailed : kOk;
}

// ------------------------------------------------------------------ oracle

int cmd_oracle(const RunConfig& cfg)
{
    check_format(cfg);
    const auto specs = expand_specs(cfg, "", "", "", false);
    if (specs.size() != 1) throw UsageError("oracle takes exactly one instance");
    const SchemeSpec& spec = specs[0];
    if (!is_affine(spec.family)) throw UsageError("oracle supports bilinear, alternating and hermitian only");
    if (cfg.cap < 1) throw UsageError("--cap must be positive");
    const auto ds = param_values(cfg.d, "d", 1, spec.n);

    const auto inst = build_instance(spec, cfg.cap);  // CapExceeded -> exit 3
    bool ok = true;
    json report{{"scheme", describe(spec)}, {"vertices", inst.size()}};

    const auto val = empirical_valencies(inst);
    json vj{{"empirical", json::array()}, {"formula", json::array()}};
    for (long i = 0; i <= spec.n; ++i) {
        vj["empirical"].push_back(to_string(val[i]));
        vj["formula"].push_back(to_string(spec.tables().valency[i]));
    }
    vj["match"] = val == spec.tables().valency;
    ok = ok && vj["match"].get<bool>();
    report["valencies"] = vj;

    if (static_cast<long>(inst.size()) <= kEigenCap) {
        json ej = json::array();
        for (long i = 0; i <= spec.n; ++i) {
            const auto e = empirical_eigenvalues(inst, spec, i);
            json row{{"i", i}, {"verified", e.all_hold}, {"eigenvalues", json::array()}};
            for (const auto& v : e.eigenvalues) row["eigenvalues"].push_back(to_string(v));
            if (!e.all_hold) row["failure"] = e.failure;
            ok = ok && e.all_hold;
            ej.push_back(row);
        }
        report["eigenvalues"] = ej;
    } else {
        report["eigenvalues"] = "skipped: more than " + std::to_string(kEigenCap) + " vertices";
    }

    const auto sub = random_subset_dual_check(inst, spec, cfg.trials);
    report["random_subsets"] = {{"trials", sub.trials}, {"failures", sub.failures}};
    ok = ok && sub.failures == 0;

    CliqueOptions copt;
    copt.node_budget = cfg.clique_budget;
    json codes = json::array();
    for (const long d : ds) {
        const auto res = cfg.serial ? max_code_bruteforce_serial(inst, d, copt) : max_code_bruteforce(inst, d, copt);
        const Rational lp = lp_opt(spec, d);
        const bool within = Rational(res.size) <= lp;
        ok = ok && within;
        codes.push_back({{"d", d},
                         {"max_code", res.size},
                         {"complete", res.complete},
                         {"lp", to_string(lp)},
                         {"attains_lp", Rational(res.size) == lp},
                         {"within_lp", within},
                         {"witness", witness_json(inst, res.witness)}});
    }
    report["codes"] = codes;
    report["ok"] = ok;

    Output out(cfg.out);
    auto& os = out.stream();
    if (cfg.format == "json") {
        os << report.dump(2) << '\n';
    } else if (cfg.format == "csv") {
        os << "scheme,d,max_code,complete,lp,attains_lp\n";
        for (const auto& c : codes)
            os << scheme_id(spec.family) << ',' << c["d"] << ',' << c["max_code"] << ',' << c["complete"] << ','
               << c["lp"].get<std::string>() << ',' << c["attains_lp"] << '\n';
    } else {
        os << describe(spec) << ": " << inst.size() << " vertices\n";
        os << "valencies " << (vj["match"].get<bool>() ? "match" : "MISMATCH") << ":";
        for (const auto& v : val) os << ' ' << to_string(v);
        os << '\n';
        if (report["eigenvalues"].is_array()) {
            for (const auto& e : report["eigenvalues"]) {
                os << "eigenvalues of class " << e["i"] << (e["verified"].get<bool>() ? " verified:" : " FAILED:");
                for (const auto& v : e["eigenvalues"]) os << ' ' << v.get<std::string>();
                os << '\n';
            }
        } else {
            os << "eigenvalues " << report["eigenvalues"].get<std::string>() << '\n';
        }
        os << "random subsets: " << sub.trials << " trials, " << sub.failures << " with a negative dual entry\n";
        for (const auto& c : codes) {
            os << "d=" << c["d"] << ": max code " << c["max_code"];
            if (!c["complete"].get<bool>()) os << " (search budget exhausted; lower bound)";
            os << ", LP bound " << c["lp"].get<std::string>();
            os << (c["attains_lp"].get<bool>() ? " (attained)" : "") << '\n';
        }
    }
    return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Delsarte LP bounds for classical association schemes"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--scheme", cfg.schemes, "scheme id(s), comma separated");
        sub->add_option("--q", cfg.q, "q, a value or range such as 2..3");
        sub->add_option("--n", cfg.n, "n, a value or range");
        sub->add_option("--m", cfg.m, "m, a value or range");
        sub->add_option("--format", cfg.format, "json, csv or text")->default_val("text");
        sub->add_option("--out", cfg.out, "write to PATH instead of standard output");
        sub->add_flag("--decimal", cfg.decimal, "add approximate decimal values");
        sub->add_flag("--serial", cfg.serial, "use the serial reference kernels");
    };

    auto* bound = app.add_subcommand("bound", "LP optimum: closed form, solver and certificate");
    add_common(bound);
    bound->add_option("--d", cfg.d, "minimum distance, value or range");
    bound->add_option("--t", cfg.t, "intersection parameter for t-intersecting bounds");
    bound->add_flag("--timing", cfg.timing, "add a millis column");

    auto* table = app.add_subcommand("table", "bound table over a parameter grid");
    add_common(table);
    table->add_option("--d", cfg.d, "minimum distance, value or range");
    table->add_option("--t", cfg.t, "intersection parameter for t-intersecting bounds");
    table->add_flag("--timing", cfg.timing, "add a millis column");

    auto* certify = app.add_subcommand("certify", "closed-form primal and dual certificates");
    add_common(certify);
    certify->add_option("--d", cfg.d, "minimum distance, value or range");

    auto* verify = app.add_subcommand("verify", "identity and invariant suites");
    add_common(verify);
    verify->add_option("--only", cfg.only, "comma separated suite names");

    auto* oracle = app.add_subcommand("oracle", "brute-force checks on explicit matrix schemes");
    add_common(oracle);
    oracle->add_option("--d", cfg.d, "minimum distance, value or range");
    oracle->add_option("--cap", cfg.cap, "vertex cap")->default_val(kDefaultVertexCap);
    oracle->add_option("--clique-budget", cfg.clique_budget, "node budget of the clique search");
    oracle->add_option("--trials", cfg.trials, "random subsets")->default_val(200);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*bound) return cmd_bound(cfg);
        if (*table) return cmd_table(cfg);
        if (*certify) return cmd_certify(cfg);
        if (*verify) return cmd_verify(cfg);
        if (*oracle) return cmd_oracle(cfg);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const CapExceeded& e) {
        std::cerr << "resource cap: " << e.what() << '\n';
        return kCap;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << '\n';
        return kFailed;
    }
    return kUsage;
}
