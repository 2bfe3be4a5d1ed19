// Command-line front end: theorem checks, instance generation, and direct
// access to the Tor / dual / hom-enumeration primitives.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "probund/harness.hpp"
#include "probund/rng.hpp"

namespace {

using namespace probund;

// inline JSON, or @path to read from a file
json parse_json_arg(const std::string& arg)
{
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        require(in.good(), "cannot open " + arg.substr(1));
        json j;
        in >> j;
        return j;
    }
    return json::parse(arg);
}

void write_or_print(const json& j, const std::string& path)
{
    if (path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(path, std::ios::binary);
        require(out.good(), "cannot open " + path);
        out << j.dump(2) << "\n";
    }
}

int exit_code_for(Verdict v)
{
    switch (v) {
        case Verdict::pass: return 0;
        case Verdict::fail: return 1;
        case Verdict::inconclusive: return 2;
    }
    return 3;
}

int run_reports(const std::vector<TheoremId>& ids, int trials, u64 seed, const Bounds& bounds,
                int jobs, const std::string& json_path)
{
    SuiteReport suite = run_suite(ids, trials, seed, bounds, jobs);
    for (const auto& r : suite.reports)
        std::cout << theorem_name(r.theorem) << " seed=" << r.seed
                  << " verdict=" << verdict_name(r.verdict) << " (" << r.timing_ms << " ms)\n";
    std::cout << "overall: " << verdict_name(suite.overall) << "\n";
    if (!json_path.empty()) write_or_print(suite_report_to_json(suite), json_path);
    return exit_code_for(suite.overall);
}

} // namespace

int main(int argc, char** argv)
{
    using namespace probund;
    CLI::App app{"exact bundle calculus over finite spaces: theorem checks and primitives"};
    app.require_subcommand(1);

    // ---- check ----
    auto* check_cmd = app.add_subcommand("check", "run one theorem's checker on seeded instances");
    std::string check_id;
    u64 check_seed = 1;
    int check_trials = 1;
    Bounds check_bounds;
    std::string check_json;
    int check_jobs = 1;
    check_cmd->add_option("theorem", check_id, "theorem id")->required();
    check_cmd->add_option("--seed", check_seed, "base seed");
    check_cmd->add_option("--trials", check_trials, "number of instances");
    check_cmd->add_option("--max-base", check_bounds.max_base, "max base size");
    check_cmd->add_option("--max-fibre-order", check_bounds.max_fibre_order, "max fibre order");
    check_cmd->add_option("--max-test-order", check_bounds.max_test_order, "max probe order");
    check_cmd->add_option("--max-ring-n", check_bounds.max_ring_n, "max Zmod characteristic");
    check_cmd->add_option("--jobs", check_jobs, "parallel workers");
    check_cmd->add_option("--json", check_json, "write the JSON report here");

    // ---- gen ----
    auto* gen_cmd = app.add_subcommand("gen", "generate one deterministic instance");
    std::string gen_id, gen_out;
    u64 gen_seed = 0;
    Bounds gen_bounds;
    gen_cmd->add_option("theorem", gen_id, "theorem id")->required();
    gen_cmd->add_option("--seed", gen_seed, "seed")->required();
    gen_cmd->add_option("--out", gen_out, "output path (stdout by default)");
    gen_cmd->add_option("--max-base", gen_bounds.max_base, "max base size");
    gen_cmd->add_option("--max-fibre-order", gen_bounds.max_fibre_order, "max fibre order");

    // ---- tor ----
    auto* tor_cmd = app.add_subcommand("tor", "Tor_i(M, N) over Z/n");
    i64 tor_n = 4;
    int tor_i = 0;
    std::string tor_module, tor_coeff;
    tor_cmd->add_option("--ring", tor_n, "Zmod characteristic")->required();
    tor_cmd->add_option("--i", tor_i, "homological degree")->required();
    tor_cmd->add_option("--module", tor_module, "module JSON (or @file)")->required();
    tor_cmd->add_option("--coeff", tor_coeff, "coefficient module JSON (or @file)")->required();

    // ---- dual ----
    auto* dual_cmd = app.add_subcommand("dual", "Pontryagin dual of a module");
    std::string dual_module;
    dual_cmd->add_option("--module", dual_module, "module JSON (or @file)")->required();

    // ---- homs ----
    auto* homs_cmd = app.add_subcommand("homs", "enumerate group homomorphisms");
    std::string homs_group, homs_target;
    homs_cmd->add_option("--group", homs_group, "source group spec, e.g. C2xC2")->required();
    homs_cmd->add_option("--target", homs_target, "target group spec")->required();

    // ---- suite ----
    auto* suite_cmd = app.add_subcommand("suite", "run many theorems");
    bool suite_all = false;
    std::vector<std::string> suite_ids;
    int suite_trials = 1, suite_jobs = 1;
    u64 suite_seed = 1;
    Bounds suite_bounds;
    std::string suite_json;
    suite_cmd->add_flag("--all", suite_all, "every registered theorem");
    suite_cmd->add_option("theorems", suite_ids, "theorem ids");
    suite_cmd->add_option("--trials", suite_trials, "instances per theorem");
    suite_cmd->add_option("--seed", suite_seed, "base seed");
    suite_cmd->add_option("--jobs", suite_jobs, "parallel workers");
    suite_cmd->add_option("--json", suite_json, "write the JSON report here");
    suite_cmd->add_option("--max-base", suite_bounds.max_base, "max base size");
    suite_cmd->add_option("--max-fibre-order", suite_bounds.max_fibre_order, "max fibre order");
    suite_cmd->add_option("--max-test-order", suite_bounds.max_test_order, "max probe order");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 3;
    }

    try {
        if (*check_cmd)
            return run_reports({theorem_from_name(check_id)}, check_trials, check_seed,
                               check_bounds, check_jobs, check_json);

        if (*gen_cmd) {
            CheckInstance inst = gen_instance(theorem_from_name(gen_id), gen_seed, gen_bounds);
            json out{{"theorem", gen_id},
                     {"seed", gen_seed},
                     {"digest", json_digest(inst.payload)},
                     {"payload", inst.payload}};
            write_or_print(out, gen_out);
            return 0;
        }

        if (*tor_cmd) {
            FiniteRing ring = zmod_ring(tor_n);
            FiniteModule M = module_from_json(parse_json_arg(tor_module), ring);
            FiniteModule N = module_from_json(parse_json_arg(tor_coeff), ring);
            FiniteModule T = tor(tor_i, M, N);
            write_or_print(json{{"i", tor_i}, {"invariant_factors", T.factors},
                                {"order", T.order()}},
                           "");
            return 0;
        }

        if (*dual_cmd) {
            FiniteModule M = module_from_json(parse_json_arg(dual_module));
            write_or_print(to_json(pontryagin_dual(M)), "");
            return 0;
        }

        if (*homs_cmd) {
            FiniteGroup G = parse_group_spec(homs_group);
            FiniteGroup T = parse_group_spec(homs_target);
            auto homs = enumerate_homs(G, T);
            json list = json::array();
            for (const auto& h : homs) list.push_back(h.values);
            write_or_print(json{{"count", homs.size()}, {"homs", std::move(list)}}, "");
            return 0;
        }

        if (*suite_cmd) {
            std::vector<TheoremId> ids;
            if (suite_all) {
                ids = all_theorems();
            } else {
                for (const auto& name : suite_ids) ids.push_back(theorem_from_name(name));
            }
            if (ids.empty()) {
                std::cerr << "suite: pass --all or at least one theorem id\n";
                return 3;
            }
            return run_reports(ids, suite_trials, suite_seed, suite_bounds, suite_jobs, suite_json);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}
