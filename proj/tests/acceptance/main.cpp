// Acceptance suite: one line per criterion, exact checks throughout.
// Exit code 0 iff every criterion passes.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <set>
#include <string>

#include "probund/harness.hpp"
#include "../unit/oracles.hpp"

using namespace probund;

namespace {

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void report(int number, const std::string& name, bool ok, double secs, const std::string& extra = {})
{
    std::printf("%s  %d. %-28s %6.2fs%s%s\n", ok ? "PASS" : "FAIL", number, name.c_str(), secs,
                extra.empty() ? "" : "  ", extra.c_str());
    if (!ok) ++failures;
}

bool suite_all_passed(const SuiteReport& s)
{
    return s.overall == Verdict::pass;
}

std::string count_passes(const SuiteReport& s)
{
    size_t pass = 0;
    for (const auto& r : s.reports)
        if (r.verdict == Verdict::pass) ++pass;
    return std::to_string(pass) + "/" + std::to_string(s.reports.size()) + " instances";
}

} // namespace

int main()
{
    std::setvbuf(stdout, nullptr, _IOLBF, 0);

    // 1. abelianisation commutes with internal coproducts
    {
        Timer t;
        Bounds b;
        b.max_base = 4;
        b.max_fibre_order = 24;
        b.max_test_order = 12;
        SuiteReport s = run_suite({TheoremId::abelianisation_coproduct}, 100, 1001, b);
        report(1, "abelianisation-coproduct", suite_all_passed(s), t.seconds(), count_passes(s));
    }

    // 2. free modules commute with internal coproducts, explicit isomorphism
    {
        Timer t;
        Bounds b;
        b.max_ring_n = 8;
        SuiteReport s = run_suite({TheoremId::free_module_coproduct}, 100, 1002, b);
        bool ok = suite_all_passed(s);
        for (const auto& r : s.reports)
            ok = ok && r.witness.at("kind") == "isomorphism" && verify_witness(r);
        report(2, "free-module-coproduct", ok, t.seconds(), count_passes(s));
    }

    // 3. Tor commutes with internal coproducts over Z/4, Z/6, (Z/2)[C2]
    {
        Timer t;
        Bounds b;
        SuiteReport s = run_suite({TheoremId::tor_coproduct}, 100, 1003, b);
        bool ok = suite_all_passed(s);
        std::set<std::string> rings;
        std::set<int> degrees;
        for (const auto& r : s.reports) {
            rings.insert(r.instance.at("bundle").at("ring").dump());
            degrees.insert(r.instance.at("i").get<int>());
            ok = ok && verify_witness(r);
        }
        ok = ok && rings.size() == 3 && degrees == std::set<int>{0, 1, 2};
        report(3, "tor-coproduct", ok, t.seconds(),
               count_passes(s) + ", " + std::to_string(rings.size()) + " rings, i in {0,1,2}");
    }

    // 4. induction and restriction preserve internal coproducts
    {
        Timer t;
        Bounds b;
        SuiteReport s1 = run_suite({TheoremId::induction_coproduct}, 50, 1004, b);
        SuiteReport s2 = run_suite({TheoremId::restriction_coproduct}, 50, 1005, b);
        bool ok = suite_all_passed(s1) && suite_all_passed(s2);
        report(4, "induction+restriction", ok, t.seconds(),
               count_passes(s1) + " / " + count_passes(s2));
    }

    // 5. Pontryagin duality: double-dual involution and hom-set reversal
    {
        Timer t;
        Bounds b;
        SuiteReport s1 = run_suite({TheoremId::duality_involution}, 100, 1006, b);
        SuiteReport s2 = run_suite({TheoremId::duality_equivalence}, 50, 1007, b);
        bool ok = suite_all_passed(s1) && suite_all_passed(s2);
        report(5, "duality", ok, t.seconds(), count_passes(s1) + " / " + count_passes(s2));
    }

    // 6. internal colimits via coequalisers against direct enumeration,
    //    free products on discrete shapes, amalgams on cone graphs
    {
        Timer t;
        Bounds b;
        b.max_test_order = 8;
        SuiteReport s = run_suite({TheoremId::colimit_coequaliser}, 50, 1008, b);
        bool ok = suite_all_passed(s);
        std::set<std::string> shapes;
        for (const auto& r : s.reports) shapes.insert(r.instance.at("shape").get<std::string>());
        ok = ok && shapes.count("discrete") == 1 && shapes.count("cone") == 1;
        SuiteReport sd = run_suite({TheoremId::discrete_colimit_agreement}, 20, 1009, b);
        ok = ok && suite_all_passed(sd);
        report(6, "colimit-via-coequaliser", ok, t.seconds(),
               count_passes(s) + ", shapes=" + std::to_string(shapes.size()));
    }

    // 7. relative adjunctions (100 sampled pairs across both registered
    //    pairs) and the four-functor square on 20 bundles
    {
        Timer t;
        Bounds b;
        SuiteReport s = run_suite({TheoremId::relative_adjunction}, 20, 1010, b);
        bool ok = suite_all_passed(s);
        size_t pairs = 0;
        std::set<std::string> kinds;
        for (const auto& r : s.reports) {
            pairs += r.instance.at("samples").size();
            kinds.insert(r.instance.at("pair").get<std::string>());
        }
        ok = ok && pairs >= 100 && kinds.size() == 2;
        SuiteReport s4 = run_suite({TheoremId::four_square}, 20, 1011, b);
        ok = ok && suite_all_passed(s4);
        report(7, "relative-adjunction+square", ok, t.seconds(),
               std::to_string(pairs) + " samples, " + count_passes(s4) + " squares");
    }

    // 8. oracle equivalence: enumerate_homs against unrestricted value-table
    //    search, exhaustively over the order <= 8 catalog
    {
        Timer t;
        bool ok = true;
        long pairs = 0;
        for (const auto& G : catalog_order_le8())
            for (const auto& T : catalog_order_le8()) {
                auto impl = enumerate_homs(G, T);
                auto oracle = oracle::brute_force_homs(G, T);
                std::sort(oracle.begin(), oracle.end());
                bool same = impl.size() == oracle.size();
                for (size_t i = 0; same && i < impl.size(); ++i)
                    same = impl[i].values == oracle[i];
                ok = ok && same;
                ++pairs;
            }
        report(8, "oracle-equivalence", ok, t.seconds(), std::to_string(pairs) + " pairs");
    }

    // 9. determinism: the exact bytes `suite --all --trials 5 --seed 42
    //    --json out.json` writes, produced twice and compared
    {
        Timer t;
        Bounds b;
        SuiteReport a = run_suite(all_theorems(), 5, 42, b);
        SuiteReport c = run_suite(all_theorems(), 5, 42, b);
        std::string bytes_a = suite_report_to_json(a).dump(2) + "\n";
        std::string bytes_c = suite_report_to_json(c).dump(2) + "\n";
        bool ok = bytes_a == bytes_c && a.overall == Verdict::pass;
        {
            std::ofstream f1("acceptance_suite_run1.json", std::ios::binary);
            f1 << bytes_a;
            std::ofstream f2("acceptance_suite_run2.json", std::ios::binary);
            f2 << bytes_c;
        }
        std::ifstream f1("acceptance_suite_run1.json", std::ios::binary);
        std::ifstream f2("acceptance_suite_run2.json", std::ios::binary);
        std::string d1((std::istreambuf_iterator<char>(f1)), std::istreambuf_iterator<char>());
        std::string d2((std::istreambuf_iterator<char>(f2)), std::istreambuf_iterator<char>());
        ok = ok && d1 == d2 && !d1.empty();
        report(9, "determinism", ok, t.seconds(), std::to_string(bytes_a.size()) + " bytes");
    }

    if (failures == 0) {
        std::printf("acceptance: all 9 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) FAILED\n", failures);
    return 1;
}
