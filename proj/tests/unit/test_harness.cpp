#include "doctest.h"

#include "probund/harness.hpp"
#include "probund/rng.hpp"

using namespace probund;

TEST_SUITE("harness")
{
    TEST_CASE("theorem names round-trip and unknown ids are rejected")
    {
        for (TheoremId id : all_theorems()) CHECK(theorem_from_name(theorem_name(id)) == id);
        CHECK_THROWS_AS(theorem_from_name("not-a-theorem"), Error);
        CHECK(all_theorems().size() == 12);
    }

    TEST_CASE("bounds caps are enforced")
    {
        Bounds b;
        b.max_base = 9;
        CHECK_THROWS_AS(validate_bounds(b), Error);
        b = Bounds{};
        b.max_fibre_order = 100;
        CHECK_THROWS_AS(gen_instance(TheoremId::abelianisation_coproduct, 1, b), Error);
        b = Bounds{};
        b.max_ring_n = 50;
        CHECK_THROWS_AS(validate_bounds(b), Error);
    }

    TEST_CASE("instance generation is deterministic, bit-identically")
    {
        Bounds b;
        for (TheoremId id : all_theorems()) {
            CheckInstance a = gen_instance(id, 12345, b);
            CheckInstance c = gen_instance(id, 12345, b);
            CHECK(a.payload.dump() == c.payload.dump());
            CheckInstance d = gen_instance(id, 12346, b);
            // different seeds should (almost always) differ; not asserted
            (void)d;
        }
    }

    TEST_CASE("single-fibre instances at max_base 1")
    {
        Bounds b;
        b.max_base = 1;
        CheckInstance inst = gen_instance(TheoremId::abelianisation_coproduct, 3, b);
        GroupBundle bundle = group_bundle_from_json(inst.payload.at("bundle"));
        CHECK(bundle.base.size == 1);
    }

    TEST_CASE("every theorem passes on a few seeds")
    {
        Bounds b;
        for (TheoremId id : all_theorems())
            for (u64 seed : {1ULL, 2ULL, 3ULL}) {
                CheckInstance inst = gen_instance(id, seed, b);
                Report r = check(id, inst);
                INFO(theorem_name(id), " seed ", seed);
                CHECK(r.verdict == Verdict::pass);
                CHECK(verify_witness(r));
            }
    }

    TEST_CASE("metamorphic: permuting base points never changes the verdict")
    {
        Bounds b;
        for (u64 seed : {5ULL, 6ULL}) {
            CheckInstance inst = gen_instance(TheoremId::abelianisation_coproduct, seed, b);
            GroupBundle bundle = group_bundle_from_json(inst.payload.at("bundle"));
            Report base = check(TheoremId::abelianisation_coproduct, inst);

            std::vector<int> perm(static_cast<size_t>(bundle.base.size));
            for (int i = 0; i < bundle.base.size; ++i)
                perm[static_cast<size_t>(i)] = (i + 1) % bundle.base.size;
            CheckInstance permuted = inst;
            permuted.payload["bundle"] = to_json(permute_base(bundle, perm));
            Report moved = check(TheoremId::abelianisation_coproduct, permuted);
            CHECK(base.verdict == moved.verdict);
        }
        for (u64 seed : {7ULL, 8ULL}) {
            CheckInstance inst = gen_instance(TheoremId::tor_coproduct, seed, b);
            ModuleBundle bundle = module_bundle_from_json(inst.payload.at("bundle"));
            Report base = check(TheoremId::tor_coproduct, inst);
            std::vector<int> perm(static_cast<size_t>(bundle.base.size));
            for (int i = 0; i < bundle.base.size; ++i)
                perm[static_cast<size_t>(i)] = (i + 1) % bundle.base.size;
            CheckInstance permuted = inst;
            permuted.payload["bundle"] = to_json(permute_base(bundle, perm));
            Report moved = check(TheoremId::tor_coproduct, permuted);
            CHECK(base.verdict == moved.verdict);
        }
    }

    TEST_CASE("greedy minimizer reaches a minimal failing bundle")
    {
        GroupBundle B = make_group_bundle(
            FiniteSpace{4}, {cyclic_group(2), symmetric3(), cyclic_group(4), symmetric3()});
        // synthetic predicate: "fails" while some fibre is nonabelian
        auto pred = [](const GroupBundle& b) {
            for (const auto& f : b.fibres)
                if (!is_abelian(f)) return true;
            return false;
        };
        GroupBundle m = minimize_group_bundle(B, pred);
        CHECK(m.base.size == 1);
        CHECK(m.fibres[0].order == 6);
    }

    TEST_CASE("inconclusive on enumeration budget exhaustion")
    {
        Bounds b;
        b.enumeration_cap = 1;
        CheckInstance inst = gen_instance(TheoremId::duality_equivalence, 2, b);
        Report r = check(TheoremId::duality_equivalence, inst);
        CHECK(r.verdict == Verdict::inconclusive);
        CHECK(r.witness.at("kind") == "budget");
        CHECK_FALSE(verify_witness(r)); // inconclusive never verifies as pass
    }

    TEST_CASE("suite reports are deterministic and ordered")
    {
        Bounds b;
        std::vector<TheoremId> ids = {TheoremId::free_module_coproduct,
                                      TheoremId::duality_involution};
        SuiteReport s1 = run_suite(ids, 2, 99, b);
        SuiteReport s2 = run_suite(ids, 2, 99, b);
        CHECK(suite_report_to_json(s1).dump() == suite_report_to_json(s2).dump());
        CHECK(s1.overall == Verdict::pass);
        CHECK(s1.reports.size() == 4);
        // parallel execution produces the identical serialized report
        SuiteReport s3 = run_suite(ids, 2, 99, b, 2);
        CHECK(suite_report_to_json(s1).dump() == suite_report_to_json(s3).dump());
    }

    TEST_CASE("derived seeds follow the documented mixing function")
    {
        Bounds b;
        SuiteReport s = run_suite({TheoremId::four_square}, 3, 7, b);
        for (int i = 0; i < 3; ++i) CHECK(s.reports[static_cast<size_t>(i)].seed == mix64(7, static_cast<u64>(i)));
    }

    TEST_CASE("tor-coproduct golden instance at seed 17")
    {
        // digest and shape frozen from the first generation of this instance:
        // a module bundle over Z/4 with 3 fibres, i = 0
        CheckInstance inst = gen_instance(TheoremId::tor_coproduct, 17, Bounds{});
        CHECK(json_digest(inst.payload) == "e7dbb5b169957df2");
        ModuleBundle bundle = module_bundle_from_json(inst.payload.at("bundle"));
        CHECK(bundle.ring.is_zmod());
        CHECK(bundle.ring.n == 4);
        CHECK(bundle.base.size == 3);
        CHECK(inst.payload.at("i").get<int>() == 0);
    }

    TEST_CASE("abelianisation check on fibres (C2, C3): documented probe counts")
    {
        // both sides must see (2*1, 1*3, 2*3, 4*1) homs for T = C2, C3, C6, C2xC2
        GroupBundle B = make_group_bundle(FiniteSpace{2}, {cyclic_group(2), cyclic_group(3)});
        CheckInstance inst{TheoremId::abelianisation_coproduct, 0, Bounds{},
                           json{{"bundle", to_json(B)}}};
        Report r = check(TheoremId::abelianisation_coproduct, inst);
        CHECK(r.verdict == Verdict::pass);
        auto product_for = [&](const FiniteGroup& T) {
            return enumerate_homs(cyclic_group(2), T).size() *
                   enumerate_homs(cyclic_group(3), T).size();
        };
        CHECK(product_for(cyclic_group(2)) == 2);
        CHECK(product_for(cyclic_group(3)) == 3);
        CHECK(product_for(cyclic_group(6)) == 6);
        CHECK(product_for(parse_group_spec("C2xC2")) == 4);
    }

    TEST_CASE("tor-coproduct on fibres (Z/2, Z/4) over Z/4 with N = Z/2 at i = 1")
    {
        FiniteRing z4 = zmod_ring(4);
        ModuleBundle B = make_module_bundle(FiniteSpace{2}, z4,
                                            {zmod_module(z4, {2}), zmod_module(z4, {4})});
        FiniteModule N = zmod_module(z4, {2});
        CheckInstance inst{TheoremId::tor_coproduct, 0, Bounds{},
                           json{{"bundle", to_json(B)}, {"coefficient", to_json(N)}, {"i", 1}}};
        Report r = check(TheoremId::tor_coproduct, inst);
        CHECK(r.verdict == Verdict::pass);
        // both sides are Z/2: the free fibre contributes nothing in degree 1
        FiniteModule lhs = tor(1, internal_coproduct_modules(B).module, N);
        CHECK(lhs.factors == std::vector<i64>{2});
    }

    TEST_CASE("free-module-coproduct over an empty base")
    {
        CheckInstance inst{TheoremId::free_module_coproduct, 0, Bounds{},
                           json{{"ring", to_json(zmod_ring(4))},
                                {"bundle", to_json(make_space_bundle(FiniteSpace{0}, {}))}}};
        Report r = check(TheoremId::free_module_coproduct, inst);
        CHECK(r.verdict == Verdict::pass);
    }

    TEST_CASE("suite with one trial reproduces a direct check")
    {
        Bounds b;
        SuiteReport s = run_suite({TheoremId::duality_involution}, 1, 31, b);
        CheckInstance inst = gen_instance(TheoremId::duality_involution, mix64(31, 0), b);
        Report direct = check(TheoremId::duality_involution, inst);
        CHECK(report_to_json(s.reports[0]).dump() == report_to_json(direct).dump());
    }

    TEST_CASE("report JSON normalizes timing for byte-stable output")
    {
        CheckInstance inst = gen_instance(TheoremId::free_module_coproduct, 4, Bounds{});
        Report r = check(TheoremId::free_module_coproduct, inst);
        json j = report_to_json(r);
        CHECK(j.at("timing_ms") == 0);
        CHECK(j.at("digest") == r.digest);
    }
}
