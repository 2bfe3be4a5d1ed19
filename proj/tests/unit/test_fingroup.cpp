#include "doctest.h"

#include <set>

#include "oracles.hpp"
#include "probund/fingroup.hpp"

using namespace probund;

TEST_SUITE("fingroup")
{
    TEST_CASE("named constructors validate and parse")
    {
        CHECK(cyclic_group(6).order == 6);
        CHECK(dihedral_group(4).order == 8);
        CHECK(quaternion8().order == 8);
        CHECK(symmetric3().order == 6);
        CHECK(parse_group_spec("C2xC2").order == 4);
        CHECK(parse_group_spec("C2xS3").order == 12);
        CHECK_FALSE(is_abelian(quaternion8()));
        CHECK(is_abelian(parse_group_spec("C2xC4")));
        CHECK_THROWS_AS(parse_group_spec("E7"), Error);
    }

    TEST_CASE("bad tables are rejected")
    {
        // a "table" where row 1 is constant: no inverses / not a group
        CHECK_THROWS_AS(make_group(2, {0, 1, 1, 1}), Error);
        CHECK_THROWS_AS(make_group(2, {0, 1, 1, 0}, {0}), Error); // identity generates nothing
    }

    TEST_CASE("hom counts on known pairs")
    {
        CHECK(enumerate_homs(cyclic_group(2), symmetric3()).size() == 4);
        CHECK(enumerate_homs(symmetric3(), trivial_group()).size() == 1);
        CHECK(enumerate_homs(quaternion8(), trivial_group()).size() == 1);
        CHECK(enumerate_homs(cyclic_group(3), cyclic_group(3)).size() == 3);
    }

    TEST_CASE("enumerate_homs equals brute force on small pairs")
    {
        std::vector<FiniteGroup> pool = {trivial_group(), cyclic_group(2), cyclic_group(4),
                                         parse_group_spec("C2xC2"), symmetric3(), quaternion8()};
        for (const auto& G : pool)
            for (const auto& T : pool) {
                auto impl = enumerate_homs(G, T);
                auto oracle = oracle::brute_force_homs(G, T);
                REQUIRE(impl.size() == oracle.size());
                std::sort(oracle.begin(), oracle.end());
                for (size_t i = 0; i < impl.size(); ++i) CHECK(impl[i].values == oracle[i]);
            }
    }

    TEST_CASE("enumerate_homs at order 24")
    {
        // D12 -> S3 and C24 -> C12, checked against the value-table oracle
        FiniteGroup d12 = dihedral_group(12), s3 = symmetric3();
        auto impl = enumerate_homs(d12, s3);
        auto oracle = oracle::brute_force_homs(d12, s3);
        CHECK(impl.size() == oracle.size());
        CHECK(enumerate_homs(cyclic_group(24), cyclic_group(12)).size() ==
              oracle::brute_force_homs(cyclic_group(24), cyclic_group(12)).size());
    }

    TEST_CASE("table-search fallback agrees when no generators are declared")
    {
        FiniteGroup c6 = cyclic_group(6);
        FiniteGroup bare = make_group(6, c6.table); // no generator set
        CHECK(bare.generators.empty());
        auto a = enumerate_homs(bare, symmetric3());
        auto b = enumerate_homs(c6, symmetric3());
        REQUIRE(a.size() == b.size());
        for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].values == b[i].values);
    }

    TEST_CASE("abelianisation")
    {
        auto s3 = abelianisation(symmetric3());
        CHECK(s3.quotient.order == 2);
        auto q8 = abelianisation(quaternion8());
        CHECK(q8.quotient.order == 4);
        CHECK(q8.quotient.element_order(1) <= 2); // exponent 2: C2 x C2
        for (int x = 0; x < q8.quotient.order; ++x) CHECK(q8.quotient.element_order(x) <= 2);

        auto ab = abelianisation(parse_group_spec("C2xC4"));
        CHECK(ab.quotient.order == 8);
        CHECK(is_injective_hom(ab.projection));
    }

    TEST_CASE("abelianisation factorization property")
    {
        for (const auto& G : {symmetric3(), quaternion8(), dihedral_group(4)}) {
            auto [A, q] = abelianisation(G);
            for (const auto& T : {cyclic_group(2), cyclic_group(4), parse_group_spec("C2xC2")}) {
                auto up = enumerate_homs(A, T);
                auto down = enumerate_homs(G, T);
                REQUIRE(up.size() == down.size());
                std::set<std::vector<int>> composed;
                for (const auto& h : up) composed.insert(compose(h, q).values);
                CHECK(composed.size() == down.size()); // injective + same count = bijection
            }
        }
    }

    TEST_CASE("quotients by normal closures")
    {
        FiniteGroup c4 = cyclic_group(4);
        CHECK(quotient_by_normal_closure(c4, std::vector<int>{c4.identity}).quotient.order == 4);
        CHECK(quotient_by_normal_closure(c4, std::vector<int>{2}).quotient.order == 2);
        FiniteGroup s3 = symmetric3();
        CHECK(quotient_by_normal_closure(s3, std::vector<int>{1}).quotient.order == 2); // rotation
    }

    TEST_CASE("coequalisers")
    {
        FiniteGroup c2 = cyclic_group(2), s3 = symmetric3();
        GroupHom f = enumerate_homs(c2, s3)[1]; // some nontrivial hom: hits a reflection
        REQUIRE(f.values[1] != s3.identity);
        auto ce = coequaliser(f, trivial_hom(c2, s3));
        CHECK(ce.quotient.order == 1);

        auto same = coequaliser(f, f);
        CHECK(same.quotient.order == s3.order);
        CHECK(is_injective_hom(same.projection));

        auto none = coequaliser(trivial_hom(trivial_group(), s3), trivial_hom(trivial_group(), s3));
        CHECK(none.quotient.order == s3.order);

        CHECK_THROWS_AS(coequaliser(f, trivial_hom(c2, cyclic_group(4))), Error);
    }

    TEST_CASE("coequaliser universal property on probes")
    {
        FiniteGroup c4 = cyclic_group(4), d4 = dihedral_group(4);
        auto homs = enumerate_homs(c4, d4);
        const GroupHom& f = homs[homs.size() / 2];
        const GroupHom& g = homs[1];
        auto ce = coequaliser(f, g);
        for (const auto& T : {cyclic_group(2), parse_group_spec("C2xC2"), symmetric3()}) {
            size_t equalized = 0;
            for (const auto& h : enumerate_homs(d4, T))
                if (compose(h, f).values == compose(h, g).values) ++equalized;
            std::set<std::vector<int>> through;
            for (const auto& h : enumerate_homs(ce.quotient, T))
                through.insert(compose(h, ce.projection).values);
            CHECK(through.size() == equalized);
        }
    }

    TEST_CASE("pushout along a surjection")
    {
        FiniteGroup c2 = cyclic_group(2), s3 = symmetric3();
        GroupHom f = enumerate_homs(c2, s3)[1];
        auto p = pushout_along_surjection(f, identity_hom(c2));
        CHECK(p.group.order == 6); // gluing along the identity changes nothing
        auto q = pushout_along_surjection(f, trivial_hom(c2, trivial_group()));
        CHECK(q.group.order == 1); // killing the transposition kills S3
    }

    TEST_CASE("isomorphism search")
    {
        auto r1 = find_group_isomorphism(cyclic_group(6), parse_group_spec("C2xC3"));
        REQUIRE(r1.status == GroupIsoResult::Status::found);
        CHECK(is_injective_hom(*r1.iso));
        CHECK(find_group_isomorphism(cyclic_group(4), parse_group_spec("C2xC2")).status ==
              GroupIsoResult::Status::none);
        CHECK(find_group_isomorphism(symmetric3(), cyclic_group(6)).status ==
              GroupIsoResult::Status::none);
        CHECK(find_group_isomorphism(dihedral_group(3), symmetric3()).status ==
              GroupIsoResult::Status::found);
    }

    TEST_CASE("catalogs")
    {
        CHECK(abelian_catalog(12).size() == 17);
        CHECK(catalog_order_le8().size() == 14);
        auto probes = default_test_groups(24);
        CHECK(probes.size() == 20); // 17 abelian + S3, D4, Q8
    }

    TEST_CASE("hom enumeration respects postcomposition")
    {
        FiniteGroup g = dihedral_group(4), t = cyclic_group(4), t2 = cyclic_group(2);
        GroupHom red = make_group_hom(t, t2, {0, 1, 0, 1});
        auto hs = enumerate_homs(g, t);
        auto target = enumerate_homs(g, t2);
        std::set<std::vector<int>> target_set;
        for (const auto& h : target) target_set.insert(h.values);
        for (const auto& h : hs) CHECK(target_set.count(compose(red, h).values) == 1);
    }
}
