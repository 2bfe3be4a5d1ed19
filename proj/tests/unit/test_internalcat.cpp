#include "doctest.h"

#include <set>

#include "probund/internalcat.hpp"

using namespace probund;

namespace {

// a random-ish but fixed diagram over the parallel pair shape
InternalGroupDiagram sample_parallel_diagram()
{
    FiniteInternalCategory A = parallel_pair_category();
    FiniteGroup c4 = cyclic_group(4), c2 = cyclic_group(2);
    GroupBundle bundle = make_group_bundle(A.objects, {c4, c2});
    auto homs = enumerate_homs(c4, c2); // trivial and reduction
    std::vector<GroupHom> action = {identity_hom(c4), identity_hom(c2), homs[1], homs[0]};
    return make_internal_group_diagram(A, bundle, action);
}

} // namespace

TEST_SUITE("internalcat")
{
    TEST_CASE("discrete categories")
    {
        FiniteInternalCategory D = discrete_category(FiniteSpace{3});
        CHECK(D.objects.size == 3);
        CHECK(D.arrows.size == 3);
        FiniteInternalCategory pt = discrete_category(FiniteSpace{1});
        CHECK(pt.arrows.size == 1);
    }

    TEST_CASE("cone graph categories have the right sizes")
    {
        FiniteInternalCategory C = cone_graph_category(FiniteSpace{2});
        CHECK(C.objects.size == 3);
        CHECK(C.arrows.size == 5);
        FiniteInternalCategory E = cone_graph_category(FiniteSpace{0});
        CHECK(E.objects.size == 1);
        CHECK(E.arrows.size == 1);
    }

    TEST_CASE("malformed categories are rejected")
    {
        FiniteSpace one{1}, two{2};
        // missing composite for a composable pair
        CHECK_THROWS_AS(make_internal_category(one, two,
                                               make_space_map(two, one, {0, 0}),
                                               make_space_map(two, one, {0, 0}),
                                               make_space_map(one, two, {0}),
                                               {{{0, 0}, 0}}),
                        Error);
    }

    TEST_CASE("diagram validation catches non-functorial data")
    {
        FiniteInternalCategory A = parallel_pair_category();
        FiniteGroup c4 = cyclic_group(4), c2 = cyclic_group(2);
        GroupBundle bundle = make_group_bundle(A.objects, {c4, c2});
        auto homs = enumerate_homs(c4, c2);
        // wrong: f gets a hom with the wrong domain
        std::vector<GroupHom> bad = {identity_hom(c4), identity_hom(c2),
                                     identity_hom(c2), homs[0]};
        CHECK_THROWS_AS(make_internal_group_diagram(A, bundle, bad), Error);
    }

    TEST_CASE("colimit over a discrete shape is the free-product hom set")
    {
        FiniteSpace X{2};
        GroupBundle B = make_group_bundle(X, {cyclic_group(2), cyclic_group(3)});
        FiniteInternalCategory D = discrete_category(X);
        std::vector<GroupHom> action = {identity_hom(B.fibres[0]), identity_hom(B.fibres[1])};
        InternalGroupDiagram P = make_internal_group_diagram(D, B, action);

        ProGroupByHoms via_colimit = colimit_via_coequaliser(D, P);
        ProGroupByHoms via_coproduct = internal_coproduct_groups(B);
        for (const auto& T : {cyclic_group(6), symmetric3(), quaternion8()}) {
            auto a = via_colimit.homs_to(T);
            auto b = via_coproduct.homs_to(T);
            REQUIRE(a.size() == b.size());
            for (size_t i = 0; i < a.size(); ++i)
                for (size_t c = 0; c < a[i].size(); ++c)
                    CHECK(a[i][c].values == b[i][c].values);
        }
        // |homs_to(C6)| = |Hom(C2,C6)| * |Hom(C3,C6)| = 2*3
        CHECK(via_coproduct.count_homs_to(cyclic_group(6)) == 6);
    }

    TEST_CASE("coproduct hom sets: degenerate bases")
    {
        GroupBundle empty = make_group_bundle(FiniteSpace{0}, {});
        CHECK(internal_coproduct_groups(empty).homs_to(symmetric3()).size() == 1);

        GroupBundle single = make_group_bundle(FiniteSpace{1}, {symmetric3()});
        CHECK(internal_coproduct_groups(single).count_homs_to(cyclic_group(2)) ==
              enumerate_homs(symmetric3(), cyclic_group(2)).size());
    }

    TEST_CASE("coequaliser constraint matches brute-force filtering")
    {
        InternalGroupDiagram P = sample_parallel_diagram();
        ProGroupByHoms colim = colimit_via_coequaliser(P.category, P);
        for (const auto& T : {cyclic_group(2), cyclic_group(4), symmetric3(), quaternion8()}) {
            auto fast = colim.homs_to(T);
            // oracle: full product then pointwise filtering over every arrow
            auto l0 = enumerate_homs(P.bundle.fibres[0], T);
            auto l1 = enumerate_homs(P.bundle.fibres[1], T);
            size_t expected = 0;
            for (const auto& a0 : l0)
                for (const auto& a1 : l1) {
                    bool ok = true;
                    for (int f = 0; f < P.category.arrows.size && ok; ++f) {
                        const GroupHom& pf = P.action[static_cast<size_t>(f)];
                        const GroupHom& src =
                            (P.category.source.apply(f) == 0) ? a0 : a1;
                        const GroupHom& tgt =
                            (P.category.target.apply(f) == 0) ? a0 : a1;
                        for (int x = 0; x < pf.domain.order && ok; ++x)
                            if (tgt.apply(pf.apply(x)) != src.apply(x)) ok = false;
                    }
                    if (ok) ++expected;
                }
            CHECK(fast.size() == expected);
        }
    }

    TEST_CASE("coequaliser shape agrees with the finite coequaliser")
    {
        InternalGroupDiagram P = sample_parallel_diagram();
        ProGroupByHoms colim = colimit_via_coequaliser(P.category, P);
        QuotientResult ce = coequaliser(P.action[2], P.action[3]);
        for (const auto& T : {cyclic_group(2), cyclic_group(4), symmetric3()})
            CHECK(colim.homs_to(T).size() == enumerate_homs(ce.quotient, T).size());
    }

    TEST_CASE("pushout shape: C2 <- 1 -> C3 against S3 counts 12")
    {
        FiniteInternalCategory A = span_category();
        FiniteGroup one = trivial_group(), c2 = cyclic_group(2), c3 = cyclic_group(3);
        GroupBundle B = make_group_bundle(A.objects, {one, c2, c3});
        std::vector<GroupHom> action = {identity_hom(one), identity_hom(c2), identity_hom(c3),
                                        trivial_hom(one, c2), trivial_hom(one, c3)};
        InternalGroupDiagram P = make_internal_group_diagram(A, B, action);
        ProGroupByHoms colim = colimit_via_coequaliser(A, P);
        CHECK(colim.homs_to(symmetric3()).size() == 12);
    }

    TEST_CASE("amalgam homs: H = C2 in C4 and C6, probe C2, count 2")
    {
        FiniteGroup h = cyclic_group(2), c4 = cyclic_group(4), c6 = cyclic_group(6);
        auto embed = [](const FiniteGroup& H, const FiniteGroup& G) {
            for (const auto& hom : enumerate_homs(H, G))
                if (is_injective_hom(hom)) return hom;
            throw Error("no embedding");
        };
        AmalgamData D = make_amalgam_data(FiniteSpace{2}, h, {c4, c6},
                                          {embed(h, c4), embed(h, c6)});
        auto tuples = amalgam_homs(D, cyclic_group(2));
        CHECK(tuples.size() == 2);
        for (const auto& t : tuples) {
            REQUIRE(t.size() == 3); // beta_*, beta_0, beta_1
            for (int x = 0; x < 2; ++x)
                CHECK(compose(t[static_cast<size_t>(x + 1)], D.theta[static_cast<size_t>(x)]).values ==
                      t[0].values);
        }
    }

    TEST_CASE("amalgam edge cases")
    {
        FiniteGroup h = trivial_group(), c2 = cyclic_group(2), c3 = cyclic_group(3);
        AmalgamData free_case = make_amalgam_data(
            FiniteSpace{2}, h, {c2, c3}, {trivial_hom(h, c2), trivial_hom(h, c3)});
        // no amalgamation constraint: free-product counts
        CHECK(amalgam_homs(free_case, cyclic_group(6)).size() == 6);

        // theta isomorphisms: everything determined by beta_*
        FiniteGroup h2 = cyclic_group(2);
        AmalgamData det = make_amalgam_data(FiniteSpace{2}, h2, {h2, h2},
                                            {identity_hom(h2), identity_hom(h2)});
        CHECK(amalgam_homs(det, quaternion8()).size() ==
              enumerate_homs(h2, quaternion8()).size());
    }

    TEST_CASE("amalgam agrees with the cone-graph colimit")
    {
        FiniteGroup h = cyclic_group(2), c4 = cyclic_group(4), s3 = symmetric3();
        auto embed = [](const FiniteGroup& H, const FiniteGroup& G) {
            for (const auto& hom : enumerate_homs(H, G))
                if (is_injective_hom(hom)) return hom;
            throw Error("no embedding");
        };
        AmalgamData D = make_amalgam_data(FiniteSpace{2}, h, {c4, s3},
                                          {embed(h, c4), embed(h, s3)});
        InternalGroupDiagram P = amalgam_to_diagram(D);
        ProGroupByHoms colim = colimit_via_coequaliser(P.category, P);
        for (const auto& T : {cyclic_group(2), cyclic_group(4), symmetric3(), dihedral_group(4)}) {
            auto direct = amalgam_homs(D, T);
            auto via = colim.homs_to(T);
            REQUIRE(direct.size() == via.size());
            // canonical bijection: colimit tuples list (x0, x1, *) in object
            // order; amalgam tuples are (beta_*, x0, x1)
            std::set<std::vector<int>> direct_keys, via_keys;
            for (const auto& t : direct) {
                std::vector<int> key;
                for (const auto& h2 : {t[1], t[2], t[0]})
                    key.insert(key.end(), h2.values.begin(), h2.values.end());
                direct_keys.insert(std::move(key));
            }
            for (const auto& t : via) {
                std::vector<int> key;
                for (const auto& h2 : t) key.insert(key.end(), h2.values.begin(), h2.values.end());
                via_keys.insert(std::move(key));
            }
            CHECK(direct_keys == via_keys);
        }
    }

    TEST_CASE("colimit rejects diagrams over a different category")
    {
        InternalGroupDiagram P = sample_parallel_diagram();
        FiniteInternalCategory other = discrete_category(FiniteSpace{2});
        CHECK_THROWS_AS(colimit_via_coequaliser(other, P), Error);
    }

    TEST_CASE("finite groups wrap as hom-represented progroups")
    {
        ProGroupByHoms pg = finite_progroup(symmetric3());
        CHECK(pg.count_homs_to(cyclic_group(2)) == 2);
        auto tuples = pg.homs_to(cyclic_group(6));
        for (const auto& t : tuples) CHECK(t.size() == 1);
    }

    TEST_CASE("postcomposition functoriality of hom tuples")
    {
        GroupBundle B = make_group_bundle(FiniteSpace{2}, {cyclic_group(4), symmetric3()});
        ProGroupByHoms cp = internal_coproduct_groups(B);
        FiniteGroup t4 = cyclic_group(4), t2 = cyclic_group(2);
        GroupHom red = make_group_hom(t4, t2, {0, 1, 0, 1});
        auto tuples = cp.homs_to(t4);
        auto target = cp.homs_to(t2);
        std::set<std::vector<int>> target_keys;
        for (const auto& t : target) {
            std::vector<int> key;
            for (const auto& h : t) key.insert(key.end(), h.values.begin(), h.values.end());
            target_keys.insert(std::move(key));
        }
        for (const auto& t : tuples) {
            HomTuple pushed = postcompose_tuple(t, red);
            std::vector<int> key;
            for (const auto& h : pushed) key.insert(key.end(), h.values.begin(), h.values.end());
            CHECK(target_keys.count(key) == 1);
        }
    }
}
