#include "doctest.h"

#include <set>

#include "probund/bundle.hpp"

using namespace probund;

namespace {

FiniteModule zm(i64 n, std::vector<i64> factors)
{
    return zmod_module(zmod_ring(n), std::move(factors));
}

bool homs_equal(const ModuleHom& a, const ModuleHom& b)
{
    if (a.matrix.rows != b.matrix.rows || a.matrix.cols != b.matrix.cols) return false;
    for (int r = 0; r < a.matrix.rows; ++r) {
        i64 m = a.codomain.factors[static_cast<size_t>(r)];
        for (int c = 0; c < a.matrix.cols; ++c)
            if (((a.matrix.at(r, c) - b.matrix.at(r, c)) % m + m) % m != 0) return false;
    }
    return true;
}

} // namespace

TEST_SUITE("bundle")
{
    TEST_CASE("constant bundles")
    {
        GroupBundle b = constant_group_bundle(cyclic_group(2), FiniteSpace{3});
        CHECK(b.total_order() == 6);
        CHECK(constant_group_bundle(trivial_group(), FiniteSpace{5}).total_order() == 5);
        CHECK(constant_group_bundle(symmetric3(), FiniteSpace{1}).fibres.size() == 1);

        ModuleBundle m = constant_module_bundle(zm(4, {2, 4}), FiniteSpace{2});
        CHECK(m.total_order() == 16);
    }

    TEST_CASE("bundles of maps and projections round-trip sizes")
    {
        SpaceMap p = make_space_map(FiniteSpace{5}, FiniteSpace{3}, {0, 1, 0, 2, 1});
        SpaceBundle B = bundle_of_map(p);
        CHECK(B.total_size() == 5);
        CHECK(B.fibres[0].size == 2);
        CHECK(B.fibres[1].size == 2);
        CHECK(B.fibres[2].size == 1);
        SpaceMap q = projection_of_bundle(B);
        for (int x = 0; x < 3; ++x)
            CHECK(fibre(q, x).size() == fibre(p, x).size());
    }

    TEST_CASE("module coproduct is the biproduct of the fibres")
    {
        FiniteRing z6 = zmod_ring(6);
        ModuleBundle B = make_module_bundle(FiniteSpace{2}, z6,
                                            {zmod_module(z6, {2}), zmod_module(z6, {3})});
        ModuleCoproduct cp = internal_coproduct_modules(B);
        CHECK(cp.module.factors == std::vector<i64>{6});
        CHECK(cp.injections.size() == 2);

        ModuleBundle empty = make_module_bundle(FiniteSpace{0}, z6, {});
        CHECK(internal_coproduct_modules(empty).module.is_zero());
    }

    TEST_CASE("coproduct universal property against constant bundles")
    {
        FiniteRing z4 = zmod_ring(4);
        ModuleBundle B = make_module_bundle(FiniteSpace{2}, z4,
                                            {zmod_module(z4, {2}), zmod_module(z4, {4})});
        FiniteModule M = zmod_module(z4, {2});
        ModuleCoproduct cp = internal_coproduct_modules(B);
        u64 lhs = count_module_homs(cp.module, M);
        u64 rhs = 1;
        for (const auto& f : B.fibres) rhs *= count_module_homs(f, M);
        CHECK(lhs == rhs);
        // injectivity of h -> (h o iota_x)
        auto homs = enumerate_module_homs(cp.module, M);
        std::set<std::vector<i64>> images;
        for (const auto& h : homs) {
            std::vector<i64> key;
            for (const auto& inj : cp.injections) {
                ModuleHom restr = compose(h, inj);
                key.insert(key.end(), restr.matrix.a.begin(), restr.matrix.a.end());
            }
            images.insert(key);
        }
        CHECK(images.size() == homs.size());
    }

    TEST_CASE("functor registry: kinds, names, lookup")
    {
        CHECK(abelianisation_functor(zmod_ring(2)).input_kind() == BundleKind::group);
        CHECK(free_module_functor(zmod_ring(3)).input_kind() == BundleKind::space);
        CHECK(tor_functor(1, zm(4, {2})).additive());
        CHECK(dual_functor().contravariant());
        CHECK(functor_by_name("dual", {}, {}, 0, {}).id == FibrewiseFunctor::Id::pontryagin_dual);
        CHECK_THROWS_AS(functor_by_name("nope", {}, {}, 0, {}), Error);
        CHECK_THROWS_AS(tor_functor(7, zm(4, {2})), Error);
    }

    TEST_CASE("lifting the identity returns the bundle")
    {
        GroupBundle B = constant_group_bundle(symmetric3(), FiniteSpace{2});
        AnyBundle lifted = lift_functor(identity_functor(BundleKind::group), any_bundle(B));
        CHECK(lifted.kind == BundleKind::group);
        CHECK(lifted.group->total_order() == B.total_order());
        CHECK_THROWS_AS(lift_functor(identity_functor(BundleKind::module), any_bundle(B)), Error);
    }

    TEST_CASE("lifting abelianisation: fibres (S3, C4) become (C2, C4)")
    {
        GroupBundle B = make_group_bundle(FiniteSpace{2}, {symmetric3(), cyclic_group(4)});
        AbelianisedBundle ab = abelianise_bundle(B);
        CHECK(ab.bundle.fibres[0].factors == std::vector<i64>{2});
        CHECK(ab.bundle.fibres[1].factors == std::vector<i64>{4});
        CHECK(ab.bundle.ring.n == 4);
    }

    TEST_CASE("lifting free modules over a space bundle")
    {
        SpaceBundle Y = make_space_bundle(FiniteSpace{2}, {FiniteSpace{1}, FiniteSpace{2}});
        ModuleBundle F = lift_functor_to_modules(free_module_functor(zmod_ring(2)), any_bundle(Y));
        CHECK(F.fibres[0].order() == 2);
        CHECK(F.fibres[1].order() == 4);
        ModuleCoproduct cp = internal_coproduct_modules(F);
        FiniteModule total = free_module(zmod_ring(2), FiniteSpace{Y.total_size()}).module;
        CHECK(cp.module.factors == total.factors);
    }

    TEST_CASE("dual bundle preserves fibre orders pointwise")
    {
        FiniteRing z4 = zmod_ring(4);
        ModuleBundle B = make_module_bundle(FiniteSpace{2}, z4,
                                            {zmod_module(z4, {2}), zmod_module(z4, {4})});
        ModuleBundle D = dualise_bundle(B);
        for (size_t x = 0; x < B.fibres.size(); ++x)
            CHECK(D.fibres[x].order() == B.fibres[x].order());
        CHECK(D.fibres[0].factors == std::vector<i64>{2});
        CHECK(D.fibres[1].factors == std::vector<i64>{4});
    }

    TEST_CASE("dualising a bundle map gives a valid opposite map, contravariantly")
    {
        FiniteRing z4 = zmod_ring(4);
        ModuleBundle Q = make_module_bundle(FiniteSpace{2}, z4,
                                            {zmod_module(z4, {2}), zmod_module(z4, {2})});
        ModuleBundle P = make_module_bundle(FiniteSpace{1}, z4, {zmod_module(z4, {4})});
        IntMat incl(1, 1);
        incl.at(0, 0) = 2;
        std::vector<ModuleHom> homs = {make_module_hom(Q.fibres[0], P.fibres[0], incl),
                                       make_module_hom(Q.fibres[1], P.fibres[0], incl)};
        ModuleBundleMap m = make_module_bundle_map(Q, P, constant_map(Q.base, P.base, 0), homs);
        OppositeModuleBundleMap md = dualise_bundle_map(Q, P, m);
        CHECK(is_valid_opposite_bundle_map(dualise_bundle(P), dualise_bundle(Q), md));

        OppositeModuleBundleMap idd = dualise_bundle_map(Q, Q, identity_module_bundle_map(Q));
        for (const auto& h : idd.fibre_homs) CHECK(homs_equal(h, identity_module_hom(h.domain)));
    }

    TEST_CASE("double dual is the identity on canonical data")
    {
        FiniteRing z12 = zmod_ring(12);
        ModuleBundle B = make_module_bundle(
            FiniteSpace{3}, z12,
            {zmod_module(z12, {2, 6}), zmod_module(z12, {12}), zmod_module(z12, {})});
        ModuleBundle DD = dualise_bundle(dualise_bundle(B));
        for (size_t x = 0; x < B.fibres.size(); ++x)
            CHECK(DD.fibres[x].factors == B.fibres[x].factors);
    }

    TEST_CASE("duality reverses hom sets with equal cardinality")
    {
        FiniteRing z4 = zmod_ring(4);
        ModuleBundle A = make_module_bundle(FiniteSpace{1}, z4, {zmod_module(z4, {2})});
        ModuleBundle B = make_module_bundle(FiniteSpace{2}, z4,
                                            {zmod_module(z4, {4}), zmod_module(z4, {2})});
        u64 forward = count_module_bundle_maps(A, B);
        u64 backward = count_opposite_bundle_maps(dualise_bundle(B), dualise_bundle(A));
        CHECK(forward == backward);
        auto maps = enumerate_module_bundle_maps(A, B);
        std::set<std::vector<i64>> seen;
        for (const auto& m : maps) {
            OppositeModuleBundleMap md = dualise_bundle_map(A, B, m);
            CHECK(is_valid_opposite_bundle_map(dualise_bundle(B), dualise_bundle(A), md));
            std::vector<i64> key(md.base_map.values.begin(), md.base_map.values.end());
            for (const auto& h : md.fibre_homs) {
                key.push_back(-7);
                for (int r = 0; r < h.matrix.rows; ++r)
                    for (int c = 0; c < h.matrix.cols; ++c) {
                        i64 mmod = h.codomain.factors[static_cast<size_t>(r)];
                        key.push_back(((h.matrix.at(r, c) % mmod) + mmod) % mmod);
                    }
            }
            seen.insert(std::move(key));
        }
        CHECK(seen.size() == maps.size());
    }

    TEST_CASE("kernels and cokernels of bundle maps over a fixed base")
    {
        FiniteRing z4 = zmod_ring(4);
        ModuleBundle A = make_module_bundle(FiniteSpace{2}, z4,
                                            {zmod_module(z4, {4}), zmod_module(z4, {4})});
        IntMat two(1, 1);
        two.at(0, 0) = 2;
        std::vector<ModuleHom> homs = {make_module_hom(A.fibres[0], A.fibres[0], two),
                                       make_module_hom(A.fibres[1], A.fibres[1], IntMat::identity(1))};
        ModuleBundleMap m = make_module_bundle_map(A, A, identity_map(A.base), homs);
        auto K = kernel_bundle(A, A, m);
        CHECK(K.bundle.fibres[0].factors == std::vector<i64>{2});
        CHECK(K.bundle.fibres[1].is_zero());
        auto C = cokernel_bundle(A, A, m);
        CHECK(C.bundle.fibres[0].factors == std::vector<i64>{2});
        CHECK(C.bundle.fibres[1].is_zero());
    }

    TEST_CASE("dual commutes with the module coproduct (product reading)")
    {
        FiniteRing z12 = zmod_ring(12);
        ModuleBundle B = make_module_bundle(
            FiniteSpace{3}, z12,
            {zmod_module(z12, {2, 6}), zmod_module(z12, {4}), zmod_module(z12, {3})});
        FiniteModule route1 = internal_coproduct_modules(dualise_bundle(B)).module;
        FiniteModule route2 = pontryagin_dual(internal_coproduct_modules(B).module);
        CHECK(route1.factors == route2.factors);
    }

    TEST_CASE("bundle maps over a fixed base compose fibrewise")
    {
        FiniteRing z4 = zmod_ring(4);
        ModuleBundle A = make_module_bundle(FiniteSpace{2}, z4,
                                            {zmod_module(z4, {4}), zmod_module(z4, {4})});
        IntMat two(1, 1);
        two.at(0, 0) = 2;
        std::vector<ModuleHom> homs = {make_module_hom(A.fibres[0], A.fibres[0], two),
                                       make_module_hom(A.fibres[1], A.fibres[1], two)};
        ModuleBundleMap m = make_module_bundle_map(A, A, identity_map(A.base), homs);
        ModuleBundleMap mm = compose_over_base(m, m);
        CHECK(is_valid_module_bundle_map(A, A, mm));
        for (const auto& h : mm.fibre_homs)
            CHECK(h.matrix.at(0, 0) % 4 == 0); // 2*2 = 0 mod 4
    }

    TEST_CASE("permuting the base presents the same fibres")
    {
        GroupBundle B = make_group_bundle(FiniteSpace{3},
                                          {cyclic_group(2), cyclic_group(3), symmetric3()});
        GroupBundle P = permute_base(B, {2, 0, 1});
        CHECK(P.fibres[2].order == 2);
        CHECK(P.fibres[0].order == 3);
        CHECK(P.fibres[1].order == 6);
        CHECK(P.total_order() == B.total_order());
        CHECK_THROWS_AS(permute_base(B, {0, 0, 1}), Error);
    }
}
