#include "probund/protower.hpp"

#include <algorithm>
#include <set>

namespace probund {

GroupTower constant_group_tower(const FiniteGroup& G, int max_depth)
{
    return GroupTower([G](int) { return G; }, [G](int) { return identity_hom(G); }, max_depth);
}

GroupTower zmod_chain_tower(i64 p, int max_depth)
{
    require(p >= 2, "chain base must be at least 2");
    i64 top = 1;
    for (int d = 0; d <= max_depth; ++d) {
        top = checked_mul(top, p);
        require(top <= 128, "chain grows past the configured bound");
    }
    auto order_at = [p](int d) {
        i64 n = 1;
        for (int k = 0; k <= d; ++k) n *= p;
        return n;
    };
    return GroupTower(
        [order_at](int d) { return cyclic_group(static_cast<int>(order_at(d))); },
        [order_at](int d) {
            FiniteGroup big = cyclic_group(static_cast<int>(order_at(d + 1)));
            FiniteGroup small = cyclic_group(static_cast<int>(order_at(d)));
            std::vector<int> values(static_cast<size_t>(big.order));
            for (int x = 0; x < big.order; ++x) values[static_cast<size_t>(x)] = x % small.order;
            return make_group_hom(big, small, std::move(values));
        },
        max_depth);
}

BundleTower converging_to_one_tower(const std::vector<FiniteGroup>& groups, int max_depth)
{
    const int m = static_cast<int>(groups.size());
    FiniteSpace base{m + 1}; // the last point plays the role of the limit point
    auto level_at = [groups, base, m](int d) {
        std::vector<FiniteGroup> fibres;
        for (int i = 0; i < m; ++i)
            fibres.push_back(i < std::min(d, m) ? groups[static_cast<size_t>(i)] : trivial_group());
        fibres.push_back(trivial_group());
        return make_group_bundle(base, std::move(fibres));
    };
    return BundleTower(
        level_at,
        [level_at, base, m](int d) {
            GroupBundle deep = level_at(d + 1), shallow = level_at(d);
            std::vector<GroupHom> homs;
            for (int i = 0; i <= m; ++i) {
                const FiniteGroup& src = deep.fibres[static_cast<size_t>(i)];
                const FiniteGroup& dst = shallow.fibres[static_cast<size_t>(i)];
                homs.push_back(src.same_table(dst) ? identity_hom(src) : trivial_hom(src, dst));
            }
            return make_group_bundle_map(deep, shallow, identity_map(base), std::move(homs));
        },
        max_depth);
}

namespace {

GroupHom abelianised_hom(const GroupHom& t, const QuotientResult& dom_ab,
                         const QuotientResult& cod_ab)
{
    // the induced map on quotients: pick any preimage, push through t
    std::vector<int> values(static_cast<size_t>(dom_ab.quotient.order), -1);
    for (int x = 0; x < t.domain.order; ++x) {
        int a = dom_ab.projection.apply(x);
        int v = cod_ab.projection.apply(t.apply(x));
        require(values[static_cast<size_t>(a)] < 0 || values[static_cast<size_t>(a)] == v,
                "abelianised map not well defined");
        values[static_cast<size_t>(a)] = v;
    }
    return make_group_hom(dom_ab.quotient, cod_ab.quotient, std::move(values));
}

} // namespace

GroupTower extend_abelianisation(const GroupTower& t)
{
    return map_tower<FiniteGroup, GroupHom>(
        t, [](const FiniteGroup& G) { return abelianisation(G).quotient; },
        [](const GroupHom& h) {
            return abelianised_hom(h, abelianisation(h.domain), abelianisation(h.codomain));
        });
}

ModuleHom free_module_hom(const FiniteRing& ring, const SpaceMap& f)
{
    FreeModule dom = free_module(ring, f.domain);
    FreeModule cod = free_module(ring, f.codomain);
    const int gsize = ring.is_zmod() ? 1 : ring.group->order;
    IntMat m(cod.module.rank(), dom.module.rank());
    for (int y = 0; y < f.domain.size; ++y)
        for (int g = 0; g < gsize; ++g)
            m.at(f.apply(y) * gsize + g, y * gsize + g) = 1;
    return make_module_hom(dom.module, cod.module, std::move(m));
}

ModuleTower extend_free_module(const SpaceTower& t, const FiniteRing& ring)
{
    return map_tower<FiniteModule, ModuleHom>(
        t, [ring](const FiniteSpace& X) { return free_module(ring, X).module; },
        [ring](const SpaceMap& f) { return free_module_hom(ring, f); });
}

ModuleTower extend_module_functor(const FibrewiseFunctor& F, const ModuleTower& t)
{
    require(F.input_kind() == BundleKind::module && !F.contravariant(),
            "levelwise extension needs a covariant module functor");
    return map_tower<FiniteModule, ModuleHom>(
        t, [F](const FiniteModule& M) { return apply_functor(F, M); },
        [F](const ModuleHom& h) { return apply_functor_hom(F, h); });
}

FingerprintReport tower_limit_fingerprint(const GroupTower& t,
                                          const std::vector<FiniteGroup>& probes, int depth)
{
    require(depth >= 0 && depth <= t.max_depth(), "fingerprint depth exceeds the tower bound");
    // composite transitions level(max_depth) -> level(d)
    std::vector<GroupHom> composite; // composite[d]: level(max_depth) -> level(d)
    const int top = t.max_depth();
    composite.resize(static_cast<size_t>(top) + 1, identity_hom(t.level(top)));
    for (int d = top - 1; d >= 0; --d)
        composite[static_cast<size_t>(d)] = compose(t.transition(d), composite[static_cast<size_t>(d + 1)]);

    FingerprintReport rep;
    for (const auto& T : probes) {
        std::vector<u64> counts;
        for (int d = 0; d <= depth; ++d) {
            std::set<std::vector<int>> image;
            for (const auto& h : enumerate_homs(t.level(d), T))
                image.insert(compose(h, composite[static_cast<size_t>(d)]).values);
            counts.push_back(image.size());
        }
        rep.stabilized.push_back(counts.size() < 2 ||
                                 counts[counts.size() - 1] == counts[counts.size() - 2]);
        rep.counts.push_back(std::move(counts));
    }
    return rep;
}

// ---- relative adjunctions ------------------------------------------------------

AdjunctionCheck check_free_forget_adjunction(const FiniteRing& ring, FiniteSpace c,
                                             const FiniteModule& d)
{
    require(ring.is_zmod(), "the free/forget pair is registered over Zmod rings");
    require(same_ring(ring, d.ring), "sample module must live over the pair's ring");
    FreeModule L = free_module(ring, c);
    AdjunctionCheck out;
    out.left_count = count_module_homs(L.module, d);

    u64 functions = 1;
    for (int x = 0; x < c.size; ++x) functions *= d.order();
    out.right_count = functions;
    if (out.left_count != out.right_count) return out;

    // forward: hom -> its values on the basis; must be injective
    std::set<std::vector<i64>> images;
    for (const auto& h : enumerate_module_homs(L.module, d)) {
        std::vector<i64> key;
        for (int x = 0; x < c.size; ++x) {
            std::vector<i64> v = h.apply(free_basis_element(ring, L.rrank, x));
            key.insert(key.end(), v.begin(), v.end());
        }
        images.insert(std::move(key));
    }
    if (images.size() != out.left_count) return out;

    // backward: every function extends to a hom (columns = the chosen values)
    std::vector<u64> idx(static_cast<size_t>(c.size), 0);
    u64 checked = 0;
    for (;;) {
        IntMat m(d.rank(), L.module.rank());
        for (int x = 0; x < c.size; ++x) {
            std::vector<i64> v = module_element(d, idx[static_cast<size_t>(x)]);
            for (int r = 0; r < d.rank(); ++r) m.at(r, x) = v[static_cast<size_t>(r)];
        }
        if (!is_valid_module_hom(L.module, d, m)) return out;
        ++checked;
        int pos = 0;
        while (pos < c.size) {
            if (++idx[static_cast<size_t>(pos)] < d.order()) break;
            idx[static_cast<size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == c.size) break;
        if (c.size == 0) break;
    }
    out.bijection_ok = (checked == functions || c.size == 0);
    return out;
}

AdjunctionCheck check_abelianisation_adjunction(const FiniteGroup& c, const FiniteGroup& d)
{
    require(is_abelian(d), "sample must land in abelian groups");
    QuotientResult ab = abelianisation(c);
    AdjunctionCheck out;
    auto up = enumerate_homs(ab.quotient, d);
    auto down = enumerate_homs(c, d);
    out.left_count = up.size();
    out.right_count = down.size();
    if (out.left_count != out.right_count) return out;
    std::set<std::vector<int>> composed;
    for (const auto& h : up) composed.insert(compose(h, ab.projection).values);
    out.bijection_ok = composed.size() == down.size();
    return out;
}

// ---- four-functor square ---------------------------------------------------------

ModuleHom free_coproduct_iso(const FiniteRing& ring, const SpaceBundle& Y)
{
    ModuleBundle F = lift_functor_to_modules(free_module_functor(ring), any_bundle(Y));
    ModuleCoproduct cp = internal_coproduct_modules(F);
    FiniteModule total = free_module(ring, FiniteSpace{Y.total_size()}).module;
    const int gsize = ring.is_zmod() ? 1 : ring.group->order;

    // sum -> total: the injection-x part of a sum element is re-embedded at
    // the total-space basis block of fibre x (basis (k, g) -> (offset_x + k, g))
    int offset = 0;
    IntMat acc(total.rank(), cp.module.rank());
    for (int x = 0; x < Y.base.size; ++x) {
        const ModuleHom& proj = cp.projections[static_cast<size_t>(x)];
        const int fr = F.fibres[static_cast<size_t>(x)].rank();
        IntMat embed(total.rank(), fr);
        for (int k = 0; k < Y.fibres[static_cast<size_t>(x)].size; ++k)
            for (int g = 0; g < gsize; ++g)
                embed.at((offset + k) * gsize + g, k * gsize + g) = 1;
        IntMat term = mat_mul(embed, proj.matrix);
        for (int r = 0; r < acc.rows; ++r)
            for (int cc = 0; cc < acc.cols; ++cc)
                acc.at(r, cc) = checked_add(acc.at(r, cc), term.at(r, cc));
        offset += Y.fibres[static_cast<size_t>(x)].size;
    }
    return make_module_hom(cp.module, total, std::move(acc));
}

FourSquareCheck check_four_square_free_forget(const FiniteRing& ring, const SpaceBundle& Y,
                                              const std::vector<ModuleHom>& sample_homs)
{
    FourSquareCheck out;
    ModuleHom iso = free_coproduct_iso(ring, Y);
    out.left_square_ok = is_bijective_module_hom(iso);

    // right adjoints: forget-then-pointify vs pointify-then-fibrewise-forget
    out.right_square_ok = true;
    for (const ModuleHom& f : sample_homs) {
        // route 1: global underlying function of f
        std::vector<int> route1;
        for (u64 i = 0; i < f.domain.order(); ++i)
            route1.push_back(static_cast<int>(
                module_element_index(f.codomain, f.apply(module_element(f.domain, i)))));
        // route 2: the same data assembled fibrewise over the one-point base
        ModuleBundle dom_pt = constant_module_bundle(f.domain, FiniteSpace{1});
        ModuleBundle cod_pt = constant_module_bundle(f.codomain, FiniteSpace{1});
        ModuleBundleMap pt = make_module_bundle_map(dom_pt, cod_pt, identity_map(FiniteSpace{1}),
                                                    {f});
        std::vector<int> route2;
        for (u64 i = 0; i < dom_pt.fibres[0].order(); ++i)
            route2.push_back(static_cast<int>(module_element_index(
                cod_pt.fibres[0], pt.fibre_homs[0].apply(module_element(dom_pt.fibres[0], i)))));
        if (route1 != route2) out.right_square_ok = false;
    }
    return out;
}

} // namespace probund
