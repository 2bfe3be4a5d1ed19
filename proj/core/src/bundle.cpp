#include "probund/bundle.hpp"

#include <algorithm>
#include <numeric>

namespace probund {

int SpaceBundle::total_size() const
{
    int s = 0;
    for (const auto& f : fibres) s += f.size;
    return s;
}

SpaceBundle make_space_bundle(FiniteSpace base, std::vector<FiniteSpace> fibres)
{
    require(static_cast<int>(fibres.size()) == base.size, "one fibre per base point required");
    return SpaceBundle{base, std::move(fibres)};
}

SpaceBundle bundle_of_map(const SpaceMap& p)
{
    std::vector<FiniteSpace> fibres;
    for (int x = 0; x < p.codomain.size; ++x)
        fibres.push_back(FiniteSpace{static_cast<int>(fibre(p, x).size())});
    return SpaceBundle{p.codomain, std::move(fibres)};
}

SpaceMap projection_of_bundle(const SpaceBundle& B)
{
    std::vector<int> values;
    for (int x = 0; x < B.base.size; ++x)
        values.insert(values.end(), static_cast<size_t>(B.fibres[static_cast<size_t>(x)].size), x);
    return make_space_map(FiniteSpace{B.total_size()}, B.base, std::move(values));
}

u64 GroupBundle::total_order() const
{
    u64 s = 0;
    for (const auto& f : fibres) s += static_cast<u64>(f.order);
    return s;
}

GroupBundle make_group_bundle(FiniteSpace base, std::vector<FiniteGroup> fibres)
{
    require(static_cast<int>(fibres.size()) == base.size, "one fibre per base point required");
    return GroupBundle{base, std::move(fibres)};
}

GroupBundle constant_group_bundle(const FiniteGroup& G, FiniteSpace X)
{
    return GroupBundle{X, std::vector<FiniteGroup>(static_cast<size_t>(X.size), G)};
}

u64 ModuleBundle::total_order() const
{
    u64 s = 0;
    for (const auto& f : fibres) s += f.order();
    return s;
}

ModuleSide ModuleBundle::side() const
{
    return fibres.empty() ? ModuleSide::left : fibres[0].side;
}

ModuleBundle make_module_bundle(FiniteSpace base, FiniteRing ring, std::vector<FiniteModule> fibres)
{
    require(static_cast<int>(fibres.size()) == base.size, "one fibre per base point required");
    for (const auto& f : fibres) {
        require(same_ring(f.ring, ring), "module bundle fibres must share the ring");
        require(f.side == fibres[0].side, "module bundle fibres must share the side");
    }
    return ModuleBundle{base, std::move(ring), std::move(fibres)};
}

ModuleBundle constant_module_bundle(const FiniteModule& M, FiniteSpace X)
{
    return ModuleBundle{X, M.ring, std::vector<FiniteModule>(static_cast<size_t>(X.size), M)};
}

bool is_valid_group_bundle_map(const GroupBundle& dom, const GroupBundle& cod, const GroupBundleMap& m)
{
    if (m.base_map.domain != dom.base || m.base_map.codomain != cod.base) return false;
    if (static_cast<int>(m.fibre_homs.size()) != dom.base.size) return false;
    for (int x = 0; x < dom.base.size; ++x) {
        const GroupHom& h = m.fibre_homs[static_cast<size_t>(x)];
        if (!h.domain.same_table(dom.fibres[static_cast<size_t>(x)])) return false;
        if (!h.codomain.same_table(cod.fibres[static_cast<size_t>(m.base_map.apply(x))])) return false;
        if (!is_valid_hom(h.domain, h.codomain, h.values)) return false;
    }
    return true;
}

GroupBundleMap make_group_bundle_map(const GroupBundle& dom, const GroupBundle& cod,
                                     SpaceMap base_map, std::vector<GroupHom> fibre_homs)
{
    GroupBundleMap m{std::move(base_map), std::move(fibre_homs)};
    require(is_valid_group_bundle_map(dom, cod, m), "not a bundle map");
    return m;
}

bool is_valid_module_bundle_map(const ModuleBundle& dom, const ModuleBundle& cod,
                                const ModuleBundleMap& m)
{
    if (m.base_map.domain != dom.base || m.base_map.codomain != cod.base) return false;
    if (static_cast<int>(m.fibre_homs.size()) != dom.base.size) return false;
    for (int x = 0; x < dom.base.size; ++x) {
        const ModuleHom& h = m.fibre_homs[static_cast<size_t>(x)];
        if (h.domain.factors != dom.fibres[static_cast<size_t>(x)].factors) return false;
        if (h.codomain.factors != cod.fibres[static_cast<size_t>(m.base_map.apply(x))].factors)
            return false;
        if (!is_valid_module_hom(dom.fibres[static_cast<size_t>(x)],
                                 cod.fibres[static_cast<size_t>(m.base_map.apply(x))], h.matrix))
            return false;
    }
    return true;
}

ModuleBundleMap make_module_bundle_map(const ModuleBundle& dom, const ModuleBundle& cod,
                                       SpaceMap base_map, std::vector<ModuleHom> fibre_homs)
{
    ModuleBundleMap m{std::move(base_map), std::move(fibre_homs)};
    require(is_valid_module_bundle_map(dom, cod, m), "not a bundle map");
    return m;
}

bool is_valid_opposite_bundle_map(const ModuleBundle& dom, const ModuleBundle& cod,
                                  const OppositeModuleBundleMap& m)
{
    // base map runs cod.base -> dom.base; fibre hom over y: dom(b(y)) -> cod(y)
    if (m.base_map.domain != cod.base || m.base_map.codomain != dom.base) return false;
    if (static_cast<int>(m.fibre_homs.size()) != cod.base.size) return false;
    for (int y = 0; y < cod.base.size; ++y) {
        const ModuleHom& h = m.fibre_homs[static_cast<size_t>(y)];
        if (h.domain.factors != dom.fibres[static_cast<size_t>(m.base_map.apply(y))].factors)
            return false;
        if (h.codomain.factors != cod.fibres[static_cast<size_t>(y)].factors) return false;
        if (!is_valid_module_hom(dom.fibres[static_cast<size_t>(m.base_map.apply(y))],
                                 cod.fibres[static_cast<size_t>(y)], h.matrix))
            return false;
    }
    return true;
}

OppositeModuleBundleMap make_opposite_bundle_map(const ModuleBundle& dom, const ModuleBundle& cod,
                                                 SpaceMap base_map, std::vector<ModuleHom> fibre_homs)
{
    OppositeModuleBundleMap m{std::move(base_map), std::move(fibre_homs)};
    require(is_valid_opposite_bundle_map(dom, cod, m), "not an opposite bundle map");
    return m;
}

ModuleBundleMap compose_over_base(const ModuleBundleMap& g, const ModuleBundleMap& f)
{
    require(f.base_map.values == identity_map(f.base_map.domain).values &&
                g.base_map.values == identity_map(g.base_map.domain).values,
            "composition over a fixed base needs identity base maps");
    std::vector<ModuleHom> homs;
    for (size_t x = 0; x < f.fibre_homs.size(); ++x)
        homs.push_back(compose(g.fibre_homs[x], f.fibre_homs[x]));
    return ModuleBundleMap{f.base_map, std::move(homs)};
}

GroupBundleMap identity_group_bundle_map(const GroupBundle& B)
{
    std::vector<GroupHom> homs;
    for (const auto& f : B.fibres) homs.push_back(identity_hom(f));
    return GroupBundleMap{identity_map(B.base), std::move(homs)};
}

ModuleBundleMap identity_module_bundle_map(const ModuleBundle& B)
{
    std::vector<ModuleHom> homs;
    for (const auto& f : B.fibres) homs.push_back(identity_module_hom(f));
    return ModuleBundleMap{identity_map(B.base), std::move(homs)};
}

namespace {

void check_perm(const std::vector<int>& perm, int n)
{
    require(static_cast<int>(perm.size()) == n, "permutation size mismatch");
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int v : perm) {
        require(v >= 0 && v < n && !seen[static_cast<size_t>(v)], "not a permutation");
        seen[static_cast<size_t>(v)] = 1;
    }
}

} // namespace

GroupBundle permute_base(const GroupBundle& B, const std::vector<int>& perm)
{
    check_perm(perm, B.base.size);
    std::vector<FiniteGroup> fibres(B.fibres.size(), trivial_group());
    for (int x = 0; x < B.base.size; ++x)
        fibres[static_cast<size_t>(perm[static_cast<size_t>(x)])] = B.fibres[static_cast<size_t>(x)];
    return GroupBundle{B.base, std::move(fibres)};
}

ModuleBundle permute_base(const ModuleBundle& B, const std::vector<int>& perm)
{
    check_perm(perm, B.base.size);
    std::vector<FiniteModule> fibres(B.fibres.size(), zero_module(B.ring, B.side()));
    for (int x = 0; x < B.base.size; ++x)
        fibres[static_cast<size_t>(perm[static_cast<size_t>(x)])] = B.fibres[static_cast<size_t>(x)];
    return ModuleBundle{B.base, B.ring, std::move(fibres)};
}

SpaceBundle permute_base(const SpaceBundle& B, const std::vector<int>& perm)
{
    check_perm(perm, B.base.size);
    std::vector<FiniteSpace> fibres(B.fibres.size());
    for (int x = 0; x < B.base.size; ++x)
        fibres[static_cast<size_t>(perm[static_cast<size_t>(x)])] = B.fibres[static_cast<size_t>(x)];
    return SpaceBundle{B.base, std::move(fibres)};
}

ModuleCoproduct internal_coproduct_modules(const ModuleBundle& B)
{
    DirectSum s = direct_sum(B.fibres, B.ring, B.side());
    return ModuleCoproduct{std::move(s.module), std::move(s.injections), std::move(s.projections)};
}

// ---- registry ---------------------------------------------------------------

BundleKind FibrewiseFunctor::input_kind() const
{
    switch (id) {
        case Id::identity: return kind_for_identity;
        case Id::abelianisation: return BundleKind::group;
        case Id::free_module: return BundleKind::space;
        default: return BundleKind::module;
    }
}

BundleKind FibrewiseFunctor::output_kind() const
{
    return id == Id::identity ? kind_for_identity : BundleKind::module;
}

bool FibrewiseFunctor::additive() const
{
    switch (id) {
        case Id::abelianisation:
        case Id::free_module:
        case Id::identity: return false;
        default: return true;
    }
}

std::string FibrewiseFunctor::name() const
{
    switch (id) {
        case Id::identity: return "identity";
        case Id::abelianisation: return "abelianisation";
        case Id::free_module: return "free_module";
        case Id::tensor_with: return "tensor";
        case Id::tor_with: return "tor";
        case Id::induce: return "induce";
        case Id::restrict_subgroup: return "restrict";
        case Id::restrict_base: return "restrict_base";
        case Id::pontryagin_dual: return "dual";
    }
    return "?";
}

FibrewiseFunctor identity_functor(BundleKind kind)
{
    FibrewiseFunctor F;
    F.id = FibrewiseFunctor::Id::identity;
    F.kind_for_identity = kind;
    return F;
}

FibrewiseFunctor abelianisation_functor(FiniteRing target_zmod)
{
    require(target_zmod.is_zmod(), "abelianisation lands over a Zmod ring");
    FibrewiseFunctor F;
    F.id = FibrewiseFunctor::Id::abelianisation;
    F.ring = std::move(target_zmod);
    return F;
}

FibrewiseFunctor free_module_functor(FiniteRing ring)
{
    FibrewiseFunctor F;
    F.id = FibrewiseFunctor::Id::free_module;
    F.ring = std::move(ring);
    return F;
}

FibrewiseFunctor tensor_functor(FiniteModule coefficient)
{
    FibrewiseFunctor F;
    F.id = FibrewiseFunctor::Id::tensor_with;
    F.coefficient = std::move(coefficient);
    return F;
}

FibrewiseFunctor tor_functor(int i, FiniteModule coefficient)
{
    require(i >= 0 && i <= 3, "tor index out of the configured range");
    FibrewiseFunctor F;
    F.id = FibrewiseFunctor::Id::tor_with;
    F.tor_index = i;
    F.coefficient = std::move(coefficient);
    return F;
}

FibrewiseFunctor induction_functor(GroupHom inclusion, i64 base_n)
{
    FibrewiseFunctor F;
    F.id = FibrewiseFunctor::Id::induce;
    F.inclusion = std::move(inclusion);
    F.ring = zmod_ring(base_n);
    return F;
}

FibrewiseFunctor restriction_functor(GroupHom inclusion)
{
    FibrewiseFunctor F;
    F.id = FibrewiseFunctor::Id::restrict_subgroup;
    F.inclusion = std::move(inclusion);
    return F;
}

FibrewiseFunctor restriction_to_base_functor()
{
    FibrewiseFunctor F;
    F.id = FibrewiseFunctor::Id::restrict_base;
    return F;
}

FibrewiseFunctor dual_functor()
{
    FibrewiseFunctor F;
    F.id = FibrewiseFunctor::Id::pontryagin_dual;
    return F;
}

FibrewiseFunctor functor_by_name(const std::string& id, std::optional<FiniteRing> ring,
                                 std::optional<FiniteModule> coefficient, int tor_index,
                                 std::optional<GroupHom> inclusion)
{
    if (id == "identity") return identity_functor(BundleKind::module);
    if (id == "abelianisation") {
        require(ring.has_value(), "abelianisation needs a target ring");
        return abelianisation_functor(*ring);
    }
    if (id == "free_module") {
        require(ring.has_value(), "free_module needs a ring");
        return free_module_functor(*ring);
    }
    if (id == "tensor") {
        require(coefficient.has_value(), "tensor needs a coefficient module");
        return tensor_functor(*coefficient);
    }
    if (id == "tor") {
        require(coefficient.has_value(), "tor needs a coefficient module");
        return tor_functor(tor_index, *coefficient);
    }
    if (id == "induce") {
        require(inclusion.has_value() && ring.has_value(), "induce needs an inclusion and base ring");
        return induction_functor(*inclusion, ring->n);
    }
    if (id == "restrict") {
        require(inclusion.has_value(), "restrict needs an inclusion");
        return restriction_functor(*inclusion);
    }
    if (id == "restrict_base") return restriction_to_base_functor();
    if (id == "dual") return dual_functor();
    throw Error("unknown functor id: " + id);
}

FiniteModule apply_functor(const FibrewiseFunctor& F, const FiniteModule& M)
{
    using Id = FibrewiseFunctor::Id;
    switch (F.id) {
        case Id::identity: return M;
        case Id::tensor_with: return tensor(M, *F.coefficient).module;
        case Id::tor_with: return tor(F.tor_index, M, *F.coefficient);
        case Id::induce: return induce(*F.inclusion, M, F.ring->n).module;
        case Id::restrict_subgroup: return restrict_to_subgroup(M, *F.inclusion);
        case Id::restrict_base: return restrict_to_base(M);
        case Id::pontryagin_dual: return pontryagin_dual(M);
        default: throw Error("functor kind mismatch: expected a module input");
    }
}

FiniteModule apply_functor_to_group(const FibrewiseFunctor& F, const FiniteGroup& G)
{
    require(F.id == FibrewiseFunctor::Id::abelianisation, "functor kind mismatch: expected groups");
    QuotientResult ab = abelianisation(G);
    AbelianModuleBridge bridge = abelian_group_as_module(ab.quotient, F.ring->n);
    return bridge.module;
}

FiniteModule apply_functor_to_space(const FibrewiseFunctor& F, FiniteSpace X)
{
    require(F.id == FibrewiseFunctor::Id::free_module, "functor kind mismatch: expected spaces");
    return free_module(*F.ring, X).module;
}

AnyBundle any_bundle(SpaceBundle B) { return AnyBundle{BundleKind::space, std::move(B), {}, {}}; }
AnyBundle any_bundle(GroupBundle B) { return AnyBundle{BundleKind::group, {}, std::move(B), {}}; }
AnyBundle any_bundle(ModuleBundle B) { return AnyBundle{BundleKind::module, {}, {}, std::move(B)}; }

ModuleBundle lift_functor_to_modules(const FibrewiseFunctor& F, const AnyBundle& B)
{
    require(F.input_kind() == B.kind, "functor kind mismatch");
    require(F.output_kind() == BundleKind::module, "functor does not land in modules");
    switch (B.kind) {
        case BundleKind::space: {
            std::vector<FiniteModule> fibres;
            for (const auto& f : B.space->fibres) fibres.push_back(apply_functor_to_space(F, f));
            FiniteRing out_ring = fibres.empty() ? *F.ring : fibres[0].ring;
            return make_module_bundle(B.space->base, out_ring, std::move(fibres));
        }
        case BundleKind::group: {
            std::vector<FiniteModule> fibres;
            for (const auto& f : B.group->fibres) fibres.push_back(apply_functor_to_group(F, f));
            FiniteRing out_ring = fibres.empty() ? *F.ring : fibres[0].ring;
            return make_module_bundle(B.group->base, out_ring, std::move(fibres));
        }
        case BundleKind::module: {
            std::vector<FiniteModule> fibres;
            for (const auto& f : B.module->fibres) fibres.push_back(apply_functor(F, f));
            FiniteRing out_ring = B.module->ring;
            if (!fibres.empty()) {
                out_ring = fibres[0].ring;
            } else {
                using Id = FibrewiseFunctor::Id;
                if (F.id == Id::tensor_with || F.id == Id::tor_with || F.id == Id::restrict_base)
                    out_ring = zmod_ring(B.module->ring.n);
                else if (F.id == Id::induce)
                    out_ring = group_algebra(F.ring->n, F.inclusion->codomain);
                else if (F.id == Id::restrict_subgroup)
                    out_ring = group_algebra(B.module->ring.n, F.inclusion->domain);
            }
            return make_module_bundle(B.module->base, out_ring, std::move(fibres));
        }
    }
    throw Error("unreachable");
}

AnyBundle lift_functor(const FibrewiseFunctor& F, const AnyBundle& B)
{
    if (F.id == FibrewiseFunctor::Id::identity) {
        require(F.input_kind() == B.kind, "functor kind mismatch");
        return B;
    }
    return any_bundle(lift_functor_to_modules(F, B));
}

ModuleHom apply_functor_hom(const FibrewiseFunctor& F, const ModuleHom& h)
{
    using Id = FibrewiseFunctor::Id;
    switch (F.id) {
        case Id::identity: return h;
        case Id::tensor_with: {
            TensorResult src = tensor(h.domain, *F.coefficient);
            TensorResult dst = tensor(h.codomain, *F.coefficient);
            return tensor_hom(h, *F.coefficient, src, dst);
        }
        case Id::tor_with: return tor_hom(F.tor_index, h, *F.coefficient);
        case Id::induce: return induce_hom(*F.inclusion, h, F.ring->n);
        case Id::restrict_subgroup:
            return make_module_hom(restrict_to_subgroup(h.domain, *F.inclusion),
                                   restrict_to_subgroup(h.codomain, *F.inclusion), h.matrix);
        case Id::restrict_base:
            return make_module_hom(restrict_to_base(h.domain), restrict_to_base(h.codomain),
                                   h.matrix);
        default: throw Error("functor has no covariant action on module homs");
    }
}

ModuleBundleMap lift_functor_map(const FibrewiseFunctor& F, const ModuleBundle& dom,
                                 const ModuleBundle& cod, const ModuleBundleMap& m)
{
    require(is_valid_module_bundle_map(dom, cod, m), "not a bundle map");
    require(!F.contravariant(), "contravariant functors produce opposite maps; use dualise_bundle_map");
    ModuleBundle Ldom = lift_functor_to_modules(F, any_bundle(dom));
    ModuleBundle Lcod = lift_functor_to_modules(F, any_bundle(cod));
    std::vector<ModuleHom> homs;
    for (int x = 0; x < dom.base.size; ++x)
        homs.push_back(apply_functor_hom(F, m.fibre_homs[static_cast<size_t>(x)]));
    return make_module_bundle_map(Ldom, Lcod, m.base_map, std::move(homs));
}

AbelianisedBundle abelianise_bundle(const GroupBundle& B)
{
    i64 L = 1;
    std::vector<QuotientResult> abs;
    for (const auto& f : B.fibres) {
        abs.push_back(abelianisation(f));
        for (int x = 0; x < abs.back().quotient.order; ++x)
            L = lcm_i64(L, abs.back().quotient.element_order(x));
    }
    L = std::max<i64>(2, L);
    AbelianisedBundle out;
    std::vector<FiniteModule> fibres;
    for (size_t x = 0; x < abs.size(); ++x) {
        AbelianModuleBridge bridge = abelian_group_as_module(abs[x].quotient, L);
        fibres.push_back(bridge.module);
        out.bridges.push_back(std::move(bridge));
        out.quotients.push_back(abs[x].projection);
    }
    out.bundle = make_module_bundle(B.base, zmod_ring(L), std::move(fibres));
    return out;
}

ModuleBundle dualise_bundle(const ModuleBundle& B)
{
    std::vector<FiniteModule> fibres;
    for (const auto& f : B.fibres) fibres.push_back(pontryagin_dual(f));
    return make_module_bundle(B.base, B.ring, std::move(fibres));
}

OppositeModuleBundleMap dualise_bundle_map(const ModuleBundle& dom, const ModuleBundle& cod,
                                           const ModuleBundleMap& m)
{
    // m : (Q, Y) -> (P, X) over a : Y -> X; the dual is an opposite map
    // (P^v, X) -> (Q^v, Y) with the same base map and fibrewise duals.
    require(is_valid_module_bundle_map(dom, cod, m), "not a bundle map");
    ModuleBundle Pd = dualise_bundle(cod);
    ModuleBundle Qd = dualise_bundle(dom);
    std::vector<ModuleHom> homs;
    for (int y = 0; y < dom.base.size; ++y)
        homs.push_back(dual_hom(m.fibre_homs[static_cast<size_t>(y)]));
    return make_opposite_bundle_map(Pd, Qd, m.base_map, std::move(homs));
}

ModuleBundleKernel kernel_bundle(const ModuleBundle& dom, const ModuleBundle& cod,
                                 const ModuleBundleMap& m)
{
    require(m.base_map.values == identity_map(dom.base).values,
            "fibrewise kernels need an identity base map");
    require(is_valid_module_bundle_map(dom, cod, m), "not a bundle map");
    std::vector<FiniteModule> fibres;
    std::vector<ModuleHom> incl;
    for (const auto& h : m.fibre_homs) {
        KernelResult k = kernel_of(h);
        fibres.push_back(k.kernel);
        incl.push_back(k.inclusion);
    }
    ModuleBundle K = make_module_bundle(dom.base, dom.ring, std::move(fibres));
    ModuleBundleMap inclusion = make_module_bundle_map(K, dom, identity_map(dom.base), std::move(incl));
    return ModuleBundleKernel{std::move(K), std::move(inclusion)};
}

ModuleBundleCokernel cokernel_bundle(const ModuleBundle& dom, const ModuleBundle& cod,
                                     const ModuleBundleMap& m)
{
    require(m.base_map.values == identity_map(dom.base).values,
            "fibrewise cokernels need an identity base map");
    require(is_valid_module_bundle_map(dom, cod, m), "not a bundle map");
    std::vector<FiniteModule> fibres;
    std::vector<ModuleHom> proj;
    for (const auto& h : m.fibre_homs) {
        CokernelResult c = cokernel_of(h);
        fibres.push_back(c.cokernel);
        proj.push_back(c.projection);
    }
    ModuleBundle C = make_module_bundle(cod.base, cod.ring, std::move(fibres));
    ModuleBundleMap projection = make_module_bundle_map(cod, C, identity_map(cod.base), std::move(proj));
    return ModuleBundleCokernel{std::move(C), std::move(projection)};
}

// ---- bundle hom-set enumeration ----------------------------------------------

namespace {

std::vector<SpaceMap> all_space_maps(FiniteSpace dom, FiniteSpace cod)
{
    std::vector<SpaceMap> out;
    if (dom.size == 0) {
        out.push_back(SpaceMap{dom, cod, {}});
        return out;
    }
    if (cod.size == 0) return out;
    std::vector<int> v(static_cast<size_t>(dom.size), 0);
    for (;;) {
        out.push_back(SpaceMap{dom, cod, v});
        int pos = 0;
        while (pos < dom.size) {
            if (++v[static_cast<size_t>(pos)] < cod.size) break;
            v[static_cast<size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == dom.size) break;
    }
    return out;
}

} // namespace

u64 count_module_bundle_maps(const ModuleBundle& A, const ModuleBundle& B)
{
    u64 total = 0;
    for (const auto& a : all_space_maps(A.base, B.base)) {
        u64 prod = 1;
        for (int x = 0; x < A.base.size; ++x)
            prod *= count_module_homs(A.fibres[static_cast<size_t>(x)],
                                      B.fibres[static_cast<size_t>(a.apply(x))]);
        total += prod;
    }
    return total;
}

std::vector<ModuleBundleMap> enumerate_module_bundle_maps(const ModuleBundle& A,
                                                          const ModuleBundle& B, u64 cap)
{
    require(count_module_bundle_maps(A, B) <= cap, "bundle hom set larger than enumeration cap");
    std::vector<ModuleBundleMap> out;
    for (const auto& a : all_space_maps(A.base, B.base)) {
        std::vector<std::vector<ModuleHom>> per_fibre;
        bool empty = false;
        for (int x = 0; x < A.base.size; ++x) {
            per_fibre.push_back(enumerate_module_homs(A.fibres[static_cast<size_t>(x)],
                                                      B.fibres[static_cast<size_t>(a.apply(x))], cap));
            if (per_fibre.back().empty()) empty = true;
        }
        if (empty) continue;
        std::vector<size_t> idx(per_fibre.size(), 0);
        for (;;) {
            std::vector<ModuleHom> homs;
            for (size_t x = 0; x < per_fibre.size(); ++x) homs.push_back(per_fibre[x][idx[x]]);
            out.push_back(ModuleBundleMap{a, std::move(homs)});
            size_t pos = 0;
            while (pos < idx.size()) {
                if (++idx[pos] < per_fibre[pos].size()) break;
                idx[pos] = 0;
                ++pos;
            }
            if (pos == idx.size()) break;
        }
    }
    return out;
}

u64 count_opposite_bundle_maps(const ModuleBundle& A, const ModuleBundle& B)
{
    u64 total = 0;
    for (const auto& b : all_space_maps(B.base, A.base)) {
        u64 prod = 1;
        for (int y = 0; y < B.base.size; ++y)
            prod *= count_module_homs(A.fibres[static_cast<size_t>(b.apply(y))],
                                      B.fibres[static_cast<size_t>(y)]);
        total += prod;
    }
    return total;
}

std::vector<OppositeModuleBundleMap> enumerate_opposite_bundle_maps(const ModuleBundle& A,
                                                                    const ModuleBundle& B, u64 cap)
{
    require(count_opposite_bundle_maps(A, B) <= cap, "bundle hom set larger than enumeration cap");
    std::vector<OppositeModuleBundleMap> out;
    for (const auto& b : all_space_maps(B.base, A.base)) {
        std::vector<std::vector<ModuleHom>> per_fibre;
        bool empty = false;
        for (int y = 0; y < B.base.size; ++y) {
            per_fibre.push_back(enumerate_module_homs(A.fibres[static_cast<size_t>(b.apply(y))],
                                                      B.fibres[static_cast<size_t>(y)], cap));
            if (per_fibre.back().empty()) empty = true;
        }
        if (empty) continue;
        std::vector<size_t> idx(per_fibre.size(), 0);
        for (;;) {
            std::vector<ModuleHom> homs;
            for (size_t y = 0; y < per_fibre.size(); ++y) homs.push_back(per_fibre[y][idx[y]]);
            out.push_back(OppositeModuleBundleMap{b, std::move(homs)});
            size_t pos = 0;
            while (pos < idx.size()) {
                if (++idx[pos] < per_fibre[pos].size()) break;
                idx[pos] = 0;
                ++pos;
            }
            if (pos == idx.size()) break;
        }
    }
    return out;
}

} // namespace probund
