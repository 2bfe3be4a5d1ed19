#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "probund/finmod.hpp"

namespace probund {

/// Bundles of finite objects over a finite base: one fibre per base point,
/// total space Sum_x fibre(x), morphisms acting fibrewise over a base map.
struct SpaceBundle {
    FiniteSpace base;
    std::vector<FiniteSpace> fibres;

    int total_size() const;
};
SpaceBundle make_space_bundle(FiniteSpace base, std::vector<FiniteSpace> fibres);
/// Bundle of the fibres of p (points of the total space reordered
/// lexicographically by (base point, fibre position)).
SpaceBundle bundle_of_map(const SpaceMap& p);
/// Projection total -> base with the same lexicographic point order.
SpaceMap projection_of_bundle(const SpaceBundle& B);

struct GroupBundle {
    FiniteSpace base;
    std::vector<FiniteGroup> fibres;

    u64 total_order() const;
};
GroupBundle make_group_bundle(FiniteSpace base, std::vector<FiniteGroup> fibres);
GroupBundle constant_group_bundle(const FiniteGroup& G, FiniteSpace X);

struct ModuleBundle {
    FiniteSpace base;
    FiniteRing ring;
    std::vector<FiniteModule> fibres;

    u64 total_order() const;
    ModuleSide side() const;
};
ModuleBundle make_module_bundle(FiniteSpace base, FiniteRing ring, std::vector<FiniteModule> fibres);
ModuleBundle constant_module_bundle(const FiniteModule& M, FiniteSpace X);

struct SpaceBundleMap {
    SpaceMap base_map;
    std::vector<SpaceMap> fibre_maps; // per domain point x: fibre(x) -> fibre(base_map(x))
};
struct GroupBundleMap {
    SpaceMap base_map;
    std::vector<GroupHom> fibre_homs;
};
struct ModuleBundleMap {
    SpaceMap base_map;
    std::vector<ModuleHom> fibre_homs;
};
/// Morphism of opposite variance: base map runs from the codomain's base
/// back to the domain's base, fibre maps P(b(y)) -> Q(y) over each y.
struct OppositeModuleBundleMap {
    SpaceMap base_map;
    std::vector<ModuleHom> fibre_homs;
};

GroupBundleMap make_group_bundle_map(const GroupBundle& dom, const GroupBundle& cod,
                                     SpaceMap base_map, std::vector<GroupHom> fibre_homs);
ModuleBundleMap make_module_bundle_map(const ModuleBundle& dom, const ModuleBundle& cod,
                                       SpaceMap base_map, std::vector<ModuleHom> fibre_homs);
OppositeModuleBundleMap make_opposite_bundle_map(const ModuleBundle& dom, const ModuleBundle& cod,
                                                 SpaceMap base_map,
                                                 std::vector<ModuleHom> fibre_homs);
bool is_valid_group_bundle_map(const GroupBundle& dom, const GroupBundle& cod,
                               const GroupBundleMap& m);
bool is_valid_module_bundle_map(const ModuleBundle& dom, const ModuleBundle& cod,
                                const ModuleBundleMap& m);
bool is_valid_opposite_bundle_map(const ModuleBundle& dom, const ModuleBundle& cod,
                                  const OppositeModuleBundleMap& m);

/// Composition over a fixed base (identity base maps).
ModuleBundleMap compose_over_base(const ModuleBundleMap& g, const ModuleBundleMap& f);

GroupBundleMap identity_group_bundle_map(const GroupBundle& B);
ModuleBundleMap identity_module_bundle_map(const ModuleBundle& B);

/// Reindex base points by a bijection perm (new point = perm[old point]).
GroupBundle permute_base(const GroupBundle& B, const std::vector<int>& perm);
ModuleBundle permute_base(const ModuleBundle& B, const std::vector<int>& perm);
SpaceBundle permute_base(const SpaceBundle& B, const std::vector<int>& perm);

/// Internal coproduct of a module bundle: the biproduct of the fibres in
/// base-point order, with its injections.
struct ModuleCoproduct {
    FiniteModule module;
    std::vector<ModuleHom> injections;
    std::vector<ModuleHom> projections;
};
ModuleCoproduct internal_coproduct_modules(const ModuleBundle& B);

// ---- the fibrewise functor registry ----------------------------------------

enum class BundleKind { space, group, module };

/// Closed registry of fibrewise functors. Each entry knows its input/output
/// kinds, variance, and additivity, so theorem checkers can validate their
/// own hypotheses instead of trusting callers.
struct FibrewiseFunctor {
    enum class Id {
        identity,
        abelianisation,   // groups -> modules over Zmod(ring)
        free_module,      // spaces -> modules over ring
        tensor_with,      // right modules -> modules over Zmod base
        tor_with,         // right modules -> modules over Zmod base
        induce,           // kH-modules -> kG-modules along inclusion
        restrict_subgroup,// kG-modules -> kH-modules along inclusion
        restrict_base,    // modules -> modules over Zmod base
        pontryagin_dual,  // modules -> modules, contravariant
    };

    Id id = Id::identity;
    BundleKind kind_for_identity = BundleKind::module;
    std::optional<FiniteRing> ring;          // abelianisation / free_module target
    std::optional<FiniteModule> coefficient; // tensor_with / tor_with
    int tor_index = 0;
    std::optional<GroupHom> inclusion;       // induce / restrict_subgroup

    BundleKind input_kind() const;
    BundleKind output_kind() const;
    bool additive() const;
    bool contravariant() const { return id == Id::pontryagin_dual; }
    std::string name() const;
};

FibrewiseFunctor identity_functor(BundleKind kind);
FibrewiseFunctor abelianisation_functor(FiniteRing target_zmod);
FibrewiseFunctor free_module_functor(FiniteRing ring);
FibrewiseFunctor tensor_functor(FiniteModule coefficient);
FibrewiseFunctor tor_functor(int i, FiniteModule coefficient);
FibrewiseFunctor induction_functor(GroupHom inclusion, i64 base_n);
FibrewiseFunctor restriction_functor(GroupHom inclusion);
FibrewiseFunctor restriction_to_base_functor();
FibrewiseFunctor dual_functor();
/// Looks a functor up by its registry name ("tor" etc.); throws on unknown ids.
FibrewiseFunctor functor_by_name(const std::string& id, std::optional<FiniteRing> ring,
                                 std::optional<FiniteModule> coefficient, int tor_index,
                                 std::optional<GroupHom> inclusion);

/// Fibrewise application to single objects.
FiniteModule apply_functor(const FibrewiseFunctor& F, const FiniteModule& M);
FiniteModule apply_functor_to_group(const FibrewiseFunctor& F, const FiniteGroup& G);
FiniteModule apply_functor_to_space(const FibrewiseFunctor& F, FiniteSpace X);
/// Covariant action on module homs (throws for the contravariant dual).
ModuleHom apply_functor_hom(const FibrewiseFunctor& F, const ModuleHom& h);

struct AnyBundle {
    BundleKind kind;
    std::optional<SpaceBundle> space;
    std::optional<GroupBundle> group;
    std::optional<ModuleBundle> module;
};
AnyBundle any_bundle(SpaceBundle B);
AnyBundle any_bundle(GroupBundle B);
AnyBundle any_bundle(ModuleBundle B);

/// Same base, fibre over x becomes F(fibre(x)).
AnyBundle lift_functor(const FibrewiseFunctor& F, const AnyBundle& B);
ModuleBundle lift_functor_to_modules(const FibrewiseFunctor& F, const AnyBundle& B);

/// Fibrewise action on morphisms; base map preserved (covariant functors).
ModuleBundleMap lift_functor_map(const FibrewiseFunctor& F, const ModuleBundle& dom,
                                 const ModuleBundle& cod, const ModuleBundleMap& m);

/// Abelianised group bundle with its per-fibre dictionaries (the lift of the
/// abelianisation functor, remembering how fibres were identified).
struct AbelianisedBundle {
    ModuleBundle bundle;
    std::vector<AbelianModuleBridge> bridges;
    std::vector<GroupHom> quotients; // fibre(x) ->> fibre(x)^ab as groups
};
AbelianisedBundle abelianise_bundle(const GroupBundle& B);

// ---- Pontryagin duality for bundles -----------------------------------------

ModuleBundle dualise_bundle(const ModuleBundle& B);
/// Contravariant: a bundle map (Q,Y) -> (P,X) yields an opposite-variance map
/// (P^dual, X) -> (Q^dual, Y) with the same underlying base map Y -> X.
OppositeModuleBundleMap dualise_bundle_map(const ModuleBundle& dom, const ModuleBundle& cod,
                                           const ModuleBundleMap& m);

// ---- fibrewise kernels / cokernels over a fixed base -------------------------

struct ModuleBundleKernel {
    ModuleBundle bundle;
    ModuleBundleMap inclusion;
};
ModuleBundleKernel kernel_bundle(const ModuleBundle& dom, const ModuleBundle& cod,
                                 const ModuleBundleMap& m);
struct ModuleBundleCokernel {
    ModuleBundle bundle;
    ModuleBundleMap projection;
};
ModuleBundleCokernel cokernel_bundle(const ModuleBundle& dom, const ModuleBundle& cod,
                                     const ModuleBundleMap& m);

// ---- hom-set enumeration between bundles -------------------------------------

u64 count_module_bundle_maps(const ModuleBundle& A, const ModuleBundle& B);
std::vector<ModuleBundleMap> enumerate_module_bundle_maps(const ModuleBundle& A,
                                                          const ModuleBundle& B,
                                                          u64 cap = 1u << 20);
u64 count_opposite_bundle_maps(const ModuleBundle& A, const ModuleBundle& B);
std::vector<OppositeModuleBundleMap> enumerate_opposite_bundle_maps(const ModuleBundle& A,
                                                                    const ModuleBundle& B,
                                                                    u64 cap = 1u << 20);

} // namespace probund
