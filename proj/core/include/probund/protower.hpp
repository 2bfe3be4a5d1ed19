#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>

#include "probund/bundle.hpp"

namespace probund {

/// Depth-indexed inverse system: level(d) objects with transitions
/// level(d+1) -> level(d). Levels come from a pure generator and are
/// memoized behind a lock, so concurrent reads replay deterministically.
template <class Obj, class Mor>
class Tower {
public:
    Tower(std::function<Obj(int)> level_fn, std::function<Mor(int)> transition_fn, int max_depth)
        : state_(std::make_shared<State>())
    {
        state_->level_fn = std::move(level_fn);
        state_->transition_fn = std::move(transition_fn);
        state_->max_depth = max_depth;
    }

    int max_depth() const { return state_->max_depth; }

    Obj level(int d) const
    {
        require(d >= 0 && d <= state_->max_depth, "tower depth out of range");
        std::lock_guard<std::mutex> lock(state_->mu);
        auto it = state_->levels.find(d);
        if (it == state_->levels.end())
            it = state_->levels.emplace(d, state_->level_fn(d)).first;
        return it->second;
    }

    /// Transition level(d+1) -> level(d).
    Mor transition(int d) const
    {
        require(d >= 0 && d + 1 <= state_->max_depth, "tower depth out of range");
        std::lock_guard<std::mutex> lock(state_->mu);
        auto it = state_->transitions.find(d);
        if (it == state_->transitions.end())
            it = state_->transitions.emplace(d, state_->transition_fn(d)).first;
        return it->second;
    }

private:
    struct State {
        std::function<Obj(int)> level_fn;
        std::function<Mor(int)> transition_fn;
        int max_depth = 0;
        mutable std::mutex mu;
        std::map<int, Obj> levels;
        std::map<int, Mor> transitions;
    };
    std::shared_ptr<State> state_;
};

using SpaceTower = Tower<FiniteSpace, SpaceMap>;
using GroupTower = Tower<FiniteGroup, GroupHom>;
using ModuleTower = Tower<FiniteModule, ModuleHom>;
using BundleTower = Tower<GroupBundle, GroupBundleMap>;

/// Levelwise functor extension: new level(d) = fo(level(d)), new transitions
/// fm(transition(d)); evaluation stays lazy.
template <class Obj2, class Mor2, class Obj, class Mor, class Fo, class Fm>
Tower<Obj2, Mor2> map_tower(const Tower<Obj, Mor>& t, Fo fo, Fm fm)
{
    return Tower<Obj2, Mor2>([t, fo](int d) { return fo(t.level(d)); },
                             [t, fm](int d) { return fm(t.transition(d)); }, t.max_depth());
}

/// Registered tower families.
GroupTower constant_group_tower(const FiniteGroup& G, int max_depth);
/// level d = Z/p^(d+1) with reduction transitions; p^(max_depth+1) <= 128.
GroupTower zmod_chain_tower(i64 p, int max_depth);
/// "Converging to 1": at depth d all but the first d fibres collapse to the
/// trivial group; transitions collapse one more fibre.
BundleTower converging_to_one_tower(const std::vector<FiniteGroup>& groups, int max_depth);

/// Levelwise extensions for the registered functor families.
GroupTower extend_abelianisation(const GroupTower& t);
ModuleTower extend_free_module(const SpaceTower& t, const FiniteRing& ring);
ModuleTower extend_module_functor(const FibrewiseFunctor& F, const ModuleTower& t);
/// Free-module hom induced by a space map (basis elements follow the map).
ModuleHom free_module_hom(const FiniteRing& ring, const SpaceMap& f);

/// Image count of Hom(level(d), T) inside Hom(level(max_depth), T) under
/// precomposition with the composite transition, for each probe and each
/// d = 0..depth. Deeper identification can only merge homs, so the counts
/// observed here are the finite observables of the limit.
struct FingerprintReport {
    std::vector<std::vector<u64>> counts; // per probe, per depth 0..depth
    std::vector<bool> stabilized;         // last two counts equal, per probe
};
FingerprintReport tower_limit_fingerprint(const GroupTower& t,
                                          const std::vector<FiniteGroup>& probes, int depth);

// ---- relative adjunctions ----------------------------------------------------

/// Witnessed bijection Hom_D(L c, d) = Hom_C(c, R d), checked both ways.
struct AdjunctionCheck {
    bool bijection_ok = false;
    u64 left_count = 0;
    u64 right_count = 0;
};

/// L = free module over a Zmod ring, R = forget to finite spaces.
AdjunctionCheck check_free_forget_adjunction(const FiniteRing& ring, FiniteSpace c,
                                             const FiniteModule& d);

/// L = abelianisation, R = the inclusion of abelian groups into groups.
AdjunctionCheck check_abelianisation_adjunction(const FiniteGroup& c, const FiniteGroup& d);

// ---- the four-functor square -------------------------------------------------

/// Both composite routes around the (free module, forget) square: the left
/// adjoints up to an explicit isomorphism on a space bundle, the right
/// adjoints on the nose on sampled modules and homs.
struct FourSquareCheck {
    bool left_square_ok = false;
    bool right_square_ok = false;
};
FourSquareCheck check_four_square_free_forget(const FiniteRing& ring, const SpaceBundle& Y,
                                              const std::vector<ModuleHom>& sample_homs);

/// The explicit canonical isomorphism (+)_x R[Y(x)] -> R[total(Y)] used by
/// the left square and the free-module-coproduct theorem.
ModuleHom free_coproduct_iso(const FiniteRing& ring, const SpaceBundle& Y);

} // namespace probund
