#pragma once

#include <string>

#include "json.hpp"
#include "probund/internalcat.hpp"
#include "probund/protower.hpp"

namespace probund {

using json = nlohmann::json;

// Serializers follow the wire schemas documented in the README; plain
// nlohmann::json keeps keys sorted, so dumps are byte-stable.

json to_json(const FiniteSpace& X);
FiniteSpace space_from_json(const json& j);

json to_json(const SpaceMap& f);
SpaceMap space_map_from_json(const json& j);

json to_json(const FiniteGroup& G);
FiniteGroup group_from_json(const json& j);

json to_json(const GroupHom& h);
GroupHom group_hom_from_json(const json& j);

json to_json(const FiniteRing& R);
FiniteRing ring_from_json(const json& j);

json to_json(const FiniteModule& M);
FiniteModule module_from_json(const json& j);
/// Accepts either a full module object or bare {"invariant_factors": [...]}
/// with the ring supplied by the caller.
FiniteModule module_from_json(const json& j, const FiniteRing& default_ring);

json to_json(const ModuleHom& h);

json to_json(const IntMat& m);
IntMat intmat_from_json(const json& j);

json to_json(const SpaceBundle& B);
json to_json(const GroupBundle& B);
json to_json(const ModuleBundle& B);
SpaceBundle space_bundle_from_json(const json& j);
GroupBundle group_bundle_from_json(const json& j);
ModuleBundle module_bundle_from_json(const json& j);

json to_json(const FiniteInternalCategory& A);
FiniteInternalCategory internal_category_from_json(const json& j);

json to_json(const InternalGroupDiagram& P);
InternalGroupDiagram internal_group_diagram_from_json(const json& j);

json to_json(const AmalgamData& D);
AmalgamData amalgam_from_json(const json& j);

json functor_to_json(const FibrewiseFunctor& F);
FibrewiseFunctor functor_from_json(const json& j);

/// Registered tower families: {"family":"constant-group","group":...},
/// {"family":"Zmod-chain","base":p}, {"family":"converging-to-one","groups":[...]}.
/// Arbitrary user code is never accepted as a generator.
GroupTower group_tower_from_json(const json& j, int max_depth);
BundleTower bundle_tower_from_json(const json& j, int max_depth);

/// FNV-1a over the compact dump; stable across runs and platforms.
std::string json_digest(const json& j);

} // namespace probund
