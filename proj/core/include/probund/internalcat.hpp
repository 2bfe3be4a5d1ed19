#pragma once

#include <map>
#include <variant>

#include "probund/bundle.hpp"

namespace probund {

/// Category internal to finite spaces: object space A0, arrow space A1,
/// source/target/identity maps and an explicit composition table on
/// composable pairs. Validation is exhaustive.
struct FiniteInternalCategory {
    FiniteSpace objects;                   // A0
    FiniteSpace arrows;                    // A1
    SpaceMap source;                       // d0 : A1 -> A0
    SpaceMap target;                       // d1 : A1 -> A0
    SpaceMap ident;                        // i : A0 -> A1
    std::map<std::pair<int, int>, int> comp; // (f, g) -> g after f, for d1(f) = d0(g)

    int compose_arrows(int f, int g) const; // g after f
    bool is_identity_arrow(int f) const;
};

FiniteInternalCategory make_internal_category(FiniteSpace objects, FiniteSpace arrows,
                                              SpaceMap source, SpaceMap target, SpaceMap ident,
                                              std::map<std::pair<int, int>, int> comp);

/// A0 = A1 = X, everything the identity.
FiniteInternalCategory discrete_category(FiniteSpace X);

/// Cone over X: objects X + {*}, arrows = one edge * -> x per x plus
/// identities; the only compositions involve identities.
FiniteInternalCategory cone_graph_category(FiniteSpace X);

/// Parallel pair a => b with identities (coequaliser shape).
FiniteInternalCategory parallel_pair_category();

/// Span b <- a -> c with identities (pushout shape).
FiniteInternalCategory span_category();

/// Group-valued internal diagram: a group bundle over A0 together with one
/// homomorphism per arrow, functorial on the nose.
struct InternalGroupDiagram {
    FiniteInternalCategory category;
    GroupBundle bundle;           // over A0
    std::vector<GroupHom> action; // per arrow f: fibre(d0 f) -> fibre(d1 f)
};

InternalGroupDiagram make_internal_group_diagram(FiniteInternalCategory category, GroupBundle bundle,
                                                 std::vector<GroupHom> action);

/// Cone-graph amalgam data: a common group H injected into each vertex group.
struct AmalgamData {
    FiniteSpace points;                     // X
    FiniteGroup amalgam;                    // H
    std::vector<FiniteGroup> vertex_groups; // per x in X
    std::vector<GroupHom> theta;            // injective H -> vertex_groups[x]
};

AmalgamData make_amalgam_data(FiniteSpace points, FiniteGroup amalgam,
                              std::vector<FiniteGroup> vertex_groups, std::vector<GroupHom> theta);

/// The induced diagram over cone_graph_category(X): fibres are the vertex
/// groups plus H over the cone point, edge x acts by theta_x.
InternalGroupDiagram amalgam_to_diagram(const AmalgamData& D);

/// One homomorphism per component (per base point / vertex), jointly
/// representing a map out of a colimit.
using HomTuple = std::vector<GroupHom>;

/// A (generally infinite, profinite) group represented by its universal
/// property only: defining data plus an evaluator for Hom(-, T) against
/// finite test groups T. Tuples list one component hom per point of the
/// defining data, in point order.
struct ProGroupByHoms {
    struct CoproductData {
        GroupBundle bundle;
    };
    struct ColimitData {
        InternalGroupDiagram diagram;
    };
    struct FiniteData {
        FiniteGroup group;
    };
    std::variant<CoproductData, ColimitData, AmalgamData, FiniteData> data;

    std::vector<HomTuple> homs_to(const FiniteGroup& T) const;
    u64 count_homs_to(const FiniteGroup& T) const;
};

ProGroupByHoms internal_coproduct_groups(const GroupBundle& B);
ProGroupByHoms colimit_via_coequaliser(const FiniteInternalCategory& A, const InternalGroupDiagram& P);
ProGroupByHoms amalgam_progroup(const AmalgamData& D);
ProGroupByHoms finite_progroup(const FiniteGroup& G);

/// All tuples (beta_*, beta_x...) with beta_x o theta_x = beta_* (tuple
/// component 0 is beta_*, then the vertices in order).
std::vector<HomTuple> amalgam_homs(const AmalgamData& D, const FiniteGroup& T);

/// Postcomposition of every component with t: T -> T'.
HomTuple postcompose_tuple(const HomTuple& tuple, const GroupHom& t);

} // namespace probund
