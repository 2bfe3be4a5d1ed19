#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "probund/fingroup.hpp"
#include "probund/finspace.hpp"
#include "probund/intmat.hpp"

namespace probund {

/// Constructible finite rings: Z/n, or the group algebra (Z/n)[G].
/// Group algebras always carry a generator set for G so module actions can
/// be recorded one matrix per algebra generator.
struct FiniteRing {
    i64 n = 2;                          // additive characteristic, >= 2
    std::optional<FiniteGroup> group;   // engaged for group algebras

    bool is_zmod() const { return !group.has_value(); }
    int algebra_generators() const
    {
        return is_zmod() ? 0 : static_cast<int>(group->generators.size());
    }
    u64 size() const;
};

FiniteRing zmod_ring(i64 n);
FiniteRing group_algebra(i64 n, FiniteGroup G);
bool same_ring(const FiniteRing& a, const FiniteRing& b);

enum class ModuleSide { left, right };

/// Finite module in invariant-factor coordinates: the underlying abelian
/// group is +_i Z/factors[i] with factors[0] | factors[1] | ..., and each
/// ring algebra generator acts by an integer matrix on those coordinates.
/// Elements are coordinate vectors reduced mod the factors.
struct FiniteModule {
    FiniteRing ring;
    ModuleSide side = ModuleSide::left;
    std::vector<i64> factors;
    std::vector<IntMat> action;

    int rank() const { return static_cast<int>(factors.size()); }
    u64 order() const;
    i64 exponent() const { return factors.empty() ? 1 : factors.back(); }
    bool is_zero() const { return factors.empty(); }
};

FiniteModule make_module(FiniteRing ring, ModuleSide side, std::vector<i64> factors,
                         std::vector<IntMat> action);
FiniteModule zero_module(FiniteRing ring, ModuleSide side = ModuleSide::left);
/// Plain abelian module over a Zmod ring.
FiniteModule zmod_module(const FiniteRing& ring, std::vector<i64> factors);
/// Same module viewed over a larger Zmod ring (factors must divide new_n).
FiniteModule change_zmod_ring(const FiniteModule& M, i64 new_n);
/// Left module <-> right module across the canonical involution g -> g^-1.
FiniteModule flip_side(const FiniteModule& M);

/// Matrix by which an arbitrary group element acts (derived from the stored
/// generator matrices via a word decomposition, respecting the side).
IntMat element_action(const FiniteModule& M, int group_element);

std::vector<i64> module_element(const FiniteModule& M, u64 index);
u64 module_element_index(const FiniteModule& M, const std::vector<i64>& coords);

struct ModuleHom {
    FiniteModule domain;
    FiniteModule codomain;
    IntMat matrix; // codomain.rank x domain.rank

    std::vector<i64> apply(const std::vector<i64>& x) const;
};

bool is_valid_module_hom(const FiniteModule& domain, const FiniteModule& codomain,
                         const IntMat& matrix);
ModuleHom make_module_hom(FiniteModule domain, FiniteModule codomain, IntMat matrix);
ModuleHom identity_module_hom(const FiniteModule& M);
ModuleHom zero_module_hom(const FiniteModule& domain, const FiniteModule& codomain);
ModuleHom compose(const ModuleHom& g, const ModuleHom& f); // g after f
bool is_injective_module_hom(const ModuleHom& h);
bool is_bijective_module_hom(const ModuleHom& h);

/// Hom_R(M, N) as a finite abelian group of matrices.
SolutionGroup module_hom_solutions(const FiniteModule& M, const FiniteModule& N);
u64 count_module_homs(const FiniteModule& M, const FiniteModule& N);
std::vector<ModuleHom> enumerate_module_homs(const FiniteModule& M, const FiniteModule& N,
                                             u64 cap = 1u << 20);

struct ModuleIsoResult {
    enum class Status { found, none, inconclusive } status;
    std::optional<ModuleHom> iso;
};
ModuleIsoResult find_module_isomorphism(const FiniteModule& A, const FiniteModule& B,
                                        u64 search_budget = 1u << 16);

// ---- constructions -------------------------------------------------------

struct DirectSum {
    FiniteModule module;
    std::vector<ModuleHom> injections;
    std::vector<ModuleHom> projections;
};
/// Biproduct. The ring/side arguments matter only for an empty summand list
/// (an empty sum is the zero module over the given ring, Z/2 by default).
DirectSum direct_sum(const std::vector<FiniteModule>& summands,
                     std::optional<FiniteRing> ring = std::nullopt,
                     ModuleSide side = ModuleSide::left);

/// Free module on |X| generators. For a group algebra the underlying abelian
/// generators are indexed (i, g) -> i*|G| + g with the regular action on the
/// right or left per `side`.
struct FreeModule {
    FiniteModule module;
    int rrank = 0; // rank over the ring
};
FreeModule free_module(const FiniteRing& ring, FiniteSpace X, ModuleSide side = ModuleSide::left);
/// Coordinates of the i-th ring basis element of a free module of rank rrank.
std::vector<i64> free_basis_element(const FiniteRing& ring, int rrank, int i);

/// M tensor_R N for M a right module and N a left module over the same ring
/// (sides are irrelevant over Z/n). Output is a module over Zmod(n); the grid
/// maps record where generator m_i (x) n_j lands in canonical coordinates.
struct TensorResult {
    FiniteModule module;
    IntMat grid_to_canon; // rank x (rank(M)*rank(N))
    IntMat canon_to_grid;
    int m_rank = 0, n_rank = 0;
};
TensorResult tensor(const FiniteModule& M, const FiniteModule& N);
/// Induced map tensor(f, N): M (x) N -> M' (x) N for f : M -> M'.
ModuleHom tensor_hom(const ModuleHom& f, const FiniteModule& N,
                     const TensorResult& source, const TensorResult& target);

enum class ResolutionStyle { canonical_generators, raw_lattice_generators };

/// Tor_i(M, N) computed from a free resolution of M truncated at length i+1.
FiniteModule tor(int i, const FiniteModule& M, const FiniteModule& N,
                 ResolutionStyle style = ResolutionStyle::canonical_generators);
/// Tor_i(f, N) for f : M -> M', via a chain map lifted through the two
/// resolutions. Domain/codomain equal tor(i, M, N) and tor(i, M', N).
ModuleHom tor_hom(int i, const ModuleHom& f, const FiniteModule& N,
                  ResolutionStyle style = ResolutionStyle::canonical_generators);

/// Pontryagin dual Hom(M, Z/exponent): same invariant factors, transposed
/// action twisted to the opposite side.
FiniteModule pontryagin_dual(const FiniteModule& M);
/// Contravariant action on homs: f : M -> N gives f^dual : N^dual -> M^dual.
ModuleHom dual_hom(const ModuleHom& f);
/// Value of the character chi in M^dual on m in M, as an element of
/// Z/exponent(M) (exponent 1 for the zero module).
i64 dual_pairing(const FiniteModule& M, const std::vector<i64>& chi, const std::vector<i64>& m);

/// Induction kG (x)_{kH} M along an injective inclusion H -> G, built on
/// coset representatives; underlying abelian layout is (M-generator, coset).
struct InducedModule {
    FiniteModule module;
    std::vector<int> coset_reps; // minimal-element representatives, sorted
};
InducedModule induce(const GroupHom& inclusion, const FiniteModule& M, i64 base_n);
ModuleHom induce_hom(const GroupHom& inclusion, const ModuleHom& f, i64 base_n);

/// Restriction of scalars along kH -> kG (subgroup inclusion) or down to the
/// base ring Z/n.
FiniteModule restrict_to_subgroup(const FiniteModule& M, const GroupHom& inclusion);
FiniteModule restrict_to_base(const FiniteModule& M);

struct KernelResult {
    FiniteModule kernel;
    ModuleHom inclusion;
};
KernelResult kernel_of(const ModuleHom& h);

struct CokernelResult {
    FiniteModule cokernel;
    ModuleHom projection;
};
CokernelResult cokernel_of(const ModuleHom& h);

/// Invariant-factor coordinates for an abelian multiplication-table group,
/// with the element <-> coordinate dictionaries both ways.
struct AbelianModuleBridge {
    FiniteModule module; // over Zmod(L)
    std::vector<std::vector<i64>> coords_of; // per group element index
    std::map<std::vector<i64>, int> element_of;
};
AbelianModuleBridge abelian_group_as_module(const FiniteGroup& A, i64 L = 0);

} // namespace probund
