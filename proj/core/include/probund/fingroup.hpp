#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "probund/error.hpp"

namespace probund {

/// Finite group given by its full multiplication table. Elements are dense
/// indices; the table, identity and inverses are validated on construction.
/// A generator set is optional; named constructors always provide one.
struct FiniteGroup {
    int order = 1;
    std::vector<int> table; // row-major: table[a*order+b] = a*b
    int identity = 0;
    std::vector<int> inverses;
    std::vector<int> generators; // empty means "not provided"
    std::string name;            // cosmetic label, not part of equality

    int mul(int a, int b) const { return table[static_cast<size_t>(a) * order + b]; }
    int inv(int a) const { return inverses[static_cast<size_t>(a)]; }
    int element_order(int a) const;
    bool same_table(const FiniteGroup& other) const
    {
        return order == other.order && table == other.table;
    }
};

FiniteGroup make_group(int order, std::vector<int> table,
                       std::vector<int> generators = {}, std::string name = {});

FiniteGroup trivial_group();
FiniteGroup cyclic_group(int n);
FiniteGroup dihedral_group(int n);  // order 2n, n >= 1
FiniteGroup symmetric3();
FiniteGroup quaternion8();
FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B);

/// Parses "C4", "S3", "Q8", "D6", and x-products like "C2xC2xS3".
FiniteGroup parse_group_spec(const std::string& spec);

bool is_abelian(const FiniteGroup& G);
std::vector<int> compute_generating_set(const FiniteGroup& G); // greedy, deterministic
std::vector<int> subgroup_closure(const FiniteGroup& G, std::span<const int> seed);
std::vector<int> normal_closure(const FiniteGroup& G, std::span<const int> seed);

struct GroupHom {
    FiniteGroup domain;
    FiniteGroup codomain;
    std::vector<int> values;

    int apply(int x) const { return values[static_cast<size_t>(x)]; }
};

GroupHom make_group_hom(FiniteGroup domain, FiniteGroup codomain, std::vector<int> values);
bool is_valid_hom(const FiniteGroup& domain, const FiniteGroup& codomain,
                  const std::vector<int>& values);
GroupHom identity_hom(const FiniteGroup& G);
GroupHom trivial_hom(const FiniteGroup& domain, const FiniteGroup& codomain);
GroupHom compose(const GroupHom& g, const GroupHom& f); // g after f
bool is_injective_hom(const GroupHom& h);
bool is_surjective_hom(const GroupHom& h);

/// All homomorphisms G -> T, sorted lexicographically by value table.
/// Uses generator-image backtracking when G carries a generator set and
/// falls back to pruned full-table search otherwise (order <= 16).
std::vector<GroupHom> enumerate_homs(const FiniteGroup& G, const FiniteGroup& T);

struct QuotientResult {
    FiniteGroup quotient;
    GroupHom projection;
};

/// Quotient by the smallest normal subgroup containing the given elements.
/// Cosets are indexed in increasing order of their minimal element.
QuotientResult quotient_by_normal_closure(const FiniteGroup& G, std::span<const int> S);

/// G / [G,G] with the canonical surjection.
QuotientResult abelianisation(const FiniteGroup& G);

/// Coequaliser of a parallel pair: codomain / ncl { f(h) g(h)^-1 }.
QuotientResult coequaliser(const GroupHom& f, const GroupHom& g);

/// Pushout of f: H -> G1 along a surjection s: H -> G2, computed as
/// G1 / ncl(f(ker s)). The general finite pushout can be infinite; one
/// surjective leg keeps it a quotient of G1.
struct PushoutResult {
    FiniteGroup group;
    GroupHom from_first;  // G1 -> P
    GroupHom from_second; // G2 -> P
};
PushoutResult pushout_along_surjection(const GroupHom& f, const GroupHom& s);

/// The subgroup generated by the given elements, as an abstract group with
/// its inclusion homomorphism (subgroup elements reindexed in increasing
/// order of their index in G).
struct Subgroup {
    FiniteGroup group;
    GroupHom inclusion;
};
Subgroup subgroup_from_elements(const FiniteGroup& G, std::span<const int> elems);

/// Backtracking isomorphism search with an order-fingerprint fast filter.
struct GroupIsoResult {
    enum class Status { found, none, inconclusive } status;
    std::optional<GroupHom> iso;
};
GroupIsoResult find_group_isomorphism(const FiniteGroup& G, const FiniteGroup& H,
                                      long long node_budget = 200000);

/// All abelian groups of order <= max_order, as invariant-factor products.
std::vector<FiniteGroup> abelian_catalog(int max_order);
/// Every group of order <= 8 (14 of them), built from the named constructors.
std::vector<FiniteGroup> catalog_order_le8();
/// Default probe set for group-theorem checks: abelian of order <= min(12, cap)
/// plus S3, D4, Q8 when they fit under cap.
std::vector<FiniteGroup> default_test_groups(int max_order);
/// Small-group pool for instance generation, all orders <= max_order.
std::vector<FiniteGroup> generator_pool(int max_order);

} // namespace probund
