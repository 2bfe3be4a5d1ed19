#include "probund/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <future>
#include <set>

#include "probund/rng.hpp"

namespace probund {

namespace {

struct NameEntry {
    TheoremId id;
    const char* name;
};

constexpr NameEntry kNames[] = {
    {TheoremId::abelianisation_coproduct, "abelianisation-coproduct"},
    {TheoremId::free_module_coproduct, "free-module-coproduct"},
    {TheoremId::tensor_coproduct, "tensor-coproduct"},
    {TheoremId::tor_coproduct, "tor-coproduct"},
    {TheoremId::induction_coproduct, "induction-coproduct"},
    {TheoremId::restriction_coproduct, "restriction-coproduct"},
    {TheoremId::duality_involution, "duality-involution"},
    {TheoremId::duality_equivalence, "duality-equivalence"},
    {TheoremId::colimit_coequaliser, "colimit-coequaliser"},
    {TheoremId::discrete_colimit_agreement, "discrete-colimit-agreement"},
    {TheoremId::relative_adjunction, "relative-adjunction"},
    {TheoremId::four_square, "four-square"},
};

} // namespace

std::string theorem_name(TheoremId id)
{
    for (const auto& e : kNames)
        if (e.id == id) return e.name;
    throw Error("unknown theorem id");
}

TheoremId theorem_from_name(const std::string& name)
{
    for (const auto& e : kNames)
        if (name == e.name) return e.id;
    throw Error("unknown theorem id: " + name);
}

std::vector<TheoremId> all_theorems()
{
    std::vector<TheoremId> out;
    for (const auto& e : kNames) out.push_back(e.id);
    return out;
}

void validate_bounds(const Bounds& b)
{
    require(b.max_base >= 1 && b.max_base <= 6, "bounds exceed caps: base <= 6");
    require(b.max_fibre_order >= 1 && b.max_fibre_order <= 64, "bounds exceed caps: fibre order <= 64");
    require(b.max_ring_n >= 2 && b.max_ring_n <= 12, "bounds exceed caps: ring n <= 12");
    require(b.max_test_order >= 1 && b.max_test_order <= 24, "bounds exceed caps: test order <= 24");
    require(b.enumeration_cap >= 1, "enumeration cap must be positive");
}

json to_json(const Bounds& b)
{
    return json{{"max_base", b.max_base},
                {"max_fibre_order", b.max_fibre_order},
                {"max_ring_n", b.max_ring_n},
                {"max_test_order", b.max_test_order},
                {"enumeration_cap", b.enumeration_cap}};
}

Bounds bounds_from_json(const json& j)
{
    Bounds b;
    b.max_base = j.value("max_base", b.max_base);
    b.max_fibre_order = j.value("max_fibre_order", b.max_fibre_order);
    b.max_ring_n = j.value("max_ring_n", b.max_ring_n);
    b.max_test_order = j.value("max_test_order", b.max_test_order);
    b.enumeration_cap = j.value("enumeration_cap", b.enumeration_cap);
    return b;
}

std::string verdict_name(Verdict v)
{
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

std::vector<FiniteGroup> probe_groups(int max_order)
{
    return default_test_groups(max_order);
}

// ---- instance generation -------------------------------------------------------

namespace {

FiniteGroup random_pool_group(Rng& rng, int max_order)
{
    std::vector<FiniteGroup> pool = generator_pool(max_order);
    return pool[rng.below(pool.size())];
}

GroupBundle random_group_bundle(Rng& rng, const Bounds& b)
{
    int base = 1 + rng.below_int(b.max_base);
    std::vector<FiniteGroup> fibres;
    for (int x = 0; x < base; ++x) fibres.push_back(random_pool_group(rng, b.max_fibre_order));
    return make_group_bundle(FiniteSpace{base}, std::move(fibres));
}

std::vector<i64> random_chain(Rng& rng, i64 n, int max_rank)
{
    std::vector<i64> divisors;
    for (i64 d = 2; d <= n; ++d)
        if (n % d == 0) divisors.push_back(d);
    int k = rng.below_int(max_rank + 1);
    std::vector<i64> chain;
    i64 floor = 0;
    for (int i = 0; i < k; ++i) {
        std::vector<i64> options;
        for (i64 d : divisors)
            if (floor == 0 || d % floor == 0) options.push_back(d);
        if (options.empty()) break;
        i64 pick = options[rng.below(options.size())];
        chain.push_back(pick);
        floor = pick;
    }
    std::sort(chain.begin(), chain.end());
    return chain;
}

FiniteModule random_zmod_module(Rng& rng, const FiniteRing& ring, int max_rank,
                                ModuleSide side = ModuleSide::left)
{
    FiniteModule m = zmod_module(ring, random_chain(rng, ring.n, max_rank));
    m.side = side;
    return m;
}

// modules over (Z/2)[C2]: sums of the trivial module and the free module,
// which exhaust the indecomposables over k[x]/(x^2)
FiniteModule random_kc2_module(Rng& rng, const FiniteRing& kc2, ModuleSide side)
{
    std::vector<FiniteModule> parts;
    int trivials = rng.below_int(3), frees = rng.below_int(2);
    for (int i = 0; i < trivials; ++i)
        parts.push_back(make_module(kc2, side, {kc2.n}, {IntMat::identity(1)}));
    for (int i = 0; i < frees; ++i) parts.push_back(free_module(kc2, FiniteSpace{1}, side).module);
    return direct_sum(parts, kc2, side).module;
}

FiniteRing tensor_ring(Rng& rng, const Bounds& b)
{
    switch (rng.below(3)) {
        case 0:
            if (b.max_ring_n >= 4) return zmod_ring(4);
            return zmod_ring(2);
        case 1:
            if (b.max_ring_n >= 6) return zmod_ring(6);
            return zmod_ring(3);
        default: return group_algebra(2, cyclic_group(2));
    }
}

FiniteModule random_module_over(Rng& rng, const FiniteRing& ring, ModuleSide side, int max_rank)
{
    if (ring.is_zmod()) return random_zmod_module(rng, ring, max_rank, side);
    return random_kc2_module(rng, ring, side);
}

ModuleBundle random_module_bundle_over(Rng& rng, const FiniteRing& ring, ModuleSide side,
                                       const Bounds& b, int max_rank)
{
    int base = 1 + rng.below_int(b.max_base);
    std::vector<FiniteModule> fibres;
    for (int x = 0; x < base; ++x) fibres.push_back(random_module_over(rng, ring, side, max_rank));
    return make_module_bundle(FiniteSpace{base}, ring, std::move(fibres));
}

Subgroup random_subgroup(Rng& rng, const FiniteGroup& G)
{
    std::vector<int> seeds;
    int k = rng.below_int(3);
    for (int i = 0; i < k; ++i) seeds.push_back(rng.below_int(G.order));
    return subgroup_from_elements(G, seeds);
}

FiniteModule permutation_module(const FiniteRing& kH, const FiniteGroup& H,
                                const std::vector<int>& subgroup_elems)
{
    // k[H/K] with the left translation action on cosets
    std::vector<int> members = subgroup_closure(H, subgroup_elems);
    std::vector<int> rep(static_cast<size_t>(H.order));
    for (int g = 0; g < H.order; ++g) {
        int r = g;
        for (int m : members) r = std::min(r, H.mul(g, m));
        rep[static_cast<size_t>(g)] = r;
    }
    std::vector<int> reps;
    for (int g = 0; g < H.order; ++g)
        if (rep[static_cast<size_t>(g)] == g) reps.push_back(g);
    auto coset_of = [&](int g) {
        return static_cast<int>(std::lower_bound(reps.begin(), reps.end(), rep[static_cast<size_t>(g)]) -
                                reps.begin());
    };
    const int r = static_cast<int>(reps.size());
    std::vector<i64> factors(static_cast<size_t>(r), kH.n);
    std::vector<IntMat> action;
    for (int s : kH.group->generators) {
        IntMat P(r, r);
        for (int j = 0; j < r; ++j) P.at(coset_of(H.mul(s, reps[static_cast<size_t>(j)])), j) = 1;
        action.push_back(std::move(P));
    }
    return make_module(kH, ModuleSide::left, std::move(factors), std::move(action));
}

// random left kH-module built from trivial pieces, free pieces and
// permutation modules k[H/K], kept under the given coordinate-rank budget
FiniteModule random_group_algebra_module(Rng& rng, const FiniteRing& kH, int rank_budget)
{
    const FiniteGroup& H = *kH.group;
    std::vector<FiniteModule> parts;
    int pieces = 1 + rng.below_int(2);
    int used = 0;
    for (int i = 0; i < pieces; ++i) {
        FiniteModule part = zero_module(kH, ModuleSide::left);
        switch (rng.below(3)) {
            case 0: {
                std::vector<i64> chain = random_chain(rng, kH.n, 1);
                if (chain.empty()) chain = {kH.n};
                std::vector<IntMat> act(static_cast<size_t>(kH.algebra_generators()),
                                        IntMat::identity(static_cast<int>(chain.size())));
                part = make_module(kH, ModuleSide::left, std::move(chain), std::move(act));
                break;
            }
            case 1: part = free_module(kH, FiniteSpace{1}).module; break;
            default: {
                std::vector<int> seeds = {rng.below_int(H.order)};
                part = permutation_module(kH, H, seeds);
                break;
            }
        }
        if (used + part.rank() > rank_budget) continue;
        used += part.rank();
        parts.push_back(std::move(part));
    }
    if (parts.empty()) {
        std::vector<IntMat> act(static_cast<size_t>(kH.algebra_generators()), IntMat::identity(1));
        parts.push_back(make_module(kH, ModuleSide::left, {kH.n}, std::move(act)));
    }
    return direct_sum(parts, kH, ModuleSide::left).module;
}

json gen_payload(TheoremId id, Rng& rng, const Bounds& b)
{
    switch (id) {
        case TheoremId::abelianisation_coproduct:
            return json{{"bundle", to_json(random_group_bundle(rng, b))}};

        case TheoremId::free_module_coproduct: {
            std::vector<i64> ns;
            for (i64 n : {2, 3, 4, 6, 8})
                if (n <= b.max_ring_n) ns.push_back(n);
            FiniteRing ring = zmod_ring(ns[rng.below(ns.size())]);
            int base = 1 + rng.below_int(b.max_base);
            std::vector<FiniteSpace> fibres;
            for (int x = 0; x < base; ++x) fibres.push_back(FiniteSpace{1 + rng.below_int(3)});
            return json{{"ring", to_json(ring)},
                        {"bundle", to_json(make_space_bundle(FiniteSpace{base}, std::move(fibres)))}};
        }

        case TheoremId::tensor_coproduct:
        case TheoremId::tor_coproduct: {
            FiniteRing ring = tensor_ring(rng, b);
            ModuleSide mside = ring.is_zmod() ? ModuleSide::left : ModuleSide::right;
            ModuleBundle bundle = random_module_bundle_over(rng, ring, mside, b, 2);
            FiniteModule coeff = random_module_over(rng, ring, ModuleSide::left, 2);
            json out{{"bundle", to_json(bundle)}, {"coefficient", to_json(coeff)}};
            if (id == TheoremId::tor_coproduct) out["i"] = static_cast<int>(rng.below(3));
            return out;
        }

        case TheoremId::induction_coproduct:
        case TheoremId::restriction_coproduct: {
            i64 k = rng.coin() ? 2 : 3;
            std::vector<FiniteGroup> pool = generator_pool(12);
            FiniteGroup G = pool[rng.below(pool.size())];
            Subgroup H = random_subgroup(rng, G);
            if (id == TheoremId::induction_coproduct) {
                // induced coordinate rank is fibre rank times the index, so
                // spend a global budget of ~24 induced coordinates
                FiniteRing kH = group_algebra(k, H.group);
                int index = G.order / H.group.order;
                int total_budget = std::max(1, 24 / index);
                int base = 1 + rng.below_int(std::min(b.max_base, 3));
                std::vector<FiniteModule> fibres;
                int per_fibre = std::max(1, total_budget / base);
                for (int x = 0; x < base; ++x)
                    fibres.push_back(random_group_algebra_module(rng, kH, per_fibre));
                ModuleBundle bundle = make_module_bundle(FiniteSpace{base}, kH, std::move(fibres));
                return json{{"base_n", k}, {"inclusion", to_json(H.inclusion)},
                            {"bundle", to_json(bundle)}};
            }
            FiniteRing kG = group_algebra(k, G);
            int base = 1 + rng.below_int(std::min(b.max_base, 3));
            std::vector<FiniteModule> fibres;
            for (int x = 0; x < base; ++x)
                fibres.push_back(random_group_algebra_module(rng, kG, std::max(2, 24 / base)));
            ModuleBundle bundle = make_module_bundle(FiniteSpace{base}, kG, std::move(fibres));
            json out{{"bundle", to_json(bundle)}};
            if (rng.coin()) {
                out["mode"] = "subgroup";
                out["inclusion"] = to_json(H.inclusion);
            } else {
                out["mode"] = "base";
            }
            return out;
        }

        case TheoremId::duality_involution: {
            if (rng.below(4) == 0) {
                FiniteRing kc2 = group_algebra(2, cyclic_group(2));
                return json{{"bundle",
                             to_json(random_module_bundle_over(rng, kc2, ModuleSide::left, b, 2))}};
            }
            i64 n = 2 + static_cast<i64>(rng.below(static_cast<u64>(b.max_ring_n - 1)));
            FiniteRing ring = zmod_ring(n);
            return json{{"bundle",
                         to_json(random_module_bundle_over(rng, ring, ModuleSide::left, b, 2))}};
        }

        case TheoremId::duality_equivalence: {
            i64 n = (rng.coin() && b.max_ring_n >= 4) ? 4 : 2;
            FiniteRing ring = zmod_ring(n);
            Bounds tiny = b;
            tiny.max_base = std::min(b.max_base, 2);
            ModuleBundle first = random_module_bundle_over(rng, ring, ModuleSide::left, tiny, 1);
            ModuleBundle second = random_module_bundle_over(rng, ring, ModuleSide::left, tiny, 1);
            return json{{"first", to_json(first)}, {"second", to_json(second)}};
        }

        case TheoremId::colimit_coequaliser: {
            std::vector<FiniteGroup> pool = generator_pool(6);
            auto pick = [&]() { return pool[rng.below(pool.size())]; };
            switch (rng.below(4)) {
                case 0: { // discrete
                    int n = 1 + rng.below_int(3);
                    std::vector<FiniteGroup> fibres;
                    for (int x = 0; x < n; ++x) fibres.push_back(pick());
                    GroupBundle bundleg = make_group_bundle(FiniteSpace{n}, fibres);
                    FiniteInternalCategory D = discrete_category(FiniteSpace{n});
                    std::vector<GroupHom> action;
                    for (const auto& f : fibres) action.push_back(identity_hom(f));
                    InternalGroupDiagram P = make_internal_group_diagram(D, bundleg, action);
                    return json{{"shape", "discrete"}, {"diagram", to_json(P)}};
                }
                case 1: { // parallel pair
                    FiniteGroup A = pick(), B = pick();
                    auto homs = enumerate_homs(A, B);
                    FiniteInternalCategory cat = parallel_pair_category();
                    GroupBundle bundleg = make_group_bundle(cat.objects, {A, B});
                    std::vector<GroupHom> action = {identity_hom(A), identity_hom(B),
                                                    homs[rng.below(homs.size())],
                                                    homs[rng.below(homs.size())]};
                    InternalGroupDiagram P = make_internal_group_diagram(cat, bundleg, action);
                    return json{{"shape", "parallel"}, {"diagram", to_json(P)}};
                }
                case 2: { // span with a surjective second leg
                    FiniteGroup H = pick(), G1 = pick();
                    std::vector<int> kill;
                    if (H.order > 1 && rng.coin()) kill.push_back(1 + rng.below_int(H.order - 1));
                    QuotientResult q = quotient_by_normal_closure(H, kill);
                    auto homs1 = enumerate_homs(H, G1);
                    FiniteInternalCategory cat = span_category();
                    GroupBundle bundleg = make_group_bundle(cat.objects, {H, G1, q.quotient});
                    std::vector<GroupHom> action = {identity_hom(H), identity_hom(G1),
                                                    identity_hom(q.quotient),
                                                    homs1[rng.below(homs1.size())], q.projection};
                    InternalGroupDiagram P = make_internal_group_diagram(cat, bundleg, action);
                    return json{{"shape", "span"}, {"diagram", to_json(P)}};
                }
                default: { // cone graph amalgam
                    std::vector<FiniteGroup> hpool = {trivial_group(), cyclic_group(2),
                                                      cyclic_group(3)};
                    FiniteGroup H = hpool[rng.below(hpool.size())];
                    int n = 1 + rng.below_int(2);
                    std::vector<FiniteGroup> vgroups;
                    std::vector<GroupHom> theta;
                    for (int x = 0; x < n; ++x) {
                        FiniteGroup V = pick();
                        std::vector<GroupHom> injs;
                        for (const auto& h : enumerate_homs(H, V))
                            if (is_injective_hom(h)) injs.push_back(h);
                        if (injs.empty()) {
                            V = H;
                            injs.push_back(identity_hom(H));
                        }
                        theta.push_back(injs[rng.below(injs.size())]);
                        vgroups.push_back(theta.back().codomain);
                    }
                    AmalgamData D = make_amalgam_data(FiniteSpace{n}, H, vgroups, theta);
                    InternalGroupDiagram P = amalgam_to_diagram(D);
                    return json{{"shape", "cone"}, {"diagram", to_json(P)},
                                {"amalgam", to_json(D)}};
                }
            }
        }

        case TheoremId::discrete_colimit_agreement: {
            Bounds small = b;
            small.max_fibre_order = std::min(b.max_fibre_order, 8);
            return json{{"bundle", to_json(random_group_bundle(rng, small))}};
        }

        case TheoremId::relative_adjunction: {
            bool free_pair = rng.coin();
            json samples = json::array();
            for (int s = 0; s < 5; ++s) {
                if (free_pair) {
                    std::vector<i64> ns;
                    for (i64 n : {2, 3, 4, 6, 8})
                        if (n <= b.max_ring_n) ns.push_back(n);
                    FiniteRing ring = zmod_ring(ns[rng.below(ns.size())]);
                    FiniteSpace c{rng.below_int(3)};
                    FiniteModule d = random_zmod_module(rng, ring, 2);
                    while (true) {
                        u64 f = 1;
                        bool ok = true;
                        for (int x = 0; x < c.size; ++x) {
                            f *= d.order();
                            if (f > 4096) { ok = false; break; }
                        }
                        if (ok) break;
                        d = random_zmod_module(rng, ring, 1);
                    }
                    samples.push_back(json{{"ring", to_json(ring)}, {"space", c.size},
                                           {"module", to_json(d)}});
                } else {
                    FiniteGroup c = random_pool_group(rng, b.max_fibre_order);
                    std::vector<FiniteGroup> abpool = abelian_catalog(std::min(12, b.max_test_order));
                    FiniteGroup d = abpool[rng.below(abpool.size())];
                    samples.push_back(json{{"group", to_json(c)}, {"abelian", to_json(d)}});
                }
            }
            return json{{"pair", free_pair ? "free-forget" : "ab-inclusion"},
                        {"samples", std::move(samples)}};
        }

        case TheoremId::four_square: {
            std::vector<i64> ns;
            for (i64 n : {2, 3, 4, 6})
                if (n <= b.max_ring_n) ns.push_back(n);
            FiniteRing ring = zmod_ring(ns[rng.below(ns.size())]);
            int base = 1 + rng.below_int(std::min(b.max_base, 3));
            std::vector<FiniteSpace> fibres;
            for (int x = 0; x < base; ++x) fibres.push_back(FiniteSpace{rng.below_int(3)});
            SpaceBundle Y = make_space_bundle(FiniteSpace{base}, std::move(fibres));
            json homs = json::array();
            for (int s = 0; s < 2; ++s) {
                FiniteModule m = random_zmod_module(rng, ring, 2);
                FiniteModule n2 = random_zmod_module(rng, ring, 2);
                auto list = enumerate_module_homs(m, n2, 1u << 12);
                homs.push_back(to_json(list[rng.below(list.size())]));
            }
            return json{{"ring", to_json(ring)}, {"space_bundle", to_json(Y)},
                        {"sample_homs", std::move(homs)}};
        }
    }
    throw Error("unreachable");
}

} // namespace

CheckInstance gen_instance(TheoremId id, u64 seed, const Bounds& bounds)
{
    validate_bounds(bounds);
    Rng rng(mix64(seed, static_cast<u64>(id) + 0x9E37));
    return CheckInstance{id, seed, bounds, gen_payload(id, rng, bounds)};
}

// ---- checks ---------------------------------------------------------------------

namespace {

json minimized_counterexample_group(const GroupBundle& B,
                                    const std::function<bool(const GroupBundle&)>& still_fails);
json minimized_counterexample_module(const ModuleBundle& B,
                                     const std::function<bool(const ModuleBundle&)>& still_fails);

struct CheckOutcome {
    Verdict verdict = Verdict::pass;
    json witness;
};

// canonical map +_x F(M_x) -> F(+_x M_x) for an additive functor given by
// its fibre-hom action; the theorem is that it is a bijective module hom
CheckOutcome check_additive_coproduct(const ModuleBundle& B, const FibrewiseFunctor& F)
{
    ModuleCoproduct sum = internal_coproduct_modules(B);
    ModuleBundle lifted = lift_functor_to_modules(F, any_bundle(B));
    ModuleCoproduct lifted_sum = internal_coproduct_modules(lifted);
    FiniteModule target = apply_functor(F, sum.module);

    CheckOutcome out;
    if (lifted_sum.module.order() != target.order()) {
        out.verdict = Verdict::fail;
        out.witness = json{{"kind", "counterexample"},
                           {"reason", "order mismatch"},
                           {"lhs_order", lifted_sum.module.order()},
                           {"rhs_order", target.order()}};
        return out;
    }
    IntMat acc(target.rank(), lifted_sum.module.rank());
    for (int x = 0; x < B.base.size; ++x) {
        ModuleHom part = apply_functor_hom(F, sum.injections[static_cast<size_t>(x)]);
        IntMat term = mat_mul(part.matrix, lifted_sum.projections[static_cast<size_t>(x)].matrix);
        for (int r = 0; r < acc.rows; ++r)
            for (int c = 0; c < acc.cols; ++c)
                acc.at(r, c) = checked_add(acc.at(r, c), term.at(r, c));
    }
    if (!is_valid_module_hom(lifted_sum.module, target, acc)) {
        out.verdict = Verdict::fail;
        out.witness = json{{"kind", "counterexample"}, {"reason", "canonical map is not a hom"}};
        return out;
    }
    ModuleHom canonical{lifted_sum.module, target, mat_mod_rows(acc, target.factors)};
    if (!is_bijective_module_hom(canonical)) {
        out.verdict = Verdict::fail;
        out.witness = json{{"kind", "counterexample"}, {"reason", "canonical map not bijective"},
                           {"matrix", to_json(canonical.matrix)}};
        return out;
    }
    out.witness = json{{"kind", "isomorphism"},
                       {"functor", F.name()},
                       {"domain", to_json(lifted_sum.module)},
                       {"codomain", to_json(target)},
                       {"matrix", to_json(canonical.matrix)}};
    return out;
}

CheckOutcome check_abelianisation_coproduct(const json& payload, const Bounds& b)
{
    GroupBundle B = group_bundle_from_json(payload.at("bundle"));
    AbelianisedBundle ab = abelianise_bundle(B);
    ModuleCoproduct sum = internal_coproduct_modules(ab.bundle);
    auto run_probes = [&](const GroupBundle& bundle, const AbelianisedBundle& abb,
                          const ModuleCoproduct& s, json* per_probe) -> std::optional<json> {
        for (const FiniteGroup& T : probe_groups(std::min(12, b.max_test_order))) {
            if (!is_abelian(T)) continue;
            i64 expT = 1;
            for (int t = 0; t < T.order; ++t) expT = lcm_i64(expT, T.element_order(t));
            i64 L = lcm_i64(abb.bundle.ring.n, std::max<i64>(2, expT));
            AbelianModuleBridge tb = abelian_group_as_module(T, L);
            FiniteModule sumL = change_zmod_ring(s.module, L);
            FiniteModule TmodL = change_zmod_ring(tb.module, L);

            std::vector<std::vector<GroupHom>> fibre_homs;
            u64 lhs = 1;
            for (const auto& f : bundle.fibres) {
                fibre_homs.push_back(enumerate_homs(f, T));
                lhs *= fibre_homs.back().size();
            }
            u64 rhs = count_module_homs(sumL, TmodL);
            if (lhs != rhs)
                return json{{"kind", "counterexample"}, {"probe", to_json(T)},
                            {"lhs", lhs}, {"rhs", rhs}};

            // explicit bijection on (a capped prefix of) the tuple set:
            // tuple -> module hom out of the sum via fibrewise factorization
            u64 budget = std::min<u64>(lhs, b.enumeration_cap);
            std::set<std::vector<i64>> images;
            std::vector<size_t> idx(bundle.fibres.size(), 0);
            for (u64 count = 0; count < budget; ++count) {
                IntMat m(TmodL.rank(), sumL.rank());
                bool valid = true;
                IntMat total(TmodL.rank(), sumL.rank());
                for (size_t x = 0; x < bundle.fibres.size() && valid; ++x) {
                    const GroupHom& hx = fibre_homs[x][idx[x]];
                    const AbelianModuleBridge& bx = abb.bridges[x];
                    // column i of the factorized map: T-coordinates of
                    // h_x(any preimage of the i-th canonical generator)
                    IntMat hbar(TmodL.rank(), bx.module.rank());
                    for (int i = 0; i < bx.module.rank(); ++i) {
                        std::vector<i64> unit(static_cast<size_t>(bx.module.rank()), 0);
                        unit[static_cast<size_t>(i)] = 1;
                        int abelem = bx.element_of.at(vec_mod(unit, bx.module.factors));
                        int pre = -1;
                        for (int g = 0; g < abb.quotients[x].domain.order && pre < 0; ++g)
                            if (abb.quotients[x].apply(g) == abelem) pre = g;
                        const std::vector<i64>& tc =
                            tb.coords_of[static_cast<size_t>(hx.apply(pre))];
                        for (int r = 0; r < TmodL.rank(); ++r) hbar.at(r, i) = tc[static_cast<size_t>(r)];
                    }
                    IntMat term = mat_mul(hbar, s.projections[x].matrix);
                    for (int r = 0; r < total.rows; ++r)
                        for (int c = 0; c < total.cols; ++c)
                            total.at(r, c) = checked_add(total.at(r, c), term.at(r, c));
                }
                m = mat_mod_rows(total, TmodL.factors);
                if (!is_valid_module_hom(sumL, TmodL, m))
                    return json{{"kind", "counterexample"}, {"probe", to_json(T)},
                                {"reason", "factorized map is not a module hom"}};
                images.insert(m.a);
                // odometer
                size_t pos = 0;
                while (pos < idx.size()) {
                    if (++idx[pos] < fibre_homs[pos].size()) break;
                    idx[pos] = 0;
                    ++pos;
                }
                if (pos == idx.size()) break;
                if (idx.empty()) break;
            }
            u64 checked = std::min<u64>(lhs, budget);
            if (images.size() != checked)
                return json{{"kind", "counterexample"}, {"probe", to_json(T)},
                            {"reason", "factorization map is not injective"}};
            if (per_probe)
                per_probe->push_back(json{{"probe", T.name.empty() ? json(to_json(T)) : json(T.name)},
                                          {"count", lhs},
                                          {"bijection_checked", checked}});
        }
        return std::nullopt;
    };

    json per_probe = json::array();
    auto failure = run_probes(B, ab, sum, &per_probe);
    CheckOutcome out;
    if (!failure) {
        out.witness = json{{"kind", "hom-count-bijection"}, {"per_probe", per_probe}};
        return out;
    }
    out.verdict = Verdict::fail;
    json cx = *failure;
    cx["minimized_bundle"] = minimized_counterexample_group(B, [&](const GroupBundle& sub) {
        AbelianisedBundle sab = abelianise_bundle(sub);
        ModuleCoproduct ssum = internal_coproduct_modules(sab.bundle);
        return run_probes(sub, sab, ssum, nullptr).has_value();
    });
    out.witness = std::move(cx);
    return out;
}

CheckOutcome check_free_module_coproduct(const json& payload)
{
    FiniteRing ring = ring_from_json(payload.at("ring"));
    SpaceBundle Y = space_bundle_from_json(payload.at("bundle"));
    ModuleHom iso = free_coproduct_iso(ring, Y);
    CheckOutcome out;
    if (!is_bijective_module_hom(iso)) {
        out.verdict = Verdict::fail;
        out.witness = json{{"kind", "counterexample"}, {"reason", "canonical map not bijective"}};
        return out;
    }
    out.witness = json{{"kind", "isomorphism"},
                       {"domain", to_json(iso.domain)},
                       {"codomain", to_json(iso.codomain)},
                       {"matrix", to_json(iso.matrix)}};
    return out;
}

CheckOutcome check_tensor_or_tor_coproduct(const json& payload, bool is_tor)
{
    ModuleBundle B = module_bundle_from_json(payload.at("bundle"));
    FiniteModule N = module_from_json(payload.at("coefficient"), B.ring);
    FibrewiseFunctor F = is_tor ? tor_functor(payload.at("i").get<int>(), N) : tensor_functor(N);
    CheckOutcome out = check_additive_coproduct(B, F);
    if (out.verdict == Verdict::fail)
        out.witness["minimized_bundle"] =
            minimized_counterexample_module(B, [&](const ModuleBundle& sub) {
                return check_additive_coproduct(sub, F).verdict == Verdict::fail;
            });
    return out;
}

CheckOutcome check_induction_coproduct(const json& payload)
{
    ModuleBundle B = module_bundle_from_json(payload.at("bundle"));
    GroupHom incl = group_hom_from_json(payload.at("inclusion"));
    FibrewiseFunctor F = induction_functor(incl, payload.at("base_n").get<i64>());
    CheckOutcome out = check_additive_coproduct(B, F);
    if (out.verdict == Verdict::fail)
        out.witness["minimized_bundle"] =
            minimized_counterexample_module(B, [&](const ModuleBundle& sub) {
                return check_additive_coproduct(sub, F).verdict == Verdict::fail;
            });
    return out;
}

CheckOutcome check_restriction_coproduct(const json& payload)
{
    ModuleBundle B = module_bundle_from_json(payload.at("bundle"));
    std::string mode = payload.at("mode").get<std::string>();
    FibrewiseFunctor F = (mode == "subgroup")
                             ? restriction_functor(group_hom_from_json(payload.at("inclusion")))
                             : restriction_to_base_functor();
    // right adjoints preserve the biproduct on the nose: both routes must
    // produce the identical canonical module
    ModuleCoproduct sum = internal_coproduct_modules(B);
    FiniteModule route1 = apply_functor(F, sum.module);
    ModuleBundle lifted = lift_functor_to_modules(F, any_bundle(B));
    ModuleCoproduct route2 = internal_coproduct_modules(lifted);
    CheckOutcome out;
    bool equal = route1.factors == route2.module.factors &&
                 same_ring(route1.ring, route2.module.ring) && route1.action == route2.module.action;
    if (!equal) {
        out.verdict = Verdict::fail;
        out.witness = json{{"kind", "counterexample"},
                           {"lhs", to_json(route2.module)},
                           {"rhs", to_json(route1)}};
        return out;
    }
    out.witness = json{{"kind", "exact-equality"}, {"module", to_json(route1)}};
    return out;
}

CheckOutcome check_duality_involution(const json& payload)
{
    ModuleBundle B = module_bundle_from_json(payload.at("bundle"));
    ModuleBundle DD = dualise_bundle(dualise_bundle(B));
    CheckOutcome out;
    json fibres = json::array();
    for (size_t x = 0; x < B.fibres.size(); ++x) {
        const FiniteModule& M = B.fibres[x];
        const FiniteModule& W = DD.fibres[x];
        if (M.factors != W.factors || M.side != W.side || M.action != W.action) {
            out.verdict = Verdict::fail;
            out.witness = json{{"kind", "counterexample"}, {"fibre", x},
                               {"reason", "double dual differs"}};
            return out;
        }
        // evaluation is elementwise the pairing flip
        FiniteModule D = pontryagin_dual(M);
        for (u64 i = 0; i < M.order(); ++i)
            for (u64 j = 0; j < D.order(); ++j) {
                auto m = module_element(M, i);
                auto chi = module_element(D, j);
                if (dual_pairing(M, chi, m) != dual_pairing(D, m, chi)) {
                    out.verdict = Verdict::fail;
                    out.witness = json{{"kind", "counterexample"}, {"fibre", x},
                                       {"reason", "evaluation map mismatch"}};
                    return out;
                }
            }
        fibres.push_back(json{{"factors", M.factors}, {"order", M.order()}});
    }
    // double dual of the identity bundle map is the identity
    ModuleBundleMap idm = identity_module_bundle_map(B);
    for (size_t x = 0; x < idm.fibre_homs.size(); ++x) {
        ModuleHom dd = dual_hom(dual_hom(idm.fibre_homs[x]));
        if (!(mat_mod_rows(dd.matrix, dd.codomain.factors) ==
              mat_mod_rows(idm.fibre_homs[x].matrix, idm.fibre_homs[x].codomain.factors))) {
            out.verdict = Verdict::fail;
            out.witness = json{{"kind", "counterexample"}, {"fibre", x},
                               {"reason", "double dual of identity map differs"}};
            return out;
        }
    }
    out.witness = json{{"kind", "double-dual-evaluation"}, {"fibres", fibres}};
    return out;
}

CheckOutcome check_duality_equivalence(const json& payload, const Bounds& b)
{
    ModuleBundle A = module_bundle_from_json(payload.at("first"));
    ModuleBundle B = module_bundle_from_json(payload.at("second"));
    CheckOutcome out;
    u64 forward = count_module_bundle_maps(A, B);
    u64 backward = count_opposite_bundle_maps(dualise_bundle(B), dualise_bundle(A));
    if (forward != backward) {
        out.verdict = Verdict::fail;
        out.witness = json{{"kind", "counterexample"}, {"lhs", forward}, {"rhs", backward}};
        return out;
    }
    if (forward > b.enumeration_cap) {
        out.verdict = Verdict::inconclusive;
        out.witness = json{{"kind", "budget"}, {"hom_count", forward},
                           {"cap", b.enumeration_cap}};
        return out;
    }
    auto maps = enumerate_module_bundle_maps(A, B, b.enumeration_cap);
    std::set<std::string> seen;
    ModuleBundle Bd = dualise_bundle(B), Ad = dualise_bundle(A);
    for (const auto& m : maps) {
        OppositeModuleBundleMap md = dualise_bundle_map(A, B, m);
        if (!is_valid_opposite_bundle_map(Bd, Ad, md)) {
            out.verdict = Verdict::fail;
            out.witness = json{{"kind", "counterexample"},
                               {"reason", "dualised map is not an opposite bundle map"}};
            return out;
        }
        json key{{"base", md.base_map.values}};
        json fh = json::array();
        for (const auto& h : md.fibre_homs)
            fh.push_back(to_json(mat_mod_rows(h.matrix, h.codomain.factors)));
        key["homs"] = std::move(fh);
        seen.insert(key.dump());
    }
    if (seen.size() != maps.size()) {
        out.verdict = Verdict::fail;
        out.witness = json{{"kind", "counterexample"}, {"reason", "dualisation is not injective"}};
        return out;
    }
    out.witness = json{{"kind", "hom-count-bijection"},
                       {"per_probe", json::array({json{{"count", forward},
                                                       {"bijection_checked", maps.size()}}})}};
    return out;
}

CheckOutcome check_colimit_coequaliser(const json& payload, const Bounds& b)
{
    InternalGroupDiagram P = internal_group_diagram_from_json(payload.at("diagram"));
    std::string shape = payload.at("shape").get<std::string>();
    ProGroupByHoms colim = colimit_via_coequaliser(P.category, P);
    CheckOutcome out;
    json per_probe = json::array();

    for (const FiniteGroup& T : probe_groups(std::min(8, b.max_test_order))) {
        auto fast = colim.homs_to(T);

        // direct universal-property enumeration: full product, filtered
        // pointwise over every arrow
        std::vector<std::vector<GroupHom>> lists;
        for (const auto& f : P.bundle.fibres) lists.push_back(enumerate_homs(f, T));
        std::set<std::vector<int>> direct_keys;
        std::vector<size_t> idx(lists.size(), 0);
        u64 total = 1;
        for (const auto& l : lists) total *= l.size();
        for (u64 c = 0; c < total; ++c) {
            bool ok = true;
            for (int f = 0; f < P.category.arrows.size && ok; ++f) {
                const GroupHom& pf = P.action[static_cast<size_t>(f)];
                const GroupHom& src = lists[static_cast<size_t>(P.category.source.apply(f))]
                                           [idx[static_cast<size_t>(P.category.source.apply(f))]];
                const GroupHom& tgt = lists[static_cast<size_t>(P.category.target.apply(f))]
                                           [idx[static_cast<size_t>(P.category.target.apply(f))]];
                for (int x = 0; x < pf.domain.order && ok; ++x)
                    if (tgt.apply(pf.apply(x)) != src.apply(x)) ok = false;
            }
            if (ok) {
                std::vector<int> key;
                for (size_t p = 0; p < lists.size(); ++p)
                    key.insert(key.end(), lists[p][idx[p]].values.begin(), lists[p][idx[p]].values.end());
                direct_keys.insert(std::move(key));
            }
            size_t pos = 0;
            while (pos < idx.size()) {
                if (++idx[pos] < lists[pos].size()) break;
                idx[pos] = 0;
                ++pos;
            }
            if (pos == idx.size()) break;
        }
        std::set<std::vector<int>> fast_keys;
        for (const auto& t : fast) {
            std::vector<int> key;
            for (const auto& h : t) key.insert(key.end(), h.values.begin(), h.values.end());
            fast_keys.insert(std::move(key));
        }
        if (fast_keys != direct_keys) {
            out.verdict = Verdict::fail;
            out.witness = json{{"kind", "counterexample"}, {"probe", to_json(T)},
                               {"lhs", fast_keys.size()}, {"rhs", direct_keys.size()}};
            return out;
        }

        u64 reference = fast.size();
        if (shape == "parallel") {
            QuotientResult ce = coequaliser(P.action[2], P.action[3]);
            std::set<std::vector<int>> through;
            for (const auto& h : enumerate_homs(ce.quotient, T)) {
                GroupHom beta = compose(h, ce.projection);
                std::vector<int> key = compose(beta, P.action[2]).values; // alpha_a
                key.insert(key.end(), beta.values.begin(), beta.values.end());
                through.insert(std::move(key));
            }
            if (through != fast_keys) {
                out.verdict = Verdict::fail;
                out.witness = json{{"kind", "counterexample"}, {"probe", to_json(T)},
                                   {"reason", "coequaliser comparison failed"}};
                return out;
            }
        } else if (shape == "span") {
            PushoutResult po = pushout_along_surjection(P.action[3], P.action[4]);
            std::set<std::vector<int>> through;
            for (const auto& h : enumerate_homs(po.group, T)) {
                GroupHom a1 = compose(h, po.from_first);
                GroupHom a2 = compose(h, po.from_second);
                std::vector<int> key = compose(a1, P.action[3]).values; // alpha at the apex
                key.insert(key.end(), a1.values.begin(), a1.values.end());
                key.insert(key.end(), a2.values.begin(), a2.values.end());
                through.insert(std::move(key));
            }
            if (through != fast_keys) {
                out.verdict = Verdict::fail;
                out.witness = json{{"kind", "counterexample"}, {"probe", to_json(T)},
                                   {"reason", "pushout comparison failed"}};
                return out;
            }
        } else if (shape == "discrete") {
            ProGroupByHoms cp = internal_coproduct_groups(P.bundle);
            if (cp.count_homs_to(T) != reference) {
                out.verdict = Verdict::fail;
                out.witness = json{{"kind", "counterexample"}, {"probe", to_json(T)},
                                   {"reason", "free-product comparison failed"}};
                return out;
            }
        } else if (shape == "cone") {
            AmalgamData D = amalgam_from_json(payload.at("amalgam"));
            auto direct = amalgam_homs(D, T);
            std::set<std::vector<int>> amalgam_keys;
            for (const auto& t : direct) {
                std::vector<int> key;
                for (size_t c = 1; c < t.size(); ++c)
                    key.insert(key.end(), t[c].values.begin(), t[c].values.end());
                key.insert(key.end(), t[0].values.begin(), t[0].values.end());
                amalgam_keys.insert(std::move(key));
            }
            if (amalgam_keys != fast_keys) {
                out.verdict = Verdict::fail;
                out.witness = json{{"kind", "counterexample"}, {"probe", to_json(T)},
                                   {"reason", "amalgam comparison failed"}};
                return out;
            }
        }
        per_probe.push_back(json{{"probe", T.name.empty() ? json(to_json(T)) : json(T.name)},
                                 {"count", reference}});
    }
    out.witness = json{{"kind", "hom-count-bijection"}, {"shape", shape},
                       {"per_probe", per_probe}};
    return out;
}

CheckOutcome check_discrete_colimit_agreement(const json& payload, const Bounds& b)
{
    GroupBundle B = group_bundle_from_json(payload.at("bundle"));
    FiniteInternalCategory D = discrete_category(B.base);
    std::vector<GroupHom> action;
    for (const auto& f : B.fibres) action.push_back(identity_hom(f));
    InternalGroupDiagram P = make_internal_group_diagram(D, B, action);
    ProGroupByHoms via_colimit = colimit_via_coequaliser(D, P);
    ProGroupByHoms via_coproduct = internal_coproduct_groups(B);
    CheckOutcome out;
    json per_probe = json::array();
    for (const FiniteGroup& T : probe_groups(std::min(8, b.max_test_order))) {
        auto a = via_colimit.homs_to(T);
        auto c = via_coproduct.homs_to(T);
        bool same = a.size() == c.size();
        for (size_t i = 0; same && i < a.size(); ++i)
            for (size_t p = 0; same && p < a[i].size(); ++p)
                same = a[i][p].values == c[i][p].values;
        if (!same) {
            out.verdict = Verdict::fail;
            out.witness = json{{"kind", "counterexample"}, {"probe", to_json(T)},
                               {"lhs", a.size()}, {"rhs", c.size()}};
            return out;
        }
        per_probe.push_back(json{{"probe", T.name.empty() ? json(to_json(T)) : json(T.name)},
                                 {"count", a.size()}});
    }
    out.witness = json{{"kind", "hom-count-bijection"}, {"per_probe", per_probe}};
    return out;
}

CheckOutcome check_relative_adjunction(const json& payload)
{
    std::string pair = payload.at("pair").get<std::string>();
    CheckOutcome out;
    json checks = json::array();
    for (const auto& s : payload.at("samples")) {
        AdjunctionCheck r;
        if (pair == "free-forget") {
            FiniteRing ring = ring_from_json(s.at("ring"));
            r = check_free_forget_adjunction(ring, FiniteSpace{s.at("space").get<int>()},
                                             module_from_json(s.at("module"), ring));
        } else if (pair == "ab-inclusion") {
            r = check_abelianisation_adjunction(group_from_json(s.at("group")),
                                                group_from_json(s.at("abelian")));
        } else {
            throw Error("unknown adjunction pair: " + pair);
        }
        if (!r.bijection_ok) {
            out.verdict = Verdict::fail;
            out.witness = json{{"kind", "counterexample"}, {"sample", s},
                               {"lhs", r.left_count}, {"rhs", r.right_count}};
            return out;
        }
        checks.push_back(json{{"lhs", r.left_count}, {"rhs", r.right_count}});
    }
    out.witness = json{{"kind", "adjunction-bijections"}, {"pair", pair}, {"samples", checks}};
    return out;
}

CheckOutcome check_four_square(const json& payload)
{
    FiniteRing ring = ring_from_json(payload.at("ring"));
    SpaceBundle Y = space_bundle_from_json(payload.at("space_bundle"));
    std::vector<ModuleHom> samples;
    for (const auto& h : payload.at("sample_homs")) {
        FiniteModule dom = module_from_json(h.at("domain"));
        FiniteModule cod = module_from_json(h.at("codomain"));
        samples.push_back(make_module_hom(dom, cod, intmat_from_json(h.at("matrix"))));
    }
    FourSquareCheck r = check_four_square_free_forget(ring, Y, samples);
    CheckOutcome out;
    if (!r.left_square_ok || !r.right_square_ok) {
        out.verdict = Verdict::fail;
        out.witness = json{{"kind", "counterexample"},
                           {"left_square_ok", r.left_square_ok},
                           {"right_square_ok", r.right_square_ok}};
        return out;
    }
    ModuleHom iso = free_coproduct_iso(ring, Y);
    out.witness = json{{"kind", "isomorphism"},
                       {"domain", to_json(iso.domain)},
                       {"codomain", to_json(iso.codomain)},
                       {"matrix", to_json(iso.matrix)},
                       {"right_square", "exact"}};
    return out;
}

// greedy fibre removal: returns the smallest still-failing sub-bundle found
template <class BundleT, class Rebuild>
BundleT minimize_bundle_impl(BundleT current, const std::function<bool(const BundleT&)>& still_fails,
                             Rebuild rebuild)
{
    bool shrunk = true;
    while (shrunk && current.base.size > 1) {
        shrunk = false;
        for (int drop = 0; drop < current.base.size; ++drop) {
            BundleT candidate = rebuild(current, drop);
            if (still_fails(candidate)) {
                current = std::move(candidate);
                shrunk = true;
                break;
            }
        }
    }
    return current;
}

json minimized_counterexample_group(const GroupBundle& B,
                                    const std::function<bool(const GroupBundle&)>& still_fails)
{
    GroupBundle minimized = minimize_group_bundle(B, still_fails);
    return to_json(minimized);
}

json minimized_counterexample_module(const ModuleBundle& B,
                                     const std::function<bool(const ModuleBundle&)>& still_fails)
{
    ModuleBundle minimized = minimize_module_bundle(B, still_fails);
    return to_json(minimized);
}

} // namespace

GroupBundle minimize_group_bundle(const GroupBundle& B,
                                  const std::function<bool(const GroupBundle&)>& still_fails)
{
    return minimize_bundle_impl<GroupBundle>(B, still_fails, [](const GroupBundle& b, int drop) {
        std::vector<FiniteGroup> fibres;
        for (int x = 0; x < b.base.size; ++x)
            if (x != drop) fibres.push_back(b.fibres[static_cast<size_t>(x)]);
        return make_group_bundle(FiniteSpace{b.base.size - 1}, std::move(fibres));
    });
}

ModuleBundle minimize_module_bundle(const ModuleBundle& B,
                                    const std::function<bool(const ModuleBundle&)>& still_fails)
{
    return minimize_bundle_impl<ModuleBundle>(B, still_fails, [](const ModuleBundle& b, int drop) {
        std::vector<FiniteModule> fibres;
        for (int x = 0; x < b.base.size; ++x)
            if (x != drop) fibres.push_back(b.fibres[static_cast<size_t>(x)]);
        return make_module_bundle(FiniteSpace{b.base.size - 1}, b.ring, std::move(fibres));
    });
}

Report check(TheoremId id, const CheckInstance& instance)
{
    require(instance.theorem == id, "instance does not match the requested theorem");
    auto start = std::chrono::steady_clock::now();
    CheckOutcome outcome;
    switch (id) {
        case TheoremId::abelianisation_coproduct:
            outcome = check_abelianisation_coproduct(instance.payload, instance.bounds);
            break;
        case TheoremId::free_module_coproduct:
            outcome = check_free_module_coproduct(instance.payload);
            break;
        case TheoremId::tensor_coproduct:
            outcome = check_tensor_or_tor_coproduct(instance.payload, false);
            break;
        case TheoremId::tor_coproduct:
            outcome = check_tensor_or_tor_coproduct(instance.payload, true);
            break;
        case TheoremId::induction_coproduct:
            outcome = check_induction_coproduct(instance.payload);
            break;
        case TheoremId::restriction_coproduct:
            outcome = check_restriction_coproduct(instance.payload);
            break;
        case TheoremId::duality_involution:
            outcome = check_duality_involution(instance.payload);
            break;
        case TheoremId::duality_equivalence:
            outcome = check_duality_equivalence(instance.payload, instance.bounds);
            break;
        case TheoremId::colimit_coequaliser:
            outcome = check_colimit_coequaliser(instance.payload, instance.bounds);
            break;
        case TheoremId::discrete_colimit_agreement:
            outcome = check_discrete_colimit_agreement(instance.payload, instance.bounds);
            break;
        case TheoremId::relative_adjunction:
            outcome = check_relative_adjunction(instance.payload);
            break;
        case TheoremId::four_square:
            outcome = check_four_square(instance.payload);
            break;
    }
    auto end = std::chrono::steady_clock::now();
    Report r;
    r.theorem = id;
    r.seed = instance.seed;
    r.verdict = outcome.verdict;
    r.witness = std::move(outcome.witness);
    r.instance = instance.payload;
    r.digest = json_digest(instance.payload);
    r.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
    return r;
}

json report_to_json(const Report& r)
{
    return json{{"theorem", theorem_name(r.theorem)}, {"seed", r.seed},
                {"verdict", verdict_name(r.verdict)}, {"witness", r.witness},
                {"timing_ms", 0},                     {"instance", r.instance},
                {"digest", r.digest}};
}

bool verify_witness(const Report& r)
{
    if (r.verdict != Verdict::pass) return false;
    if (!r.witness.contains("kind")) return false;
    std::string kind = r.witness.at("kind").get<std::string>();
    if (kind == "isomorphism") {
        FiniteModule dom = module_from_json(r.witness.at("domain"));
        FiniteModule cod = module_from_json(r.witness.at("codomain"));
        IntMat m = intmat_from_json(r.witness.at("matrix"));
        if (!is_valid_module_hom(dom, cod, m)) return false;
        return is_bijective_module_hom(ModuleHom{dom, cod, mat_mod_rows(m, cod.factors)});
    }
    if (kind == "hom-count-bijection") {
        for (const auto& p : r.witness.at("per_probe")) {
            if (p.contains("lhs") && p.at("lhs") != p.at("rhs")) return false;
            if (p.contains("count") && p.at("count").get<u64>() == 0 &&
                p.value("bijection_checked", u64{0}) > 0)
                return false;
        }
        return true;
    }
    if (kind == "exact-equality") {
        return true;
    }
    if (kind == "double-dual-evaluation" || kind == "adjunction-bijections") return true;
    return false;
}

SuiteReport run_suite(const std::vector<TheoremId>& theorems, int trials, u64 seed,
                      const Bounds& bounds, int jobs)
{
    require(trials >= 1, "trials must be at least 1");
    validate_bounds(bounds);
    struct Task {
        TheoremId id;
        int trial;
    };
    std::vector<Task> tasks;
    for (TheoremId id : theorems)
        for (int i = 0; i < trials; ++i) tasks.push_back({id, i});

    std::vector<Report> reports(tasks.size());
    auto run_one = [&](size_t t) {
        u64 s = mix64(seed, static_cast<u64>(tasks[t].trial));
        CheckInstance inst = gen_instance(tasks[t].id, s, bounds);
        reports[t] = check(tasks[t].id, inst);
    };
    if (jobs <= 1) {
        for (size_t t = 0; t < tasks.size(); ++t) run_one(t);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::future<void>> workers;
        for (int w = 0; w < jobs; ++w)
            workers.push_back(std::async(std::launch::async, [&]() {
                for (;;) {
                    size_t t = next.fetch_add(1);
                    if (t >= tasks.size()) return;
                    run_one(t);
                }
            }));
        for (auto& w : workers) w.get();
    }

    SuiteReport out;
    out.reports = std::move(reports);
    out.overall = Verdict::pass;
    bool any_inconclusive = false;
    for (const auto& r : out.reports) {
        if (r.verdict == Verdict::fail) out.overall = Verdict::fail;
        if (r.verdict == Verdict::inconclusive) any_inconclusive = true;
    }
    if (out.overall == Verdict::pass && any_inconclusive) out.overall = Verdict::inconclusive;
    return out;
}

json suite_report_to_json(const SuiteReport& s)
{
    json reports = json::array();
    for (const auto& r : s.reports) reports.push_back(report_to_json(r));
    return json{{"overall", verdict_name(s.overall)}, {"reports", std::move(reports)}};
}

} // namespace probund
