#include "probund/internalcat.hpp"

#include <algorithm>
#include <functional>

namespace probund {

int FiniteInternalCategory::compose_arrows(int f, int g) const
{
    auto it = comp.find({f, g});
    require(it != comp.end(), "arrows are not composable");
    return it->second;
}

bool FiniteInternalCategory::is_identity_arrow(int f) const
{
    for (int a = 0; a < objects.size; ++a)
        if (ident.apply(a) == f) return true;
    return false;
}

FiniteInternalCategory make_internal_category(FiniteSpace objects, FiniteSpace arrows,
                                              SpaceMap source, SpaceMap target, SpaceMap ident,
                                              std::map<std::pair<int, int>, int> comp)
{
    require(source.domain == arrows && source.codomain == objects, "d0 shape mismatch");
    require(target.domain == arrows && target.codomain == objects, "d1 shape mismatch");
    require(ident.domain == objects && ident.codomain == arrows, "identity map shape mismatch");
    FiniteInternalCategory A{objects, arrows, source, target, ident, std::move(comp)};

    for (int a = 0; a < objects.size; ++a) {
        int ia = A.ident.apply(a);
        require(A.source.apply(ia) == a && A.target.apply(ia) == a,
                "identity arrow has wrong endpoints");
    }
    // the table covers exactly the composable pairs, with matching endpoints
    for (int f = 0; f < arrows.size; ++f)
        for (int g = 0; g < arrows.size; ++g) {
            bool composable = A.target.apply(f) == A.source.apply(g);
            auto it = A.comp.find({f, g});
            require(composable == (it != A.comp.end()),
                    "composition table must cover exactly the composable pairs");
            if (!composable) continue;
            int gf = it->second;
            require(gf >= 0 && gf < arrows.size, "composite out of range");
            require(A.source.apply(gf) == A.source.apply(f) && A.target.apply(gf) == A.target.apply(g),
                    "composite has wrong endpoints");
        }
    // identities are units
    for (int f = 0; f < arrows.size; ++f) {
        require(A.compose_arrows(A.ident.apply(A.source.apply(f)), f) == f, "left unit law fails");
        require(A.compose_arrows(f, A.ident.apply(A.target.apply(f))) == f, "right unit law fails");
    }
    // associativity over all composable triples
    for (int f = 0; f < arrows.size; ++f)
        for (int g = 0; g < arrows.size; ++g) {
            if (A.target.apply(f) != A.source.apply(g)) continue;
            for (int h = 0; h < arrows.size; ++h) {
                if (A.target.apply(g) != A.source.apply(h)) continue;
                require(A.compose_arrows(A.compose_arrows(f, g), h) ==
                            A.compose_arrows(f, A.compose_arrows(g, h)),
                        "composition not associative");
            }
        }
    return A;
}

FiniteInternalCategory discrete_category(FiniteSpace X)
{
    std::map<std::pair<int, int>, int> comp;
    for (int x = 0; x < X.size; ++x) comp[{x, x}] = x;
    return make_internal_category(X, X, identity_map(X), identity_map(X), identity_map(X),
                                  std::move(comp));
}

FiniteInternalCategory cone_graph_category(FiniteSpace X)
{
    const int n = X.size;
    FiniteSpace objects{n + 1};          // X then the cone point *
    FiniteSpace arrows{2 * n + 1};       // edges 0..n-1, identities n..2n
    const int star = n;
    auto edge = [](int x) { return x; };
    auto idarrow = [n](int a) { return n + a; };

    std::vector<int> d0(static_cast<size_t>(arrows.size)), d1(static_cast<size_t>(arrows.size));
    for (int x = 0; x < n; ++x) {
        d0[static_cast<size_t>(edge(x))] = star;
        d1[static_cast<size_t>(edge(x))] = x;
    }
    for (int a = 0; a <= n; ++a) {
        d0[static_cast<size_t>(idarrow(a))] = a;
        d1[static_cast<size_t>(idarrow(a))] = a;
    }
    std::vector<int> identv(static_cast<size_t>(objects.size));
    for (int a = 0; a <= n; ++a) identv[static_cast<size_t>(a)] = idarrow(a);

    std::map<std::pair<int, int>, int> comp;
    for (int a = 0; a <= n; ++a) comp[{idarrow(a), idarrow(a)}] = idarrow(a);
    for (int x = 0; x < n; ++x) {
        comp[{idarrow(star), edge(x)}] = edge(x);
        comp[{edge(x), idarrow(x)}] = edge(x);
    }
    return make_internal_category(objects, arrows,
                                  make_space_map(arrows, objects, std::move(d0)),
                                  make_space_map(arrows, objects, std::move(d1)),
                                  make_space_map(objects, arrows, std::move(identv)),
                                  std::move(comp));
}

FiniteInternalCategory parallel_pair_category()
{
    FiniteSpace objects{2};
    FiniteSpace arrows{4}; // id_a, id_b, f, g
    std::map<std::pair<int, int>, int> comp;
    comp[{0, 0}] = 0;
    comp[{1, 1}] = 1;
    comp[{0, 2}] = 2;
    comp[{2, 1}] = 2;
    comp[{0, 3}] = 3;
    comp[{3, 1}] = 3;
    return make_internal_category(objects, arrows,
                                  make_space_map(arrows, objects, {0, 1, 0, 0}),
                                  make_space_map(arrows, objects, {0, 1, 1, 1}),
                                  make_space_map(objects, arrows, {0, 1}), std::move(comp));
}

FiniteInternalCategory span_category()
{
    // objects: 0 = apex a, 1 = b, 2 = c; arrows: identities then a->b, a->c
    FiniteSpace objects{3};
    FiniteSpace arrows{5};
    std::map<std::pair<int, int>, int> comp;
    for (int a = 0; a < 3; ++a) comp[{a, a}] = a;
    comp[{0, 3}] = 3;
    comp[{3, 1}] = 3;
    comp[{0, 4}] = 4;
    comp[{4, 2}] = 4;
    return make_internal_category(objects, arrows,
                                  make_space_map(arrows, objects, {0, 1, 2, 0, 0}),
                                  make_space_map(arrows, objects, {0, 1, 2, 1, 2}),
                                  make_space_map(objects, arrows, {0, 1, 2}), std::move(comp));
}

InternalGroupDiagram make_internal_group_diagram(FiniteInternalCategory category, GroupBundle bundle,
                                                 std::vector<GroupHom> action)
{
    require(bundle.base == category.objects, "diagram bundle must live over the object space");
    require(static_cast<int>(action.size()) == category.arrows.size, "one hom per arrow required");
    for (int f = 0; f < category.arrows.size; ++f) {
        const GroupHom& h = action[static_cast<size_t>(f)];
        require(h.domain.same_table(bundle.fibres[static_cast<size_t>(category.source.apply(f))]),
                "arrow action domain mismatch");
        require(h.codomain.same_table(bundle.fibres[static_cast<size_t>(category.target.apply(f))]),
                "arrow action codomain mismatch");
        require(is_valid_hom(h.domain, h.codomain, h.values), "arrow action is not a homomorphism");
    }
    for (int a = 0; a < category.objects.size; ++a)
        require(action[static_cast<size_t>(category.ident.apply(a))].values ==
                    identity_hom(bundle.fibres[static_cast<size_t>(a)]).values,
                "identity arrows must act as identities");
    for (const auto& [pair, gf] : category.comp) {
        const auto& [f, g] = pair;
        GroupHom composite = compose(action[static_cast<size_t>(g)], action[static_cast<size_t>(f)]);
        require(composite.values == action[static_cast<size_t>(gf)].values,
                "diagram is not functorial");
    }
    return InternalGroupDiagram{std::move(category), std::move(bundle), std::move(action)};
}

AmalgamData make_amalgam_data(FiniteSpace points, FiniteGroup amalgam,
                              std::vector<FiniteGroup> vertex_groups, std::vector<GroupHom> theta)
{
    require(static_cast<int>(vertex_groups.size()) == points.size, "one vertex group per point");
    require(static_cast<int>(theta.size()) == points.size, "one embedding per point");
    for (int x = 0; x < points.size; ++x) {
        const GroupHom& t = theta[static_cast<size_t>(x)];
        require(t.domain.same_table(amalgam), "theta domain must be the amalgamated group");
        require(t.codomain.same_table(vertex_groups[static_cast<size_t>(x)]),
                "theta codomain must be the vertex group");
        require(is_injective_hom(t), "theta must be injective");
    }
    return AmalgamData{points, std::move(amalgam), std::move(vertex_groups), std::move(theta)};
}

InternalGroupDiagram amalgam_to_diagram(const AmalgamData& D)
{
    FiniteInternalCategory A = cone_graph_category(D.points);
    const int n = D.points.size;
    std::vector<FiniteGroup> fibres = D.vertex_groups;
    fibres.push_back(D.amalgam); // over the cone point
    GroupBundle bundle = make_group_bundle(A.objects, std::move(fibres));
    std::vector<GroupHom> action;
    for (int x = 0; x < n; ++x) action.push_back(D.theta[static_cast<size_t>(x)]); // edges
    for (int a = 0; a <= n; ++a) action.push_back(identity_hom(bundle.fibres[static_cast<size_t>(a)]));
    return make_internal_group_diagram(std::move(A), std::move(bundle), std::move(action));
}

namespace {

// product over per-point hom lists with early constraint pruning; the
// constraints are pairs (f, point-order positions) checked once both ends
// are assigned
std::vector<HomTuple> constrained_tuples(const std::vector<std::vector<GroupHom>>& lists,
                                         const FiniteInternalCategory* cat,
                                         const std::vector<GroupHom>* action)
{
    std::vector<HomTuple> out;
    const size_t n = lists.size();
    std::vector<const GroupHom*> chosen(n, nullptr);

    // arrows checkable once all points <= p are assigned
    std::vector<std::vector<int>> check_at(n);
    if (cat) {
        for (int f = 0; f < cat->arrows.size; ++f) {
            int a = cat->source.apply(f), b = cat->target.apply(f);
            check_at[static_cast<size_t>(std::max(a, b))].push_back(f);
        }
    }

    std::function<void(size_t)> rec = [&](size_t p) {
        if (p == n) {
            HomTuple t;
            for (const GroupHom* h : chosen) t.push_back(*h);
            out.push_back(std::move(t));
            return;
        }
        for (const GroupHom& cand : lists[p]) {
            chosen[p] = &cand;
            bool ok = true;
            if (cat)
                for (int f : check_at[p]) {
                    const GroupHom& alpha_src = *chosen[static_cast<size_t>(cat->source.apply(f))];
                    const GroupHom& alpha_tgt = *chosen[static_cast<size_t>(cat->target.apply(f))];
                    const GroupHom& pf = (*action)[static_cast<size_t>(f)];
                    // alpha_{d1 f} o P(f) = alpha_{d0 f}
                    for (int x = 0; x < pf.domain.order && ok; ++x)
                        if (alpha_tgt.apply(pf.apply(x)) != alpha_src.apply(x)) ok = false;
                    if (!ok) break;
                }
            if (ok) rec(p + 1);
        }
        chosen[p] = nullptr;
    };
    if (n == 0) {
        out.push_back({});
        return out;
    }
    rec(0);
    return out;
}

} // namespace

std::vector<HomTuple> ProGroupByHoms::homs_to(const FiniteGroup& T) const
{
    if (const auto* c = std::get_if<CoproductData>(&data)) {
        std::vector<std::vector<GroupHom>> lists;
        for (const auto& f : c->bundle.fibres) lists.push_back(enumerate_homs(f, T));
        return constrained_tuples(lists, nullptr, nullptr);
    }
    if (const auto* c = std::get_if<ColimitData>(&data)) {
        std::vector<std::vector<GroupHom>> lists;
        for (const auto& f : c->diagram.bundle.fibres) lists.push_back(enumerate_homs(f, T));
        return constrained_tuples(lists, &c->diagram.category, &c->diagram.action);
    }
    if (const auto* c = std::get_if<AmalgamData>(&data)) return amalgam_homs(*c, T);
    const auto& f = std::get<FiniteData>(data);
    std::vector<HomTuple> out;
    for (const auto& h : enumerate_homs(f.group, T)) out.push_back({h});
    return out;
}

u64 ProGroupByHoms::count_homs_to(const FiniteGroup& T) const
{
    if (const auto* c = std::get_if<CoproductData>(&data)) {
        u64 prod = 1;
        for (const auto& f : c->bundle.fibres) prod *= enumerate_homs(f, T).size();
        return prod;
    }
    if (const auto* c = std::get_if<FiniteData>(&data)) return enumerate_homs(c->group, T).size();
    return homs_to(T).size();
}

ProGroupByHoms internal_coproduct_groups(const GroupBundle& B)
{
    return ProGroupByHoms{ProGroupByHoms::CoproductData{B}};
}

ProGroupByHoms colimit_via_coequaliser(const FiniteInternalCategory& A, const InternalGroupDiagram& P)
{
    require(P.category.objects == A.objects && P.category.arrows == A.arrows &&
                P.category.source.values == A.source.values &&
                P.category.target.values == A.target.values,
            "diagram does not live over the category");
    return ProGroupByHoms{ProGroupByHoms::ColimitData{P}};
}

ProGroupByHoms amalgam_progroup(const AmalgamData& D)
{
    return ProGroupByHoms{D};
}

ProGroupByHoms finite_progroup(const FiniteGroup& G)
{
    return ProGroupByHoms{ProGroupByHoms::FiniteData{G}};
}

std::vector<HomTuple> amalgam_homs(const AmalgamData& D, const FiniteGroup& T)
{
    std::vector<HomTuple> out;
    const int n = D.points.size;
    std::vector<std::vector<GroupHom>> vertex_homs;
    for (int x = 0; x < n; ++x)
        vertex_homs.push_back(enumerate_homs(D.vertex_groups[static_cast<size_t>(x)], T));

    for (const GroupHom& beta_star : enumerate_homs(D.amalgam, T)) {
        std::vector<std::vector<const GroupHom*>> compatible(static_cast<size_t>(n));
        bool feasible = true;
        for (int x = 0; x < n && feasible; ++x) {
            for (const GroupHom& b : vertex_homs[static_cast<size_t>(x)])
                if (compose(b, D.theta[static_cast<size_t>(x)]).values == beta_star.values)
                    compatible[static_cast<size_t>(x)].push_back(&b);
            if (compatible[static_cast<size_t>(x)].empty()) feasible = false;
        }
        if (!feasible) continue;
        std::vector<size_t> idx(static_cast<size_t>(n), 0);
        for (;;) {
            HomTuple t;
            t.push_back(beta_star);
            for (int x = 0; x < n; ++x) t.push_back(*compatible[static_cast<size_t>(x)][idx[static_cast<size_t>(x)]]);
            out.push_back(std::move(t));
            size_t pos = 0;
            while (pos < idx.size()) {
                if (++idx[pos] < compatible[pos].size()) break;
                idx[pos] = 0;
                ++pos;
            }
            if (pos == idx.size()) break;
            if (n == 0) break;
        }
        if (n == 0) continue;
    }
    return out;
}

HomTuple postcompose_tuple(const HomTuple& tuple, const GroupHom& t)
{
    HomTuple out;
    for (const auto& h : tuple) out.push_back(compose(t, h));
    return out;
}

} // namespace probund
