#include "probund/json_io.hpp"

#include <cinttypes>

namespace probund {

namespace {

std::vector<int> int_vector(const json& j)
{
    require(j.is_array(), "expected an array");
    std::vector<int> v;
    for (const auto& e : j) v.push_back(e.get<int>());
    return v;
}

std::vector<i64> i64_vector(const json& j)
{
    require(j.is_array(), "expected an array");
    std::vector<i64> v;
    for (const auto& e : j) v.push_back(e.get<i64>());
    return v;
}

} // namespace

json to_json(const FiniteSpace& X)
{
    return json{{"size", X.size}};
}

FiniteSpace space_from_json(const json& j)
{
    int n = j.at("size").get<int>();
    require(n >= 0, "space size must be nonnegative");
    return FiniteSpace{n};
}

json to_json(const SpaceMap& f)
{
    return json{{"domain", f.domain.size}, {"codomain", f.codomain.size}, {"values", f.values}};
}

SpaceMap space_map_from_json(const json& j)
{
    return make_space_map(FiniteSpace{j.at("domain").get<int>()},
                          FiniteSpace{j.at("codomain").get<int>()}, int_vector(j.at("values")));
}

json to_json(const FiniteGroup& G)
{
    json table = json::array();
    for (int a = 0; a < G.order; ++a) {
        json row = json::array();
        for (int b = 0; b < G.order; ++b) row.push_back(G.mul(a, b));
        table.push_back(std::move(row));
    }
    json out{{"order", G.order}, {"table", std::move(table)}};
    if (!G.generators.empty()) out["generators"] = G.generators;
    if (!G.name.empty()) out["name"] = G.name;
    return out;
}

FiniteGroup group_from_json(const json& j)
{
    if (j.is_string()) return parse_group_spec(j.get<std::string>());
    int order = j.at("order").get<int>();
    std::vector<int> table;
    for (const auto& row : j.at("table"))
        for (const auto& e : row) table.push_back(e.get<int>());
    std::vector<int> gens;
    if (j.contains("generators")) gens = int_vector(j.at("generators"));
    std::string name = j.value("name", std::string{});
    return make_group(order, std::move(table), std::move(gens), std::move(name));
}

json to_json(const GroupHom& h)
{
    return json{{"domain", to_json(h.domain)}, {"codomain", to_json(h.codomain)},
                {"values", h.values}};
}

GroupHom group_hom_from_json(const json& j)
{
    return make_group_hom(group_from_json(j.at("domain")), group_from_json(j.at("codomain")),
                          int_vector(j.at("values")));
}

json to_json(const FiniteRing& R)
{
    if (R.is_zmod()) return json{{"kind", "Zmod"}, {"n", R.n}};
    return json{{"kind", "GroupAlgebra"}, {"n", R.n}, {"group", to_json(*R.group)}};
}

FiniteRing ring_from_json(const json& j)
{
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "Zmod") return zmod_ring(j.at("n").get<i64>());
    if (kind == "GroupAlgebra")
        return group_algebra(j.at("n").get<i64>(), group_from_json(j.at("group")));
    throw Error("unknown ring kind: " + kind);
}

json to_json(const IntMat& m)
{
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(m.at(i, c));
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows}, {"cols", m.cols}, {"entries", std::move(rows)}};
}

IntMat intmat_from_json(const json& j)
{
    IntMat m(j.at("rows").get<int>(), j.at("cols").get<int>());
    const auto& rows = j.at("entries");
    for (int i = 0; i < m.rows; ++i)
        for (int c = 0; c < m.cols; ++c) m.at(i, c) = rows.at(static_cast<size_t>(i)).at(static_cast<size_t>(c)).get<i64>();
    return m;
}

json to_json(const FiniteModule& M)
{
    json action = json::array();
    for (const auto& X : M.action) action.push_back(to_json(X));
    return json{{"ring", to_json(M.ring)},
                {"invariant_factors", M.factors},
                {"action", std::move(action)},
                {"side", M.side == ModuleSide::left ? "left" : "right"}};
}

FiniteModule module_from_json(const json& j)
{
    require(j.contains("ring"), "module JSON needs a ring");
    FiniteRing ring = ring_from_json(j.at("ring"));
    return module_from_json(j, ring);
}

FiniteModule module_from_json(const json& j, const FiniteRing& default_ring)
{
    FiniteRing ring = j.contains("ring") ? ring_from_json(j.at("ring")) : default_ring;
    ModuleSide side = ModuleSide::left;
    if (j.contains("side")) {
        std::string s = j.at("side").get<std::string>();
        require(s == "left" || s == "right", "module side must be left or right");
        if (s == "right") side = ModuleSide::right;
    }
    std::vector<IntMat> action;
    if (j.contains("action"))
        for (const auto& a : j.at("action")) action.push_back(intmat_from_json(a));
    if (action.empty() && ring.algebra_generators() > 0) {
        int k = static_cast<int>(j.at("invariant_factors").size());
        action.assign(static_cast<size_t>(ring.algebra_generators()), IntMat::identity(k));
    }
    return make_module(ring, side, i64_vector(j.at("invariant_factors")), std::move(action));
}

json to_json(const ModuleHom& h)
{
    return json{{"domain", to_json(h.domain)}, {"codomain", to_json(h.codomain)},
                {"matrix", to_json(h.matrix)}};
}

json to_json(const SpaceBundle& B)
{
    json fibres = json::array();
    for (const auto& f : B.fibres) fibres.push_back(f.size);
    return json{{"base", B.base.size}, {"kind", "space"}, {"fibres", std::move(fibres)}};
}

json to_json(const GroupBundle& B)
{
    json fibres = json::array();
    for (const auto& f : B.fibres) fibres.push_back(to_json(f));
    return json{{"base", B.base.size}, {"kind", "group"}, {"fibres", std::move(fibres)}};
}

json to_json(const ModuleBundle& B)
{
    json fibres = json::array();
    for (const auto& f : B.fibres) fibres.push_back(to_json(f));
    return json{{"base", B.base.size}, {"kind", "module"}, {"fibres", std::move(fibres)},
                {"ring", to_json(B.ring)}};
}

SpaceBundle space_bundle_from_json(const json& j)
{
    require(j.value("kind", "space") == std::string("space"), "expected a space bundle");
    std::vector<FiniteSpace> fibres;
    for (const auto& f : j.at("fibres")) fibres.push_back(FiniteSpace{f.get<int>()});
    return make_space_bundle(FiniteSpace{j.at("base").get<int>()}, std::move(fibres));
}

GroupBundle group_bundle_from_json(const json& j)
{
    require(j.value("kind", "group") == std::string("group"), "expected a group bundle");
    std::vector<FiniteGroup> fibres;
    for (const auto& f : j.at("fibres")) fibres.push_back(group_from_json(f));
    return make_group_bundle(FiniteSpace{j.at("base").get<int>()}, std::move(fibres));
}

ModuleBundle module_bundle_from_json(const json& j)
{
    require(j.value("kind", "module") == std::string("module"), "expected a module bundle");
    FiniteRing ring = ring_from_json(j.at("ring"));
    std::vector<FiniteModule> fibres;
    for (const auto& f : j.at("fibres")) fibres.push_back(module_from_json(f, ring));
    return make_module_bundle(FiniteSpace{j.at("base").get<int>()}, ring, std::move(fibres));
}

json to_json(const FiniteInternalCategory& A)
{
    json comp = json::array();
    for (const auto& [pair, gf] : A.comp) comp.push_back(json::array({pair.first, pair.second, gf}));
    return json{{"A0", A.objects.size}, {"A1", A.arrows.size},   {"d0", A.source.values},
                {"d1", A.target.values}, {"ident", A.ident.values}, {"comp", std::move(comp)}};
}

FiniteInternalCategory internal_category_from_json(const json& j)
{
    FiniteSpace objects{j.at("A0").get<int>()};
    FiniteSpace arrows{j.at("A1").get<int>()};
    std::map<std::pair<int, int>, int> comp;
    for (const auto& triple : j.at("comp")) {
        require(triple.size() == 3, "composition entries are triples [f, g, gf]");
        comp[{triple.at(0).get<int>(), triple.at(1).get<int>()}] = triple.at(2).get<int>();
    }
    return make_internal_category(objects, arrows,
                                  make_space_map(arrows, objects, int_vector(j.at("d0"))),
                                  make_space_map(arrows, objects, int_vector(j.at("d1"))),
                                  make_space_map(objects, arrows, int_vector(j.at("ident"))),
                                  std::move(comp));
}

json to_json(const InternalGroupDiagram& P)
{
    json action = json::array();
    for (const auto& h : P.action) action.push_back(h.values);
    return json{{"category", to_json(P.category)}, {"bundle", to_json(P.bundle)},
                {"action", std::move(action)}};
}

InternalGroupDiagram internal_group_diagram_from_json(const json& j)
{
    FiniteInternalCategory A = internal_category_from_json(j.at("category"));
    GroupBundle B = group_bundle_from_json(j.at("bundle"));
    std::vector<GroupHom> action;
    const auto& arr = j.at("action");
    require(arr.size() == static_cast<size_t>(A.arrows.size), "one action per arrow");
    for (int f = 0; f < A.arrows.size; ++f) {
        const FiniteGroup& dom = B.fibres[static_cast<size_t>(A.source.apply(f))];
        const FiniteGroup& cod = B.fibres[static_cast<size_t>(A.target.apply(f))];
        action.push_back(make_group_hom(dom, cod, int_vector(arr.at(static_cast<size_t>(f)))));
    }
    return make_internal_group_diagram(std::move(A), std::move(B), std::move(action));
}

json to_json(const AmalgamData& D)
{
    json groups = json::array(), thetas = json::array();
    for (const auto& g : D.vertex_groups) groups.push_back(to_json(g));
    for (const auto& t : D.theta) thetas.push_back(t.values);
    return json{{"points", D.points.size}, {"amalgam", to_json(D.amalgam)},
                {"vertex_groups", std::move(groups)}, {"theta", std::move(thetas)}};
}

AmalgamData amalgam_from_json(const json& j)
{
    FiniteSpace points{j.at("points").get<int>()};
    FiniteGroup H = group_from_json(j.at("amalgam"));
    std::vector<FiniteGroup> groups;
    for (const auto& g : j.at("vertex_groups")) groups.push_back(group_from_json(g));
    std::vector<GroupHom> theta;
    const auto& th = j.at("theta");
    require(th.size() == groups.size(), "one theta per vertex group");
    for (size_t x = 0; x < groups.size(); ++x)
        theta.push_back(make_group_hom(H, groups[x], int_vector(th.at(x))));
    return make_amalgam_data(points, std::move(H), std::move(groups), std::move(theta));
}

json functor_to_json(const FibrewiseFunctor& F)
{
    json out{{"id", F.name()}};
    if (F.ring) out["ring"] = to_json(*F.ring);
    if (F.coefficient) out["coefficient"] = to_json(*F.coefficient);
    if (F.id == FibrewiseFunctor::Id::tor_with) out["i"] = F.tor_index;
    if (F.inclusion) out["inclusion"] = to_json(*F.inclusion);
    return out;
}

FibrewiseFunctor functor_from_json(const json& j)
{
    std::optional<FiniteRing> ring;
    if (j.contains("ring")) ring = ring_from_json(j.at("ring"));
    std::optional<FiniteModule> coeff;
    if (j.contains("coefficient")) coeff = module_from_json(j.at("coefficient"));
    std::optional<GroupHom> incl;
    if (j.contains("inclusion")) incl = group_hom_from_json(j.at("inclusion"));
    return functor_by_name(j.at("id").get<std::string>(), std::move(ring), std::move(coeff),
                           j.value("i", 0), std::move(incl));
}

GroupTower group_tower_from_json(const json& j, int max_depth)
{
    std::string family = j.at("family").get<std::string>();
    if (family == "constant-group") return constant_group_tower(group_from_json(j.at("group")), max_depth);
    if (family == "Zmod-chain") return zmod_chain_tower(j.at("base").get<i64>(), max_depth);
    throw Error("unknown group tower family: " + family);
}

BundleTower bundle_tower_from_json(const json& j, int max_depth)
{
    std::string family = j.at("family").get<std::string>();
    if (family == "converging-to-one") {
        std::vector<FiniteGroup> groups;
        for (const auto& g : j.at("groups")) groups.push_back(group_from_json(g));
        return converging_to_one_tower(groups, max_depth);
    }
    throw Error("unknown bundle tower family: " + family);
}

std::string json_digest(const json& j)
{
    const std::string dump = j.dump();
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : dump) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
    return std::string(buf);
}

} // namespace probund
