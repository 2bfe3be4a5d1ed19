#include "probund/fingroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace probund {

int FiniteGroup::element_order(int a) const
{
    int x = a, n = 1;
    while (x != identity) {
        x = mul(x, a);
        ++n;
    }
    return n;
}

namespace {

std::vector<int> find_inverses(int order, const std::vector<int>& table, int identity)
{
    std::vector<int> inv(static_cast<size_t>(order), -1);
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            if (table[static_cast<size_t>(a) * order + b] == identity) {
                inv[static_cast<size_t>(a)] = b;
                break;
            }
    return inv;
}

} // namespace

FiniteGroup make_group(int order, std::vector<int> table, std::vector<int> generators, std::string name)
{
    require(order >= 1, "group order must be positive");
    require(static_cast<int>(table.size()) == order * order, "multiplication table size mismatch");
    for (int v : table) require(v >= 0 && v < order, "table entry out of range");

    int identity = -1;
    for (int e = 0; e < order && identity < 0; ++e) {
        bool ok = true;
        for (int a = 0; a < order && ok; ++a)
            ok = table[static_cast<size_t>(e) * order + a] == a && table[static_cast<size_t>(a) * order + e] == a;
        if (ok) identity = e;
    }
    require(identity >= 0, "no identity element");

    std::vector<int> inverses = find_inverses(order, table, identity);
    for (int v : inverses) require(v >= 0, "element without inverse");

    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            for (int c = 0; c < order; ++c) {
                int ab = table[static_cast<size_t>(a) * order + b];
                int bc = table[static_cast<size_t>(b) * order + c];
                require(table[static_cast<size_t>(ab) * order + c] == table[static_cast<size_t>(a) * order + bc],
                        "multiplication table not associative");
            }

    FiniteGroup G{order, std::move(table), identity, std::move(inverses), {}, std::move(name)};
    if (!generators.empty()) {
        for (int g : generators) require(g >= 0 && g < order, "generator index out of range");
        require(static_cast<int>(subgroup_closure(G, generators).size()) == order,
                "declared generators do not generate the group");
        G.generators = std::move(generators);
    }
    return G;
}

FiniteGroup trivial_group()
{
    return make_group(1, {0}, {}, "C1");
}

FiniteGroup cyclic_group(int n)
{
    require(n >= 1, "cyclic group order must be positive");
    std::vector<int> table(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            table[static_cast<size_t>(a) * n + b] = (a + b) % n;
    std::vector<int> gens;
    if (n > 1) gens.push_back(1);
    return make_group(n, std::move(table), std::move(gens), "C" + std::to_string(n));
}

FiniteGroup dihedral_group(int n)
{
    require(n >= 1, "dihedral parameter must be positive");
    // elements: r^a (index a) and r^a s (index n + a); s r = r^-1 s
    const int order = 2 * n;
    auto idx = [n](int flip, int a) { return flip * n + ((a % n) + n) % n; };
    std::vector<int> table(static_cast<size_t>(order) * order);
    for (int f1 = 0; f1 < 2; ++f1)
        for (int a1 = 0; a1 < n; ++a1)
            for (int f2 = 0; f2 < 2; ++f2)
                for (int a2 = 0; a2 < n; ++a2) {
                    // (r^a1 s^f1)(r^a2 s^f2) = r^(a1 + a2*(-1)^f1) s^(f1+f2)
                    int a = f1 ? a1 - a2 : a1 + a2;
                    int f = (f1 + f2) % 2;
                    table[static_cast<size_t>(idx(f1, a1)) * order + idx(f2, a2)] = idx(f, a);
                }
    std::vector<int> gens = {idx(0, 1), idx(1, 0)};
    if (n == 1) gens = {idx(1, 0)};
    return make_group(order, std::move(table), std::move(gens), "D" + std::to_string(n));
}

FiniteGroup symmetric3()
{
    FiniteGroup G = dihedral_group(3);
    G.name = "S3";
    return G;
}

FiniteGroup quaternion8()
{
    // 0:1, 1:-1, 2:i, 3:-i, 4:j, 5:-j, 6:k, 7:-k
    auto neg = [](int x) { return x ^ 1; };
    std::vector<int> table(64, -1);
    auto set = [&](int a, int b, int c) { table[static_cast<size_t>(a) * 8 + b] = c; };
    const int one = 0, i = 2, j = 4, k = 6;
    int base[3] = {i, j, k};
    for (int a = 0; a < 8; ++a) { set(one, a, a); set(a, one, a); }
    for (int a = 1; a < 8; ++a) { set(neg(one), a, neg(a)); if (a != neg(one)) set(a, neg(one), neg(a)); }
    set(neg(one), neg(one), one);
    // i*i = j*j = k*k = -1; i*j = k, j*k = i, k*i = j, anti-commuting
    for (int t = 0; t < 3; ++t) {
        int x = base[t], y = base[(t + 1) % 3], z = base[(t + 2) % 3];
        set(x, x, neg(one)); set(neg(x), x, one); set(x, neg(x), one); set(neg(x), neg(x), neg(one));
        set(x, y, z); set(y, x, neg(z));
        set(x, neg(y), neg(z)); set(neg(y), x, z);
        set(neg(x), y, neg(z)); set(y, neg(x), z);
        set(neg(x), neg(y), z); set(neg(y), neg(x), neg(z));
    }
    return make_group(8, std::move(table), {2, 4}, "Q8");
}

FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B)
{
    const int order = A.order * B.order;
    std::vector<int> table(static_cast<size_t>(order) * order);
    auto idx = [&](int a, int b) { return a * B.order + b; };
    for (int a1 = 0; a1 < A.order; ++a1)
        for (int b1 = 0; b1 < B.order; ++b1)
            for (int a2 = 0; a2 < A.order; ++a2)
                for (int b2 = 0; b2 < B.order; ++b2)
                    table[static_cast<size_t>(idx(a1, b1)) * order + idx(a2, b2)] =
                        idx(A.mul(a1, a2), B.mul(b1, b2));
    std::vector<int> gens;
    std::vector<int> ga = A.generators.empty() ? compute_generating_set(A) : A.generators;
    std::vector<int> gb = B.generators.empty() ? compute_generating_set(B) : B.generators;
    for (int g : ga) gens.push_back(idx(g, B.identity));
    for (int g : gb) gens.push_back(idx(A.identity, g));
    std::string name = A.name.empty() || B.name.empty() ? std::string{} : A.name + "x" + B.name;
    return make_group(order, std::move(table), std::move(gens), std::move(name));
}

FiniteGroup parse_group_spec(const std::string& spec)
{
    require(!spec.empty(), "empty group spec");
    std::vector<std::string> parts;
    size_t start = 0;
    while (start <= spec.size()) {
        size_t pos = spec.find('x', start);
        if (pos == std::string::npos) { parts.push_back(spec.substr(start)); break; }
        parts.push_back(spec.substr(start, pos - start));
        start = pos + 1;
    }
    auto atom = [](const std::string& s) -> FiniteGroup {
        require(!s.empty(), "empty factor in group spec");
        if (s == "1") return trivial_group();
        if (s == "S3") return symmetric3();
        if (s == "Q8") return quaternion8();
        char kind = s[0];
        require(kind == 'C' || kind == 'D', "unknown group spec: " + s);
        int n = 0;
        for (size_t i = 1; i < s.size(); ++i) {
            require(s[i] >= '0' && s[i] <= '9', "unknown group spec: " + s);
            n = n * 10 + (s[i] - '0');
        }
        require(n >= 1, "unknown group spec: " + s);
        return kind == 'C' ? cyclic_group(n) : dihedral_group(n);
    };
    FiniteGroup G = atom(parts[0]);
    for (size_t i = 1; i < parts.size(); ++i) G = direct_product(G, atom(parts[i]));
    G.name = spec;
    return G;
}

bool is_abelian(const FiniteGroup& G)
{
    for (int a = 0; a < G.order; ++a)
        for (int b = a + 1; b < G.order; ++b)
            if (G.mul(a, b) != G.mul(b, a)) return false;
    return true;
}

std::vector<int> subgroup_closure(const FiniteGroup& G, std::span<const int> seed)
{
    std::vector<char> in(static_cast<size_t>(G.order), 0);
    std::vector<int> stack;
    auto add = [&](int x) {
        if (!in[static_cast<size_t>(x)]) { in[static_cast<size_t>(x)] = 1; stack.push_back(x); }
    };
    add(G.identity);
    for (int s : seed) add(s);
    std::vector<int> members = stack;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        add(G.inv(x));
        for (size_t i = 0; i < members.size(); ++i) {
            add(G.mul(x, members[i]));
            add(G.mul(members[i], x));
        }
        members.clear();
        for (int y = 0; y < G.order; ++y)
            if (in[static_cast<size_t>(y)]) members.push_back(y);
    }
    std::vector<int> out;
    for (int y = 0; y < G.order; ++y)
        if (in[static_cast<size_t>(y)]) out.push_back(y);
    return out;
}

std::vector<int> normal_closure(const FiniteGroup& G, std::span<const int> seed)
{
    // orbit-closure: close the seed under conjugation, then take the subgroup
    std::vector<char> in(static_cast<size_t>(G.order), 0);
    std::vector<int> work(seed.begin(), seed.end());
    for (int s : work) in[static_cast<size_t>(s)] = 1;
    while (!work.empty()) {
        int x = work.back();
        work.pop_back();
        for (int g = 0; g < G.order; ++g) {
            int c = G.mul(G.mul(g, x), G.inv(g));
            if (!in[static_cast<size_t>(c)]) { in[static_cast<size_t>(c)] = 1; work.push_back(c); }
        }
    }
    std::vector<int> conj;
    for (int y = 0; y < G.order; ++y)
        if (in[static_cast<size_t>(y)]) conj.push_back(y);
    return subgroup_closure(G, conj);
}

std::vector<int> compute_generating_set(const FiniteGroup& G)
{
    std::vector<int> gens;
    std::vector<int> sub = subgroup_closure(G, gens);
    while (static_cast<int>(sub.size()) < G.order) {
        std::vector<char> in(static_cast<size_t>(G.order), 0);
        for (int s : sub) in[static_cast<size_t>(s)] = 1;
        for (int x = 0; x < G.order; ++x)
            if (!in[static_cast<size_t>(x)]) { gens.push_back(x); break; }
        sub = subgroup_closure(G, gens);
    }
    return gens;
}

bool is_valid_hom(const FiniteGroup& domain, const FiniteGroup& codomain, const std::vector<int>& values)
{
    if (static_cast<int>(values.size()) != domain.order) return false;
    for (int v : values)
        if (v < 0 || v >= codomain.order) return false;
    if (values[static_cast<size_t>(domain.identity)] != codomain.identity) return false;
    for (int a = 0; a < domain.order; ++a)
        for (int b = 0; b < domain.order; ++b)
            if (values[static_cast<size_t>(domain.mul(a, b))] !=
                codomain.mul(values[static_cast<size_t>(a)], values[static_cast<size_t>(b)]))
                return false;
    return true;
}

GroupHom make_group_hom(FiniteGroup domain, FiniteGroup codomain, std::vector<int> values)
{
    require(is_valid_hom(domain, codomain, values), "not a group homomorphism");
    return GroupHom{std::move(domain), std::move(codomain), std::move(values)};
}

GroupHom identity_hom(const FiniteGroup& G)
{
    std::vector<int> v(static_cast<size_t>(G.order));
    std::iota(v.begin(), v.end(), 0);
    return GroupHom{G, G, std::move(v)};
}

GroupHom trivial_hom(const FiniteGroup& domain, const FiniteGroup& codomain)
{
    return GroupHom{domain, codomain,
                    std::vector<int>(static_cast<size_t>(domain.order), codomain.identity)};
}

GroupHom compose(const GroupHom& g, const GroupHom& f)
{
    require(f.codomain.same_table(g.domain), "group homs not composable");
    std::vector<int> v(f.values.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = g.values[static_cast<size_t>(f.values[i])];
    return GroupHom{f.domain, g.codomain, std::move(v)};
}

bool is_injective_hom(const GroupHom& h)
{
    std::vector<char> seen(static_cast<size_t>(h.codomain.order), 0);
    for (int v : h.values) {
        if (seen[static_cast<size_t>(v)]) return false;
        seen[static_cast<size_t>(v)] = 1;
    }
    return true;
}

bool is_surjective_hom(const GroupHom& h)
{
    std::vector<char> seen(static_cast<size_t>(h.codomain.order), 0);
    for (int v : h.values) seen[static_cast<size_t>(v)] = 1;
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

namespace {

// BFS word decomposition: each element as (parent element, generator index).
struct WordTable {
    std::vector<int> order_of_visit; // elements in BFS order, identity first
    std::vector<int> parent;         // -1 for identity
    std::vector<int> via_gen;        // generator index used from parent
};

WordTable bfs_words(const FiniteGroup& G, const std::vector<int>& gens)
{
    WordTable w;
    w.parent.assign(static_cast<size_t>(G.order), -2);
    w.via_gen.assign(static_cast<size_t>(G.order), -1);
    w.parent[static_cast<size_t>(G.identity)] = -1;
    w.order_of_visit.push_back(G.identity);
    for (size_t head = 0; head < w.order_of_visit.size(); ++head) {
        int x = w.order_of_visit[head];
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            int y = G.mul(x, gens[gi]);
            if (w.parent[static_cast<size_t>(y)] == -2) {
                w.parent[static_cast<size_t>(y)] = x;
                w.via_gen[static_cast<size_t>(y)] = static_cast<int>(gi);
                w.order_of_visit.push_back(y);
            }
        }
    }
    return w;
}

void homs_by_generators(const FiniteGroup& G, const FiniteGroup& T,
                        const std::vector<int>& gens, std::vector<GroupHom>& out)
{
    WordTable words = bfs_words(G, gens);
    const size_t k = gens.size();
    std::vector<int> gen_ord(k);
    for (size_t i = 0; i < k; ++i) gen_ord[i] = G.element_order(gens[i]);

    std::vector<int> images(k, 0);
    std::vector<int> values(static_cast<size_t>(G.order));
    auto attempt = [&]() {
        values[static_cast<size_t>(G.identity)] = T.identity;
        for (size_t i = 1; i < words.order_of_visit.size(); ++i) {
            int x = words.order_of_visit[i];
            int p = words.parent[static_cast<size_t>(x)];
            int g = words.via_gen[static_cast<size_t>(x)];
            values[static_cast<size_t>(x)] = T.mul(values[static_cast<size_t>(p)], images[static_cast<size_t>(g)]);
        }
        for (int a = 0; a < G.order; ++a)
            for (int b = 0; b < G.order; ++b)
                if (values[static_cast<size_t>(G.mul(a, b))] !=
                    T.mul(values[static_cast<size_t>(a)], values[static_cast<size_t>(b)]))
                    return;
        out.push_back(GroupHom{G, T, values});
    };

    // odometer over image tuples; image orders must divide generator orders
    for (;;) {
        bool ok = true;
        for (size_t i = 0; i < k && ok; ++i)
            ok = gen_ord[i] % T.element_order(images[i]) == 0;
        if (ok) attempt();
        size_t pos = 0;
        while (pos < k) {
            if (++images[pos] < T.order) break;
            images[pos] = 0;
            ++pos;
        }
        if (pos == k) break;
        if (k == 0) break;
    }
    if (k == 0) attempt();
}

void homs_by_table_search(const FiniteGroup& G, const FiniteGroup& T, std::vector<GroupHom>& out)
{
    // DFS over images in element-index order, pruning on every fully
    // assigned product constraint.
    std::vector<int> values(static_cast<size_t>(G.order), -1);
    auto consistent = [&](int j) {
        for (int a = 0; a <= j; ++a) {
            if (values[static_cast<size_t>(a)] < 0) continue;
            int ab = G.mul(a, j), ba = G.mul(j, a);
            if (ab <= j && values[static_cast<size_t>(ab)] >= 0 &&
                values[static_cast<size_t>(ab)] != T.mul(values[static_cast<size_t>(a)], values[static_cast<size_t>(j)]))
                return false;
            if (ba <= j && values[static_cast<size_t>(ba)] >= 0 &&
                values[static_cast<size_t>(ba)] != T.mul(values[static_cast<size_t>(j)], values[static_cast<size_t>(a)]))
                return false;
        }
        return true;
    };
    auto dfs = [&](auto&& self, int j) -> void {
        if (j == G.order) {
            if (is_valid_hom(G, T, values)) out.push_back(GroupHom{G, T, values});
            return;
        }
        if (j == G.identity) {
            values[static_cast<size_t>(j)] = T.identity;
            if (consistent(j)) self(self, j + 1);
            values[static_cast<size_t>(j)] = -1;
            return;
        }
        for (int t = 0; t < T.order; ++t) {
            values[static_cast<size_t>(j)] = t;
            if (consistent(j)) self(self, j + 1);
        }
        values[static_cast<size_t>(j)] = -1;
    };
    dfs(dfs, 0);
}

} // namespace

std::vector<GroupHom> enumerate_homs(const FiniteGroup& G, const FiniteGroup& T)
{
    std::vector<GroupHom> out;
    if (!G.generators.empty()) {
        homs_by_generators(G, T, G.generators, out);
    } else if (G.order <= 16) {
        homs_by_table_search(G, T, out);
    } else {
        homs_by_generators(G, T, compute_generating_set(G), out);
    }
    std::sort(out.begin(), out.end(),
              [](const GroupHom& a, const GroupHom& b) { return a.values < b.values; });
    return out;
}

namespace {

QuotientResult quotient_by_normal_subgroup(const FiniteGroup& G, const std::vector<int>& N)
{
    std::vector<char> inN(static_cast<size_t>(G.order), 0);
    for (int x : N) inN[static_cast<size_t>(x)] = 1;
    // coset representative = minimal element of xN
    std::vector<int> rep(static_cast<size_t>(G.order), -1);
    for (int x = 0; x < G.order; ++x) {
        int r = x;
        for (int n : N) r = std::min(r, G.mul(x, n));
        rep[static_cast<size_t>(x)] = r;
    }
    std::vector<int> reps;
    for (int x = 0; x < G.order; ++x)
        if (rep[static_cast<size_t>(x)] == x) reps.push_back(x);
    std::vector<int> coset_of(static_cast<size_t>(G.order));
    for (int x = 0; x < G.order; ++x) {
        auto it = std::lower_bound(reps.begin(), reps.end(), rep[static_cast<size_t>(x)]);
        coset_of[static_cast<size_t>(x)] = static_cast<int>(it - reps.begin());
    }
    const int q = static_cast<int>(reps.size());
    std::vector<int> table(static_cast<size_t>(q) * q);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            table[static_cast<size_t>(i) * q + j] = coset_of[static_cast<size_t>(G.mul(reps[i], reps[j]))];
    std::vector<int> gens;
    if (!G.generators.empty()) {
        for (int g : G.generators) {
            int c = coset_of[static_cast<size_t>(g)];
            if (std::find(gens.begin(), gens.end(), c) == gens.end()) gens.push_back(c);
        }
    }
    FiniteGroup Q = make_group(q, std::move(table), std::move(gens));
    std::vector<int> proj(static_cast<size_t>(G.order));
    for (int x = 0; x < G.order; ++x) proj[static_cast<size_t>(x)] = coset_of[static_cast<size_t>(x)];
    GroupHom p = make_group_hom(G, Q, std::move(proj));
    return QuotientResult{std::move(Q), std::move(p)};
}

} // namespace

QuotientResult quotient_by_normal_closure(const FiniteGroup& G, std::span<const int> S)
{
    for (int s : S) require(s >= 0 && s < G.order, "quotient seed element out of range");
    return quotient_by_normal_subgroup(G, normal_closure(G, S));
}

QuotientResult abelianisation(const FiniteGroup& G)
{
    std::vector<int> comms;
    for (int a = 0; a < G.order; ++a)
        for (int b = 0; b < G.order; ++b)
            comms.push_back(G.mul(G.mul(G.inv(a), G.inv(b)), G.mul(a, b)));
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    return quotient_by_normal_subgroup(G, subgroup_closure(G, comms));
}

QuotientResult coequaliser(const GroupHom& f, const GroupHom& g)
{
    require(f.domain.same_table(g.domain) && f.codomain.same_table(g.codomain),
            "coequaliser needs a parallel pair");
    std::vector<int> rel;
    for (int h = 0; h < f.domain.order; ++h)
        rel.push_back(f.codomain.mul(f.apply(h), f.codomain.inv(g.apply(h))));
    return quotient_by_normal_closure(f.codomain, rel);
}

PushoutResult pushout_along_surjection(const GroupHom& f, const GroupHom& s)
{
    require(f.domain.same_table(s.domain), "pushout legs must share a domain");
    require(is_surjective_hom(s), "second pushout leg must be surjective");
    const FiniteGroup& G1 = f.codomain;
    std::vector<int> kernel_images;
    for (int h = 0; h < s.domain.order; ++h)
        if (s.apply(h) == s.codomain.identity) kernel_images.push_back(f.apply(h));
    QuotientResult q = quotient_by_normal_closure(G1, kernel_images);
    // G2 -> P: pick any preimage under s; well-defined because ker s dies in P
    std::vector<int> from2(static_cast<size_t>(s.codomain.order), -1);
    for (int h = 0; h < s.domain.order; ++h) {
        int tgt = q.projection.apply(f.apply(h));
        int c = s.apply(h);
        require(from2[static_cast<size_t>(c)] < 0 || from2[static_cast<size_t>(c)] == tgt,
                "pushout leg not well defined");
        from2[static_cast<size_t>(c)] = tgt;
    }
    GroupHom second = make_group_hom(s.codomain, q.quotient, std::move(from2));
    return PushoutResult{q.quotient, q.projection, std::move(second)};
}

Subgroup subgroup_from_elements(const FiniteGroup& G, std::span<const int> elems)
{
    std::vector<int> members = subgroup_closure(G, elems);
    std::vector<int> index_in_sub(static_cast<size_t>(G.order), -1);
    for (size_t i = 0; i < members.size(); ++i)
        index_in_sub[static_cast<size_t>(members[i])] = static_cast<int>(i);
    const int h = static_cast<int>(members.size());
    std::vector<int> table(static_cast<size_t>(h) * h);
    for (int a = 0; a < h; ++a)
        for (int b = 0; b < h; ++b)
            table[static_cast<size_t>(a) * h + b] =
                index_in_sub[static_cast<size_t>(G.mul(members[static_cast<size_t>(a)],
                                                       members[static_cast<size_t>(b)]))];
    FiniteGroup H = make_group(h, std::move(table));
    H.generators = compute_generating_set(H);
    GroupHom incl = make_group_hom(H, G, members);
    return Subgroup{std::move(H), std::move(incl)};
}

GroupIsoResult find_group_isomorphism(const FiniteGroup& G, const FiniteGroup& H, long long node_budget)
{
    if (G.order != H.order)
        return {GroupIsoResult::Status::none, std::nullopt};
    std::vector<int> og(static_cast<size_t>(G.order)), oh(static_cast<size_t>(H.order));
    for (int x = 0; x < G.order; ++x) og[static_cast<size_t>(x)] = G.element_order(x);
    for (int x = 0; x < H.order; ++x) oh[static_cast<size_t>(x)] = H.element_order(x);
    {
        auto a = og, b = oh;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return {GroupIsoResult::Status::none, std::nullopt};
    }
    std::vector<int> gens = G.generators.empty() ? compute_generating_set(G) : G.generators;
    WordTable words = bfs_words(G, gens);
    const size_t k = gens.size();
    std::vector<int> images(k, -1);
    std::vector<int> values(static_cast<size_t>(G.order));
    long long nodes = 0;
    bool exhausted_budget = false;

    auto check_full = [&]() -> bool {
        values[static_cast<size_t>(G.identity)] = H.identity;
        for (size_t i = 1; i < words.order_of_visit.size(); ++i) {
            int x = words.order_of_visit[i];
            values[static_cast<size_t>(x)] =
                H.mul(values[static_cast<size_t>(words.parent[static_cast<size_t>(x)])],
                      images[static_cast<size_t>(words.via_gen[static_cast<size_t>(x)])]);
        }
        std::vector<char> seen(static_cast<size_t>(H.order), 0);
        for (int v : values) {
            if (seen[static_cast<size_t>(v)]) return false;
            seen[static_cast<size_t>(v)] = 1;
        }
        return is_valid_hom(G, H, values);
    };

    std::optional<GroupHom> found;
    auto dfs = [&](auto&& self, size_t pos) -> bool {
        if (found) return true;
        if (++nodes > node_budget) { exhausted_budget = true; return true; }
        if (pos == k) {
            if (check_full()) {
                found = GroupHom{G, H, values};
                return true;
            }
            return false;
        }
        for (int t = 0; t < H.order; ++t) {
            if (oh[static_cast<size_t>(t)] != og[static_cast<size_t>(gens[pos])]) continue;
            images[pos] = t;
            if (self(self, pos + 1)) return true;
        }
        images[pos] = -1;
        return false;
    };
    dfs(dfs, 0);
    if (found) return {GroupIsoResult::Status::found, std::move(found)};
    if (exhausted_budget) return {GroupIsoResult::Status::inconclusive, std::nullopt};
    return {GroupIsoResult::Status::none, std::nullopt};
}

std::vector<FiniteGroup> abelian_catalog(int max_order)
{
    // invariant-factor chains d1 | d2 | ... with product <= max_order
    std::vector<FiniteGroup> out;
    out.push_back(trivial_group());
    std::vector<std::vector<int>> chains;
    auto extend = [&](auto&& self, std::vector<int> chain, int product) -> void {
        if (!chain.empty()) chains.push_back(chain);
        int last = chain.empty() ? 2 : chain.back();
        for (int d = last; product * d <= max_order; ++d)
            if (chain.empty() || d % chain.back() == 0) {
                auto next = chain;
                next.push_back(d);
                self(self, std::move(next), product * d);
            }
    };
    extend(extend, {}, 1);
    std::sort(chains.begin(), chains.end(), [](const auto& a, const auto& b) {
        long long pa = 1, pb = 1;
        for (int x : a) pa *= x;
        for (int x : b) pb *= x;
        return pa != pb ? pa < pb : a < b;
    });
    for (const auto& chain : chains) {
        FiniteGroup G = cyclic_group(chain[0]);
        for (size_t i = 1; i < chain.size(); ++i) G = direct_product(G, cyclic_group(chain[i]));
        out.push_back(std::move(G));
    }
    return out;
}

std::vector<FiniteGroup> catalog_order_le8()
{
    std::vector<FiniteGroup> out = abelian_catalog(8);
    out.push_back(symmetric3());
    out.push_back(dihedral_group(4));
    out.push_back(quaternion8());
    std::stable_sort(out.begin(), out.end(),
                     [](const FiniteGroup& a, const FiniteGroup& b) { return a.order < b.order; });
    return out;
}

std::vector<FiniteGroup> default_test_groups(int max_order)
{
    std::vector<FiniteGroup> out = abelian_catalog(std::min(max_order, 12));
    for (FiniteGroup g : {symmetric3(), dihedral_group(4), quaternion8()})
        if (g.order <= max_order) out.push_back(std::move(g));
    return out;
}

std::vector<FiniteGroup> generator_pool(int max_order)
{
    std::vector<FiniteGroup> out = abelian_catalog(std::min(max_order, 24));
    for (FiniteGroup g : {symmetric3(), dihedral_group(4), quaternion8(), dihedral_group(5),
                          dihedral_group(6), direct_product(symmetric3(), cyclic_group(2)),
                          dihedral_group(12)})
        if (g.order <= max_order) out.push_back(std::move(g));
    return out;
}

} // namespace probund
