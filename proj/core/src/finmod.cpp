#include "probund/finmod.hpp"

#include <algorithm>
#include <numeric>

#include "probund/rng.hpp"

namespace probund {

namespace {

IntMat reduce_rows(IntMat A, const std::vector<i64>& factors)
{
    return mat_mod_rows(std::move(A), factors);
}

bool equal_mod_rows(const IntMat& A, const IntMat& B, const std::vector<i64>& factors)
{
    if (A.rows != B.rows || A.cols != B.cols) return false;
    for (int i = 0; i < A.rows; ++i) {
        i64 m = factors[static_cast<size_t>(i)];
        for (int j = 0; j < A.cols; ++j)
            if (((A.at(i, j) - B.at(i, j)) % m + m) % m != 0) return false;
    }
    return true;
}

} // namespace

u64 FiniteRing::size() const
{
    u64 s = 1;
    int count = is_zmod() ? 1 : group->order;
    for (int i = 0; i < count; ++i) {
        u64 nf;
        if (__builtin_mul_overflow(s, static_cast<u64>(n), &nf)) throw Error("ring too large");
        s = nf;
    }
    return s;
}

FiniteRing zmod_ring(i64 n)
{
    require(n >= 2, "Zmod ring needs n >= 2");
    return FiniteRing{n, std::nullopt};
}

FiniteRing group_algebra(i64 n, FiniteGroup G)
{
    require(n >= 2, "group algebra base needs n >= 2");
    if (G.generators.empty() && G.order > 1) G.generators = compute_generating_set(G);
    return FiniteRing{n, std::move(G)};
}

bool same_ring(const FiniteRing& a, const FiniteRing& b)
{
    if (a.n != b.n || a.is_zmod() != b.is_zmod()) return false;
    if (a.is_zmod()) return true;
    return a.group->same_table(*b.group) && a.group->generators == b.group->generators;
}

u64 FiniteModule::order() const
{
    u64 s = 1;
    for (i64 f : factors) {
        u64 nf;
        if (__builtin_mul_overflow(s, static_cast<u64>(f), &nf)) throw Error("module too large");
        s = nf;
    }
    return s;
}

IntMat element_action(const FiniteModule& M, int group_element)
{
    const int k = M.rank();
    if (M.ring.is_zmod()) {
        require(group_element == 0, "scalar ring has no group elements");
        return IntMat::identity(k);
    }
    const FiniteGroup& G = *M.ring.group;
    require(group_element >= 0 && group_element < G.order, "group element out of range");
    if (group_element == G.identity) return IntMat::identity(k);

    // BFS word decomposition along the ring's generator list
    const std::vector<int>& gens = G.generators;
    std::vector<int> parent(static_cast<size_t>(G.order), -2), via(static_cast<size_t>(G.order), -1);
    std::vector<int> queue = {G.identity};
    parent[static_cast<size_t>(G.identity)] = -1;
    for (size_t h = 0; h < queue.size(); ++h)
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            int y = G.mul(queue[h], gens[gi]);
            if (parent[static_cast<size_t>(y)] == -2) {
                parent[static_cast<size_t>(y)] = queue[h];
                via[static_cast<size_t>(y)] = static_cast<int>(gi);
                queue.push_back(y);
            }
        }
    require(parent[static_cast<size_t>(group_element)] != -2, "ring generators do not reach element");

    std::vector<int> word; // generator indices, left-to-right product
    for (int x = group_element; parent[static_cast<size_t>(x)] != -1; x = parent[static_cast<size_t>(x)])
        word.push_back(via[static_cast<size_t>(x)]);
    std::reverse(word.begin(), word.end());

    IntMat X = IntMat::identity(k);
    for (int gi : word) {
        const IntMat& S = M.action[static_cast<size_t>(gi)];
        // left module: X(p*g) = X(p)*X(g); right module: X(p*g) = X(g)*X(p)
        X = (M.side == ModuleSide::left) ? mat_mul(X, S) : mat_mul(S, X);
        X = reduce_rows(std::move(X), M.factors);
    }
    return X;
}

FiniteModule make_module(FiniteRing ring, ModuleSide side, std::vector<i64> factors,
                         std::vector<IntMat> action)
{
    for (size_t i = 0; i < factors.size(); ++i) {
        require(factors[i] > 1, "invariant factors must exceed 1");
        require(ring.n % factors[i] == 0, "invariant factor must divide the ring characteristic");
        if (i + 1 < factors.size())
            require(factors[i + 1] % factors[i] == 0, "invariant factors must form a divisibility chain");
    }
    const int k = static_cast<int>(factors.size());
    require(static_cast<int>(action.size()) == ring.algebra_generators(),
            "one action matrix per ring algebra generator required");
    for (auto& X : action) {
        require(X.rows == k && X.cols == k, "action matrix shape mismatch");
        X = reduce_rows(std::move(X), factors);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                require((checked_mul(X.at(i, j), factors[static_cast<size_t>(j)])) % factors[static_cast<size_t>(i)] == 0,
                        "action matrix entry violates congruence conditions");
    }
    FiniteModule M{std::move(ring), side, std::move(factors), std::move(action)};
    if (!M.ring.is_zmod()) {
        const FiniteGroup& G = *M.ring.group;
        std::vector<IntMat> X(static_cast<size_t>(G.order));
        for (int g = 0; g < G.order; ++g) X[static_cast<size_t>(g)] = element_action(M, g);
        require(X[static_cast<size_t>(G.identity)] == IntMat::identity(k),
                "identity must act as the identity matrix");
        for (int g = 0; g < G.order; ++g)
            for (int h = 0; h < G.order; ++h) {
                int gh = G.mul(g, h);
                IntMat prod = (M.side == ModuleSide::left)
                                  ? mat_mul(X[static_cast<size_t>(g)], X[static_cast<size_t>(h)])
                                  : mat_mul(X[static_cast<size_t>(h)], X[static_cast<size_t>(g)]);
                require(equal_mod_rows(reduce_rows(std::move(prod), M.factors), X[static_cast<size_t>(gh)], M.factors),
                        "action is not functorial for the group law");
            }
    }
    return M;
}

FiniteModule zero_module(FiniteRing ring, ModuleSide side)
{
    std::vector<IntMat> action(static_cast<size_t>(ring.algebra_generators()), IntMat(0, 0));
    return make_module(std::move(ring), side, {}, std::move(action));
}

FiniteModule zmod_module(const FiniteRing& ring, std::vector<i64> factors)
{
    require(ring.is_zmod(), "zmod_module needs a Zmod ring");
    return make_module(ring, ModuleSide::left, std::move(factors), {});
}

FiniteModule change_zmod_ring(const FiniteModule& M, i64 new_n)
{
    require(M.ring.is_zmod(), "change_zmod_ring needs a Zmod module");
    return make_module(zmod_ring(new_n), M.side, M.factors, {});
}

FiniteModule flip_side(const FiniteModule& M)
{
    if (M.ring.is_zmod()) {
        FiniteModule N = M;
        N.side = (M.side == ModuleSide::left) ? ModuleSide::right : ModuleSide::left;
        return N;
    }
    const FiniteGroup& G = *M.ring.group;
    std::vector<IntMat> action;
    for (int gi : G.generators) action.push_back(element_action(M, G.inv(gi)));
    ModuleSide flipped = (M.side == ModuleSide::left) ? ModuleSide::right : ModuleSide::left;
    return make_module(M.ring, flipped, M.factors, std::move(action));
}

std::vector<i64> module_element(const FiniteModule& M, u64 index)
{
    std::vector<i64> x(M.factors.size());
    for (size_t i = 0; i < M.factors.size(); ++i) {
        x[i] = static_cast<i64>(index % static_cast<u64>(M.factors[i]));
        index /= static_cast<u64>(M.factors[i]);
    }
    return x;
}

u64 module_element_index(const FiniteModule& M, const std::vector<i64>& coords)
{
    u64 idx = 0;
    for (size_t i = M.factors.size(); i-- > 0;) {
        i64 c = ((coords[i] % M.factors[i]) + M.factors[i]) % M.factors[i];
        idx = idx * static_cast<u64>(M.factors[i]) + static_cast<u64>(c);
    }
    return idx;
}

std::vector<i64> ModuleHom::apply(const std::vector<i64>& x) const
{
    return vec_mod(mat_apply(matrix, x), codomain.factors);
}

bool is_valid_module_hom(const FiniteModule& domain, const FiniteModule& codomain, const IntMat& matrix)
{
    if (!same_ring(domain.ring, codomain.ring) || domain.side != codomain.side) return false;
    if (matrix.rows != codomain.rank() || matrix.cols != domain.rank()) return false;
    for (int i = 0; i < matrix.rows; ++i)
        for (int j = 0; j < matrix.cols; ++j)
            if (checked_mul(matrix.at(i, j), domain.factors[static_cast<size_t>(j)]) %
                    codomain.factors[static_cast<size_t>(i)] != 0)
                return false;
    for (size_t g = 0; g < domain.action.size(); ++g) {
        IntMat lhs = reduce_rows(mat_mul(matrix, domain.action[g]), codomain.factors);
        IntMat rhs = reduce_rows(mat_mul(codomain.action[g], matrix), codomain.factors);
        if (!equal_mod_rows(lhs, rhs, codomain.factors)) return false;
    }
    return true;
}

ModuleHom make_module_hom(FiniteModule domain, FiniteModule codomain, IntMat matrix)
{
    matrix = reduce_rows(std::move(matrix), codomain.factors);
    require(is_valid_module_hom(domain, codomain, matrix), "not a module homomorphism");
    return ModuleHom{std::move(domain), std::move(codomain), std::move(matrix)};
}

ModuleHom identity_module_hom(const FiniteModule& M)
{
    return ModuleHom{M, M, IntMat::identity(M.rank())};
}

ModuleHom zero_module_hom(const FiniteModule& domain, const FiniteModule& codomain)
{
    return ModuleHom{domain, codomain, IntMat(codomain.rank(), domain.rank())};
}

ModuleHom compose(const ModuleHom& g, const ModuleHom& f)
{
    require(g.domain.factors == f.codomain.factors && same_ring(g.domain.ring, f.codomain.ring),
            "module homs not composable");
    return ModuleHom{f.domain, g.codomain,
                     reduce_rows(mat_mul(g.matrix, f.matrix), g.codomain.factors)};
}

bool is_injective_module_hom(const ModuleHom& h)
{
    const int k = h.domain.rank();
    std::vector<i64> cond = h.codomain.factors;
    SolutionGroup ker = solve_congruence_system(h.matrix, cond, h.domain.factors);
    (void)k;
    return ker.count() == 1;
}

bool is_bijective_module_hom(const ModuleHom& h)
{
    return h.domain.order() == h.codomain.order() && is_injective_module_hom(h);
}

SolutionGroup module_hom_solutions(const FiniteModule& M, const FiniteModule& N)
{
    require(same_ring(M.ring, N.ring), "hom solutions need a common ring");
    require(M.side == N.side, "hom solutions need a common side");
    const int k = M.rank(), l = N.rank();
    const int unknowns = k * l; // t[(j,i)] at j*k + i
    std::vector<i64> unknown_mod(static_cast<size_t>(unknowns));
    for (int j = 0; j < l; ++j)
        for (int i = 0; i < k; ++i)
            unknown_mod[static_cast<size_t>(j * k + i)] = N.factors[static_cast<size_t>(j)];

    std::vector<std::vector<i64>> rows;
    std::vector<i64> row_mod;
    for (int j = 0; j < l; ++j)
        for (int i = 0; i < k; ++i) {
            std::vector<i64> r(static_cast<size_t>(unknowns), 0);
            r[static_cast<size_t>(j * k + i)] = M.factors[static_cast<size_t>(i)];
            rows.push_back(std::move(r));
            row_mod.push_back(N.factors[static_cast<size_t>(j)]);
        }
    for (size_t g = 0; g < M.action.size(); ++g) {
        const IntMat& XD = M.action[g];
        const IntMat& XC = N.action[g];
        for (int j = 0; j < l; ++j)
            for (int i = 0; i < k; ++i) {
                std::vector<i64> r(static_cast<size_t>(unknowns), 0);
                for (int a = 0; a < k; ++a)
                    r[static_cast<size_t>(j * k + a)] =
                        checked_add(r[static_cast<size_t>(j * k + a)], XD.at(a, i));
                for (int b = 0; b < l; ++b)
                    r[static_cast<size_t>(b * k + i)] =
                        checked_add(r[static_cast<size_t>(b * k + i)], -XC.at(j, b));
                rows.push_back(std::move(r));
                row_mod.push_back(N.factors[static_cast<size_t>(j)]);
            }
    }
    IntMat A(static_cast<int>(rows.size()), unknowns);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < unknowns; ++j)
            A.at(static_cast<int>(i), j) = rows[i][static_cast<size_t>(j)];
    return solve_congruence_system(A, row_mod, unknown_mod);
}

u64 count_module_homs(const FiniteModule& M, const FiniteModule& N)
{
    return module_hom_solutions(M, N).count();
}

namespace {

IntMat vec_to_matrix(const std::vector<i64>& t, int rows, int cols)
{
    IntMat T(rows, cols);
    for (int j = 0; j < rows; ++j)
        for (int i = 0; i < cols; ++i)
            T.at(j, i) = t[static_cast<size_t>(j * cols + i)];
    return T;
}

} // namespace

std::vector<ModuleHom> enumerate_module_homs(const FiniteModule& M, const FiniteModule& N, u64 cap)
{
    SolutionGroup sg = module_hom_solutions(M, N);
    u64 total = sg.count();
    require(total <= cap, "hom set larger than enumeration cap");
    std::vector<ModuleHom> out;
    out.reserve(total);
    for (u64 idx = 0; idx < total; ++idx)
        out.push_back(ModuleHom{M, N, vec_to_matrix(sg.element(idx), N.rank(), M.rank())});
    return out;
}

ModuleIsoResult find_module_isomorphism(const FiniteModule& A, const FiniteModule& B, u64 search_budget)
{
    if (A.factors != B.factors || !same_ring(A.ring, B.ring) || A.side != B.side)
        return {ModuleIsoResult::Status::none, std::nullopt};
    IntMat id = IntMat::identity(A.rank());
    if (is_valid_module_hom(A, B, id)) {
        ModuleHom h{A, B, id};
        if (is_bijective_module_hom(h)) return {ModuleIsoResult::Status::found, std::move(h)};
    }
    SolutionGroup sg = module_hom_solutions(A, B);
    u64 total = sg.count();
    if (total <= search_budget) {
        for (u64 idx = 0; idx < total; ++idx) {
            ModuleHom h{A, B, vec_to_matrix(sg.element(idx), B.rank(), A.rank())};
            if (is_bijective_module_hom(h)) return {ModuleIsoResult::Status::found, std::move(h)};
        }
        return {ModuleIsoResult::Status::none, std::nullopt};
    }
    Rng rng(0x15A6B07D5EEDULL);
    for (u64 tries = 0; tries < search_budget; ++tries) {
        std::vector<i64> coords(sg.factors.size());
        for (size_t i = 0; i < coords.size(); ++i)
            coords[i] = static_cast<i64>(rng.below(static_cast<u64>(sg.factors[i])));
        ModuleHom h{A, B, vec_to_matrix(sg.element_from_coords(coords), B.rank(), A.rank())};
        if (is_bijective_module_hom(h)) return {ModuleIsoResult::Status::found, std::move(h)};
    }
    return {ModuleIsoResult::Status::inconclusive, std::nullopt};
}

// ---- direct sums ----------------------------------------------------------

DirectSum direct_sum(const std::vector<FiniteModule>& summands, std::optional<FiniteRing> ring,
                     ModuleSide side)
{
    FiniteRing R = ring ? *ring : (summands.empty() ? zmod_ring(2) : summands[0].ring);
    ModuleSide S = summands.empty() ? side : summands[0].side;
    for (const auto& m : summands) {
        require(same_ring(m.ring, R), "direct sum needs a common ring");
        require(m.side == S, "direct sum needs a common side");
    }
    int gens = 0;
    for (const auto& m : summands) gens += m.rank();
    std::vector<i64> concat;
    for (const auto& m : summands) concat.insert(concat.end(), m.factors.begin(), m.factors.end());
    AbelianCanonicalForm canon = canonicalize_presentation(gens, diag_matrix(concat));

    const int ngen = R.algebra_generators();
    std::vector<IntMat> action;
    for (int g = 0; g < ngen; ++g) {
        IntMat block(gens, gens);
        int off = 0;
        for (const auto& m : summands) {
            const IntMat& X = m.action[static_cast<size_t>(g)];
            for (int i = 0; i < m.rank(); ++i)
                for (int j = 0; j < m.rank(); ++j)
                    block.at(off + i, off + j) = X.at(i, j);
            off += m.rank();
        }
        action.push_back(mat_mul(canon.to_canon, mat_mul(block, canon.from_canon)));
    }
    FiniteModule sum = make_module(R, S, canon.factors, std::move(action));

    DirectSum out;
    out.module = sum;
    int off = 0;
    for (const auto& m : summands) {
        IntMat inj(sum.rank(), m.rank()), proj(m.rank(), sum.rank());
        for (int r = 0; r < sum.rank(); ++r)
            for (int c = 0; c < m.rank(); ++c)
                inj.at(r, c) = canon.to_canon.at(r, off + c);
        for (int r = 0; r < m.rank(); ++r)
            for (int c = 0; c < sum.rank(); ++c)
                proj.at(r, c) = canon.from_canon.at(off + r, c);
        out.injections.push_back(make_module_hom(m, sum, std::move(inj)));
        out.projections.push_back(make_module_hom(sum, m, std::move(proj)));
        off += m.rank();
    }
    return out;
}

// ---- free modules ---------------------------------------------------------

FreeModule free_module(const FiniteRing& ring, FiniteSpace X, ModuleSide side)
{
    const int rrank = X.size;
    const int gsize = ring.is_zmod() ? 1 : ring.group->order;
    const int ab = rrank * gsize;
    std::vector<i64> factors(static_cast<size_t>(ab), ring.n);
    std::vector<IntMat> action;
    if (!ring.is_zmod()) {
        const FiniteGroup& G = *ring.group;
        for (int gi : G.generators) {
            IntMat P(ab, ab);
            for (int i = 0; i < rrank; ++i)
                for (int h = 0; h < gsize; ++h) {
                    int tgt = (side == ModuleSide::left) ? G.mul(gi, h) : G.mul(h, gi);
                    P.at(i * gsize + tgt, i * gsize + h) = 1;
                }
            action.push_back(std::move(P));
        }
    }
    return FreeModule{make_module(ring, side, std::move(factors), std::move(action)), rrank};
}

std::vector<i64> free_basis_element(const FiniteRing& ring, int rrank, int i)
{
    const int gsize = ring.is_zmod() ? 1 : ring.group->order;
    std::vector<i64> v(static_cast<size_t>(rrank * gsize), 0);
    int id = ring.is_zmod() ? 0 : ring.group->identity;
    v[static_cast<size_t>(i * gsize + id)] = 1;
    return v;
}

// ---- tensor products ------------------------------------------------------

TensorResult tensor(const FiniteModule& M, const FiniteModule& N)
{
    require(same_ring(M.ring, N.ring), "tensor needs a common ring");
    if (!M.ring.is_zmod()) {
        require(M.side == ModuleSide::right, "tensor over a group algebra needs a right module on the left");
        require(N.side == ModuleSide::left, "tensor over a group algebra needs a left module on the right");
    }
    const int k = M.rank(), l = N.rank();
    const int gens = k * l; // (i,j) -> i*l + j
    std::vector<IntMat> relation_blocks;
    std::vector<std::vector<i64>> cols;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < l; ++j) {
            std::vector<i64> c1(static_cast<size_t>(gens), 0), c2(static_cast<size_t>(gens), 0);
            c1[static_cast<size_t>(i * l + j)] = M.factors[static_cast<size_t>(i)];
            c2[static_cast<size_t>(i * l + j)] = N.factors[static_cast<size_t>(j)];
            cols.push_back(std::move(c1));
            cols.push_back(std::move(c2));
        }
    for (size_t g = 0; g < M.action.size(); ++g) {
        const IntMat& Y = M.action[g]; // right action of generator g on M
        const IntMat& X = N.action[g]; // left action on N
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < l; ++j) {
                std::vector<i64> c(static_cast<size_t>(gens), 0);
                for (int a = 0; a < k; ++a)
                    c[static_cast<size_t>(a * l + j)] = checked_add(c[static_cast<size_t>(a * l + j)], Y.at(a, i));
                for (int b = 0; b < l; ++b)
                    c[static_cast<size_t>(i * l + b)] = checked_add(c[static_cast<size_t>(i * l + b)], -X.at(b, j));
                cols.push_back(std::move(c));
            }
    }
    IntMat rel(gens, static_cast<int>(cols.size()));
    for (size_t c = 0; c < cols.size(); ++c)
        for (int r = 0; r < gens; ++r)
            rel.at(r, static_cast<int>(c)) = cols[c][static_cast<size_t>(r)];
    AbelianCanonicalForm canon = canonicalize_presentation(gens, rel);
    TensorResult out;
    out.module = zmod_module(zmod_ring(M.ring.n), canon.factors);
    out.grid_to_canon = std::move(canon.to_canon);
    out.canon_to_grid = std::move(canon.from_canon);
    out.m_rank = k;
    out.n_rank = l;
    return out;
}

ModuleHom tensor_hom(const ModuleHom& f, const FiniteModule& N,
                     const TensorResult& source, const TensorResult& target)
{
    const int k = source.m_rank, l = source.n_rank;
    const int k2 = target.m_rank;
    require(f.matrix.cols == k && f.matrix.rows == k2, "tensor_hom shape mismatch");
    require(l == target.n_rank, "tensor_hom coefficient mismatch");
    IntMat grid(k2 * l, k * l);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < l; ++j)
            for (int a = 0; a < k2; ++a)
                grid.at(a * l + j, i * l + j) = f.matrix.at(a, i);
    (void)N;
    IntMat m = mat_mul(target.grid_to_canon, mat_mul(grid, source.canon_to_grid));
    return make_module_hom(source.module, target.module, std::move(m));
}

// ---- free resolutions and Tor ---------------------------------------------

namespace {

struct ResolutionData {
    FiniteRing ring;
    std::vector<i64> target_factors;
    int gsize = 1;
    std::vector<int> rrank;             // levels 0..depth
    std::vector<IntMat> boundary;       // boundary[0] = eps, boundary[j] : F_j -> F_{j-1}
    std::vector<std::vector<i64>> mods; // abelian moduli per level
};

// right-regular permutation of a free right module column: index (i,h) -> (i, h*g)
std::vector<i64> right_translate(const FiniteRing& ring, int rrank, const std::vector<i64>& col, int g)
{
    if (ring.is_zmod()) return col;
    const FiniteGroup& G = *ring.group;
    std::vector<i64> out(col.size(), 0);
    for (int i = 0; i < rrank; ++i)
        for (int h = 0; h < G.order; ++h)
            out[static_cast<size_t>(i * G.order + G.mul(h, g))] = col[static_cast<size_t>(i * G.order + h)];
    return out;
}

IntMat column_of(const IntMat& A, int j)
{
    IntMat c(A.rows, 1);
    for (int i = 0; i < A.rows; ++i) c.at(i, 0) = A.at(i, j);
    return c;
}

std::vector<i64> column_vec(const IntMat& A, int j)
{
    std::vector<i64> c(static_cast<size_t>(A.rows));
    for (int i = 0; i < A.rows; ++i) c[static_cast<size_t>(i)] = A.at(i, j);
    return c;
}

// Extend u_p (image of ring-basis element p) R-linearly over a free right module.
IntMat extend_right_linear(const FiniteRing& ring, int src_rrank, int dst_rows,
                           const std::vector<std::vector<i64>>& u)
{
    const int gsize = ring.is_zmod() ? 1 : ring.group->order;
    IntMat out(dst_rows, src_rrank * gsize);
    for (int p = 0; p < src_rrank; ++p)
        for (int g = 0; g < gsize; ++g) {
            std::vector<i64> col = right_translate(ring, dst_rows / gsize, u[static_cast<size_t>(p)], g);
            if (ring.is_zmod()) col = u[static_cast<size_t>(p)];
            for (int r = 0; r < dst_rows; ++r) out.at(r, p * gsize + g) = col[static_cast<size_t>(r)];
        }
    return out;
}

ResolutionData resolve(const FiniteModule& M, int depth, ResolutionStyle style)
{
    require(M.ring.is_zmod() || M.side == ModuleSide::right,
            "resolutions are built over right modules");
    ResolutionData res;
    res.ring = M.ring;
    res.target_factors = M.factors;
    res.gsize = M.ring.is_zmod() ? 1 : M.ring.group->order;

    // F0 covers the module's cyclic generators
    int r0 = M.rank();
    res.rrank.push_back(r0);
    res.mods.push_back(std::vector<i64>(static_cast<size_t>(r0 * res.gsize), M.ring.n));
    IntMat eps(M.rank(), r0 * res.gsize);
    for (int p = 0; p < r0; ++p)
        for (int g = 0; g < res.gsize; ++g) {
            int ge = M.ring.is_zmod() ? 0 : g;
            IntMat act = element_action(M, ge);
            for (int r = 0; r < M.rank(); ++r) eps.at(r, p * res.gsize + g) = act.at(r, p);
        }
    res.boundary.push_back(std::move(eps));

    for (int j = 1; j <= depth; ++j) {
        const IntMat& prev = res.boundary[static_cast<size_t>(j - 1)];
        const std::vector<i64>& prev_target =
            (j == 1) ? res.target_factors : res.mods[static_cast<size_t>(j - 2)];
        const std::vector<i64>& cur_mods = res.mods[static_cast<size_t>(j - 1)];
        IntMat W = kernel_mod_lattice(prev, prev_target);
        IntMat kgens;
        if (style == ResolutionStyle::canonical_generators) {
            IntMat rel = kernel_mod_lattice(W, cur_mods);
            AbelianCanonicalForm canon = canonicalize_presentation(W.cols, rel);
            kgens = mat_mul(W, canon.from_canon);
        } else {
            kgens = W;
        }
        kgens = reduce_rows(std::move(kgens), cur_mods);
        int rj = kgens.cols;
        res.rrank.push_back(rj);
        res.mods.push_back(std::vector<i64>(static_cast<size_t>(rj * res.gsize), res.ring.n));
        std::vector<std::vector<i64>> u;
        for (int q = 0; q < rj; ++q) u.push_back(column_vec(kgens, q));
        res.boundary.push_back(extend_right_linear(res.ring, rj,
                                                   res.rrank[static_cast<size_t>(j - 1)] * res.gsize, u));
    }
    return res;
}

// coefficient-wise tensor of a map between free right modules with N:
// block (p,q) = sum_g coeff_g(column (q,id), block p) * action_N(g)
IntMat tensor_free_map(const FiniteRing& ring, const IntMat& f, int src_rrank, int dst_rrank,
                       const FiniteModule& N)
{
    const int gsize = ring.is_zmod() ? 1 : ring.group->order;
    const int kn = N.rank();
    IntMat out(dst_rrank * kn, src_rrank * kn);
    std::vector<IntMat> Nact;
    if (!ring.is_zmod())
        for (int g = 0; g < gsize; ++g) Nact.push_back(element_action(N, g));
    int id = ring.is_zmod() ? 0 : ring.group->identity;
    for (int q = 0; q < src_rrank; ++q) {
        for (int p = 0; p < dst_rrank; ++p) {
            // r_{pq} = sum_g c_g g read off the (q, id) column
            for (int g = 0; g < gsize; ++g) {
                i64 c = f.at(p * gsize + g, q * gsize + id);
                if (c == 0) continue;
                if (ring.is_zmod()) {
                    for (int t = 0; t < kn; ++t)
                        out.at(p * kn + t, q * kn + t) =
                            checked_add(out.at(p * kn + t, q * kn + t), c);
                } else {
                    const IntMat& X = Nact[static_cast<size_t>(g)];
                    for (int r = 0; r < kn; ++r)
                        for (int t = 0; t < kn; ++t)
                            out.at(p * kn + r, q * kn + t) =
                                checked_add(out.at(p * kn + r, q * kn + t), checked_mul(c, X.at(r, t)));
                }
            }
        }
    }
    return out;
}

std::vector<i64> repeat_factors(const std::vector<i64>& f, int times)
{
    std::vector<i64> out;
    for (int t = 0; t < times; ++t) out.insert(out.end(), f.begin(), f.end());
    return out;
}

struct TorData {
    FiniteModule module;
    // homology bookkeeping at position i, for induced maps:
    IntMat cycles;              // lattice basis of Z_i inside T_i
    std::vector<i64> Ti_mods;
    IntMat h_to_canon;          // Z-coords -> H canonical coords
    IntMat h_from_canon;
    ResolutionData res;
    std::vector<IntMat> D;      // tensored differentials, D[j] : T_j -> T_{j-1}, j = 1..i+1
};

TorData tor_compute(int i, const FiniteModule& M, const FiniteModule& N, ResolutionStyle style)
{
    require(i >= 0, "tor index must be nonnegative");
    require(same_ring(M.ring, N.ring), "tor needs a common ring");
    if (!M.ring.is_zmod()) {
        require(M.side == ModuleSide::right, "tor needs a right module on the left");
        require(N.side == ModuleSide::left, "tor needs a left module on the right");
    }
    FiniteModule Mr = M;
    if (M.ring.is_zmod()) Mr.side = ModuleSide::right;

    TorData td;
    td.res = resolve(Mr, i + 1, style);
    const int kn = N.rank();
    auto t_mods = [&](int j) {
        return repeat_factors(N.factors, td.res.rrank[static_cast<size_t>(j)]);
    };
    for (int j = 1; j <= i + 1; ++j)
        td.D.push_back(tensor_free_map(td.res.ring, td.res.boundary[static_cast<size_t>(j)],
                                       td.res.rrank[static_cast<size_t>(j)],
                                       td.res.rrank[static_cast<size_t>(j - 1)], N));
    td.Ti_mods = t_mods(i);
    const int ti_size = td.res.rrank[static_cast<size_t>(i)] * kn;

    if (i == 0) {
        td.cycles = IntMat::identity(ti_size);
    } else {
        td.cycles = kernel_mod_lattice(td.D[static_cast<size_t>(i - 1)], t_mods(i - 1));
    }
    IntMat rel = kernel_mod_lattice(td.cycles, td.Ti_mods);
    // image of D_{i+1}, expressed in cycle coordinates
    const IntMat& Dnext = td.D[static_cast<size_t>(i)];
    IntMat img(td.cycles.cols, Dnext.cols);
    for (int c = 0; c < Dnext.cols; ++c) {
        auto x = solve_mod_lattice(td.cycles, column_vec(Dnext, c), td.Ti_mods);
        require(x.has_value(), "boundary is not a cycle (chain complex violated)");
        for (int r = 0; r < img.rows; ++r) img.at(r, c) = (*x)[static_cast<size_t>(r)];
    }
    AbelianCanonicalForm canon = canonicalize_presentation(td.cycles.cols, mat_hconcat(rel, img));
    td.module = zmod_module(zmod_ring(M.ring.n), canon.factors);
    td.h_to_canon = std::move(canon.to_canon);
    td.h_from_canon = std::move(canon.from_canon);
    return td;
}

} // namespace

FiniteModule tor(int i, const FiniteModule& M, const FiniteModule& N, ResolutionStyle style)
{
    return tor_compute(i, M, N, style).module;
}

ModuleHom tor_hom(int i, const ModuleHom& f, const FiniteModule& N, ResolutionStyle style)
{
    TorData A = tor_compute(i, f.domain, N, style);
    TorData B = tor_compute(i, f.codomain, N, style);
    const FiniteRing& ring = A.res.ring;
    const int gsize = A.res.gsize;
    int id = ring.is_zmod() ? 0 : ring.group->identity;

    // chain map F^A -> F^B over the two resolutions
    std::vector<IntMat> lift; // lift[j] : F^A_j -> F^B_j (abelian coordinates)
    {
        std::vector<std::vector<i64>> u;
        for (int p = 0; p < A.res.rrank[0]; ++p) {
            auto x = solve_mod_lattice(B.res.boundary[0], column_vec(f.matrix, p), f.codomain.factors);
            require(x.has_value(), "chain lift failed at level 0");
            u.push_back(std::move(*x));
        }
        lift.push_back(extend_right_linear(ring, A.res.rrank[0], B.res.rrank[0] * gsize, u));
    }
    for (int j = 1; j <= i + 1; ++j) {
        const IntMat& dA = A.res.boundary[static_cast<size_t>(j)];
        const IntMat& dB = B.res.boundary[static_cast<size_t>(j)];
        const std::vector<i64>& below_mods = B.res.mods[static_cast<size_t>(j - 1)];
        std::vector<std::vector<i64>> u;
        for (int q = 0; q < A.res.rrank[static_cast<size_t>(j)]; ++q) {
            std::vector<i64> rhs = mat_apply(lift[static_cast<size_t>(j - 1)],
                                             column_vec(dA, q * gsize + id));
            auto x = solve_mod_lattice(dB, rhs, below_mods);
            require(x.has_value(), "chain lift failed");
            u.push_back(std::move(*x));
        }
        lift.push_back(extend_right_linear(ring, A.res.rrank[static_cast<size_t>(j)],
                                           B.res.rrank[static_cast<size_t>(j)] * gsize, u));
    }

    IntMat fi_tensored = tensor_free_map(ring, lift[static_cast<size_t>(i)],
                                         A.res.rrank[static_cast<size_t>(i)],
                                         B.res.rrank[static_cast<size_t>(i)], N);
    const int ha = A.module.rank();
    IntMat out(B.module.rank(), ha);
    for (int c = 0; c < ha; ++c) {
        std::vector<i64> z = mat_apply(A.cycles, column_vec(A.h_from_canon, c));
        std::vector<i64> t = mat_apply(fi_tensored, z);
        auto w = solve_mod_lattice(B.cycles, t, B.Ti_mods);
        require(w.has_value(), "induced map left the cycle lattice");
        std::vector<i64> h = mat_apply(B.h_to_canon, *w);
        for (int r = 0; r < out.rows; ++r) out.at(r, c) = h[static_cast<size_t>(r)];
    }
    return make_module_hom(A.module, B.module, std::move(out));
}

// ---- Pontryagin duality ----------------------------------------------------

FiniteModule pontryagin_dual(const FiniteModule& M)
{
    const int k = M.rank();
    std::vector<IntMat> action;
    for (const IntMat& X : M.action) {
        IntMat Y(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                i64 num = checked_mul(M.factors[static_cast<size_t>(i)], X.at(j, i));
                require(num % M.factors[static_cast<size_t>(j)] == 0, "dual action not integral");
                Y.at(i, j) = num / M.factors[static_cast<size_t>(j)];
            }
        action.push_back(std::move(Y));
    }
    ModuleSide flipped = (M.side == ModuleSide::left) ? ModuleSide::right : ModuleSide::left;
    return make_module(M.ring, flipped, M.factors, std::move(action));
}

ModuleHom dual_hom(const ModuleHom& f)
{
    const FiniteModule Md = pontryagin_dual(f.domain);
    const FiniteModule Nd = pontryagin_dual(f.codomain);
    const int km = f.domain.rank(), kn = f.codomain.rank();
    IntMat g(km, kn);
    for (int i = 0; i < km; ++i)
        for (int j = 0; j < kn; ++j) {
            i64 num = checked_mul(f.domain.factors[static_cast<size_t>(i)], f.matrix.at(j, i));
            require(num % f.codomain.factors[static_cast<size_t>(j)] == 0, "dual hom not integral");
            g.at(i, j) = num / f.codomain.factors[static_cast<size_t>(j)];
        }
    return make_module_hom(Nd, Md, std::move(g));
}

i64 dual_pairing(const FiniteModule& M, const std::vector<i64>& chi, const std::vector<i64>& m)
{
    const i64 e = M.exponent();
    i64 acc = 0;
    for (int i = 0; i < M.rank(); ++i) {
        i64 w = e / M.factors[static_cast<size_t>(i)];
        acc = (acc + checked_mul(chi[static_cast<size_t>(i)] % e, checked_mul(w, m[static_cast<size_t>(i)] % e))) % e;
    }
    return ((acc % e) + e) % e;
}

// ---- induction and restriction ---------------------------------------------

namespace {

struct CosetData {
    std::vector<int> reps;       // sorted minimal representatives of gH
    std::vector<int> coset_of;   // per G element
    std::vector<int> h_part;     // g = reps[coset_of[g]] * incl(h_part[g])
};

CosetData left_cosets(const GroupHom& inclusion)
{
    const FiniteGroup& H = inclusion.domain;
    const FiniteGroup& G = inclusion.codomain;
    require(is_injective_hom(inclusion), "induction needs an injective subgroup inclusion");
    std::vector<int> preimage(static_cast<size_t>(G.order), -1);
    for (int h = 0; h < H.order; ++h) preimage[static_cast<size_t>(inclusion.apply(h))] = h;

    CosetData cd;
    std::vector<int> rep(static_cast<size_t>(G.order));
    for (int g = 0; g < G.order; ++g) {
        int r = g;
        for (int h = 0; h < H.order; ++h) r = std::min(r, G.mul(g, inclusion.apply(h)));
        rep[static_cast<size_t>(g)] = r;
    }
    for (int g = 0; g < G.order; ++g)
        if (rep[static_cast<size_t>(g)] == g) cd.reps.push_back(g);
    cd.coset_of.resize(static_cast<size_t>(G.order));
    cd.h_part.resize(static_cast<size_t>(G.order));
    for (int g = 0; g < G.order; ++g) {
        int r = rep[static_cast<size_t>(g)];
        cd.coset_of[static_cast<size_t>(g)] =
            static_cast<int>(std::lower_bound(cd.reps.begin(), cd.reps.end(), r) - cd.reps.begin());
        int delta = G.mul(G.inv(r), g);
        int h = preimage[static_cast<size_t>(delta)];
        require(h >= 0, "coset decomposition failed");
        cd.h_part[static_cast<size_t>(g)] = h;
    }
    return cd;
}

} // namespace

InducedModule induce(const GroupHom& inclusion, const FiniteModule& M, i64 base_n)
{
    const FiniteGroup& H = inclusion.domain;
    const FiniteGroup& G = inclusion.codomain;
    require(!M.ring.is_zmod() && M.ring.group->same_table(H), "module must live over the subgroup algebra");
    require(M.side == ModuleSide::left, "induction acts on left modules");
    require(M.ring.n == base_n, "base ring mismatch");
    CosetData cd = left_cosets(inclusion);
    const int r = static_cast<int>(cd.reps.size());
    const int k = M.rank();

    FiniteRing kG = group_algebra(base_n, G);
    std::vector<i64> factors;
    for (int i = 0; i < k; ++i)
        factors.insert(factors.end(), static_cast<size_t>(r), M.factors[static_cast<size_t>(i)]);
    // layout (i, j) -> i*r + j
    std::vector<IntMat> action;
    for (int s : kG.group->generators) {
        IntMat X(k * r, k * r);
        for (int j = 0; j < r; ++j) {
            int t = G.mul(s, cd.reps[static_cast<size_t>(j)]);
            int j2 = cd.coset_of[static_cast<size_t>(t)];
            IntMat Xh = element_action(M, cd.h_part[static_cast<size_t>(t)]);
            for (int i2 = 0; i2 < k; ++i2)
                for (int i = 0; i < k; ++i)
                    X.at(i2 * r + j2, i * r + j) = Xh.at(i2, i);
        }
        action.push_back(std::move(X));
    }
    InducedModule out;
    out.module = make_module(kG, ModuleSide::left, std::move(factors), std::move(action));
    out.coset_reps = cd.reps;
    return out;
}

ModuleHom induce_hom(const GroupHom& inclusion, const ModuleHom& f, i64 base_n)
{
    InducedModule A = induce(inclusion, f.domain, base_n);
    InducedModule B = induce(inclusion, f.codomain, base_n);
    const int r = static_cast<int>(A.coset_reps.size());
    const int k = f.domain.rank(), l = f.codomain.rank();
    IntMat m(l * r, k * r);
    for (int j = 0; j < r; ++j)
        for (int a = 0; a < l; ++a)
            for (int i = 0; i < k; ++i)
                m.at(a * r + j, i * r + j) = f.matrix.at(a, i);
    return make_module_hom(A.module, B.module, std::move(m));
}

FiniteModule restrict_to_subgroup(const FiniteModule& M, const GroupHom& inclusion)
{
    require(!M.ring.is_zmod() && M.ring.group->same_table(inclusion.codomain),
            "module must live over the ambient group algebra");
    require(is_injective_hom(inclusion), "restriction needs an injective inclusion");
    FiniteRing kH = group_algebra(M.ring.n, inclusion.domain);
    std::vector<IntMat> action;
    for (int h : kH.group->generators) action.push_back(element_action(M, inclusion.apply(h)));
    return make_module(kH, M.side, M.factors, std::move(action));
}

FiniteModule restrict_to_base(const FiniteModule& M)
{
    return make_module(zmod_ring(M.ring.n), ModuleSide::left, M.factors, {});
}

// ---- kernels and cokernels --------------------------------------------------

KernelResult kernel_of(const ModuleHom& h)
{
    const FiniteModule& M = h.domain;
    IntMat W = kernel_mod_lattice(h.matrix, h.codomain.factors);
    IntMat rel = kernel_mod_lattice(W, M.factors);
    AbelianCanonicalForm canon = canonicalize_presentation(W.cols, rel);
    IntMat incl = reduce_rows(mat_mul(W, canon.from_canon), M.factors);

    std::vector<IntMat> action;
    for (size_t g = 0; g < M.action.size(); ++g) {
        IntMat act(static_cast<int>(canon.factors.size()), static_cast<int>(canon.factors.size()));
        for (int c = 0; c < act.cols; ++c) {
            std::vector<i64> moved = mat_apply(M.action[g], column_vec(incl, c));
            auto w = solve_mod_lattice(W, moved, M.factors);
            require(w.has_value(), "kernel is not action-stable");
            std::vector<i64> kc = mat_apply(canon.to_canon, *w);
            for (int r = 0; r < act.rows; ++r) act.at(r, c) = kc[static_cast<size_t>(r)];
        }
        action.push_back(std::move(act));
    }
    FiniteModule K = make_module(M.ring, M.side, canon.factors, std::move(action));
    ModuleHom inclusion = make_module_hom(K, M, std::move(incl));
    return KernelResult{std::move(K), std::move(inclusion)};
}

CokernelResult cokernel_of(const ModuleHom& h)
{
    const FiniteModule& N = h.codomain;
    IntMat rel = mat_hconcat(diag_matrix(N.factors), h.matrix);
    AbelianCanonicalForm canon = canonicalize_presentation(N.rank(), rel);
    std::vector<IntMat> action;
    for (size_t g = 0; g < N.action.size(); ++g)
        action.push_back(mat_mul(canon.to_canon, mat_mul(N.action[g], canon.from_canon)));
    FiniteModule C = make_module(N.ring, N.side, canon.factors, std::move(action));
    ModuleHom proj = make_module_hom(N, C, canon.to_canon);
    return CokernelResult{std::move(C), std::move(proj)};
}

// ---- abelian groups as modules ----------------------------------------------

AbelianModuleBridge abelian_group_as_module(const FiniteGroup& A, i64 L)
{
    require(is_abelian(A), "abelian bridge needs an abelian group");
    i64 expA = 1;
    for (int x = 0; x < A.order; ++x) expA = lcm_i64(expA, A.element_order(x));
    if (L == 0) L = std::max<i64>(2, expA);
    require(L >= 2 && L % expA == 0, "ring characteristic must be a multiple of the exponent");

    std::vector<int> gens = A.generators.empty() ? compute_generating_set(A) : A.generators;
    const int k = static_cast<int>(gens.size());

    // exponent vectors via BFS over the generators
    std::vector<std::vector<i64>> expvec(static_cast<size_t>(A.order));
    std::vector<char> seen(static_cast<size_t>(A.order), 0);
    std::vector<int> queue = {A.identity};
    seen[static_cast<size_t>(A.identity)] = 1;
    expvec[static_cast<size_t>(A.identity)] = std::vector<i64>(static_cast<size_t>(k), 0);
    for (size_t hq = 0; hq < queue.size(); ++hq)
        for (int gi = 0; gi < k; ++gi) {
            int y = A.mul(queue[hq], gens[static_cast<size_t>(gi)]);
            if (!seen[static_cast<size_t>(y)]) {
                seen[static_cast<size_t>(y)] = 1;
                expvec[static_cast<size_t>(y)] = expvec[static_cast<size_t>(queue[hq])];
                expvec[static_cast<size_t>(y)][static_cast<size_t>(gi)] += 1;
                queue.push_back(y);
            }
        }

    // relation lattice of the generator map, by exhaustive kernel scan
    std::vector<std::vector<i64>> cols;
    for (int i = 0; i < k; ++i) {
        std::vector<i64> c(static_cast<size_t>(k), 0);
        c[static_cast<size_t>(i)] = expA;
        cols.push_back(std::move(c));
    }
    std::vector<std::vector<int>> powers(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
        powers[static_cast<size_t>(i)].resize(static_cast<size_t>(expA));
        int x = A.identity;
        for (i64 t = 0; t < expA; ++t) {
            powers[static_cast<size_t>(i)][static_cast<size_t>(t)] = x;
            x = A.mul(x, gens[static_cast<size_t>(i)]);
        }
    }
    std::vector<i64> tuple(static_cast<size_t>(k), 0);
    for (;;) {
        int prod = A.identity;
        for (int i = 0; i < k; ++i)
            prod = A.mul(prod, powers[static_cast<size_t>(i)][static_cast<size_t>(tuple[static_cast<size_t>(i)])]);
        if (prod == A.identity) cols.push_back(tuple);
        int pos = 0;
        while (pos < k) {
            if (++tuple[static_cast<size_t>(pos)] < expA) break;
            tuple[static_cast<size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == k) break;
        if (k == 0) break;
    }

    IntMat rel(k, static_cast<int>(cols.size()));
    for (size_t c = 0; c < cols.size(); ++c)
        for (int r = 0; r < k; ++r)
            rel.at(r, static_cast<int>(c)) = cols[c][static_cast<size_t>(r)];
    AbelianCanonicalForm canon = canonicalize_presentation(k, rel);

    AbelianModuleBridge out;
    out.module = zmod_module(zmod_ring(L), canon.factors);
    out.coords_of.resize(static_cast<size_t>(A.order));
    for (int x = 0; x < A.order; ++x) {
        out.coords_of[static_cast<size_t>(x)] =
            vec_mod(mat_apply(canon.to_canon, expvec[static_cast<size_t>(x)]), canon.factors);
        out.element_of[out.coords_of[static_cast<size_t>(x)]] = x;
    }
    require(out.element_of.size() == static_cast<size_t>(A.order), "abelian bridge is not bijective");
    require(out.module.order() == static_cast<u64>(A.order), "abelian bridge order mismatch");
    return out;
}

} // namespace probund
