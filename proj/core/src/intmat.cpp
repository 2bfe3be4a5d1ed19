#include "probund/intmat.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace probund {

i64 checked_mul(i64 x, i64 y)
{
    i64 r;
    if (__builtin_mul_overflow(x, y, &r)) throw Error("integer overflow in multiplication");
    return r;
}

i64 checked_add(i64 x, i64 y)
{
    i64 r;
    if (__builtin_add_overflow(x, y, &r)) throw Error("integer overflow in addition");
    return r;
}

i64 gcd_i64(i64 a, i64 b)
{
    return std::gcd(a, b);
}

i64 lcm_i64(i64 a, i64 b)
{
    if (a == 0 || b == 0) return 0;
    return checked_mul(a / std::gcd(a, b), b);
}

IntMat IntMat::identity(int n)
{
    IntMat I(n, n);
    for (int i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

IntMat mat_mul(const IntMat& A, const IntMat& B)
{
    require(A.cols == B.rows, "matrix dimension mismatch in product");
    IntMat C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            const i64 aik = A.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < B.cols; ++j)
                C.at(i, j) = checked_add(C.at(i, j), checked_mul(aik, B.at(k, j)));
        }
    return C;
}

IntMat mat_hconcat(const IntMat& A, const IntMat& B)
{
    require(A.rows == B.rows, "row mismatch in hconcat");
    IntMat C(A.rows, A.cols + B.cols);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) C.at(i, j) = A.at(i, j);
        for (int j = 0; j < B.cols; ++j) C.at(i, A.cols + j) = B.at(i, j);
    }
    return C;
}

IntMat diag_matrix(const std::vector<i64>& d)
{
    IntMat D(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) D.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return D;
}

std::vector<i64> mat_apply(const IntMat& A, const std::vector<i64>& x)
{
    require(static_cast<int>(x.size()) == A.cols, "vector length mismatch in apply");
    std::vector<i64> y(A.rows, 0);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j)
            y[i] = checked_add(y[i], checked_mul(A.at(i, j), x[j]));
    return y;
}

std::vector<i64> vec_mod(const std::vector<i64>& x, const std::vector<i64>& mods)
{
    require(x.size() == mods.size(), "modulus vector length mismatch");
    std::vector<i64> y(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        if (mods[i] == 0) { y[i] = x[i]; continue; }
        i64 r = x[i] % mods[i];
        if (r < 0) r += mods[i];
        y[i] = r;
    }
    return y;
}

IntMat mat_mod_rows(const IntMat& A, const std::vector<i64>& row_mods)
{
    require(static_cast<int>(row_mods.size()) == A.rows, "row modulus count mismatch");
    IntMat B = A;
    for (int i = 0; i < B.rows; ++i) {
        if (row_mods[i] == 0) continue;
        for (int j = 0; j < B.cols; ++j) {
            i64 r = B.at(i, j) % row_mods[i];
            if (r < 0) r += row_mods[i];
            B.at(i, j) = r;
        }
    }
    return B;
}

i64 determinant(const IntMat& A)
{
    require(A.rows == A.cols, "determinant of non-square matrix");
    const int n = A.rows;
    if (n == 0) return 1;
    IntMat M = A;
    i64 sign = 1;
    i64 prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (M.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (M.at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(M.at(k, j), M.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                i64 num = checked_add(checked_mul(M.at(i, j), M.at(k, k)),
                                      -checked_mul(M.at(i, k), M.at(k, j)));
                M.at(i, j) = num / prev; // exact by Bareiss
            }
        prev = M.at(k, k);
    }
    return checked_mul(sign, M.at(n - 1, n - 1));
}

namespace {

// quotient with balanced remainder in (-|b|/2, |b|/2]; keeps transform
// matrices small during elimination
i64 balanced_quot(i64 a, i64 b)
{
    i64 q = a / b;
    i64 r = a - q * b;
    if (2 * std::abs(r) > std::abs(b)) q += ((r > 0) == (b > 0)) ? 1 : -1;
    return q;
}

struct SmithWork {
    IntMat D, U, V, Uinv;

    void row_swap(int i, int j)
    {
        if (i == j) return;
        for (int c = 0; c < D.cols; ++c) std::swap(D.at(i, c), D.at(j, c));
        for (int c = 0; c < U.cols; ++c) std::swap(U.at(i, c), U.at(j, c));
        for (int r = 0; r < Uinv.rows; ++r) std::swap(Uinv.at(r, i), Uinv.at(r, j));
    }
    void col_swap(int i, int j)
    {
        if (i == j) return;
        for (int r = 0; r < D.rows; ++r) std::swap(D.at(r, i), D.at(r, j));
        for (int r = 0; r < V.rows; ++r) std::swap(V.at(r, i), V.at(r, j));
    }
    // row i += c * row j; inverse op on Uinv is col j -= c * col i
    void row_add(int i, int j, i64 c)
    {
        if (c == 0) return;
        for (int k = 0; k < D.cols; ++k)
            D.at(i, k) = checked_add(D.at(i, k), checked_mul(c, D.at(j, k)));
        for (int k = 0; k < U.cols; ++k)
            U.at(i, k) = checked_add(U.at(i, k), checked_mul(c, U.at(j, k)));
        for (int k = 0; k < Uinv.rows; ++k)
            Uinv.at(k, j) = checked_add(Uinv.at(k, j), -checked_mul(c, Uinv.at(k, i)));
    }
    void col_add(int i, int j, i64 c)
    {
        if (c == 0) return;
        for (int k = 0; k < D.rows; ++k)
            D.at(k, i) = checked_add(D.at(k, i), checked_mul(c, D.at(k, j)));
        for (int k = 0; k < V.rows; ++k)
            V.at(k, i) = checked_add(V.at(k, i), checked_mul(c, V.at(k, j)));
    }
    void row_negate(int i)
    {
        for (int k = 0; k < D.cols; ++k) D.at(i, k) = -D.at(i, k);
        for (int k = 0; k < U.cols; ++k) U.at(i, k) = -U.at(i, k);
        for (int k = 0; k < Uinv.rows; ++k) Uinv.at(k, i) = -Uinv.at(k, i);
    }
};

} // namespace

SmithForm smith_normal_form(IntMat A)
{
    const int m = A.rows, n = A.cols;
    SmithWork w{std::move(A), IntMat::identity(m), IntMat::identity(n), IntMat::identity(m)};
    const int t_max = std::min(m, n);

    // phase 1: diagonalize with minimal pivots and balanced remainders;
    // the divisibility chain comes afterwards so transform entries never
    // compound through repeated full re-eliminations
    int rank = t_max;
    for (int t = 0; t < t_max; ++t) {
        for (;;) {
            int pi = -1, pj = -1;
            i64 best = 0;
            for (int i = t; i < m; ++i)
                for (int j = t; j < n; ++j) {
                    i64 v = std::abs(w.D.at(i, j));
                    if (v != 0 && (pi < 0 || v < best)) { best = v; pi = i; pj = j; }
                }
            if (pi < 0) { rank = t; goto phase2; }
            w.row_swap(t, pi);
            w.col_swap(t, pj);

            bool reduced = true;
            for (int i = t + 1; i < m; ++i) {
                i64 q = balanced_quot(w.D.at(i, t), w.D.at(t, t));
                w.row_add(i, t, -q);
                if (w.D.at(i, t) != 0) reduced = false;
            }
            for (int j = t + 1; j < n; ++j) {
                i64 q = balanced_quot(w.D.at(t, j), w.D.at(t, t));
                w.col_add(j, t, -q);
                if (w.D.at(t, j) != 0) reduced = false;
            }
            if (reduced) break;
        }
    }
phase2:
    for (int t = 0; t < rank; ++t)
        if (w.D.at(t, t) < 0) w.row_negate(t);

    // enforce d_i | d_{i+1} pairwise; the 2x2 renormalisations only ever see
    // entries bounded by the diagonal values
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 0; i + 1 < rank; ++i) {
            i64 a = w.D.at(i, i), b = w.D.at(i + 1, i + 1);
            if (b % a == 0) continue;
            changed = true;
            w.row_add(i, i + 1, 1); // block becomes [a b; 0 b]
            for (;;) {
                // local Euclid on the 2x2 block at (i, i+1)
                int lo = (std::abs(w.D.at(i, i)) != 0 &&
                          (std::abs(w.D.at(i + 1, i + 1)) == 0 ||
                           std::abs(w.D.at(i, i)) <= std::abs(w.D.at(i + 1, i + 1))))
                             ? i
                             : i + 1;
                // move the smaller nonzero corner to (i, i)
                i64 c00 = std::abs(w.D.at(i, i)), c01 = std::abs(w.D.at(i, i + 1));
                i64 c10 = std::abs(w.D.at(i + 1, i)), c11 = std::abs(w.D.at(i + 1, i + 1));
                i64 entries[4] = {c00, c01, c10, c11};
                i64 best = 0;
                int which = -1;
                for (int e = 0; e < 4; ++e)
                    if (entries[e] != 0 && (which < 0 || entries[e] < best)) {
                        best = entries[e];
                        which = e;
                    }
                (void)lo;
                if (which < 0) break;
                if (which == 1 || which == 3) w.col_swap(i, i + 1);
                if (which >= 2) w.row_swap(i, i + 1);
                i64 p = w.D.at(i, i);
                i64 q1 = balanced_quot(w.D.at(i + 1, i), p);
                w.row_add(i + 1, i, -q1);
                i64 q2 = balanced_quot(w.D.at(i, i + 1), p);
                w.col_add(i + 1, i, -q2);
                if (w.D.at(i + 1, i) == 0 && w.D.at(i, i + 1) == 0) break;
            }
            if (w.D.at(i, i) < 0) w.row_negate(i);
            if (w.D.at(i + 1, i + 1) < 0) w.row_negate(i + 1);
        }
    }
    return SmithForm{std::move(w.U), std::move(w.D), std::move(w.V), std::move(w.Uinv)};
}

IntMat integer_kernel(const IntMat& A)
{
    SmithForm s = smith_normal_form(A);
    const int n = A.cols;
    const int t_max = std::min(A.rows, A.cols);
    std::vector<int> free_cols;
    for (int j = 0; j < n; ++j)
        if (j >= t_max || s.D.at(j, j) == 0) free_cols.push_back(j);
    IntMat K(n, static_cast<int>(free_cols.size()));
    for (int c = 0; c < K.cols; ++c)
        for (int r = 0; r < n; ++r)
            K.at(r, c) = s.V.at(r, free_cols[c]);
    return K;
}

std::optional<std::vector<i64>> solve_integer(const IntMat& A, const std::vector<i64>& b)
{
    require(static_cast<int>(b.size()) == A.rows, "rhs length mismatch in solve");
    SmithForm s = smith_normal_form(A);
    std::vector<i64> ub = mat_apply(s.U, b);
    std::vector<i64> z(A.cols, 0);
    const int t_max = std::min(A.rows, A.cols);
    for (int i = 0; i < A.rows; ++i) {
        i64 d = (i < t_max) ? s.D.at(i, i) : 0;
        if (d == 0) {
            if (ub[i] != 0) return std::nullopt;
        } else {
            if (ub[i] % d != 0) return std::nullopt;
            z[i] = ub[i] / d;
        }
    }
    return mat_apply(s.V, z);
}

std::optional<std::vector<i64>> solve_mod_lattice(const IntMat& A,
                                                  const std::vector<i64>& b,
                                                  const std::vector<i64>& mods)
{
    IntMat aug = mat_hconcat(A, diag_matrix(mods));
    auto sol = solve_integer(aug, b);
    if (!sol) return std::nullopt;
    return std::vector<i64>(sol->begin(), sol->begin() + A.cols);
}

AbelianCanonicalForm canonicalize_presentation(int gens, const IntMat& relations)
{
    require(relations.rows == gens, "presentation relation rows must equal generator count");
    SmithForm s = smith_normal_form(relations);
    const int t_max = std::min(relations.rows, relations.cols);
    std::vector<int> keep;
    std::vector<i64> factors;
    for (int i = 0; i < gens; ++i) {
        i64 d = (i < t_max) ? s.D.at(i, i) : 0;
        if (d == 0) throw Error("presented abelian group is infinite");
        if (d > 1) { keep.push_back(i); factors.push_back(d); }
    }
    const int k = static_cast<int>(keep.size());
    IntMat to_canon(k, gens), from_canon(gens, k);
    for (int r = 0; r < k; ++r)
        for (int j = 0; j < gens; ++j)
            to_canon.at(r, j) = s.U.at(keep[r], j);
    for (int i = 0; i < gens; ++i)
        for (int c = 0; c < k; ++c)
            from_canon.at(i, c) = s.Uinv.at(i, keep[c]);
    return AbelianCanonicalForm{std::move(factors), std::move(to_canon), std::move(from_canon)};
}

IntMat kernel_mod_lattice(const IntMat& A, const std::vector<i64>& cond_mod)
{
    IntMat aug = mat_hconcat(A, diag_matrix(cond_mod));
    IntMat K = integer_kernel(aug);
    IntMat W(A.cols, K.cols);
    for (int i = 0; i < A.cols; ++i)
        for (int j = 0; j < K.cols; ++j)
            W.at(i, j) = K.at(i, j);
    return W;
}

u64 SolutionGroup::count() const
{
    u64 c = 1;
    for (i64 f : factors) {
        u64 nf;
        if (__builtin_mul_overflow(c, static_cast<u64>(f), &nf))
            throw Error("solution group too large to count");
        c = nf;
    }
    return c;
}

std::vector<i64> SolutionGroup::element_from_coords(const std::vector<i64>& coords) const
{
    require(coords.size() == factors.size(), "coordinate length mismatch");
    std::vector<i64> t(unknown_mod.size(), 0);
    for (size_t c = 0; c < coords.size(); ++c)
        for (size_t r = 0; r < t.size(); ++r)
            t[r] = checked_add(t[r], checked_mul(coords[c], generators.at(static_cast<int>(r), static_cast<int>(c))));
    return vec_mod(t, unknown_mod);
}

std::vector<i64> SolutionGroup::element(u64 index) const
{
    std::vector<i64> coords(factors.size(), 0);
    for (size_t i = 0; i < factors.size(); ++i) {
        coords[i] = static_cast<i64>(index % static_cast<u64>(factors[i]));
        index /= static_cast<u64>(factors[i]);
    }
    return element_from_coords(coords);
}

SolutionGroup solve_congruence_system(const IntMat& A,
                                      const std::vector<i64>& cond_mod,
                                      const std::vector<i64>& unknown_mod)
{
    require(static_cast<int>(cond_mod.size()) == A.rows, "condition modulus count mismatch");
    require(static_cast<int>(unknown_mod.size()) == A.cols, "unknown modulus count mismatch");
    // lattice of integer solutions, then quotient by the unknowns' moduli
    IntMat W = kernel_mod_lattice(A, cond_mod);
    IntMat rel = kernel_mod_lattice(W, unknown_mod);
    AbelianCanonicalForm canon = canonicalize_presentation(W.cols, rel);
    IntMat gens = mat_mul(W, canon.from_canon);
    SolutionGroup sg;
    sg.unknown_mod = unknown_mod;
    sg.factors = canon.factors;
    sg.generators = IntMat(static_cast<int>(unknown_mod.size()), static_cast<int>(canon.factors.size()));
    for (int i = 0; i < sg.generators.rows; ++i)
        for (int j = 0; j < sg.generators.cols; ++j) {
            i64 m = unknown_mod[i];
            i64 v = gens.at(i, j) % m;
            if (v < 0) v += m;
            sg.generators.at(i, j) = v;
        }
    return sg;
}

} // namespace probund
