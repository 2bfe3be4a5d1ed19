// Test-only oracles, kept independent of the library's search strategies:
// plain exhaustive enumeration with pruning that only ever discards
// assignments violating the defining equations.
#pragma once

#include <functional>
#include <vector>

#include "probund/fingroup.hpp"
#include "probund/finmod.hpp"

namespace oracle {

/// Every homomorphism G -> T by exhaustive search over value tables.
/// Assigns images element-by-element in index order and rejects a partial
/// table as soon as some fully assigned product violates f(ab) = f(a)f(b).
inline std::vector<std::vector<int>> brute_force_homs(const probund::FiniteGroup& G,
                                                      const probund::FiniteGroup& T)
{
    std::vector<std::vector<int>> found;
    std::vector<int> f(static_cast<size_t>(G.order), -1);
    std::function<void(int)> rec = [&](int next) {
        if (next == G.order) {
            found.push_back(f);
            return;
        }
        int lo = 0, hi = T.order;
        if (next == G.identity) { lo = T.identity; hi = T.identity + 1; }
        for (int img = lo; img < hi; ++img) {
            f[static_cast<size_t>(next)] = img;
            bool ok = true;
            for (int a = 0; a <= next && ok; ++a)
                for (int b = 0; b <= next && ok; ++b) {
                    int ab = G.mul(a, b);
                    if (ab > next) continue;
                    if (T.mul(f[static_cast<size_t>(a)], f[static_cast<size_t>(b)]) != f[static_cast<size_t>(ab)])
                        ok = false;
                }
            if (ok) rec(next + 1);
        }
        f[static_cast<size_t>(next)] = -1;
    };
    rec(0);
    return found;
}

/// All additive maps M -> Z/e by exhaustive scan over value tables on
/// elements (tiny modules only).
inline int brute_force_character_count(const probund::FiniteModule& M)
{
    using namespace probund;
    const u64 n = M.order();
    const i64 e = M.exponent();
    if (n == 1) return 1;
    // values on all elements, indexed by module_element order
    std::vector<i64> val(static_cast<size_t>(n), 0);
    int count = 0;
    std::function<void(u64)> rec = [&](u64 next) {
        if (next == n) {
            ++count;
            return;
        }
        for (i64 v = 0; v < e; ++v) {
            val[static_cast<size_t>(next)] = v;
            bool ok = true;
            // additivity against all previously assigned elements
            for (u64 a = 0; a <= next && ok; ++a) {
                std::vector<i64> xa = module_element(M, a);
                std::vector<i64> xn = module_element(M, next);
                std::vector<i64> sum(xa.size());
                for (size_t i = 0; i < xa.size(); ++i)
                    sum[i] = (xa[i] + xn[i]) % M.factors[i];
                u64 s = module_element_index(M, sum);
                if (s <= next && (val[static_cast<size_t>(a)] + v) % e != val[static_cast<size_t>(s)])
                    ok = false;
            }
            if (ok) rec(next + 1);
        }
    };
    rec(0);
    return count;
}

/// Number of balanced bilinear maps M x N -> C over the common Zmod(n) ring
/// (or group algebra), by exhaustive scan over functions on element pairs.
/// Only usable for very small modules.
inline long brute_force_bilinear_count(const probund::FiniteModule& M,
                                       const probund::FiniteModule& N,
                                       const probund::FiniteModule& C)
{
    using namespace probund;
    const u64 nm = M.order(), nn = N.order(), nc = C.order();
    const u64 pairs = nm * nn;
    std::vector<u64> val(static_cast<size_t>(pairs), 0);
    auto add_in = [](const FiniteModule& X, u64 a, u64 b) {
        std::vector<i64> xa = module_element(X, a), xb = module_element(X, b);
        for (size_t i = 0; i < xa.size(); ++i) xa[i] = (xa[i] + xb[i]) % X.factors[i];
        return module_element_index(X, xa);
    };
    long count = 0;
    std::function<void(u64)> rec = [&](u64 next) {
        if (next == pairs) {
            ++count;
            return;
        }
        for (u64 v = 0; v < nc; ++v) {
            val[static_cast<size_t>(next)] = v;
            bool ok = true;
            u64 m1 = next / nn, n1 = next % nn;
            // left additivity: (m1+m2, n1) when all three pairs assigned
            for (u64 m2 = 0; m2 <= m1 && ok; ++m2) {
                u64 other = m2 * nn + n1;
                u64 third = add_in(M, m1, m2) * nn + n1;
                if (other <= next && third <= next &&
                    add_in(C, val[static_cast<size_t>(next)], val[static_cast<size_t>(other)]) !=
                        val[static_cast<size_t>(third)])
                    ok = false;
            }
            for (u64 n2 = 0; n2 <= n1 && ok; ++n2) {
                u64 other = m1 * nn + n2;
                u64 third = m1 * nn + add_in(N, n1, n2);
                if (other <= next && third <= next &&
                    add_in(C, val[static_cast<size_t>(next)], val[static_cast<size_t>(other)]) !=
                        val[static_cast<size_t>(third)])
                    ok = false;
            }
            // balancing (mr, n) = (m, rn) for the scalar r = generatorless Zmod:
            // scalar multiplication is iterated addition, so additivity already
            // forces it; group-algebra balancing is checked by the caller's
            // choice of instances (Zmod only here).
            if (ok) rec(next + 1);
        }
    };
    rec(0);
    return count;
}

} // namespace oracle
