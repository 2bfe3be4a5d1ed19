#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "probund/error.hpp"

namespace probund {

using i64 = std::int64_t;
using u64 = std::uint64_t;

/// Dense integer matrix. All arithmetic is exact; multiplications are
/// overflow-checked and throw rather than wrap.
struct IntMat {
    int rows = 0;
    int cols = 0;
    std::vector<i64> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    i64& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    i64 at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static IntMat identity(int n);
    static IntMat zero(int r, int c) { return IntMat(r, c); }

    bool operator==(const IntMat&) const = default;
};

i64 checked_mul(i64 x, i64 y);
i64 checked_add(i64 x, i64 y);

IntMat mat_mul(const IntMat& A, const IntMat& B);
IntMat mat_hconcat(const IntMat& A, const IntMat& B);
IntMat diag_matrix(const std::vector<i64>& d);
std::vector<i64> mat_apply(const IntMat& A, const std::vector<i64>& x);

/// Entrywise reduction into [0, m_i) per row modulus; moduli of 0 leave the
/// entry untouched (used nowhere in finite work but kept total).
std::vector<i64> vec_mod(const std::vector<i64>& x, const std::vector<i64>& mods);
IntMat mat_mod_rows(const IntMat& A, const std::vector<i64>& row_mods);

i64 determinant(const IntMat& A); // Bareiss fraction-free elimination

/// Smith normal form: U*A*V = D with U, V unimodular and the diagonal of D a
/// nonnegative divisibility chain d1 | d2 | ... Uinv is maintained alongside
/// U so quotient presentations get their sections for free.
struct SmithForm {
    IntMat U, D, V, Uinv;
};
SmithForm smith_normal_form(IntMat A);

/// Basis of the integer kernel {x : A x = 0}, one column per basis vector.
IntMat integer_kernel(const IntMat& A);

/// One solution of A x = b over the integers, if any.
std::optional<std::vector<i64>> solve_integer(const IntMat& A, const std::vector<i64>& b);

/// One solution of A x = b modulo the column lattice of diag(mods), i.e. an
/// x with A x + diag(mods) y = b for some integer y.
std::optional<std::vector<i64>> solve_mod_lattice(const IntMat& A,
                                                  const std::vector<i64>& b,
                                                  const std::vector<i64>& mods);

/// Canonical form of the finitely presented abelian group Z^gens / col(rels):
/// invariant factors (each > 1, divisibility chain) plus the projection onto
/// canonical coordinates and a section back.
///
///   to_canon   : Z^gens -> Z^k   (rows; reduce row i mod factors[i])
///   from_canon : Z^k    -> Z^gens (columns; to_canon * from_canon = I mod factors)
///
/// Throws if the presented group is infinite (a zero invariant factor).
struct AbelianCanonicalForm {
    std::vector<i64> factors;
    IntMat to_canon;
    IntMat from_canon;
};
AbelianCanonicalForm canonicalize_presentation(int gens, const IntMat& relations);

/// The solution group { t in prod Z/unknown_mod[j] : A t = 0 mod row diag(cond_mod) },
/// presented by canonical invariant factors. Generators are reduced solution
/// vectors; every solution is a unique Z-combination of them with coefficient
/// i taken mod factors[i].
struct SolutionGroup {
    std::vector<i64> unknown_mod;
    std::vector<i64> factors;  // invariant factors (> 1) of the solution group
    IntMat generators;         // one column per factor, entries reduced mod unknown_mod

    u64 count() const;
    /// Element for mixed-radix index < count(); deterministic enumeration order.
    std::vector<i64> element(u64 index) const;
    std::vector<i64> element_from_coords(const std::vector<i64>& coords) const;
};
SolutionGroup solve_congruence_system(const IntMat& A,
                                      const std::vector<i64>& cond_mod,
                                      const std::vector<i64>& unknown_mod);

/// Lattice { x in Z^cols(A) : A x = 0 mod col lattice of diag(cond_mod) },
/// returned as a full-rank column basis.
IntMat kernel_mod_lattice(const IntMat& A, const std::vector<i64>& cond_mod);

i64 gcd_i64(i64 a, i64 b);
i64 lcm_i64(i64 a, i64 b);

} // namespace probund
