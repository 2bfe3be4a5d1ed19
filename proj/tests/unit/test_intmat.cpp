#include "doctest.h"

#include "probund/intmat.hpp"
#include "probund/rng.hpp"

using namespace probund;

namespace {

IntMat random_matrix(Rng& rng, int r, int c, int span)
{
    IntMat A(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            A.at(i, j) = static_cast<i64>(rng.below(static_cast<u64>(2 * span + 1))) - span;
    return A;
}

void check_smith(const IntMat& A)
{
    SmithForm s = smith_normal_form(A);
    CHECK(mat_mul(mat_mul(s.U, A), s.V) == s.D);
    CHECK(std::abs(determinant(s.U)) == 1);
    CHECK(std::abs(determinant(s.V)) == 1);
    CHECK(mat_mul(s.U, s.Uinv) == IntMat::identity(A.rows));
    const int t = std::min(A.rows, A.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j)
            if (i != j) CHECK(s.D.at(i, j) == 0);
    for (int i = 0; i + 1 < t; ++i) {
        CHECK(s.D.at(i, i) >= 0);
        if (s.D.at(i + 1, i + 1) != 0) {
            REQUIRE(s.D.at(i, i) != 0);
            CHECK(s.D.at(i + 1, i + 1) % s.D.at(i, i) == 0);
        }
    }
}

} // namespace

TEST_SUITE("intmat")
{
    TEST_CASE("smith normal form of zero and identity")
    {
        IntMat Z(3, 2);
        SmithForm s = smith_normal_form(Z);
        CHECK(s.D == Z);
        check_smith(Z);

        IntMat I = IntMat::identity(4);
        SmithForm si = smith_normal_form(I);
        CHECK(si.D == I);
        check_smith(I);
    }

    TEST_CASE("smith normal form of diag(2,3) is diag(1,6)")
    {
        IntMat A(2, 2);
        A.at(0, 0) = 2;
        A.at(1, 1) = 3;
        SmithForm s = smith_normal_form(A);
        CHECK(s.D.at(0, 0) == 1);
        CHECK(s.D.at(1, 1) == 6);
        check_smith(A);
    }

    TEST_CASE("smith normal form on seeded random matrices")
    {
        Rng rng(7);
        for (int trial = 0; trial < 60; ++trial) {
            int r = 1 + rng.below_int(6), c = 1 + rng.below_int(6);
            IntMat A = random_matrix(rng, r, c, 9);
            check_smith(A);
        }
    }

    TEST_CASE("integer kernel columns really annihilate")
    {
        Rng rng(11);
        for (int trial = 0; trial < 40; ++trial) {
            int r = 1 + rng.below_int(4), c = 1 + rng.below_int(5);
            IntMat A = random_matrix(rng, r, c, 5);
            IntMat K = integer_kernel(A);
            IntMat P = mat_mul(A, K);
            for (i64 v : P.a) CHECK(v == 0);
        }
    }

    TEST_CASE("solve_integer finds exact solutions")
    {
        IntMat A(2, 2);
        A.at(0, 0) = 2; A.at(0, 1) = 0;
        A.at(1, 0) = 0; A.at(1, 1) = 3;
        auto x = solve_integer(A, {4, 9});
        REQUIRE(x.has_value());
        CHECK(mat_apply(A, *x) == std::vector<i64>{4, 9});
        CHECK_FALSE(solve_integer(A, {1, 0}).has_value());
    }

    TEST_CASE("presentation canonicalization: Z^2 / diag(2,3) = Z/6")
    {
        IntMat rel(2, 2);
        rel.at(0, 0) = 2;
        rel.at(1, 1) = 3;
        AbelianCanonicalForm c = canonicalize_presentation(2, rel);
        CHECK(c.factors == std::vector<i64>{6});
        // section then projection is the identity on canonical coordinates
        IntMat round = mat_mul(c.to_canon, c.from_canon);
        CHECK(round == IntMat::identity(1));
    }

    TEST_CASE("infinite presentations are rejected")
    {
        CHECK_THROWS_AS(canonicalize_presentation(2, IntMat(2, 0)), Error);
    }

    TEST_CASE("congruence solution group counts Hom(Z/2, Z/4)")
    {
        // 2t = 0 mod 4, t mod 4  ->  t in {0, 2}
        IntMat A(1, 1);
        A.at(0, 0) = 2;
        SolutionGroup sg = solve_congruence_system(A, {4}, {4});
        CHECK(sg.count() == 2);
        bool saw2 = false;
        for (u64 i = 0; i < sg.count(); ++i) {
            auto t = sg.element(i);
            CHECK((2 * t[0]) % 4 == 0);
            if (t[0] == 2) saw2 = true;
        }
        CHECK(saw2);
    }
}
