#include "doctest.h"

#include "probund/finspace.hpp"
#include "probund/rng.hpp"

using namespace probund;

TEST_SUITE("finspace")
{
    TEST_CASE("pullback over a point is the product")
    {
        FiniteSpace pt{1}, two{2}, three{3};
        auto pb = pullback(constant_map(two, pt, 0), constant_map(three, pt, 0));
        CHECK(pb.apex.size == 6);
    }

    TEST_CASE("pullback along the identity recovers the other leg")
    {
        FiniteSpace X{3}, Y{4};
        SpaceMap g = make_space_map(Y, X, {0, 2, 2, 1});
        auto pb = pullback(identity_map(X), g);
        CHECK(pb.apex.size == Y.size);
        // second projection is a bijection
        CHECK(is_bijective(pb.to_second));
        // and the square commutes
        for (int p = 0; p < pb.apex.size; ++p)
            CHECK(pb.to_first.apply(p) == g.apply(pb.to_second.apply(p)));
    }

    TEST_CASE("two-point / one-point cospan")
    {
        FiniteSpace ab{2}, c{1}, base{2};
        SpaceMap f = make_space_map(ab, base, {0, 1});
        SpaceMap g = make_space_map(c, base, {0});
        auto pb = pullback(f, g);
        REQUIRE(pb.apex.size == 1);
        CHECK(pb.pairs[0] == std::pair<int, int>{0, 0});
    }

    TEST_CASE("incompatible cospans are rejected")
    {
        FiniteSpace a{2}, b{3};
        CHECK_THROWS_WITH_AS(pullback(constant_map(a, a, 0), constant_map(b, b, 0)),
                             "incompatible cospan", Error);
    }

    TEST_CASE("fibres")
    {
        FiniteSpace three{3}, pt{1}, two{2};
        CHECK(fibre(constant_map(three, pt, 0), 0) == std::vector<int>{0, 1, 2});
        CHECK(fibre(identity_map(three), 1) == std::vector<int>{1});
        CHECK(fibre(make_space_map(three, two, {0, 1, 0}), 0) == std::vector<int>{0, 2});
        CHECK_THROWS_AS(fibre(identity_map(three), 3), Error);
    }

    TEST_CASE("fibres partition the domain; pullback size formula")
    {
        Rng rng(99);
        for (int trial = 0; trial < 50; ++trial) {
            FiniteSpace X{1 + rng.below_int(5)};
            FiniteSpace A{rng.below_int(6)}, B{rng.below_int(6)};
            std::vector<int> fa(static_cast<size_t>(A.size)), fb(static_cast<size_t>(B.size));
            for (auto& v : fa) v = rng.below_int(X.size);
            for (auto& v : fb) v = rng.below_int(X.size);
            SpaceMap f = make_space_map(A, X, fa), g = make_space_map(B, X, fb);

            size_t total = 0;
            long long expected_pairs = 0;
            for (int x = 0; x < X.size; ++x) {
                auto ff = fibre(f, x);
                total += ff.size();
                expected_pairs += static_cast<long long>(ff.size()) * fibre(g, x).size();
            }
            CHECK(total == static_cast<size_t>(A.size));
            auto pb = pullback(f, g);
            CHECK(pb.apex.size == expected_pairs);

            // symmetry up to the pair swap
            auto pb2 = pullback(g, f);
            REQUIRE(pb2.apex.size == pb.apex.size);
            for (const auto& [a, b] : pb.pairs) {
                bool found = false;
                for (const auto& [b2, a2] : pb2.pairs)
                    if (a2 == a && b2 == b) { found = true; break; }
                CHECK(found);
            }
        }
    }
}
