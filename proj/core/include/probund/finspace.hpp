#pragma once

#include <vector>

#include "probund/error.hpp"

namespace probund {

/// Finite space with points 0..size-1. All finite spaces are discrete; the
/// profinite side of the theory only ever appears through towers of these.
struct FiniteSpace {
    int size = 0;

    bool operator==(const FiniteSpace&) const = default;
};

struct SpaceMap {
    FiniteSpace domain;
    FiniteSpace codomain;
    std::vector<int> values; // one codomain index per domain point

    int apply(int x) const { return values[static_cast<size_t>(x)]; }
    bool operator==(const SpaceMap&) const = default;
};

SpaceMap make_space_map(FiniteSpace domain, FiniteSpace codomain, std::vector<int> values);
SpaceMap identity_map(FiniteSpace X);
SpaceMap constant_map(FiniteSpace domain, FiniteSpace codomain, int target);
SpaceMap compose(const SpaceMap& g, const SpaceMap& f); // g after f
bool is_surjective(const SpaceMap& f);
bool is_bijective(const SpaceMap& f);

/// Fibre product of a cospan f: A -> X, g: B -> X. Points are the pairs
/// (a, b) with f(a) = g(b), in lexicographic (a, b) order.
struct Pullback {
    FiniteSpace apex;
    SpaceMap to_first;
    SpaceMap to_second;
    std::vector<std::pair<int, int>> pairs;
};
Pullback pullback(const SpaceMap& f, const SpaceMap& g);

/// Points of p's domain mapping to x, in increasing index order.
std::vector<int> fibre(const SpaceMap& p, int x);

} // namespace probund
