#include "probund/finspace.hpp"

#include <algorithm>

namespace probund {

SpaceMap make_space_map(FiniteSpace domain, FiniteSpace codomain, std::vector<int> values)
{
    require(static_cast<int>(values.size()) == domain.size, "space map value count must equal domain size");
    for (int v : values)
        require(v >= 0 && v < codomain.size, "space map value out of codomain range");
    return SpaceMap{domain, codomain, std::move(values)};
}

SpaceMap identity_map(FiniteSpace X)
{
    std::vector<int> v(static_cast<size_t>(X.size));
    for (int i = 0; i < X.size; ++i) v[static_cast<size_t>(i)] = i;
    return SpaceMap{X, X, std::move(v)};
}

SpaceMap constant_map(FiniteSpace domain, FiniteSpace codomain, int target)
{
    require(target >= 0 && target < codomain.size, "constant map target out of range");
    return SpaceMap{domain, codomain, std::vector<int>(static_cast<size_t>(domain.size), target)};
}

SpaceMap compose(const SpaceMap& g, const SpaceMap& f)
{
    require(f.codomain == g.domain, "space maps not composable");
    std::vector<int> v(f.values.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = g.values[static_cast<size_t>(f.values[i])];
    return SpaceMap{f.domain, g.codomain, std::move(v)};
}

bool is_surjective(const SpaceMap& f)
{
    std::vector<char> hit(static_cast<size_t>(f.codomain.size), 0);
    for (int v : f.values) hit[static_cast<size_t>(v)] = 1;
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool is_bijective(const SpaceMap& f)
{
    return f.domain.size == f.codomain.size && is_surjective(f);
}

Pullback pullback(const SpaceMap& f, const SpaceMap& g)
{
    require(f.codomain == g.codomain, "incompatible cospan");
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < f.domain.size; ++a)
        for (int b = 0; b < g.domain.size; ++b)
            if (f.apply(a) == g.apply(b)) pairs.emplace_back(a, b);
    FiniteSpace apex{static_cast<int>(pairs.size())};
    std::vector<int> p1(pairs.size()), p2(pairs.size());
    for (size_t i = 0; i < pairs.size(); ++i) {
        p1[i] = pairs[i].first;
        p2[i] = pairs[i].second;
    }
    return Pullback{apex, SpaceMap{apex, f.domain, std::move(p1)},
                    SpaceMap{apex, g.domain, std::move(p2)}, std::move(pairs)};
}

std::vector<int> fibre(const SpaceMap& p, int x)
{
    require(x >= 0 && x < p.codomain.size, "fibre point out of range");
    std::vector<int> out;
    for (int i = 0; i < p.domain.size; ++i)
        if (p.values[static_cast<size_t>(i)] == x) out.push_back(i);
    return out;
}

} // namespace probund
