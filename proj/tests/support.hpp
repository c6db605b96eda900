// shared test fixtures and random generators
#ifndef FUZZYCAT_TESTS_SUPPORT_HPP
#define FUZZYCAT_TESTS_SUPPORT_HPP

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "fuzzycat/category.hpp"
#include "fuzzycat/constructions.hpp"
#include "fuzzycat/graph.hpp"

namespace fuzzycat::testing {

using Rng = std::mt19937;

/// Degree from the grid {0, 1/10, ..., 1}.
inline Degree grid_degree(Rng& rng) {
    std::uniform_int_distribution<int> dist(0, 10);
    return Degree::ratio(dist(rng), 10);
}

inline Degree positive_grid_degree(Rng& rng) {
    std::uniform_int_distribution<int> dist(1, 10);
    return Degree::ratio(dist(rng), 10);
}

inline std::vector<Degree> full_grid() {
    std::vector<Degree> grid;
    for (int i = 0; i <= 10; ++i) grid.push_back(Degree::ratio(i, 10));
    return grid;
}

inline std::string node_name(size_t i) { return std::string(1, char('A' + i)); }

/// Random multigraph: up to max_nodes nodes, up to max_arrows arrows with
/// grid degrees; parallel arrows and self-loops allowed.
inline FuzzyGraph random_graph(Rng& rng, size_t max_nodes = 6, size_t max_arrows = 10) {
    std::uniform_int_distribution<size_t> nodes_dist(1, max_nodes);
    size_t n = nodes_dist(rng);
    FuzzyGraph g;
    for (size_t i = 0; i < n; ++i) g.nodes.push_back(node_name(i));
    std::uniform_int_distribution<size_t> arrows_dist(0, max_arrows);
    std::uniform_int_distribution<size_t> node_dist(0, n - 1);
    size_t m = arrows_dist(rng);
    for (size_t i = 0; i < m; ++i)
        g.arrows.push_back({"a" + std::to_string(i), g.nodes[node_dist(rng)],
                            g.nodes[node_dist(rng)], positive_grid_degree(rng)});
    return g;
}

/// Random acyclic graph: arrows only go from lower-indexed to strictly
/// higher-indexed nodes, so every composite fits in any max_len >= n - 1.
inline FuzzyGraph random_dag(Rng& rng, size_t max_nodes = 5, size_t max_arrows = 8) {
    std::uniform_int_distribution<size_t> nodes_dist(2, max_nodes);
    size_t n = nodes_dist(rng);
    FuzzyGraph g;
    for (size_t i = 0; i < n; ++i) g.nodes.push_back(node_name(i));
    std::uniform_int_distribution<size_t> arrows_dist(0, max_arrows);
    std::uniform_int_distribution<size_t> node_dist(0, n - 1);
    size_t m = arrows_dist(rng);
    for (size_t i = 0; i < m; ++i) {
        size_t a = node_dist(rng), b = node_dist(rng);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        g.arrows.push_back({"a" + std::to_string(i), g.nodes[a], g.nodes[b],
                            positive_grid_degree(rng)});
    }
    return g;
}

/// Random fuzzy relation over n elements, diagonal pinned to 1.
inline FuzzyRelation random_relation(Rng& rng, size_t n) {
    FuzzyRelation r;
    for (size_t i = 0; i < n; ++i) r.elements.push_back("e" + std::to_string(i));
    for (const auto& x : r.elements)
        for (const auto& y : r.elements)
            r.matrix[{x, y}] = x == y ? Degree::one() : grid_degree(rng);
    return r;
}

/// Iterated max-min closure: repairs any relation to min-transitivity.
inline FuzzyRelation max_min_closure(FuzzyRelation r) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& x : r.elements)
            for (const auto& y : r.elements)
                for (const auto& z : r.elements) {
                    const Degree& xy = r.matrix.at({x, y});
                    const Degree& yz = r.matrix.at({y, z});
                    Degree via = xy <= yz ? xy : yz;
                    Degree& xz = r.matrix.at({x, z});
                    if (via > xz) {
                        xz = via;
                        changed = true;
                    }
                }
    }
    return r;
}

/// Crisp category of a random preorder on up to max_objects elements:
/// one arrow x->y per related pair, all degrees 1, unique composition.
inline FuzzyCategory random_poset_category(Rng& rng, size_t max_objects = 5) {
    std::uniform_int_distribution<size_t> n_dist(1, max_objects);
    size_t n = n_dist(rng);
    // random relation containing the diagonal, closed transitively
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
    std::uniform_int_distribution<int> coin(0, 3);
    for (size_t i = 0; i < n; ++i) {
        rel[i][i] = true;
        for (size_t j = i + 1; j < n; ++j)
            if (coin(rng) == 0) rel[i][j] = true;
    }
    for (size_t k = 0; k < n; ++k)
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (rel[i][k] && rel[k][j]) rel[i][j] = true;

    FuzzyCategory c;
    for (size_t i = 0; i < n; ++i) c.objects.push_back(node_name(i));
    auto pair_id = [&](size_t i, size_t j) { return node_name(i) + "->" + node_name(j); };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (rel[i][j])
                c.arrows.push_back({pair_id(i, j), node_name(i), node_name(j), Degree::one()});
    for (size_t i = 0; i < n; ++i) c.identities[node_name(i)] = pair_id(i, i);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                if (rel[i][j] && rel[j][k])
                    c.composition[{pair_id(j, k), pair_id(i, j)}] = pair_id(i, k);
    return c;
}

/// One-object crisp category on the cyclic monoid Z_n.
inline FuzzyCategory cyclic_monoid_category(size_t n) {
    FuzzyCategory c;
    c.objects = {"M"};
    auto id = [](size_t i) { return "m" + std::to_string(i); };
    for (size_t i = 0; i < n; ++i) c.arrows.push_back({id(i), "M", "M", Degree::one()});
    c.identities["M"] = id(0);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            c.composition[{id(i), id(j)}] = id((i + j) % n);
    return c;
}

/// A mixed pool of small validated categories for property sweeps.
inline std::vector<FuzzyCategory> random_category_suite(Rng& rng, size_t count) {
    std::vector<FuzzyCategory> suite;
    std::uniform_int_distribution<int> pick(0, 2);
    std::uniform_int_distribution<size_t> monoid_size(1, 6);
    while (suite.size() < count) {
        switch (pick(rng)) {
            case 0:
                suite.push_back(random_poset_category(rng));
                break;
            case 1:
                suite.push_back(cyclic_monoid_category(monoid_size(rng)));
                break;
            default: {
                FuzzyGraph g = random_dag(rng);
                int max_len = std::max<int>(1, static_cast<int>(g.nodes.size()));
                suite.push_back(free_fuzzy_category(g, max_len).category);
                break;
            }
        }
    }
    return suite;
}

} // namespace fuzzycat::testing

#endif
