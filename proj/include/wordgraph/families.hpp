#pragma once

// Generators for the unavoidable prime families and their finite truncations.
// Label scheme: a_i -> i, b_j -> n+j, extra vertex (when present) -> 0.

#include <map>
#include <string>
#include <vector>

#include "graph.hpp"

namespace wordgraph {

enum class Family {
    half_graph,       // a_i ~ b_j iff i <= j; both sides independent
    half_split,       // a_i ~ b_j iff i <= j; b side a clique
    half_split_I,     // half_split plus a vertex adjacent to every a_i
    half_split_star,  // half_split plus a vertex adjacent to a_1 only
    thin_spider,      // b clique, a_i ~ b_j iff i = j
    thick_spider,     // b clique, a_i ~ b_j iff i != j
    star_subdivision, // 1-subdivision of K_{1,n}
    line_K2n,         // line graph of K_{2,n}
};

struct FamilySpec {
    Family family;
    int n = 1;
};

inline const std::map<std::string, Family>& family_names() {
    static const std::map<std::string, Family> names{
        {"half_graph", Family::half_graph},
        {"half_split", Family::half_split},
        {"half_split_I", Family::half_split_I},
        {"half_split_star", Family::half_split_star},
        {"thin_spider", Family::thin_spider},
        {"thick_spider", Family::thick_spider},
        {"star_subdivision", Family::star_subdivision},
        {"line_K2n", Family::line_K2n},
    };
    return names;
}

inline std::string to_string(Family f) {
    for (auto& [name, fam] : family_names())
        if (fam == f) return name;
    return "?";
}

inline Family parse_family(const std::string& name) {
    auto it = family_names().find(name);
    if (it == family_names().end()) throw std::invalid_argument("unknown family: " + name);
    return it->second;
}

inline Graph make_family(const FamilySpec& spec) {
    int n = spec.n;
    if (n < 1) throw std::invalid_argument("family size must be >= 1");
    auto two_sided = [&](bool b_clique, auto cross) {
        std::vector<int> labels;
        for (int i = 1; i <= 2 * n; ++i) labels.push_back(i);
        Graph g(labels);
        if (b_clique)
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) g.add_edge_labels(n + i, n + j);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (cross(i, j)) g.add_edge_labels(i, n + j);
        return g;
    };
    auto with_extra = [&](Graph base, auto attach) {
        std::vector<int> labels{0};
        for (int l : base.labels()) labels.push_back(l);
        Graph g(labels);
        for (auto [u, v] : base.edges()) g.add_edge_labels(u, v);
        for (int i = 1; i <= n; ++i)
            if (attach(i)) g.add_edge_labels(0, i);
        return g;
    };
    switch (spec.family) {
        case Family::half_graph:
            return two_sided(false, [](int i, int j) { return i <= j; });
        case Family::half_split:
            return two_sided(true, [](int i, int j) { return i <= j; });
        case Family::half_split_I:
            return with_extra(two_sided(true, [](int i, int j) { return i <= j; }),
                              [](int) { return true; });
        case Family::half_split_star:
            return with_extra(two_sided(true, [](int i, int j) { return i <= j; }),
                              [](int i) { return i == 1; });
        case Family::thin_spider:
            return two_sided(true, [](int i, int j) { return i == j; });
        case Family::thick_spider:
            return two_sided(true, [](int i, int j) { return i != j; });
        case Family::star_subdivision: {
            // center 0, middles 1..n, leaves n+1..2n
            std::vector<int> labels;
            for (int i = 0; i <= 2 * n; ++i) labels.push_back(i);
            Graph g(labels);
            for (int i = 1; i <= n; ++i) {
                g.add_edge_labels(0, i);
                g.add_edge_labels(i, n + i);
            }
            return g;
        }
        case Family::line_K2n: {
            // Two n-cliques joined by a perfect matching.
            std::vector<int> labels;
            for (int i = 1; i <= 2 * n; ++i) labels.push_back(i);
            Graph g(labels);
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    g.add_edge_labels(i, j);
                    g.add_edge_labels(n + i, n + j);
                }
            for (int i = 1; i <= n; ++i) g.add_edge_labels(i, n + i);
            return g;
        }
    }
    throw std::logic_error("unreachable");
}

struct FamilySweepRow {
    Family family;
    int n;
    bool prime;
};

// Brute-force primality of every family member with 3 <= n <= n_max.
inline std::vector<FamilySweepRow> family_primality_sweep(int n_max, int module_budget = 20) {
    if (n_max > 9)
        throw budget_error("family_primality_sweep: n_max > 9 exceeds the brute-force budget");
    std::vector<FamilySweepRow> rows;
    for (auto& [name, fam] : family_names())
        for (int n = 3; n <= n_max; ++n)
            rows.push_back({fam, n, is_prime(make_family({fam, n}), module_budget)});
    return rows;
}

}  // namespace wordgraph
