#pragma once

// Two-dimensional realizers for word graphs, transitive-orientation search,
// and permutation-graph certification.

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "graph.hpp"
#include "word.hpp"

namespace wordgraph {

// A permutation of vertex labels, listed from minimum to maximum.
struct LinearOrder {
    std::vector<int> seq;

    size_t size() const { return seq.size(); }

    // position[label] lookup.
    int rank_of(int label) const {
        for (size_t i = 0; i < seq.size(); ++i)
            if (seq[i] == label) return static_cast<int>(i);
        throw std::invalid_argument("label not in linear order");
    }

    bool less(int a, int b) const { return rank_of(a) < rank_of(b); }

    void reverse() { std::reverse(seq.begin(), seq.end()); }

    bool operator==(const LinearOrder&) const = default;
};

struct Realizer {
    LinearOrder L;
    LinearOrder M;

    bool operator==(const Realizer&) const = default;
};

// Comparable in the intersection order: same relative position in both orders.
inline bool realizer_comparable(const Realizer& r, int a, int b) {
    return r.L.less(a, b) == r.M.less(a, b);
}

// True iff the comparability graph of L n M equals g.
inline bool verify_realizer(const Graph& g, const Realizer& r) {
    if (r.L.size() != static_cast<size_t>(g.order()) || r.M.size() != r.L.size()) return false;
    {
        std::vector<int> a = r.L.seq, b = r.M.seq, c = g.labels();
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        std::sort(c.begin(), c.end());
        if (a != b || a != c) return false;
    }
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j) {
            int lu = g.label(i), lv = g.label(j);
            if (realizer_comparable(r, lu, lv) != g.adj(i, j)) return false;
        }
    return true;
}

namespace detail {

inline void insert_below_top(std::vector<int>& seq, int v) {
    seq.insert(seq.end() - 1, v);
}

}  // namespace detail

// Incremental realizer for G_w. Invariant after step k: (L, M) realizes a
// transitive orientation of the graph of w_0..w_k and vertex k is extremal in
// L or M. Each step normalizes so the previous vertex is the L-maximum
// (dualizing and/or swapping the two orders), inserts the new vertex
// immediately below the L-maximum, places it at the bottom of M when the new
// letter is 1 and at the top of M when it is 0, then undoes the
// normalization so the realized orientation extends the previous one.
inline Realizer build_realizer(const Word& w) {
    if (w.empty()) throw std::invalid_argument("build_realizer: empty word");
    Realizer r;
    if (w[0] == 1) {
        r.L.seq = {-1, 0};  // edge oriented -1 < 0
        r.M.seq = {-1, 0};
    } else {
        r.L.seq = {-1, 0};  // incomparable pair
        r.M.seq = {0, -1};
    }
    for (size_t k = 1; k < w.size(); ++k) {
        int u = static_cast<int>(k) - 1;  // previous vertex, extremal by invariant
        int v = static_cast<int>(k);
        bool dualized = false, swapped = false;
        if (r.L.seq.back() != u && r.M.seq.back() != u) {
            r.L.reverse();
            r.M.reverse();
            dualized = true;
        }
        if (r.L.seq.back() != u) {
            std::swap(r.L, r.M);
            swapped = true;
        }
        detail::insert_below_top(r.L.seq, v);
        if (w[k] == 1)
            r.M.seq.insert(r.M.seq.begin(), v);
        else
            r.M.seq.push_back(v);
        if (swapped) std::swap(r.L, r.M);
        if (dualized) {
            r.L.reverse();
            r.M.reverse();
        }
    }
    return r;
}

// The permutation realized by ranking vertices in L and reading positions in
// the dual of M; its inversion graph is the realizer's comparability graph.
// One-line notation over positions 1..n.
inline std::vector<int> realizer_permutation(const Realizer& r) {
    size_t n = r.L.size();
    std::vector<int> sigma(n);
    for (size_t i = 0; i < n; ++i)
        sigma[i] = static_cast<int>(n) - r.M.rank_of(r.L.seq[i]);
    return sigma;
}

// Inversion graph of sigma placed on the realizer's own labels: vertex at
// L-rank i gets label L[i]; {L[i], L[j]} is an edge iff sigma inverts i, j.
inline Graph inversion_graph(const std::vector<int>& sigma, const LinearOrder& L) {
    std::vector<int> labels = L.seq;
    std::sort(labels.begin(), labels.end());
    Graph g(labels);
    for (size_t i = 0; i < sigma.size(); ++i)
        for (size_t j = i + 1; j < sigma.size(); ++j)
            if (sigma[i] > sigma[j]) g.add_edge_labels(L.seq[i], L.seq[j]);
    return g;
}

// ---- posets and transitive orientation ---------------------------------

// Strict order relation over the labels of a graph; rel[i][j] means i < j.
struct Poset {
    std::vector<int> labels;
    std::vector<std::vector<char>> rel;

    bool less(int i, int j) const { return rel[i][j]; }

    bool antisymmetric() const {
        for (size_t i = 0; i < rel.size(); ++i)
            for (size_t j = 0; j < rel.size(); ++j)
                if (i != j && rel[i][j] && rel[j][i]) return false;
        return true;
    }

    bool transitive() const {
        size_t n = rel.size();
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                if (!rel[i][j]) continue;
                for (size_t k = 0; k < n; ++k)
                    if (rel[j][k] && !rel[i][k]) return false;
            }
        return true;
    }

    bool irreflexive() const {
        for (size_t i = 0; i < rel.size(); ++i)
            if (rel[i][i]) return false;
        return true;
    }

    bool valid() const { return irreflexive() && antisymmetric() && transitive(); }

    Poset dual() const {
        Poset d{labels, rel};
        for (size_t i = 0; i < rel.size(); ++i)
            for (size_t j = 0; j < rel.size(); ++j) d.rel[i][j] = rel[j][i];
        return d;
    }
};

// Comparability graph of a poset, on the poset's labels.
inline Graph comparability_graph(const Poset& p) {
    Graph g(p.labels);
    for (size_t i = 0; i < p.rel.size(); ++i)
        for (size_t j = i + 1; j < p.rel.size(); ++j)
            if (p.rel[i][j] || p.rel[j][i])
                g.add_edge_labels(p.labels[i], p.labels[j]);
    return g;
}

namespace detail {

// Orientation state over edges; 0 = unoriented, +1 = i->j for i < j, -1 = j->i.
struct OrientSearch {
    const Graph& g;
    int n;
    std::vector<int8_t> dir;  // indexed i*n+j for i<j

    explicit OrientSearch(const Graph& gg) : g(gg), n(gg.order()), dir(n * n, 0) {}

    int get(int i, int j) const { return i < j ? dir[i * n + j] : -dir[j * n + i]; }

    void set(int i, int j, int d, std::vector<std::pair<int, int>>& trail) {
        if (i < j) {
            dir[i * n + j] = static_cast<int8_t>(d);
            trail.emplace_back(i, j);
        } else {
            dir[j * n + i] = static_cast<int8_t>(-d);
            trail.emplace_back(j, i);
        }
    }

    // Propagate the forcing rule from edge (a->b): along any edge {a,c} with
    // c not adjacent to b the direction at a must agree, and dually at b.
    bool force(int a0, int b0, std::vector<std::pair<int, int>>& trail) {
        std::vector<std::pair<int, int>> queue{{a0, b0}};
        while (!queue.empty()) {
            auto [a, b] = queue.back();
            queue.pop_back();
            for (int c = 0; c < n; ++c) {
                if (c == a || c == b) continue;
                if (g.adj(a, c) && !g.adj(b, c)) {
                    int cur = get(a, c);
                    if (cur == 0) {
                        set(a, c, 1, trail);  // orient a -> c
                        queue.emplace_back(a, c);
                    } else if (cur < 0) {
                        return false;  // already oriented c -> a, conflict
                    }
                }
                if (g.adj(b, c) && !g.adj(a, c)) {
                    int cur = get(c, b);
                    if (cur == 0) {
                        set(c, b, 1, trail);  // orient c -> b
                        queue.emplace_back(c, b);
                    } else if (cur < 0) {
                        return false;
                    }
                }
            }
        }
        return true;
    }

    bool solve(const std::vector<std::pair<int, int>>& edges, size_t next) {
        while (next < edges.size() && get(edges[next].first, edges[next].second) != 0) ++next;
        if (next == edges.size()) return transitive();
        auto [i, j] = edges[next];
        for (int d : {1, -1}) {
            std::vector<std::pair<int, int>> trail;
            set(i, j, d, trail);
            if (force(d > 0 ? i : j, d > 0 ? j : i, trail) && solve(edges, next + 1)) return true;
            for (auto [a, b] : trail) dir[a * n + b] = 0;
        }
        return false;
    }

    bool transitive() const {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j || get(i, j) <= 0) continue;
                for (int k = 0; k < n; ++k) {
                    if (k == i || k == j) continue;
                    if (get(j, k) > 0 && get(i, k) <= 0) return false;
                }
            }
        return true;
    }
};

}  // namespace detail

// A transitive orientation of g if one exists. Forcing propagation along
// shared endpoints with non-adjacent far ends, then branching.
inline std::optional<Poset> transitive_orientation(const Graph& g, int budget = 16) {
    if (g.order() > budget)
        throw budget_error("transitive_orientation: order " + std::to_string(g.order()) +
                           " exceeds budget " + std::to_string(budget));
    detail::OrientSearch search(g);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            if (g.adj(i, j)) edges.emplace_back(i, j);
    if (!search.solve(edges, 0)) return std::nullopt;
    Poset p;
    p.labels = g.labels();
    p.rel.assign(g.order(), std::vector<char>(g.order(), 0));
    for (auto [i, j] : edges) {
        if (search.get(i, j) > 0) p.rel[i][j] = 1;
        else p.rel[j][i] = 1;
    }
    return p;
}

inline bool is_comparability(const Graph& g, int budget = 16) {
    return transitive_orientation(g, budget).has_value();
}

// Finite case: permutation graph iff both the graph and its complement admit
// transitive orientations.
inline bool is_permutation_graph(const Graph& g, int budget = 16) {
    return is_comparability(g, budget) && is_comparability(complement(g), budget);
}

// ---- interval confinement ----------------------------------------------

struct IntervalVerdict {
    bool pass = true;
    int k = -1;       // violating prefix bound
    int vertex = 0;   // violating vertex label
};

// For each 0 <= k <= |w|-3, vertices {k+2, ..., |w|-1} must avoid the least
// L-interval and least M-interval containing {-1, ..., k}.
inline IntervalVerdict interval_confinement(const Word& w, const Realizer& r) {
    if (w.size() < 3) throw std::invalid_argument("interval_confinement: |w| < 3");
    int n = static_cast<int>(w.size());
    auto check_order = [&](const LinearOrder& ord) -> std::optional<std::pair<int, int>> {
        std::vector<int> pos(n + 1);
        for (int l = -1; l < n; ++l) pos[l + 1] = ord.rank_of(l);
        for (int k = 0; k + 3 <= n; ++k) {
            int lo = pos[0], hi = pos[0];
            for (int l = 0; l <= k; ++l) {
                lo = std::min(lo, pos[l + 1]);
                hi = std::max(hi, pos[l + 1]);
            }
            for (int j = k + 2; j < n; ++j)
                if (pos[j + 1] > lo && pos[j + 1] < hi) return std::make_pair(k, j);
        }
        return std::nullopt;
    };
    for (const LinearOrder* ord : {&r.L, &r.M})
        if (auto bad = check_order(*ord)) return {false, bad->first, bad->second};
    return {};
}

// ---- text format --------------------------------------------------------
//
//   L: <labels in order>
//   M: <labels in order>

inline std::string realizer_text(const Realizer& r) {
    std::ostringstream os;
    os << "L:";
    for (int l : r.L.seq) os << ' ' << l;
    os << "\nM:";
    for (int l : r.M.seq) os << ' ' << l;
    os << "\n";
    return os.str();
}

inline Realizer parse_realizer(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    Realizer r;
    for (LinearOrder* ord : {&r.L, &r.M}) {
        if (!std::getline(is, line)) throw std::invalid_argument("realizer text: missing line");
        std::istringstream ls(line);
        std::string head;
        ls >> head;
        if (head != (ord == &r.L ? "L:" : "M:"))
            throw std::invalid_argument("realizer text: expected L:/M: lines");
        int v;
        while (ls >> v) ord->seq.push_back(v);
    }
    return r;
}

}  // namespace wordgraph
