#pragma once

// Canonical forms for small graphs: iterated degree refinement, then the
// minimal adjacency-matrix bit string over the orderings consistent with the
// refinement. Equal keys iff isomorphic; adequate at desk scale.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "graph.hpp"

namespace wordgraph {

namespace detail {

// Isomorphism-invariant color classes (1-dimensional refinement). Colors are
// dense ints ordered by an invariant signature.
inline std::vector<int> refine_colors(const Graph& g) {
    int n = g.order();
    std::vector<int> color(n, 0);
    for (int i = 0; i < n; ++i) color[i] = g.degree(i);
    // Normalize to dense ids by sorted value.
    auto densify = [&](std::vector<std::vector<int>>& sigs) {
        std::vector<std::vector<int>> sorted = sigs;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (int i = 0; i < n; ++i)
            color[i] = static_cast<int>(
                std::lower_bound(sorted.begin(), sorted.end(), sigs[i]) - sorted.begin());
        return static_cast<int>(sorted.size());
    };
    {
        std::vector<std::vector<int>> sigs(n);
        for (int i = 0; i < n; ++i) sigs[i] = {color[i]};
        densify(sigs);
    }
    int classes = 0;
    for (;;) {
        std::vector<std::vector<int>> sigs(n);
        for (int i = 0; i < n; ++i) {
            std::vector<int> neigh;
            for (int j = 0; j < n; ++j)
                if (g.adj(i, j)) neigh.push_back(color[j]);
            std::sort(neigh.begin(), neigh.end());
            sigs[i].push_back(color[i]);
            sigs[i].insert(sigs[i].end(), neigh.begin(), neigh.end());
        }
        int next = densify(sigs);
        if (next == classes) break;
        classes = next;
    }
    return color;
}

struct CanonSearch {
    const Graph& g;
    int n;
    std::vector<int> order;      // chosen vertices so far
    std::vector<char> used;
    bool have_best = false;
    std::vector<uint8_t> best;   // best complete bit string found
    std::vector<uint8_t> cur;    // current partial bit string
    const std::vector<int>& color;

    CanonSearch(const Graph& gg, const std::vector<int>& col)
        : g(gg), n(gg.order()), used(gg.order(), 0), color(col) {}

    void run() {
        order.reserve(n);
        cur.reserve(n * (n - 1) / 2);
        descend();
    }

    // Placing vertex v at position k appends its adjacency bits to positions
    // 0..k-1; branches whose partial string already exceeds the best are cut.
    void descend() {
        int k = static_cast<int>(order.size());
        if (k == n) {
            if (!have_best || cur < best) { best = cur; have_best = true; }
            return;
        }
        int cmin = -1;
        for (int v = 0; v < n; ++v)
            if (!used[v] && (cmin < 0 || color[v] < cmin)) cmin = color[v];
        for (int v = 0; v < n; ++v) {
            if (used[v] || color[v] != cmin) continue;
            size_t mark = cur.size();
            for (int p = 0; p < k; ++p) cur.push_back(g.adj(order[p], v) ? 1 : 0);
            bool viable = !have_best ||
                          !std::lexicographical_compare(best.begin(), best.begin() + cur.size(),
                                                        cur.begin(), cur.end());
            if (viable) {
                used[v] = 1;
                order.push_back(v);
                descend();
                order.pop_back();
                used[v] = 0;
            }
            cur.resize(mark);
        }
    }
};

}  // namespace detail

// A total-order key: equal keys iff isomorphic, invariant under relabeling.
class CanonicalForm {
public:
    CanonicalForm() = default;
    explicit CanonicalForm(std::string bytes) : bytes_(std::move(bytes)) {}

    const std::string& bytes() const { return bytes_; }

    std::string hex() const {
        static const char* digits = "0123456789abcdef";
        std::string out;
        out.reserve(bytes_.size() * 2);
        for (unsigned char c : bytes_) {
            out.push_back(digits[c >> 4]);
            out.push_back(digits[c & 15]);
        }
        return out;
    }

    // Order of the encoded graph.
    int order() const { return bytes_.empty() ? 0 : static_cast<unsigned char>(bytes_[0]); }

    // Decodes the canonical representative on labels 0..n-1.
    Graph representative() const {
        int n = order();
        Graph g(n);
        size_t bit = 0;
        for (int k = 1; k < n; ++k)
            for (int p = 0; p < k; ++p, ++bit) {
                size_t byte = 1 + bit / 8;
                if ((static_cast<unsigned char>(bytes_[byte]) >> (bit % 8)) & 1)
                    g.add_edge(p, k);
            }
        return g;
    }

    bool operator==(const CanonicalForm&) const = default;
    auto operator<=>(const CanonicalForm&) const = default;

private:
    std::string bytes_;
};

inline CanonicalForm canonical_form(const Graph& g, int budget = 16) {
    int n = g.order();
    if (n > budget)
        throw budget_error("canonical_form: order " + std::to_string(n) +
                           " exceeds budget " + std::to_string(budget));
    std::vector<uint8_t> bits;
    if (n > 0) {
        auto color = detail::refine_colors(g);
        detail::CanonSearch search(g, color);
        search.run();
        bits = std::move(search.best);
    }
    std::string bytes(1 + (bits.size() + 7) / 8, '\0');
    bytes[0] = static_cast<char>(n);
    for (size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) bytes[1 + i / 8] |= static_cast<char>(1 << (i % 8));
    return CanonicalForm{std::move(bytes)};
}

inline bool isomorphic(const Graph& a, const Graph& b, int budget = 16) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a, budget) == canonical_form(b, budget);
}

}  // namespace wordgraph
