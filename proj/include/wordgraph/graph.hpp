#pragma once

// Finite simple graphs with stable external labels (integers, -1 allowed).
// Adjacency is stored as dense bit rows over internal 0-based indices.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "word.hpp"

namespace wordgraph {

class Graph {
public:
    Graph() : Graph(std::vector<int>{}) {}

    explicit Graph(int order) : Graph(default_labels(order)) {}

    explicit Graph(std::vector<int> labels)
        : labels_(std::move(labels)), stride_((labels_.size() + 63) / 64),
          rows_(labels_.size() * stride_, 0) {
        for (size_t i = 0; i < labels_.size(); ++i) {
            if (!index_.emplace(labels_[i], static_cast<int>(i)).second)
                throw std::invalid_argument("duplicate vertex label");
        }
    }

    int order() const { return static_cast<int>(labels_.size()); }
    const std::vector<int>& labels() const { return labels_; }
    int label(int i) const { return labels_[i]; }

    int index_of(int label) const {
        auto it = index_.find(label);
        if (it == index_.end())
            throw std::invalid_argument("unknown vertex label " + std::to_string(label));
        return it->second;
    }
    bool has_label(int label) const { return index_.count(label) != 0; }

    bool adj(int i, int j) const { return (rows_[i * stride_ + j / 64] >> (j % 64)) & 1; }
    bool adj_labels(int lu, int lv) const { return adj(index_of(lu), index_of(lv)); }

    void add_edge(int i, int j) {
        if (i == j) throw std::invalid_argument("no loops");
        rows_[i * stride_ + j / 64] |= uint64_t{1} << (j % 64);
        rows_[j * stride_ + i / 64] |= uint64_t{1} << (i % 64);
    }
    void add_edge_labels(int lu, int lv) { add_edge(index_of(lu), index_of(lv)); }

    const uint64_t* row(int i) const { return rows_.data() + i * stride_; }
    size_t stride() const { return stride_; }

    int degree(int i) const {
        int d = 0;
        for (size_t k = 0; k < stride_; ++k) d += __builtin_popcountll(rows_[i * stride_ + k]);
        return d;
    }

    // Edges as label pairs (lu < lv), sorted.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> es;
        for (int i = 0; i < order(); ++i)
            for (int j = i + 1; j < order(); ++j)
                if (adj(i, j)) {
                    int a = labels_[i], b = labels_[j];
                    es.emplace_back(std::min(a, b), std::max(a, b));
                }
        std::sort(es.begin(), es.end());
        return es;
    }

    size_t edge_count() const {
        size_t m = 0;
        for (int i = 0; i < order(); ++i) m += degree(i);
        return m / 2;
    }

    bool operator==(const Graph& rhs) const {
        return labels_ == rhs.labels_ && rows_ == rhs.rows_;
    }

private:
    static std::vector<int> default_labels(int order) {
        std::vector<int> l(order);
        for (int i = 0; i < order; ++i) l[i] = i;
        return l;
    }

    std::vector<int> labels_;
    std::map<int, int> index_;
    size_t stride_;
    std::vector<uint64_t> rows_;
};

// The graph G_w on labels {-1, 0, ..., |w|-1}: for i < j, {i,j} is an edge iff
// (w_j = 1 and j = i+1) or (w_j = 0 and j != i+1).
inline Graph graph_from_word(const Word& w) {
    int n = static_cast<int>(w.size());
    std::vector<int> labels(n + 1);
    for (int i = 0; i <= n; ++i) labels[i] = i - 1;
    Graph g(labels);
    for (int j = 0; j < n; ++j)
        for (int i = -1; i < j; ++i) {
            bool edge = w[j] ? (j == i + 1) : (j != i + 1);
            if (edge) g.add_edge_labels(i, j);
        }
    return g;
}

inline Graph complement(const Graph& g) {
    Graph c(g.labels());
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            if (!g.adj(i, j)) c.add_edge(i, j);
    return c;
}

// Subgraph induced on the given labels (inherited), label-sorted.
inline Graph induced(const Graph& g, std::vector<int> labels) {
    std::sort(labels.begin(), labels.end());
    for (int l : labels) g.index_of(l);  // validates
    Graph h(labels);
    for (size_t a = 0; a < labels.size(); ++a)
        for (size_t b = a + 1; b < labels.size(); ++b)
            if (g.adj_labels(labels[a], labels[b])) h.add_edge(static_cast<int>(a), static_cast<int>(b));
    return h;
}

inline Graph induced_drop(const Graph& g, int dropped_label) {
    std::vector<int> keep;
    for (int l : g.labels())
        if (l != dropped_label) keep.push_back(l);
    return induced(g, keep);
}

// True iff no vertex outside S distinguishes two members of S.
inline bool is_module(const Graph& g, const std::vector<int>& member_labels) {
    std::vector<char> in(g.order(), 0);
    for (int l : member_labels) in[g.index_of(l)] = 1;
    for (int x = 0; x < g.order(); ++x) {
        if (in[x]) continue;
        int seen = -1;
        for (int m = 0; m < g.order(); ++m) {
            if (!in[m]) continue;
            int a = g.adj(x, m) ? 1 : 0;
            if (seen < 0) seen = a;
            else if (seen != a) return false;
        }
    }
    return true;
}

namespace detail {

inline bool mask_is_module(const Graph& g, uint64_t mask) {
    // Precondition: g.order() <= 64.
    int n = g.order();
    for (int x = 0; x < n; ++x) {
        if ((mask >> x) & 1) continue;
        uint64_t r = g.row(x)[0] & mask;
        if (r != 0 && r != mask) return false;
    }
    return true;
}

}  // namespace detail

// All S with 2 <= |S| < n that are modules, sorted by size then by labels.
// Exhaustive subset scan; refuses orders beyond the budget.
inline std::vector<std::vector<int>> nontrivial_modules(const Graph& g, int budget = 20) {
    int n = g.order();
    if (n > budget || n > 64)
        throw budget_error("nontrivial_modules: order " + std::to_string(n) +
                           " exceeds budget " + std::to_string(std::min(budget, 64)));
    std::vector<std::vector<int>> out;
    if (n < 3) return out;
    for (uint64_t mask = 1; mask < (uint64_t{1} << n); ++mask) {
        int pc = __builtin_popcountll(mask);
        if (pc < 2 || pc >= n) continue;
        if (!detail::mask_is_module(g, mask)) continue;
        std::vector<int> labels;
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1) labels.push_back(g.label(i));
        std::sort(labels.begin(), labels.end());
        out.push_back(std::move(labels));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

// Graphs on at most two vertices are prime.
inline bool is_prime(const Graph& g, int budget = 20) {
    if (g.order() <= 2) return true;
    return nontrivial_modules(g, budget).empty();
}

// ---- text / structured formats ----------------------------------------
//
// Text format:
//   n <order>
//   labels <l_0> ... <l_{n-1}>
//   e <li> <lj>        (li < lj, edges sorted)

inline void write_graph(std::ostream& os, const Graph& g) {
    os << "n " << g.order() << "\n";
    os << "labels";
    for (int l : g.labels()) os << ' ' << l;
    os << "\n";
    for (auto [a, b] : g.edges()) os << "e " << a << ' ' << b << "\n";
}

inline std::string graph_text(const Graph& g) {
    std::ostringstream os;
    write_graph(os, g);
    return os.str();
}

inline Graph read_graph(std::istream& is) {
    std::string tok;
    if (!(is >> tok) || tok != "n") throw std::invalid_argument("graph text: expected 'n'");
    int order = 0;
    if (!(is >> order) || order < 0) throw std::invalid_argument("graph text: bad order");
    if (!(is >> tok) || tok != "labels") throw std::invalid_argument("graph text: expected 'labels'");
    std::vector<int> labels(order);
    for (int& l : labels)
        if (!(is >> l)) throw std::invalid_argument("graph text: bad label list");
    Graph g(labels);
    while (is >> tok) {
        if (tok != "e") throw std::invalid_argument("graph text: expected 'e'");
        int a, b;
        if (!(is >> a >> b)) throw std::invalid_argument("graph text: bad edge");
        g.add_edge_labels(a, b);
    }
    return g;
}

inline Graph parse_graph(const std::string& text) {
    std::istringstream is(text);
    return read_graph(is);
}

// ---- small named graphs (test and CLI conveniences) --------------------

inline Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(0, n - 1);
    return g;
}

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

}  // namespace wordgraph
