#pragma once

// Induced-embedding decision specialized to word-graph hosts.
//
// Order the images of an embedding into G_prefix increasingly: each vertex
// beyond the first is adjacent either to all earlier vertices or to none of
// them, except possibly at its immediate predecessor (adjacent consecutive
// position with letter 1, or non-adjacent consecutive with letter 0). An
// embedding is therefore an ordering of the pattern with consistent letters
// a_t and consecutive-flags c_t, together with a placement of the resulting
// block factors left to right in the prefix with gaps of at least two.
// Greedy leftmost placement is optimal, so both presence and absence are
// decided without the exponential blowups of generic induced-subgraph search.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "embed.hpp"
#include "graph.hpp"
#include "word.hpp"

namespace wordgraph {

namespace detail {

class WordEmbedSearch {
public:
    WordEmbedSearch(const Graph& pattern, const Word& prefix, uint64_t node_budget)
        : p_(pattern), w_(prefix), budget_(node_budget) {}

    std::optional<std::vector<int>> run() {
        int n = p_.order();
        if (n == 0) return std::vector<int>{};
        if (n > static_cast<int>(w_.size()) + 1) return std::nullopt;
        used_.assign(n, 0);
        order_.clear();
        letters_.clear();
        flags_.clear();
        if (descend()) {
            std::vector<int> image(n);
            for (int t = 0; t < n; ++t) image[order_[t]] = positions_[t];
            return image;
        }
        return std::nullopt;
    }

private:
    // x and y interchangeable: equal adjacency to every other vertex, so the
    // transposition is an automorphism of the pattern.
    bool twins(int x, int y) const {
        for (int z = 0; z < p_.order(); ++z) {
            if (z == x || z == y) continue;
            if (p_.adj(x, z) != p_.adj(y, z)) return false;
        }
        return true;
    }

    bool descend() {
        int n = p_.order();
        int t = static_cast<int>(order_.size());
        if (t == n) return place();
        for (int v = 0; v < n; ++v) {
            if (used_[v]) continue;
            if (++nodes_ > budget_)
                throw budget_error("word-graph embedding search exceeded node budget");
            // Orbit pruning: skip if a smaller unused twin exists.
            bool skip = false;
            for (int x = 0; x < v && !skip; ++x)
                if (!used_[x] && twins(x, v)) skip = true;
            if (skip) continue;
            if (t == 0) {
                used_[v] = 1;
                order_.push_back(v);
                if (descend()) return true;
                order_.pop_back();
                used_[v] = 0;
                continue;
            }
            // Adjacency to everything before the immediate predecessor fixes
            // the letter; adjacency to the predecessor fixes the flag.
            int all = 0, none = 0;
            for (int s = 0; s + 1 < t; ++s)
                (p_.adj(v, order_[s]) ? all : none) += 1;
            bool adj_prev = p_.adj(v, order_[t - 1]);
            for (uint8_t letter : {uint8_t{0}, uint8_t{1}}) {
                if (letter == 0 && none > 0) continue;
                if (letter == 1 && all > 0) continue;
                uint8_t flag = (letter == 1) == adj_prev ? 1 : 0;
                used_[v] = 1;
                order_.push_back(v);
                letters_.push_back(letter);
                flags_.push_back(flag);
                if (descend()) return true;
                flags_.pop_back();
                letters_.pop_back();
                order_.pop_back();
                used_[v] = 0;
            }
        }
        return false;
    }

    // Greedy leftmost placement of the block factors of (letters, flags).
    bool place() {
        std::string seq;
        for (size_t t = 0; t < letters_.size(); ++t)
            seq.push_back(static_cast<char>(letters_[t] * 2 + flags_[t]));
        if (!failed_.insert(seq).second) return false;

        size_t k = letters_.size();
        positions_.assign(k + 1, 0);
        // First block: letters at consecutive positions right after p_0.
        size_t r = 0;
        while (r < k && flags_[r] == 1) ++r;
        long long cursor;  // position of the last letter placed so far
        {
            auto start = find_block(0, r, 0);
            if (!start) return false;
            positions_[0] = static_cast<int>(*start) - 1;
            for (size_t t = 0; t < r; ++t) positions_[t + 1] = static_cast<int>(*start + t);
            cursor = positions_[r];
        }
        size_t t = r;
        while (t < k) {
            size_t e = t + 1;
            while (e < k && flags_[e] == 1) ++e;
            auto start = find_block(t, e, static_cast<size_t>(cursor + 2));
            if (!start) return false;
            for (size_t i = t; i < e; ++i) positions_[i + 1] = static_cast<int>(*start + (i - t));
            cursor = positions_[e];
            t = e;
        }
        return true;
    }

    // Leftmost occurrence of letters_[from..to) at a position >= min_pos.
    std::optional<size_t> find_block(size_t from, size_t to, size_t min_pos) const {
        size_t len = to - from;
        if (len == 0) return min_pos;  // empty first block pins p_0 = -1
        if (w_.size() < len) return std::nullopt;
        for (size_t pos = min_pos; pos + len <= w_.size(); ++pos) {
            bool hit = true;
            for (size_t i = 0; i < len && hit; ++i)
                if (w_[pos + i] != letters_[from + i]) hit = false;
            if (hit) return pos;
        }
        return std::nullopt;
    }

    const Graph& p_;
    const Word& w_;
    uint64_t budget_;
    uint64_t nodes_ = 0;
    std::vector<char> used_;
    std::vector<int> order_;
    std::vector<uint8_t> letters_;
    std::vector<uint8_t> flags_;
    std::vector<int> positions_;
    std::set<std::string> failed_;
};

}  // namespace detail

// Induced embedding of `pattern` into the graph of `prefix` (vertex labels
// -1..|prefix|-1), or nullopt. Exact: a window-scoped negative is a proof
// that no embedding into this window exists.
inline std::optional<Embedding> embed_into_word_graph(const Graph& pattern, const Word& prefix,
                                                      uint64_t node_budget = kDefaultEmbedBudget) {
    detail::WordEmbedSearch search(pattern, prefix, node_budget);
    auto image = search.run();
    if (!image) return std::nullopt;
    Embedding e;
    for (int v = 0; v < pattern.order(); ++v)
        e.map.emplace_back(pattern.label(v), (*image)[v]);
    std::sort(e.map.begin(), e.map.end());
    return e;
}

}  // namespace wordgraph
