#pragma once

// Induced-subgraph embedding search: backtracking over candidate bitsets with
// forward checking. Candidate order is fixed, so enumeration is reproducible.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "graph.hpp"

namespace wordgraph {

// Injective map pattern-vertex -> host-vertex preserving edges and non-edges,
// stored as (pattern label, host label) pairs sorted by pattern label.
struct Embedding {
    std::vector<std::pair<int, int>> map;

    std::vector<int> image() const {
        std::vector<int> im;
        im.reserve(map.size());
        for (auto& [p, h] : map) im.push_back(h);
        return im;
    }

    bool operator==(const Embedding&) const = default;
};

namespace detail {

class EmbedSearch {
public:
    EmbedSearch(const Graph& pattern, const Graph& host, uint64_t node_budget)
        : p_(pattern), h_(host), stride_(host.stride() ? host.stride() : 1),
          budget_(node_budget) {}

    // Fixed variable order when `order` is nonempty, else fail-first dynamic
    // order (fewest remaining candidates). visit returns false to stop.
    template <typename Visit>
    void run(const std::vector<int>& order, Visit&& visit) {
        int np = p_.order(), nh = h_.order();
        if (np > nh) return;
        if (np == 0) {
            visit(std::vector<int>{});
            return;
        }
        // Initial candidates: host degree must cover pattern degree.
        cand_.assign(np * stride_, 0);
        for (int v = 0; v < np; ++v) {
            int dv = p_.degree(v);
            for (int u = 0; u < nh; ++u)
                if (h_.degree(u) >= dv)
                    cand_[v * stride_ + u / 64] |= uint64_t{1} << (u % 64);
        }
        order_ = order;
        assign_.assign(np, -1);
        stop_ = false;
        descend(0, visit);
    }

    uint64_t nodes() const { return nodes_; }

private:
    size_t cand_count(int v) const {
        size_t c = 0;
        for (size_t k = 0; k < stride_; ++k)
            c += __builtin_popcountll(cand_[v * stride_ + k]);
        return c;
    }

    int pick_vertex(size_t depth) const {
        if (!order_.empty()) return order_[depth];
        int best = -1;
        size_t best_count = 0;
        for (int v = 0; v < p_.order(); ++v) {
            if (assign_[v] >= 0) continue;
            size_t c = cand_count(v);
            if (best < 0 || c < best_count) {
                best = v;
                best_count = c;
            }
        }
        return best;
    }

    template <typename Visit>
    void descend(size_t depth, Visit&& visit) {
        if (stop_) return;
        if (depth == static_cast<size_t>(p_.order())) {
            std::vector<int> img(p_.order());
            for (int v = 0; v < p_.order(); ++v) img[v] = assign_[v];
            if (!visit(img)) stop_ = true;
            return;
        }
        int v = pick_vertex(depth);
        const uint64_t* cv = cand_.data() + v * stride_;
        for (size_t w = 0; w < stride_ && !stop_; ++w) {
            uint64_t bits = cv[w];
            while (bits && !stop_) {
                int b = __builtin_ctzll(bits);
                bits &= bits - 1;
                int u = static_cast<int>(w * 64 + b);
                if (++nodes_ > budget_)
                    throw budget_error("embedding search exceeded node budget");
                // Forward-check: restrict the candidates of unassigned vertices.
                size_t mark = saved_.size();
                bool dead = false;
                assign_[v] = u;
                for (int x = 0; x < p_.order() && !dead; ++x) {
                    if (assign_[x] >= 0) continue;
                    uint64_t* cx = cand_.data() + x * stride_;
                    const uint64_t* hu = h_.row(u);
                    bool adj = p_.adj(v, x);
                    bool any = false;
                    saved_vertices_.push_back(x);
                    for (size_t k = 0; k < stride_; ++k) {
                        saved_.push_back(cx[k]);
                        uint64_t m = adj ? hu[k] : ~hu[k];
                        if (k == w) m &= ~(uint64_t{1} << b);
                        cx[k] &= m;
                        any |= cx[k] != 0;
                    }
                    dead = !any;
                }
                if (!dead) descend(depth + 1, visit);
                assign_[v] = -1;
                // Undo.
                size_t nrestored = (saved_.size() - mark) / stride_;
                for (size_t r = 0; r < nrestored; ++r) {
                    int x = saved_vertices_[saved_vertices_.size() - nrestored + r];
                    uint64_t* cx = cand_.data() + x * stride_;
                    for (size_t k = 0; k < stride_; ++k) cx[k] = saved_[mark + r * stride_ + k];
                }
                saved_.resize(mark);
                saved_vertices_.resize(saved_vertices_.size() - nrestored);
            }
        }
    }

    const Graph& p_;
    const Graph& h_;
    size_t stride_;
    uint64_t budget_;
    uint64_t nodes_ = 0;
    bool stop_ = false;
    std::vector<uint64_t> cand_;
    std::vector<int> assign_;
    std::vector<int> order_;
    std::vector<uint64_t> saved_;
    std::vector<int> saved_vertices_;
};

// Pattern vertices sorted by label: image tuples then enumerate lexicographically.
inline std::vector<int> label_order(const Graph& p) {
    std::vector<int> ord(p.order());
    for (int i = 0; i < p.order(); ++i) ord[i] = i;
    std::sort(ord.begin(), ord.end(), [&](int a, int b) { return p.label(a) < p.label(b); });
    return ord;
}

}  // namespace detail

constexpr uint64_t kDefaultEmbedBudget = 50'000'000;

// Some induced embedding of `pattern` into `host`, if one exists. Dynamic
// fail-first vertex selection; still deterministic (ties break by index).
inline std::optional<Embedding> embeds(const Graph& pattern, const Graph& host,
                                       uint64_t node_budget = kDefaultEmbedBudget) {
    detail::EmbedSearch search(pattern, host, node_budget);
    std::optional<std::vector<int>> found;
    search.run({}, [&](std::vector<int> img) {
        found = std::move(img);
        return false;
    });
    if (!found) return std::nullopt;
    Embedding e;
    for (int v = 0; v < pattern.order(); ++v)
        e.map.emplace_back(pattern.label(v), host.label((*found)[v]));
    std::sort(e.map.begin(), e.map.end());
    return e;
}

// Every induced embedding, ordered lexicographically by image tuple (pattern
// vertices taken in label order).
inline std::vector<Embedding> all_embeddings(const Graph& pattern, const Graph& host,
                                             uint64_t node_budget = kDefaultEmbedBudget) {
    detail::EmbedSearch search(pattern, host, node_budget);
    std::vector<Embedding> out;
    auto order = detail::label_order(pattern);
    search.run(order, [&](std::vector<int> img) {
        Embedding e;
        for (int v = 0; v < pattern.order(); ++v)
            e.map.emplace_back(pattern.label(v), host.label(img[v]));
        std::sort(e.map.begin(), e.map.end());
        out.push_back(std::move(e));
        return true;
    });
    // Host labels need not be sorted by internal index, so order explicitly.
    std::sort(out.begin(), out.end(),
              [](const Embedding& a, const Embedding& b) { return a.map < b.map; });
    return out;
}

}  // namespace wordgraph
