#pragma once

// Windowed enumeration of age(G_mu): iso-class catalogs, graph bounds,
// word-bound transfer, embedding rigidity, and level diagnostics.
//
// Membership is always decided against the graph of a finite prefix window;
// negatives mean "not within this window", never an absolute claim.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "canonical.hpp"
#include "embed.hpp"
#include "graph.hpp"
#include "stream.hpp"
#include "structure.hpp"
#include "word.hpp"
#include "word_embed.hpp"

namespace wordgraph {

constexpr int kMaxAgeOrder = 10;

struct CatalogEntry {
    Graph representative;       // canonical representative on labels 0..k-1
    std::vector<int> witness;   // window positions of the first embedding found
};

class IsoCatalog {
public:
    void insert(const CanonicalForm& key, CatalogEntry entry) {
        classes_.emplace(key.bytes(), std::move(entry));
    }

    bool contains(const CanonicalForm& key) const { return classes_.count(key.bytes()) != 0; }
    size_t size() const { return classes_.size(); }

    const std::map<std::string, CatalogEntry>& classes() const { return classes_; }

    std::set<std::string> key_set() const {
        std::set<std::string> keys;
        for (auto& [k, v] : classes_) keys.insert(k);
        return keys;
    }

    // Keys grouped by class order, ascending.
    std::map<int, std::vector<std::string>> by_order() const {
        std::map<int, std::vector<std::string>> out;
        for (auto& [k, v] : classes_) out[v.representative.order()].push_back(k);
        return out;
    }

private:
    std::map<std::string, CatalogEntry> classes_;
};

// Window graph of a stream prefix.
inline Graph window_graph(const Stream& s, size_t window) {
    return graph_from_word(s.prefix(window));
}

// Default windows, empirically saturating at desk scale.
inline size_t default_window(const Stream& s, size_t max_order) {
    switch (s.kind()) {
        case Stream::Kind::finite:
            return *s.length();
        case Stream::Kind::periodic:
            return std::max<size_t>(4 * s.seed().size(), 8 * max_order);
        default:
            return std::max<size_t>(200, 20 * max_order);
    }
}

// All iso-classes of induced subgraphs of the window graph with 1..max_order
// vertices. Classes of order k+1 are generated as one-vertex extensions of
// classes of order k (complete, since ages are closed under deletion) and
// admitted by an induced-embedding test against the window graph.
inline IsoCatalog age_members(const Stream& s, int max_order, size_t window,
                              uint64_t embed_budget = kDefaultEmbedBudget) {
    if (max_order > kMaxAgeOrder)
        throw budget_error("age_members: max_order " + std::to_string(max_order) +
                           " exceeds budget " + std::to_string(kMaxAgeOrder));
    // Windows below max_order are allowed (truncation effects are the point
    // of saturation_check); they simply produce fewer classes.
    Word prefix = s.prefix(window);
    IsoCatalog catalog;
    if (max_order < 1) return catalog;

    std::vector<std::string> level;  // canonical keys of the previous order
    {
        Graph k1(1);
        CanonicalForm key = canonical_form(k1);
        catalog.insert(key, {key.representative(), {-1}});
        level.push_back(key.bytes());
    }
    for (int k = 1; k < max_order; ++k) {
        std::set<std::string> tested;  // candidate classes seen at order k+1
        std::vector<std::string> next;
        for (const std::string& key : level) {
            Graph base = CanonicalForm{key}.representative();
            for (uint64_t mask = 0; mask < (uint64_t{1} << k); ++mask) {
                Graph cand(k + 1);
                for (auto [a, b] : base.edges()) cand.add_edge(a, b);
                for (int t = 0; t < k; ++t)
                    if ((mask >> t) & 1) cand.add_edge(t, k);
                CanonicalForm ckey = canonical_form(cand);
                if (!tested.insert(ckey.bytes()).second) continue;
                auto emb = embed_into_word_graph(cand, prefix, embed_budget);
                if (emb) {
                    std::vector<int> witness = emb->image();
                    std::sort(witness.begin(), witness.end());
                    catalog.insert(ckey, {ckey.representative(), std::move(witness)});
                    next.push_back(ckey.bytes());
                }
            }
        }
        std::sort(next.begin(), next.end());
        level = std::move(next);
    }
    return catalog;
}

// True iff both windows produce identical canonical-form sets.
inline bool saturation_check(const Stream& s, int max_order, size_t w1, size_t w2,
                             uint64_t embed_budget = kDefaultEmbedBudget) {
    if (w1 >= w2) throw std::invalid_argument("saturation_check: requires w1 < w2");
    return age_members(s, max_order, w1, embed_budget).key_set() ==
           age_members(s, max_order, w2, embed_budget).key_set();
}

struct AgeContains {
    bool yes = false;
    std::vector<int> witness;  // window positions, sorted, when yes
};

inline AgeContains age_contains(const Stream& s, const Graph& h, size_t window,
                                uint64_t embed_budget = kDefaultEmbedBudget) {
    auto emb = embed_into_word_graph(h, s.prefix(window), embed_budget);
    if (!emb) return {};
    std::vector<int> witness = emb->image();
    std::sort(witness.begin(), witness.end());
    return {true, std::move(witness)};
}

struct BoundReport {
    std::vector<Graph> bounds;        // canonical representatives, sorted by (order, key)
    std::vector<CanonicalForm> keys;  // matching canonical keys
    int search_order_max = 0;
    size_t window = 0;
    std::optional<int> complete_up_to;  // nullopt = unknown (unsaturated window)
};

// Bounds of the windowed age up to max_order: classes outside the catalog all
// of whose one-vertex deletions lie inside. Candidates are one-vertex
// extensions of catalog members, which is a complete generator because every
// deletion of a bound belongs to the age.
inline BoundReport age_bounds(const Stream& s, int max_order, size_t window,
                              uint64_t embed_budget = kDefaultEmbedBudget) {
    IsoCatalog catalog = age_members(s, max_order, window, embed_budget);
    BoundReport report;
    report.search_order_max = max_order;
    report.window = window;

    // Saturation evidence: the catalog must already be stable at a smaller window.
    size_t w1 = std::max<size_t>(window * 3 / 4, 1);
    if (w1 < window &&
        age_members(s, max_order, w1, embed_budget).key_set() == catalog.key_set())
        report.complete_up_to = max_order;

    std::map<std::string, Graph> found;
    auto orders = catalog.by_order();
    for (auto& [k, keys] : orders) {
        if (k >= max_order) continue;
        for (const std::string& key : keys) {
            Graph base = CanonicalForm{key}.representative();
            for (uint64_t mask = 0; mask < (uint64_t{1} << k); ++mask) {
                Graph cand(k + 1);
                for (auto [a, b] : base.edges()) cand.add_edge(a, b);
                for (int t = 0; t < k; ++t)
                    if ((mask >> t) & 1) cand.add_edge(t, k);
                CanonicalForm ckey = canonical_form(cand);
                if (catalog.contains(ckey) || found.count(ckey.bytes())) continue;
                bool all_deletions_in = true;
                for (int v = 0; v <= k && all_deletions_in; ++v) {
                    Graph del = induced_drop(cand, v);
                    if (!catalog.contains(canonical_form(del))) all_deletions_in = false;
                }
                if (all_deletions_in) found.emplace(ckey.bytes(), ckey.representative());
            }
        }
    }
    std::vector<std::pair<std::pair<int, std::string>, Graph>> sorted;
    for (auto& [key, g] : found)
        sorted.push_back({{g.order(), key}, g});
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [ok, g] : sorted) {
        report.bounds.push_back(g);
        report.keys.push_back(CanonicalForm{ok.second});
    }
    return report;
}

// ---- word-bound transfer ---------------------------------------------------

struct TransferResult {
    Word extended;  // w_0 w
    Graph graph;    // G_{w_0 w}
    bool verified = false;
    std::string detail;
};

// From a word bound w = w_0...w_{n-1} of the windowed factor set with
// |w| > l+7, prepend a letter x such that x w_0...w_{n-2} stays a factor and
// return the graph of xw. Verified directly against the window: the graph
// must not embed while every one-vertex deletion embeds.
inline TransferResult bound_from_word_bound(const Stream& s, const Word& w, size_t window,
                                            uint64_t embed_budget = kDefaultEmbedBudget) {
    Word prefix = s.prefix(window);
    size_t n = w.size();
    size_t l = run_stats(prefix).l_value;
    if (n <= l + 7)
        throw std::invalid_argument("bound_from_word_bound: |w| = " + std::to_string(n) +
                                    " does not exceed l+7 = " + std::to_string(l + 7));
    std::set<Word> bounds = word_bounds(s, n, window);
    if (!bounds.count(w))
        throw std::invalid_argument("bound_from_word_bound: w is not a word bound of the window");
    Word head = w.subword(0, n - 1);
    std::optional<Word> extended;
    for (uint8_t letter : {uint8_t{0}, uint8_t{1}}) {
        Word cand = Word{{letter}} + head;
        if (is_factor(cand, prefix)) {
            extended = Word{{letter}} + w;
            break;
        }
    }
    if (!extended)
        throw std::invalid_argument(
            "bound_from_word_bound: no letter x makes x w_0...w_{n-2} a window factor");

    TransferResult res;
    res.extended = *extended;
    res.graph = graph_from_word(*extended);
    if (auto emb = embed_into_word_graph(res.graph, prefix, embed_budget)) {
        // Diagnose the embedding shape: an image of vertex 0 below the image
        // of vertex -1 consumes the flipped-letter left extension of the
        // word's right proper factor, which a recurrent stream always offers.
        Word flipped = Word{{static_cast<uint8_t>(1 - w[0])}} + w.subword(1, n - 1);
        res.detail = "graph embeds into the window graph (witness at";
        for (auto [p, h] : emb->map) res.detail += " " + std::to_string(h);
        res.detail += "); flipped-letter extension " + flipped.str() +
                      (is_factor(flipped, prefix) ? " is" : " is not") + " a window factor";
        return res;
    }
    for (int l2 : res.graph.labels()) {
        if (!embed_into_word_graph(induced_drop(res.graph, l2), prefix, embed_budget)) {
            res.detail = "deletion at " + std::to_string(l2) + " does not embed";
            return res;
        }
    }
    res.verified = true;
    res.detail = "bound verified within window";
    return res;
}

// ---- embedding rigidity ------------------------------------------------------

enum class RigidityKind { pass, fail, precondition_unmet };

struct RigidityVerdict {
    RigidityKind kind = RigidityKind::pass;
    size_t embedding_count = 0;
    std::string detail;
};

// For |w| > l+7, every embedding of G_w into the window graph must map
// vertices 1..n-1 increasingly onto a contiguous interval.
inline RigidityVerdict rigidity_check(const Stream& s, const Word& w, size_t window,
                                      uint64_t embed_budget = kDefaultEmbedBudget) {
    RigidityVerdict v;
    Word prefix = s.prefix(window);
    size_t l = run_stats(prefix).l_value;
    if (w.size() <= l + 7) {
        v.kind = RigidityKind::precondition_unmet;
        v.detail = "|w| = " + std::to_string(w.size()) +
                   " must exceed l+7 = " + std::to_string(l + 7);
        return v;
    }
    Graph host = window_graph(s, window);
    auto embs = all_embeddings(graph_from_word(w), host, embed_budget);
    v.embedding_count = embs.size();
    for (const Embedding& e : embs) {
        // map is sorted by pattern label: entries 2.. carry labels 1..n-1.
        for (size_t i = 3; i < e.map.size(); ++i) {
            if (e.map[i].second != e.map[i - 1].second + 1) {
                v.kind = RigidityKind::fail;
                v.detail = "vertex " + std::to_string(e.map[i].first) + " maps to " +
                           std::to_string(e.map[i].second) + ", breaking the interval";
                return v;
            }
        }
    }
    return v;
}

// ---- prefix-embedding necessity ----------------------------------------------

struct NecessityVerdict {
    bool pass = true;
    bool one_side_embeds = false;   // G_{1^4 w} embeds
    bool zero_side_embeds = false;  // G_{0^4 w} embeds
    std::string detail;
};

// If G_{1^4 w} embeds into the window graph then 1w must be a factor of the
// window, and dually for 0^4 and 0w.
inline NecessityVerdict prefix_necessity_check(const Stream& s, const Word& w, size_t window,
                                               uint64_t embed_budget = kDefaultEmbedBudget) {
    NecessityVerdict v;
    Word prefix = s.prefix(window);
    Word ones = Word::parse("1111") + w;
    Word zeros = Word::parse("0000") + w;
    v.one_side_embeds = embed_into_word_graph(graph_from_word(ones), prefix, embed_budget).has_value();
    v.zero_side_embeds = embed_into_word_graph(graph_from_word(zeros), prefix, embed_budget).has_value();
    if (v.one_side_embeds && !is_factor(Word::parse("1") + w, prefix)) {
        v.pass = false;
        v.detail = "G_{1^4 w} embeds but 1w is not a window factor";
    }
    if (v.zero_side_embeds && !is_factor(Word::parse("0") + w, prefix)) {
        v.pass = false;
        v.detail += std::string(v.detail.empty() ? "" : "; ") +
                    "G_{0^4 w} embeds but 0w is not a window factor";
    }
    return v;
}

// ---- level diagnostics -------------------------------------------------------

struct JonssonReport {
    std::vector<size_t> level_sizes;                  // counts for lengths 1..max_height
    std::vector<std::optional<size_t>> witnesses;     // m(n) per length, or unknown
};

inline JonssonReport jonsson_levels(const Stream& s, size_t max_height, size_t window) {
    JonssonReport rep;
    for (size_t n = 1; n <= max_height; ++n) {
        rep.level_sizes.push_back(factor_count(s, n, window));
        rep.witnesses.push_back(recurrence_function(s, n, window));
    }
    return rep;
}

// ---- factor inclusion --------------------------------------------------------

struct InclusionResult {
    bool included = false;
    std::optional<Word> missing_factor;  // u in fac(s1) \ fac(s2), shortlex-first
    std::optional<Word> context;         // v with vu a factor of s1 and G_{vu} prime
    std::optional<Graph> witness_graph;  // G_{vu}
    bool witness_verified = false;       // embeds in window of s1, not of s2
    std::string detail;
};

// Desk-scale age separation from factor separation: a factor of s1 missing
// from s2 is extended left to a prime word graph, which then witnesses a
// member of the windowed age of G_{s1} absent from that of G_{s2}.
inline InclusionResult factor_inclusion(const Stream& s1, const Stream& s2, size_t max_len,
                                        size_t window,
                                        uint64_t embed_budget = kDefaultEmbedBudget) {
    InclusionResult res;
    std::set<Word> f1 = factor_set(s1, max_len, window);
    std::set<Word> f2 = factor_set(s2, max_len, window);
    std::vector<Word> missing;
    for (const Word& u : f1)
        if (!f2.count(u)) missing.push_back(u);
    if (missing.empty()) {
        res.included = true;
        res.detail = "all window factors of the first stream occur in the second";
        return res;
    }
    const Word& u = missing.front();  // shortlex-first
    res.missing_factor = u;
    Word prefix1 = s1.prefix(window);
    for (size_t p : occurrences(u, prefix1)) {
        for (size_t k = 4; k <= p; ++k) {
            Word vu = prefix1.subword(p - k, k + u.size());
            if (vu.size() > 18) break;  // module-scan ceiling
            if (is_prime(graph_from_word(vu))) {
                res.context = prefix1.subword(p - k, k);
                res.witness_graph = graph_from_word(vu);
                break;
            }
        }
        if (res.witness_graph) break;
    }
    if (!res.witness_graph) {
        res.detail = "no prime left extension of the missing factor found in the window";
        return res;
    }
    bool in1 = embed_into_word_graph(*res.witness_graph, prefix1, embed_budget).has_value();
    bool in2 = embed_into_word_graph(*res.witness_graph, s2.prefix(window), embed_budget).has_value();
    res.witness_verified = in1 && !in2;
    res.detail = res.witness_verified
                     ? "witness graph separates the windowed ages"
                     : "witness graph failed verification";
    return res;
}

}  // namespace wordgraph
