#pragma once

// Exact classification of the nontrivial modules of G_w from the word shape,
// plus primality predicates derived from it. Array coordinates: the word
// w_0..w_{n-1} lives on vertex labels {-1, 0, ..., n-1}; the classical
// i_0, i_1, ..., i_n coordinates correspond to labels -1, 0, ..., n-1.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "graph.hpp"
#include "word.hpp"

namespace wordgraph {

enum class ModuleShape {
    whole_I,       // {0, ..., n-1}
    i0_plus_tail,  // {-1} u {1, ..., n-1}
    pair_i0_in,    // {-1, n-1}
    pair_i1_in,    // {0, n-1}
};

inline const char* to_string(ModuleShape s) {
    switch (s) {
        case ModuleShape::whole_I: return "whole_I";
        case ModuleShape::i0_plus_tail: return "i0_plus_tail";
        case ModuleShape::pair_i0_in: return "pair_i0_in";
        case ModuleShape::pair_i1_in: return "pair_i1_in";
    }
    return "?";
}

struct ModuleClassification {
    ModuleShape shape;
    std::vector<int> witness;   // the module, as sorted vertex labels
    std::string word_pattern;   // matched word family

    bool operator==(const ModuleClassification&) const = default;
};

namespace detail {

// w equals head, then `zeros` copies of mid, then tail.
inline bool matches_run_pattern(const Word& w, const std::string& head, uint8_t mid,
                                const std::string& tail) {
    size_t n = w.size();
    if (n < head.size() + tail.size()) return false;
    size_t run = n - head.size() - tail.size();
    for (size_t i = 0; i < head.size(); ++i)
        if (w[i] != (head[i] == '1')) return false;
    for (size_t i = 0; i < run; ++i)
        if (w[head.size() + i] != mid) return false;
    for (size_t i = 0; i < tail.size(); ++i)
        if (w[head.size() + run + i] != (tail[i] == '1')) return false;
    return true;
}

}  // namespace detail

// The complete list of nontrivial modules of G_w read off the word patterns:
//   whole_I       w = 1 0^{n-1}        or 0 1^{n-1}
//   i0_plus_tail  w = 00 1^{n-2}       or 11 0^{n-2}
//   pair_i0_in    w = 00 | 11 (n = 2), or 1 0^{n-3} 10 / 0 1^{n-3} 01 (n > 2)
//   pair_i1_in    w = 100 | 011 (n = 3), or 11 0^{n-4} 10 / 00 1^{n-4} 01 (n > 3)
// Words of length <= 2 go through the small-case analysis directly.
inline std::vector<ModuleClassification> classify_gw_modules(const Word& w) {
    if (w.empty()) throw std::invalid_argument("classify_gw_modules: empty word");
    size_t n = w.size();
    std::vector<ModuleClassification> out;
    auto interval = [&](int from, int to) {
        std::vector<int> v;
        for (int l = from; l <= to; ++l) v.push_back(l);
        return v;
    };
    int last = static_cast<int>(n) - 1;

    if (n == 1) return out;  // two vertices, prime
    if (n == 2) {
        // Exactly one nontrivial module per two-letter word.
        if (w[0] == w[1])
            out.push_back({ModuleShape::pair_i0_in, {-1, 1}, w[0] ? "11" : "00"});
        else
            out.push_back({ModuleShape::whole_I, {0, 1}, w[0] ? "1 0^{n-1}" : "0 1^{n-1}"});
        return out;
    }

    using detail::matches_run_pattern;
    if (matches_run_pattern(w, "1", 0, ""))
        out.push_back({ModuleShape::whole_I, interval(0, last), "1 0^{n-1}"});
    else if (matches_run_pattern(w, "0", 1, ""))
        out.push_back({ModuleShape::whole_I, interval(0, last), "0 1^{n-1}"});

    if (matches_run_pattern(w, "00", 1, "")) {
        auto v = interval(1, last);
        v.insert(v.begin(), -1);
        out.push_back({ModuleShape::i0_plus_tail, v, "00 1^{n-2}"});
    } else if (matches_run_pattern(w, "11", 0, "")) {
        auto v = interval(1, last);
        v.insert(v.begin(), -1);
        out.push_back({ModuleShape::i0_plus_tail, v, "11 0^{n-2}"});
    }

    if (matches_run_pattern(w, "1", 0, "10"))
        out.push_back({ModuleShape::pair_i0_in, {-1, last}, "1 0^{n-3} 10"});
    else if (matches_run_pattern(w, "0", 1, "01"))
        out.push_back({ModuleShape::pair_i0_in, {-1, last}, "0 1^{n-3} 01"});

    if (n == 3) {
        if (w == Word::parse("100"))
            out.push_back({ModuleShape::pair_i1_in, {0, last}, "100"});
        else if (w == Word::parse("011"))
            out.push_back({ModuleShape::pair_i1_in, {0, last}, "011"});
    } else {
        if (matches_run_pattern(w, "11", 0, "10"))
            out.push_back({ModuleShape::pair_i1_in, {0, last}, "11 0^{n-4} 10"});
        else if (matches_run_pattern(w, "00", 1, "01"))
            out.push_back({ModuleShape::pair_i1_in, {0, last}, "00 1^{n-4} 01"});
    }

    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.witness.size() != b.witness.size()) return a.witness.size() < b.witness.size();
        return a.witness < b.witness;
    });
    return out;
}

// Pattern route; must agree with brute-force is_prime(graph_from_word(w)).
inline bool gw_prime_by_pattern(const Word& w) {
    if (w.empty()) return true;
    return classify_gw_modules(w).empty();
}

// ---- length threshold ----------------------------------------------------

enum class ThresholdKind { pass, fail, precondition_violation };

struct ThresholdVerdict {
    ThresholdKind kind = ThresholdKind::pass;
    bool applicable = false;  // |w| > l + 4 held, so primality was asserted
    std::string detail;
};

// Whenever |w| > l+4 for words drawn from a factor set with run statistic l,
// G_w is prime. The verdict reports a precondition violation if w itself
// breaks the claimed run bound.
inline ThresholdVerdict length_threshold_check(const RunStats& stats, const Word& w) {
    ThresholdVerdict v;
    RunStats own = run_stats(w);
    if (own.l_value > stats.l_value) {
        v.kind = ThresholdKind::precondition_violation;
        v.detail = "word has a run of length " + std::to_string(own.l_value) +
                   " exceeding claimed l = " + std::to_string(stats.l_value);
        return v;
    }
    if (w.size() > stats.l_value + 4) {
        v.applicable = true;
        if (!is_prime(graph_from_word(w))) {
            v.kind = ThresholdKind::fail;
            v.detail = "G_w not prime for w = " + w.str();
        }
    }
    return v;
}

// ---- deletion primality ----------------------------------------------------

// For each vertex x of a prime G_w, whether G_w minus x stays prime.
// Primality-preserving deletions can only occur at labels -1, 0, |w|-1.
inline std::map<int, bool> deletion_primality(const Word& w) {
    if (w.size() < 3) throw std::invalid_argument("deletion_primality: |w| < 3");
    Graph g = graph_from_word(w);
    if (!is_prime(g)) throw std::invalid_argument("deletion_primality: G_w not prime");
    std::map<int, bool> out;
    for (int l : g.labels()) out[l] = is_prime(induced_drop(g, l));
    return out;
}

inline bool deletion_candidates_confined(const Word& w, const std::map<int, bool>& m) {
    int last = static_cast<int>(w.size()) - 1;
    for (auto [label, prime] : m)
        if (prime && label != -1 && label != 0 && label != last) return false;
    return true;
}

}  // namespace wordgraph
