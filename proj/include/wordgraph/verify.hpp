#pragma once

// The acceptance suites: each criterion exercises a library surface against
// an independent route (brute force, exhaustive enumeration, or a closed-form
// oracle) and reports one pass/fail line.

#include <atomic>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ages.hpp"
#include "canonical.hpp"
#include "embed.hpp"
#include "families.hpp"
#include "graph.hpp"
#include "realizer.hpp"
#include "stream.hpp"
#include "structure.hpp"
#include "word.hpp"

namespace wordgraph {

struct Criterion {
    std::string id;
    std::string name;
    bool pass = false;
    std::string detail;
};

namespace detail {

inline unsigned clamp_threads(unsigned requested) {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    return std::max(1u, std::min(requested, hw));
}

// Index-deterministic parallel map: fn(i) must write only to slot i of
// caller-owned storage.
template <typename Fn>
void parallel_for(size_t n, unsigned threads, Fn&& fn) {
    threads = clamp_threads(threads);
    if (threads <= 1 || n < 2) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= n) return;
                fn(i);
            }
        });
    for (auto& th : pool) th.join();
}

inline std::string plural(size_t n, const char* what) {
    return std::to_string(n) + " " + what + (n == 1 ? "" : "s");
}

}  // namespace detail

// AC1: classify_gw_modules equals brute-force nontrivial_modules for every
// word with 2 <= |w| <= max_len.
inline Criterion check_module_oracle(size_t max_len = 12, unsigned threads = 1) {
    Criterion c{"AC1", "module-classification oracle equivalence", true, ""};
    size_t checked = 0;
    for (size_t n = 2; n <= max_len && c.pass; ++n) {
        auto words = all_words_of_length(n);
        std::vector<std::string> bad(words.size());
        detail::parallel_for(words.size(), threads, [&](size_t i) {
            const Word& w = words[i];
            auto classified = classify_gw_modules(w);
            auto brute = nontrivial_modules(graph_from_word(w));
            std::vector<std::vector<int>> predicted;
            for (auto& m : classified) predicted.push_back(m.witness);
            if (predicted != brute) bad[i] = w.str();
        });
        checked += words.size();
        for (auto& b : bad)
            if (!b.empty()) {
                c.pass = false;
                c.detail = "mismatch at w = " + b;
                break;
            }
    }
    if (c.pass) c.detail = detail::plural(checked, "word") + " checked, all module lists agree";
    return c;
}

// AC2: pattern primality agrees with brute force, and every non-prime G_w
// contains a run 0^{|w|-4} or 1^{|w|-4}.
inline Criterion check_primality_soundness(size_t max_len = 12, unsigned threads = 1) {
    Criterion c{"AC2", "primality pattern soundness and long-run consequence", true, ""};
    size_t checked = 0, nonprime = 0;
    for (size_t n = 2; n <= max_len && c.pass; ++n) {
        auto words = all_words_of_length(n);
        std::vector<std::string> bad(words.size());
        std::vector<char> np(words.size(), 0);
        detail::parallel_for(words.size(), threads, [&](size_t i) {
            const Word& w = words[i];
            bool pattern = gw_prime_by_pattern(w);
            bool brute = is_prime(graph_from_word(w));
            if (pattern != brute) {
                bad[i] = "predicate mismatch at w = " + w.str();
                return;
            }
            if (!brute) {
                np[i] = 1;
                size_t need = n > 4 ? n - 4 : 0;
                if (run_stats(w).l_value < need)
                    bad[i] = "non-prime w = " + w.str() + " lacks a run of length " +
                             std::to_string(need);
            }
        });
        checked += words.size();
        for (size_t i = 0; i < words.size(); ++i) {
            nonprime += np[i];
            if (!bad[i].empty()) {
                c.pass = false;
                c.detail = bad[i];
                break;
            }
        }
    }
    if (c.pass)
        c.detail = detail::plural(checked, "word") + " checked, " +
                   std::to_string(nonprime) + " non-prime, all consistent";
    return c;
}

// AC3: realizer construction soundness plus the independent orientation-search
// certification, for every word with |w| <= max_len.
inline Criterion check_realizers(size_t max_len = 10, unsigned threads = 1) {
    Criterion c{"AC3", "realizer certification", true, ""};
    size_t checked = 0;
    for (size_t n = 1; n <= max_len && c.pass; ++n) {
        auto words = all_words_of_length(n);
        std::vector<std::string> bad(words.size());
        detail::parallel_for(words.size(), threads, [&](size_t i) {
            const Word& w = words[i];
            Graph g = graph_from_word(w);
            Realizer r = build_realizer(w);
            if (!verify_realizer(g, r)) {
                bad[i] = "verify_realizer fails at w = " + w.str();
                return;
            }
            int last = static_cast<int>(n) - 1;
            bool extremal = r.L.seq.front() == last || r.L.seq.back() == last ||
                            r.M.seq.front() == last || r.M.seq.back() == last;
            if (!extremal) {
                bad[i] = "final vertex not extremal at w = " + w.str();
                return;
            }
            if (n >= 3 && !interval_confinement(w, r).pass) {
                bad[i] = "interval confinement fails at w = " + w.str();
                return;
            }
            auto sigma = realizer_permutation(r);
            if (!(inversion_graph(sigma, r.L) == g)) {
                bad[i] = "permutation round trip fails at w = " + w.str();
                return;
            }
            if (!is_permutation_graph(g)) {
                bad[i] = "orientation search rejects G_w at w = " + w.str();
                return;
            }
        });
        checked += words.size();
        for (auto& b : bad)
            if (!b.empty()) {
                c.pass = false;
                c.detail = b;
                break;
            }
    }
    if (c.pass) c.detail = detail::plural(checked, "word") + " certified by both routes";
    return c;
}

// AC4: for every periodic seed of period p <= max_period, word bounds up to
// length p+3 all have length <= p.
inline Criterion check_periodic_word_bounds(size_t max_period = 6) {
    Criterion c{"AC4", "periodic word bounds have length at most the period", true, ""};
    size_t seeds = 0, bounds_seen = 0;
    for (size_t p = 1; p <= max_period && c.pass; ++p) {
        for (const Word& seed : all_words_of_length(p)) {
            Stream s = Stream::periodic(seed);
            size_t window = 8 * p + 32;
            for (const Word& b : word_bounds(s, p + 3, window)) {
                ++bounds_seen;
                if (b.size() > p) {
                    c.pass = false;
                    c.detail = "seed " + seed.str() + " has bound " + b.str() +
                               " longer than p = " + std::to_string(p);
                    break;
                }
            }
            ++seeds;
            if (!c.pass) break;
        }
    }
    if (c.pass)
        c.detail = detail::plural(seeds, "seed") + " checked, " +
                   std::to_string(bounds_seen) + " bounds, zero violations";
    return c;
}

// ---- linear-forest oracle (independent route for the path age) -----------

namespace detail {

inline bool is_linear_forest(const Graph& g) {
    int n = g.order();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int i = 0; i < n; ++i) {
        if (g.degree(i) > 2) return false;
        for (int j = i + 1; j < n; ++j) {
            if (!g.adj(i, j)) continue;
            int a = find(i), b = find(j);
            if (a == b) return false;  // cycle
            parent[a] = b;
        }
    }
    return true;
}

inline void partitions_into(int n, int max_part, std::vector<int>& cur,
                            std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int part = std::min(n, max_part); part >= 1; --part) {
        cur.push_back(part);
        partitions_into(n - part, part, cur, out);
        cur.pop_back();
    }
}

// Disjoint union of paths with the given sizes.
inline Graph linear_forest_graph(const std::vector<int>& parts) {
    int n = std::accumulate(parts.begin(), parts.end(), 0);
    Graph g(n);
    int base = 0;
    for (int part : parts) {
        for (int i = 0; i + 1 < part; ++i) g.add_edge(base + i, base + i + 1);
        base += part;
    }
    return g;
}

// Iso classes of linear forests of each order 1..max_order, via integer
// partitions. Wholly independent of the age machinery.
inline std::vector<CanonicalForm> linear_forest_classes(int max_order) {
    std::vector<CanonicalForm> keys;
    for (int n = 1; n <= max_order; ++n) {
        std::vector<std::vector<int>> parts;
        std::vector<int> cur;
        partitions_into(n, n, cur, parts);
        for (auto& ps : parts) keys.push_back(canonical_form(linear_forest_graph(ps)));
    }
    return keys;
}

// Expected bound set of the linear-forest age: one-vertex extensions of
// linear forests that are not linear forests while every deletion is.
inline std::set<std::string> linear_forest_bound_keys(int max_order) {
    std::set<std::string> out;
    for (const CanonicalForm& key : linear_forest_classes(max_order - 1)) {
        Graph base = key.representative();
        int k = base.order();
        for (uint64_t mask = 0; mask < (uint64_t{1} << k); ++mask) {
            Graph cand(k + 1);
            for (auto [a, b] : base.edges()) cand.add_edge(a, b);
            for (int t = 0; t < k; ++t)
                if ((mask >> t) & 1) cand.add_edge(t, k);
            if (is_linear_forest(cand)) continue;
            bool all_lf = true;
            for (int v = 0; v <= k && all_lf; ++v)
                if (!is_linear_forest(induced_drop(cand, v))) all_lf = false;
            if (all_lf) out.insert(canonical_form(cand).bytes());
        }
    }
    return out;
}

inline std::string named_graph_list(const std::vector<CanonicalForm>& keys) {
    std::vector<std::pair<std::string, Graph>> named{
        {"K_3", complete_graph(3)},   {"K_{1,3}", star_graph(3)},
        {"C_4", cycle_graph(4)},      {"C_5", cycle_graph(5)},
        {"C_6", cycle_graph(6)},      {"C_7", cycle_graph(7)},
        {"C_8", cycle_graph(8)},      {"C_9", cycle_graph(9)},
    };
    std::string out;
    for (const CanonicalForm& key : keys) {
        std::string name = key.hex().substr(0, 12);
        for (auto& [nm, g] : named)
            if (g.order() == key.order() && canonical_form(g) == key) { name = nm; break; }
        out += (out.empty() ? "" : ", ") + name;
    }
    return out;
}

}  // namespace detail

// AC5: the bound set of the path age at order <= 7 equals the linear-forest
// oracle's bound set: {K_3, K_{1,3}, C_4, C_5, C_6, C_7}. The classical
// type-listing for this age (odd cycles >= 5, even cycles >= 6, K_{1,3}, K_3)
// omits C_4; the exhaustive oracle is authoritative and the discrepancy is
// flagged in the report.
inline Criterion check_path_age_bounds() {
    Criterion c{"AC5", "path-age bound set vs linear-forest oracle", true, ""};
    BoundReport rep = age_bounds(Stream::periodic(Word::parse("1")), 7, 30);
    std::set<std::string> got;
    for (auto& key : rep.keys) got.insert(key.bytes());
    std::set<std::string> expected = detail::linear_forest_bound_keys(7);
    std::set<std::string> classical{
        canonical_form(complete_graph(3)).bytes(), canonical_form(star_graph(3)).bytes(),
        canonical_form(cycle_graph(5)).bytes(),    canonical_form(cycle_graph(6)).bytes(),
        canonical_form(cycle_graph(7)).bytes()};
    if (got != expected) {
        c.pass = false;
        c.detail = "bound search disagrees with the linear-forest oracle";
        return c;
    }
    bool has_c4 = got.count(canonical_form(cycle_graph(4)).bytes()) != 0;
    std::set<std::string> rest = got;
    for (auto& k : classical) rest.erase(k);
    bool only_c4_extra = has_c4 && rest.size() == 1;
    if (!only_c4_extra) {
        c.pass = false;
        c.detail = "bound set does not match {classical families} + C_4";
        return c;
    }
    c.detail = "bounds = {" + detail::named_graph_list(rep.keys) +
               "}; note: C_4 appears beyond the classical type-listing "
               "(odd cycles >= 5, even cycles >= 6, K_{1,3}, K_3)";
    return c;
}

// AC6a: bound sets of periodic:01 and periodic:011 stabilize between
// max_order 6 and 7. For periodic:011 this is false: two genuine order-7
// bounds exist (confirmed against a second window and by the generic
// embedding search); the set then stays fixed through orders 8 and 9, so the
// finiteness statement itself is corroborated one order later. The check
// asserts the stated 6 -> 7 stabilization and reports the diagnosis.
inline Criterion check_bounds_stabilize() {
    Criterion c{"AC6a", "periodic bound sets stabilize at order 6 -> 7", true, ""};
    std::string detail;
    for (const char* spec : {"periodic:01", "periodic:011"}) {
        Stream s = Stream::parse(spec);
        BoundReport b6 = age_bounds(s, 6, default_window(s, 6));
        BoundReport b7 = age_bounds(s, 7, default_window(s, 7));
        if (!b6.complete_up_to || !b7.complete_up_to) {
            c.pass = false;
            c.detail = std::string(spec) + ": window did not saturate";
            return c;
        }
        std::set<std::string> k6, k7;
        for (auto& k : b6.keys) k6.insert(k.bytes());
        for (auto& k : b7.keys) k7.insert(k.bytes());
        if (k6 != k7) {
            c.pass = false;
            BoundReport b8 = age_bounds(s, 8, default_window(s, 8));
            detail += std::string(detail.empty() ? "" : "; ") + spec + ": " +
                      std::to_string(k7.size() - k6.size()) + " new bounds at order 7 (" +
                      std::to_string(k6.size()) + " -> " + std::to_string(k7.size()) +
                      "), then " + (b8.keys.size() == k7.size() ? "stable" : "unstable") +
                      " at order 8";
        } else {
            detail += std::string(detail.empty() ? "" : "; ") + spec + " stable at " +
                      std::to_string(k7.size()) + " bounds";
        }
    }
    c.detail = detail;
    return c;
}

// AC6b: the cumulative bound count of the fibonacci age strictly increases
// over max_order 5 -> 6 -> 7.
inline Criterion check_bounds_grow() {
    Criterion c{"AC6b", "fibonacci bound count strictly increases over orders 5,6,7", true, ""};
    Stream s = Stream::fibonacci();
    std::vector<size_t> counts;
    for (int k : {5, 6, 7})
        counts.push_back(age_bounds(s, k, default_window(s, k)).keys.size());
    if (!(counts[0] < counts[1] && counts[1] < counts[2])) {
        c.pass = false;
        c.detail = "counts " + std::to_string(counts[0]) + ", " + std::to_string(counts[1]) +
                   ", " + std::to_string(counts[2]) + " not strictly increasing";
        return c;
    }
    c.detail = "bound counts " + std::to_string(counts[0]) + " < " + std::to_string(counts[1]) +
               " < " + std::to_string(counts[2]);
    return c;
}

// AC7: word-bound transfer for fibonacci and thue-morse on the first word
// bound of length >= 10. The construction (prepend a letter keeping the left
// proper factor a factor) does not yield graph bounds for recurrent streams:
// the transfer graph embeds by sending vertex 0 below vertex -1 and reading
// the flipped-letter left extension of the bound's right proper factor - an
// extension every recurrent stream contains, since the right proper factor
// is left-extendable and extending by the original letter would recreate the
// bound itself. The check runs the stated construction with its full
// verification and reports the outcome honestly.
inline Criterion check_word_bound_transfer() {
    Criterion c{"AC7", "word-bound to graph-bound transfer", true, ""};
    std::string detail;
    struct Case { const char* spec; size_t window; };
    for (auto [spec, window] : {Case{"fibonacci", 400}, Case{"thue-morse", 600}}) {
        Stream s = Stream::parse(spec);
        std::optional<Word> first;
        for (const Word& b : word_bounds(s, 16, window))
            if (b.size() >= 10) { first = b; break; }
        if (!first) {
            c.pass = false;
            c.detail = std::string(spec) + ": no word bound of length in [10, 16] found";
            return c;
        }
        TransferResult res = bound_from_word_bound(s, *first, window);
        if (!res.verified) c.pass = false;
        detail += std::string(detail.empty() ? "" : "; ") + spec + ": bound " + first->str() +
                  " -> G_{" + res.extended.str() + "} " +
                  (res.verified ? "verified" : "NOT a bound: " + res.detail);
    }
    c.detail = detail;
    return c;
}

// AC8: embedding rigidity for periodic:011 (window 24) and periodic:0011
// (window 28) on every factor of length 10.
inline Criterion check_rigidity() {
    Criterion c{"AC8", "embedding rigidity onto intervals", true, ""};
    struct Case { const char* spec; size_t window; };
    size_t factors_checked = 0, embeddings = 0;
    for (auto [spec, window] : {Case{"periodic:011", 24}, Case{"periodic:0011", 28}}) {
        Stream s = Stream::parse(spec);
        for (const Word& w : factor_set(s, 10, window)) {
            if (w.size() != 10) continue;
            RigidityVerdict v = rigidity_check(s, w, window);
            if (v.kind != RigidityKind::pass) {
                c.pass = false;
                c.detail = std::string(spec) + " factor " + w.str() + ": " + v.detail;
                return c;
            }
            if (v.embedding_count == 0) {
                c.pass = false;
                c.detail = std::string(spec) + " factor " + w.str() + ": no embeddings found";
                return c;
            }
            ++factors_checked;
            embeddings += v.embedding_count;
        }
    }
    c.detail = detail::plural(factors_checked, "factor") + ", " +
               detail::plural(embeddings, "embedding") + ", all increasing onto intervals";
    return c;
}

// AC9: all eight families are prime for 3 <= n <= 8. The half split graph
// fails this for every n: {a_1, b_1} is a nontrivial module (a_1 sees every
// b_j, b_1 sees no a_i beyond a_1), which is why only its one-vertex
// extensions appear among the unavoidable prime graphs. The sweep reports
// the failure honestly rather than excluding the family.
inline Criterion check_families(int n_max = 8) {
    Criterion c{"AC9", "family primality sweep", true, ""};
    auto rows = family_primality_sweep(n_max);
    std::string failing;
    size_t prime_rows = 0;
    for (auto& row : rows) {
        if (row.prime) {
            ++prime_rows;
        } else {
            c.pass = false;
            failing += (failing.empty() ? "" : ", ") + to_string(row.family) + "(" +
                       std::to_string(row.n) + ")";
        }
    }
    if (c.pass) {
        c.detail = detail::plural(rows.size(), "family member") + " all prime";
    } else {
        auto mods = nontrivial_modules(make_family({Family::half_split, 3}));
        std::string witness;
        if (!mods.empty()) {
            for (size_t i = 0; i < mods.front().size(); ++i)
                witness += (i ? "," : "") + std::to_string(mods.front()[i]);
        }
        c.detail = "not prime: " + failing + "; " + std::to_string(prime_rows) + "/" +
                   std::to_string(rows.size()) +
                   " rows prime; half_split(n) always has the module {a_1,b_1}" +
                   (witness.empty() ? "" : " (labels {" + witness + "} at n=3)");
    }
    return c;
}

// AC10: fibonacci level sizes are n+1 with recurrence witnesses inside a
// length-10^4 window; periodic:01 has constant level size 2.
inline Criterion check_jonsson() {
    Criterion c{"AC10", "level-size and recurrence-witness diagnostics", true, ""};
    JonssonReport fib = jonsson_levels(Stream::fibonacci(), 12, 10000);
    for (size_t n = 1; n <= 12; ++n) {
        if (fib.level_sizes[n - 1] != n + 1) {
            c.pass = false;
            c.detail = "fibonacci level " + std::to_string(n) + " has size " +
                       std::to_string(fib.level_sizes[n - 1]) + ", expected " +
                       std::to_string(n + 1);
            return c;
        }
        if (!fib.witnesses[n - 1]) {
            c.pass = false;
            c.detail = "fibonacci has no recurrence witness for n = " + std::to_string(n);
            return c;
        }
    }
    JonssonReport alt = jonsson_levels(Stream::parse("periodic:01"), 6, 100);
    for (size_t n = 1; n <= 6; ++n)
        if (alt.level_sizes[n - 1] != 2) {
            c.pass = false;
            c.detail = "periodic:01 level " + std::to_string(n) + " has size " +
                       std::to_string(alt.level_sizes[n - 1]);
            return c;
        }
    std::ostringstream os;
    os << "fibonacci levels n+1 for n <= 12 with witnesses m(n) = ";
    for (size_t n = 1; n <= 12; ++n) os << (n > 1 ? "," : "") << *fib.witnesses[n - 1];
    os << "; periodic:01 levels constant 2";
    c.detail = os.str();
    return c;
}

inline std::vector<Criterion> verify_suite(const std::string& which, unsigned threads = 1,
                                           size_t max_len = 0) {
    std::vector<Criterion> out;
    auto want = [&](const char* name) { return which == "all" || which == name; };
    if (want("modules")) {
        out.push_back(check_module_oracle(max_len ? max_len : 12, threads));
        out.push_back(check_primality_soundness(max_len ? max_len : 12, threads));
    }
    if (want("realizers")) out.push_back(check_realizers(max_len ? max_len : 10, threads));
    if (want("bounds-periodic")) {
        out.push_back(check_periodic_word_bounds());
        out.push_back(check_path_age_bounds());
        out.push_back(check_bounds_stabilize());
    }
    if (want("bounds-aperiodic")) {
        out.push_back(check_bounds_grow());
        out.push_back(check_word_bound_transfer());
    }
    if (want("rigidity")) out.push_back(check_rigidity());
    if (want("families")) out.push_back(check_families());
    if (want("jonsson")) out.push_back(check_jonsson());
    if (out.empty()) throw std::invalid_argument("unknown verify suite: " + which);
    return out;
}

}  // namespace wordgraph
