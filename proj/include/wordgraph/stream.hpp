#pragma once

// Deterministic infinite 0-1 word generators and windowed factor diagnostics.
//
// Infinite words are never materialized: every diagnostic runs on an explicit
// finite prefix window. Negative answers are therefore windowed, never
// absolute, unless the stream itself is finite.

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "word.hpp"

namespace wordgraph {

class Stream {
public:
    enum class Kind { finite, periodic, fibonacci, thue_morse, sturmian };

    static Stream finite(Word w) { return Stream{Kind::finite, std::move(w), {}}; }

    static Stream periodic(Word seed) {
        if (seed.empty()) throw std::invalid_argument("periodic seed must be nonempty");
        return Stream{Kind::periodic, std::move(seed), {}};
    }

    static Stream fibonacci() { return Stream{Kind::fibonacci, {}, {}}; }
    static Stream thue_morse() { return Stream{Kind::thue_morse, {}, {}}; }

    // Directive sequence of positive integers, extended periodically.
    static Stream sturmian(std::vector<uint64_t> directive) {
        if (directive.empty()) throw std::invalid_argument("sturmian directive must be nonempty");
        for (uint64_t a : directive)
            if (a == 0) throw std::invalid_argument("sturmian directive terms must be positive");
        return Stream{Kind::sturmian, {}, std::move(directive)};
    }

    // Grammar: finite:<bits> | periodic:<bits> | fibonacci | thue-morse | sturmian:<a1,a2,...>
    static Stream parse(const std::string& spec) {
        if (spec == "fibonacci") return fibonacci();
        if (spec == "thue-morse") return thue_morse();
        auto colon = spec.find(':');
        if (colon != std::string::npos) {
            std::string head = spec.substr(0, colon), tail = spec.substr(colon + 1);
            if (head == "finite") return finite(Word::parse(tail));
            if (head == "periodic") return periodic(Word::parse(tail));
            if (head == "sturmian") {
                std::vector<uint64_t> dir;
                std::stringstream ss(tail);
                std::string item;
                while (std::getline(ss, item, ',')) {
                    size_t used = 0;
                    long long v = std::stoll(item, &used);
                    if (used != item.size() || v <= 0)
                        throw std::invalid_argument("bad sturmian directive term: " + item);
                    dir.push_back(static_cast<uint64_t>(v));
                }
                return sturmian(std::move(dir));
            }
        }
        throw std::invalid_argument("unrecognized word spec: " + spec);
    }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::finite; }

    // Length cap for finite streams, nullopt otherwise.
    std::optional<size_t> length() const {
        if (kind_ == Kind::finite) return seed_.size();
        return std::nullopt;
    }

    // The first min(n, length) letters. Exact, reproducible, no floating point.
    Word prefix(size_t n) const {
        switch (kind_) {
            case Kind::finite:
                return seed_.prefix(n);
            case Kind::periodic: {
                std::vector<uint8_t> bits(n);
                for (size_t i = 0; i < n; ++i) bits[i] = seed_[i % seed_.size()];
                return Word{std::move(bits)};
            }
            case Kind::fibonacci: {
                // Fixed point of 0 -> 01, 1 -> 0.
                std::vector<uint8_t> cur{0};
                while (cur.size() < n) {
                    std::vector<uint8_t> next;
                    next.reserve(cur.size() * 2);
                    for (uint8_t b : cur) {
                        if (b == 0) { next.push_back(0); next.push_back(1); }
                        else next.push_back(0);
                    }
                    cur = std::move(next);
                }
                cur.resize(n);
                return Word{std::move(cur)};
            }
            case Kind::thue_morse: {
                std::vector<uint8_t> bits(n);
                for (size_t i = 0; i < n; ++i)
                    bits[i] = static_cast<uint8_t>(__builtin_popcountll(i) & 1);
                return Word{std::move(bits)};
            }
            case Kind::sturmian: {
                // Standard words: s_{-1} = 1, s_0 = 0, s_{k+1} = s_k^{a_{k+1}} s_{k-1}.
                // Each s_k is a prefix of the limit, so growing until long enough
                // yields exact prefixes.
                std::vector<uint8_t> prev{1}, cur{0};
                size_t k = 0;
                while (cur.size() < n) {
                    uint64_t a = directive_[k % directive_.size()];
                    std::vector<uint8_t> next;
                    next.reserve(cur.size() * a + prev.size());
                    for (uint64_t r = 0; r < a; ++r)
                        next.insert(next.end(), cur.begin(), cur.end());
                    next.insert(next.end(), prev.begin(), prev.end());
                    prev = std::move(cur);
                    cur = std::move(next);
                    ++k;
                }
                cur.resize(n);
                return Word{std::move(cur)};
            }
        }
        throw std::logic_error("unreachable");
    }

    std::string spec() const {
        switch (kind_) {
            case Kind::finite: return "finite:" + seed_.str();
            case Kind::periodic: return "periodic:" + seed_.str();
            case Kind::fibonacci: return "fibonacci";
            case Kind::thue_morse: return "thue-morse";
            case Kind::sturmian: {
                std::string s = "sturmian:";
                for (size_t i = 0; i < directive_.size(); ++i) {
                    if (i) s += ',';
                    s += std::to_string(directive_[i]);
                }
                return s;
            }
        }
        throw std::logic_error("unreachable");
    }

    const Word& seed() const { return seed_; }
    const std::vector<uint64_t>& directive() const { return directive_; }

private:
    Stream(Kind k, Word seed, std::vector<uint64_t> directive)
        : kind_(k), seed_(std::move(seed)), directive_(std::move(directive)) {}

    Kind kind_;
    Word seed_;
    std::vector<uint64_t> directive_;
};

// All distinct factors of length <= max_len of the length-`window` prefix.
// The empty word always belongs (hereditary closure).
inline std::set<Word> factor_set(const Stream& s, size_t max_len, size_t window) {
    if (window < max_len) throw std::invalid_argument("factor_set: window < max_len");
    Word p = s.prefix(window);
    std::set<Word> out;
    out.insert(Word{});
    for (size_t n = 1; n <= std::min(max_len, p.size()); ++n)
        for (size_t pos = 0; pos + n <= p.size(); ++pos)
            out.insert(p.subword(pos, n));
    return out;
}

// Bounds of the windowed factor set: v not in the set while both maximal
// proper factors v_0..v_{n-2} and v_1..v_{n-1} are. Candidates are scanned
// exhaustively over {0,1}^{<=max_len}.
inline std::set<Word> word_bounds(const Stream& s, size_t max_len, size_t window) {
    if (max_len > 24)
        throw budget_error("word_bounds: max_len " + std::to_string(max_len) +
                           " exceeds the exhaustive-candidate budget 24");
    std::set<Word> fac = factor_set(s, max_len, window);
    std::set<Word> out;
    for (const Word& v : all_words_up_to(max_len)) {
        if (v.empty() || fac.count(v)) continue;
        Word left = v.subword(0, v.size() - 1);
        Word right = v.subword(1, v.size() - 1);
        if (fac.count(left) && fac.count(right)) out.insert(v);
    }
    return out;
}

namespace detail {

// Distinct length-n windows of p encoded as integers (n <= 62).
inline std::vector<uint64_t> window_codes(const Word& p, size_t n) {
    std::vector<uint64_t> codes;
    if (n == 0 || n > p.size()) return codes;
    uint64_t code = 0, mask = (n >= 64) ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
    for (size_t i = 0; i < p.size(); ++i) {
        code = ((code << 1) | p[i]) & mask;
        if (i + 1 >= n) codes.push_back(code);
    }
    return codes;
}

// True iff every length-m window of p contains every distinct length-n factor
// of p. Monotone in m.
inline bool all_windows_cover(const Word& p, size_t n, size_t m,
                              const std::vector<uint64_t>& codes, size_t distinct) {
    if (m < n || m > p.size()) return false;
    // Sliding count of distinct codes over windows of (m - n + 1) consecutive starts.
    size_t span = m - n + 1;
    std::map<uint64_t, size_t> counts;
    size_t seen = 0;
    for (size_t i = 0; i < codes.size(); ++i) {
        if (++counts[codes[i]] == 1) ++seen;
        if (i + 1 >= span) {
            if (seen < distinct) return false;
            uint64_t old = codes[i + 1 - span];
            if (--counts[old] == 0) --seen;
        }
    }
    return true;
}

}  // namespace detail

// Least m <= horizon such that every length-m window of the length-`horizon`
// prefix contains every length-n factor seen in that prefix.
inline std::optional<size_t> recurrence_function(const Stream& s, size_t n, size_t horizon) {
    if (horizon < n) throw std::invalid_argument("recurrence_function: horizon < n");
    if (n == 0) return 0;
    if (n > 62) throw std::invalid_argument("recurrence_function: n too large");
    Word p = s.prefix(horizon);
    if (p.size() < n) return std::nullopt;
    auto codes = detail::window_codes(p, n);
    std::set<uint64_t> uniq(codes.begin(), codes.end());
    size_t lo = n, hi = p.size();
    if (!detail::all_windows_cover(p, n, hi, codes, uniq.size())) return std::nullopt;
    while (lo < hi) {
        size_t mid = lo + (hi - lo) / 2;
        if (detail::all_windows_cover(p, n, mid, codes, uniq.size())) hi = mid;
        else lo = mid + 1;
    }
    return lo;
}

enum class Outcome { holds, fails, unknown };

struct InexhaustibleVerdict {
    Outcome outcome = Outcome::holds;
    std::optional<Word> witness;  // undecided or failing factor
};

// Windowed inexhaustibility: every factor v with |v| <= max_len must recur as
// v..v within the prefix. For finite streams the window is conclusive.
inline InexhaustibleVerdict inexhaustible_in_window(const Stream& s, size_t max_len,
                                                    size_t window) {
    if (window < 3 * max_len)
        throw std::invalid_argument("inexhaustible_in_window: window < 3*max_len");
    Word p = s.prefix(window);
    bool conclusive = s.is_finite() && window >= *s.length();
    for (const Word& v : factor_set(s, max_len, window)) {
        if (v.empty()) continue;
        auto occ = occurrences(v, p);
        bool recurs = occ.size() >= 2 && occ.back() >= occ.front() + v.size();
        if (!recurs) {
            if (conclusive) return {Outcome::fails, v};
            return {Outcome::unknown, v};
        }
    }
    return {Outcome::holds, std::nullopt};
}

// Count of distinct length-n factors of the prefix (the n-th level of the
// windowed factor order).
inline size_t factor_count(const Stream& s, size_t n, size_t window) {
    if (n == 0) return 1;
    if (n > 62) throw std::invalid_argument("factor_count: n too large");
    auto codes = detail::window_codes(s.prefix(window), n);
    std::set<uint64_t> uniq(codes.begin(), codes.end());
    return uniq.size();
}

}  // namespace wordgraph
