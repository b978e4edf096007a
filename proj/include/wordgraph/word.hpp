#pragma once

// Finite 0-1 words: factor extraction, periods, run statistics.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace wordgraph {

// Raised when an exhaustive search would exceed its stated budget; callers
// surface it as a distinct exit path rather than truncating silently.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Word {
public:
    Word() = default;

    explicit Word(std::vector<uint8_t> bits) : bits_(std::move(bits)) {
        for (uint8_t b : bits_)
            if (b > 1) throw std::invalid_argument("word letters must be 0 or 1");
    }

    // Parses a bit string; "-" and "" both denote the empty word.
    static Word parse(const std::string& s) {
        if (s.empty() || s == "-") return Word{};
        std::vector<uint8_t> bits;
        bits.reserve(s.size());
        for (char c : s) {
            if (c == '0') bits.push_back(0);
            else if (c == '1') bits.push_back(1);
            else throw std::invalid_argument("word letters must be 0 or 1: '" + s + "'");
        }
        return Word{std::move(bits)};
    }

    size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    uint8_t operator[](size_t i) const { return bits_[i]; }
    const std::vector<uint8_t>& bits() const { return bits_; }

    std::string str() const {
        std::string s;
        s.reserve(bits_.size());
        for (uint8_t b : bits_) s.push_back(b ? '1' : '0');
        return s;
    }

    // Display form: the empty word prints as "-".
    std::string display() const { return bits_.empty() ? "-" : str(); }

    Word subword(size_t pos, size_t len) const {
        if (pos + len > bits_.size()) throw std::invalid_argument("subword out of range");
        return Word{std::vector<uint8_t>(bits_.begin() + pos, bits_.begin() + pos + len)};
    }

    Word prefix(size_t len) const { return subword(0, std::min(len, size())); }

    Word operator+(const Word& rhs) const {
        std::vector<uint8_t> out = bits_;
        out.insert(out.end(), rhs.bits_.begin(), rhs.bits_.end());
        return Word{std::move(out)};
    }

    bool operator==(const Word& rhs) const = default;

    // Shortlex: by length, then lexicographically. Coincides with the plain
    // lexicographic order on words of equal length.
    std::strong_ordering operator<=>(const Word& rhs) const {
        if (auto c = bits_.size() <=> rhs.bits_.size(); c != 0) return c;
        return bits_ <=> rhs.bits_;
    }

private:
    std::vector<uint8_t> bits_;
};

inline Word operator""_w(const char* s, size_t) { return Word::parse(s); }

// Letterwise flip. An involution.
inline Word complement(const Word& w) {
    std::vector<uint8_t> out;
    out.reserve(w.size());
    for (uint8_t b : w.bits()) out.push_back(static_cast<uint8_t>(1 - b));
    return Word{std::move(out)};
}

// True iff v occurs as a contiguous subword of w.
inline bool is_factor(const Word& v, const Word& w) {
    if (v.size() > w.size()) return false;
    if (v.empty()) return true;
    auto it = std::search(w.bits().begin(), w.bits().end(), v.bits().begin(), v.bits().end());
    return it != w.bits().end();
}

// Start positions of all occurrences of v in w (v nonempty).
inline std::vector<size_t> occurrences(const Word& v, const Word& w) {
    std::vector<size_t> pos;
    if (v.empty() || v.size() > w.size()) return pos;
    for (size_t p = 0; p + v.size() <= w.size(); ++p) {
        bool hit = true;
        for (size_t i = 0; i < v.size(); ++i)
            if (w[p + i] != v[i]) { hit = false; break; }
        if (hit) pos.push_back(p);
    }
    return pos;
}

// The distinct length-n factors of w.
inline std::set<Word> factors(const Word& w, size_t n) {
    if (n > w.size()) throw std::invalid_argument("factor length exceeds word length");
    std::set<Word> out;
    for (size_t p = 0; p + n <= w.size(); ++p) out.insert(w.subword(p, n));
    return out;
}

// Smallest p with 1 <= p < |w| and w(i) = w(i+p) throughout, if any.
inline std::optional<size_t> detect_period(const Word& w) {
    if (w.empty()) throw std::invalid_argument("detect_period: empty word");
    for (size_t p = 1; p < w.size(); ++p) {
        bool ok = true;
        for (size_t i = 0; i + p < w.size(); ++i)
            if (w[i] != w[i + p]) { ok = false; break; }
        if (ok) return p;
    }
    return std::nullopt;
}

struct RunStats {
    size_t max_zero_run = 0;
    size_t max_one_run = 0;
    size_t l_value = 0;  // max of the two

    bool operator==(const RunStats&) const = default;
};

inline RunStats run_stats(const Word& w) {
    RunStats rs;
    size_t i = 0;
    while (i < w.size()) {
        size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        size_t len = j - i;
        if (w[i] == 0) rs.max_zero_run = std::max(rs.max_zero_run, len);
        else rs.max_one_run = std::max(rs.max_one_run, len);
        i = j;
    }
    rs.l_value = std::max(rs.max_zero_run, rs.max_one_run);
    return rs;
}

// All 2^(max_len+1) - 1 words of length <= max_len, shortlex.
inline std::vector<Word> all_words_up_to(size_t max_len) {
    std::vector<Word> out;
    out.push_back(Word{});
    for (size_t n = 1; n <= max_len; ++n) {
        for (uint64_t m = 0; m < (uint64_t{1} << n); ++m) {
            std::vector<uint8_t> bits(n);
            for (size_t i = 0; i < n; ++i) bits[i] = (m >> (n - 1 - i)) & 1;
            out.push_back(Word{std::move(bits)});
        }
    }
    return out;
}

// All words of length exactly n, lexicographic.
inline std::vector<Word> all_words_of_length(size_t n) {
    std::vector<Word> out;
    for (uint64_t m = 0; m < (uint64_t{1} << n); ++m) {
        std::vector<uint8_t> bits(n);
        for (size_t i = 0; i < n; ++i) bits[i] = (m >> (n - 1 - i)) & 1;
        out.push_back(Word{std::move(bits)});
    }
    return out;
}

}  // namespace wordgraph
