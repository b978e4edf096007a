#include <catch2/catch_amalgamated.hpp>

#include "wordgraph/stream.hpp"

#include <cstdint>

using namespace wordgraph;

namespace {

// Exact mechanical-word oracle for sturmian streams: the characteristic word
// of slope alpha = [0; a1+1, a2, a3, ...] has letters floor((n+2)alpha) -
// floor((n+1)alpha). alpha is irrational (the directive repeats forever) and
// lies strictly between any two consecutive convergents, so each floor is
// pinned exactly when both convergents give the same value.
uint8_t mechanical_letter(const std::vector<uint64_t>& directive, size_t n) {
    std::vector<int64_t> cf;
    cf.push_back(static_cast<int64_t>(directive[0]) + 1);
    for (size_t i = 1; cf.size() < 48; ++i)
        cf.push_back(static_cast<int64_t>(directive[i % directive.size()]));
    // Convergents h/k of [0; cf...].
    int64_t hm1 = 1, km1 = 0, h = 0, k = 1;
    int64_t ph = 0, pk = 1;
    for (int64_t a : cf) {
        int64_t h2 = a * h + hm1, k2 = a * k + km1;
        hm1 = h; km1 = k;
        ph = h; pk = k;
        h = h2; k = k2;
        if (k > (int64_t{1} << 31)) break;
    }
    auto pinned_floor = [&](int64_t m) {
        int64_t lo = m * ph / pk, hi = m * h / k;
        REQUIRE(lo == hi);  // convergents deep enough to pin the floor
        return lo;
    };
    auto m = static_cast<int64_t>(n);
    return static_cast<uint8_t>(pinned_floor(m + 2) - pinned_floor(m + 1));
}

}  // namespace

TEST_CASE("stream spec grammar round trip") {
    for (const char* spec : {"finite:0101", "periodic:01", "fibonacci", "thue-morse",
                             "sturmian:1,2,3"})
        CHECK(Stream::parse(spec).spec() == spec);
    CHECK_THROWS_AS(Stream::parse("bogus"), std::invalid_argument);
    CHECK_THROWS_AS(Stream::parse("periodic:"), std::invalid_argument);
    CHECK_THROWS_AS(Stream::parse("sturmian:0"), std::invalid_argument);
    CHECK_THROWS_AS(Stream::parse("sturmian:1,x"), std::invalid_argument);
}

TEST_CASE("prefixes are exact and reproducible") {
    Stream fib = Stream::fibonacci();
    CHECK(fib.prefix(13).str() == "0100101001001");
    CHECK(fib.prefix(13) == fib.prefix(20).prefix(13));
    Stream tm = Stream::thue_morse();
    CHECK(tm.prefix(16).str() == "0110100110010110");
    CHECK(Stream::parse("periodic:011").prefix(8).str() == "01101101");
    CHECK(Stream::parse("finite:0101").prefix(10).str() == "0101");
}

TEST_CASE("sturmian standard words") {
    // Directive of all 1s is the Fibonacci word.
    CHECK(Stream::parse("sturmian:1").prefix(200) == Stream::fibonacci().prefix(200));
    // Prefix nesting: longer prefixes extend shorter ones.
    Stream s = Stream::parse("sturmian:2,1,3");
    CHECK(s.prefix(300).prefix(40) == s.prefix(40));
    // Mechanical-word cross-validation, exact integer arithmetic.
    for (const char* spec : {"sturmian:1", "sturmian:2", "sturmian:2,1", "sturmian:1,2,3"}) {
        Stream st = Stream::parse(spec);
        Word p = st.prefix(400);
        for (size_t n = 0; n < 400; ++n)
            REQUIRE(p[n] == mechanical_letter(st.directive(), n));
    }
}

TEST_CASE("windowed factor sets") {
    auto fs = factor_set(Stream::parse("periodic:01"), 2, 10);
    std::vector<std::string> got;
    for (auto& w : fs) got.push_back(w.display());
    CHECK(got == std::vector<std::string>{"-", "0", "1", "01", "10"});

    auto ones = factor_set(Stream::parse("periodic:1"), 3, 10);
    std::vector<std::string> got2;
    for (auto& w : ones) got2.push_back(w.display());
    CHECK(got2 == std::vector<std::string>{"-", "1", "11", "111"});

    auto fib = factor_set(Stream::fibonacci(), 2, 20);
    std::vector<std::string> got3;
    for (auto& w : fib) got3.push_back(w.display());
    CHECK(got3 == std::vector<std::string>{"-", "0", "1", "00", "01", "10"});
    // 11 never occurs in the Fibonacci word: scan a long prefix directly.
    CHECK_FALSE(is_factor(Word::parse("11"), Stream::fibonacci().prefix(10000)));

    CHECK_THROWS_AS(factor_set(Stream::fibonacci(), 5, 3), std::invalid_argument);
}

TEST_CASE("factor sets are closed under factors") {
    for (const char* spec : {"periodic:0110", "fibonacci", "thue-morse"}) {
        auto fs = factor_set(Stream::parse(spec), 5, 60);
        for (const Word& v : fs)
            for (size_t len = 0; len < v.size(); ++len)
                for (size_t pos = 0; pos + len <= v.size(); ++pos)
                    REQUIRE(fs.count(v.subword(pos, len)) == 1);
    }
}

TEST_CASE("word bounds of windowed factor sets") {
    auto b1 = word_bounds(Stream::parse("periodic:01"), 4, 20);
    CHECK(b1 == std::set<Word>{Word::parse("00"), Word::parse("11")});
    auto b2 = word_bounds(Stream::parse("periodic:1"), 4, 20);
    CHECK(b2 == std::set<Word>{Word::parse("0")});
    auto b3 = word_bounds(Stream::fibonacci(), 3, 100);
    CHECK(b3 == std::set<Word>{Word::parse("11"), Word::parse("000")});
}

TEST_CASE("bound membership conditions hold against direct prefix scans") {
    for (const char* spec : {"periodic:0010", "fibonacci", "thue-morse"}) {
        Stream s = Stream::parse(spec);
        Word prefix = s.prefix(240);
        for (const Word& v : word_bounds(s, 6, 240)) {
            REQUIRE_FALSE(is_factor(v, prefix));
            REQUIRE(is_factor(v.subword(0, v.size() - 1), prefix));
            REQUIRE(is_factor(v.subword(1, v.size() - 1), prefix));
        }
    }
}

TEST_CASE("periodic bounds are short") {
    // Desk check at small periods; the acceptance suite sweeps p <= 6.
    for (size_t p = 1; p <= 4; ++p)
        for (const Word& seed : all_words_of_length(p)) {
            Stream s = Stream::periodic(seed);
            for (const Word& b : word_bounds(s, p + 3, 8 * p + 32))
                REQUIRE(b.size() <= p);
        }
}

TEST_CASE("recurrence function") {
    CHECK(recurrence_function(Stream::fibonacci(), 1, 100) == 3);
    CHECK(recurrence_function(Stream::parse("periodic:01"), 1, 100) == 2);
    CHECK(recurrence_function(Stream::parse("periodic:1"), 3, 100) == 3);
    CHECK_THROWS_AS(recurrence_function(Stream::fibonacci(), 10, 5), std::invalid_argument);
}

TEST_CASE("windowed inexhaustibility") {
    auto v1 = inexhaustible_in_window(Stream::parse("periodic:01"), 3, 50);
    CHECK(v1.outcome == Outcome::holds);
    auto v2 = inexhaustible_in_window(Stream::fibonacci(), 4, 500);
    CHECK(v2.outcome == Outcome::holds);
    auto v3 = inexhaustible_in_window(Stream::parse("finite:0111"), 1, 4);
    CHECK(v3.outcome == Outcome::fails);
    CHECK(v3.witness == Word::parse("0"));
    // An infinite stream with an undecided factor in a short window.
    auto v4 = inexhaustible_in_window(Stream::fibonacci(), 3, 9);
    CHECK(v4.outcome == Outcome::unknown);
}

TEST_CASE("factor complexity by counting distinct windows") {
    // Periodic streams have at most p distinct factors of each length.
    for (const char* spec : {"periodic:01", "periodic:011", "periodic:0010"}) {
        Stream s = Stream::parse(spec);
        size_t p = s.seed().size();
        for (size_t n = 1; n <= 10; ++n)
            REQUIRE(factor_count(s, n, 200) <= p);
    }
    // The Fibonacci word has exactly n+1 factors of length n.
    for (size_t n = 1; n <= 12; ++n)
        REQUIRE(factor_count(Stream::fibonacci(), n, 10000) == n + 1);
}

TEST_CASE("shifted periodic streams give finitely many factor sets") {
    // Shifting a periodic stream yields at most p distinct windowed factor
    // sets; for the Fibonacci word the per-length factor counts keep growing.
    for (const char* spec : {"periodic:011", "periodic:0010"}) {
        Word seed = Stream::parse(spec).seed();
        size_t p = seed.size();
        std::set<std::set<Word>> distinct;
        for (size_t shift = 0; shift < 4 * p; ++shift) {
            std::vector<uint8_t> rotated;
            for (size_t i = 0; i < p; ++i) rotated.push_back(seed[(shift + i) % p]);
            distinct.insert(factor_set(Stream::periodic(Word{rotated}), 6, 60));
        }
        REQUIRE(distinct.size() <= p);
    }
    size_t prev = 0;
    for (size_t n = 1; n <= 12; ++n) {
        size_t cnt = factor_count(Stream::fibonacci(), n, 10000);
        REQUIRE(cnt > prev);
        prev = cnt;
    }
}
