// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion. Exit status is nonzero if any fail.
//
// Three criteria are expected to fail on mathematical grounds; their detail
// lines carry the machine-checked witnesses (see README, "Acceptance suite").

#include <cstdio>
#include <string>

#include "wordgraph/verify.hpp"

int main(int argc, char** argv) {
    unsigned threads = 1;
    if (argc > 1) threads = static_cast<unsigned>(std::stoul(argv[1]));
    auto results = wordgraph::verify_suite("all", threads);
    int failed = 0;
    for (const auto& c : results) {
        std::printf("%-5s %s: %s - %s\n", c.id.c_str(), c.pass ? "PASS" : "FAIL",
                    c.name.c_str(), c.detail.c_str());
        if (!c.pass) ++failed;
    }
    std::printf("%zu criteria, %d failed\n", results.size(), failed);
    return failed == 0 ? 0 : 1;
}
