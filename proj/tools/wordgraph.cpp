// wordgraph: deterministic command-line surface over the library.
//
// Exit codes: 0 success / property pass, 1 property violation (witness
// printed), 2 usage error, 3 budget exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wordgraph/ages.hpp"
#include "wordgraph/canonical.hpp"
#include "wordgraph/embed.hpp"
#include "wordgraph/families.hpp"
#include "wordgraph/graph.hpp"
#include "wordgraph/realizer.hpp"
#include "wordgraph/stream.hpp"
#include "wordgraph/structure.hpp"
#include "wordgraph/verify.hpp"
#include "wordgraph/word.hpp"

using json = nlohmann::ordered_json;
using namespace wordgraph;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

json graph_json(const Graph& g) {
    json j;
    j["order"] = g.order();
    j["labels"] = g.labels();
    json edges = json::array();
    for (auto [a, b] : g.edges()) edges.push_back({a, b});
    j["edges"] = edges;
    return j;
}

Graph graph_from_json(const json& j) {
    Graph g(j.at("labels").get<std::vector<int>>());
    if (j.at("order").get<int>() != g.order())
        throw std::invalid_argument("graph json: order does not match labels");
    for (auto& e : j.at("edges")) g.add_edge_labels(e.at(0).get<int>(), e.at(1).get<int>());
    return g;
}

// Graph sources accepted across subcommands: a word (G_w), a family member,
// or a file in either text or json format.
struct GraphInput {
    std::string word, file, family;

    void attach(CLI::App* cmd) {
        auto* grp = cmd->add_option_group("graph source");
        grp->add_option("--word", word, "build G_w from a 0-1 word ('-' = the empty word)");
        grp->add_option("--in", file, "graph file in text or json format ('-' = stdin)");
        grp->add_option("--family", family, "family member <name>:<n>");
        grp->require_option(1);
    }

    Graph load() const {
        if (!word.empty()) return graph_from_word(Word::parse(word));
        if (!family.empty()) {
            auto colon = family.find(':');
            if (colon == std::string::npos)
                throw std::invalid_argument("family spec must be <name>:<n>");
            return make_family(
                {parse_family(family.substr(0, colon)), std::stoi(family.substr(colon + 1))});
        }
        if (file.empty())
            throw std::invalid_argument("empty graph source; use '-' for the empty word or stdin");
        std::string text = slurp(file);
        auto first = text.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && text[first] == '{')
            return graph_from_json(json::parse(text));
        return parse_graph(text);
    }
};

void print_graph(const Graph& g, bool as_json) {
    if (as_json) std::cout << graph_json(g).dump() << "\n";
    else std::cout << graph_text(g);
}

void print_words(const std::set<Word>& words) {
    for (const Word& w : words) std::cout << w.display() << "\n";
}

int run_verify_suite(const std::string& which, unsigned threads, bool as_json, size_t max_len) {
    auto results = verify_suite(which, threads, max_len);
    bool all = true;
    json ja = json::array();
    for (const Criterion& c : results) {
        all = all && c.pass;
        if (as_json) {
            json j;
            j["id"] = c.id;
            j["name"] = c.name;
            j["pass"] = c.pass;
            j["detail"] = c.detail;
            ja.push_back(j);
        } else {
            std::cout << c.id << " " << (c.pass ? "PASS" : "FAIL") << ": " << c.name << " - "
                      << c.detail << "\n";
        }
    }
    if (as_json) std::cout << ja.dump() << "\n";
    return all ? kExitPass : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"constructions on 0-1 words and their graphs"};
    app.require_subcommand(1);
    int exit_code = kExitPass;

    // ---- word ----
    auto* word = app.add_subcommand("word", "finite and infinite word diagnostics");
    word->require_subcommand(1);
    {
        auto* c = word->add_subcommand("factors", "factors of a word or stream window");
        auto spec = std::make_shared<std::string>();
        auto len = std::make_shared<int>(-1);
        auto max_len = std::make_shared<int>(-1);
        auto window = std::make_shared<int>(-1);
        c->add_option("spec", *spec, "word spec")->required();
        c->add_option("--len", *len, "exact factor length (finite words)");
        c->add_option("--max-len", *max_len, "all factors up to this length");
        c->add_option("--window", *window, "prefix window for streams");
        c->callback([=] {
            Stream s = Stream::parse(*spec);
            if (*len >= 0) {
                if (!s.is_finite())
                    throw std::invalid_argument("--len applies to finite words; use --max-len");
                print_words(factors(s.seed(), static_cast<size_t>(*len)));
            } else if (*max_len >= 0) {
                size_t w = *window >= 0 ? static_cast<size_t>(*window)
                                        : default_window(s, static_cast<size_t>(*max_len));
                print_words(factor_set(s, static_cast<size_t>(*max_len), w));
            } else {
                throw std::invalid_argument("need --len or --max-len");
            }
        });
    }
    {
        auto* c = word->add_subcommand("bounds", "word bounds of a windowed factor set");
        auto spec = std::make_shared<std::string>();
        auto max_len = std::make_shared<int>();
        auto window = std::make_shared<int>(-1);
        c->add_option("spec", *spec)->required();
        c->add_option("--max-len", *max_len)->required();
        c->add_option("--window", *window);
        c->callback([=] {
            Stream s = Stream::parse(*spec);
            size_t w = *window >= 0 ? static_cast<size_t>(*window)
                                    : default_window(s, static_cast<size_t>(*max_len));
            print_words(word_bounds(s, static_cast<size_t>(*max_len), w));
        });
    }
    {
        auto* c = word->add_subcommand("period", "smallest period of a finite word");
        auto bits = std::make_shared<std::string>();
        c->add_option("bits", *bits)->required();
        c->callback([=] {
            auto p = detect_period(Word::parse(*bits));
            std::cout << (p ? std::to_string(*p) : std::string("none")) << "\n";
        });
    }
    {
        auto* c = word->add_subcommand("recur", "windowed recurrence function");
        auto spec = std::make_shared<std::string>();
        auto len = std::make_shared<int>();
        auto horizon = std::make_shared<int>(1000);
        c->add_option("spec", *spec)->required();
        c->add_option("--len", *len)->required();
        c->add_option("--horizon", *horizon);
        c->callback([=] {
            auto m = recurrence_function(Stream::parse(*spec), static_cast<size_t>(*len),
                                         static_cast<size_t>(*horizon));
            std::cout << (m ? std::to_string(*m) : std::string("unknown")) << "\n";
        });
    }
    {
        auto* c = word->add_subcommand("inexhaustible", "windowed inexhaustibility verdict");
        auto spec = std::make_shared<std::string>();
        auto max_len = std::make_shared<int>();
        auto window = std::make_shared<int>();
        c->add_option("spec", *spec)->required();
        c->add_option("--max-len", *max_len)->required();
        c->add_option("--window", *window)->required();
        c->callback([=] {
            auto v = inexhaustible_in_window(Stream::parse(*spec), static_cast<size_t>(*max_len),
                                             static_cast<size_t>(*window));
            switch (v.outcome) {
                case Outcome::holds: std::cout << "holds\n"; break;
                case Outcome::fails:
                    std::cout << "fails witness=" << v.witness->display() << "\n";
                    break;
                case Outcome::unknown:
                    std::cout << "unknown undecided=" << v.witness->display() << "\n";
                    break;
            }
        });
    }
    {
        auto* c = word->add_subcommand("runs", "maximal run lengths");
        auto bits = std::make_shared<std::string>();
        c->add_option("bits", *bits)->required();
        c->callback([=] {
            RunStats rs = run_stats(Word::parse(*bits));
            std::cout << "zero_run " << rs.max_zero_run << "\none_run " << rs.max_one_run
                      << "\nl " << rs.l_value << "\n";
        });
    }
    {
        auto* c = word->add_subcommand("complement", "letterwise flip");
        auto bits = std::make_shared<std::string>();
        c->add_option("bits", *bits)->required();
        c->callback([=] { std::cout << complement(Word::parse(*bits)).display() << "\n"; });
    }

    // ---- graph ----
    auto* graph = app.add_subcommand("graph", "word graphs and graph predicates");
    graph->require_subcommand(1);
    {
        auto* c = graph->add_subcommand("build", "emit a graph");
        auto in = std::make_shared<GraphInput>();
        auto induce = std::make_shared<std::vector<int>>();
        auto as_json = std::make_shared<bool>(false);
        in->attach(c);
        c->add_option("--induce", *induce, "restrict to these labels")->delimiter(',');
        c->add_flag("--json", *as_json, "structured output");
        c->callback([=] {
            Graph g = in->load();
            if (!induce->empty()) g = induced(g, *induce);
            print_graph(g, *as_json);
        });
    }
    {
        auto* c = graph->add_subcommand("complement", "complement of a graph");
        auto in = std::make_shared<GraphInput>();
        auto as_json = std::make_shared<bool>(false);
        in->attach(c);
        c->add_flag("--json", *as_json);
        c->callback([=] { print_graph(complement(in->load()), *as_json); });
    }
    {
        auto* c = graph->add_subcommand("modules", "nontrivial modules (brute force)");
        auto in = std::make_shared<GraphInput>();
        auto classified = std::make_shared<bool>(false);
        auto budget = std::make_shared<int>(20);
        in->attach(c);
        c->add_flag("--classified", *classified,
                    "classify by word pattern (G_w inputs), cross-checked");
        c->add_option("--budget", *budget, "max order for the subset scan");
        c->callback([=] {
            if (*classified) {
                if (in->word.empty())
                    throw std::invalid_argument("--classified requires --word");
                Word w = Word::parse(in->word);
                auto rows = classify_gw_modules(w);
                auto brute = nontrivial_modules(graph_from_word(w), *budget);
                std::vector<std::vector<int>> predicted;
                for (auto& r : rows) predicted.push_back(r.witness);
                for (auto& r : rows) {
                    std::cout << to_string(r.shape) << " " << r.word_pattern << " {";
                    for (size_t i = 0; i < r.witness.size(); ++i)
                        std::cout << (i ? "," : "") << r.witness[i];
                    std::cout << "}\n";
                }
                if (predicted != brute) {
                    std::cout << "MISMATCH against brute force\n";
                    exit(kExitViolation);
                }
            } else {
                for (auto& m : nontrivial_modules(in->load(), *budget)) {
                    for (size_t i = 0; i < m.size(); ++i) std::cout << (i ? " " : "") << m[i];
                    std::cout << "\n";
                }
            }
        });
    }
    {
        auto* c = graph->add_subcommand("prime", "primality (both routes for G_w)");
        auto in = std::make_shared<GraphInput>();
        auto deletions = std::make_shared<bool>(false);
        auto assert_l = std::make_shared<int>(-1);
        auto budget = std::make_shared<int>(20);
        in->attach(c);
        c->add_flag("--deletions", *deletions, "report one-vertex-deletion primality map");
        c->add_option("--assert-l", *assert_l,
                      "check the prime-threshold claim for this run statistic");
        c->add_option("--budget", *budget);
        c->callback([=] {
            if (*assert_l >= 0) {
                if (in->word.empty()) throw std::invalid_argument("--assert-l requires --word");
                Word w = Word::parse(in->word);
                RunStats claimed{static_cast<size_t>(*assert_l), static_cast<size_t>(*assert_l),
                                 static_cast<size_t>(*assert_l)};
                ThresholdVerdict v = length_threshold_check(claimed, w);
                switch (v.kind) {
                    case ThresholdKind::pass:
                        std::cout << (v.applicable ? "pass\n" : "pass (threshold not reached)\n");
                        break;
                    case ThresholdKind::fail:
                        std::cout << "fail: " << v.detail << "\n";
                        exit(kExitViolation);
                    case ThresholdKind::precondition_violation:
                        throw std::invalid_argument(v.detail);
                }
                return;
            }
            if (*deletions) {
                if (in->word.empty()) throw std::invalid_argument("--deletions requires --word");
                Word w = Word::parse(in->word);
                auto dmap = deletion_primality(w);
                for (auto [label, prime] : dmap)
                    std::cout << label << " " << (prime ? "prime" : "not-prime") << "\n";
                if (!deletion_candidates_confined(w, dmap)) {
                    std::cout << "VIOLATION: primality-preserving deletion outside {-1,0,n-1}\n";
                    exit(kExitViolation);
                }
                return;
            }
            Graph g = in->load();
            bool brute = is_prime(g, *budget);
            if (!in->word.empty()) {
                bool pattern = gw_prime_by_pattern(Word::parse(in->word));
                if (pattern != brute) {
                    std::cout << "VIOLATION: pattern route disagrees with brute force\n";
                    exit(kExitViolation);
                }
            }
            std::cout << (brute ? "prime" : "not prime") << "\n";
        });
    }
    {
        auto* c = graph->add_subcommand("embed", "induced embedding search");
        auto pattern = std::make_shared<std::string>();
        auto host = std::make_shared<std::string>();
        auto all = std::make_shared<bool>(false);
        c->add_option("--pattern", *pattern, "pattern: word bits, family <name>:<n>, or @file")
            ->required();
        c->add_option("--host", *host, "host, same forms")->required();
        c->add_flag("--all", *all, "enumerate every embedding");
        c->callback([=] {
            auto load = [](const std::string& spec) {
                GraphInput gi;
                if (!spec.empty() && spec[0] == '@') gi.file = spec.substr(1);
                else if (spec.find(':') != std::string::npos) gi.family = spec;
                else gi.word = spec;
                return gi.load();
            };
            Graph p = load(*pattern), h = load(*host);
            if (*all) {
                auto embs = all_embeddings(p, h);
                std::cout << embs.size() << " embeddings\n";
                for (auto& e : embs) {
                    for (size_t i = 0; i < e.map.size(); ++i)
                        std::cout << (i ? " " : "") << e.map[i].first << "->" << e.map[i].second;
                    std::cout << "\n";
                }
            } else {
                auto e = embeds(p, h);
                if (!e) {
                    std::cout << "none\n";
                    return;
                }
                for (size_t i = 0; i < e->map.size(); ++i)
                    std::cout << (i ? " " : "") << e->map[i].first << "->" << e->map[i].second;
                std::cout << "\n";
            }
        });
    }
    {
        auto* c = graph->add_subcommand("canon", "canonical form key");
        auto in = std::make_shared<GraphInput>();
        in->attach(c);
        c->callback([=] { std::cout << canonical_form(in->load()).hex() << "\n"; });
    }

    // ---- realizer ----
    auto* realizer = app.add_subcommand("realizer", "two-dimensional realizers of G_w");
    realizer->require_subcommand(1);
    {
        auto* c = realizer->add_subcommand("build", "incremental realizer for G_w");
        auto bits = std::make_shared<std::string>();
        c->add_option("--word", *bits)->required();
        c->callback([=] { std::cout << realizer_text(build_realizer(Word::parse(*bits))); });
    }
    {
        auto* c = realizer->add_subcommand("verify", "check a realizer against G_w");
        auto bits = std::make_shared<std::string>();
        auto file = std::make_shared<std::string>();
        c->add_option("--word", *bits)->required();
        c->add_option("--in", *file, "realizer file; default: the built realizer");
        c->callback([=] {
            Word w = Word::parse(*bits);
            Realizer r = file->empty() ? build_realizer(w) : parse_realizer(slurp(*file));
            bool ok = verify_realizer(graph_from_word(w), r);
            std::cout << (ok ? "valid" : "invalid") << "\n";
            if (!ok) exit(kExitViolation);
        });
    }
    {
        auto* c = realizer->add_subcommand("perm", "realized permutation, one-line notation");
        auto bits = std::make_shared<std::string>();
        c->add_option("--word", *bits)->required();
        c->callback([=] {
            Word w = Word::parse(*bits);
            Realizer r = build_realizer(w);
            if (!verify_realizer(graph_from_word(w), r))
                throw std::invalid_argument("realizer failed verification");
            auto sigma = realizer_permutation(r);
            for (size_t i = 0; i < sigma.size(); ++i) std::cout << (i ? " " : "") << sigma[i];
            std::cout << "\n";
        });
    }
    {
        auto* c = realizer->add_subcommand("intervals", "interval confinement check");
        auto bits = std::make_shared<std::string>();
        c->add_option("--word", *bits)->required();
        c->callback([=] {
            Word w = Word::parse(*bits);
            IntervalVerdict v = interval_confinement(w, build_realizer(w));
            if (v.pass) {
                std::cout << "pass\n";
            } else {
                std::cout << "fail k=" << v.k << " vertex=" << v.vertex << "\n";
                exit(kExitViolation);
            }
        });
    }
    {
        auto* c = realizer->add_subcommand("orient", "transitive orientation search");
        auto in = std::make_shared<GraphInput>();
        auto budget = std::make_shared<int>(16);
        in->attach(c);
        c->add_option("--budget", *budget);
        c->callback([=] {
            auto p = transitive_orientation(in->load(), *budget);
            if (!p) {
                std::cout << "none\n";
                return;
            }
            for (size_t i = 0; i < p->rel.size(); ++i)
                for (size_t j = 0; j < p->rel.size(); ++j)
                    if (p->rel[i][j])
                        std::cout << p->labels[i] << " < " << p->labels[j] << "\n";
        });
    }
    {
        auto* c = realizer->add_subcommand("permgraph", "permutation-graph certification");
        auto in = std::make_shared<GraphInput>();
        auto budget = std::make_shared<int>(16);
        in->attach(c);
        c->add_option("--budget", *budget);
        c->callback([=] {
            std::cout << (is_permutation_graph(in->load(), *budget) ? "yes" : "no") << "\n";
        });
    }

    // ---- age ----
    auto* age = app.add_subcommand("age", "windowed ages of word graphs");
    age->require_subcommand(1);
    {
        auto* c = age->add_subcommand("members", "iso-class catalog of the windowed age");
        auto spec = std::make_shared<std::string>();
        auto max_order = std::make_shared<int>();
        auto window = std::make_shared<int>(-1);
        auto budget = std::make_shared<uint64_t>(kDefaultEmbedBudget);
        c->add_option("spec", *spec)->required();
        c->add_option("--max-order", *max_order)->required();
        c->add_option("--window", *window);
        c->add_option("--embed-budget", *budget, "node cap for embedding searches");
        c->callback([=] {
            Stream s = Stream::parse(*spec);
            size_t w = *window >= 0 ? static_cast<size_t>(*window)
                                    : default_window(s, static_cast<size_t>(*max_order));
            IsoCatalog cat = age_members(s, *max_order, w, *budget);
            for (auto& [key, entry] : cat.classes()) {
                std::cout << entry.representative.order() << " " << CanonicalForm{key}.hex();
                for (auto [a, b] : entry.representative.edges())
                    std::cout << " " << a << "-" << b;
                std::cout << "\n";
            }
        });
    }
    {
        auto* c = age->add_subcommand("contains", "windowed age membership");
        auto spec = std::make_shared<std::string>();
        auto in = std::make_shared<GraphInput>();
        auto window = std::make_shared<int>(-1);
        auto budget = std::make_shared<uint64_t>(kDefaultEmbedBudget);
        c->add_option("spec", *spec)->required();
        in->attach(c);
        c->add_option("--window", *window);
        c->add_option("--embed-budget", *budget, "node cap for embedding searches");
        c->callback([=] {
            Stream s = Stream::parse(*spec);
            Graph h = in->load();
            size_t w = *window >= 0 ? static_cast<size_t>(*window)
                                    : default_window(s, static_cast<size_t>(h.order()));
            AgeContains r = age_contains(s, h, w, *budget);
            if (r.yes) {
                std::cout << "yes witness";
                for (int p : r.witness) std::cout << " " << p;
                std::cout << "\n";
            } else {
                std::cout << "no_within_window\n";
            }
        });
    }
    {
        auto* c = age->add_subcommand("bounds", "graph bounds of the windowed age");
        auto spec = std::make_shared<std::string>();
        auto max_order = std::make_shared<int>();
        auto window = std::make_shared<int>(-1);
        auto as_json = std::make_shared<bool>(false);
        auto budget = std::make_shared<uint64_t>(kDefaultEmbedBudget);
        c->add_option("spec", *spec)->required();
        c->add_option("--max-order", *max_order)->required();
        c->add_option("--window", *window);
        c->add_option("--embed-budget", *budget, "node cap for embedding searches");
        c->add_flag("--json", *as_json);
        c->callback([=] {
            Stream s = Stream::parse(*spec);
            size_t w = *window >= 0 ? static_cast<size_t>(*window)
                                    : default_window(s, static_cast<size_t>(*max_order));
            BoundReport rep = age_bounds(s, *max_order, w, *budget);
            if (*as_json) {
                json j;
                j["search_order_max"] = rep.search_order_max;
                j["window"] = rep.window;
                if (rep.complete_up_to) j["complete_up_to"] = *rep.complete_up_to;
                else j["complete_up_to"] = "unknown";
                json bounds = json::array();
                for (size_t i = 0; i < rep.bounds.size(); ++i) {
                    json jb = graph_json(rep.bounds[i]);
                    jb["canonical"] = rep.keys[i].hex();
                    bounds.push_back(jb);
                }
                j["bounds"] = bounds;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "search_order_max " << rep.search_order_max << "\n";
                std::cout << "window " << rep.window << "\n";
                std::cout << "complete_up_to ";
                if (rep.complete_up_to) std::cout << *rep.complete_up_to << "\n";
                else std::cout << "unknown\n";
                for (size_t i = 0; i < rep.bounds.size(); ++i) {
                    std::cout << rep.bounds[i].order() << " " << rep.keys[i].hex();
                    for (auto [a, b] : rep.bounds[i].edges()) std::cout << " " << a << "-" << b;
                    std::cout << "\n";
                }
            }
        });
    }
    {
        auto* c = age->add_subcommand("transfer", "word bound -> graph bound");
        auto spec = std::make_shared<std::string>();
        auto bound = std::make_shared<std::string>();
        auto window = std::make_shared<int>(-1);
        auto budget = std::make_shared<uint64_t>(kDefaultEmbedBudget);
        c->add_option("spec", *spec)->required();
        c->add_option("--bound", *bound, "a word bound of the stream's factor set")->required();
        c->add_option("--window", *window);
        c->add_option("--embed-budget", *budget, "node cap for embedding searches");
        c->callback([=] {
            Stream s = Stream::parse(*spec);
            Word w = Word::parse(*bound);
            size_t win = *window >= 0 ? static_cast<size_t>(*window) : default_window(s, w.size());
            TransferResult res = bound_from_word_bound(s, w, win, *budget);
            std::cout << "extended " << res.extended.str() << "\n";
            std::cout << (res.verified ? "verified" : "FAILED") << ": " << res.detail << "\n";
            write_graph(std::cout, res.graph);
            if (!res.verified) exit(kExitViolation);
        });
    }
    {
        auto* c = age->add_subcommand("saturate", "compare catalogs at two windows");
        auto spec = std::make_shared<std::string>();
        auto max_order = std::make_shared<int>();
        auto w1 = std::make_shared<int>();
        auto w2 = std::make_shared<int>();
        auto budget = std::make_shared<uint64_t>(kDefaultEmbedBudget);
        c->add_option("spec", *spec)->required();
        c->add_option("--max-order", *max_order)->required();
        c->add_option("--w1", *w1)->required();
        c->add_option("--w2", *w2)->required();
        c->add_option("--embed-budget", *budget, "node cap for embedding searches");
        c->callback([=] {
            bool ok = saturation_check(Stream::parse(*spec), *max_order,
                                       static_cast<size_t>(*w1), static_cast<size_t>(*w2),
                                       *budget);
            std::cout << (ok ? "true" : "false") << "\n";
        });
    }
    {
        auto* c = age->add_subcommand("rigidity", "all embeddings increase onto an interval");
        auto spec = std::make_shared<std::string>();
        auto bits = std::make_shared<std::string>();
        auto window = std::make_shared<int>(-1);
        auto budget = std::make_shared<uint64_t>(kDefaultEmbedBudget);
        c->add_option("spec", *spec)->required();
        c->add_option("--word", *bits)->required();
        c->add_option("--window", *window);
        c->add_option("--embed-budget", *budget, "node cap for embedding searches");
        c->callback([=] {
            Stream s = Stream::parse(*spec);
            Word w = Word::parse(*bits);
            size_t win =
                *window >= 0 ? static_cast<size_t>(*window) : default_window(s, w.size());
            RigidityVerdict v = rigidity_check(s, w, win, *budget);
            switch (v.kind) {
                case RigidityKind::pass:
                    std::cout << "pass (" << v.embedding_count << " embeddings)\n";
                    break;
                case RigidityKind::fail:
                    std::cout << "fail: " << v.detail << "\n";
                    exit(kExitViolation);
                case RigidityKind::precondition_unmet:
                    std::cout << "precondition unmet: " << v.detail << "\n";
                    break;
            }
        });
    }
    {
        auto* c = age->add_subcommand("necessity", "prefix-embedding necessity check");
        auto spec = std::make_shared<std::string>();
        auto bits = std::make_shared<std::string>();
        auto window = std::make_shared<int>(-1);
        auto budget = std::make_shared<uint64_t>(kDefaultEmbedBudget);
        c->add_option("spec", *spec)->required();
        c->add_option("--word", *bits)->required();
        c->add_option("--window", *window);
        c->add_option("--embed-budget", *budget, "node cap for embedding searches");
        c->callback([=] {
            Stream s = Stream::parse(*spec);
            Word w = Word::parse(*bits);
            size_t win =
                *window >= 0 ? static_cast<size_t>(*window) : default_window(s, w.size() + 5);
            NecessityVerdict v = prefix_necessity_check(s, w, win, *budget);
            std::cout << "one_side " << (v.one_side_embeds ? "embeds" : "absent") << "\n";
            std::cout << "zero_side " << (v.zero_side_embeds ? "embeds" : "absent") << "\n";
            if (v.pass) {
                std::cout << "pass\n";
            } else {
                std::cout << "fail: " << v.detail << "\n";
                exit(kExitViolation);
            }
        });
    }
    {
        auto* c = age->add_subcommand("jonsson", "level sizes and recurrence witnesses");
        auto spec = std::make_shared<std::string>();
        auto max_height = std::make_shared<int>();
        auto window = std::make_shared<int>(1000);
        c->add_option("spec", *spec)->required();
        c->add_option("--max-height", *max_height)->required();
        c->add_option("--window", *window);
        c->callback([=] {
            JonssonReport rep = jonsson_levels(Stream::parse(*spec),
                                               static_cast<size_t>(*max_height),
                                               static_cast<size_t>(*window));
            for (size_t n = 1; n <= rep.level_sizes.size(); ++n) {
                std::cout << n << " size " << rep.level_sizes[n - 1] << " m ";
                if (rep.witnesses[n - 1]) std::cout << *rep.witnesses[n - 1];
                else std::cout << "unknown";
                std::cout << "\n";
            }
        });
    }
    {
        auto* c = age->add_subcommand("inclusion", "factor inclusion with graph witness");
        auto spec1 = std::make_shared<std::string>();
        auto spec2 = std::make_shared<std::string>();
        auto max_len = std::make_shared<int>();
        auto window = std::make_shared<int>(-1);
        auto budget = std::make_shared<uint64_t>(kDefaultEmbedBudget);
        c->add_option("spec1", *spec1)->required();
        c->add_option("spec2", *spec2)->required();
        c->add_option("--max-len", *max_len)->required();
        c->add_option("--window", *window);
        c->add_option("--embed-budget", *budget, "node cap for embedding searches");
        c->callback([=] {
            Stream s1 = Stream::parse(*spec1), s2 = Stream::parse(*spec2);
            size_t win = *window >= 0 ? static_cast<size_t>(*window)
                                      : std::max(default_window(s1, *max_len),
                                                 default_window(s2, *max_len));
            InclusionResult r = factor_inclusion(s1, s2, static_cast<size_t>(*max_len), win,
                                                 *budget);
            if (r.included) {
                std::cout << "inclusion holds\n";
                return;
            }
            std::cout << "missing_factor " << r.missing_factor->display() << "\n";
            if (r.witness_graph) {
                std::cout << "context " << r.context->display() << "\n";
                std::cout << (r.witness_verified ? "witness verified" : "witness FAILED") << "\n";
                write_graph(std::cout, *r.witness_graph);
            }
            if (!r.witness_verified) {
                std::cout << "fail: " << r.detail << "\n";
                exit(kExitViolation);
            }
        });
    }

    // ---- family ----
    auto* family = app.add_subcommand("family", "unavoidable prime families");
    family->require_subcommand(1);
    {
        auto* c = family->add_subcommand("gen", "emit a family member");
        auto name = std::make_shared<std::string>();
        auto n = std::make_shared<int>();
        auto as_json = std::make_shared<bool>(false);
        c->add_option("name", *name, "family name")->required();
        c->add_option("n", *n, "size parameter")->required();
        c->add_flag("--json", *as_json);
        c->callback([=] { print_graph(make_family({parse_family(*name), *n}), *as_json); });
    }
    {
        auto* c = family->add_subcommand("sweep", "brute-force primality sweep");
        auto n_max = std::make_shared<int>(8);
        c->add_option("--n-max", *n_max);
        c->callback([=] {
            bool all = true;
            for (auto& row : family_primality_sweep(*n_max)) {
                std::cout << to_string(row.family) << " " << row.n << " "
                          << (row.prime ? "prime" : "NOT-PRIME") << "\n";
                all = all && row.prime;
            }
            if (!all) exit(kExitViolation);
        });
    }

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "acceptance suites");
    verify->require_subcommand(1);
    for (const char* suite : {"modules", "realizers", "bounds-periodic", "bounds-aperiodic",
                              "families", "rigidity", "jonsson", "all"}) {
        auto* c = verify->add_subcommand(suite, std::string("run the ") + suite + " suite");
        auto threads = std::make_shared<unsigned>(1);
        auto as_json = std::make_shared<bool>(false);
        auto max_len = std::make_shared<int>(0);
        c->add_option("--threads", *threads, "worker cap for exhaustive sweeps");
        c->add_option("--max-len", *max_len, "word-length cap for the modules/realizers sweeps");
        c->add_flag("--json", *as_json);
        std::string which = suite;
        c->callback([=, &exit_code] {
            exit_code = run_verify_suite(which, *threads, *as_json,
                                         static_cast<size_t>(std::max(0, *max_len)));
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    } catch (const budget_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return exit_code;
}
