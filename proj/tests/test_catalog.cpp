#include <doctest.h>

#include "crepant/catalog.hpp"
#include "crepant/cli.hpp"
#include "crepant/search.hpp"
#include "crepant/tables.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace crepant;

namespace {

const std::string kDataDir = CREPANT_DATA_DIR;

const CatalogEntry& entry(const std::string& name) {
    for (const auto& e : builtin_catalog())
        if (e.name == name) return e;
    throw std::runtime_error("no builtin entry " + name);
}

const FiniteMatrixGroup& group(const std::string& name) { return cached_closure(entry(name)); }

SearchSpec spec_file(const std::string& name) {
    std::ifstream in(kDataDir + "/" + name);
    REQUIRE(in);
    return SearchSpec::from_json(nlohmann::json::parse(in));
}

std::string temp_file(const std::string& content) {
    static int counter = 0;
    auto path = std::filesystem::temp_directory_path() /
                ("crepant_catalog_test_" + std::to_string(++counter) + ".json");
    std::ofstream(path) << content;
    return path.string();
}

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("builtin catalog fingerprints") {
    // name, order, center, derived, classes, {order: count}
    struct Row {
        const char* name;
        long order, center, derived, classes;
        std::map<long, long> hist;
    };
    const std::vector<Row> rows = {
        {"Z3", 3, 3, 1, 3, {{1, 1}, {3, 2}}},
        {"Z7", 7, 7, 1, 7, {{1, 1}, {7, 6}}},
        {"Z15", 15, 15, 1, 15, {{1, 1}, {3, 2}, {5, 4}, {15, 8}}},
        {"Q8", 8, 2, 2, 5, {{1, 1}, {2, 1}, {4, 6}}},
        {"Q16", 16, 2, 4, 7, {{1, 1}, {2, 1}, {4, 10}, {8, 4}}},
        {"SL23", 24, 2, 8, 7, {{1, 1}, {2, 1}, {3, 8}, {4, 6}, {6, 8}}},
        {"SL32", 168, 1, 168, 6, {{1, 1}, {2, 21}, {3, 56}, {4, 42}, {7, 48}}},
        {"Z3xZ3", 9, 9, 1, 9, {{1, 1}, {3, 8}}},
        {"Z7xZ7", 49, 49, 1, 49, {{1, 1}, {7, 48}}},
        {"Z3sdZ8", 24, 4, 3, 12,
         {{1, 1}, {2, 1}, {3, 2}, {4, 2}, {6, 2}, {8, 12}, {12, 4}}},
        {"Z7sdZ3", 21, 1, 7, 5, {{1, 1}, {3, 14}, {7, 6}}},
        {"Q8sd_Z7sdZ3", 168, 2, 56, 17,
         {{1, 1}, {2, 1}, {3, 56}, {4, 6}, {6, 56}, {7, 6}, {14, 6}, {28, 36}}},
        {"Z3xQ8sd_Z7sdZ3", 504, 6, 56, 51,
         {{1, 1}, {2, 1}, {3, 170}, {4, 6}, {6, 170}, {7, 6}, {12, 12}, {14, 6},
          {21, 12}, {28, 36}, {42, 12}, {84, 72}}},
        {"Z5xQ8", 40, 10, 2, 25, {{1, 1}, {2, 1}, {4, 6}, {5, 4}, {10, 4}, {20, 24}}},
        {"Z5sdQ8", 40, 2, 10, 13, {{1, 1}, {2, 1}, {4, 22}, {5, 4}, {10, 4}, {20, 8}}},
        {"Z5sdQ16", 80, 2, 20, 17,
         {{1, 1}, {2, 1}, {4, 26}, {5, 4}, {8, 20}, {10, 4}, {20, 24}}},
        {"Z3sdQ16", 48, 2, 12, 15,
         {{1, 1}, {2, 1}, {3, 2}, {4, 26}, {6, 2}, {8, 4}, {12, 4}, {24, 8}}},
        {"Z3xQ16", 48, 6, 4, 21,
         {{1, 1}, {2, 1}, {3, 2}, {4, 10}, {6, 2}, {8, 4}, {12, 20}, {24, 8}}},
    };
    REQUIRE(builtin_catalog().size() == rows.size());
    for (const auto& row : rows) {
        INFO(row.name);
        const FiniteMatrixGroup& g = group(row.name);
        GroupFingerprint fp = fingerprint(g);
        CHECK(fp.order == row.order);
        CHECK(fp.center_order == row.center);
        CHECK(fp.derived_order == row.derived);
        CHECK(static_cast<long>(g.classes().size()) == row.classes);
        CHECK(fp.order_histogram == row.hist);
        CHECK(fp.abelian == (fp.derived_order == 1));
    }
}

TEST_CASE("builders enforce their contracts") {
    // action must be a unit of order dividing k
    CHECK_THROWS_AS(build_semidirect_cyclic(9, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(build_semidirect_cyclic(7, 3, 3), std::invalid_argument);
    // trivial action degenerates to the direct product
    CHECK(close_entry(build_semidirect_cyclic(5, 3, 1)).order() == 15);
    // generalized quaternion groups carry a unique involution
    for (long q : {8L, 16L}) {
        GroupFingerprint fp = fingerprint(close_entry(build_quaternion(q)));
        CHECK(fp.order == q);
        CHECK(fp.order_histogram[2] == 1);
    }
    // the induced four-dimensional model of Z5 x| Q16
    const CatalogEntry& e = entry("Z5sdQ16");
    CHECK(e.generators.front().dim() == 4);
    CHECK(e.expected_order == 80);
    // a wrong order hint is rejected with the entry named
    CatalogEntry bad = build_cyclic(6);
    bad.name = "Z6bad";
    bad.expected_order = 7;
    CHECK_THROWS_WITH_AS(close_entry(bad), doctest::Contains("Z6bad"), std::runtime_error);
}

TEST_CASE("order-20 elements of Z5sdQ16 generate a subgroup of order 40") {
    const FiniteMatrixGroup& g = group("Z5sdQ16");
    std::vector<int> seed;
    for (long i = 0; i < g.order(); ++i)
        if (g.element_order_at(static_cast<int>(i)) == 20) seed.push_back(static_cast<int>(i));
    CHECK(seed.size() == 24);
    CHECK(subgroup_closure(g, seed).size() == 40);  // proper, unlike in Z5 x Q8
    CHECK(subgroup_closure(g, {}).size() == 1);
}

TEST_CASE("catalog files load and round-trip") {
    std::string empty = temp_file(" \n\t\n");
    CHECK(load_catalog(empty).empty());

    std::string perms = temp_file(R"({"entries": [{
        "name": "S3",
        "generators": {"kind": "perm", "data": [[1, 0, 2], [1, 2, 0]]},
        "expected_order": 6,
        "tags": ["symmetric"]}]})");
    auto cat = load_catalog(perms);
    REQUIRE(cat.size() == 1);
    CHECK(cat[0].name == "S3");
    CHECK(cat[0].tags == std::vector<std::string>{"symmetric"});
    CHECK(close_entry(cat[0]).order() == 6);

    // matrix generators survive a serialization round trip
    nlohmann::json doc = {{"entries",
                           {{{"name", "Q8m"},
                             {"generators", generators_to_json(entry("Q8").generators)},
                             {"expected_order", 8}}}}};
    auto cat2 = load_catalog(temp_file(doc.dump()));
    REQUIRE(cat2.size() == 1);
    CHECK(fingerprint(close_entry(cat2[0])) == fingerprint(group("Q8")));

    // schema errors name the offending entry
    std::string bad = temp_file(R"({"entries": [{"name": "oops",
        "generators": {"kind": "frob", "data": []}}]})");
    CHECK_THROWS_WITH_AS(load_catalog(bad), doctest::Contains("oops"), std::runtime_error);
    CHECK_THROWS_AS(load_catalog("/nonexistent/catalog.json"), std::runtime_error);

    for (const auto& p : {empty, perms, bad}) std::remove(p.c_str());
}

TEST_CASE("bundled search specs replay") {
    const auto& cat = builtin_catalog();

    auto out1 = run_search(cat, spec_file("search1.json"));
    CHECK(matched_names(out1).empty());

    auto out5 = run_search(cat, spec_file("search5.json"));
    CHECK(matched_names(out5) == std::vector<std::string>{"SL32", "Z7"});
    for (const auto& o : out5)
        if (o.entry == "Z7sdZ3") {
            // the Frobenius group survives every structural filter but its
            // order-7 elements generate only the proper normal subgroup
            bool gen_fail = false;
            for (const auto& p : o.outcomes)
                if (!p.passed) {
                    CHECK(p.predicate == "generated_by_order(7)");
                    CHECK(p.witness.find("order 7") != std::string::npos);
                    gen_fail = true;
                }
            CHECK(gen_fail);
        }

    auto out_fc = run_search(cat, spec_file("five_candidates.json"));
    CHECK(matched_names(out_fc) == std::vector<std::string>{"Z15", "Z5xQ8"});

    auto out_cc = run_search(cat, spec_file("five_candidates_chars.json"));
    CHECK(matched_names(out_cc) == std::vector<std::string>{"Z15"});

    auto out_ps = run_search(cat, spec_file("pointwise_stab6.json"));
    CHECK(matched_names(out_ps) ==
          std::vector<std::string>{"Q8sd_Z7sdZ3", "SL23", "Z3", "Z3xQ8sd_Z7sdZ3", "Z3xZ3",
                                   "Z7sdZ3"});
    int flagged = 0;
    for (const auto& o : out_ps)
        for (const auto& f : o.flags)
            if (f.find("28") != std::string::npos) ++flagged;
    CHECK(flagged == 2);  // both order-168 extensions carry elements of order 28
}

TEST_CASE("matched set is monotone in the predicate list") {
    SearchSpec full = spec_file("search5.json");
    const auto& cat = builtin_catalog();
    std::vector<std::string> prev;
    bool first = true;
    for (size_t k = 1; k <= full.predicates.size(); ++k) {
        SearchSpec prefix;
        prefix.predicates.assign(full.predicates.begin(), full.predicates.begin() + k);
        auto names = matched_names(run_search(cat, prefix));
        if (!first)
            for (const auto& n : names)
                CHECK(std::find(prev.begin(), prev.end(), n) != prev.end());
        prev = std::move(names);
        first = false;
    }
}

TEST_CASE("search specs validate their parameters") {
    CHECK_THROWS_AS(SearchSpec::from_json(nlohmann::json{{"predicates", nlohmann::json::array()}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(SearchSpec::from_json(nlohmann::json::parse(
                        R"({"predicates": [{"type": "order_divides", "n": 0}]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(SearchSpec::from_json(nlohmann::json::parse(
                        R"({"predicates": [{"type": "no_such_predicate"}]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(SearchSpec::from_json(nlohmann::json::parse(
                        R"({"predicates": [{"type": "generated_by_order", "orders": [0]}]})")),
                    std::invalid_argument);
    SearchSpec ok = SearchSpec::from_json(
        nlohmann::json::parse(R"({"predicates": [{"type": "has_aut_of_order", "k": 7}]})"));
    CHECK(ok.predicates.front().n == 7);  // "k" is an alias for "n"
}

TEST_CASE("the fourfold character predicate") {
    std::string w;
    CHECK(admits_fourfold_rep(group("Z15"), &w));
    CHECK(w == "degree-4 character found (irreducible degrees 1+1+1+1)");
    CHECK(admits_fourfold_rep(group("Q16"), &w));
    CHECK(w == "degree-4 character found (irreducible degrees 2+2)");
    // both surviving order-40/80 candidates fail on character theory alone
    CHECK_FALSE(admits_fourfold_rep(group("Z5xQ8"), &w));
    CHECK(w.find("no appropriate four-dimensional character") == 0);
    CHECK_FALSE(admits_fourfold_rep(group("Z5sdQ16")));
    CHECK_FALSE(admits_fourfold_rep(group("Z7sdZ3")));
}

TEST_CASE("sylow shapes") {
    CHECK(sylow_matches(group("Z15"), 2, "trivial"));
    CHECK(sylow_matches(group("Z3sdZ8"), 2, "cyclic"));
    CHECK(sylow_matches(group("Z5xQ8"), 2, "Q8"));
    CHECK(sylow_matches(group("Z5sdQ16"), 2, "Q16"));
    CHECK(sylow_matches(group("SL32"), 2, "noncyclic"));
    CHECK_FALSE(sylow_matches(group("SL32"), 2, "Q8"));
    CHECK_FALSE(sylow_matches(group("Z3sdZ8"), 2, "noncyclic"));
    CHECK(sylow_matches(group("Z7xZ7"), 7, "noncyclic"));
    CHECK_THROWS_AS(sylow_matches(group("Q8"), 2, "dihedral"), std::invalid_argument);
}

TEST_CASE("tables emit byte-stable output with the expected row counts") {
    const std::map<TableId, int> rows = {{TableId::table1, 12},
                                         {TableId::table2, 45},
                                         {TableId::table3, 35},
                                         {TableId::table4, 26}};
    for (const auto& [id, n] : rows) {
        std::string tsv = emit_table(id, "tsv");
        CHECK(tsv == emit_table(id, "tsv"));
        CHECK(count_lines(tsv) == n + 1);  // header + data rows
        auto arr = nlohmann::json::parse(emit_table(id, "json"));
        CHECK(static_cast<int>(arr.size()) == n);
    }
    CHECK_THROWS_AS(emit_table(TableId::table1, "yaml"), std::invalid_argument);
    CHECK_THROWS_AS(table_id_from_name("table9"), std::invalid_argument);
}

TEST_CASE("table diffs against the printed transcription") {
    TableDiff d1 = diff_paper(TableId::table1, kDataDir);
    CHECK(d1.rows == 12);
    CHECK(d1.matched == 12);
    CHECK(d1.clean());
    CHECK(!d1.notes.empty());

    TableDiff d2 = diff_paper(TableId::table2, kDataDir);
    CHECK(d2.rows == 45);
    CHECK(d2.matched == 44);
    CHECK(d2.known_typos == 1);
    CHECK(d2.clean());

    TableDiff d3 = diff_paper(TableId::table3, kDataDir);
    CHECK(d3.rows == 35);
    CHECK(d3.matched == 33);
    CHECK(d3.known_omissions == 2);
    CHECK(d3.clean());

    TableDiff d4 = diff_paper(TableId::table4, kDataDir);
    CHECK(d4.rows == 26);
    CHECK(d4.matched == 26);
    CHECK(d4.clean());
    CHECK(d4.summary().find("26/26 match") != std::string::npos);
}

TEST_CASE("cli driver exit codes and output") {
    auto run = [&](std::vector<std::string> args, std::string* text = nullptr) {
        std::ostringstream out, err;
        int rc = cli_main(args, out, err, kDataDir);
        if (text) *text = out.str() + err.str();
        return rc;
    };
    std::string text;
    CHECK(run({"--help"}, &text) == 0);
    CHECK(text.find("tables") != std::string::npos);
    CHECK(run({"frobnicate"}) == 2);
    CHECK(run({"tables", "table9"}) == 2);
    CHECK(run({"tables", "table1", "--diff-paper"}, &text) == 0);
    CHECK(text.find("12/12 match") != std::string::npos);
    CHECK(run({"search", "/nonexistent/spec.json"}) == 2);
    CHECK(run({"verify", "--cm"}, &text) == 0);
    CHECK(text.find("0 of") != std::string::npos);
    // the full lattice certification reports its one honest divergence
    CHECK(run({"verify", "--lattice"}, &text) == 1);
    CHECK(text.find("1 of") != std::string::npos);
    CHECK(run({"group", "Z15"}, &text) == 0);
    CHECK(text.find("order 15") != std::string::npos);
    CHECK(run({"group", "NoSuchGroup"}) == 2);
    CHECK(run({"--json", "group", "SL23", "--chars"}, &text) == 0);
    auto j = nlohmann::json::parse(text);
    CHECK(j["characters"].size() == 7);
}
