#include "crepant/cli.hpp"

#include "crepant/chartable.hpp"
#include "crepant/lattice.hpp"
#include "crepant/search.hpp"
#include "crepant/tables.hpp"
#include "crepant/torsion.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace crepant {

namespace {

std::string resolve_data_dir(const std::string& flag, const std::string& fallback) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("CREPANT_DATA_DIR")) return env;
    return fallback;
}

/** The verify report list: counting ledger, CM identities, lattice rows. */
std::vector<CheckReport> verify_reports(bool cm, bool counting, bool lattice) {
    std::vector<CheckReport> reports;
    if (counting) {
        auto fp = [](std::string id, std::string claim, const MatrixOverCyc& m, long expect) {
            CheckReport r;
            r.check_id = std::move(id);
            r.claim_ref = std::move(claim);
            Int got = fixed_point_count(m);
            r.lhs = got.str();
            r.rhs = std::to_string(expect);
            r.status = got == expect ? "pass" : "fail";
            return r;
        };
        CycNum w = CycNum::zeta(6);
        reports.push_back(fp("fp-4", "diag(w, w, w, -1) fixes 4 points",
                             MatrixOverCyc::diagonal({w, w, w, CycNum::zeta(6, 3)}), 4));
        reports.push_back(fp("fp-256", "-identity fixes the 256 two-torsion points",
                             MatrixOverCyc::diagonal(std::vector<CycNum>(
                                 4, CycNum::from_rational(-1))), 256));
        for (auto& r : counting_reports()) reports.push_back(std::move(r));
    }
    if (cm)
        for (auto& r : verify_cm_identities()) reports.push_back(std::move(r));
    if (lattice)
        for (const auto& row : lattice_rows()) reports.push_back(verify_lattice_row(row.k, row.exps));
    return reports;
}

int emit_reports(const std::vector<CheckReport>& reports, bool json, std::ostream& out) {
    int failures = 0;
    if (json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) {
            arr.push_back(report_to_json(r));
            if (r.status != "pass") ++failures;
        }
        out << arr.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            out << (r.status == "pass" ? "PASS " : "FAIL ") << r.check_id << ": " << r.claim_ref
                << " (" << r.lhs << " vs " << r.rhs << ")\n";
            if (r.status != "pass") ++failures;
        }
        out << failures << " of " << reports.size() << " checks failed\n";
    }
    return failures == 0 ? 0 : 1;
}

const CatalogEntry* find_entry(const std::vector<CatalogEntry>& catalog, const std::string& name) {
    for (const auto& e : catalog)
        if (e.name == name) return &e;
    return nullptr;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
             const std::string& default_data_dir) {
    CLI::App app{"exact-arithmetic toolkit for quotient-singularity group searches"};
    app.require_subcommand(1);
    long cap = default_cap();
    std::string data_dir_flag;
    bool json = false;
    app.add_option("--cap", cap, "closure cap (overrides CREPANT_CAP)");
    app.add_option("--data-dir", data_dir_flag, "table data directory (overrides CREPANT_DATA_DIR)");
    app.add_flag("--json", json, "machine-readable output");

    auto* tables = app.add_subcommand("tables", "emit or diff a result table");
    std::string which, format = "tsv";
    bool diff_mode = false;
    tables->add_option("which", which, "table1..table4")->required();
    tables->add_option("--format", format, "tsv or json");
    tables->add_flag("--diff-paper", diff_mode, "compare against the vendored transcription");

    auto* search = app.add_subcommand("search", "run a predicate search over a catalog");
    std::string spec_path, catalog_path;
    search->add_option("spec", spec_path, "search spec JSON file")->required();
    search->add_option("--catalog", catalog_path, "catalog JSON file (default: builtin)");

    auto* verify = app.add_subcommand("verify", "counting ledger, CM identities, lattice rows");
    bool only_cm = false, only_counting = false, only_lattice = false;
    verify->add_flag("--cm", only_cm, "CM identities only");
    verify->add_flag("--counting", only_counting, "counting ledger only");
    verify->add_flag("--lattice", only_lattice, "lattice rows only");

    auto* group = app.add_subcommand("group", "inspect a builtin group");
    std::string gname;
    bool info = false, chars = false;
    long sylow_p = 0;
    group->add_option("name", gname, "catalog entry name")->required();
    group->add_flag("--info", info, "order, classes, fingerprint (default)");
    group->add_flag("--chars", chars, "irreducible character table");
    group->add_option("--sylow", sylow_p, "p-Sylow subgroup summary");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (tables->parsed()) {
            TableId id = table_id_from_name(which);
            if (!diff_mode) {
                out << emit_table(id, format);
                return 0;
            }
            TableDiff d = diff_paper(id, resolve_data_dir(data_dir_flag, default_data_dir));
            if (json) {
                out << nlohmann::json{{"rows", d.rows},
                                      {"matched", d.matched},
                                      {"known_typos", d.known_typos},
                                      {"known_omissions", d.known_omissions},
                                      {"unexpected", d.unexpected},
                                      {"notes", d.notes},
                                      {"summary", d.summary()}}
                           .dump(2)
                    << "\n";
            } else {
                out << d.summary() << "\n";
                for (const auto& n : d.notes) out << "note: " << n << "\n";
                for (const auto& u : d.unexpected) out << "unexpected: " << u << "\n";
            }
            return d.clean() ? 0 : 1;
        }
        if (search->parsed()) {
            std::ifstream in(spec_path);
            if (!in) {
                err << "cannot open spec file " << spec_path << "\n";
                return 2;
            }
            SearchSpec spec;
            try {
                spec = SearchSpec::from_json(nlohmann::json::parse(in));
            } catch (const std::exception& ex) {
                err << "bad search spec: " << ex.what() << "\n";
                return 2;
            }
            const auto& catalog =
                catalog_path.empty() ? builtin_catalog() : load_catalog(catalog_path, cap);
            auto outcomes = run_search(catalog, spec, cap);
            if (json) {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& o : outcomes) arr.push_back(outcome_to_json(o));
                out << arr.dump(2) << "\n";
            } else {
                auto names = matched_names(outcomes);
                out << "matched " << names.size() << " entr" << (names.size() == 1 ? "y" : "ies");
                for (const auto& n : names) out << " " << n;
                out << "\n";
                for (const auto& o : outcomes) {
                    out << o.entry << ": " << (o.matched ? "match" : "no match");
                    if (!o.error.empty()) out << " (" << o.error << ")";
                    out << "\n";
                    for (const auto& p : o.outcomes)
                        out << "  " << (p.passed ? "pass " : "FAIL ") << p.predicate << ": "
                            << p.witness << "\n";
                    for (const auto& f : o.flags) out << "  flag: " << f << "\n";
                }
            }
            return 0;
        }
        if (verify->parsed()) {
            bool any = only_cm || only_counting || only_lattice;
            auto reports = verify_reports(!any || only_cm, !any || only_counting,
                                          !any || only_lattice);
            return emit_reports(reports, json, out);
        }
        if (group->parsed()) {
            const CatalogEntry* e = find_entry(builtin_catalog(), gname);
            if (!e) {
                err << "no builtin group named '" << gname << "'\n";
                return 2;
            }
            const FiniteMatrixGroup& g = cached_closure(*e, cap);
            nlohmann::json jout;
            if (sylow_p > 0) {
                FiniteMatrixGroup s = materialize(g, sylow_subgroup(g, sylow_p));
                GroupFingerprint fp = fingerprint(s);
                if (json) {
                    nlohmann::json hist;
                    for (const auto& [k, v] : fp.order_histogram) hist[std::to_string(k)] = v;
                    jout["sylow"] = {{"p", sylow_p}, {"order", fp.order},
                                     {"order_histogram", hist}};
                } else {
                    out << sylow_p << "-Sylow of " << gname << ": order " << fp.order << "\n";
                }
            } else if (chars) {
                CharacterTable ct = character_table(g);
                if (json) {
                    nlohmann::json rows = nlohmann::json::array();
                    for (size_t i = 0; i < ct.chars.size(); ++i) {
                        nlohmann::json vals = nlohmann::json::array();
                        for (const auto& v : ct.chars[i]) vals.push_back(v.reduced().str());
                        rows.push_back({{"degree", ct.degrees[i]}, {"values", vals}});
                    }
                    jout["characters"] = rows;
                } else {
                    out << gname << ": " << ct.chars.size() << " irreducible characters, degrees";
                    for (long d : ct.degrees) out << " " << d;
                    out << "\n";
                    for (const auto& row : ct.chars) {
                        for (size_t c = 0; c < row.size(); ++c)
                            out << (c ? "\t" : "") << row[c].reduced().str();
                        out << "\n";
                    }
                }
            } else {
                GroupFingerprint fp = fingerprint(g);
                if (json) {
                    nlohmann::json hist;
                    for (const auto& [k, v] : fp.order_histogram) hist[std::to_string(k)] = v;
                    jout = {{"name", gname},
                            {"order", fp.order},
                            {"classes", g.classes().size()},
                            {"abelian", fp.abelian},
                            {"center_order", fp.center_order},
                            {"derived_order", fp.derived_order},
                            {"order_histogram", hist},
                            {"tags", e->tags}};
                } else {
                    out << gname << ": order " << fp.order << ", " << g.classes().size()
                        << " conjugacy classes, center order " << fp.center_order
                        << ", derived order " << fp.derived_order
                        << (fp.abelian ? ", abelian" : "") << "\n";
                    for (const auto& t : e->tags) out << "tag: " << t << "\n";
                }
            }
            if (json) out << jout.dump(2) << "\n";
            return 0;
        }
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace crepant
