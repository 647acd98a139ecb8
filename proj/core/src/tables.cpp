#include "crepant/tables.hpp"

#include "crepant/juniorenum.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace crepant {

namespace {

struct TableData {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::string join(const std::vector<std::string>& v, const char* sep) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
    return out;
}

std::string join_longs(const std::vector<long>& v) {
    std::vector<std::string> s;
    for (long x : v) s.push_back(std::to_string(x));
    return join(s, ",");
}

std::string block_str(const std::vector<Rational>& b) {
    std::vector<std::string> s;
    for (const auto& r : b) s.push_back(rational_str(r));
    return join(s, ",");
}

TableData compute_table(TableId id) {
    TableData t;
    switch (id) {
        case TableId::table1: {
            t.header = {"order", "eigenvector"};
            for (const auto& jt : classify_junior_types(6))
                t.rows.push_back({std::to_string(jt.d), join_longs(jt.tail)});
            break;
        }
        case TableId::table2: {
            t.header = {"u", "alpha", "multiset", "s_value"};
            for (const auto& b : enumerate_blocks())
                t.rows.push_back({std::to_string(b.u), std::to_string(b.alpha),
                                  block_str(b.block), rational_str(b.s)});
            break;
        }
        case TableId::table3: {
            t.header = {"u", "alpha", "multiset", "free_codim2"};
            for (const auto& p : enumerate_partitions()) {
                std::vector<std::string> us, alphas, blocks;
                for (const auto& b : p.rows) {
                    us.push_back(std::to_string(b.u));
                    alphas.push_back(std::to_string(b.alpha));
                    blocks.push_back(block_str(b.block));
                }
                t.rows.push_back({join(us, ","), join(alphas, ","), join(blocks, ";"),
                                  p.free_codim2 ? "true" : "false"});
            }
            break;
        }
        case TableId::table4: {
            t.header = {"order", "eigenvector", "junior", "isogeny_tag"};
            for (const auto& c : classify_fourfold_elements())
                t.rows.push_back({std::to_string(c.order), join_longs(c.exponents),
                                  c.junior ? "true" : "false", c.isogeny_tag});
            break;
        }
    }
    return t;
}

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream in(line);
    std::string tok;
    while (std::getline(in, tok, '\t')) out.push_back(tok);
    if (!line.empty() && line.back() == '\t') out.push_back("");
    return out;
}

const char* table_file(TableId id) {
    switch (id) {
        case TableId::table1: return "table1_paper.tsv";
        case TableId::table2: return "table2_paper.tsv";
        case TableId::table3: return "table3_paper.tsv";
        case TableId::table4: return "table4_paper.tsv";
    }
    return "";
}

}  // namespace

TableId table_id_from_name(const std::string& name) {
    if (name == "table1") return TableId::table1;
    if (name == "table2") return TableId::table2;
    if (name == "table3") return TableId::table3;
    if (name == "table4") return TableId::table4;
    throw std::invalid_argument("unknown table '" + name + "' (expected table1..table4)");
}

std::string emit_table(TableId id, const std::string& format) {
    TableData t = compute_table(id);
    if (format == "tsv") {
        std::string out = join(t.header, "\t") + "\n";
        for (const auto& row : t.rows) out += join(row, "\t") + "\n";
        return out;
    }
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& row : t.rows) {
            nlohmann::json obj;
            for (size_t i = 0; i < t.header.size(); ++i) obj[t.header[i]] = row[i];
            arr.push_back(std::move(obj));
        }
        return arr.dump(2) + "\n";
    }
    throw std::invalid_argument("unknown format '" + format + "' (expected tsv or json)");
}

TableDiff diff_paper(TableId id, const std::string& data_dir) {
    TableData t = compute_table(id);
    std::string path = data_dir + "/" + table_file(id);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("diff_paper: cannot open " + path);

    struct Typo {
        size_t row;  // 1-based computed row
        std::string column;
        std::string computed;
    };
    std::vector<Typo> typos;
    struct PrintedRow {
        std::vector<std::string> cells;
        bool omitted = false;
    };
    std::vector<PrintedRow> printed;
    TableDiff diff;

    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto cells = split_tabs(line);
        if (cells[0] == "#note") {
            diff.notes.push_back(line.substr(line.find('\t') + 1));
        } else if (cells[0] == "#typo") {
            if (cells.size() != 4)
                throw std::runtime_error("diff_paper: malformed #typo line in " + path);
            typos.push_back({std::stoul(cells[1]), cells[2], cells[3]});
        } else if (cells[0] == "#omitted") {
            printed.push_back({{cells.begin() + 1, cells.end()}, true});
        } else if (!header_seen) {
            if (cells != t.header)
                throw std::runtime_error("diff_paper: header mismatch in " + path);
            header_seen = true;
        } else {
            printed.push_back({std::move(cells), false});
        }
    }

    diff.rows = static_cast<int>(t.rows.size());
    size_t n = std::min(t.rows.size(), printed.size());
    for (size_t r = 0; r < n; ++r) {
        const auto& ours = t.rows[r];
        const auto& theirs = printed[r];
        if (theirs.cells.size() != ours.size()) {
            diff.unexpected.push_back("row " + std::to_string(r + 1) + ": column count mismatch");
            continue;
        }
        if (theirs.omitted) {
            if (ours == theirs.cells) {
                ++diff.known_omissions;
            } else {
                diff.unexpected.push_back("row " + std::to_string(r + 1) +
                                          ": omission annotation does not match the computed row");
            }
            continue;
        }
        bool row_clean = true;
        for (size_t c = 0; c < ours.size(); ++c) {
            if (ours[c] == theirs.cells[c]) continue;
            row_clean = false;
            bool known = false;
            for (const auto& ty : typos)
                if (ty.row == r + 1 && ty.column == t.header[c] && ty.computed == ours[c]) {
                    known = true;
                    break;
                }
            if (known)
                ++diff.known_typos;
            else
                diff.unexpected.push_back("row " + std::to_string(r + 1) + ", column " +
                                          t.header[c] + ": computed " + ours[c] + ", printed " +
                                          theirs.cells[c]);
        }
        if (row_clean) ++diff.matched;
    }
    for (size_t r = n; r < t.rows.size(); ++r)
        diff.unexpected.push_back("row " + std::to_string(r + 1) + ": computed " +
                                  join(t.rows[r], "\t") + " has no printed counterpart");
    for (size_t r = n; r < printed.size(); ++r)
        diff.unexpected.push_back("printed row " + std::to_string(r + 1) +
                                  " has no computed counterpart");
    return diff;
}

std::string TableDiff::summary() const {
    std::string out = std::to_string(matched) + "/" + std::to_string(rows) + " match";
    if (known_typos) out += ", " + std::to_string(known_typos) + " known typo(s) (computed value corrected)";
    if (known_omissions) out += ", " + std::to_string(known_omissions) + " known omission(s)";
    out += unexpected.empty() ? ", no unexpected divergence"
                              : ", " + std::to_string(unexpected.size()) + " unexpected divergence(s)";
    return out;
}

}  // namespace crepant
