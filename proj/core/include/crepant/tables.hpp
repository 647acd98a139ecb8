#ifndef CREPANT_TABLES_HPP
#define CREPANT_TABLES_HPP

#include <json.hpp>

#include <string>
#include <vector>

namespace crepant {

enum class TableId { table1, table2, table3, table4 };

/** "table1" .. "table4"; throws std::invalid_argument otherwise. */
TableId table_id_from_name(const std::string& name);

/**
 * Byte-stable rendering of the computed table:
 *   table1: order, eigenvector           (junior types in dimension 6)
 *   table2: u, alpha, multiset, s_value  (admissible blocks)
 *   table3: u, alpha, multiset, free_codim2  (partitions with S = 1)
 *   table4: order, eigenvector, junior, isogeny_tag  (fourfold classes)
 * format is "tsv" (header line + tab-separated rows) or "json" (array of
 * objects keyed by the column names).
 */
std::string emit_table(TableId id, const std::string& format);

/**
 * Comparison against the vendored transcription data/tableN_paper.tsv.  The
 * transcription holds the printed values; annotation lines distinguish the
 * known divergences:
 *   #typo <row> <column> <computed>   printed cell differs, computed value known good
 *   #omitted <cells...>               row absent from the printed table
 *   #note <text>                      free-form remark, echoed in the report
 * (fields tab-separated).  Anything else that differs is unexpected.
 */
struct TableDiff {
    int rows = 0;
    int matched = 0;         // rows identical to the printed transcription
    int known_typos = 0;     // cells diverging exactly as annotated
    int known_omissions = 0; // computed rows the printed table omits
    std::vector<std::string> unexpected;
    std::vector<std::string> notes;

    bool clean() const { return unexpected.empty(); }
    std::string summary() const;
};

TableDiff diff_paper(TableId id, const std::string& data_dir);

}  // namespace crepant

#endif
