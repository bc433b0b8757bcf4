#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "kmfold/catalog.hpp"

namespace kmfold {

using json = nlohmann::json;

// Lowest rank of the parametric sweep; rows with explicit ranks are always included.
constexpr int kSweepMin = 4;
constexpr int kDefaultRankBound = 12;

struct TableRecord {
    int table = 0;
    AffineCase c;
    std::string auto_name;
    json computed;
    json paper;      // "unlisted" when no row covers the pair
    std::string status;  // match, deviation, paper-typo-suspected, unlisted
    json corrected;  // null unless annotated
    std::string note;
    json extra;      // per-table diagnostics
};

struct TableReport {
    int table = 0;
    std::string title;
    int rank_bound = kDefaultRankBound;
    std::vector<TableRecord> rows;
    std::map<std::string, int> counts() const;
    bool has_deviation() const;
};

// Embedded table data, or the directory named by KMFOLD_TABLES_DIR.
const json& table_data(int id);

TableReport build_table(int id, int rank_bound = kDefaultRankBound);
// Builds tables concurrently; the result follows the order of ids.
std::vector<TableReport> build_tables(const std::vector<int>& ids, int rank_bound = kDefaultRankBound);

json to_json(const TableRecord& r);
json to_json(const TableReport& t);
// format: json, md, tsv
std::string render(const std::vector<TableReport>& tables, const std::string& format);

// Display form of a computed or paper value.
std::string value_str(int table, const json& v);

// All annotations and catalog notes, for the deviation report.
json deviation_notes();

}  // namespace kmfold
