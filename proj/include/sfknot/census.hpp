#pragma once

#include "sfknot/obstructions.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sfknot {

struct KnotRecord {
    std::string name;
    std::string dt;
    bool alternating = true;
    std::optional<int> genus;
    std::optional<int> signature;
    std::string source;
    int line = 0;

    int crossings() const;
    bool is_duplicate() const;  // flagged as a duplicate of another table row
};

struct TableLoad {
    std::vector<KnotRecord> records;
    std::vector<std::string> errors;  // per-row problems; loading continues
};

// Comma separated: name,dt,alternating,genus,signature,source. Lines starting
// with '#' are comments. Empty genus/signature fields mean unknown.
TableLoad load_table(const std::string& path);
TableLoad parse_table(const std::string& text);

struct ScanFilter {
    std::optional<bool> alternating;  // keep only this class
    std::optional<int> max_crossings;
    bool skip_duplicates = false;  // drop rows flagged as duplicates
    bool require_alternating_parity = false;  // keep rows where the alternating parity rule applies
};

struct ScanRow {
    std::string name;
    std::optional<KnotInvariants> invariants;
    std::optional<ObstructionReport> report;
    Coherence coherence = Coherence::AllZero;
    Conclusion summary = Conclusion::NoConclusion;
    std::vector<std::string> warnings;
    std::string error;
};

struct ScanSummary {
    std::vector<ScanRow> rows;  // natural name order
    std::map<std::string, int> coherence_counts;
    std::map<std::string, int> summary_counts;
    std::map<std::string, int> applied_rule_counts;
    int errors = 0;
    std::vector<std::string> mixed_names() const;
};

// Named PD presentations with a literature genus, one per line:
// "name | genus | X[...] X[...] ...". Used for knots outside the DT table.
struct PresentationRecord {
    std::string name;
    int genus = 0;
    std::string pd;
};

std::vector<PresentationRecord> load_presentations(const std::string& path);
std::vector<PresentationRecord> parse_presentations(const std::string& text);

// Natural order: crossing number, then table index, then suffix.
bool knot_name_less(const std::string& a, const std::string& b);

ScanRow scan_record(const KnotRecord& r);
ScanSummary scan(const std::vector<KnotRecord>& records, const ScanFilter& filter = {}, int threads = 0);

}  // namespace sfknot
