#include "sfknot/census.hpp"
#include "sfknot/codec.hpp"
#include "sfknot/error.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <fstream>
#include <sstream>
#include <thread>

namespace sfknot {

int KnotRecord::crossings() const
{
    return (int)parse_dt(dt).labels.size();
}

bool KnotRecord::is_duplicate() const { return source.find("duplicate") != std::string::npos; }

namespace {

std::string trim(const std::string& s)
{
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::optional<int> opt_int(const std::string& s, const std::string& what)
{
    std::string t = trim(s);
    if (t.empty()) return std::nullopt;
    try {
        size_t used = 0;
        int v = std::stoi(t, &used);
        if (used != t.size()) throw std::invalid_argument(t);
        return v;
    } catch (const std::logic_error&) {
        throw Error(ErrorKind::Malformed, "bad " + what + " '" + t + "'");
    }
}

}  // namespace

TableLoad parse_table(const std::string& text)
{
    TableLoad out;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::vector<std::string> f;
        std::string cell;
        std::istringstream ls(t);
        while (std::getline(ls, cell, ',')) f.push_back(trim(cell));
        if (!t.empty() && t.back() == ',') f.push_back("");
        try {
            if (f.size() != 6) throw Error(ErrorKind::Malformed, "expected 6 columns, found " + std::to_string(f.size()));
            KnotRecord r;
            r.name = f[0];
            r.dt = f[1];
            std::string alt = f[2];
            std::transform(alt.begin(), alt.end(), alt.begin(), [](unsigned char c) { return (char)std::toupper(c); });
            if (alt == "Y" || alt == "YES" || alt == "TRUE" || alt == "1")
                r.alternating = true;
            else if (alt == "N" || alt == "NO" || alt == "FALSE" || alt == "0")
                r.alternating = false;
            else
                throw Error(ErrorKind::Malformed, "bad alternating flag '" + f[2] + "'");
            r.genus = opt_int(f[3], "genus");
            r.signature = opt_int(f[4], "signature");
            r.source = f[5];
            r.line = lineno;
            if (r.name.empty()) throw Error(ErrorKind::Malformed, "empty name");
            parse_dt(r.dt);
            out.records.push_back(r);
        } catch (const Error& e) {
            out.errors.push_back("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

TableLoad load_table(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Malformed, "cannot open table " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_table(ss.str());
}

std::vector<PresentationRecord> parse_presentations(const std::string& text)
{
    std::vector<PresentationRecord> out;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::vector<std::string> f;
        std::istringstream ls(t);
        std::string cell;
        while (std::getline(ls, cell, '|')) f.push_back(trim(cell));
        if (f.size() != 3)
            throw Error(ErrorKind::Malformed, "line " + std::to_string(lineno) + ": expected name | genus | pd");
        PresentationRecord r;
        r.name = f[0];
        try {
            size_t used = 0;
            r.genus = std::stoi(f[1], &used);
            if (used != f[1].size() || r.genus < 0) throw std::invalid_argument(f[1]);
        } catch (const std::logic_error&) {
            throw Error(ErrorKind::Malformed, "line " + std::to_string(lineno) + ": bad genus '" + f[1] + "'");
        }
        r.pd = f[2];
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<PresentationRecord> load_presentations(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Malformed, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_presentations(ss.str());
}

std::vector<std::string> ScanSummary::mixed_names() const
{
    std::vector<std::string> out;
    for (auto& r : rows)
        if (r.error.empty() && r.coherence == Coherence::Mixed) out.push_back(r.name);
    return out;
}

bool knot_name_less(const std::string& a, const std::string& b)
{
    // compare maximal digit runs numerically, everything else bytewise
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (std::isdigit((unsigned char)a[i]) && std::isdigit((unsigned char)b[j])) {
            size_t ie = i, je = j;
            while (ie < a.size() && std::isdigit((unsigned char)a[ie])) ++ie;
            while (je < b.size() && std::isdigit((unsigned char)b[je])) ++je;
            std::string na = a.substr(i, ie - i), nb = b.substr(j, je - j);
            na.erase(0, std::min(na.find_first_not_of('0'), na.size() - 1));
            nb.erase(0, std::min(nb.find_first_not_of('0'), nb.size() - 1));
            if (na.size() != nb.size()) return na.size() < nb.size();
            if (na != nb) return na < nb;
            i = ie;
            j = je;
        } else {
            if (a[i] != b[j]) return a[i] < b[j];
            ++i;
            ++j;
        }
    }
    return a.size() - i < b.size() - j;
}

ScanRow scan_record(const KnotRecord& r)
{
    ScanRow row;
    row.name = r.name;
    try {
        PlanarDiagram d = realize_dt(parse_dt(r.dt));
        d.set_name(r.name);
        if (is_alternating(d) != r.alternating)
            row.warnings.push_back(std::string("table says ") + (r.alternating ? "alternating" : "non-alternating") +
                                   " but the realized diagram is " + (is_alternating(d) ? "alternating" : "not alternating"));
        std::optional<GenusInput> g;
        if (!r.alternating && r.genus) g = GenusInput{*r.genus, "table:" + r.source};
        KnotInvariants inv = assemble(r.name, d, g, r.alternating);
        if (r.alternating && r.genus && *r.genus != *inv.genus)
            row.warnings.push_back("table genus " + std::to_string(*r.genus) + " differs from deg(Delta)");
        if (r.signature && *r.signature != inv.signature) {
            if (*r.signature == -inv.signature)
                row.warnings.push_back("signature sign differs from table (mirror image)");
            else
                throw Error(ErrorKind::Internal, "signature " + std::to_string(inv.signature) + " disagrees with table " +
                                                     std::to_string(*r.signature));
        }
        std::optional<HfkTable> table;
        if (inv.alternating) table = hfk_alternating(inv);
        ObstructionReport rep = full_report(inv, table);
        row.coherence = sign_coherence(inv.torsion).cls;
        row.summary = rep.summary;
        row.invariants = inv;
        row.report = rep;
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    return row;
}

ScanSummary scan(const std::vector<KnotRecord>& records, const ScanFilter& filter, int threads)
{
    std::vector<const KnotRecord*> keep;
    for (auto& r : records) {
        if (filter.alternating && r.alternating != *filter.alternating) continue;
        if (filter.max_crossings && r.crossings() > *filter.max_crossings) continue;
        if (filter.skip_duplicates && r.is_duplicate()) continue;
        keep.push_back(&r);
    }
    std::vector<ScanRow> rows(keep.size());
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    unsigned nt = threads > 0 ? (unsigned)threads : std::min(hw, 8u);
    nt = std::max(1u, std::min<unsigned>(nt, (unsigned)keep.size()));
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (size_t i = next++; i < keep.size(); i = next++) rows[i] = scan_record(*keep[i]);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < nt; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    ScanSummary s;
    for (auto& row : rows) {
        if (filter.require_alternating_parity && row.report) {
            bool applies = false;
            for (auto& v : row.report->verdicts)
                applies |= v.rule == rules::alternating_parity && v.applicability == Applicability::Applied;
            if (!applies) continue;
        }
        s.rows.push_back(std::move(row));
    }
    std::stable_sort(s.rows.begin(), s.rows.end(), [](const ScanRow& a, const ScanRow& b) { return knot_name_less(a.name, b.name); });
    for (auto& row : s.rows) {
        if (!row.error.empty()) {
            ++s.errors;
            continue;
        }
        s.coherence_counts[coherence_name(row.coherence)]++;
        s.summary_counts[conclusion_name(row.summary)]++;
        for (auto& v : row.report->verdicts)
            if (v.applicability == Applicability::Applied && v.conclusion != Conclusion::NoConclusion)
                s.applied_rule_counts[v.rule]++;
    }
    return s;
}

}  // namespace sfknot
