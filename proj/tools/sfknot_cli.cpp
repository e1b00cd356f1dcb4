// Command-line front end: parse knot presentations, compute invariants, run the
// obstruction report, classify plumbing trees and scan knot tables.

#include "sfknot/census.hpp"
#include "sfknot/codec.hpp"
#include "sfknot/error.hpp"
#include "sfknot/hfk.hpp"
#include "sfknot/invariants.hpp"
#include "sfknot/obstructions.hpp"
#include "sfknot/plumbing.hpp"
#include "sfknot/report.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace sfknot;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInternal = 2;
constexpr int kExitObstruction = 10;

#ifndef SFKNOT_DATA_DIR
#define SFKNOT_DATA_DIR ""
#endif

const char* kFooter = R"(Presentations:
  --dt "4 6 2"                        Dowker-Thistlethwaite code (negative = over at even visit)
  --gauss "O1+ U2+ O3+ U1+ O2+ U3+"   Gauss code with crossing signs
  --pd "X[1,5,2,4] X[3,1,4,6] ..."    planar diagram, KnotTheory convention
  --braid "3: 1 -2 1 -2"              braid word, optional strand count before ':'
  --knot 8_19 [--table FILE]          look a row up in a knot table
  A value of the form @FILE reads the presentation from FILE.

Exit status: 0 success, 1 usage or parse error, 2 internal invariant failure,
10 when --exit-on-obstruction is given and the summary is no-SF-1/q-surgery.

Examples:
  sfknot invariants --dt "4 6 2"
  sfknot obstruct --braid "3: 1 -2 1 -2" --format records
  sfknot obstruct --knot 10_161 --exit-on-obstruction
  sfknot hfk --dt "4 8 10 2 6"
  sfknot plumbing tree.txt
  sfknot scan data/knots_le10.csv --nonalternating --max-crossings 10
  sfknot brieskorn --dt "4 6 2")";

struct KnotOptions {
    std::string dt, gauss, pd, braid, knot, table;
    std::optional<int> genus;
    bool alternating = false;
    bool nonalternating = false;
    std::string name;
};

struct Global {
    std::string format = "text";
    int verbosity = 0;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Malformed, "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string resolve_text(const std::string& v)
{
    if (!v.empty() && v[0] == '@') return read_file(v.substr(1));
    return v;
}

std::string default_table()
{
    namespace fs = std::filesystem;
    for (const std::string& p : {std::string("data/knots_le10.csv"), std::string(SFKNOT_DATA_DIR) + "/knots_le10.csv"})
        if (!p.empty() && fs::exists(p)) return p;
    return "data/knots_le10.csv";
}

void add_knot_options(CLI::App* cmd, KnotOptions& o, bool with_genus)
{
    auto* g = cmd->add_option_group("presentation", "exactly one knot presentation");
    g->add_option("--dt", o.dt, "DT code");
    g->add_option("--gauss", o.gauss, "Gauss code");
    g->add_option("--pd", o.pd, "PD code");
    g->add_option("--braid", o.braid, "braid word");
    g->add_option("--knot", o.knot, "row name in the knot table");
    g->require_option(1);
    cmd->add_option("--table", o.table, "knot table used by --knot (default: bundled table)");
    cmd->add_option("--name", o.name, "label printed with the results");
    if (with_genus) cmd->add_option("--genus", o.genus, "Seifert genus (required knowledge for non-alternating knots)");
    auto* a = cmd->add_flag("--alternating", o.alternating, "declare the knot alternating");
    auto* n = cmd->add_flag("--nonalternating", o.nonalternating, "declare the knot non-alternating");
    a->excludes(n);
}

struct LoadedKnot {
    KnotInvariants inv;
    PlanarDiagram diagram;
};

LoadedKnot load_knot(const KnotOptions& o)
{
    std::optional<GenusInput> genus;
    if (o.genus) genus = GenusInput{*o.genus, "user-supplied"};
    std::optional<bool> alternating;
    if (o.alternating) alternating = true;
    if (o.nonalternating) alternating = false;

    if (!o.knot.empty()) {
        std::string path = o.table.empty() ? default_table() : o.table;
        TableLoad t = load_table(path);
        for (auto& r : t.records) {
            if (r.name != o.knot) continue;
            PlanarDiagram d = realize_dt(parse_dt(r.dt));
            if (!alternating) alternating = r.alternating;
            if (!genus && r.genus && !*alternating) genus = GenusInput{*r.genus, "table:" + r.source};
            return {assemble(o.name.empty() ? r.name : o.name, d, genus, alternating), d};
        }
        throw Error(ErrorKind::Malformed, "knot " + o.knot + " not found in " + path);
    }

    Format f;
    std::string text;
    if (!o.dt.empty()) f = Format::Dt, text = o.dt;
    else if (!o.gauss.empty()) f = Format::Gauss, text = o.gauss;
    else if (!o.pd.empty()) f = Format::Pd, text = o.pd;
    else f = Format::Braid, text = o.braid;
    PlanarDiagram d = to_diagram(f, resolve_text(text));
    return {assemble(o.name, d, genus, alternating), d};
}

void describe(const Global& g, const LoadedKnot& k)
{
    if (g.verbosity == 0) return;
    const PlanarDiagram& d = k.diagram;
    std::cerr << "diagram: " << d.crossing_count() << " crossings, writhe " << d.writhe() << ", "
              << seifert_circles(d) << " Seifert circles, " << (is_alternating(d) ? "alternating" : "non-alternating")
              << "\n";
    if (g.verbosity > 1) std::cerr << "dt: " << to_dt(d).str() << "\n";
}

void emit(const Global& g, const std::string& text, const std::string& records)
{
    std::cout << (g.format == "records" ? records : text);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Seifert fibered surgery obstructions for knots"};
    app.footer(kFooter);
    app.require_subcommand(1);
    app.fallthrough();
    Global g;
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"text", "records"}))
        ->capture_default_str();
    app.add_flag("-v,--verbose", g.verbosity, "print diagram details on stderr (repeat for more)");

    KnotOptions inv_opts, obs_opts, hfk_opts, bri_opts;
    bool exit_on_obstruction = false;
    std::string hfk_file, tree_file, scan_table, scan_table_flag;
    bool scan_alt = false, scan_nonalt = false, scan_skip_dup = false, scan_parity = false;
    std::optional<int> max_crossings;
    int threads = 0;

    auto* c_inv = app.add_subcommand("invariants", "Alexander polynomial, signature, torsion profile, genus");
    add_knot_options(c_inv, inv_opts, true);

    auto* c_obs = app.add_subcommand("obstruct", "run every obstruction rule and print the report");
    add_knot_options(c_obs, obs_opts, true);
    c_obs->add_option("--hfk", hfk_file, "knot Floer homology table file (rows: i m rank)");
    c_obs->add_flag("--exit-on-obstruction", exit_on_obstruction,
                    "exit with status 10 when the summary is no-SF-1/q-surgery");

    auto* c_hfk = app.add_subcommand("hfk", "knot Floer homology of an alternating knot");
    add_knot_options(c_hfk, hfk_opts, false);

    auto* c_plumb = app.add_subcommand("plumbing", "classify a weighted plumbing tree");
    c_plumb->add_option("tree", tree_file, "tree file (lines 'v id weight' and 'e id id')")->required();

    auto* c_scan = app.add_subcommand("scan", "scan a knot table");
    c_scan->add_option("path", scan_table, "table file");
    c_scan->add_option("--table", scan_table_flag, "table file (alternative to the positional argument)");
    auto* fa = c_scan->add_flag("--alternating", scan_alt, "only alternating rows");
    auto* fn = c_scan->add_flag("--nonalternating", scan_nonalt, "only non-alternating rows");
    fa->excludes(fn);
    c_scan->add_option("--max-crossings", max_crossings, "only rows with at most this many crossings");
    c_scan->add_flag("--perko-corrected", scan_skip_dup, "drop rows flagged as duplicates (Perko pair)");
    c_scan->add_flag("--parity-rule-applies", scan_parity,
                     "only rows where the alternating genus/signature parity rule applies");
    c_scan->add_option("--threads", threads, "worker threads (0 = automatic)");

    auto* c_bri = app.add_subcommand("brieskorn", "which Brieskorn spheres a 1/q surgery could produce");
    add_knot_options(c_bri, bri_opts, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (c_inv->parsed()) {
            auto k = load_knot(inv_opts);
            describe(g, k);
            emit(g, format_invariants(k.inv), records_invariants(k.inv));
        } else if (c_obs->parsed()) {
            auto k = load_knot(obs_opts);
            describe(g, k);
            std::optional<HfkTable> table;
            if (!hfk_file.empty()) table = parse_hfk(read_file(hfk_file));
            ObstructionReport r = full_report(k.inv, table);
            emit(g, format_invariants(k.inv) + format_report(r) + format_brieskorn(k.inv.name, r.brieskorn),
                 records_invariants(k.inv) + records_report(r) + records_brieskorn(k.inv.name, r.brieskorn));
            if (exit_on_obstruction && r.summary == Conclusion::NoSF) return kExitObstruction;
        } else if (c_hfk->parsed()) {
            auto k = load_knot(hfk_opts);
            describe(g, k);
            HfkTable h = hfk_alternating(k.inv);
            emit(g, format_hfk(h), records_hfk(k.inv.name, h));
        } else if (c_plumb->parsed()) {
            WeightedTree t = parse_tree(read_file(tree_file));
            FormClass fc = classify_form(t);
            Orientation o = orientation_class(t);
            emit(g, format_form(fc, o), records_form(fc, o));
        } else if (c_scan->parsed()) {
            if (!scan_table.empty() && !scan_table_flag.empty())
                throw CLI::ValidationError("scan", "give the table either positionally or with --table");
            std::string path = !scan_table.empty() ? scan_table
                               : !scan_table_flag.empty() ? scan_table_flag
                                                          : default_table();
            TableLoad t = load_table(path);
            for (auto& e : t.errors) std::cerr << "warning: " << e << "\n";
            ScanFilter f;
            if (scan_alt) f.alternating = true;
            if (scan_nonalt) f.alternating = false;
            f.max_crossings = max_crossings;
            f.skip_duplicates = scan_skip_dup;
            f.require_alternating_parity = scan_parity;
            ScanSummary s = scan(t.records, f, threads);
            emit(g, format_scan(s), records_scan(s));
            if (s.errors > 0) return kExitInternal;
        } else if (c_bri->parsed()) {
            auto k = load_knot(bri_opts);
            describe(g, k);
            BrieskornFilter f = brieskorn_filter(k.inv);
            emit(g, format_brieskorn(k.inv.name, f), records_brieskorn(k.inv.name, f));
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::Internal ? kExitInternal : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitOk;
}
