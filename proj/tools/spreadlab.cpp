#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "spreadlab/bounds.hpp"
#include "spreadlab/error.hpp"
#include "spreadlab/graph.hpp"
#include "spreadlab/search.hpp"
#include "spreadlab/spectral.hpp"
#include "spreadlab/structures.hpp"
#include "spreadlab/tables.hpp"

using json = nlohmann::ordered_json;
using namespace spreadlab;

namespace {

constexpr int kSchemaVersion = 1;

enum Exit { ok = 0, usage = 1, domain = 2, verification = 3 };

struct InputFlags {
    std::string g6, edges, builtin_name, family;
};

struct Output {
    std::string format = "plain";
    bool json_flag = false;
    std::string out_path;
};

struct Loaded {
    Graph graph;
    json descriptor;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw invalid_argument("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Loaded load_input(const InputFlags& f) {
    const int given = !f.g6.empty() + !f.edges.empty() + !f.builtin_name.empty() + !f.family.empty();
    if (given != 1) throw invalid_argument("exactly one of --g6, --edges, --builtin, --family is required");
    if (!f.g6.empty()) return {parse_graph6(f.g6), {{"type", "g6"}, {"value", f.g6}}};
    if (!f.edges.empty()) return {parse_edge_list(read_file(f.edges)), {{"type", "edges"}, {"value", f.edges}}};
    if (!f.builtin_name.empty()) return {builtin(f.builtin_name), {{"type", "builtin"}, {"value", f.builtin_name}}};
    return {generate(parse_family(f.family)), {{"type", "family"}, {"value", f.family}}};
}

void add_input_flags(CLI::App* cmd, InputFlags& f) {
    auto* a = cmd->add_option("--g6", f.g6, "graph in graph6 format");
    auto* b = cmd->add_option("--edges", f.edges, "edge-list file");
    auto* c = cmd->add_option("--builtin", f.builtin_name, "named graph (G1..G4, H1, H2, K22, P4, S4, K23, P5, S5)");
    auto* d = cmd->add_option("--family", f.family, "family descriptor, e.g. kab:2,3 or kite:5,3");
    a->excludes(b, c, d);
    b->excludes(c, d);
    c->excludes(d);
}

std::string fmt4(double x) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(4) << (std::abs(x) < 5e-5 ? 0.0 : x);
    return s.str();
}

std::string full(double x) {
    std::ostringstream s;
    s << std::setprecision(17) << x;
    return s.str();
}

std::string vertices1(const std::vector<int>& vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? " " : "") + std::to_string(vs[i] + 1);
    return s;
}

std::vector<int> plus1(std::vector<int> vs) {
    for (int& v : vs) ++v;
    return vs;
}

json int128_json(Int128 x) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(x);
    return to_string(x);
}

std::string rat(const Rational& r) {
    return r.denominator() == 1 ? std::to_string(r.numerator())
                                : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

json rational_matrix_json(const SquareMatrix<Rational>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.order(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.order(); ++j) row.push_back(rat(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

std::string rational_matrix_plain(const SquareMatrix<Rational>& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.order(); ++i) {
        s += i ? ", [" : "[";
        for (std::size_t j = 0; j < m.order(); ++j) s += (j ? ", " : "") + rat(m(i, j));
        s += "]";
    }
    return s + "]";
}

// A finished command: the json document plus plain and csv renderings.
struct Report {
    json doc;
    std::string plain;
    std::string csv;
};

json envelope(const std::string& command, const json& input) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    if (!input.is_null()) j["input"] = input;
    return j;
}

Report cmd_spectrum(const Loaded& in, MatrixKind kind) {
    const auto dd = all_pairs_distances(in.graph);
    const auto r = spread(dd, kind);
    Report rep;
    rep.doc = envelope("spectrum", in.descriptor);
    rep.doc["n"] = in.graph.order();
    rep.doc["m"] = in.graph.size();
    rep.doc["matrix"] = std::string(to_string(kind));
    rep.doc["eigenvalues"] = r.spectrum.values();
    rep.doc["max"] = r.rho_max;
    rep.doc["min"] = r.rho_min;
    rep.doc["spread"] = r.spread;

    std::ostringstream p;
    p << "matrix: " << to_string(kind) << "\n";
    p << "n: " << in.graph.order() << "  m: " << in.graph.size() << "\n";
    p << "eigenvalues:";
    for (double x : r.spectrum.values()) p << " " << fmt4(x);
    p << "\nmax: " << fmt4(r.rho_max) << "\nmin: " << fmt4(r.rho_min) << "\nspread: " << fmt4(r.spread) << "\n";
    rep.plain = p.str();

    std::ostringstream c;
    c << "index,eigenvalue\n";
    for (std::size_t i = 0; i < r.spectrum.size(); ++i) c << i + 1 << "," << full(r.spectrum.values()[i]) << "\n";
    rep.csv = c.str();
    return rep;
}

Report cmd_bound(const Loaded& in, BoundMethod m) {
    const auto r = evaluate_bound(in.graph, m);
    Report rep;
    rep.doc = envelope("bound", in.descriptor);
    rep.doc["method"] = std::string(to_string(m));
    rep.doc["matrix"] = std::string(to_string(matrix_of(m)));
    rep.doc["n"] = r.n;
    rep.doc["parameter"] = r.parameter;
    rep.doc["denominator"] = int128_json(r.denominator);
    rep.doc["trace_sign"] = r.trace_sign;
    rep.doc["radicand_sign"] = r.radicand_sign;
    json ws = json::array();
    for (const auto& w : r.witnesses) {
        json q = json::array();
        const auto m2 = w.quotient.as_matrix2();
        for (auto& row : m2) q.push_back({row[0], row[1]});
        ws.push_back({{"vertices", plus1(w.vertices)},
                      {"a", int128_json(w.a)},
                      {"b", int128_json(w.b)},
                      {"weight", rat(w.weight)},
                      {"quotient", q},
                      {"lambda1", w.lambda1},
                      {"lambda2", w.lambda2},
                      {"value", w.value},
                      {"quotient_consistent", w.quotient_consistent}});
    }
    rep.doc["witnesses"] = ws;
    rep.doc["witnesses_truncated"] = r.witnesses_truncated;
    rep.doc["closed_form"] = r.closed_form;
    if (r.closed_form) rep.doc["closed_form_case"] = r.closed_form_case;
    rep.doc["bound"] = r.bound;
    rep.doc["radius_lower_bound"] = r.radius_lb;
    rep.doc["least_upper_bound"] = r.min_ub;
    rep.doc["true_spread"] = r.true_spread;
    rep.doc["gap"] = r.true_spread - r.bound;

    std::ostringstream p;
    p << "method: " << to_string(m) << " (" << to_string(matrix_of(m)) << ")\n";
    p << "n: " << r.n << "  parameter: " << r.parameter << "\n";
    if (r.closed_form) {
        p << "closed form: " << r.closed_form_case << "\n";
    } else {
        p << "denominator: " << to_string(r.denominator) << "\n";
        p << "witnesses:\n";
        for (const auto& w : r.witnesses)
            p << "  [" << vertices1(w.vertices) << "]  a=" << to_string(w.a) << "  b=" << to_string(w.b)
              << "  lambda1=" << fmt4(w.lambda1) << "  lambda2=" << fmt4(w.lambda2) << "  value=" << fmt4(w.value)
              << (w.quotient_consistent ? "" : "  (quotient mismatch)") << "\n";
        if (r.witnesses_truncated) p << "  (witness list truncated)\n";
    }
    p << "bound: " << fmt4(r.bound) << "\ntrue spread: " << fmt4(r.true_spread) << "\ngap: "
      << fmt4(r.true_spread - r.bound) << "\n";
    rep.plain = p.str();

    std::ostringstream c;
    c << "vertices,a,b,lambda1,lambda2,value\n";
    for (const auto& w : r.witnesses)
        c << vertices1(w.vertices) << "," << to_string(w.a) << "," << to_string(w.b) << "," << full(w.lambda1) << ","
          << full(w.lambda2) << "," << full(w.value) << "\n";
    c << "bound,,,,," << full(r.bound) << "\n";
    c << "true_spread,,,,," << full(r.true_spread) << "\n";
    rep.csv = c.str();
    return rep;
}

Report cmd_legacy(const Loaded& in, int vertex1) {
    const auto r = legacy_2012_counterexample(in.graph, vertex1 - 1);
    Report rep;
    rep.doc = envelope("bound", in.descriptor);
    rep.doc["method"] = "legacy-2012";
    rep.doc["vertex"] = vertex1;
    rep.doc["B1"] = rational_matrix_json(r.b1);
    rep.doc["B2"] = rational_matrix_json(r.b2.entries);
    rep.doc["equal"] = r.equal;

    std::ostringstream p;
    p << "vertex: " << vertex1 << "\n";
    p << "B1 (legacy formula): " << rational_matrix_plain(r.b1) << "\n";
    p << "B2 (by definition):  " << rational_matrix_plain(r.b2.entries) << "\n";
    p << (r.equal ? "B1 = B2\n" : "B1 != B2\n");
    rep.plain = p.str();

    std::ostringstream c;
    c << "matrix,i,j,value\n";
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) c << "B1," << i + 1 << "," << j + 1 << "," << rat(r.b1(i, j)) << "\n";
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            c << "B2," << i + 1 << "," << j + 1 << "," << rat(r.b2.entries(i, j)) << "\n";
    rep.csv = c.str();
    return rep;
}

Report cmd_verify_tables(const std::string& only, const std::string& table, bool& all_pass) {
    if (!table.empty()) {
        const auto& names = table_names();
        if (std::find(names.begin(), names.end(), table) == names.end())
            throw invalid_argument("unknown table '" + table + "'");
    }
    auto cells = verify_tables();
    if (!only.empty()) {
        cells = select_row(cells, only, table);
        if (cells.empty()) throw invalid_argument("no table row named '" + only + "'");
    } else if (!table.empty()) {
        std::erase_if(cells, [&](const TableCell& c) { return c.table != table; });
    }
    all_pass = std::all_of(cells.begin(), cells.end(), [](const TableCell& c) { return c.pass; });
    std::size_t passed = std::count_if(cells.begin(), cells.end(), [](const TableCell& c) { return c.pass; });

    Report rep;
    rep.doc = envelope("verify-tables", nullptr);
    json arr = json::array();
    for (const auto& c : cells)
        arr.push_back({{"table", c.table},
                       {"row", c.row},
                       {"column", c.column},
                       {"expected", c.expected},
                       {"computed", c.computed},
                       {"tolerance", c.tolerance},
                       {"tolerance_class", c.tolerance_class},
                       {"pass", c.pass}});
    rep.doc["cells"] = arr;
    rep.doc["passed"] = passed;
    rep.doc["total"] = cells.size();
    rep.doc["all_pass"] = all_pass;

    std::ostringstream p;
    std::string current;
    for (const auto& c : cells) {
        if (c.table != current) p << c.table << ":\n", current = c.table;
        p << "  " << (c.pass ? "PASS" : "FAIL") << "  " << std::left << std::setw(6) << c.row << " "
          << std::setw(6) << c.column << std::right << " expected " << fmt4(c.expected) << "  computed "
          << fmt4(c.computed) << "  (" << c.tolerance_class << ")\n";
    }
    p << passed << "/" << cells.size() << " cells pass\n";
    rep.plain = p.str();

    std::ostringstream cs;
    cs << "table,row,column,expected,computed,tolerance,pass\n";
    for (const auto& c : cells)
        cs << c.table << "," << c.row << "," << c.column << "," << full(c.expected) << "," << full(c.computed) << ","
           << c.tolerance << "," << (c.pass ? "true" : "false") << "\n";
    rep.csv = cs.str();
    return rep;
}

json class_json(const GraphClass& c) { return {{"graph6", c.graph6}, {"sq", c.sq}}; }

Report cmd_conjecture(int n, const ConjectureOptions& opts, bool list_classes) {
    if (n < kMinSearchOrder || n > kMaxSearchOrder)
        throw invalid_argument("--n must be in [" + std::to_string(kMinSearchOrder) + ", " +
                               std::to_string(kMaxSearchOrder) + "]");
    const auto r = check_conjecture(n, opts);
    Report rep;
    rep.doc = envelope("conjecture", nullptr);
    rep.doc["n"] = r.n;
    rep.doc["complete"] = r.complete;
    rep.doc["holds"] = r.holds;
    rep.doc["labeled_examined"] = r.labeled_examined;
    rep.doc["graphs_checked"] = r.graphs_checked;
    rep.doc["minimizer"] = class_json(r.minimizer);
    rep.doc["minimizer_is_balanced_kab"] = r.minimizer_is_balanced_kab;
    rep.doc["reference"] = r.reference;
    json ce = json::array();
    for (const auto& c : r.counterexamples) ce.push_back(class_json(c));
    rep.doc["counterexamples"] = ce;
    if (list_classes) {
        json cl = json::array();
        for (const auto& c : r.classes) cl.push_back(class_json(c));
        rep.doc["classes"] = cl;
    }
    rep.doc["chunks_total"] = r.chunks_total;
    rep.doc["chunks_resumed"] = r.chunks_resumed;
    rep.doc["threads"] = r.threads;
    rep.doc["seconds"] = r.seconds;

    std::ostringstream p;
    p << "n: " << r.n << (r.complete ? "" : "  (partial run)") << "\n";
    p << "labeled graphs examined: " << r.labeled_examined << "\n";
    p << "isomorphism classes: " << r.graphs_checked << "\n";
    p << "minimizer: " << r.minimizer.graph6 << "  S_Q = " << fmt4(r.minimizer.sq)
      << (r.minimizer_is_balanced_kab ? "  (balanced complete bipartite)" : "") << "\n";
    p << "reference S_Q(K_{" << n / 2 << "," << n - n / 2 << "}): " << fmt4(r.reference) << "\n";
    p << "counterexamples: " << r.counterexamples.size() << "\n";
    for (const auto& c : r.counterexamples) p << "  " << c.graph6 << "  " << fmt4(c.sq) << "\n";
    if (list_classes)
        for (const auto& c : r.classes) p << "  " << c.graph6 << "  " << fmt4(c.sq) << "\n";
    p << "conjecture " << (r.holds ? "holds" : (r.complete ? "fails" : "undecided")) << "\n";
    p << "chunks: " << r.chunks_total << " (" << r.chunks_resumed << " resumed)  threads: " << r.threads
      << "  seconds: " << std::fixed << std::setprecision(2) << r.seconds << "\n";
    rep.plain = p.str();

    std::ostringstream c;
    c << "graph6,sq,minimizer,counterexample\n";
    const auto& rows = list_classes ? r.classes : std::vector<GraphClass>{r.minimizer};
    for (const auto& g : rows) {
        bool is_ce = std::any_of(r.counterexamples.begin(), r.counterexamples.end(),
                                 [&](const GraphClass& x) { return x.key == g.key; });
        c << g.graph6 << "," << full(g.sq) << "," << (g.key == r.minimizer.key ? "true" : "false") << ","
          << (is_ce ? "true" : "false") << "\n";
    }
    rep.csv = c.str();
    return rep;
}

void emit(const Report& rep, const Output& out) {
    const std::string format = out.json_flag ? "json" : out.format;
    std::string text;
    if (format == "json") text = rep.doc.dump(2) + "\n";
    else if (format == "csv") text = rep.csv;
    else text = rep.plain;
    if (out.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out.out_path, std::ios::binary);
    if (!f) throw invalid_argument("cannot write " + out.out_path);
    f << text;
}

void apply_thread_env() {
    const char* env = std::getenv("SPREADLAB_THREADS");
    if (!env) return;
    char* end = nullptr;
    const long t = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || t < 1 || t > 4096)
        throw invalid_argument("SPREADLAB_THREADS must be a positive integer");
    omp_set_num_threads(static_cast<int>(t));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Distance and distance signless Laplacian spreads of graphs"};
    app.require_subcommand(1);
    Output out;
    app.add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"plain", "json", "csv"}))
        ->capture_default_str();
    app.add_flag("--json", out.json_flag, "same as --format json");
    app.add_option("--out", out.out_path, "write output to a file instead of stdout");

    InputFlags spec_in, bound_in;
    std::string matrix = "distance";
    auto* spectrum_cmd = app.add_subcommand("spectrum", "eigenvalues and spread");
    add_input_flags(spectrum_cmd, spec_in);
    spectrum_cmd->add_option("--matrix", matrix, "distance or dsl")
        ->check(CLI::IsMember({"distance", "dsl"}))
        ->capture_default_str();

    std::string method;
    int vertex = 1;
    auto* bound_cmd = app.add_subcommand("bound", "quotient lower bound on the spread");
    add_input_flags(bound_cmd, bound_in);
    bound_cmd
        ->add_option("--method", method, "bipartite-distance, bipartite-dsl, clique, diameter, cactus, legacy-2012")
        ->required()
        ->check(CLI::IsMember({"bipartite-distance", "bipartite-dsl", "clique", "diameter", "cactus", "legacy-2012"}));
    bound_cmd->add_option("--vertex", vertex, "vertex for legacy-2012 (1-indexed)")->capture_default_str();

    std::string only, table;
    auto* verify_cmd = app.add_subcommand("verify-tables", "recompute every published table cell");
    verify_cmd->add_option("--only", only, "single row, e.g. G2");
    verify_cmd->add_option("--table", table, "restrict to one table");

    int n = 0;
    ConjectureOptions copts;
    std::string checkpoint;
    std::uint64_t max_chunks = 0;
    bool list_classes = false;
    auto* conj_cmd = app.add_subcommand("conjecture", "exhaustive check over connected bipartite graphs");
    conj_cmd->add_option("--n", n, "order")->required();
    conj_cmd->add_option("--chunk-size", copts.chunk_size, "edge subsets per work unit")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    conj_cmd->add_option("--checkpoint", checkpoint, "resumable progress file");
    conj_cmd->add_option("--max-chunks", max_chunks, "stop after this many new chunks")->check(CLI::PositiveNumber);
    conj_cmd->add_flag("--list-classes", list_classes, "include every isomorphism class");

    for (auto* sub : {spectrum_cmd, bound_cmd, verify_cmd, conj_cmd}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? Exit::ok : Exit::usage;
    }

    try {
        apply_thread_env();
        if (spectrum_cmd->parsed()) {
            emit(cmd_spectrum(load_input(spec_in), parse_matrix_kind(matrix)), out);
        } else if (bound_cmd->parsed()) {
            auto in = load_input(bound_in);
            emit(method == "legacy-2012" ? cmd_legacy(in, vertex) : cmd_bound(in, parse_bound_method(method)), out);
        } else if (verify_cmd->parsed()) {
            bool all_pass = false;
            emit(cmd_verify_tables(only, table, all_pass), out);
            if (!all_pass) return Exit::verification;
        } else if (conj_cmd->parsed()) {
            if (!checkpoint.empty()) copts.checkpoint_path = checkpoint;
            if (max_chunks) copts.max_new_chunks = max_chunks;
            emit(cmd_conjecture(n, copts, list_classes), out);
        }
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Exit::domain;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Exit::usage;
    } catch (const invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Exit::usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Exit::usage;
    }
    return Exit::ok;
}
