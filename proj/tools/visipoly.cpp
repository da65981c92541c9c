// Command-line front end: family generation, visibility polynomials
// (brute-force, closed-form, or auto), mutual-visibility numbers, maximal
// cq-visible families, separator queries, and closed-form verification
// against exhaustive enumeration.
//
// Exit codes: 0 success, 1 verification mismatch or internal failure,
// 2 invalid parameters or malformed input, 3 enumeration cap exceeded.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "visipoly/json_io.hpp"
#include "visipoly/visipoly.hpp"

namespace {

using namespace visipoly;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitCap = 3;

struct OutputSink {
    std::string path;  // empty = stdout

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out) throw validity_error("cannot open output file '" + path + "'");
        out << text;
    }
};

struct GraphInput {
    std::string in_path;
    std::string family_name;
    std::vector<int> params;

    Graph resolve() const {
        if (!in_path.empty() && !family_name.empty())
            throw validity_error("give either --in or --family, not both");
        if (!in_path.empty()) {
            std::ifstream in(in_path, std::ios::binary);
            if (!in) throw validity_error("cannot open input file '" + in_path + "'");
            std::stringstream buf;
            buf << in.rdbuf();
            return graph_from_json_string(buf.str());
        }
        if (family_name.empty())
            throw validity_error("an input graph is required: --in FILE or --family NAME P...");
        return build_family(parse_family());
    }

    FamilySpec parse_family() const {
        auto fam = family_from_name(family_name);
        if (!fam) throw validity_error("unknown family '" + family_name + "'");
        return FamilySpec{*fam, params};
    }

    bool is_family() const { return !family_name.empty(); }
};

void add_graph_input(CLI::App* cmd, GraphInput& input) {
    cmd->add_option("--in", input.in_path, "graph JSON file");
    cmd->add_option("--family", input.family_name, "family name (wheel, helm, ...)");
    cmd->add_option("params", input.params, "family parameters");
}

struct EngineFlags {
    int max_n = kDefaultEnumerationCap;
    int threads = 0;

    EnumerationOptions options() const { return EnumerationOptions{max_n, threads}; }
};

void add_engine_flags(CLI::App* cmd, EngineFlags& flags) {
    cmd->add_option("--max-n", flags.max_n,
                    "enumeration cap on vertex count (hard cap " +
                        std::to_string(kHardEnumerationCap) + ")")
        ->capture_default_str();
    cmd->add_option("--threads", flags.threads, "worker threads (0 = all cores)")
        ->capture_default_str();
}

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

std::string graph_label(const Graph& g) {
    return g.family() ? g.family()->to_string() : "custom";
}

ordered_json graph_summary(const Graph& g) {
    ordered_json j;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    if (g.family()) {
        j["family"] = family_name(g.family()->name);
        j["params"] = g.family()->params;
    } else {
        j["family"] = nullptr;
    }
    return j;
}

// ---------------------------------------------------------------- gen ----

int run_gen(const GraphInput& input, const OutputSink& out) {
    Graph g = build_family(input.parse_family());
    out.write(graph_to_json_string(g));
    return kExitOk;
}

// --------------------------------------------------------------- poly ----

struct PolyResult {
    Polynomial polynomial;
    std::string method;
    std::string notes;
};

PolyResult compute_polynomial(const Graph& g, const std::string& method,
                              const EnumerationOptions& opts) {
    if (method == "brute")
        return {visibility_polynomial_bruteforce(g, opts), "brute", ""};
    if (method == "closed") {
        if (!g.family())
            throw validity_error("--method closed requires a family-tagged graph");
        ClosedFormResult r = closed_form_dispatch(*g.family(), opts);
        return {r.polynomial, "closed", r.notes};
    }
    if (method == "auto") {
        if (g.family()) {
            try {
                ClosedFormResult r = closed_form_dispatch(*g.family(), opts);
                return {r.polynomial, "closed", r.notes};
            } catch (const validity_error&) {
                // no closed form in range; fall back to enumeration
            }
        }
        return {visibility_polynomial_bruteforce(g, opts), "brute", ""};
    }
    throw validity_error("unknown method '" + method + "' (use brute, closed or auto)");
}

int run_poly(const GraphInput& input, const EngineFlags& flags, const std::string& method,
             const std::string& format, bool symbolic, const OutputSink& out) {
    Graph g = input.resolve();
    auto start = std::chrono::steady_clock::now();
    PolyResult r = compute_polynomial(g, method, flags.options());
    double wall = ms_since(start);

    std::string latex = r.polynomial.to_latex();
    if (symbolic) {
        if (r.method != "closed")
            throw validity_error("--symbolic requires a closed-form result");
        latex = symbolic_latex(*g.family());
    }

    std::ostringstream text;
    if (format == "human") {
        text << "graph: " << graph_label(g) << " (n=" << g.vertex_count()
             << ", m=" << g.edge_count() << ")\n"
             << "method: " << r.method << "\n"
             << "polynomial: " << r.polynomial.to_human() << "\n"
             << "latex: " << latex << "\n"
             << "json: " << polynomial_to_json(r.polynomial).dump() << "\n"
             << "mu: " << r.polynomial.degree() << "\n";
        if (!r.notes.empty()) text << "notes: " << r.notes << "\n";
    } else if (format == "json") {
        ordered_json j;
        j["graph"] = graph_summary(g);
        j["method"] = r.method;
        j["polynomial"] = polynomial_to_json(r.polynomial);
        j["human"] = r.polynomial.to_human();
        j["latex"] = latex;
        j["mu"] = r.polynomial.degree();
        if (!r.notes.empty()) j["notes"] = r.notes;
        text << j.dump(2) << "\n";
    } else if (format == "latex") {
        text << latex << "\n";
    } else {
        throw validity_error("unknown format '" + format + "' (use human, json or latex)");
    }
    out.write(text.str());
    std::cerr << "computed in " << wall << " ms\n";
    return kExitOk;
}

// ----------------------------------------------------------------- mu ----

int run_mu(const GraphInput& input, const EngineFlags& flags, const std::string& format,
           const OutputSink& out) {
    Graph g = input.resolve();
    auto start = std::chrono::steady_clock::now();
    auto [size, witness] = mu_with_witness(g, flags.options());
    double wall = ms_since(start);

    std::ostringstream text;
    if (format == "json") {
        ordered_json j;
        j["graph"] = graph_summary(g);
        j["mu"] = size;
        j["witness"] = witness.to_vector();
        text << j.dump(2) << "\n";
    } else {
        text << "graph: " << graph_label(g) << " (n=" << g.vertex_count()
             << ", m=" << g.edge_count() << ")\n"
             << "mu: " << size << "\n"
             << "witness: " << witness.to_string() << "\n";
    }
    out.write(text.str());
    std::cerr << "computed in " << wall << " ms\n";
    return kExitOk;
}

// -------------------------------------------------------------- gamma ----

int run_gamma(const GraphInput& input, const EngineFlags& flags, const std::vector<int>& q_list,
              const std::string& format, const OutputSink& out) {
    Graph g = input.resolve();
    VertexSet q;
    for (int v : q_list) {
        if (v < 0 || v >= g.vertex_count())
            throw validity_error("q vertex " + std::to_string(v) + " out of range");
        q = q.with(v);
    }
    CqFamily fam = maximal_absolute_cq_visible(g, g.distances(), q, flags.options());

    std::ostringstream text;
    if (format == "json") {
        ordered_json j;
        j["graph"] = graph_summary(g);
        j["q"] = q.to_vector();
        ordered_json members = ordered_json::array();
        for (VertexSet m : fam.members) members.push_back(m.to_vector());
        j["members"] = std::move(members);
        j["pairwise_disjoint"] = fam.pairwise_disjoint;
        text << j.dump(2) << "\n";
    } else {
        text << "q: " << q.to_string() << "\n"
             << "members (" << fam.members.size() << "):\n";
        for (VertexSet m : fam.members) text << "  " << m.to_string() << "\n";
        text << "pairwise disjoint: " << (fam.pairwise_disjoint ? "yes" : "no") << "\n";
    }
    out.write(text.str());
    return kExitOk;
}

// ---------------------------------------------------------------- sep ----

int run_sep(const GraphInput& input, const std::vector<int>& pair, const std::vector<int>& a_list,
            const std::vector<int>& b_list, int vertex, const OutputSink& out) {
    Graph g = input.resolve();
    const DistanceMatrix& dist = g.distances();
    std::ostringstream text;

    if (!pair.empty()) {
        if (pair.size() != 2) throw validity_error("--pair takes exactly two vertices");
        int u = pair[0], v = pair[1];
        VertexSet seps;
        for (int s = 0; s < g.vertex_count(); ++s)
            if (s != u && s != v && is_shortest_separator(g, dist, s, u, v))
                seps = seps.with(s);
        text << "shortest-separators of (" << u << "," << v << "): " << seps.to_string() << "\n";
    } else if (!a_list.empty() || !b_list.empty()) {
        VertexSet a, b;
        for (int v : a_list) a = a.with(v);
        for (int v : b_list) b = b.with(v);
        if (vertex >= 0) {
            bool is_sep = is_set_separator(g, dist, vertex, a, b);
            text << "vertex " << vertex << " is" << (is_sep ? "" : " not")
                 << " a set-separator for " << a.to_string() << " vs " << b.to_string() << "\n";
        } else {
            VertexSet seps;
            for (int s = 0; s < g.vertex_count(); ++s)
                if (!a.contains(s) && !b.contains(s) && is_set_separator(g, dist, s, a, b))
                    seps = seps.with(s);
            text << "set-separators for " << a.to_string() << " vs " << b.to_string() << ": "
                 << seps.to_string() << "\n";
        }
    } else {
        text << "path-cut: " << path_cut(g, dist).to_string() << "\n";
    }
    out.write(text.str());
    return kExitOk;
}

// ------------------------------------------------------------- verify ----

struct Range {
    int lo = 0, hi = 0;
};

Range parse_range(const std::string& token) {
    auto dots = token.find("..");
    try {
        if (dots == std::string::npos) {
            int v = std::stoi(token);
            return {v, v};
        }
        int lo = std::stoi(token.substr(0, dots));
        int hi = std::stoi(token.substr(dots + 2));
        if (lo > hi) throw validity_error("empty range '" + token + "'");
        return {lo, hi};
    } catch (const validity_error&) {
        throw;
    } catch (const std::exception&) {
        throw validity_error("cannot parse range '" + token + "' (expected A..B)");
    }
}

struct VerifyRow {
    std::vector<int> params;
    Polynomial closed;
    Polynomial brute;
    bool match = false;
    int first_mismatch = -1;
    std::string notes;
};

VerifyRow verify_one(const FamilySpec& spec, const EnumerationOptions& opts) {
    VerifyRow row;
    row.params = spec.params;
    ClosedFormResult closed = closed_form_dispatch(spec, opts);
    row.closed = closed.polynomial;
    row.notes = closed.notes;
    row.brute = visibility_polynomial_bruteforce(build_family(spec), opts);
    row.match = row.closed == row.brute;
    if (!row.match) {
        int top = std::max(row.closed.degree(), row.brute.degree());
        for (int k = 0; k <= top; ++k)
            if (!(row.closed.coeff(k) == row.brute.coeff(k))) {
                row.first_mismatch = k;
                break;
            }
    }
    return row;
}

int run_verify(const std::string& family_name_str, std::vector<std::string> range_tokens,
               const EngineFlags& flags, const std::string& format, const OutputSink& out) {
    auto fam = family_from_name(family_name_str);
    if (!fam) throw validity_error("unknown family '" + family_name_str + "'");

    // accept "3..5 x 3..5", "3..5x3..5" or a single range / value
    std::vector<std::string> cleaned;
    for (std::string& t : range_tokens) {
        auto split = t.find('x');
        if (split != std::string::npos && t.find("..") != std::string::npos) {
            cleaned.push_back(t.substr(0, split));
            cleaned.push_back(t.substr(split + 1));
        } else if (t != "x") {
            cleaned.push_back(t);
        }
    }

    std::vector<FamilySpec> specs;
    if (*fam == Family::Bow) {
        Range r1{3, 6}, r2{3, 6};
        if (cleaned.size() == 2) {
            r1 = parse_range(cleaned[0]);
            r2 = parse_range(cleaned[1]);
        } else if (cleaned.size() == 1) {
            r1 = r2 = parse_range(cleaned[0]);
        } else if (!cleaned.empty()) {
            throw validity_error("bow verify takes at most two ranges");
        }
        for (int m = r1.lo; m <= r1.hi; ++m)
            for (int n = r2.lo; n <= r2.hi; ++n) specs.push_back({Family::Bow, {m, n}});
    } else {
        Range def;
        switch (*fam) {
            case Family::Wheel: def = {8, 12}; break;
            case Family::Helm: def = {8, 9}; break;
            case Family::Friendship: def = {1, 5}; break;
            case Family::Shell: def = {3, 12}; break;
            default:
                throw validity_error("no closed form to verify for family '" +
                                     family_name_str + "'");
        }
        if (cleaned.size() > 1) throw validity_error("expected a single range A..B");
        if (cleaned.size() == 1) def = parse_range(cleaned[0]);
        for (int n = def.lo; n <= def.hi; ++n) specs.push_back({*fam, {n}});
    }

    std::vector<VerifyRow> rows;
    bool all_match = true;
    for (const FamilySpec& spec : specs) {
        auto start = std::chrono::steady_clock::now();
        VerifyRow row = verify_one(spec, flags.options());
        std::cerr << spec.to_string() << ": " << (row.match ? "ok" : "MISMATCH") << " ("
                  << ms_since(start) << " ms)\n";
        all_match = all_match && row.match;
        rows.push_back(std::move(row));
    }

    std::ostringstream text;
    if (format == "json") {
        ordered_json j;
        j["family"] = family_name_str;
        ordered_json results = ordered_json::array();
        for (const VerifyRow& row : rows) {
            ordered_json r;
            r["params"] = row.params;
            r["match"] = row.match;
            r["closed"] = polynomial_to_json(row.closed);
            r["brute"] = polynomial_to_json(row.brute);
            if (!row.match) r["first_mismatch_power"] = row.first_mismatch;
            results.push_back(std::move(r));
        }
        j["results"] = std::move(results);
        j["all_match"] = all_match;
        if (!rows.empty() && !rows.front().notes.empty()) j["notes"] = rows.front().notes;
        text << j.dump(2) << "\n";
    } else {
        text << "| " << family_name_str << " | closed form | expanded | matches enumeration |\n";
        text << "|---|---|---|---|\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const VerifyRow& row = rows[i];
            std::string params;
            for (std::size_t k = 0; k < row.params.size(); ++k)
                params += (k ? "," : "") + std::to_string(row.params[k]);
            std::string formula;
            try {
                formula = symbolic_latex(specs[i]);
            } catch (const validity_error&) {
                formula = "(semi-closed)";
            }
            text << "| " << params << " | " << formula << " | " << row.closed.to_human()
                 << " | " << (row.match ? "yes" : "NO") << " |\n";
            if (!row.match)
                text << "mismatch at x^" << row.first_mismatch << ": closed "
                     << row.closed.coeff(row.first_mismatch).to_string() << ", enumeration "
                     << row.brute.coeff(row.first_mismatch).to_string() << "\n";
        }
        if (!rows.empty() && !rows.front().notes.empty())
            text << "\nnotes: " << rows.front().notes << "\n";
    }
    out.write(text.str());
    return all_match ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact mutual-visibility polynomials on small graphs"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "construct a family graph and emit canonical JSON");
    GraphInput gen_input;
    OutputSink gen_out;
    gen->add_option("family", gen_input.family_name, "family name")->required();
    gen->add_option("params", gen_input.params, "family parameters");
    gen->add_option("--out", gen_out.path, "output file (default stdout)");

    // poly
    auto* poly = app.add_subcommand("poly", "compute the visibility polynomial");
    GraphInput poly_input;
    EngineFlags poly_flags;
    OutputSink poly_out;
    std::string poly_method = "auto";
    std::string poly_format = "human";
    bool poly_symbolic = false;
    add_graph_input(poly, poly_input);
    add_engine_flags(poly, poly_flags);
    poly->add_option("--method", poly_method, "brute | closed | auto")->capture_default_str();
    poly->add_option("--format", poly_format, "human | json | latex")->capture_default_str();
    poly->add_flag("--symbolic", poly_symbolic, "keep (1+x)^k unexpanded in the latex form");
    poly->add_option("--out", poly_out.path, "output file (default stdout)");

    // mu
    auto* mu_cmd = app.add_subcommand("mu", "mutual-visibility number with a witness set");
    GraphInput mu_input;
    EngineFlags mu_flags;
    OutputSink mu_out;
    std::string mu_format = "human";
    add_graph_input(mu_cmd, mu_input);
    add_engine_flags(mu_cmd, mu_flags);
    mu_cmd->add_option("--format", mu_format, "human | json")->capture_default_str();
    mu_cmd->add_option("--out", mu_out.path, "output file (default stdout)");

    // gamma
    auto* gamma = app.add_subcommand("gamma", "maximal absolute cq-visible family of q");
    GraphInput gamma_input;
    EngineFlags gamma_flags;
    OutputSink gamma_out;
    std::vector<int> gamma_q;
    std::string gamma_format = "human";
    add_graph_input(gamma, gamma_input);
    add_engine_flags(gamma, gamma_flags);
    gamma->add_option("--q", gamma_q, "comma-separated vertex list")
        ->required()
        ->delimiter(',');
    gamma->add_option("--format", gamma_format, "human | json")->capture_default_str();
    gamma->add_option("--out", gamma_out.path, "output file (default stdout)");

    // sep
    auto* sep = app.add_subcommand("sep", "separator queries (path-cut by default)");
    GraphInput sep_input;
    OutputSink sep_out;
    std::vector<int> sep_pair, sep_a, sep_b;
    int sep_vertex = -1;
    add_graph_input(sep, sep_input);
    sep->add_option("--pair", sep_pair, "list all shortest-separators of a pair u,v")
        ->delimiter(',');
    sep->add_option("--a", sep_a, "first vertex set")->delimiter(',');
    sep->add_option("--b", sep_b, "second vertex set")->delimiter(',');
    sep->add_option("--vertex", sep_vertex, "test this vertex as a set-separator for --a/--b");
    sep->add_option("--out", sep_out.path, "output file (default stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "check closed forms against enumeration");
    EngineFlags verify_flags;
    OutputSink verify_out;
    std::string verify_family;
    std::vector<std::string> verify_ranges;
    std::string verify_format = "human";
    verify->add_option("family", verify_family, "family with a closed form")->required();
    verify->add_option("range", verify_ranges, "parameter range, e.g. 8..12 (bow: 3..5 x 3..5)");
    add_engine_flags(verify, verify_flags);
    verify->add_option("--format", verify_format, "human | json")->capture_default_str();
    verify->add_option("--out", verify_out.path, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return run_gen(gen_input, gen_out);
        if (poly->parsed())
            return run_poly(poly_input, poly_flags, poly_method, poly_format, poly_symbolic,
                            poly_out);
        if (mu_cmd->parsed()) return run_mu(mu_input, mu_flags, mu_format, mu_out);
        if (gamma->parsed())
            return run_gamma(gamma_input, gamma_flags, gamma_q, gamma_format, gamma_out);
        if (sep->parsed())
            return run_sep(sep_input, sep_pair, sep_a, sep_b, sep_vertex, sep_out);
        if (verify->parsed())
            return run_verify(verify_family, verify_ranges, verify_flags, verify_format,
                              verify_out);
    } catch (const cap_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const validity_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitMismatch;
    }
    return kExitOk;
}
