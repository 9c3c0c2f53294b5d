#include "nkg/cli.hpp"

#include "nkg/embedding.hpp"
#include "nkg/extend.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace nkg::cli {

using json = nlohmann::ordered_json;
using nkg::to_string;

std::string_view to_string(Status status)
{
    switch (status) {
    case Status::ok: return "ok";
    case Status::fail: return "fail";
    case Status::not_applicable: return "not-applicable";
    case Status::cap_exceeded: return "cap-exceeded";
    }
    return "?";
}

OutputFormat parse_output_format(std::string_view name)
{
    if (name == "text")
        return OutputFormat::text;
    if (name == "json")
        return OutputFormat::json;
    if (name == "csv")
        return OutputFormat::csv;
    throw UsageError("unknown output format '" + std::string(name) + "'");
}

int OutputDocument::exit_code() const
{
    switch (status) {
    case Status::ok: return 0;
    case Status::fail: return 1;
    case Status::not_applicable: return 2;
    case Status::cap_exceeded: return 3;
    }
    return 1;
}

std::string OutputDocument::render(OutputFormat format) const
{
    switch (format) {
    case OutputFormat::text: return text;
    case OutputFormat::csv: return csv;
    case OutputFormat::json: {
        json doc;
        doc["status"] = to_string(status);
        if (!reason.empty())
            doc["reason"] = reason;
        doc["result"] = payload;
        return doc.dump(2) + "\n";
    }
    }
    return text;
}

IntRange parse_range(std::string_view text)
{
    auto number = [&](std::string_view part) {
        std::int64_t v = 0;
        auto [p, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc() || p != part.data() + part.size())
            throw UsageError("bad range '" + std::string(text) + "'");
        return v;
    };
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        const auto v = number(text);
        return {v, v};
    }
    IntRange r{number(text.substr(0, colon)), number(text.substr(colon + 1))};
    if (r.last < r.first)
        throw UsageError("empty range '" + std::string(text) + "'");
    return r;
}

namespace {

std::string read_source(const std::string& path, const char* what)
{
    if (path.empty())
        throw UsageError(std::string("missing --") + what);
    if (path == "-")
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot open " + std::string(what) + " file '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(in), {});
}

Graph load_graph(const CommandConfig& config)
{
    const std::string text = config.graph_text ? *config.graph_text : read_source(config.graph_path, "graph");
    return parse_graph(text, config.input_format);
}

std::int64_t need(const std::optional<std::int64_t>& value, const char* flag)
{
    if (!value)
        throw UsageError(std::string("missing --") + flag);
    return *value;
}

Surface need_surface(const CommandConfig& config)
{
    if (!config.surface)
        throw UsageError("missing --surface");
    return Surface::parse(*config.surface);
}

json to_json(const VertexSet& s)
{
    return s.members();
}

json to_json(const Matching& m)
{
    json out = json::array();
    for (const Edge& e : m.edges)
        out.push_back({e.u, e.v});
    return out;
}

OutputDocument cap_document(const std::string& why)
{
    OutputDocument doc;
    doc.status = Status::cap_exceeded;
    doc.reason = why;
    doc.payload = json::object();
    doc.text = "cap exceeded: " + why + "\n";
    doc.csv = "status,reason\ncap-exceeded," + why + "\n";
    return doc;
}

}  // namespace

// ---- formula -----------------------------------------------------------------------

OutputDocument run_formula(const CommandConfig& config)
{
    std::int64_t value = 0;
    std::string expression;
    json params;
    const std::string& f = config.formula;
    if (f == "mu-nk") {
        const auto n = need(config.n, "n");
        if (n < 1)
            throw UsageError("mu-nk needs --n >= 1 (use mu-ext for n = 0)");
        const Surface s = need_surface(config);
        value = mu_nk(n, s);
        params["n"] = n;
        params["surface"] = s.name();
        expression = s.is_sphere() ? "max(0, 3 - ceil(n/2))" : "max(0, floor((7 - 2n + sqrt(49 - 24 chi)) / 4))";
    } else if (f == "mu-ext") {
        const Surface s = need_surface(config);
        value = mu_extendability(s);
        params["surface"] = s.name();
        expression = s.is_sphere() ? "3" : "2 + floor(sqrt(4 - 2 chi))";
    } else if (f == "rho") {
        const Surface s = need_surface(config);
        value = rho(s);
        params["surface"] = s.name();
        expression = s.is_sphere() ? "5" : "floor((5 + sqrt(49 - 24 chi)) / 2)";
    } else if (f == "genus-nk") {
        const auto n = need(config.n, "n");
        const auto k = need(config.k, "k");
        if (n < 1 || k < 0)
            throw UsageError("genus-nk needs --n >= 1 and --k >= 0");
        value = genus_nk(n, k, !config.nonorientable);
        params["n"] = n;
        params["k"] = k;
        params["orientable"] = !config.nonorientable;
        expression = n + 2 * k <= 4 ? (config.nonorientable ? "1" : "0")
                                    : (config.nonorientable ? "ceil((n+2k-1)(n+2k-2)/6)" : "ceil((n+2k-1)(n+2k-2)/12)");
    } else if (f == "kn-genus") {
        const auto n = need(config.n, "n");
        if (n < 3)
            throw UsageError("kn-genus needs --n >= 3");
        value = complete_graph_genus(n, !config.nonorientable);
        params["n"] = n;
        params["orientable"] = !config.nonorientable;
        expression = config.nonorientable ? (n == 7 ? "3 (K_7 exception)" : "ceil((n-3)(n-4)/6)")
                                          : "ceil((n-3)(n-4)/12)";
    } else {
        throw UsageError("unknown formula '" + f + "' (mu-nk, mu-ext, rho, genus-nk, kn-genus)");
    }
    OutputDocument doc;
    doc.payload["formula"] = f;
    for (auto& [key, v] : params.items())
        doc.payload[key] = v;
    doc.payload["expression"] = expression;
    doc.payload["value"] = value;
    doc.text = std::to_string(value) + "\n";
    doc.csv = "formula,value\n" + f + "," + std::to_string(value) + "\n";
    return doc;
}

// ---- table -------------------------------------------------------------------------

namespace {

std::string table_title(const FormulaTable& table)
{
    const TableSpec& s = table.spec;
    std::string what;
    std::string column;
    switch (s.kind) {
    case TableKind::genus_orientable: what = "g(n,k)"; column = "k"; break;
    case TableKind::genus_nonorientable: what = "g~(n,k)"; column = "k"; break;
    case TableKind::mu_orientable: what = "mu(n,S_g)"; column = "g"; break;
    case TableKind::mu_nonorientable: what = "mu(n,N_g)"; column = "g"; break;
    }
    return "# " + what + " for n = " + std::to_string(s.rows.first) + ".." + std::to_string(s.rows.last) + ", " +
           column + " = " + std::to_string(s.columns.first) + ".." + std::to_string(s.columns.last);
}

std::string corner_label(TableKind kind)
{
    return (kind == TableKind::genus_orientable || kind == TableKind::genus_nonorientable) ? "n\\k" : "n\\g";
}

}  // namespace

std::string render_table_text(const FormulaTable& table)
{
    const TableSpec& s = table.spec;
    const std::string corner = corner_label(s.kind);
    std::size_t first_width = corner.size();
    for (std::int64_t n = s.rows.first; n <= s.rows.last; ++n)
        first_width = std::max(first_width, std::to_string(n).size());
    std::size_t width = 1;
    for (std::int64_t c = s.columns.first; c <= s.columns.last; ++c)
        width = std::max(width, std::to_string(c).size());
    for (auto v : table.cells)
        width = std::max(width, std::to_string(v).size());

    auto pad = [](const std::string& text, std::size_t w) { return std::string(w - text.size(), ' ') + text; };
    std::string out = table_title(table) + "\n";
    out += corner + std::string(first_width - corner.size(), ' ');
    for (std::int64_t c = s.columns.first; c <= s.columns.last; ++c)
        out += " " + pad(std::to_string(c), width);
    out += "\n";
    for (std::int64_t n = s.rows.first; n <= s.rows.last; ++n) {
        const std::string label = std::to_string(n);
        out += label + std::string(first_width - label.size(), ' ');
        for (std::int64_t c = s.columns.first; c <= s.columns.last; ++c)
            out += " " + pad(std::to_string(table.at(n, c)), width);
        out += "\n";
    }
    return out;
}

std::string render_table_csv(const FormulaTable& table)
{
    const TableSpec& s = table.spec;
    std::string out = "n";
    for (std::int64_t c = s.columns.first; c <= s.columns.last; ++c)
        out += "," + std::to_string(c);
    out += "\n";
    for (std::int64_t n = s.rows.first; n <= s.rows.last; ++n) {
        out += std::to_string(n);
        for (std::int64_t c = s.columns.first; c <= s.columns.last; ++c)
            out += "," + std::to_string(table.at(n, c));
        out += "\n";
    }
    return out;
}

OutputDocument run_table(const CommandConfig& config)
{
    TableKind kind;
    if (config.table == "genus")
        kind = config.nonorientable ? TableKind::genus_nonorientable : TableKind::genus_orientable;
    else if (config.table == "mu")
        kind = config.nonorientable ? TableKind::mu_nonorientable : TableKind::mu_orientable;
    else
        throw UsageError("table must be 'genus' or 'mu'");
    TableSpec spec = TableSpec::defaults(kind);
    if (config.rows)
        spec.rows = *config.rows;
    if (config.columns)
        spec.columns = *config.columns;
    try {
        spec.validate();
    } catch (const FormulaError& e) {
        throw UsageError(e.what());
    }
    const FormulaTable table = emit_table(spec);

    OutputDocument doc;
    doc.payload["table"] = to_string(kind);
    doc.payload["rows"] = {spec.rows.first, spec.rows.last};
    doc.payload["columns"] = {spec.columns.first, spec.columns.last};
    json grid = json::array();
    for (std::int64_t n = spec.rows.first; n <= spec.rows.last; ++n) {
        json row = json::array();
        for (std::int64_t c = spec.columns.first; c <= spec.columns.last; ++c)
            row.push_back(table.at(n, c));
        grid.push_back(row);
    }
    doc.payload["cells"] = grid;
    doc.text = render_table_text(table);
    doc.csv = render_table_csv(table);

    if (config.check_duality) {
        if (kind != TableKind::mu_orientable && kind != TableKind::mu_nonorientable)
            throw UsageError("--check-duality applies to mu tables");
        const DualityReport report = check_duality(spec);
        doc.payload["duality"] = {{"holds", report.holds}, {"cells_checked", report.cells_checked}};
        if (report.holds) {
            doc.text += "duality holds (" + std::to_string(report.cells_checked) + " cells)\n";
        } else {
            doc.status = Status::fail;
            doc.reason = "closed form and table inversion disagree at n=" + std::to_string(report.first_bad_n) +
                         ", genus=" + std::to_string(report.first_bad_genus);
            doc.text += "duality FAILS: " + doc.reason + "\n";
        }
    }
    return doc;
}

// ---- check -------------------------------------------------------------------------

OutputDocument run_check(const CommandConfig& config)
{
    const Graph g = load_graph(config);
    const DeciderOptions opts{config.cap, config.jobs};
    int n = 0;
    int k = 0;
    std::string label;
    if (config.property == "extendable") {
        k = static_cast<int>(need(config.k, "k"));
        label = std::to_string(k) + "-extendable";
    } else if (config.property == "factor-critical") {
        n = static_cast<int>(need(config.n, "n"));
        label = std::to_string(n) + "-factor-critical";
    } else if (config.property == "nk") {
        n = static_cast<int>(need(config.n, "n"));
        k = static_cast<int>(need(config.k, "k"));
        label = "(" + std::to_string(n) + "," + std::to_string(k) + ")-graph";
    } else {
        throw UsageError("property must be extendable, factor-critical or nk");
    }
    if (n < 0 || k < 0)
        throw UsageError("--n and --k must be nonnegative");

    Verdict verdict;
    try {
        if (config.property == "extendable")
            verdict = is_k_extendable(g, k, opts);
        else if (config.property == "factor-critical")
            verdict = is_n_factor_critical(g, n, opts);
        else
            verdict = is_nk_graph(g, n, k, opts);
    } catch (const CapExceeded& e) {
        return cap_document(e.what());
    }

    OutputDocument doc;
    doc.payload["property"] = label;
    doc.payload["graph6"] = to_graph6(g);
    doc.payload["order"] = g.order();
    doc.payload["edges"] = g.edge_count();
    doc.payload["verdict"] = to_string(verdict.status);
    doc.payload["work"] = verdict.work;
    doc.text = "property: " + label + "\n";
    doc.text += "graph: order " + std::to_string(g.order()) + ", " + std::to_string(g.edge_count()) + " edges\n";
    doc.text += "verdict: " + std::string(to_string(verdict.status)) + "\n";
    doc.csv = "property,verdict,deleted,matching,work\n";
    std::string deleted_csv;
    std::string matching_csv;
    if (verdict.status == VerdictStatus::fails) {
        doc.status = Status::fail;
        doc.reason = verdict.reason;
        const Witness& w = *verdict.witness;
        doc.payload["witness"] = {{"deleted", to_json(w.deleted)}, {"matching", to_json(w.matching)}};
        doc.text += "witness: S = " + to_string(w.deleted) + ", M = " + to_string(w.matching) + "\n";
        doc.text += "reason: " + verdict.reason + "\n";
        deleted_csv = to_string(w.deleted);
        matching_csv = to_string(w.matching);
    } else if (verdict.status == VerdictStatus::not_applicable) {
        doc.status = Status::not_applicable;
        doc.reason = verdict.reason;
        doc.text += "reason: " + verdict.reason + "\n";
    }
    doc.text += "work: " + std::to_string(verdict.work) + " subproblems\n";
    doc.csv += label + "," + std::string(to_string(verdict.status)) + ",\"" + deleted_csv + "\",\"" + matching_csv +
               "\"," + std::to_string(verdict.work) + "\n";

    if (config.suites && verdict.holds()) {
        std::vector<std::pair<std::string, CheckResult>> results;
        try {
            if (config.property == "extendable" && k >= 1) {
                results.emplace_back("extendability basics (k-1 extendable, (k+1)-connected)",
                                     check_plummer_basics(g, k, opts));
                results.emplace_back("bipartite-or-2k-connected dichotomy", check_louyu_dichotomy(g, k, opts));
            }
            if (config.property == "nk" && k >= 1 && n >= 1) {
                results.emplace_back("(n,k) basics ((n-2,k+1)-graph, delta >= kappa >= n+k+1)",
                                     check_nk_basics(g, n, k, opts));
                results.emplace_back("induced bipartite bound (<= |G|-n-1)", check_bipartite_bound(g, n, k, opts));
            }
            if (config.property == "nk" && k >= 1 && n == 0) {
                results.emplace_back("extendability basics (k-1 extendable, (k+1)-connected)",
                                     check_plummer_basics(g, k, opts));
                results.emplace_back("bipartite-or-2k-connected dichotomy", check_louyu_dichotomy(g, k, opts));
            }
        } catch (const CapExceeded& e) {
            return cap_document(e.what());
        }
        json suites = json::array();
        for (const auto& [name, r] : results) {
            suites.push_back({{"check", name}, {"status", to_string(r.status)}, {"detail", r.detail}});
            doc.text += "suite " + name + ": " + std::string(to_string(r.status)) + " (" + r.detail + ")\n";
            if (r.status == CheckStatus::failed) {
                doc.status = Status::fail;
                doc.reason = "structural check failed: " + name;
            }
        }
        doc.payload["suites"] = suites;
    }
    return doc;
}

// ---- embed -------------------------------------------------------------------------

namespace {

json report_to_json(const EmbeddingReport& report)
{
    json faces = json::array();
    for (const Face& f : report.faces)
        faces.push_back(f.walk);
    json phi = json::object();
    json ledger = json::array();
    for (Vertex v = 0; v < report.order; ++v) {
        const VertexLedger& e = report.ledger[static_cast<std::size_t>(v)];
        ledger.push_back({{"vertex", v}, {"degree", e.degree}, {"triangles", e.triangles}, {"phi", to_string(e.phi)}});
    }
    return {{"vertices", report.order},
            {"edges", report.edges},
            {"faces", report.face_count()},
            {"chi", report.chi},
            {"orientable", report.orientable},
            {"genus", report.genus()},
            {"face_walks", faces},
            {"ledger", ledger},
            {"control_points", report.control_points.members()}};
}

std::string report_to_text(const EmbeddingReport& report)
{
    std::string out;
    out += "V = " + std::to_string(report.order) + ", E = " + std::to_string(report.edges) +
           ", F = " + std::to_string(report.face_count()) + ", chi = " + std::to_string(report.chi) + ", " +
           (report.orientable ? "orientable, S" : "non-orientable, N") + std::to_string(report.genus()) + "\n";
    out += "faces:\n";
    for (const Face& f : report.faces) {
        out += "  (" + std::to_string(f.size()) + ")";
        for (Vertex v : f.walk)
            out += " " + std::to_string(v);
        out += "\n";
    }
    out += "euler contributions:\n";
    for (Vertex v = 0; v < report.order; ++v) {
        const VertexLedger& e = report.ledger[static_cast<std::size_t>(v)];
        out += "  " + std::to_string(v) + ": phi = " + to_string(e.phi) + " (degree " + std::to_string(e.degree) +
               ", triangle corners " + std::to_string(e.triangles) + ")\n";
    }
    out += "control points: " + to_string(report.control_points) + "\n";
    return out;
}

}  // namespace

OutputDocument run_embed(const CommandConfig& config)
{
    const Graph g = load_graph(config);
    const std::string rot_text =
        config.rotation_text ? *config.rotation_text : read_source(config.rotation_path, "rotation");
    const RotationSystem rs = parse_rotation_system(g, rot_text);
    const EmbeddingReport report = trace_faces(rs);

    OutputDocument doc;
    doc.payload = report_to_json(report);
    doc.text = report_to_text(report);
    doc.csv = "vertex,degree,triangles,phi,control_point\n";
    for (Vertex v = 0; v < report.order; ++v) {
        const VertexLedger& e = report.ledger[static_cast<std::size_t>(v)];
        doc.csv += std::to_string(v) + "," + std::to_string(e.degree) + "," + std::to_string(e.triangles) + "," +
                   to_string(e.phi) + "," + (report.control_points.contains(v) ? "1" : "0") + "\n";
    }

    if (report.order >= 3) {
        const ControlInequality c = control_inequality(report, designated_control_point(report));
        doc.payload["control_inequality"] = {{"vertex", c.vertex},
                                             {"lower", to_string(c.lower)},
                                             {"middle", to_string(c.middle)},
                                             {"upper", to_string(c.upper)},
                                             {"holds", c.holds()},
                                             {"tight", c.tight()}};
        doc.text += "control inequality at " + std::to_string(c.vertex) + ": " + to_string(c.lower) +
                    " <= " + to_string(c.middle) + " <= " + to_string(c.upper) + " (" +
                    (c.holds() ? "holds" : "VIOLATED") + (c.tight() ? ", tight" : "") + ")\n";
        if (!c.holds()) {
            doc.status = Status::fail;
            doc.reason = "control-point inequality violated";
        }
    }

    if (config.n || config.k) {
        const int n = static_cast<int>(need(config.n, "n"));
        const int k = static_cast<int>(need(config.k, "k"));
        DegreeBoundCheck check;
        try {
            check = verify_degree_bound(g, n, k, report, DeciderOptions{config.cap, config.jobs});
        } catch (const CapExceeded& e) {
            return cap_document(e.what());
        } catch (const EmbeddingError& e) {
            doc.status = Status::not_applicable;
            doc.reason = e.what();
            doc.payload["degree_bound"] = {{"status", "not-applicable"}, {"reason", e.what()}};
            doc.text += "degree bound (n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                        "): not applicable (" + e.what() + ")\n";
            return doc;
        }
        doc.payload["degree_bound"] = {{"n", n},
                                       {"k", k},
                                       {"holds", check.holds},
                                       {"tight_everywhere", check.tight_everywhere},
                                       {"required", check.required}};
        doc.text += "degree bound (n=" + std::to_string(n) + ", k=" + std::to_string(k) + "): " +
                    (check.holds ? "holds" : "VIOLATED at vertex " + std::to_string(check.first_violation)) +
                    (check.tight_everywhere ? ", tight at every vertex" : "") + "\n";
        if (!check.holds) {
            doc.status = Status::fail;
            doc.reason = "degree bound violated";
        }
    }
    return doc;
}

// ---- genus -------------------------------------------------------------------------

OutputDocument run_genus(const CommandConfig& config)
{
    const Graph g = load_graph(config);
    const bool orientable = !config.nonorientable;
    const bool any_mode = config.exhaustive || config.bound || config.search;
    const bool use_bound = config.bound || !any_mode;
    const bool use_search = config.search || !any_mode;

    OutputDocument doc;
    doc.payload["orientable"] = orientable;
    doc.text = std::string(orientable ? "orientable" : "non-orientable") + " genus of a graph with " +
               std::to_string(g.order()) + " vertices, " + std::to_string(g.edge_count()) + " edges\n";
    std::optional<std::int64_t> lower;
    std::optional<std::int64_t> upper;
    std::optional<RotationSystem> witness;

    if (config.exhaustive) {
        GenusResult r;
        try {
            r = min_genus_exhaustive(g, orientable, ExhaustiveCaps{15, 12, config.jobs});
        } catch (const CapExceeded& e) {
            return cap_document(e.what());
        }
        lower = upper = r.genus;
        witness = r.witness;
        doc.payload["exhaustive"] = r.genus;
        doc.text += "exhaustive minimum: " + std::to_string(r.genus) + "\n";
    }
    if (use_bound) {
        const auto lb = euler_genus_lower_bound(g, orientable);
        doc.payload["lower_bound"] = lb;
        doc.text += "euler lower bound: " + std::to_string(lb) + "\n";
        if (!lower)
            lower = lb;
    }
    if (use_search) {
        SearchBudget budget;
        budget.evaluations = config.budget;
        const GenusResult r = genus_upper_bound_search(g, orientable, budget, config.seed);
        doc.payload["search"] = {{"seed", config.seed}, {"budget", config.budget}, {"upper_bound", r.genus},
                                 {"evaluations", r.nodes}};
        doc.text += "search upper bound: " + std::to_string(r.genus) + " (seed " + std::to_string(config.seed) +
                    ", " + std::to_string(r.nodes) + " evaluations)\n";
        if (!upper || r.genus < *upper) {
            upper = r.genus;
            if (!config.exhaustive)
                witness = r.witness;
        }
    }

    if (lower && upper) {
        doc.payload["bracket"] = {*lower, *upper};
        doc.text += "genus in [" + std::to_string(*lower) + ", " + std::to_string(*upper) + "]" +
                    (*lower == *upper ? " => exact " + std::to_string(*lower) : "") + "\n";
        doc.payload["exact"] = *lower == *upper;
    } else if (lower) {
        doc.payload["bracket"] = {*lower, nullptr};
        doc.text += "genus >= " + std::to_string(*lower) + "\n";
    }

    if (g.is_complete() && g.order() >= 3) {
        const auto formula = complete_graph_genus(g.order(), orientable);
        doc.payload["complete_graph_formula"] = formula;
        doc.text += "complete graph K_" + std::to_string(g.order()) + ": formula value " + std::to_string(formula);
        if (use_bound) {
            const auto lb = euler_genus_lower_bound(g, orientable);
            doc.payload["lower_bound_tight"] = lb == formula;
            doc.text += lb == formula ? " (euler bound tight)" : " (euler bound " + std::to_string(lb) + " is not tight)";
        }
        doc.text += "\n";
    }

    if (witness) {
        const std::string rs = to_text(witness->normalized());
        doc.payload["witness"] = rs;
        if (!config.witness_path.empty()) {
            std::ofstream out(config.witness_path, std::ios::binary);
            if (!out)
                throw UsageError("cannot write witness file '" + config.witness_path + "'");
            out << rs;
            doc.text += "witness written to " + config.witness_path + "\n";
        } else {
            doc.text += "witness rotation system:\n" + rs;
        }
    }
    doc.csv = "orientable,lower,upper\n" + std::string(orientable ? "1" : "0") + "," +
              (lower ? std::to_string(*lower) : "") + "," + (upper ? std::to_string(*upper) : "") + "\n";
    return doc;
}

}  // namespace nkg::cli
