#include "stretchlab/cli.hpp"

#include "stretchlab/repro.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

namespace stretchlab {

namespace {

struct Options {
    std::string tol_text;
    std::string format = "json";
    std::string out;
    unsigned threads = 1;

    std::string poly;
    std::string matrix;
    std::string file;
    std::string track;

    unsigned n = 0;
    unsigned max_entry = 1;
    std::string forms = "all";
    std::string report;
    std::string scan;
    std::string d_range = "0..5";

    unsigned k = 0;
    std::string table;

    std::string repro;
};

struct Emission {
    Json json;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    int code = 0;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Json json_input(const std::string& inline_text, const std::string& path, const std::string& what) {
    if (!inline_text.empty() && !path.empty()) throw InputError(what + ": give inline JSON or --file, not both");
    if (!inline_text.empty()) return parse_json_text(inline_text, what);
    if (!path.empty()) return parse_json_text(read_file(path), path);
    throw InputError(what + ": no input given");
}

std::pair<unsigned, unsigned> parse_range(const std::string& text, const std::string& flag) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) throw InputError(flag + ": expected lo..hi");
    try {
        std::size_t a = 0, b = 0;
        const std::string lo = text.substr(0, dots), hi = text.substr(dots + 2);
        const unsigned long l = std::stoul(lo, &a), h = std::stoul(hi, &b);
        if (a != lo.size() || b != hi.size() || l > h || h > 100000) throw std::invalid_argument(flag);
        return {static_cast<unsigned>(l), static_cast<unsigned>(h)};
    } catch (const std::logic_error&) {
        throw InputError(flag + ": expected lo..hi with lo <= hi");
    }
}

std::optional<RootEnclosure> try_largest_root(const IntPolynomial& p, const mpq_class& tol) {
    try {
        return largest_real_root(p, tol);
    } catch (const std::domain_error&) {
        return std::nullopt;
    }
}

Emission run_classify(const Options& o, const mpq_class& tol) {
    const IntPolynomial p = parse_polynomial(json_input(o.poly, o.file, "--poly"));
    if (p.degree() < 1) throw InputError("coeffs: polynomial must have positive degree");
    Emission e;
    e.json = Json{{"polynomial", to_json(p)}};
    const Json spectral = to_json(classify(p));
    for (const auto& [key, value] : spectral.items()) e.json[key] = value;
    const auto root = try_largest_root(p, tol);
    e.json["largest_root"] = root ? to_json(*root) : Json(nullptr);
    return e;
}

Emission run_matrix(const Options& o, const mpq_class& tol) {
    const IntMatrix a = parse_matrix(json_input(o.matrix, o.file, "--matrix"));
    if (a.size() == 0) throw InputError("rows: matrix is empty");
    Emission e;
    e.json = to_json(witness_check(a, tol));
    return e;
}

Emission run_curve_graph(const Options& o, const mpq_class& tol) {
    const IntMatrix a = parse_matrix(json_input(o.matrix, o.file, "--matrix"));
    if (!a.is_nonnegative()) throw InputError("rows: curve graph needs a nonnegative matrix");
    const CurveGraph g = curve_graph(a);
    const IntPolynomial q = clique_polynomial(g);
    Json cycles = Json::array();
    Json weights = Json::array();
    for (const SimpleCycle& c : g.cycles) {
        cycles.push_back({{"vertices", c.vertices}, {"edge_choice", c.edge_choice}, {"weight", c.weight()}});
        weights.push_back(c.weight());
    }
    Json edges = Json::array();
    for (const auto& [i, j] : g.edges) edges.push_back({i, j});
    Json growth = nullptr;
    try {
        growth = to_json(growth_rate(g, tol));
    } catch (const std::domain_error&) {
    }
    const Shape s = curve_graph_shape(g);
    const bool identity = verify_clique_identity(a);
    Emission e;
    e.json = Json{{"cycles", cycles},
                  {"weights", weights},
                  {"edges", edges},
                  {"clique_poly", to_json(q)},
                  {"growth_rate", growth},
                  {"shape", {{"kind", shape_name(s.kind)}, {"weights", s.weights}}},
                  {"identity_ok", identity}};
    e.code = identity ? 0 : 1;
    return e;
}

std::string decimal(const Interval& i) { return to_decimal(i.mid()); }

Emission run_family(const Options& o, const mpq_class& tol) {
    if (o.n == 0) throw InputError("--n: required and positive");
    Emission e;
    if (!o.scan.empty()) {
        ScanBranch b;
        try {
            b = parse_branch(o.scan);
        } catch (const std::invalid_argument&) {
            throw InputError("--scan: unknown branch '" + o.scan + "'");
        }
        const auto [lo, hi] = parse_range(o.d_range, "--d");
        const ScanResult r = monotonicity_scan(b, o.n, lo, hi, tol);
        e.json = to_json(r);
        e.header = {"params", "polynomial", "largest_root", "normalized"};
        for (const ScanPoint& p : r.points) {
            std::string params;
            for (unsigned v : p.params) params += (params.empty() ? "" : " ") + std::to_string(v);
            e.rows.push_back({params, p.polynomial.to_string(), decimal(p.root.interval()), decimal(p.normalized)});
        }
        e.code = r.strictly_increasing ? 0 : 1;
        return e;
    }
    std::vector<FamilyTag> tags;
    if (o.forms == "all") {
        tags = all_families();
    } else {
        std::stringstream list(o.forms);
        for (std::string name; std::getline(list, name, ',');) {
            try {
                tags.push_back(parse_family(name));
            } catch (const std::invalid_argument&) {
                throw InputError("--forms: unknown form '" + name + "'");
            }
        }
    }
    const auto reports = enumerate_admissible(o.n, tags, tol);
    Json list = Json::array();
    for (const AdmissibilityReport& r : reports) {
        list.push_back(to_json(r));
        e.rows.push_back({describe(r.form), r.polynomial.to_string(), decimal(r.root->interval()), decimal(*r.normalized)});
    }
    e.header = {"form", "polynomial", "largest_root", "normalized"};
    Json forms = Json::array();
    for (FamilyTag t : tags) forms.push_back(family_name(t));
    std::optional<std::strong_ordering> versus;
    if (!reports.empty()) versus = compare_power_to_silver_square(*reports.front().root, o.n);
    e.json = Json{{"n", o.n},
                  {"forms", forms},
                  {"admissible", list},
                  {"minimum", reports.empty() ? Json(nullptr) : list.front()},
                  {"versus_bound", versus ? Json(ordering_name(*versus)) : Json(nullptr)},
                  {"bound", silver_square_json(tol)},
                  {"scope", "finite slice: degree " + std::to_string(o.n) + " only"}};
    if (o.n >= 4 && versus == std::strong_ordering::less) e.code = 1;
    return e;
}

Emission run_sharpness(const Options& o, const mpq_class& tol) {
    Emission e;
    if (!o.table.empty()) {
        const auto [lo, hi] = parse_range(o.table, "--table");
        if (lo < 2) throw InputError("--table: k starts at 2");
        Json rows = Json::array();
        bool all_above = true;
        for (unsigned k = lo; k <= hi; ++k) {
            const ConvergenceRow r = convergence_row(k, tol);
            const bool above = compare_power_to_silver_square(r.root, 2 * k) == std::strong_ordering::greater;
            all_above = all_above && above;
            Json j = to_json(r);
            j["p"] = sharpness_p(k);
            j["q"] = sharpness_q(k);
            j["above_bound"] = above;
            rows.push_back(j);
            e.rows.push_back({std::to_string(k), std::to_string(sharpness_p(k)), std::to_string(sharpness_q(k)),
                              decimal(r.root.interval()), decimal(r.normalized), j["residual"].get<std::string>(),
                              above ? "true" : "false"});
        }
        e.header = {"k", "p", "q", "largest_root", "normalized", "residual", "above_bound"};
        e.json = Json{{"rows", rows},
                      {"all_above_bound", all_above},
                      {"limit", silver_square_json(tol)},
                      {"scope", "finite slice: k = " + o.table}};
        e.code = all_above ? 0 : 1;
        return e;
    }
    if (o.k < 2) throw InputError("--k: need k >= 2");
    const SharpnessExample ex = build_example(o.k, tol);
    e.json = to_json(ex);
    e.code = ex.ok() ? 0 : 1;
    return e;
}

Emission run_traintrack(const Options& o) {
    const TrainTrack t = parse_track(json_input(o.track, o.file, "--track"));
    const WeightSpace ws = weight_space(t);
    Json basis = Json::array();
    for (const auto& b : ws.basis) {
        Json v = Json::array();
        for (const auto& x : b) v.push_back(x.get_str());
        basis.push_back(v);
    }
    Json gram = Json::array();
    for (const auto& row : gram_matrix(t, ws)) {
        Json v = Json::array();
        for (const auto& x : row) v.push_back(x.get_str());
        gram.push_back(v);
    }
    Json comps = Json::array();
    for (const auto& c : boundary_components(t)) comps.push_back(to_json(c));
    const RadicalReport rad = radical(t);
    Emission e;
    e.json = Json{{"track", to_json(t)},
                  {"standardly_embedded", t.standardly_embedded()},
                  {"weight_space", {{"dimension", ws.dimension()}, {"basis", basis}}},
                  {"thurston_form", gram},
                  {"boundary_components", comps},
                  {"radical", to_json(rad)}};
    e.code = rad.contained ? 0 : 1;
    return e;
}

Emission run_search_cmd(const Options& o, const mpq_class& tol) {
    if (o.n == 0) throw InputError("--n: required and positive");
    SearchConfig cfg;
    cfg.n = o.n;
    cfg.max_entry = o.max_entry;
    cfg.threads = o.threads;
    cfg.tol = tol;
    const SearchResult r = run_search(cfg);
    Emission e;
    e.json = to_json(r);
    e.code = r.violations().empty() ? 0 : 1;
    return e;
}

Emission run_repro(const Options& o, const mpq_class& tol) {
    ReproOutcome r;
    if (o.repro == "thm-main") r = repro_thm_main(tol, o.threads);
    else if (o.repro == "thm-set") r = repro_thm_set(tol);
    else if (o.repro == "torus") r = repro_torus(tol);
    else if (o.repro == "monotonicity") r = repro_monotonicity(tol);
    else r = repro_low_degree(tol);
    Emission e;
    e.json = std::move(r.report);
    e.json["suite"] = o.repro;
    e.json["verdict"] = r.ok ? "PASS" : "FAIL";
    e.code = r.ok ? 0 : 1;
    return e;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

std::string render(const Emission& e, const std::string& format) {
    if (format == "text") return render_text(e.json);
    if (format == "csv") {
        if (e.header.empty()) throw InputError("--format: csv is only available for tabular reports");
        std::string s;
        auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) s += (i ? "," : "") + csv_field(cells[i]);
            s += '\n';
        };
        line(e.header);
        for (const auto& r : e.rows) line(r);
        return s;
    }
    return e.json.dump(2) + "\n";
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact spectral checks for integer matrices, polynomials and train tracks", "stretch-lab"};
    app.fallthrough();
    app.require_subcommand(1, 1);
    app.add_option("--tol", o.tol_text, "Enclosure width as a decimal, 1e-12 or p/q (default 2^-40)");
    app.add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--out", o.out, "Write the report to a file");
    app.add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1u, 1024u));

    auto* classify_cmd = app.add_subcommand("classify", "Classify an integer polynomial");
    classify_cmd->add_option("--poly", o.poly, "Polynomial JSON");
    classify_cmd->add_option("--file", o.file, "Polynomial JSON file");

    auto* matrix_cmd = app.add_subcommand("matrix", "Analyze an integer matrix");
    matrix_cmd->add_option("--matrix", o.matrix, "Matrix JSON");
    matrix_cmd->add_option("--file", o.file, "Matrix JSON file");
    matrix_cmd->add_flag("--analyze", "Full analysis (the default)");

    auto* curve_cmd = app.add_subcommand("curve-graph", "Curve graph and clique polynomial of a matrix");
    curve_cmd->add_option("--matrix", o.matrix, "Matrix JSON");
    curve_cmd->add_option("--file", o.file, "Matrix JSON file");

    auto* family_cmd = app.add_subcommand("family", "Admissible family polynomials of one degree");
    family_cmd->add_option("--n", o.n, "Degree")->required();
    family_cmd->add_option("--forms", o.forms, "all or a comma list of 2A1,3A1,4A1,5A1,AStar2");
    family_cmd->add_option("--report", o.report, "Write the report to a file");
    family_cmd->add_option("--scan", o.scan, "Monotonicity scan branch: 3A1, 4A1, 5A1, 5A1b");
    family_cmd->add_option("--d", o.d_range, "Scan range lo..hi");

    auto* sharp_cmd = app.add_subcommand("sharpness", "Sharpness family");
    auto* k_opt = sharp_cmd->add_option("--k", o.k, "Single k");
    auto* table_opt = sharp_cmd->add_option("--table", o.table, "Convergence table a..b");
    k_opt->excludes(table_opt);
    sharp_cmd->require_option(1);

    auto* track_cmd = app.add_subcommand("traintrack", "Weight space, Thurston form and radical of a track");
    track_cmd->add_option("--track", o.track, "Track JSON");
    track_cmd->add_option("--file", o.file, "Track JSON file");
    track_cmd->add_flag("--report", "Full report (the default)");

    auto* search_cmd = app.add_subcommand("search", "Exhaustive matrix search");
    search_cmd->add_option("--n", o.n, "Matrix size")->required();
    search_cmd->add_option("--max-entry", o.max_entry, "Largest entry")->check(CLI::Range(1u, 1000u));

    auto* repro_cmd = app.add_subcommand("repro", "Reproduction suites");
    repro_cmd->add_option("suite", o.repro, "thm-main, thm-set, torus, monotonicity, low-degree")
        ->required()
        ->check(CLI::IsMember({"thm-main", "thm-set", "torus", "monotonicity", "low-degree"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        const mpq_class tol = o.tol_text.empty() ? default_tolerance() : parse_rational(o.tol_text);
        if (tol <= 0) throw InputError("--tol: must be positive");
        Emission e;
        if (classify_cmd->parsed()) e = run_classify(o, tol);
        else if (matrix_cmd->parsed()) e = run_matrix(o, tol);
        else if (curve_cmd->parsed()) e = run_curve_graph(o, tol);
        else if (family_cmd->parsed()) e = run_family(o, tol);
        else if (sharp_cmd->parsed()) e = run_sharpness(o, tol);
        else if (track_cmd->parsed()) e = run_traintrack(o);
        else if (search_cmd->parsed()) e = run_search_cmd(o, tol);
        else e = run_repro(o, tol);

        const std::string text = render(e, o.format);
        std::string target = o.out;
        if (!o.report.empty()) {
            if (!target.empty() && target != o.report) throw InputError("--report: conflicts with --out");
            target = o.report;
        }
        if (target.empty()) {
            out << text;
        } else {
            std::ofstream f(target);
            if (!(f << text)) throw InputError("--out: cannot write '" + target + "'");
        }
        return e.code;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace stretchlab
