#include "stretchlab/report.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace stretchlab {

mpq_class parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            mpz_class num(text.substr(0, slash), 10);
            const std::string tail = text.substr(slash + 1);
            mpz_class den;
            if (tail.rfind("2^", 0) == 0 && tail.size() > 2 &&
                std::all_of(tail.begin() + 2, tail.end(), [](unsigned char c) { return std::isdigit(c); }))
                mpz_ui_pow_ui(den.get_mpz_t(), 2, std::stoul(tail.substr(2)));
            else
                den = mpz_class(tail, 10);
            if (den == 0) throw InputError("rational '" + text + "' has a zero denominator");
            mpq_class q(num, den);
            q.canonicalize();
            return q;
        }
    } catch (const InputError&) {
        throw;
    } catch (const std::logic_error&) {
        throw InputError("cannot parse rational '" + text + "'");
    }
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) negative = text[i++] == '-';
    std::string digits;
    long exponent = 0;
    bool any = false;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        digits += text[i++];
        any = true;
    }
    if (i < text.size() && text[i] == '.') {
        ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            digits += text[i++];
            --exponent;
            any = true;
        }
    }
    if (!any) throw InputError("cannot parse rational '" + text + "'");
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        std::size_t used = 0;
        try {
            exponent += std::stol(text.substr(i), &used);
        } catch (const std::exception&) {
            throw InputError("cannot parse rational '" + text + "'");
        }
        i += used;
    }
    if (i != text.size()) throw InputError("cannot parse rational '" + text + "'");
    mpz_class mant(digits, 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    mpq_class q = exponent < 0 ? mpq_class(mant, scale) : mpq_class(mant * scale);
    q.canonicalize();
    return negative ? mpq_class(-q) : q;
}

namespace {

mpz_class parse_integer(const Json& j, const std::string& field) {
    if (j.is_number_integer()) return mpz_class(j.dump(), 10);
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        mpz_class v;
        if (s.empty() || v.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0)
            throw InputError(field + ": '" + s + "' is not an integer");
        return v;
    }
    throw InputError(field + ": expected an integer or a decimal string");
}

std::size_t parse_index(const Json& j, const std::string& field) {
    if (!j.is_number_unsigned()) throw InputError(field + ": expected a nonnegative integer");
    return j.get<std::size_t>();
}

const Json& member(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) throw InputError(where + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw InputError(where + ": missing field '" + key + "'");
    return *it;
}

Json integer_string(const mpz_class& v) { return v.get_str(); }

}  // namespace

Json parse_json_text(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(what + ": malformed JSON (" + e.what() + ")");
    }
}

IntPolynomial parse_polynomial(const Json& j) {
    const Json& c = member(j, "coeffs", "polynomial");
    if (!c.is_array()) throw InputError("coeffs: expected an array");
    std::vector<mpz_class> coeffs;
    for (std::size_t i = 0; i < c.size(); ++i) coeffs.push_back(parse_integer(c[i], "coeffs[" + std::to_string(i) + "]"));
    return IntPolynomial(std::move(coeffs));
}

IntMatrix parse_matrix(const Json& j) {
    const Json& rows = member(j, "rows", "matrix");
    if (!rows.is_array()) throw InputError("rows: expected an array");
    const std::size_t n = rows.size();
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::string field = "rows[" + std::to_string(i) + "]";
        if (!rows[i].is_array()) throw InputError(field + ": expected an array");
        if (rows[i].size() != n) throw InputError(field + ": matrix must be square");
        for (std::size_t k = 0; k < n; ++k)
            m(i, k) = parse_integer(rows[i][k], field + "[" + std::to_string(k) + "]");
    }
    return m;
}

TrainTrack parse_track(const Json& j) {
    const Json& vs = member(j, "vertices", "track");
    const Json& es = member(j, "edges", "track");
    if (!vs.is_array()) throw InputError("vertices: expected an array");
    if (!es.is_array()) throw InputError("edges: expected an array");
    std::vector<TrackVertex> vertices;
    for (std::size_t v = 0; v < vs.size(); ++v) {
        const std::string where = "vertices[" + std::to_string(v) + "]";
        TrackVertex tv;
        for (const char* key : {"sideA", "sideB"}) {
            const Json& side = member(vs[v], key, where);
            if (!side.is_array()) throw InputError(where + "." + key + ": expected an array");
            auto& dst = std::string(key) == "sideA" ? tv.side_a : tv.side_b;
            for (std::size_t i = 0; i < side.size(); ++i)
                dst.push_back(parse_index(side[i], where + "." + key + "[" + std::to_string(i) + "]"));
        }
        vertices.push_back(std::move(tv));
    }
    std::vector<TrackEdge> edges;
    for (std::size_t e = 0; e < es.size(); ++e) {
        const std::string where = "edges[" + std::to_string(e) + "]";
        const Json& ends = member(es[e], "ends", where);
        if (!ends.is_array() || ends.size() != 2) throw InputError(where + ".ends: expected two half-edge ids");
        const Json& kind = member(es[e], "kind", where);
        TrackEdge te;
        te.ends = {parse_index(ends[0], where + ".ends[0]"), parse_index(ends[1], where + ".ends[1]")};
        if (kind == "real") te.kind = EdgeKind::real;
        else if (kind == "inf") te.kind = EdgeKind::infinitesimal;
        else throw InputError(where + ".kind: expected \"real\" or \"inf\"");
        edges.push_back(te);
    }
    try {
        return TrainTrack(std::move(vertices), std::move(edges));
    } catch (const InvalidTrack& e) {
        throw InputError(std::string("track: ") + e.what());
    }
}

Json to_json(const IntPolynomial& p) {
    Json c = Json::array();
    for (const auto& x : p.coeffs()) c.push_back(integer_string(x));
    return Json{{"coeffs", c}, {"text", p.to_string()}};
}

Json to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.size(); ++k) row.push_back(integer_string(m(i, k)));
        rows.push_back(row);
    }
    return Json{{"rows", rows}};
}

Json to_json(const TrainTrack& t) {
    Json vs = Json::array();
    for (const auto& v : t.vertices()) vs.push_back({{"sideA", v.side_a}, {"sideB", v.side_b}});
    Json es = Json::array();
    for (const auto& e : t.edges())
        es.push_back({{"ends", {e.ends[0], e.ends[1]}}, {"kind", e.kind == EdgeKind::real ? "real" : "inf"}});
    return Json{{"vertices", vs}, {"edges", es}};
}

Json to_json(const Interval& i) {
    return Json{{"lo", dyadic_string(i.lo)}, {"hi", dyadic_string(i.hi)}, {"decimal", to_decimal(i.mid())}};
}

Json to_json(const RootEnclosure& e) {
    Json j = to_json(e.interval());
    j["polynomial"] = to_json(e.polynomial);
    return j;
}

namespace {

Json optional_sign(const std::optional<Sign>& s) { return s ? Json(*s) : Json(nullptr); }

}  // namespace

Json to_json(const SpectralClass& c) {
    return Json{{"reciprocal", optional_sign(c.reciprocal)},
                {"skew_reciprocal", optional_sign(c.skew_reciprocal)},
                {"cyclotomic_part", to_json(c.cyclotomic_part)},
                {"core", to_json(c.core)},
                {"skew_up_to_cyclotomic", c.skew_up_to_cyclotomic},
                {"parity_ok", c.parity_ok},
                {"degenerate", c.degenerate}};
}

Json to_json(const PrimitivityReport& r) {
    return Json{{"nonnegative", r.nonnegative},
                {"strongly_connected", r.strongly_connected},
                {"period", r.period},
                {"primitive", r.primitive}};
}

Json to_json(const AdmissibilityReport& r) {
    Json j{{"form", describe(r.form)},
           {"polynomial", to_json(r.polynomial)},
           {"parity_ok", r.parity_ok},
           {"primitivity_compatible", r.primitivity_compatible},
           {"skew_up_to_cyclotomic", r.skew_up_to_cyclotomic},
           {"root_above_one", r.root_above_one},
           {"admissible", r.admissible()}};
    j["largest_root"] = r.root ? to_json(*r.root) : Json(nullptr);
    j["normalized_largest_root"] = r.normalized ? to_json(*r.normalized) : Json(nullptr);
    return j;
}

Json to_json(const ScanResult& r) {
    Json pts = Json::array();
    for (const auto& p : r.points)
        pts.push_back({{"params", p.params},
                       {"polynomial", to_json(p.polynomial)},
                       {"largest_root", to_json(p.root)},
                       {"normalized", to_json(p.normalized)}});
    return Json{{"branch", branch_name(r.branch)},
                {"n", r.n},
                {"points", pts},
                {"strictly_increasing", r.strictly_increasing},
                {"unresolved_pairs", r.unresolved}};
}

Json to_json(const SharpnessExample& e) {
    return Json{{"k", e.k},
                {"p", e.p},
                {"q", e.q},
                {"matrix", to_json(e.matrix)},
                {"char_poly", to_json(e.char_poly)},
                {"char_poly_matches", e.char_poly_matches},
                {"primitive", e.primitive},
                {"unimodular", e.unimodular},
                {"skew_up_to_cyclotomic", e.skew_up_to_cyclotomic},
                {"parity_ok", e.parity_ok},
                {"largest_root", to_json(e.root)},
                {"normalized", to_json(e.normalized)},
                {"above_bound", e.above_bound},
                {"ok", e.ok()}};
}

Json to_json(const ConvergenceRow& r) {
    std::ostringstream res;
    res.precision(3);
    res << std::scientific << static_cast<double>(r.residual);
    return Json{{"k", r.k}, {"largest_root", to_json(r.root)}, {"normalized", to_json(r.normalized)}, {"residual", res.str()}};
}

Json to_json(const Candidate& c) {
    return Json{{"index", c.index},
                {"matrix", to_json(c.matrix)},
                {"char_poly", to_json(c.char_poly)},
                {"spectral_radius", to_json(c.root)},
                {"normalized", to_json(c.normalized)}};
}

Json to_json(const SearchResult& r) {
    Json below = Json::array();
    for (const auto& c : r.below_bound) below.push_back(to_json(c));
    Json violations = Json::array();
    for (const auto& c : r.violations()) violations.push_back(to_json(c));
    return Json{{"n", r.n},
                {"max_entry", r.max_entry},
                {"scope", "finite slice: all " + std::to_string(r.n) + "x" + std::to_string(r.n) +
                              " matrices with entries in [0, " + std::to_string(r.max_entry) +
                              "]; the bound is claimed for every n >= 4"},
                {"scanned", r.scanned},
                {"qualifying", r.qualifying},
                {"minimum", r.minimum ? to_json(*r.minimum) : Json(nullptr)},
                {"below_bound", below},
                {"theorem_applies", r.theorem_applies},
                {"violations", violations}};
}

const char* ordering_name(std::strong_ordering o) {
    if (o == std::strong_ordering::less) return "below";
    if (o == std::strong_ordering::greater) return "above";
    return "equal";
}

Json to_json(const WitnessReport& r) {
    return Json{{"matrix", to_json(r.matrix)},
                {"char_poly", to_json(r.char_poly)},
                {"primitivity", to_json(r.primitivity)},
                {"det", integer_string(r.det)},
                {"in_GLnZ", r.unimodular},
                {"spectral_class", to_json(r.spectral)},
                {"spectral_radius", r.root ? to_json(*r.root) : Json(nullptr)},
                {"normalized", r.normalized ? to_json(*r.normalized) : Json(nullptr)},
                {"perron_error", r.perron_error.empty() ? Json(nullptr) : Json(r.perron_error)},
                {"versus_bound", r.versus_bound ? Json(ordering_name(*r.versus_bound)) : Json(nullptr)},
                {"qualifies", r.qualifies}};
}

namespace {

Json rational_vector(const RationalVector& v) {
    Json j = Json::array();
    for (const auto& x : v) j.push_back(x.get_str());
    return j;
}

}  // namespace

Json to_json(const RadicalReport& r) {
    Json basis = Json::array();
    for (const auto& b : r.basis) basis.push_back(rational_vector(b));
    Json elems = Json::array();
    for (std::size_t i = 0; i < r.elements.size(); ++i)
        elems.push_back({{"component", r.element_components[i]}, {"weights", rational_vector(r.elements[i])}});
    return Json{{"dimension", r.dimension()},
                {"basis", basis},
                {"radical_elements", elems},
                {"elements_span", r.elements_span},
                {"elements_in_weight_space", r.elements_in_weight_space},
                {"contained", r.contained},
                {"equal", r.equal}};
}

Json to_json(const BoundaryComponent& c) {
    return Json{{"half_edges", c.half_edges}, {"length", c.half_edges.size()}, {"cusps", c.cusps}};
}

namespace {

void flatten(const Json& j, const std::string& prefix, std::ostringstream& out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    } else {
        out << prefix << " = " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
    }
}

}  // namespace

std::string render_text(const Json& j) {
    std::ostringstream out;
    flatten(j, "", out);
    return out.str();
}

}  // namespace stretchlab
