#include "stretchlab/repro.hpp"

#include <cmath>
#include <tuple>

namespace stretchlab {

IntMatrix punctured_torus_matrix() { return IntMatrix{{0, 0, 1, 1}, {1, 0, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0}}; }

IntPolynomial lehmer_polynomial() { return IntPolynomial{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1}; }

IntPolynomial quartic_salem_polynomial() { return IntPolynomial{1, -1, -1, -1, 1}; }

bool power_equals_quadratic_root(const RootEnclosure& rho, unsigned n, long s, long c) {
    const IntPolynomial q =
        IntPolynomial::monomial(1, 2 * n) - IntPolynomial::monomial(s, n) + IntPolynomial::constant(c);
    return compare_roots(rho, largest_real_root(q)) == std::strong_ordering::equal;
}

namespace {

bool near(const Interval& x, double value, double tol) {
    return std::fabs(x.mid().get_d() - value) < tol;
}

Json sqrt_json(long p, long q, const SqrtMinPoly& s) {
    return Json{{"p", p}, {"q", q}, {"polynomial", to_json(s.polynomial)}, {"irreducible", s.irreducible}};
}

Json circle_json(const UnitCircleCount& c) {
    return Json{{"count", c.count}, {"certainty", c.certainty == Certainty::exact ? "exact" : "numeric"}};
}

Json bound_json(const BoundCheck& b) {
    Json j{{"n", b.n}, {"admissible", b.admissible}, {"holds", b.holds}};
    if (b.minimum) {
        j["minimum_polynomial"] = to_json(b.minimum->polynomial);
        j["minimum_normalized"] = to_json(*b.minimum->normalized);
        j["form"] = describe(b.minimum->form);
    } else {
        j["minimum_polynomial"] = nullptr;
        j["minimum_normalized"] = nullptr;
        j["form"] = nullptr;
    }
    j["versus_bound"] = b.versus_bound ? Json(ordering_name(*b.versus_bound)) : Json(nullptr);
    return j;
}

Json search_summary(const SearchResult& r) {
    Json j = to_json(r);
    j["minimum_below_bound"] =
        r.minimum ? Json(compare_power_to_silver_square(r.minimum->root, r.n) == std::strong_ordering::less)
                  : Json(nullptr);
    return j;
}

}  // namespace

Json silver_square_json(const mpq_class& tol) {
    const RootEnclosure r = largest_real_root(IntPolynomial{1, -6, 1}, tol);
    return Json{{"expression", "3+2*sqrt(2)"},
                {"decimal", to_decimal(r.interval().mid(), 11)},
                {"lo", dyadic_string(r.lo)},
                {"hi", dyadic_string(r.hi)}};
}

bool SetTheoremReport::ok() const {
    return ordering && sqrt_4_1.irreducible && sqrt_5_1.irreducible && !sqrt_3_1.irreducible &&
           lehmer_unit_circle.count == 8 && lehmer_unit_circle.certainty == Certainty::exact &&
           quartic_unit_circle.count == 2 && quartic_unit_circle.certainty == Certainty::exact && lehmer_salem && quartic_salem &&
           near(lehmer_ninth, 4.311, 1e-3) && near(quartic_cubed, 5.107, 1e-3);
}

SetTheoremReport repro_set_theorem(const mpq_class& tol) {
    SetTheoremReport r;
    r.mu = largest_real_root(IntPolynomial{-1, -1, 1}, tol);
    r.sigma = largest_real_root(IntPolynomial{-1, -2, 1}, tol);
    r.mu_squared = largest_real_root(IntPolynomial{1, -3, 1}, tol);
    r.ordering = r.mu.interval().strictly_below(r.sigma.interval()) &&
                 r.sigma.interval().strictly_below(r.mu_squared.interval());
    r.sqrt_4_1 = sqrt_min_poly(4, 1);
    r.sqrt_5_1 = sqrt_min_poly(5, 1);
    r.sqrt_3_1 = sqrt_min_poly(3, 1);
    r.lehmer_unit_circle = unit_circle_root_count(lehmer_polynomial());
    r.quartic_unit_circle = unit_circle_root_count(quartic_salem_polynomial());
    r.lehmer_salem = is_salem_like(lehmer_polynomial());
    r.quartic_salem = is_salem_like(quartic_salem_polynomial());
    r.lehmer_ninth = power(largest_real_root(lehmer_polynomial(), tol), 9);
    r.quartic_cubed = power(largest_real_root(quartic_salem_polynomial(), tol), 3);
    return r;
}

Json to_json(const SetTheoremReport& r) {
    return Json{{"ordering",
                 {{"mu", to_json(r.mu.interval())},
                  {"sigma", to_json(r.sigma.interval())},
                  {"mu_squared", to_json(r.mu_squared.interval())},
                  {"disjoint_increasing", r.ordering}}},
                {"sqrt_min_poly", {sqrt_json(4, 1, r.sqrt_4_1), sqrt_json(5, 1, r.sqrt_5_1), sqrt_json(3, 1, r.sqrt_3_1)}},
                {"lehmer",
                 {{"polynomial", to_json(lehmer_polynomial())},
                  {"unit_circle_roots", circle_json(r.lehmer_unit_circle)},
                  {"salem", r.lehmer_salem},
                  {"ninth_power", to_json(r.lehmer_ninth)}}},
                {"quartic",
                 {{"polynomial", to_json(quartic_salem_polynomial())},
                  {"unit_circle_roots", circle_json(r.quartic_unit_circle)},
                  {"salem", r.quartic_salem},
                  {"cube", to_json(r.quartic_cubed)}}},
                {"ok", r.ok()}};
}

ReproOutcome repro_thm_set(const mpq_class& tol) {
    const SetTheoremReport r = repro_set_theorem(tol);
    return {to_json(r), r.ok()};
}

ReproOutcome repro_torus(const mpq_class& tol) {
    const WitnessReport w = witness_check(punctured_torus_matrix(), tol);
    const IntPolynomial expected{-1, -2, -1, 0, 1};
    const bool chi_ok = w.char_poly == expected;
    const bool parts_ok = w.spectral.cyclotomic_part == IntPolynomial{1, 1, 1} && w.spectral.core == IntPolynomial{-1, -1, 1};
    const bool mu4 = w.root && power_equals_quadratic_root(*w.root, 4, 7, 1);
    const bool ok = chi_ok && w.primitivity.primitive && w.det == -1 && w.spectral.skew_up_to_cyclotomic &&
                    !w.spectral.skew_reciprocal && parts_ok && mu4;
    Json j = to_json(w);
    j["char_poly_matches"] = chi_ok;
    j["parts_match"] = parts_ok;
    j["normalized_is_mu_fourth"] = mu4;
    j["ok"] = ok;
    return {j, ok};
}

ReproOutcome repro_thm_main(const mpq_class& tol, unsigned threads) {
    bool ok = true;
    Json families = Json::array();
    bool n4_mu4 = false;
    for (unsigned n : {4u, 5u, 6u, 7u, 8u, 9u, 10u, 12u}) {
        const BoundCheck b = check_bound(n, tol);
        ok = ok && b.holds;
        if (n == 4) n4_mu4 = b.minimum && power_equals_quadratic_root(*b.minimum->root, 4, 7, 1);
        families.push_back(bound_json(b));
    }
    ok = ok && n4_mu4;

    SearchConfig cfg;
    cfg.n = 4;
    cfg.max_entry = 1;
    cfg.threads = threads;
    cfg.tol = tol;
    const SearchResult s = run_search(cfg);
    ok = ok && s.violations().empty();

    Json sharp = Json::array();
    bool sharp_ok = true;
    for (unsigned k = 2; k <= 40; ++k) {
        const SharpnessExample e = build_example(k, tol);
        sharp_ok = sharp_ok && e.ok();
        sharp.push_back({{"k", k}, {"p", e.p}, {"normalized", to_json(e.normalized)}, {"ok", e.ok()}});
    }
    ok = ok && sharp_ok;

    return {Json{{"bound", silver_square_json(tol)},
                 {"families", {{"degrees", families}, {"n4_minimum_is_mu_fourth", n4_mu4}}},
                 {"search", search_summary(s)},
                 {"sharpness", {{"examples", sharp}, {"all_above_bound", sharp_ok}}},
                 {"scope", "finite slice: family degrees 4-10 and 12, 4x4 matrices with 0/1 entries, "
                           "sharpness k = 2..40"},
                 {"ok", ok}},
            ok};
}

ReproOutcome repro_monotonicity(const mpq_class& tol) {
    constexpr unsigned n = 12;
    Json scans = Json::array();
    bool ok = true;
    for (ScanBranch b : {ScanBranch::A1x3, ScanBranch::A1x4, ScanBranch::A1x5, ScanBranch::A1x5b}) {
        const ScanResult r = monotonicity_scan(b, n, 0, 5, tol);
        ok = ok && r.strictly_increasing;
        Json j{{"branch", branch_name(b)},
               {"points", r.points.size()},
               {"strictly_increasing", r.strictly_increasing},
               {"unresolved_pairs", r.unresolved},
               {"first", r.points.empty() ? Json(nullptr) : to_json(r.points.front().normalized)}};
        if (!r.points.empty()) {
            const RootEnclosure& root = r.points.front().root;
            std::optional<bool> endpoint;
            switch (b) {
                case ScanBranch::A1x3:
                    endpoint = compare_power_to_silver_square(root, n) == std::strong_ordering::equal;
                    break;
                case ScanBranch::A1x4: endpoint = power_equals_quadratic_root(root, n, 11, 1); break;
                case ScanBranch::A1x5: endpoint = power_equals_quadratic_root(root, n, 18, 1); break;
                case ScanBranch::A1x5b: break;
            }
            if (endpoint) {
                j["endpoint_exact"] = *endpoint;
                ok = ok && *endpoint;
            }
        }
        scans.push_back(j);
    }
    return {Json{{"n", n}, {"range", "0..5"}, {"scans", scans}, {"ok", ok}}, ok};
}

ReproOutcome repro_low_degree(const mpq_class& tol) {
    const LowDegreeReport r = verify_low_degree_exceptions(tol);
    Json searches = Json::array();
    bool ok = r.ok();
    for (auto [n, s, c] : {std::tuple{2u, 3L, 1L}, std::tuple{3u, 4L, -1L}}) {
        SearchConfig cfg;
        cfg.n = n;
        cfg.max_entry = 2;
        cfg.tol = tol;
        const SearchResult res = run_search(cfg);
        const bool match = res.minimum && power_equals_quadratic_root(res.minimum->root, n, s, c);
        const bool below = res.minimum && compare_power_to_silver_square(res.minimum->root, n) == std::strong_ordering::less;
        ok = ok && match && below;
        Json j = search_summary(res);
        j["minimum_matches"] = match;
        searches.push_back(j);
    }
    return {Json{{"mu_squared", to_json(r.mu_squared)},
                 {"mu_cubed", to_json(r.mu_cubed)},
                 {"n2_skew_reciprocal", r.n2_skew_reciprocal},
                 {"n2_below_bound", r.n2_below_bound},
                 {"n3_skew_up_to_cyclotomic", r.n3_skew_up_to_cyclotomic},
                 {"n3_below_bound", r.n3_below_bound},
                 {"n4_excluded", r.n4_excluded},
                 {"searches", searches},
                 {"ok", ok}},
            ok};
}

}  // namespace stretchlab
