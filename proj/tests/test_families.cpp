#include "oracles.hpp"

#include "stretchlab/classify.hpp"
#include "stretchlab/families.hpp"

#include <doctest.h>

#include <set>

using namespace stretchlab;

namespace {

const IntPolynomial golden{-1, -1, 1};

IntPolynomial q_form(const FamilyForm& f, unsigned n) {
    IntPolynomial q{1};
    if (f.tag == FamilyTag::AStar2) {
        for (unsigned e : f.params) q -= IntPolynomial::monomial(1, e);
        q += IntPolynomial::monomial(1, f.params[0] + f.params[1]);
        return q;
    }
    for (unsigned e : f.params) q -= IntPolynomial::monomial(1, e);
    return q - IntPolynomial::monomial(1, n);
}

/// t^n Q(1/t) by reading Q's coefficients backwards from degree n.
IntPolynomial reciprocal_of(const IntPolynomial& q, unsigned n) {
    std::vector<mpz_class> c(n + 1);
    for (unsigned i = 0; i <= n; ++i) c[n - i] = q.coeff(i);
    return IntPolynomial(c);
}

unsigned listed(FamilyTag t) {
    switch (t) {
        case FamilyTag::A1x2: return 1;
        case FamilyTag::A1x3: return 2;
        case FamilyTag::A1x4: return 3;
        case FamilyTag::A1x5: return 4;
        case FamilyTag::AStar2: return 3;
    }
    return 0;
}

/// Every parameter tuple with entries in 1..n for the tag (ordered tuples).
std::vector<FamilyForm> all_forms(FamilyTag t, unsigned n) {
    std::vector<FamilyForm> out;
    const unsigned k = listed(t);
    std::vector<unsigned> p(k, 1);
    for (;;) {
        FamilyForm f{t, p};
        bool ok = true;
        if (t == FamilyTag::AStar2) ok = std::max(p[0] + p[1], p[2]) == n;
        if (ok) out.push_back(f);
        std::size_t i = 0;
        while (i < k && ++p[i] > n) p[i++] = 1;
        if (i == k) break;
    }
    return out;
}

std::set<std::vector<mpz_class>> brute_admissible(unsigned n, const std::vector<FamilyTag>& tags) {
    std::set<std::vector<mpz_class>> out;
    for (FamilyTag t : tags)
        for (const FamilyForm& f : all_forms(t, n)) {
            const IntPolynomial p = reciprocal_of(q_form(f, n), n);
            if (p.degree() != static_cast<int>(n) || p.constant_term() == 0) continue;
            if (!parity_condition(p) || !primitivity_compatible(p) || !is_skew_reciprocal_up_to_cyclotomic(p)) continue;
            try {
                if (compare_roots(largest_real_root(p), integer_root(1)) != std::strong_ordering::greater) continue;
            } catch (const std::domain_error&) {
                continue;
            }
            out.insert(p.coeffs());
        }
    return out;
}

std::set<std::vector<mpz_class>> as_set(const std::vector<AdmissibilityReport>& rs) {
    std::set<std::vector<mpz_class>> out;
    for (const auto& r : rs) out.insert(r.polynomial.coeffs());
    return out;
}

}  // namespace

TEST_CASE("family names") {
    for (FamilyTag t : all_families()) CHECK(parse_family(family_name(t)) == t);
    CHECK(all_families().size() == 5);
    CHECK_THROWS_AS(parse_family("6A1"), std::invalid_argument);
}

TEST_CASE("instantiation examples") {
    CHECK(instantiate({FamilyTag::A1x3, {1, 3}}, 4) == IntPolynomial{-1, -1, 0, -1, 1});
    CHECK(instantiate({FamilyTag::A1x3, {2, 2}}, 4) == IntPolynomial{-1, 0, -2, 0, 1});
    CHECK(instantiate({FamilyTag::AStar2, {1, 1, 4}}, 4) == IntPolynomial{-1, 0, 1, -2, 1});
    CHECK(instantiate({FamilyTag::A1x2, {1}}, 2) == golden);
    CHECK_THROWS_AS(instantiate({FamilyTag::A1x3, {1, 5}}, 4), std::invalid_argument);
    CHECK_THROWS_AS(instantiate({FamilyTag::A1x3, {0, 2}}, 4), std::invalid_argument);
    CHECK_THROWS_AS(instantiate({FamilyTag::A1x3, {1}}, 4), std::invalid_argument);
    CHECK_THROWS_AS(instantiate({FamilyTag::AStar2, {1, 1, 3}}, 4), std::invalid_argument);
    CHECK(describe({FamilyTag::A1x3, {1, 3}}) == "3A1(1,3)");
}

TEST_CASE("instantiation is the reciprocal of the clique polynomial") {
    for (unsigned n = 2; n <= 7; ++n)
        for (FamilyTag t : all_families())
            for (const FamilyForm& f : all_forms(t, n)) REQUIRE(instantiate(f, n) == reciprocal_of(q_form(f, n), n));
}

TEST_CASE("primitivity compatibility") {
    CHECK_FALSE(primitivity_compatible(IntPolynomial{-1, 0, -2, 0, 1}));
    CHECK(primitivity_compatible(IntPolynomial{-1, -1, 0, -1, 1}));
    CHECK_FALSE(primitivity_compatible(IntPolynomial{-1, 0, 0, -3, 0, 0, 1}));
    CHECK(primitivity_compatible(golden));
}

TEST_CASE("admissible polynomials of degree 4") {
    const auto a3 = enumerate_admissible(4, {FamilyTag::A1x3});
    REQUIRE(a3.size() == 1);
    CHECK(a3[0].polynomial == IntPolynomial{-1, -1, 0, -1, 1});
    CHECK(std::fabs(a3[0].normalized->mid().get_d() - 6.854101966) < 1e-8);

    const auto a4 = enumerate_admissible(4, {FamilyTag::A1x4});
    REQUIRE(a4.size() == 1);
    CHECK(a4[0].polynomial == IntPolynomial{-1, -2, -1, 0, 1});

    const auto all = enumerate_admissible(4, all_families());
    REQUIRE_FALSE(all.empty());
    CHECK(compare_roots(*all.front().root, largest_real_root(golden)) == std::strong_ordering::equal);
    const auto polys = as_set(all);
    CHECK(polys.count(IntPolynomial{-1, -2, 0, -2, 1}.coeffs()) == 1);
    CHECK(polys.count(IntPolynomial{-1, 0, 1, -2, 1}.coeffs()) == 1);
    CHECK(polys.count(IntPolynomial{-1, 0, 0, -1, 1}.coeffs()) == 0);
    CHECK(polys.count(IntPolynomial{-1, -2, 0, 0, 1}.coeffs()) == 0);
    for (std::size_t i = 1; i < all.size(); ++i)
        REQUIRE(compare_roots(*all[i - 1].root, *all[i].root) != std::strong_ordering::greater);

    const BoundCheck b = check_bound(4);
    CHECK(b.holds);
    CHECK(b.versus_bound == std::strong_ordering::greater);
}

TEST_CASE("enumeration matches a brute-force parameter sweep") {
    for (unsigned n = 2; n <= 8; ++n) {
        CAPTURE(n);
        REQUIRE(as_set(enumerate_admissible(n, all_families())) == brute_admissible(n, all_families()));
        for (FamilyTag t : all_families()) REQUIRE(as_set(enumerate_admissible(n, {t})) == brute_admissible(n, {t}));
    }
}

TEST_CASE("every admissible polynomial passes each filter independently") {
    for (unsigned n = 2; n <= 12; ++n)
        for (const auto& r : enumerate_admissible(n, all_families())) {
            REQUIRE(r.admissible());
            REQUIRE(parity_condition(r.polynomial));
            REQUIRE(primitivity_compatible(r.polynomial));
            REQUIRE(is_skew_reciprocal_up_to_cyclotomic(r.polynomial));
            REQUIRE(instantiate(r.form, n) == r.polynomial);
        }
}

TEST_CASE("degree cap and bad degrees") {
    CHECK_THROWS_AS(enumerate_admissible(17, all_families()), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_admissible(1, all_families()), std::invalid_argument);
    CHECK_NOTHROW(enumerate_admissible(17, {FamilyTag::A1x2}, default_tolerance(), 17));
}

TEST_CASE("bound holds on the family union for n = 4..10 and 12") {
    for (unsigned n : {4u, 5u, 6u, 7u, 8u, 9u, 10u, 12u}) {
        CAPTURE(n);
        const BoundCheck b = check_bound(n);
        REQUIRE(b.holds);
        if (b.minimum) REQUIRE(b.minimum->normalized->mid().get_d() >= 5.8284271247 - 1e-9);
    }
}

TEST_CASE("assessments record each filter") {
    const AdmissibilityReport bad_parity = assess({FamilyTag::A1x2, {1}}, 4);
    CHECK_FALSE(bad_parity.parity_ok);
    CHECK_FALSE(bad_parity.admissible());
    const AdmissibilityReport in_t2 = assess({FamilyTag::A1x3, {2, 2}}, 4);
    CHECK_FALSE(in_t2.primitivity_compatible);
    const AdmissibilityReport good = assess({FamilyTag::A1x4, {2, 3, 3}}, 4);
    CHECK(good.admissible());
    CHECK(good.root.has_value());
}

TEST_CASE("exact quotients") {
    CHECK(quotient_exact(IntPolynomial{-1, -2, 0, 1}, IntPolynomial{1, 1}) == golden);
    CHECK(quotient_exact(IntPolynomial{-1, -2, -1, 0, 1}, IntPolynomial{1, 1, 1}) == golden);
    try {
        quotient_exact(IntPolynomial{-1, -1, 0, 0, 0, -1, 1}, IntPolynomial{1, 0, 1});
        FAIL("expected a nonzero remainder");
    } catch (const QuotientError& e) {
        CHECK_FALSE(e.remainder().is_zero());
        CHECK(e.remainder() == IntPolynomial{-2, -2});
    }
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> deg(0, 8);
    for (int i = 0; i < 200; ++i) {
        const IntPolynomial p = oracle::random_poly(rng, deg(rng), 6);
        IntPolynomial d = oracle::random_poly(rng, deg(rng), 6);
        std::vector<mpz_class> c = d.coeffs();
        c.back() = 1;
        d = IntPolynomial(c);
        REQUIRE(quotient_exact(p * d, d) * d == p * d);
    }
}

TEST_CASE("scan polynomials") {
    CHECK(scan_polynomial(ScanBranch::A1x3, 12, {0}) == IntPolynomial::monomial(1, 12) - IntPolynomial::monomial(2, 6) - IntPolynomial{1});
    CHECK(scan_polynomial(ScanBranch::A1x3, 12, {2}) == instantiate({FamilyTag::A1x3, {4, 8}}, 12));
    CHECK(scan_polynomial(ScanBranch::A1x4, 8, {1}) == instantiate({FamilyTag::A1x4, {3, 4, 5}}, 8));
    CHECK(scan_polynomial(ScanBranch::A1x5, 8, {2, 1}) == instantiate({FamilyTag::A1x5, {2, 3, 5, 6}}, 8));
    CHECK_THROWS_AS(scan_polynomial(ScanBranch::A1x3, 11, {0}), std::invalid_argument);
    CHECK_THROWS_AS(scan_polynomial(ScanBranch::A1x3, 12, {6}), std::invalid_argument);
    for (ScanBranch b : {ScanBranch::A1x3, ScanBranch::A1x4, ScanBranch::A1x5, ScanBranch::A1x5b})
        CHECK(parse_branch(branch_name(b)) == b);
}

TEST_CASE("monotonicity scans and their endpoints") {
    const long double s3 = oracle::silver_square();
    const long double s4 = std::pow((3.0L + std::sqrt(13.0L)) / 2.0L, 2.0L);
    const long double s5 = std::pow(2.0L + std::sqrt(5.0L), 2.0L);
    CHECK(std::fabs(static_cast<double>(s4) - 10.9083269) < 1e-7);
    CHECK(std::fabs(static_cast<double>(s5) - 17.9442719) < 1e-7);

    const ScanResult r3 = monotonicity_scan(ScanBranch::A1x3, 12, 0, 5);
    CHECK(r3.strictly_increasing);
    CHECK(r3.points.size() == 6);
    CHECK(std::fabs(r3.points[0].normalized.mid().get_d() - static_cast<double>(s3)) < 1e-9);
    CHECK(compare_power_to_silver_square(r3.points[0].root, 12) == std::strong_ordering::equal);

    const ScanResult r4 = monotonicity_scan(ScanBranch::A1x4, 12, 0, 5);
    CHECK(r4.strictly_increasing);
    CHECK(std::fabs(r4.points[0].normalized.mid().get_d() - static_cast<double>(s4)) < 1e-9);

    const ScanResult r5 = monotonicity_scan(ScanBranch::A1x5, 12, 0, 5);
    CHECK(r5.strictly_increasing);
    CHECK(r5.points[0].params == std::vector<unsigned>{0, 0});
    CHECK(std::fabs(r5.points[0].normalized.mid().get_d() - static_cast<double>(s5)) < 1e-9);

    const ScanResult r5b = monotonicity_scan(ScanBranch::A1x5b, 12, 0, 5);
    CHECK(r5b.strictly_increasing);
    CHECK(r5b.unresolved == 0);

    for (const ScanResult* r : {&r3, &r4, &r5})
        for (const ScanPoint& p : r->points) {
            const long double x = p.root.approx();
            REQUIRE(std::fabs(static_cast<double>(std::pow(x, 12.0L)) - p.normalized.mid().get_d()) < 1e-8);
        }
}

TEST_CASE("monotonicity on other even degrees") {
    for (unsigned n : {6u, 8u, 10u, 14u})
        for (ScanBranch b : {ScanBranch::A1x3, ScanBranch::A1x4, ScanBranch::A1x5}) {
            CAPTURE(n);
            REQUIRE(monotonicity_scan(b, n, 0, n / 2 - 1).strictly_increasing);
        }
}

TEST_CASE("low-degree exceptions") {
    const LowDegreeReport r = verify_low_degree_exceptions();
    CHECK(r.ok());
    CHECK(std::fabs(r.mu_squared.mid().get_d() - 2.6180339887) < 1e-9);
    CHECK(std::fabs(r.mu_cubed.mid().get_d() - 4.2360679775) < 1e-9);
    CHECK(r.mu_squared.hi < 5.8284271247);
    CHECK(r.mu_cubed.hi < 5.8284271247);
}
