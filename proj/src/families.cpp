#include "stretchlab/families.hpp"

#include "stretchlab/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace stretchlab {

const char* family_name(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::A1x2: return "2A1";
        case FamilyTag::A1x3: return "3A1";
        case FamilyTag::A1x4: return "4A1";
        case FamilyTag::A1x5: return "5A1";
        case FamilyTag::AStar2: return "AStar2";
    }
    return "?";
}

FamilyTag parse_family(const std::string& name) {
    for (FamilyTag t : all_families())
        if (name == family_name(t)) return t;
    throw std::invalid_argument("unknown family '" + name + "'");
}

std::vector<FamilyTag> all_families() {
    return {FamilyTag::A1x2, FamilyTag::A1x3, FamilyTag::A1x4, FamilyTag::A1x5, FamilyTag::AStar2};
}

std::string describe(const FamilyForm& form) {
    std::string s = family_name(form.tag);
    s += '(';
    for (std::size_t i = 0; i < form.params.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(form.params[i]);
    }
    return s + ')';
}

namespace {

std::size_t free_exponents(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::A1x2: return 1;
        case FamilyTag::A1x3: return 2;
        case FamilyTag::A1x4: return 3;
        case FamilyTag::A1x5: return 4;
        case FamilyTag::AStar2: return 3;
    }
    return 0;
}

// Q as a dense coefficient vector of length n + 1.
std::vector<mpz_class> clique_form(const FamilyForm& form, unsigned n) {
    if (form.params.size() != free_exponents(form.tag))
        throw std::invalid_argument("instantiate: wrong parameter count for " + describe(form));
    for (unsigned e : form.params) {
        if (e == 0) throw std::invalid_argument("instantiate: exponents must be positive");
        if (e > n) throw std::invalid_argument("instantiate: exponent exceeds n in " + describe(form));
    }
    std::vector<mpz_class> q(n + 1);
    q[0] = 1;
    for (unsigned e : form.params) q[e] -= 1;
    if (form.tag == FamilyTag::AStar2) {
        const unsigned ab = form.params[0] + form.params[1];
        if (ab > n) throw std::invalid_argument("instantiate: a + b exceeds n in " + describe(form));
        if (std::max(ab, form.params[2]) != n)
            throw std::invalid_argument("instantiate: top exponent of " + describe(form) + " is not n");
        q[ab] += 1;
    } else {
        q[n] -= 1;
    }
    return q;
}

}  // namespace

IntPolynomial instantiate(const FamilyForm& form, unsigned n) {
    std::vector<mpz_class> q = clique_form(form, n);
    std::reverse(q.begin(), q.end());
    return IntPolynomial(std::move(q));
}

bool primitivity_compatible(const IntPolynomial& p) {
    unsigned g = 0;
    for (int i = 1; i <= p.degree(); ++i)
        if (p.coeffs()[i] != 0) g = std::gcd(g, static_cast<unsigned>(i));
    return g == 1;
}

namespace {

void fill_root(AdmissibilityReport& r, unsigned n, const mpq_class& tol) {
    RootEnclosure root = largest_real_root(r.polynomial, tol);
    r.root_above_one = compare_roots(root, integer_root(1)) == std::strong_ordering::greater;
    if (r.root_above_one) r.normalized = power(root, n);
    r.root = std::move(root);
}

}  // namespace

AdmissibilityReport assess(const FamilyForm& form, unsigned n, const mpq_class& tol) {
    AdmissibilityReport r;
    r.form = form;
    r.polynomial = instantiate(form, n);
    r.parity_ok = parity_condition(r.polynomial);
    r.primitivity_compatible = primitivity_compatible(r.polynomial);
    r.skew_up_to_cyclotomic = is_skew_reciprocal_up_to_cyclotomic(r.polynomial);
    if (r.parity_ok && r.primitivity_compatible && r.skew_up_to_cyclotomic) fill_root(r, n, tol);
    return r;
}

namespace {

// Nondecreasing tuples of length k from [1, n].
void multisets(unsigned k, unsigned n, std::vector<unsigned>& cur, std::vector<std::vector<unsigned>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (unsigned e = cur.empty() ? 1 : cur.back(); e <= n; ++e) {
        cur.push_back(e);
        multisets(k, n, cur, out);
        cur.pop_back();
    }
}

std::vector<FamilyForm> parameter_choices(FamilyTag tag, unsigned n) {
    std::vector<FamilyForm> forms;
    if (tag == FamilyTag::AStar2) {
        for (unsigned a = 1; a <= n; ++a)
            for (unsigned b = a; a + b <= n; ++b)
                for (unsigned c = 1; c <= n; ++c)
                    if (std::max(a + b, c) == n) forms.push_back({tag, {a, b, c}});
        return forms;
    }
    std::vector<std::vector<unsigned>> tuples;
    std::vector<unsigned> cur;
    multisets(static_cast<unsigned>(free_exponents(tag)), n, cur, tuples);
    for (auto& t : tuples) forms.push_back({tag, std::move(t)});
    return forms;
}

struct PolyLess {
    bool operator()(const IntPolynomial& a, const IntPolynomial& b) const { return canonical_less(a, b); }
};

}  // namespace

std::vector<AdmissibilityReport> enumerate_admissible(unsigned n, const std::vector<FamilyTag>& forms,
                                                      const mpq_class& tol, unsigned cap) {
    if (n < 2) throw std::invalid_argument("enumerate_admissible: n must be at least 2");
    if (n > cap) throw std::invalid_argument("enumerate_admissible: n exceeds the degree cap " + std::to_string(cap));
    std::map<IntPolynomial, bool, PolyLess> seen;
    std::vector<AdmissibilityReport> out;
    for (FamilyTag tag : forms) {
        for (const FamilyForm& form : parameter_choices(tag, n)) {
            IntPolynomial p = instantiate(form, n);
            if (!seen.emplace(p, true).second) continue;
            AdmissibilityReport r = assess(form, n, tol);
            if (r.admissible()) out.push_back(std::move(r));
        }
    }
    std::sort(out.begin(), out.end(), [](const AdmissibilityReport& a, const AdmissibilityReport& b) {
        auto c = compare_roots(*a.root, *b.root);
        if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
        return canonical_less(a.polynomial, b.polynomial);
    });
    return out;
}

BoundCheck check_bound(unsigned n, const mpq_class& tol) {
    BoundCheck check;
    check.n = n;
    auto all = enumerate_admissible(n, all_families(), tol);
    check.admissible = all.size();
    if (all.empty()) return check;
    check.minimum = all.front();
    check.versus_bound = compare_power_to_silver_square(*check.minimum->root, n);
    if (*check.versus_bound == std::strong_ordering::less) {
        const mpq_class slack("1/1000000000");
        const RootEnclosure bound = largest_real_root(IntPolynomial{1, -6, 1}, dyadic(-64));
        check.holds = check.minimum->normalized->hi >= bound.lo - slack;
    }
    return check;
}

IntPolynomial quotient_exact(const IntPolynomial& p, const IntPolynomial& divisor) {
    RationalDivision d = divrem(p, divisor);
    if (!d.remainder_is_zero()) {
        mpz_class scale = 1;
        for (const auto& c : d.remainder) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
        std::vector<mpz_class> r;
        for (const auto& c : d.remainder) r.push_back(mpq_class(c * scale).get_num());
        IntPolynomial rem(std::move(r));
        throw QuotientError("quotient_exact: nonzero remainder " + rem.to_string(), rem);
    }
    if (!d.integral) throw QuotientError("quotient_exact: quotient is not integral", IntPolynomial{});
    return d.integer_quotient();
}

const char* branch_name(ScanBranch b) {
    switch (b) {
        case ScanBranch::A1x3: return "3A1";
        case ScanBranch::A1x4: return "4A1";
        case ScanBranch::A1x5: return "5A1";
        case ScanBranch::A1x5b: return "5A1b";
    }
    return "?";
}

ScanBranch parse_branch(const std::string& name) {
    for (ScanBranch b : {ScanBranch::A1x3, ScanBranch::A1x4, ScanBranch::A1x5, ScanBranch::A1x5b})
        if (name == branch_name(b)) return b;
    throw std::invalid_argument("unknown scan branch '" + name + "'");
}

IntPolynomial scan_polynomial(ScanBranch branch, unsigned n, const std::vector<unsigned>& params) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("scan: n must be even and positive");
    const unsigned g = n / 2;
    const std::size_t want = (branch == ScanBranch::A1x3 || branch == ScanBranch::A1x4) ? 1 : 2;
    if (params.size() != want) throw std::invalid_argument("scan: wrong parameter count");
    std::vector<mpz_class> c(n + 1);
    c[n] = 1;
    c[0] = -1;
    auto symmetric = [&](unsigned d) {
        if (d >= g) throw std::invalid_argument("scan: offset must be below n/2");
        c[g + d] -= 1;
        c[g - d] -= 1;
    };
    switch (branch) {
        case ScanBranch::A1x3: symmetric(params[0]); break;
        case ScanBranch::A1x4:
            symmetric(params[0]);
            c[g] -= 1;
            break;
        case ScanBranch::A1x5:
            symmetric(params[0]);
            symmetric(params[1]);
            break;
        case ScanBranch::A1x5b:
            if (params[0] == 0 || params[0] >= n) throw std::invalid_argument("scan: need 0 < a < n");
            c[params[0]] -= 2;
            symmetric(params[1]);
            break;
    }
    return IntPolynomial(std::move(c));
}

namespace {

enum class Order { increasing, not_increasing, unresolved };

Order certify_increase(RootEnclosure x, RootEnclosure y) {
    for (int round = 0; round <= 10; ++round) {
        if (x.hi < y.lo) return Order::increasing;
        if (y.hi < x.lo) return Order::not_increasing;
        if (round == 10) break;
        x = refine(x, x.width() * dyadic(-8));
        y = refine(y, y.width() * dyadic(-8));
    }
    return Order::unresolved;
}

}  // namespace

ScanResult monotonicity_scan(ScanBranch branch, unsigned n, unsigned lo, unsigned hi, const mpq_class& tol) {
    if (lo > hi) throw std::invalid_argument("scan: empty parameter range");
    ScanResult res;
    res.branch = branch;
    res.n = n;
    const unsigned g = n / 2;
    auto point = [&](std::vector<unsigned> params) {
        ScanPoint pt;
        pt.params = std::move(params);
        pt.polynomial = scan_polynomial(branch, n, pt.params);
        pt.root = largest_real_root(pt.polynomial, tol);
        pt.normalized = power(pt.root, n);
        return pt;
    };

    // Each axis is a list of point indices that must increase in order.
    std::vector<std::vector<std::size_t>> axes;
    if (branch == ScanBranch::A1x3 || branch == ScanBranch::A1x4) {
        std::vector<std::size_t> axis;
        for (unsigned d = lo; d <= hi; ++d) {
            axis.push_back(res.points.size());
            res.points.push_back(point({d}));
        }
        axes.push_back(std::move(axis));
    } else {
        unsigned a_lo = lo, a_hi = hi, b_lo = lo, b_hi = hi;
        if (branch == ScanBranch::A1x5b) {
            a_lo = std::max(lo, 1u);
            b_hi = std::min(hi, g == 0 ? 0 : g - 1);
        }
        if (a_lo > a_hi || b_lo > b_hi) throw std::invalid_argument("scan: empty parameter range");
        const std::size_t nb = b_hi - b_lo + 1;
        for (unsigned a = a_lo; a <= a_hi; ++a)
            for (unsigned b = b_lo; b <= b_hi; ++b) res.points.push_back(point({a, b}));
        const std::size_t na = a_hi - a_lo + 1;
        for (std::size_t i = 0; i < na; ++i) {
            std::vector<std::size_t> axis;
            for (std::size_t j = 0; j < nb; ++j) axis.push_back(i * nb + j);
            axes.push_back(std::move(axis));
        }
        for (std::size_t j = 0; j < nb; ++j) {
            std::vector<std::size_t> axis;
            for (std::size_t i = 0; i < na; ++i) axis.push_back(i * nb + j);
            axes.push_back(std::move(axis));
        }
    }

    bool increasing = true;
    for (const auto& axis : axes)
        for (std::size_t i = 0; i + 1 < axis.size(); ++i) {
            Order o = certify_increase(res.points[axis[i]].root, res.points[axis[i + 1]].root);
            if (o == Order::unresolved) ++res.unresolved;
            if (o != Order::increasing) increasing = false;
        }
    res.strictly_increasing = increasing;
    return res;
}

LowDegreeReport verify_low_degree_exceptions(const mpq_class& tol) {
    LowDegreeReport r;
    const IntPolynomial p2{-1, -1, 1};
    const IntPolynomial p3{-1, -2, 0, 1};
    const RootEnclosure mu = largest_real_root(p2, tol);
    const RootEnclosure mu3 = largest_real_root(p3, tol);
    r.mu_squared = power(mu, 2);
    r.mu_cubed = power(mu3, 3);
    r.n2_skew_reciprocal = is_skew_reciprocal(p2).has_value();
    r.n2_below_bound = compare_power_to_silver_square(mu, 2) == std::strong_ordering::less;
    r.n3_skew_up_to_cyclotomic = is_skew_reciprocal_up_to_cyclotomic(p3);
    r.n3_below_bound = compare_power_to_silver_square(mu3, 3) == std::strong_ordering::less;
    const IntPolynomial excluded_a{-1, 0, 0, -1, 1};
    const IntPolynomial excluded_b{-1, -2, 0, 0, 1};
    r.n4_excluded = true;
    for (const auto& rep : enumerate_admissible(4, all_families(), tol))
        if (rep.polynomial == excluded_a || rep.polynomial == excluded_b) r.n4_excluded = false;
    return r;
}

}  // namespace stretchlab
