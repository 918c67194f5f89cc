#include "stretchlab/classify.hpp"

#include "stretchlab/roots.hpp"

#include <stdexcept>
#include <vector>

namespace stretchlab {

std::optional<Sign> is_reciprocal(const IntPolynomial& p) {
    if (p.is_zero()) throw std::domain_error("is_reciprocal of the zero polynomial");
    const int m = p.degree();
    for (Sign eps : {1, -1}) {
        bool ok = true;
        for (int j = 0; j <= m && ok; ++j) ok = p.coeffs()[j] == eps * p.coeffs()[m - j];
        if (ok) return eps;
    }
    return std::nullopt;
}

std::optional<Sign> is_skew_reciprocal(const IntPolynomial& p) {
    if (p.is_zero()) throw std::domain_error("is_skew_reciprocal of the zero polynomial");
    if (p.constant_term() == 0) throw std::domain_error("is_skew_reciprocal: p(0) = 0, strip powers of t first");
    const int m = p.degree();
    if (m % 2 != 0) return std::nullopt;
    for (Sign eps : {1, -1}) {
        bool ok = true;
        for (int j = 0; j <= m && ok; ++j) {
            const int s = (j % 2 == 0) ? eps : -eps;
            ok = p.coeffs()[j] == s * p.coeffs()[m - j];
        }
        if (ok) return eps;
    }
    return std::nullopt;
}

namespace {

struct CyclotomicEntry {
    unsigned m;
    unsigned degree;
    IntPolynomial phi;
    mpz_class value_at_two;
};

constexpr unsigned kTableDegree = 128;

// Phi_m for every m with phi(m) <= kTableDegree; built once, read-only afterwards.
const std::vector<CyclotomicEntry>& cyclotomic_table() {
    static const std::vector<CyclotomicEntry> table = [] {
        std::vector<CyclotomicEntry> t;
        const unsigned limit = 2 * kTableDegree * kTableDegree;
        for (unsigned m = 1; m <= limit; ++m) {
            unsigned d = totient(m);
            if (d > kTableDegree) continue;
            IntPolynomial phi = cyclotomic(m);
            mpz_class v = evaluate(phi, 2).get_num();
            t.push_back({m, d, std::move(phi), std::move(v)});
        }
        return t;
    }();
    return table;
}

void strip_by(CyclotomicSplit& split, mpz_class& value_at_two, unsigned m, const IntPolynomial& phi,
              const mpz_class& phi_at_two) {
    for (;;) {
        if (split.core.degree() < phi.degree()) return;
        if (value_at_two != 0 && !mpz_divisible_p(value_at_two.get_mpz_t(), phi_at_two.get_mpz_t())) return;
        auto q = exact_quotient(split.core, phi);
        if (!q) return;
        split.core = std::move(*q);
        split.cyclotomic_part *= phi;
        split.orders.push_back(m);
        value_at_two = evaluate(split.core, 2).get_num();
    }
}

}  // namespace

CyclotomicSplit strip_cyclotomic(const IntPolynomial& p) {
    if (p.is_zero()) throw std::domain_error("strip_cyclotomic of the zero polynomial");
    if (p.constant_term() == 0) throw std::domain_error("strip_cyclotomic: p(0) = 0");
    CyclotomicSplit split{IntPolynomial{1}, p, {}};
    const unsigned deg = static_cast<unsigned>(p.degree());
    mpz_class at_two = evaluate(p, 2).get_num();
    if (deg <= kTableDegree) {
        for (const auto& entry : cyclotomic_table()) {
            if (entry.degree > deg) continue;
            strip_by(split, at_two, entry.m, entry.phi, entry.value_at_two);
        }
        return split;
    }
    // phi(m) >= sqrt(m / 2), so phi(m) <= deg forces m <= 2 deg^2.
    const unsigned long limit = 2ul * deg * deg;
    for (unsigned m = 1; m <= limit; ++m) {
        if (totient(m) > static_cast<unsigned>(split.core.degree())) continue;
        IntPolynomial phi = cyclotomic(m);
        strip_by(split, at_two, m, phi, evaluate(phi, 2).get_num());
    }
    return split;
}

bool is_skew_reciprocal_up_to_cyclotomic(const IntPolynomial& p) {
    if (p.is_zero() || p.constant_term() == 0) return false;
    CyclotomicSplit split = strip_cyclotomic(p);
    if (split.core.degree() <= 0) return true;
    return is_skew_reciprocal(split.core).has_value();
}

bool parity_condition(const IntPolynomial& p) {
    const int k = p.degree();
    for (int d = 0; d <= k; ++d) {
        mpz_class s = p.coeffs()[d] + p.coeffs()[k - d];
        if (mpz_odd_p(s.get_mpz_t())) return false;
    }
    return true;
}

SpectralClass classify(const IntPolynomial& p) {
    if (p.is_zero()) throw std::domain_error("classify of the zero polynomial");
    SpectralClass c;
    c.reciprocal = is_reciprocal(p);
    c.parity_ok = parity_condition(p);
    if (p.constant_term() == 0) {
        c.cyclotomic_part = IntPolynomial{1};
        c.core = p;
        return c;
    }
    c.skew_reciprocal = is_skew_reciprocal(p);
    CyclotomicSplit split = strip_cyclotomic(p);
    c.cyclotomic_part = std::move(split.cyclotomic_part);
    c.core = std::move(split.core);
    c.degenerate = c.core.degree() <= 0;
    c.skew_up_to_cyclotomic = c.degenerate || is_skew_reciprocal(c.core).has_value();
    return c;
}

namespace {

std::vector<mpz_class> signed_divisors(const mpz_class& n) {
    std::vector<mpz_class> out;
    mpz_class a = abs(n);
    for (mpz_class d = 1; d * d <= a; ++d) {
        if (a % d != 0) continue;
        mpz_class e = a / d;
        out.push_back(d);
        out.push_back(-d);
        if (e != d) {
            out.push_back(e);
            out.push_back(-e);
        }
    }
    return out;
}

}  // namespace

bool quartic_irreducible(const IntPolynomial& f) {
    if (f.degree() != 4 || !f.is_monic()) throw std::invalid_argument("quartic_irreducible: need a monic quartic");
    const mpz_class A = f.coeff(3);
    const mpz_class B = f.coeff(2);
    const mpz_class C = f.coeff(1);
    const mpz_class D = f.coeff(0);
    if (D == 0) return false;
    const auto divisors = signed_divisors(D);
    for (const auto& r : divisors)
        if (sign_at(f, mpq_class(r)) == 0) return false;
    // (x^2 + a x + b)(x^2 + c x + d): a + c = A, b + d + a c = B, a d + b c = C, b d = D.
    for (const auto& b : divisors) {
        const mpz_class d = D / b;
        const mpz_class disc = A * A - 4 * (B - b - d);
        if (disc < 0 || !mpz_perfect_square_p(disc.get_mpz_t())) continue;
        const mpz_class s = sqrt(disc);
        for (const mpz_class& twice_a : {mpz_class(A + s), mpz_class(A - s)}) {
            if (mpz_odd_p(twice_a.get_mpz_t())) continue;
            const mpz_class a = twice_a / 2;
            const mpz_class c = A - a;
            if (a * d + b * c == C) return false;
        }
    }
    return true;
}

SqrtMinPoly sqrt_min_poly(long p, long q) {
    const long disc = p * p - 4 * q;
    if (disc < 0) throw std::domain_error("sqrt_min_poly: t^2 - p t + q has no real root");
    // alpha = (p + sqrt(disc)) / 2 > 1  iff  sqrt(disc) > 2 - p.
    const bool above_one = (2 - p < 0) || (disc > (2 - p) * (2 - p));
    if (!above_one) throw std::domain_error("sqrt_min_poly: largest root is not > 1");
    IntPolynomial f{q, 0, -p, 0, 1};
    return {f, quartic_irreducible(f)};
}

bool is_salem_like(const IntPolynomial& p) {
    if (!p.is_monic()) throw std::invalid_argument("is_salem_like: polynomial must be monic");
    if (p.degree() < 2 || !is_reciprocal(p)) return false;
    if (real_roots_in_interval(p, 1, cauchy_bound(p)) == 0) return false;
    return unit_circle_root_count(p).count == p.degree() - 2;
}

}  // namespace stretchlab
