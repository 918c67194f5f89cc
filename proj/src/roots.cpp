#include "stretchlab/roots.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace stretchlab {

mpq_class default_tolerance() { return dyadic(-40); }

mpq_class dyadic(long e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    if (e >= 0) return mpq_class(p);
    mpq_class q(mpz_class(1), p);
    q.canonicalize();
    return q;
}

// ---------------------------------------------------------------- Sturm chain

SturmChain::SturmChain(const IntPolynomial& p) {
    if (p.is_zero()) throw std::domain_error("Sturm chain of the zero polynomial");
    chain_.push_back(square_free_part(p));
    if (chain_.back().degree() <= 0) return;
    chain_.push_back(primitive_part(derivative(chain_.back())));
    for (;;) {
        const IntPolynomial& prev = chain_[chain_.size() - 2];
        const IntPolynomial& cur = chain_.back();
        if (cur.degree() <= 0) break;
        IntPolynomial r = pseudo_remainder(prev, cur);
        if (r.is_zero()) break;
        // prem = lc^(delta+1) * rem; the next element is -rem up to a positive factor.
        const int delta = prev.degree() - cur.degree();
        const bool odd_power = (delta + 1) % 2 == 1;
        if (!(cur.leading() < 0 && odd_power)) r = -r;
        chain_.push_back(primitive_part(r));
    }
}

int SturmChain::variations_at(const mpq_class& x) const {
    int changes = 0;
    int last = 0;
    for (const auto& f : chain_) {
        int s = sign_at(f, x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

int SturmChain::variations_at_plus_infinity() const {
    int changes = 0;
    int last = 0;
    for (const auto& f : chain_) {
        int s = sgn(f.leading());
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

int SturmChain::variations_at_minus_infinity() const {
    int changes = 0;
    int last = 0;
    for (const auto& f : chain_) {
        int s = sgn(f.leading()) * (f.degree() % 2 == 0 ? 1 : -1);
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

int SturmChain::count(const mpq_class& a, const mpq_class& b) const {
    if (!(a < b)) throw std::invalid_argument("Sturm count requires a < b");
    return variations_at(a) - variations_at(b);
}

int SturmChain::count_all() const { return variations_at_minus_infinity() - variations_at_plus_infinity(); }

// ---------------------------------------------------------------- isolation

mpq_class cauchy_bound(const IntPolynomial& p) {
    if (p.degree() < 1) throw std::domain_error("Cauchy bound needs a nonconstant polynomial");
    mpz_class m = 0;
    for (int i = 0; i < p.degree(); ++i) {
        mpz_class a = abs(p.coeffs()[i]);
        if (a > m) m = a;
    }
    return mpq_class(1) + mpq_class(m, abs(p.leading()));
}

int real_roots_in_interval(const IntPolynomial& p, const mpq_class& a, const mpq_class& b) {
    if (p.is_zero()) throw std::domain_error("root count of the zero polynomial");
    if (!(a < b)) throw std::invalid_argument("real_roots_in_interval requires a < b");
    if (p.degree() == 0) return 0;
    return SturmChain(p).count(a, b);
}

namespace {

mpq_class power_of_two_at_least(const mpq_class& x) {
    long e = 0;
    while (dyadic(e) < x) ++e;
    return dyadic(e);
}

// q has exactly one root in (lo, hi], simple, with q(lo) != 0.
void bisect_isolated(const IntPolynomial& q, mpq_class& lo, mpq_class& hi, const mpq_class& tol) {
    int s_hi = sign_at(q, hi);
    while (hi - lo > tol) {
        mpq_class mid = (lo + hi) / 2;
        int s_mid = sign_at(q, mid);
        bool upper = (s_hi == 0) || (s_mid != 0 && s_mid != s_hi);
        if (upper) {
            lo = mid;
        } else {
            hi = mid;
            s_hi = s_mid;
        }
    }
}

}  // namespace

RootEnclosure largest_real_root(const IntPolynomial& p, const mpq_class& tol) {
    if (p.is_zero()) throw std::domain_error("largest_real_root of the zero polynomial");
    if (p.degree() < 1) throw std::domain_error("largest_real_root of a constant polynomial");
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");

    const mpq_class bound = power_of_two_at_least(cauchy_bound(p));
    mpq_class lo = -bound;
    mpq_class hi = bound;

    // Exactly one sign variation (after removing powers of t) certifies a
    // single, simple positive root, which is then the largest real root.
    const unsigned k = lowest_degree(p);
    IntPolynomial stripped = k == 0 ? p : IntPolynomial(std::vector<mpz_class>(p.coeffs().begin() + k, p.coeffs().end()));
    if (sign_variations(stripped) == 1) {
        const IntPolynomial q = primitive_part(stripped);
        const int neg_lead = -sgn(q.leading());
        while (hi - lo > tol || lo < 0) {
            mpq_class mid = (lo + hi) / 2;
            if (mid < 0 || sign_at(q, mid) == neg_lead) lo = mid;
            else hi = mid;
        }
        return RootEnclosure{lo, hi, q};
    }

    SturmChain sturm(p);
    const IntPolynomial& q = sturm.head();
    int v_lo = sturm.variations_at(lo);
    int v_hi = sturm.variations_at(hi);
    if (v_lo - v_hi == 0) throw std::domain_error("largest_real_root: polynomial has no real root");
    while (v_lo - v_hi > 1) {
        mpq_class mid = (lo + hi) / 2;
        int v_mid = sturm.variations_at(mid);
        if (v_mid - v_hi >= 1) {
            lo = mid;
            v_lo = v_mid;
        } else {
            hi = mid;
            v_hi = v_mid;
        }
    }
    // Exactly one root in (lo, hi]; lo may itself be a (smaller) root.
    while (sign_at(q, lo) == 0) {
        mpq_class mid = (lo + hi) / 2;
        if (sturm.count(mid, hi) == 1) lo = mid;
        else hi = mid;
    }
    bisect_isolated(q, lo, hi, tol);
    return RootEnclosure{lo, hi, q};
}

RootEnclosure refine(const RootEnclosure& e, const mpq_class& tol) {
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
    RootEnclosure out = e;
    if (out.width() <= tol) return out;
    if (sign_at(out.polynomial, out.lo) == 0) {
        // Root sits on the lower endpoint; [lo, lo + tol] is a sub-enclosure.
        out.hi = out.lo + tol;
        return out;
    }
    bisect_isolated(out.polynomial, out.lo, out.hi, tol);
    return out;
}

std::strong_ordering compare_roots(const RootEnclosure& a, const RootEnclosure& b) {
    RootEnclosure x = a;
    RootEnclosure y = b;
    IntPolynomial g = gcd(x.polynomial, y.polynomial);
    for (int round = 0; round < 4096; ++round) {
        if (x.hi < y.lo) return std::strong_ordering::less;
        if (y.hi < x.lo) return std::strong_ordering::greater;
        if (g.degree() >= 1) {
            mpq_class lo = x.lo > y.lo ? x.lo : y.lo;
            mpq_class hi = x.hi < y.hi ? x.hi : y.hi;
            int common = sign_at(g, lo) == 0 ? 1 : 0;
            if (lo < hi) common += real_roots_in_interval(g, lo, hi);
            if (common > 0) return std::strong_ordering::equal;
        }
        x = refine(x, x.width() / 2);
        y = refine(y, y.width() / 2);
    }
    throw std::runtime_error("compare_roots: roots could not be separated");
}

Interval power(const RootEnclosure& e, unsigned n) {
    if (e.lo < 0) throw std::domain_error("power: enclosure must lie in [0, inf)");
    mpq_class lo = 1;
    mpq_class hi = 1;
    for (unsigned i = 0; i < n; ++i) {
        lo *= e.lo;
        hi *= e.hi;
    }
    // Outward rounding keeps the endpoints short.
    const std::size_t bits =
        std::max(mpz_sizeinbase(e.lo.get_den_mpz_t(), 2), mpz_sizeinbase(e.hi.get_den_mpz_t(), 2)) + 64;
    mpz_class scale = 1;
    scale <<= bits;
    mpz_class down = lo.get_num() * scale;
    mpz_fdiv_q(down.get_mpz_t(), down.get_mpz_t(), lo.get_den_mpz_t());
    mpz_class up = hi.get_num() * scale;
    mpz_cdiv_q(up.get_mpz_t(), up.get_mpz_t(), hi.get_den_mpz_t());
    mpq_class rlo(down, scale), rhi(up, scale);
    rlo.canonicalize();
    rhi.canonicalize();
    return {rlo, rhi};
}

RootEnclosure integer_root(long r) {
    return RootEnclosure{mpq_class(2 * r - 1, 2), mpq_class(2 * r + 1, 2), IntPolynomial{-r, 1}};
}

std::strong_ordering compare_power_to_silver_square(const RootEnclosure& e, unsigned n) {
    if (n == 0) throw std::invalid_argument("compare_power_to_silver_square: n must be positive");
    RootEnclosure x = e;
    if (x.lo < 0) {
        if (compare_roots(x, integer_root(0)) != std::strong_ordering::greater)
            throw std::domain_error("compare_power_to_silver_square: root must be positive");
        while (x.lo < 0) x = refine(x, x.width() / 2);
    }
    RootEnclosure bound = largest_real_root(IntPolynomial{1, -6, 1}, dyadic(-64));
    for (int round = 0; round < 6; ++round) {
        const Interval v = power(x, n);
        if (v.hi < bound.lo) return std::strong_ordering::less;
        if (bound.hi < v.lo) return std::strong_ordering::greater;
        x = refine(x, x.width() * dyadic(-32));
        bound = refine(bound, bound.width() * dyadic(-32));
    }
    IntPolynomial q = IntPolynomial::monomial(1, 2 * n) - IntPolynomial::monomial(6, n) + IntPolynomial{1};
    return compare_roots(x, largest_real_root(q, dyadic(-8)));
}

// ---------------------------------------------------------------- unit circle

IntPolynomial trace_polynomial(const IntPolynomial& p) {
    if (p.is_zero() || p.degree() % 2 != 0) throw std::invalid_argument("trace_polynomial: need even degree");
    const int g = p.degree() / 2;
    for (int j = 0; j <= p.degree(); ++j)
        if (p.coeffs()[j] != p.coeffs()[p.degree() - j])
            throw std::invalid_argument("trace_polynomial: polynomial is not palindromic");
    // t^j + t^-j = D_j(x): D_0 = 2, D_1 = x, D_j = x D_{j-1} - D_{j-2}.
    const IntPolynomial x{0, 1};
    IntPolynomial d_prev{2};
    IntPolynomial d_cur = x;
    IntPolynomial r = IntPolynomial::constant(p.coeffs()[g]);
    for (int j = 1; j <= g; ++j) {
        r += d_cur * p.coeffs()[g + j];
        IntPolynomial next = x * d_cur - d_prev;
        d_prev = std::move(d_cur);
        d_cur = std::move(next);
    }
    return r;
}

namespace {

enum class Palindrome { none, plus, minus };

Palindrome palindrome_sign(const IntPolynomial& p) {
    const int n = p.degree();
    bool plus = true;
    bool minus = true;
    for (int j = 0; j <= n; ++j) {
        const mpz_class& a = p.coeffs()[j];
        const mpz_class& b = p.coeffs()[n - j];
        if (a != b) plus = false;
        if (a != -b) minus = false;
    }
    if (plus) return Palindrome::plus;
    if (minus) return Palindrome::minus;
    return Palindrome::none;
}

int roots_in_closed_interval_with_multiplicity(const IntPolynomial& r, const mpq_class& a, const mpq_class& b) {
    int total = 0;
    auto factors = square_free_decomposition(r);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const IntPolynomial& s = factors[i];
        if (s.degree() < 1) continue;
        int distinct = SturmChain(s).count(a, b) + (sign_at(s, a) == 0 ? 1 : 0);
        total += static_cast<int>(i + 1) * distinct;
    }
    return total;
}

}  // namespace

UnitCircleCount unit_circle_root_count(const IntPolynomial& p) {
    if (p.is_zero()) throw std::domain_error("unit_circle_root_count of the zero polynomial");
    if (p.constant_term() == 0) throw std::domain_error("unit_circle_root_count: p(0) = 0");
    // Roots on |z| = 1 are shared with the reversal, with equal multiplicity.
    IntPolynomial f = palindrome_sign(p) == Palindrome::none ? gcd(p, reversed(p)) : p;
    if (f.degree() < 1) return {0, Certainty::exact};
    int count = 0;
    for (;;) {
        Palindrome s = palindrome_sign(f);
        if (s == Palindrome::minus && f.degree() >= 1) {
            f = *exact_quotient(f, IntPolynomial{-1, 1});
            ++count;
        } else if (f.degree() % 2 == 1) {
            f = *exact_quotient(f, IntPolynomial{1, 1});
            ++count;
        } else {
            break;
        }
    }
    if (f.degree() >= 2) count += 2 * roots_in_closed_interval_with_multiplicity(trace_polynomial(f), -2, 2);
    return {count, Certainty::exact};
}

std::vector<std::complex<double>> numeric_roots(const IntPolynomial& p) {
    if (p.is_zero()) throw std::domain_error("numeric_roots of the zero polynomial");
    std::vector<std::complex<double>> roots;
    auto factors = square_free_decomposition(p);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const IntPolynomial& s = factors[i];
        const int n = s.degree();
        if (n < 1) continue;
        std::vector<std::complex<double>> local;
        if (n == 1) {
            local.emplace_back(-s.coeffs()[0].get_d() / s.coeffs()[1].get_d(), 0.0);
        } else {
            Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
            const double lead = s.leading().get_d();
            for (int r = 0; r + 1 < n; ++r) c(r, r + 1) = 1.0;
            for (int j = 0; j < n; ++j) c(n - 1, j) = -s.coeffs()[j].get_d() / lead;
            Eigen::EigenSolver<Eigen::MatrixXd> solver(c, false);
            for (int j = 0; j < n; ++j) local.push_back(solver.eigenvalues()[j]);
        }
        for (std::size_t m = 0; m <= i; ++m) roots.insert(roots.end(), local.begin(), local.end());
    }
    return roots;
}

int unit_circle_root_count_numeric(const IntPolynomial& p, double tol) {
    if (p.is_zero()) throw std::domain_error("unit_circle_root_count of the zero polynomial");
    if (p.constant_term() == 0) throw std::domain_error("unit_circle_root_count: p(0) = 0");
    int count = 0;
    for (const auto& z : numeric_roots(p))
        if (std::abs(std::abs(z) - 1.0) <= tol) ++count;
    return count;
}

// ---------------------------------------------------------------- rendering

namespace {

mpz_class pow10(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

mpq_class pow10q(long e) {
    if (e >= 0) return mpq_class(pow10(static_cast<unsigned long>(e)));
    mpq_class q(mpz_class(1), pow10(static_cast<unsigned long>(-e)));
    q.canonicalize();
    return q;
}

}  // namespace

std::string to_decimal(const mpq_class& x, int significant) {
    if (significant < 1) throw std::invalid_argument("to_decimal: need at least one digit");
    if (x == 0) return "0";
    const mpq_class a = abs(x);
    const long bits = static_cast<long>(mpz_sizeinbase(a.get_num_mpz_t(), 2)) -
                      static_cast<long>(mpz_sizeinbase(a.get_den_mpz_t(), 2));
    long e = static_cast<long>(std::floor(static_cast<double>(bits) * std::log10(2.0)));
    while (pow10q(e) > a) --e;
    while (pow10q(e + 1) <= a) ++e;

    // N = round(a * 10^(significant - 1 - e)), half away from zero.
    mpq_class scaled = a * pow10q(significant - 1 - e);
    mpz_class n = (scaled.get_num() * 2 + scaled.get_den()) / (scaled.get_den() * 2);
    if (n == pow10(static_cast<unsigned long>(significant))) {
        n /= 10;
        ++e;
    }
    std::string digits = n.get_str();
    std::string out = x < 0 ? "-" : "";
    if (e >= 0) {
        if (e + 1 >= significant) {
            out += digits + std::string(static_cast<std::size_t>(e + 1 - significant), '0');
        } else {
            out += digits.substr(0, static_cast<std::size_t>(e + 1)) + "." + digits.substr(static_cast<std::size_t>(e + 1));
        }
    } else {
        out += "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + digits;
    }
    return out;
}

std::string dyadic_string(const mpq_class& x) {
    const mpz_class& den = x.get_den();
    if (den == 1) return x.get_num().get_str();
    if (mpz_popcount(den.get_mpz_t()) == 1) {
        std::size_t k = mpz_sizeinbase(den.get_mpz_t(), 2) - 1;
        return x.get_num().get_str() + "/2^" + std::to_string(k);
    }
    return x.get_str();
}

}  // namespace stretchlab
