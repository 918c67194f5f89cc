#pragma once

// Certified real-root machinery: Sturm sequences, dyadic bisection,
// exact comparison of real algebraic numbers, unit-circle root counts.

#include "stretchlab/polynomial.hpp"

#include <gmpxx.h>

#include <complex>
#include <compare>
#include <string>
#include <vector>

namespace stretchlab {

/// Default enclosure width, 2^-40 (about 9.1e-13).
mpq_class default_tolerance();

/// 2^e for any integer e.
mpq_class dyadic(long e);

/// Closed rational interval.
struct Interval {
    mpq_class lo;
    mpq_class hi;

    mpq_class width() const { return hi - lo; }
    mpq_class mid() const { return (lo + hi) / 2; }
    bool contains(const mpq_class& x) const { return lo <= x && x <= hi; }
    bool overlaps(const Interval& o) const { return !(hi < o.lo || o.hi < lo); }
    /// Every point of this interval is strictly below every point of `o`.
    bool strictly_below(const Interval& o) const { return hi < o.lo; }
};

/// Primitive-part Sturm sequence of a square-free polynomial.
class SturmChain {
public:
    /// The first chain element is the square-free part of `p`.
    explicit SturmChain(const IntPolynomial& p);

    const std::vector<IntPolynomial>& chain() const noexcept { return chain_; }
    const IntPolynomial& head() const { return chain_.front(); }

    int variations_at(const mpq_class& x) const;
    int variations_at_plus_infinity() const;
    int variations_at_minus_infinity() const;

    /// Distinct real roots in (a, b]; requires a < b.
    int count(const mpq_class& a, const mpq_class& b) const;
    /// Distinct real roots on the whole line.
    int count_all() const;

private:
    std::vector<IntPolynomial> chain_;
};

/// A dyadic interval isolating one real root of `polynomial`.
/// `polynomial` is the square-free part of the input, so it changes sign
/// across the root unless an endpoint is the root itself.
struct RootEnclosure {
    mpq_class lo;
    mpq_class hi;
    IntPolynomial polynomial;

    Interval interval() const { return {lo, hi}; }
    mpq_class width() const { return hi - lo; }
    mpq_class mid() const { return (lo + hi) / 2; }
    double approx() const { return mid().get_d(); }
};

/// 1 + max|c_i| / |c_lead|.
mpq_class cauchy_bound(const IntPolynomial& p);

/// Distinct real roots of p in (a, b]. Throws for the zero polynomial or a >= b.
int real_roots_in_interval(const IntPolynomial& p, const mpq_class& a, const mpq_class& b);

/// Enclosure of the largest real root, width <= tol. Pure bisection from the
/// power-of-two Cauchy bound. Throws std::domain_error when p is zero,
/// constant, or has no real root.
RootEnclosure largest_real_root(const IntPolynomial& p, const mpq_class& tol = default_tolerance());

/// Shrinks an enclosure by bisection until its width is <= tol.
RootEnclosure refine(const RootEnclosure& e, const mpq_class& tol);

/// Exact comparison of the roots isolated by two enclosures.
std::strong_ordering compare_roots(const RootEnclosure& a, const RootEnclosure& b);

/// [lo^n, hi^n], rounded outward, for an enclosure of a positive root.
Interval power(const RootEnclosure& e, unsigned n);

/// The integer r as the root of t - r, enclosed by [r - 1/2, r + 1/2].
RootEnclosure integer_root(long r);

/// Exact comparison of x^n with 3 + 2 sqrt 2, x > 0 the root isolated by e.
/// Interval refinement first; ties fall back to t^(2n) - 6 t^n + 1.
std::strong_ordering compare_power_to_silver_square(const RootEnclosure& e, unsigned n);

enum class Certainty { exact, numeric };

struct UnitCircleCount {
    int count = 0;
    Certainty certainty = Certainty::exact;
};

/// Roots with |z| = 1 counted with multiplicity. Reciprocal inputs are
/// handled exactly through the trace substitution x = t + 1/t; any other
/// input is first replaced by its gcd with its reversal, which keeps every
/// unit-circle root and its multiplicity. Throws std::domain_error if p(0) == 0.
UnitCircleCount unit_circle_root_count(const IntPolynomial& p);

/// Numeric path only, for any p with p(0) != 0.
int unit_circle_root_count_numeric(const IntPolynomial& p, double tol = 1e-9);

/// For palindromic p of even degree 2g: r with p(t) = t^g r(t + 1/t).
IntPolynomial trace_polynomial(const IntPolynomial& p);

/// All complex roots with multiplicity, from companion-matrix eigenvalues of
/// each square-free factor. Floating point; never used in certified paths.
std::vector<std::complex<double>> numeric_roots(const IntPolynomial& p);

/// Decimal string of x with `significant` significant digits.
std::string to_decimal(const mpq_class& x, int significant = 10);

/// Dyadic rational rendered as "p/2^k" (or an integer "p").
std::string dyadic_string(const mpq_class& x);

}  // namespace stretchlab
