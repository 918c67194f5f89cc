#pragma once

// Exact univariate polynomials with arbitrary-precision integer coefficients.

#include <gmpxx.h>

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace stretchlab {

/// Integer polynomial, coefficients stored low degree first.
/// The zero polynomial has an empty coefficient vector; otherwise the
/// leading coefficient is nonzero.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    /// c * t^degree
    static IntPolynomial monomial(const mpz_class& c, std::size_t degree);
    static IntPolynomial constant(const mpz_class& c) { return monomial(c, 0); }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }

    /// Coefficient of t^i; zero beyond the degree.
    mpz_class coeff(std::size_t i) const;
    const mpz_class& leading() const;
    const mpz_class& constant_term() const;

    bool is_monic() const { return !is_zero() && leading() == 1; }

    IntPolynomial& operator+=(const IntPolynomial& rhs);
    IntPolynomial& operator-=(const IntPolynomial& rhs);
    IntPolynomial& operator*=(const IntPolynomial& rhs);
    IntPolynomial& operator*=(const mpz_class& c);

    friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs += rhs; }
    friend IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs -= rhs; }
    friend IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs);
    friend IntPolynomial operator*(IntPolynomial lhs, const mpz_class& c) { return lhs *= c; }
    friend IntPolynomial operator-(IntPolynomial p);
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

    /// Total order: by degree, then coefficients from the top down.
    friend bool canonical_less(const IntPolynomial& a, const IntPolynomial& b);

    /// Human-readable form such as "t^4 - t^2 - 2*t - 1".
    std::string to_string(char var = 't') const;

private:
    void trim();
    std::vector<mpz_class> coeffs_;
};

using RationalCoeffs = std::vector<mpq_class>;

/// Result of division over Q. `integral` is set when every quotient and
/// remainder coefficient is an integer.
struct RationalDivision {
    RationalCoeffs quotient;
    RationalCoeffs remainder;
    bool integral = true;

    bool remainder_is_zero() const { return remainder.empty(); }
    IntPolynomial integer_quotient() const;
    IntPolynomial integer_remainder() const;
};

/// Euclidean division over Q; throws std::domain_error on a zero divisor.
RationalDivision divrem(const IntPolynomial& p, const IntPolynomial& q);

/// p / q when the division is exact over Z, otherwise nullopt.
std::optional<IntPolynomial> exact_quotient(const IntPolynomial& p, const IntPolynomial& q);

IntPolynomial derivative(const IntPolynomial& p);

/// Nonnegative gcd of the coefficients (0 for the zero polynomial).
mpz_class content(const IntPolynomial& p);

/// p divided by its content; the sign of the leading coefficient is kept.
IntPolynomial primitive_part(const IntPolynomial& p);

/// lc(q)^(deg p - deg q + 1) * p mod q, computed without fractions.
IntPolynomial pseudo_remainder(const IntPolynomial& p, const IntPolynomial& q);

/// Primitive gcd with positive leading coefficient.
IntPolynomial gcd(const IntPolynomial& p, const IntPolynomial& q);

/// Primitive square-free part p / gcd(p, p'), leading sign kept.
IntPolynomial square_free_part(const IntPolynomial& p);

/// Yun's decomposition: p = c * prod_i factors[i]^(i+1), each factor
/// square-free, primitive, pairwise coprime. Trailing entries may be 1.
std::vector<IntPolynomial> square_free_decomposition(const IntPolynomial& p);

mpq_class evaluate(const IntPolynomial& p, const mpq_class& x);

/// Sign of p(x) in {-1, 0, 1}, computed with integer arithmetic only.
int sign_at(const IntPolynomial& p, const mpq_class& x);

/// t^deg(p) * p(1/t).
IntPolynomial reversed(const IntPolynomial& p);

/// p(-t).
IntPolynomial negate_variable(const IntPolynomial& p);

/// p(t^k).
IntPolynomial substitute_power(const IntPolynomial& p, unsigned k);

/// t^k - 1
IntPolynomial power_minus_one(unsigned k);

/// Smallest k with t^k dividing p (0 for p(0) != 0).
unsigned lowest_degree(const IntPolynomial& p);

/// Number of sign changes in the coefficient sequence (zeros skipped).
int sign_variations(const IntPolynomial& p);

/// Cyclotomic polynomial Phi_m, from the Moebius product of (t^d - 1).
/// Throws std::invalid_argument for m == 0.
IntPolynomial cyclotomic(unsigned m);

/// Euler's totient.
unsigned totient(unsigned m);

}  // namespace stretchlab
