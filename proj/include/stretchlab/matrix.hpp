#pragma once

// Square integer matrices: characteristic polynomials, determinants,
// primitivity and Perron roots.

#include "stretchlab/polynomial.hpp"
#include "stretchlab/roots.hpp"

#include <gmpxx.h>

#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace stretchlab {

class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t n) : n_(n), entries_(n * n) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
    /// Throws std::invalid_argument unless `rows` is square.
    static IntMatrix from_rows(const std::vector<std::vector<mpz_class>>& rows);
    static IntMatrix identity(std::size_t n);

    std::size_t size() const noexcept { return n_; }
    mpz_class& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
    const mpz_class& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    /// Row-major entries.
    const std::vector<mpz_class>& entries() const noexcept { return entries_; }

    bool is_nonnegative() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

private:
    std::size_t n_ = 0;
    std::vector<mpz_class> entries_;
};

/// Lexicographic order on the row-major entry sequence (same size only).
bool lex_less(const IntMatrix& a, const IntMatrix& b);

/// det(tI - A), division-free (Berkowitz).
IntPolynomial char_poly(const IntMatrix& a);

/// Exact determinant, fraction-free (Bareiss).
mpz_class determinant(const IntMatrix& a);

bool in_GLnZ(const IntMatrix& a);

struct PrimitivityReport {
    bool nonnegative = false;
    bool strongly_connected = false;
    /// gcd of directed cycle lengths; 0 when the digraph has no cycle.
    unsigned period = 0;
    bool primitive = false;
};

/// Graph-theoretic primitivity: nonnegative, strongly connected, period 1.
PrimitivityReport is_primitive(const IntMatrix& a);

/// Wielandt check: the boolean power A^((n-1)^2 + 1) is entry-wise positive.
bool wielandt_primitive(const IntMatrix& a);

/// Companion matrix with the negated coefficients in the last row.
/// Throws std::invalid_argument for non-monic or constant p.
IntMatrix companion(const IntPolynomial& p);

class PerronError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Enclosure of rho(A), the largest real root of char_poly(A). Throws
/// PerronError if there is no real eigenvalue > 1, or if some complex
/// eigenvalue's modulus exceeds it by more than 1e-9 (numeric check).
RootEnclosure spectral_radius(const IntMatrix& a, const mpq_class& tol = default_tolerance());

/// rho(A)^n as an interval, n = size of A.
Interval normalized_spectral_radius(const IntMatrix& a, const mpq_class& tol = default_tolerance());

/// Block form [[P, *], [0, F]] with P a split x split permutation matrix.
bool verify_block_structure(const IntMatrix& m, std::size_t split);

/// Eigenvalue moduli from a double-precision eigensolve.
std::vector<double> numeric_eigenvalue_moduli(const IntMatrix& a);

}  // namespace stretchlab
