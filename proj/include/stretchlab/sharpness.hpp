#pragma once

// The 2k x 2k matrices P + N whose normalized Perron roots decrease to
// 3 + 2 sqrt 2 along each parity class of k.

#include "stretchlab/matrix.hpp"
#include "stretchlab/polynomial.hpp"
#include "stretchlab/roots.hpp"

#include <vector>

namespace stretchlab {

/// k + 1 for even k, k + 2 for odd k.
unsigned sharpness_p(unsigned k);
/// Inverse of p_k modulo 2k in (0, 2k).
unsigned sharpness_q(unsigned k);

/// P_ij = 1 for i = j + 1 (mod 2k), N has ones at (1, p_k) and (1, 2k - p_k);
/// indices 1..2k. Throws std::invalid_argument for k < 2.
IntMatrix sharpness_matrix(unsigned k);

/// t^2k - t^p_k - t^(2k - p_k) - 1.
IntPolynomial sharpness_polynomial(unsigned k);

struct SharpnessExample {
    unsigned k = 0;
    unsigned p = 0;
    unsigned q = 0;
    IntMatrix matrix;
    IntPolynomial char_poly;
    RootEnclosure root;
    Interval normalized;  ///< P_k = root^(2k)

    bool char_poly_matches = false;
    bool primitive = false;
    bool unimodular = false;
    bool skew_up_to_cyclotomic = false;
    bool parity_ok = false;
    /// P_k > 3 + 2 sqrt 2, certified exactly.
    bool above_bound = false;

    bool ok() const {
        return char_poly_matches && primitive && unimodular && skew_up_to_cyclotomic && parity_ok && above_bound;
    }
};

/// Builds the matrix, checks every property above. Throws for k < 2.
SharpnessExample build_example(unsigned k, const mpq_class& tol = default_tolerance());

struct ConvergenceRow {
    unsigned k = 0;
    RootEnclosure root;
    Interval normalized;
    /// P - (x^s + x^-s) P^(1/2) - 1 at the enclosure midpoint x, with
    /// s = 1 for even k and s = 2 for odd k (long double).
    long double residual = 0;
};

/// P_k for k in [2, k_max], from the closed-form polynomial.
ConvergenceRow convergence_row(unsigned k, const mpq_class& tol = default_tolerance());
std::vector<ConvergenceRow> convergence_table(unsigned k_max, const mpq_class& tol = default_tolerance());

/// Largest root of t^2k - t^(k+1) - t^(k-1) - 1 (k even) or
/// t^2k - t^(k+2) - t^(k-2) - 1 (k odd).
IntPolynomial conjectured_polynomial(unsigned k);

struct ConjectureRow {
    unsigned k = 0;
    RootEnclosure root;
    Interval normalized;
    /// Root equals the Perron root of the k-th example, compared exactly.
    bool equals_example = false;
};

std::vector<ConjectureRow> verify_conjecture_values(unsigned k_max, const mpq_class& tol = default_tolerance());

/// |P_k - s| < |P_(k-2) - s| for s = 3 + 2 sqrt 2, certified by enclosures.
bool closer_than_previous(unsigned k, const mpq_class& tol = default_tolerance());

}  // namespace stretchlab
