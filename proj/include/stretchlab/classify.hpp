#pragma once

// Reciprocity predicates, cyclotomic stripping and the number-theoretic
// helpers used to sort candidate stretch factors.

#include "stretchlab/polynomial.hpp"

#include <optional>

namespace stretchlab {

/// Sign epsilon in {+1, -1}.
using Sign = int;

/// eps when p(t) = eps * t^deg p(1/t); nullopt otherwise. Throws for p = 0.
std::optional<Sign> is_reciprocal(const IntPolynomial& p);

/// eps when deg p is even and c_j = eps * (-1)^j * c_{m-j} for all j.
/// Throws std::domain_error for p = 0 or p(0) = 0.
std::optional<Sign> is_skew_reciprocal(const IntPolynomial& p);

struct CyclotomicSplit {
    IntPolynomial cyclotomic_part;  ///< monic product of cyclotomic factors
    IntPolynomial core;             ///< no root of unity among its roots
    std::vector<unsigned> orders;   ///< m for each Phi_m removed, with repetition
};

/// Maximal cyclotomic divisor by trial division over every Phi_m with
/// phi(m) <= deg p. Throws std::domain_error for p = 0 or p(0) = 0.
CyclotomicSplit strip_cyclotomic(const IntPolynomial& p);

/// True iff p(0) != 0 and the cyclotomic-free core is skew-reciprocal.
/// A purely cyclotomic p (constant core) counts as true.
bool is_skew_reciprocal_up_to_cyclotomic(const IntPolynomial& p);

/// c_d + c_{k-d} even for every d.
bool parity_condition(const IntPolynomial& p);

struct SpectralClass {
    std::optional<Sign> reciprocal;
    std::optional<Sign> skew_reciprocal;
    IntPolynomial cyclotomic_part;
    IntPolynomial core;
    bool skew_up_to_cyclotomic = false;
    bool parity_ok = false;
    /// Core is constant: all roots are roots of unity.
    bool degenerate = false;
};

/// All predicates at once. Inputs with p(0) = 0 get false for every
/// involution-based predicate, cyclotomic_part = 1 and core = p.
SpectralClass classify(const IntPolynomial& p);

struct SqrtMinPoly {
    IntPolynomial polynomial;  ///< x^4 - p x^2 + q
    bool irreducible = false;
};

/// Candidate minimal polynomial of sqrt(alpha), alpha the largest root of
/// t^2 - p t + q. Throws std::domain_error if p^2 - 4q < 0 or alpha <= 1.
SqrtMinPoly sqrt_min_poly(long p, long q);

/// Irreducibility over Q of a monic integer quartic: no rational root and
/// no split into two integer quadratics.
bool quartic_irreducible(const IntPolynomial& f);

/// Reciprocal, and every root other than lambda^{+-1} lies on |z| = 1.
/// Throws std::invalid_argument for non-monic input.
bool is_salem_like(const IntPolynomial& p);

}  // namespace stretchlab
