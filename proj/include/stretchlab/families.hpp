#pragma once

// The five clique-polynomial families with small growth rate, their
// admissibility filters and the case-analysis checks built on them.

#include "stretchlab/polynomial.hpp"
#include "stretchlab/roots.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace stretchlab {

enum class FamilyTag { A1x2, A1x3, A1x4, A1x5, AStar2 };

const char* family_name(FamilyTag tag);
/// Accepts "2A1", "3A1", "4A1", "5A1", "AStar2". Throws std::invalid_argument.
FamilyTag parse_family(const std::string& name);
std::vector<FamilyTag> all_families();

/// Exponents of the clique polynomial Q. For kA1 the k-1 listed exponents
/// come with an implicit last exponent n; AStar2 lists (a, b, c) for
/// Q = 1 - t^a - t^b - t^c + t^(a+b).
struct FamilyForm {
    FamilyTag tag = FamilyTag::A1x2;
    std::vector<unsigned> params;
};

std::string describe(const FamilyForm& form);

/// t^n Q(1/t). Throws std::invalid_argument for a wrong parameter count,
/// zero exponents, exponents above n, or (AStar2) max(a + b, c) != n.
IntPolynomial instantiate(const FamilyForm& form, unsigned n);

/// Not a polynomial in t^d for any d > 1 (gcd of the nonzero exponents is 1).
bool primitivity_compatible(const IntPolynomial& p);

struct AdmissibilityReport {
    FamilyForm form;  ///< first parameter choice producing the polynomial
    IntPolynomial polynomial;
    bool parity_ok = false;
    bool primitivity_compatible = false;
    bool skew_up_to_cyclotomic = false;
    bool root_above_one = false;
    std::optional<RootEnclosure> root;  ///< present once all filters pass
    std::optional<Interval> normalized;

    bool admissible() const {
        return parity_ok && primitivity_compatible && skew_up_to_cyclotomic && root_above_one;
    }
};

AdmissibilityReport assess(const FamilyForm& form, unsigned n, const mpq_class& tol = default_tolerance());

constexpr unsigned kDefaultDegreeCap = 16;

/// Every admissible polynomial over all parameter choices of `forms` with
/// top exponent n, deduplicated, sorted by largest root (exact order).
/// Throws std::invalid_argument for n < 2 or n > cap.
std::vector<AdmissibilityReport> enumerate_admissible(unsigned n, const std::vector<FamilyTag>& forms,
                                                      const mpq_class& tol = default_tolerance(),
                                                      unsigned cap = kDefaultDegreeCap);

struct BoundCheck {
    unsigned n = 0;
    std::size_t admissible = 0;
    std::optional<AdmissibilityReport> minimum;
    /// Exact comparison of the minimum with 3 + 2 sqrt 2; nullopt when empty.
    std::optional<std::strong_ordering> versus_bound;
    bool holds = true;
};

/// Minimum over enumerate_admissible(n, all five forms) against 3 + 2 sqrt 2,
/// allowing a shortfall of at most 1e-9. An empty union holds vacuously.
BoundCheck check_bound(unsigned n, const mpq_class& tol = default_tolerance());

class QuotientError : public std::domain_error {
public:
    QuotientError(const std::string& what, IntPolynomial remainder)
        : std::domain_error(what), remainder_(std::move(remainder)) {}
    const IntPolynomial& remainder() const noexcept { return remainder_; }

private:
    IntPolynomial remainder_;
};

/// p / divisor over Z. Throws QuotientError carrying the remainder (scaled
/// to integers) when the division is not exact.
IntPolynomial quotient_exact(const IntPolynomial& p, const IntPolynomial& divisor);

enum class ScanBranch {
    A1x3,   ///< t^2g - t^(g+d) - t^(g-d) - 1
    A1x4,   ///< t^2g - t^(g+d) - t^g - t^(g-d) - 1
    A1x5,   ///< t^2g - t^(g+a) - t^(g+b) - t^(g-b) - t^(g-a) - 1
    A1x5b,  ///< t^2g - 2 t^a - t^(g+b) - t^(g-b) - 1, 0 < a < 2g
};

const char* branch_name(ScanBranch b);
/// Accepts "3A1", "4A1", "5A1", "5A1b". Throws std::invalid_argument.
ScanBranch parse_branch(const std::string& name);

/// Throws std::invalid_argument for odd n or parameters outside the branch.
IntPolynomial scan_polynomial(ScanBranch branch, unsigned n, const std::vector<unsigned>& params);

struct ScanPoint {
    std::vector<unsigned> params;
    IntPolynomial polynomial;
    RootEnclosure root;
    Interval normalized;
};

struct ScanResult {
    ScanBranch branch = ScanBranch::A1x3;
    unsigned n = 0;
    std::vector<ScanPoint> points;
    /// Every neighbouring pair along each grid axis is certified increasing.
    bool strictly_increasing = false;
    /// Pairs whose enclosures stayed overlapping after the refinement rounds.
    std::size_t unresolved = 0;
};

/// One-parameter branches scan d (or a) over [lo, hi]; two-parameter
/// branches scan the square [lo, hi]^2 (for A1x5b, a over [max(lo,1), hi]
/// and b over [lo, min(hi, g-1)]).
ScanResult monotonicity_scan(ScanBranch branch, unsigned n, unsigned lo, unsigned hi,
                             const mpq_class& tol = default_tolerance());

struct LowDegreeReport {
    Interval mu_squared;
    Interval mu_cubed;
    bool n2_skew_reciprocal = false;
    bool n2_below_bound = false;
    bool n3_skew_up_to_cyclotomic = false;
    bool n3_below_bound = false;
    bool n4_excluded = false;

    bool ok() const {
        return n2_skew_reciprocal && n2_below_bound && n3_skew_up_to_cyclotomic && n3_below_bound && n4_excluded;
    }
};

LowDegreeReport verify_low_degree_exceptions(const mpq_class& tol = default_tolerance());

}  // namespace stretchlab
