#pragma once

// Exhaustive scan of small nonnegative integer matrices for primitive
// unimodular matrices whose characteristic polynomial is skew-reciprocal up
// to cyclotomic factors, comparing rho(A)^n with 3 + 2 sqrt 2.

#include "stretchlab/classify.hpp"
#include "stretchlab/matrix.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace stretchlab {

class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// STRETCHLAB_BUDGET if set to a positive integer, otherwise 10^7.
std::uint64_t default_budget();

struct SearchConfig {
    unsigned n = 4;
    unsigned max_entry = 1;
    unsigned threads = 1;
    std::uint64_t budget = default_budget();
    std::uint64_t chunk = 4096;
    bool require_unimodular = true;
    bool require_primitive = true;
    bool require_skew_up_to_cyclotomic = true;
    mpq_class tol = default_tolerance();
};

struct Candidate {
    std::uint64_t index = 0;
    IntMatrix matrix;
    IntPolynomial char_poly;
    RootEnclosure root;
    Interval normalized;
};

struct SearchResult {
    unsigned n = 0;
    unsigned max_entry = 0;
    std::uint64_t scanned = 0;
    std::uint64_t qualifying = 0;
    std::optional<Candidate> minimum;
    /// Qualifying matrices with rho^n certified below 3 + 2 sqrt 2, by index.
    std::vector<Candidate> below_bound;
    /// The bound is claimed only for n >= 4.
    bool theorem_applies = false;

    const std::vector<Candidate>& violations() const {
        static const std::vector<Candidate> none;
        return theorem_applies ? below_bound : none;
    }
};

/// (max_entry + 1)^(n^2), or nullopt when it overflows 64 bits.
std::optional<std::uint64_t> search_space_size(unsigned n, unsigned max_entry);

/// Entries in base max_entry + 1, row-major, first entry most significant,
/// so index order is lexicographic order.
IntMatrix matrix_at(std::uint64_t index, unsigned n, unsigned max_entry);

/// Throws BudgetError when the space exceeds cfg.budget.
SearchResult run_search(const SearchConfig& cfg);

struct WitnessReport {
    IntMatrix matrix;
    IntPolynomial char_poly;
    PrimitivityReport primitivity;
    mpz_class det;
    bool unimodular = false;
    SpectralClass spectral;
    std::optional<RootEnclosure> root;
    std::optional<Interval> normalized;
    std::string perron_error;
    std::optional<std::strong_ordering> versus_bound;
    bool qualifies = false;
};

WitnessReport witness_check(const IntMatrix& a, const mpq_class& tol = default_tolerance());

}  // namespace stretchlab
