#pragma once

// Reproduction suites behind `stretch-lab repro`.

#include "stretchlab/report.hpp"

namespace stretchlab {

/// f_*^real of the orientation-reversing map on the four-punctured torus.
IntMatrix punctured_torus_matrix();

IntPolynomial lehmer_polynomial();
/// Salem polynomial t^4 - t^3 - t^2 - t + 1 of |LT_{1,2}|.
IntPolynomial quartic_salem_polynomial();

/// rho^n equals the largest root of x^2 - s x + c, checked exactly against
/// the largest root of t^(2n) - s t^n + c.
bool power_equals_quadratic_root(const RootEnclosure& rho, unsigned n, long s, long c);

struct SetTheoremReport {
    RootEnclosure mu;
    RootEnclosure sigma;
    RootEnclosure mu_squared;
    bool ordering = false;
    SqrtMinPoly sqrt_4_1;
    SqrtMinPoly sqrt_5_1;
    SqrtMinPoly sqrt_3_1;
    UnitCircleCount lehmer_unit_circle;
    UnitCircleCount quartic_unit_circle;
    bool lehmer_salem = false;
    bool quartic_salem = false;
    Interval lehmer_ninth;
    Interval quartic_cubed;

    bool ok() const;
};

SetTheoremReport repro_set_theorem(const mpq_class& tol = default_tolerance());
Json to_json(const SetTheoremReport& r);

struct ReproOutcome {
    Json report;
    bool ok = false;
};

ReproOutcome repro_torus(const mpq_class& tol);
ReproOutcome repro_thm_main(const mpq_class& tol, unsigned threads);
ReproOutcome repro_thm_set(const mpq_class& tol);
ReproOutcome repro_monotonicity(const mpq_class& tol);
ReproOutcome repro_low_degree(const mpq_class& tol);

/// Exact enclosure of 3 + 2 sqrt 2 with the decimal at 11 significant digits.
Json silver_square_json(const mpq_class& tol);

}  // namespace stretchlab
