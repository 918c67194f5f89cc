#include "stretchlab/sharpness.hpp"

#include "stretchlab/classify.hpp"

#include <cmath>
#include <stdexcept>

namespace stretchlab {

namespace {

void require_k(unsigned k) {
    if (k < 2) throw std::invalid_argument("sharpness: k must be at least 2");
}

}  // namespace

unsigned sharpness_p(unsigned k) {
    require_k(k);
    return k % 2 == 0 ? k + 1 : k + 2;
}

unsigned sharpness_q(unsigned k) {
    const unsigned p = sharpness_p(k);
    const unsigned m = 2 * k;
    for (unsigned q = 1; q < m; ++q)
        if ((static_cast<unsigned long>(p) * q) % m == 1) return q;
    throw std::logic_error("sharpness_q: p_k is not invertible");
}

IntMatrix sharpness_matrix(unsigned k) {
    const unsigned p = sharpness_p(k);
    const std::size_t m = 2 * k;
    IntMatrix a(m);
    // 1-based i = j + 1 (mod 2k) in 0-based form.
    for (std::size_t j = 0; j < m; ++j) a((j + 1) % m, j) += 1;
    a(0, p - 1) += 1;
    a(0, m - p - 1) += 1;
    return a;
}

IntPolynomial sharpness_polynomial(unsigned k) {
    const unsigned p = sharpness_p(k);
    std::vector<mpz_class> c(2 * k + 1);
    c[2 * k] = 1;
    c[p] -= 1;
    c[2 * k - p] -= 1;
    c[0] -= 1;
    return IntPolynomial(std::move(c));
}

SharpnessExample build_example(unsigned k, const mpq_class& tol) {
    SharpnessExample ex;
    ex.k = k;
    ex.p = sharpness_p(k);
    ex.q = sharpness_q(k);
    ex.matrix = sharpness_matrix(k);
    ex.char_poly = char_poly(ex.matrix);
    ex.char_poly_matches = ex.char_poly == sharpness_polynomial(k);
    ex.primitive = is_primitive(ex.matrix).primitive;
    ex.unimodular = in_GLnZ(ex.matrix);
    ex.skew_up_to_cyclotomic = is_skew_reciprocal_up_to_cyclotomic(ex.char_poly);
    ex.parity_ok = parity_condition(ex.char_poly);
    ex.root = largest_real_root(ex.char_poly, tol);
    ex.normalized = power(ex.root, 2 * k);
    ex.above_bound = compare_power_to_silver_square(ex.root, 2 * k) == std::strong_ordering::greater;
    return ex;
}

ConvergenceRow convergence_row(unsigned k, const mpq_class& tol) {
    ConvergenceRow row;
    row.k = k;
    row.root = largest_real_root(sharpness_polynomial(k), tol);
    row.normalized = power(row.root, 2 * k);
    const long double x = static_cast<long double>(row.root.mid().get_d()) +
                          static_cast<long double>(mpq_class(row.root.mid() - mpq_class(row.root.mid().get_d())).get_d());
    const long double s = (k % 2 == 0) ? 1.0L : 2.0L;
    const long double big_p = std::pow(x, 2.0L * k);
    row.residual = big_p - (std::pow(x, s) + std::pow(x, -s)) * std::sqrt(big_p) - 1.0L;
    return row;
}

std::vector<ConvergenceRow> convergence_table(unsigned k_max, const mpq_class& tol) {
    require_k(k_max);
    std::vector<ConvergenceRow> rows;
    for (unsigned k = 2; k <= k_max; ++k) rows.push_back(convergence_row(k, tol));
    return rows;
}

IntPolynomial conjectured_polynomial(unsigned k) {
    require_k(k);
    const unsigned e = k % 2 == 0 ? 1 : 2;
    std::vector<mpz_class> c(2 * k + 1);
    c[2 * k] = 1;
    c[k + e] -= 1;
    c[k - e] -= 1;
    c[0] -= 1;
    return IntPolynomial(std::move(c));
}

std::vector<ConjectureRow> verify_conjecture_values(unsigned k_max, const mpq_class& tol) {
    require_k(k_max);
    std::vector<ConjectureRow> rows;
    for (unsigned k = 2; k <= k_max; ++k) {
        ConjectureRow row;
        row.k = k;
        row.root = largest_real_root(conjectured_polynomial(k), tol);
        row.normalized = power(row.root, 2 * k);
        const RootEnclosure perron = spectral_radius(sharpness_matrix(k), tol);
        row.equals_example = compare_roots(row.root, perron) == std::strong_ordering::equal;
        rows.push_back(std::move(row));
    }
    return rows;
}

bool closer_than_previous(unsigned k, const mpq_class& tol) {
    if (k < 4) throw std::invalid_argument("closer_than_previous: need k >= 4");
    RootEnclosure now = largest_real_root(sharpness_polynomial(k), tol);
    RootEnclosure before = largest_real_root(sharpness_polynomial(k - 2), tol);
    if (compare_power_to_silver_square(now, 2 * k) != std::strong_ordering::greater ||
        compare_power_to_silver_square(before, 2 * (k - 2)) != std::strong_ordering::greater)
        return false;
    for (int round = 0; round < 10; ++round) {
        const Interval a = power(now, 2 * k);
        const Interval b = power(before, 2 * (k - 2));
        if (a.hi < b.lo) return true;
        if (b.hi < a.lo) return false;
        now = refine(now, now.width() * dyadic(-16));
        before = refine(before, before.width() * dyadic(-16));
    }
    return false;
}

}  // namespace stretchlab
