#pragma once

// Independent reference computations used by the test suites.

#include "stretchlab/matrix.hpp"
#include "stretchlab/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using stretchlab::IntMatrix;
using stretchlab::IntPolynomial;

inline IntPolynomial random_poly(std::mt19937_64& rng, int degree, long bound) {
    std::uniform_int_distribution<long> c(-bound, bound);
    std::vector<mpz_class> v(degree + 1);
    for (auto& x : v) x = c(rng);
    while (v.back() == 0) v.back() = c(rng);
    return IntPolynomial(v);
}

/// c_j = sign * c_{m-j}
inline IntPolynomial random_reciprocal(std::mt19937_64& rng, int degree, long bound, int sign) {
    std::uniform_int_distribution<long> c(-bound, bound);
    std::vector<mpz_class> v(degree + 1);
    for (int j = 0; 2 * j <= degree; ++j) {
        long x = c(rng);
        if (j == 0)
            while (x == 0) x = c(rng);
        if (2 * j == degree && sign < 0) x = 0;
        v[j] = x;
        v[degree - j] = sign * x;
    }
    return IntPolynomial(v);
}

/// c_j = sign * (-1)^j * c_{m-j}, m even
inline IntPolynomial random_skew(std::mt19937_64& rng, int half_degree, long bound, int sign) {
    const int m = 2 * half_degree;
    std::uniform_int_distribution<long> c(-bound, bound);
    std::vector<mpz_class> v(m + 1);
    for (int j = 0; j <= half_degree; ++j) {
        long x = c(rng);
        if (j == 0)
            while (x == 0) x = c(rng);
        const int s = sign * ((j % 2 == 0) ? 1 : -1);
        if (j == half_degree && s < 0) x = 0;
        v[j] = x;
        v[m - j] = s * x;
    }
    return IntPolynomial(v);
}

/// All complex roots by Durand-Kerner iteration in long double.
inline std::vector<std::complex<long double>> roots(const IntPolynomial& p) {
    using C = std::complex<long double>;
    const int n = p.degree();
    std::vector<C> c(n + 1);
    for (int i = 0; i <= n; ++i) c[i] = C(p.coeffs()[i].get_d(), 0) / C(p.leading().get_d(), 0);
    auto eval = [&](C z) {
        C r = 0;
        for (int i = n; i >= 0; --i) r = r * z + c[i];
        return r;
    };
    std::vector<C> z(n);
    for (int i = 0; i < n; ++i) z[i] = std::pow(C(0.4L, 0.9L), i);
    for (int it = 0; it < 5000; ++it) {
        long double delta = 0;
        for (int i = 0; i < n; ++i) {
            C d = 1;
            for (int k = 0; k < n; ++k)
                if (k != i) d *= z[i] - z[k];
            const C step = eval(z[i]) / d;
            z[i] -= step;
            delta = std::max(delta, std::abs(step));
        }
        if (delta < 1e-18L) break;
    }
    return z;
}

/// Every root's image under f has a distinct partner in the root set.
template <class F>
bool root_set_invariant(const std::vector<std::complex<long double>>& z, F f, long double tol) {
    std::vector<bool> used(z.size(), false);
    for (const auto& r : z) {
        const auto w = f(r);
        std::size_t best = z.size();
        long double best_d = tol;
        for (std::size_t k = 0; k < z.size(); ++k)
            if (!used[k] && std::abs(z[k] - w) < best_d) {
                best_d = std::abs(z[k] - w);
                best = k;
            }
        if (best == z.size()) return false;
        used[best] = true;
    }
    return true;
}

/// det(t I - A) by expansion over all permutations.
inline IntPolynomial char_poly_by_permutations(const IntMatrix& a) {
    const std::size_t n = a.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    IntPolynomial total;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        IntPolynomial term{inversions % 2 == 0 ? 1 : -1};
        for (std::size_t i = 0; i < n; ++i) {
            IntPolynomial entry = IntPolynomial::constant(-a(i, perm[i]));
            if (perm[i] == i) entry += IntPolynomial{0, 1};
            term = term * entry;
        }
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// Primitive iff some power A^k with k <= (n-1)^2 + 1 is entrywise positive.
inline bool primitive_by_powers(const IntMatrix& a) {
    const std::size_t n = a.size();
    std::vector<std::vector<int>> b(n, std::vector<int>(n)), p;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b[i][j] = a(i, j) > 0;
    p = b;
    for (std::size_t k = 1; k <= (n - 1) * (n - 1) + 1; ++k) {
        bool all = true;
        for (auto& row : p)
            for (int x : row) all = all && x;
        if (all) return true;
        std::vector<std::vector<int>> q(n, std::vector<int>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l)
                if (p[i][l])
                    for (std::size_t j = 0; j < n; ++j) q[i][j] |= b[l][j];
        p = q;
    }
    return false;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
    std::uniform_int_distribution<long> c(lo, hi);
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = c(rng);
    return m;
}

inline IntMatrix binary_matrix(std::size_t n, unsigned long bits) {
    IntMatrix m(n);
    for (std::size_t k = 0; k < n * n; ++k) m(k / n, k % n) = (bits >> k) & 1;
    return m;
}

inline long double silver_square() { return 3.0L + 2.0L * std::sqrt(2.0L); }

}  // namespace oracle
