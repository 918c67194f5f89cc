#include "stretchlab/matrix.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>

namespace stretchlab {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) : n_(rows.size()) {
    entries_.reserve(n_ * n_);
    for (const auto& row : rows) {
        if (row.size() != n_) throw std::invalid_argument("IntMatrix: rows must form a square");
        for (long v : row) entries_.emplace_back(v);
    }
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<mpz_class>>& rows) {
    IntMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) throw std::invalid_argument("IntMatrix: rows must form a square");
        for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool IntMatrix::is_nonnegative() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const mpz_class& x) { return x >= 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.size() != b.size()) throw std::invalid_argument("matrix product: size mismatch");
    const std::size_t n = a.size();
    IntMatrix c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < n; ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

bool lex_less(const IntMatrix& a, const IntMatrix& b) {
    return std::lexicographical_compare(a.entries().begin(), a.entries().end(), b.entries().begin(),
                                        b.entries().end());
}

IntPolynomial char_poly(const IntMatrix& a) {
    const std::size_t n = a.size();
    if (n == 0) return IntPolynomial{1};
    // Coefficients in descending order; v[0] is the leading 1.
    std::vector<mpz_class> v{1, -a(0, 0)};
    for (std::size_t r = 1; r < n; ++r) {
        std::vector<mpz_class> toeplitz(r + 2);
        toeplitz[0] = 1;
        toeplitz[1] = -a(r, r);
        std::vector<mpz_class> x(r);
        for (std::size_t i = 0; i < r; ++i) x[i] = a(i, r);
        for (std::size_t k = 0; k < r; ++k) {
            mpz_class dot = 0;
            for (std::size_t i = 0; i < r; ++i)
                if (a(r, i) != 0 && x[i] != 0) dot += a(r, i) * x[i];
            toeplitz[k + 2] = -dot;
            if (k + 1 == r) break;
            std::vector<mpz_class> y(r);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j)
                    if (a(i, j) != 0 && x[j] != 0) y[i] += a(i, j) * x[j];
            x = std::move(y);
        }
        std::vector<mpz_class> next(r + 2);
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j <= std::min(i, r); ++j)
                if (toeplitz[i - j] != 0 && v[j] != 0) next[i] += toeplitz[i - j] * v[j];
        v = std::move(next);
    }
    std::reverse(v.begin(), v.end());
    return IntPolynomial(std::move(v));
}

mpz_class determinant(const IntMatrix& a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    std::vector<mpz_class> m = a.entries();
    auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return m[i * n + j]; };
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && at(pivot, k) == 0) ++pivot;
            if (pivot == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(pivot, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = at(k, k);
    }
    return sign * at(n - 1, n - 1);
}

bool in_GLnZ(const IntMatrix& a) {
    mpz_class d = determinant(a);
    return d == 1 || d == -1;
}

namespace {

using Adjacency = std::vector<std::vector<std::size_t>>;

Adjacency support_graph(const IntMatrix& a) {
    const std::size_t n = a.size();
    Adjacency out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (a(i, j) != 0) out[i].push_back(j);
    return out;
}

std::vector<char> reachable_from(const Adjacency& g, std::size_t s) {
    std::vector<char> seen(g.size(), 0);
    std::vector<std::size_t> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
        std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t v : g[u])
            if (!seen[v]) {
                seen[v] = 1;
                stack.push_back(v);
            }
    }
    return seen;
}

}  // namespace

PrimitivityReport is_primitive(const IntMatrix& a) {
    PrimitivityReport rep;
    const std::size_t n = a.size();
    rep.nonnegative = a.is_nonnegative();
    if (n == 0) return rep;
    const Adjacency g = support_graph(a);

    std::vector<std::vector<char>> reach(n);
    for (std::size_t s = 0; s < n; ++s) reach[s] = reachable_from(g, s);
    rep.strongly_connected = std::all_of(reach[0].begin(), reach[0].end(), [](char c) { return c != 0; });
    for (std::size_t v = 0; v < n && rep.strongly_connected; ++v) rep.strongly_connected = reach[v][0] != 0;

    // gcd of cycle lengths, strong component by strong component, from BFS levels.
    std::vector<long> component(n, -1);
    unsigned period = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (component[s] >= 0) continue;
        for (std::size_t v = 0; v < n; ++v)
            if (reach[s][v] && reach[v][s]) component[v] = static_cast<long>(s);
        std::vector<long> level(n, -1);
        std::queue<std::size_t> q;
        level[s] = 0;
        q.push(s);
        while (!q.empty()) {
            std::size_t u = q.front();
            q.pop();
            for (std::size_t v : g[u]) {
                if (component[v] != static_cast<long>(s)) continue;
                if (level[v] < 0) {
                    level[v] = level[u] + 1;
                    q.push(v);
                }
                long diff = level[u] + 1 - level[v];
                period = std::gcd(period, static_cast<unsigned>(diff < 0 ? -diff : diff));
            }
        }
    }
    rep.period = period;
    rep.primitive = rep.nonnegative && rep.strongly_connected && period == 1;
    return rep;
}

bool wielandt_primitive(const IntMatrix& a) {
    const std::size_t n = a.size();
    if (n == 0 || !a.is_nonnegative()) return false;
    using Bool = std::vector<char>;
    Bool base(n * n);
    for (std::size_t i = 0; i < n * n; ++i) base[i] = a.entries()[i] != 0;
    auto mul = [n](const Bool& x, const Bool& y) {
        Bool z(n * n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                if (x[i * n + k])
                    for (std::size_t j = 0; j < n; ++j)
                        if (y[k * n + j]) z[i * n + j] = 1;
        return z;
    };
    std::size_t e = (n - 1) * (n - 1) + 1;
    Bool result;
    Bool sq = base;
    bool have = false;
    while (e > 0) {
        if (e & 1u) {
            result = have ? mul(result, sq) : sq;
            have = true;
        }
        e >>= 1u;
        if (e) sq = mul(sq, sq);
    }
    return std::all_of(result.begin(), result.end(), [](char c) { return c != 0; });
}

IntMatrix companion(const IntPolynomial& p) {
    if (p.degree() < 1) throw std::invalid_argument("companion: polynomial must be nonconstant");
    if (!p.is_monic()) throw std::invalid_argument("companion: polynomial must be monic");
    const std::size_t n = static_cast<std::size_t>(p.degree());
    IntMatrix c(n);
    for (std::size_t i = 0; i + 1 < n; ++i) c(i, i + 1) = 1;
    for (std::size_t j = 0; j < n; ++j) c(n - 1, j) = -p.coeffs()[j];
    return c;
}

std::vector<double> numeric_eigenvalue_moduli(const IntMatrix& a) {
    const std::size_t n = a.size();
    Eigen::MatrixXd m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a(i, j).get_d();
    Eigen::EigenSolver<Eigen::MatrixXd> solver(m, false);
    std::vector<double> out;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) out.push_back(std::abs(solver.eigenvalues()[i]));
    return out;
}

RootEnclosure spectral_radius(const IntMatrix& a, const mpq_class& tol) {
    if (a.size() == 0) throw PerronError("spectral_radius of an empty matrix");
    IntPolynomial chi = char_poly(a);
    RootEnclosure rho;
    try {
        rho = largest_real_root(chi, tol);
    } catch (const std::domain_error&) {
        throw PerronError("spectral_radius: characteristic polynomial has no real root");
    }
    const RootEnclosure one{mpq_class(1, 2), mpq_class(2), IntPolynomial{-1, 1}};
    if (compare_roots(rho, one) != std::strong_ordering::greater)
        throw PerronError("spectral_radius: largest real eigenvalue is not > 1");
    const double bound = rho.hi.get_d();
    for (double m : numeric_eigenvalue_moduli(a))
        if (m > bound * (1.0 + 1e-9) + 1e-9)
            throw PerronError("spectral_radius: a complex eigenvalue dominates the largest real root");
    return rho;
}

Interval normalized_spectral_radius(const IntMatrix& a, const mpq_class& tol) {
    return power(spectral_radius(a, tol), static_cast<unsigned>(a.size()));
}

bool verify_block_structure(const IntMatrix& m, std::size_t split) {
    const std::size_t n = m.size();
    if (split == 0 || split >= n) return false;
    for (std::size_t i = split; i < n; ++i)
        for (std::size_t j = 0; j < split; ++j)
            if (m(i, j) != 0) return false;
    for (std::size_t i = 0; i < split; ++i) {
        int ones = 0;
        for (std::size_t j = 0; j < split; ++j) {
            if (m(i, j) == 1) ++ones;
            else if (m(i, j) != 0) return false;
        }
        if (ones != 1) return false;
    }
    for (std::size_t j = 0; j < split; ++j) {
        int ones = 0;
        for (std::size_t i = 0; i < split; ++i)
            if (m(i, j) == 1) ++ones;
        if (ones != 1) return false;
    }
    return true;
}

}  // namespace stretchlab
