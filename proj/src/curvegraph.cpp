#include "stretchlab/curvegraph.hpp"

#include <algorithm>
#include <map>

namespace stretchlab {

MultiDigraph MultiDigraph::from_matrix(const IntMatrix& a) {
    if (a.size() > 64) throw std::invalid_argument("digraph: at most 64 vertices");
    MultiDigraph g;
    g.n = a.size();
    g.multiplicity.assign(g.n, std::vector<unsigned long>(g.n, 0));
    for (std::size_t i = 0; i < g.n; ++i)
        for (std::size_t j = 0; j < g.n; ++j) {
            const mpz_class& v = a(i, j);
            if (v < 0) throw std::invalid_argument("digraph: negative matrix entry");
            if (!v.fits_ulong_p()) throw std::invalid_argument("digraph: entry too large");
            g.multiplicity[i][j] = v.get_ui();
        }
    return g;
}

IntMatrix MultiDigraph::to_matrix() const {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = multiplicity[i][j];
    return m;
}

namespace {

struct CycleSearch {
    const MultiDigraph& g;
    std::size_t cap;
    std::vector<SimpleCycle>& out;
    std::size_t start = 0;
    std::vector<std::size_t> path;
    std::uint64_t mask = 0;

    void emit() {
        // One cycle per choice of parallel edge at every step.
        std::vector<unsigned long> mult(path.size());
        for (std::size_t i = 0; i < path.size(); ++i)
            mult[i] = g.multiplicity[path[i]][path[(i + 1) % path.size()]];
        std::vector<unsigned long> choice(path.size(), 0);
        for (;;) {
            if (out.size() >= cap) throw GuardError("simple_cycles: cycle cap exceeded");
            out.push_back(SimpleCycle{path, choice, mask});
            std::size_t i = path.size();
            while (i > 0) {
                --i;
                if (++choice[i] < mult[i]) break;
                choice[i] = 0;
                if (i == 0) return;
            }
        }
    }

    void extend(std::size_t u) {
        for (std::size_t v = start; v < g.n; ++v) {
            if (g.multiplicity[u][v] == 0) continue;
            if (v == start) {
                emit();
                continue;
            }
            if (mask & (std::uint64_t{1} << v)) continue;
            path.push_back(v);
            mask |= std::uint64_t{1} << v;
            extend(v);
            mask &= ~(std::uint64_t{1} << v);
            path.pop_back();
        }
    }
};

}  // namespace

std::vector<SimpleCycle> simple_cycles(const IntMatrix& a, std::size_t cap) {
    const MultiDigraph g = MultiDigraph::from_matrix(a);
    std::vector<SimpleCycle> out;
    CycleSearch search{g, cap, out, 0, {}, 0};
    for (std::size_t s = 0; s < g.n; ++s) {
        search.start = s;
        search.path = {s};
        search.mask = std::uint64_t{1} << s;
        search.extend(s);
    }
    return out;
}

bool CurveGraph::adjacent(std::size_t i, std::size_t j) const {
    return i != j && (cycles[i].vertex_mask & cycles[j].vertex_mask) == 0;
}

CurveGraph curve_graph(const IntMatrix& a, std::size_t cycle_cap) {
    CurveGraph g;
    g.cycles = simple_cycles(a, cycle_cap);
    g.neighbours.resize(g.cycles.size());
    for (std::size_t i = 0; i < g.cycles.size(); ++i)
        for (std::size_t j = i + 1; j < g.cycles.size(); ++j)
            if (g.adjacent(i, j)) {
                g.edges.emplace_back(i, j);
                g.neighbours[i].push_back(j);
                g.neighbours[j].push_back(i);
            }
    return g;
}

namespace {

struct CliqueWalk {
    const CurveGraph& g;
    std::size_t cap;
    std::map<unsigned, mpz_class> terms;
    std::size_t visited = 0;

    // `candidates` are the common neighbours of the current clique with
    // index above its last member.
    void grow(const std::vector<std::size_t>& candidates, unsigned weight, int size) {
        for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
            const std::size_t v = candidates[idx];
            if (++visited > cap) throw GuardError("clique_polynomial: clique cap exceeded");
            const unsigned w = weight + g.cycles[v].weight();
            const int s = size + 1;
            terms[w] += (s % 2 == 0) ? 1 : -1;
            std::vector<std::size_t> next;
            for (std::size_t k = idx + 1; k < candidates.size(); ++k)
                if (g.adjacent(v, candidates[k])) next.push_back(candidates[k]);
            if (!next.empty()) grow(next, w, s);
        }
    }
};

}  // namespace

IntPolynomial clique_polynomial(const CurveGraph& g, std::size_t clique_cap) {
    CliqueWalk walk{g, clique_cap, {}};
    walk.terms[0] = 1;
    std::vector<std::size_t> all(g.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    walk.grow(all, 0, 0);
    std::vector<mpz_class> coeffs(walk.terms.rbegin()->first + 1);
    for (const auto& [deg, c] : walk.terms) coeffs[deg] = c;
    return IntPolynomial(std::move(coeffs));
}

bool verify_clique_identity(const IntMatrix& a) {
    const IntPolynomial chi = char_poly(a);
    std::vector<mpz_class> rev(chi.coeffs().rbegin(), chi.coeffs().rend());
    return clique_polynomial(curve_graph(a)) == IntPolynomial(std::move(rev));
}

RootEnclosure growth_rate(const CurveGraph& g, const mpq_class& tol) {
    const IntPolynomial q = clique_polynomial(g);
    if (q.degree() < 1) throw std::domain_error("growth_rate: clique polynomial is constant");
    const IntPolynomial rev = reversed(q);
    RootEnclosure r;
    try {
        r = largest_real_root(rev, tol);
    } catch (const std::domain_error&) {
        throw std::domain_error("growth_rate: clique polynomial has no real root");
    }
    if (compare_roots(r, integer_root(1)) != std::strong_ordering::greater)
        throw std::domain_error("growth_rate: no root of Q in (0, 1)");
    return r;
}

Shape curve_graph_shape(const CurveGraph& g) {
    Shape s;
    if (g.size() >= 1 && g.edges.empty()) {
        s.kind = ShapeKind::nA1;
        for (const auto& c : g.cycles) s.weights.push_back(c.weight());
        std::sort(s.weights.begin(), s.weights.end());
        return s;
    }
    if (g.size() == 3 && g.edges.size() == 1) {
        const auto [i, j] = g.edges.front();
        const std::size_t k = 3 - i - j;
        unsigned a = g.cycles[i].weight();
        unsigned b = g.cycles[j].weight();
        if (a > b) std::swap(a, b);
        s.kind = ShapeKind::AStar2;
        s.weights = {a, b, g.cycles[k].weight()};
    }
    return s;
}

const char* shape_name(ShapeKind k) {
    switch (k) {
        case ShapeKind::nA1: return "nA1";
        case ShapeKind::AStar2: return "AStar2";
        case ShapeKind::other: return "other";
    }
    return "other";
}

}  // namespace stretchlab
