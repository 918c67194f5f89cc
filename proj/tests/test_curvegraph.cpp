#include "oracles.hpp"

#include "stretchlab/curvegraph.hpp"

#include <doctest.h>

#include <map>

using namespace stretchlab;

namespace {

const IntMatrix fib{{1, 1}, {1, 0}};
const IntMatrix torus{{0, 0, 1, 1}, {1, 0, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0}};

struct BruteCycle {
    std::uint64_t mask;
    unsigned weight;
};

/// Cycles by trying every vertex ordering that starts at its smallest vertex;
/// a cycle with parallel edges is repeated once per edge choice.
std::vector<BruteCycle> brute_cycles(const IntMatrix& a) {
    const std::size_t n = a.size();
    std::vector<BruteCycle> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<std::size_t> vs;
        for (std::size_t v = 0; v < n; ++v)
            if (mask >> v & 1) vs.push_back(v);
        do {
            if (vs.front() != *std::min_element(vs.begin(), vs.end())) continue;
            unsigned long ways = 1;
            for (std::size_t i = 0; i < vs.size(); ++i) ways *= a(vs[i], vs[(i + 1) % vs.size()]).get_ui();
            for (unsigned long w = 0; w < ways; ++w) out.push_back({mask, static_cast<unsigned>(vs.size())});
        } while (std::next_permutation(vs.begin() + 1, vs.end()));
    }
    return out;
}

IntPolynomial brute_clique_polynomial(const std::vector<BruteCycle>& cs) {
    std::map<unsigned, long> terms{{0, 1}};
    for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << cs.size()); ++sub) {
        std::uint64_t used = 0;
        unsigned w = 0;
        int k = 0;
        bool clique = true;
        for (std::size_t i = 0; i < cs.size() && clique; ++i)
            if (sub >> i & 1) {
                clique = (used & cs[i].mask) == 0;
                used |= cs[i].mask;
                w += cs[i].weight;
                ++k;
            }
        if (clique) terms[w] += (k % 2 == 0) ? 1 : -1;
    }
    std::vector<mpz_class> c(terms.rbegin()->first + 1);
    for (auto [d, v] : terms) c[d] = v;
    return IntPolynomial(c);
}

IntPolynomial reciprocal_char_poly(const IntMatrix& a) {
    const IntPolynomial chi = char_poly(a);
    std::vector<mpz_class> c(chi.coeffs().rbegin(), chi.coeffs().rend());
    return IntPolynomial(c);
}

}  // namespace

TEST_CASE("simple cycle examples") {
    const auto fc = simple_cycles(fib);
    REQUIRE(fc.size() == 2);
    CHECK(fc[0].vertices == std::vector<std::size_t>{0});
    CHECK(fc[0].weight() == 1);
    CHECK(fc[1].vertices == std::vector<std::size_t>{0, 1});
    CHECK(fc[1].weight() == 2);
    const auto two = simple_cycles(IntMatrix{{2}});
    REQUIRE(two.size() == 2);
    CHECK(two[0].weight() == 1);
    CHECK(two[1].weight() == 1);
    CHECK(two[0].edge_choice != two[1].edge_choice);
    CHECK(simple_cycles(IntMatrix(3)).empty());
    CHECK_THROWS_AS(simple_cycles(IntMatrix{{1, -1}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("cycle cap guard") {
    IntMatrix full(7);
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = 0; j < 7; ++j) full(i, j) = 1;
    CHECK_THROWS_AS(simple_cycles(full, 100), GuardError);
    CHECK_THROWS_AS(clique_polynomial(curve_graph(full), 100), GuardError);
}

TEST_CASE("digraph round trip") {
    const MultiDigraph g = MultiDigraph::from_matrix(IntMatrix{{0, 3}, {2, 1}});
    CHECK(g.multiplicity[0][1] == 3);
    CHECK(g.to_matrix() == IntMatrix{{0, 3}, {2, 1}});
}

TEST_CASE("clique polynomial examples") {
    CHECK(clique_polynomial(curve_graph(fib)) == IntPolynomial{1, -1, -1});
    CHECK(clique_polynomial(curve_graph(IntMatrix::identity(2))) == IntPolynomial{1, -2, 1});
    CHECK(clique_polynomial(curve_graph(torus)) == IntPolynomial{1, 0, -1, -2, -1});
    CHECK(clique_polynomial(curve_graph(IntMatrix(2))) == IntPolynomial{1});
}

TEST_CASE("clique identity examples") {
    CHECK(verify_clique_identity(fib));
    CHECK(verify_clique_identity(torus));
    for (unsigned long bits = 0; bits < 16; ++bits) REQUIRE(verify_clique_identity(oracle::binary_matrix(2, bits)));
}

TEST_CASE("cycles and cliques agree with brute force") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 300; ++i) {
        const IntMatrix a = oracle::random_matrix(rng, 1 + i % 4, 0, 2);
        const auto brute = brute_cycles(a);
        const CurveGraph g = curve_graph(a);
        REQUIRE(g.size() == brute.size());
        std::map<std::pair<std::uint64_t, unsigned>, int> want, got;
        for (const auto& c : brute) ++want[{c.mask, c.weight}];
        for (const auto& c : g.cycles) ++got[{c.vertex_mask, c.weight()}];
        REQUIRE(want == got);
        for (std::size_t x = 0; x < g.size(); ++x)
            for (std::size_t y = 0; y < g.size(); ++y)
                REQUIRE(g.adjacent(x, y) == (x != y && (g.cycles[x].vertex_mask & g.cycles[y].vertex_mask) == 0));
        if (brute.size() <= 16) REQUIRE(clique_polynomial(g) == brute_clique_polynomial(brute));
    }
}

TEST_CASE("clique identity on every 0/1 matrix up to size 4") {
    std::size_t count = 0;
    for (std::size_t n = 1; n <= 4; ++n)
        for (unsigned long bits = 0; bits < (1ul << (n * n)); ++bits) {
            const IntMatrix a = oracle::binary_matrix(n, bits);
            REQUIRE(clique_polynomial(curve_graph(a)) == reciprocal_char_poly(a));
            ++count;
        }
    CHECK(count == 2 + 16 + 512 + 65536);
}

TEST_CASE("clique identity on random matrices with entries up to 3") {
    std::mt19937_64 rng(32);
    std::uniform_int_distribution<int> size(1, 5);
    for (int i = 0; i < 500; ++i) {
        const IntMatrix a = oracle::random_matrix(rng, size(rng), 0, 3);
        REQUIRE(verify_clique_identity(a));
    }
}

TEST_CASE("growth rate examples") {
    CHECK(std::fabs(growth_rate(curve_graph(fib)).approx() - 1.6180339887) < 1e-10);
    CHECK(compare_roots(growth_rate(curve_graph(IntMatrix{{2}})), integer_root(2)) == std::strong_ordering::equal);
    CHECK(compare_roots(growth_rate(curve_graph(torus)), largest_real_root(IntPolynomial{-1, -1, 1})) ==
          std::strong_ordering::equal);
    CHECK_THROWS_AS(growth_rate(curve_graph(IntMatrix{{1}})), std::domain_error);
    CHECK_THROWS_AS(growth_rate(curve_graph(IntMatrix(2))), std::domain_error);
}

TEST_CASE("growth rate matches the spectral radius of primitive matrices") {
    std::mt19937_64 rng(33);
    int tested = 0;
    for (int i = 0; i < 300; ++i) {
        const IntMatrix a = oracle::random_matrix(rng, 2 + i % 3, 0, 2);
        if (!is_primitive(a).primitive) continue;
        const RootEnclosure g = growth_rate(curve_graph(a));
        const RootEnclosure r = spectral_radius(a);
        REQUIRE(g.interval().overlaps(r.interval()));
        REQUIRE(compare_roots(g, r) == std::strong_ordering::equal);
        ++tested;
    }
    CHECK(tested > 100);
}

TEST_CASE("shape examples") {
    const Shape f = curve_graph_shape(curve_graph(fib));
    CHECK(f.kind == ShapeKind::nA1);
    CHECK(f.weights == std::vector<unsigned>{1, 2});
    const Shape r = curve_graph_shape(curve_graph(torus));
    CHECK(r.kind == ShapeKind::nA1);
    CHECK(r.weights == std::vector<unsigned>{2, 3, 3, 4});
    CHECK(curve_graph_shape(curve_graph(IntMatrix::identity(3))).kind == ShapeKind::other);
    // loop at 0, 2-cycle 0-1, loop at 2 joined to 1 only through the 2-cycle's vertex
    const IntMatrix star{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
    const Shape s = curve_graph_shape(curve_graph(star));
    CHECK(s.kind == ShapeKind::other);
    CHECK(std::string(shape_name(ShapeKind::AStar2)) == "AStar2");
}

TEST_CASE("A*2 shape from a loop, a disjoint loop and a long cycle") {
    // cycles: loop at 0 (w 1), loop at 2 (w 1), 3-cycle 0-1-2 (w 3); loops are disjoint
    const IntMatrix a{{1, 1, 0}, {0, 0, 1}, {1, 0, 1}};
    const CurveGraph g = curve_graph(a);
    const Shape s = curve_graph_shape(g);
    REQUIRE(s.kind == ShapeKind::AStar2);
    CHECK(s.weights == std::vector<unsigned>{1, 1, 3});
    CHECK(clique_polynomial(g) == IntPolynomial{1, -2, 1, -1});
}

TEST_CASE("shape detection is consistent with the clique polynomial") {
    std::mt19937_64 rng(34);
    int na1 = 0, astar = 0;
    for (int i = 0; i < 3000; ++i) {
        const IntMatrix a = oracle::random_matrix(rng, 2 + i % 4, 0, 1);
        const CurveGraph g = curve_graph(a);
        const Shape s = curve_graph_shape(g);
        const IntPolynomial q = clique_polynomial(g);
        if (s.kind == ShapeKind::nA1) {
            mpz_class negatives = 0;
            bool positive = false;
            for (std::size_t d = 1; d < q.coeffs().size(); ++d) {
                if (q.coeffs()[d] < 0) negatives -= q.coeffs()[d];
                if (q.coeffs()[d] > 0) positive = true;
            }
            REQUIRE(negatives == static_cast<long>(s.weights.size()));
            REQUIRE_FALSE(positive);
            ++na1;
        } else if (s.kind == ShapeKind::AStar2) {
            const unsigned x = s.weights[0], y = s.weights[1], z = s.weights[2];
            const IntPolynomial expected = IntPolynomial{1} - IntPolynomial::monomial(1, x) -
                                           IntPolynomial::monomial(1, y) - IntPolynomial::monomial(1, z) +
                                           IntPolynomial::monomial(1, x + y);
            REQUIRE(q == expected);
            ++astar;
        }
    }
    CHECK(na1 > 100);
    CHECK(astar > 10);
}
