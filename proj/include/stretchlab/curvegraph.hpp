#pragma once

// Digraph of a nonnegative matrix, its vertex-simple cycles, the curve graph
// on those cycles and the clique polynomial.

#include "stretchlab/matrix.hpp"
#include "stretchlab/polynomial.hpp"
#include "stretchlab/roots.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace stretchlab {

class GuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Directed multigraph with a_ij parallel edges from i to j.
struct MultiDigraph {
    std::size_t n = 0;
    std::vector<std::vector<unsigned long>> multiplicity;

    /// Throws std::invalid_argument on negative entries or n > 64.
    static MultiDigraph from_matrix(const IntMatrix& a);
    IntMatrix to_matrix() const;
};

struct SimpleCycle {
    /// Starts at the smallest vertex; each vertex appears once.
    std::vector<std::size_t> vertices;
    /// Index of the parallel edge taken out of vertices[i].
    std::vector<unsigned long> edge_choice;
    std::uint64_t vertex_mask = 0;

    unsigned weight() const { return static_cast<unsigned>(vertices.size()); }
};

constexpr std::size_t kDefaultCycleCap = 100000;
constexpr std::size_t kDefaultCliqueCap = 1000000;

/// Every vertex-simple directed cycle, parallel edges giving distinct cycles.
/// Ordered by start vertex, then vertex sequence, then edge choices.
/// Throws GuardError when more than `cap` cycles exist.
std::vector<SimpleCycle> simple_cycles(const IntMatrix& a, std::size_t cap = kDefaultCycleCap);

struct CurveGraph {
    std::vector<SimpleCycle> cycles;
    /// Pairs i < j of vertex-disjoint cycles.
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::vector<std::size_t>> neighbours;

    std::size_t size() const { return cycles.size(); }
    bool adjacent(std::size_t i, std::size_t j) const;
};

CurveGraph curve_graph(const IntMatrix& a, std::size_t cycle_cap = kDefaultCycleCap);

/// 1 + sum over nonempty cliques K of (-1)^|K| t^w(K).
IntPolynomial clique_polynomial(const CurveGraph& g, std::size_t clique_cap = kDefaultCliqueCap);

/// clique_polynomial(curve_graph(A)) == t^n chi_A(1/t).
bool verify_clique_identity(const IntMatrix& a);

/// 1 / (smallest positive root of Q). Throws std::domain_error when Q has
/// no root in (0, 1).
RootEnclosure growth_rate(const CurveGraph& g, const mpq_class& tol = default_tolerance());

enum class ShapeKind { nA1, AStar2, other };

struct Shape {
    ShapeKind kind = ShapeKind::other;
    /// nA1: the n weights ascending. AStar2: a <= b on the edge, then c.
    std::vector<unsigned> weights;
};

Shape curve_graph_shape(const CurveGraph& g);

const char* shape_name(ShapeKind k);

}  // namespace stretchlab
