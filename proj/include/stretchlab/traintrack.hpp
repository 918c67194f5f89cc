#pragma once

// Combinatorial train tracks stored as fat graphs: switch conditions,
// weight space, the Thurston form, boundary walks and radical elements.

#include <gmpxx.h>

#include <array>
#include <stdexcept>
#include <vector>

namespace stretchlab {

enum class EdgeKind { real, infinitesimal };

struct TrackEdge {
    std::array<std::size_t, 2> ends{};  ///< half-edge ids
    EdgeKind kind = EdgeKind::real;
};

/// Half-edges on each side listed left to right; going clockwise around
/// the vertex one meets side_a, then side_b.
struct TrackVertex {
    std::vector<std::size_t> side_a;
    std::vector<std::size_t> side_b;
};

class InvalidTrack : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using RationalVector = std::vector<mpq_class>;
using RationalMatrix = std::vector<RationalVector>;

class TrainTrack {
public:
    TrainTrack() = default;
    /// Half-edge ids must be exactly 0 .. 2|E| - 1, each on one side of one
    /// vertex and at one end of one edge; both sides of every vertex
    /// nonempty; infinitesimal edges form disjoint cycles. Throws InvalidTrack.
    TrainTrack(std::vector<TrackVertex> vertices, std::vector<TrackEdge> edges);

    const std::vector<TrackVertex>& vertices() const noexcept { return vertices_; }
    const std::vector<TrackEdge>& edges() const noexcept { return edges_; }
    std::size_t half_edge_count() const noexcept { return 2 * edges_.size(); }

    std::size_t edge_of(std::size_t h) const { return edge_of_[h]; }
    std::size_t vertex_of(std::size_t h) const { return vertex_of_[h]; }
    /// 0 for side A, 1 for side B.
    int side_of(std::size_t h) const { return side_of_[h]; }
    std::size_t partner(std::size_t h) const;
    /// Next half-edge clockwise at the same vertex.
    std::size_t clockwise_next(std::size_t h) const;

    /// At every vertex one side holds only infinitesimal half-edges and the
    /// other only real ones.
    bool standardly_embedded() const;

    static TrainTrack single_loop();
    /// Infinitesimal n-gon with one real loop on the real side of each corner.
    static TrainTrack polygon_with_loops(std::size_t n);
    /// Infinitesimal n-gon with a ring of n real edges joining consecutive corners.
    static TrainTrack polygon_with_ring(std::size_t n);

private:
    std::vector<TrackVertex> vertices_;
    std::vector<TrackEdge> edges_;
    std::vector<std::size_t> edge_of_;
    std::vector<std::size_t> vertex_of_;
    std::vector<int> side_of_;
    std::vector<std::size_t> position_;  ///< index in the clockwise order
};

/// Row v is T_v: side A weights minus side B weights.
RationalMatrix switch_matrix(const TrainTrack& t);

struct WeightSpace {
    /// Each basis vector has one coordinate per edge.
    std::vector<RationalVector> basis;
    std::size_t rank_of_switch_system = 0;

    std::size_t dimension() const { return basis.size(); }
};

WeightSpace weight_space(const TrainTrack& t);

bool in_weight_space(const TrainTrack& t, const RationalVector& w);

/// Throws std::invalid_argument when w or w2 violates a switch condition.
mpq_class thurston_form(const TrainTrack& t, const RationalVector& w, const RationalVector& w2);

/// Matrix of omega in the given basis.
RationalMatrix gram_matrix(const TrainTrack& t, const WeightSpace& ws);

struct BoundaryComponent {
    std::vector<std::size_t> half_edges;  ///< walk, each entry traversed from its own vertex
    /// cusp[i]: the corner after half_edges[i] is a cusp.
    std::vector<bool> cusp;
    std::size_t cusps = 0;
};

/// Orbits of the face permutation h -> clockwise_next(partner(h)).
std::vector<BoundaryComponent> boundary_components(const TrainTrack& t);

/// Alternating +-1 weights on the sides between cusps; a smooth walk with
/// no cusp is one side. Throws std::invalid_argument for an odd cusp count.
RationalVector radical_element(const TrainTrack& t, const BoundaryComponent& c);

struct RadicalReport {
    std::vector<RationalVector> basis;  ///< edge coordinates
    std::vector<RationalVector> elements;
    std::vector<std::size_t> element_components;
    std::size_t elements_span = 0;
    bool elements_in_weight_space = false;
    bool contained = false;  ///< every element pairs to zero with the weight space
    bool equal = false;

    std::size_t dimension() const { return basis.size(); }
};

RadicalReport radical(const TrainTrack& t);

/// Exact row reduction helpers shared with the reports.
std::size_t rank(RationalMatrix m);
std::vector<RationalVector> kernel(const RationalMatrix& m, std::size_t columns);

}  // namespace stretchlab
