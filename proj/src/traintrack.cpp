#include "stretchlab/traintrack.hpp"

#include <algorithm>
#include <string>

namespace stretchlab {

TrainTrack::TrainTrack(std::vector<TrackVertex> vertices, std::vector<TrackEdge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    const std::size_t nh = 2 * edges_.size();
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    edge_of_.assign(nh, none);
    vertex_of_.assign(nh, none);
    side_of_.assign(nh, -1);
    position_.assign(nh, 0);

    for (std::size_t e = 0; e < edges_.size(); ++e)
        for (std::size_t h : edges_[e].ends) {
            if (h >= nh) throw InvalidTrack("edge " + std::to_string(e) + " uses half-edge " + std::to_string(h) + " out of range");
            if (edge_of_[h] != none) throw InvalidTrack("half-edge " + std::to_string(h) + " is an end of two edges");
            edge_of_[h] = e;
        }
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
        const TrackVertex& tv = vertices_[v];
        if (tv.side_a.empty() || tv.side_b.empty())
            throw InvalidTrack("vertex " + std::to_string(v) + " has an empty side");
        std::size_t pos = 0;
        for (int side = 0; side < 2; ++side)
            for (std::size_t h : side == 0 ? tv.side_a : tv.side_b) {
                if (h >= nh) throw InvalidTrack("vertex " + std::to_string(v) + " lists unknown half-edge " + std::to_string(h));
                if (vertex_of_[h] != none) throw InvalidTrack("half-edge " + std::to_string(h) + " appears twice");
                vertex_of_[h] = v;
                side_of_[h] = side;
                position_[h] = pos++;
            }
    }
    for (std::size_t h = 0; h < nh; ++h)
        if (vertex_of_[h] == none) throw InvalidTrack("half-edge " + std::to_string(h) + " is not on any vertex");

    std::vector<int> inf_degree(vertices_.size(), 0);
    for (const TrackEdge& e : edges_)
        if (e.kind == EdgeKind::infinitesimal)
            for (std::size_t h : e.ends) ++inf_degree[vertex_of_[h]];
    for (std::size_t v = 0; v < vertices_.size(); ++v)
        if (inf_degree[v] != 0 && inf_degree[v] != 2)
            throw InvalidTrack("infinitesimal edges at vertex " + std::to_string(v) + " do not form disjoint cycles");
}

std::size_t TrainTrack::partner(std::size_t h) const {
    const TrackEdge& e = edges_[edge_of_[h]];
    return e.ends[0] == h ? e.ends[1] : e.ends[0];
}

std::size_t TrainTrack::clockwise_next(std::size_t h) const {
    const TrackVertex& v = vertices_[vertex_of_[h]];
    const std::size_t total = v.side_a.size() + v.side_b.size();
    const std::size_t next = (position_[h] + 1) % total;
    return next < v.side_a.size() ? v.side_a[next] : v.side_b[next - v.side_a.size()];
}

bool TrainTrack::standardly_embedded() const {
    bool any_inf = false;
    for (const TrackVertex& v : vertices_) {
        auto kind_of = [&](std::size_t h) { return edges_[edge_of_[h]].kind; };
        auto uniform = [&](const std::vector<std::size_t>& side, EdgeKind k) {
            return std::all_of(side.begin(), side.end(), [&](std::size_t h) { return kind_of(h) == k; });
        };
        const bool a_inf = uniform(v.side_a, EdgeKind::infinitesimal) && uniform(v.side_b, EdgeKind::real);
        const bool b_inf = uniform(v.side_b, EdgeKind::infinitesimal) && uniform(v.side_a, EdgeKind::real);
        if (!a_inf && !b_inf) return false;
        any_inf = true;
    }
    return any_inf;
}

TrainTrack TrainTrack::single_loop() {
    return TrainTrack({TrackVertex{{0}, {1}}}, {TrackEdge{{0, 1}, EdgeKind::real}});
}

namespace {

TrainTrack polygon(std::size_t n, bool ring) {
    if (n == 0) throw std::invalid_argument("polygon track: need at least one corner");
    std::vector<TrackEdge> edges;
    for (std::size_t k = 0; k < n; ++k) edges.push_back({{2 * k, 2 * k + 1}, EdgeKind::infinitesimal});
    for (std::size_t k = 0; k < n; ++k) edges.push_back({{2 * n + 2 * k, 2 * n + 2 * k + 1}, EdgeKind::real});
    std::vector<TrackVertex> vertices(n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t prev = (k + n - 1) % n;
        // Edge k runs from corner k (end 2k) to corner k+1 (end 2k+1).
        vertices[k].side_a = {2 * prev + 1, 2 * k};
        if (ring) vertices[k].side_b = {2 * n + 2 * prev + 1, 2 * n + 2 * k};
        else vertices[k].side_b = {2 * n + 2 * k, 2 * n + 2 * k + 1};
    }
    return TrainTrack(std::move(vertices), std::move(edges));
}

}  // namespace

TrainTrack TrainTrack::polygon_with_loops(std::size_t n) { return polygon(n, false); }
TrainTrack TrainTrack::polygon_with_ring(std::size_t n) { return polygon(n, true); }

// ---------------------------------------------------------------- linear algebra

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m, std::size_t columns) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < columns && row < m.size(); ++col) {
        std::size_t p = row;
        while (p < m.size() && m[p][col] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[row], m[p]);
        const mpq_class inv = 1 / m[row][col];
        for (auto& x : m[row]) x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            const mpq_class f = m[r][col];
            for (std::size_t c = col; c < columns; ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(RationalMatrix m) {
    if (m.empty()) return 0;
    return rref(m, m.front().size()).size();
}

std::vector<RationalVector> kernel(const RationalMatrix& m, std::size_t columns) {
    RationalMatrix r = m;
    const std::vector<std::size_t> pivots = rref(r, columns);
    std::vector<bool> is_pivot(columns, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < columns; ++free) {
        if (is_pivot[free]) continue;
        RationalVector v(columns);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

RationalMatrix switch_matrix(const TrainTrack& t) {
    RationalMatrix m(t.vertices().size(), RationalVector(t.edges().size()));
    for (std::size_t v = 0; v < t.vertices().size(); ++v) {
        for (std::size_t h : t.vertices()[v].side_a) m[v][t.edge_of(h)] += 1;
        for (std::size_t h : t.vertices()[v].side_b) m[v][t.edge_of(h)] -= 1;
    }
    return m;
}

WeightSpace weight_space(const TrainTrack& t) {
    const RationalMatrix s = switch_matrix(t);
    WeightSpace ws;
    ws.rank_of_switch_system = rank(s);
    ws.basis = kernel(s, t.edges().size());
    return ws;
}

bool in_weight_space(const TrainTrack& t, const RationalVector& w) {
    if (w.size() != t.edges().size()) return false;
    for (const RationalVector& row : switch_matrix(t)) {
        mpq_class s = 0;
        for (std::size_t e = 0; e < w.size(); ++e) s += row[e] * w[e];
        if (s != 0) return false;
    }
    return true;
}

namespace {

mpq_class omega_unchecked(const TrainTrack& t, const RationalVector& w, const RationalVector& w2) {
    mpq_class total = 0;
    for (const TrackVertex& v : t.vertices())
        for (const auto* side : {&v.side_a, &v.side_b})
            for (std::size_t i = 0; i < side->size(); ++i)
                for (std::size_t j = i + 1; j < side->size(); ++j) {
                    const std::size_t e1 = t.edge_of((*side)[i]);
                    const std::size_t e2 = t.edge_of((*side)[j]);
                    total += w[e1] * w2[e2] - w[e2] * w2[e1];
                }
    return total;
}

}  // namespace

mpq_class thurston_form(const TrainTrack& t, const RationalVector& w, const RationalVector& w2) {
    if (!in_weight_space(t, w) || !in_weight_space(t, w2))
        throw std::invalid_argument("thurston_form: weight violates a switch condition");
    return omega_unchecked(t, w, w2);
}

RationalMatrix gram_matrix(const TrainTrack& t, const WeightSpace& ws) {
    const std::size_t d = ws.dimension();
    RationalMatrix g(d, RationalVector(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            g[i][j] = omega_unchecked(t, ws.basis[i], ws.basis[j]);
            g[j][i] = -g[i][j];
        }
    return g;
}

std::vector<BoundaryComponent> boundary_components(const TrainTrack& t) {
    std::vector<BoundaryComponent> out;
    std::vector<bool> seen(t.half_edge_count(), false);
    for (std::size_t start = 0; start < t.half_edge_count(); ++start) {
        if (seen[start]) continue;
        BoundaryComponent c;
        std::size_t h = start;
        do {
            seen[h] = true;
            c.half_edges.push_back(h);
            const std::size_t arrive = t.partner(h);
            const std::size_t next = t.clockwise_next(arrive);
            const bool cusp = t.side_of(arrive) == t.side_of(next) && arrive != next;
            c.cusp.push_back(cusp);
            if (cusp) ++c.cusps;
            h = next;
        } while (h != start);
        out.push_back(std::move(c));
    }
    return out;
}

RationalVector radical_element(const TrainTrack& t, const BoundaryComponent& c) {
    if (c.cusps % 2 != 0) throw std::invalid_argument("radical_element: component has an odd number of cusps");
    RationalVector r(t.edges().size());
    const std::size_t len = c.half_edges.size();
    if (c.cusps == 0) {
        for (std::size_t h : c.half_edges) r[t.edge_of(h)] -= 1;
        return r;
    }
    // Start right after a cusp so the first side is I_1.
    std::size_t first = 0;
    while (!c.cusp[(first + len - 1) % len]) ++first;
    int sign = -1;
    for (std::size_t step = 0; step < len; ++step) {
        const std::size_t i = (first + step) % len;
        r[t.edge_of(c.half_edges[i])] += sign;
        if (c.cusp[i]) sign = -sign;
    }
    return r;
}

RadicalReport radical(const TrainTrack& t) {
    RadicalReport rep;
    const WeightSpace ws = weight_space(t);
    const RationalMatrix g = gram_matrix(t, ws);
    for (const RationalVector& k : kernel(g, ws.dimension())) {
        RationalVector v(t.edges().size());
        for (std::size_t i = 0; i < k.size(); ++i)
            if (k[i] != 0)
                for (std::size_t e = 0; e < v.size(); ++e) v[e] += k[i] * ws.basis[i][e];
        rep.basis.push_back(std::move(v));
    }
    const auto comps = boundary_components(t);
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (comps[i].cusps % 2 != 0) continue;
        rep.elements.push_back(radical_element(t, comps[i]));
        rep.element_components.push_back(i);
    }
    rep.elements_span = rank(rep.elements);
    rep.elements_in_weight_space = std::all_of(rep.elements.begin(), rep.elements.end(),
                                               [&](const RationalVector& r) { return in_weight_space(t, r); });
    rep.contained = rep.elements_in_weight_space;
    for (const RationalVector& r : rep.elements)
        for (const RationalVector& b : ws.basis)
            if (rep.contained && omega_unchecked(t, r, b) != 0) rep.contained = false;
    rep.equal = rep.contained && rep.elements_span == rep.dimension();
    return rep;
}

}  // namespace stretchlab
