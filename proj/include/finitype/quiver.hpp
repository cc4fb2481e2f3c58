#pragma once

#include "finitype/exactmat.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace finitype {

/// Undirected edge, stored with first < second.
using Edge = std::pair<std::size_t, std::size_t>;

inline Edge make_edge(std::size_t a, std::size_t b) { return a < b ? Edge{a, b} : Edge{b, a}; }

struct Arc {
    std::size_t from;
    std::size_t to;
    Integer weight;
};

/// Oriented simple graph G(B): an arc i -> j for every b_ij > 0.
class Quiver {
public:
    Quiver() = default;
    explicit Quiver(std::size_t n);

    /// Unit-weight quiver from an arc list. Throws std::invalid_argument on
    /// loops, out-of-range vertices or a second arc between the same pair.
    Quiver(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& arcs);

    void add_arc(std::size_t from, std::size_t to, Integer weight);

    std::size_t size() const { return adjacency_.size(); }
    std::size_t edge_count() const { return arcs_.size(); }
    const std::vector<Arc>& arcs() const { return arcs_; }

    /// Neighbours in the underlying undirected graph, ascending.
    const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_[v]; }

    bool adjacent(std::size_t a, std::size_t b) const;
    bool has_arc(std::size_t from, std::size_t to) const;

private:
    std::vector<Arc> arcs_;
    std::vector<std::vector<std::size_t>> adjacency_;
    std::vector<std::vector<std::size_t>> successors_;  // ascending
};

Quiver build_quiver(const SkewForm& b);

struct TwoConnectedComponent {
    enum class Kind { SingleEdge, Cyclic };
    std::vector<std::size_t> vertices;  // ascending
    std::vector<Edge> edges;            // ascending
    Kind kind = Kind::SingleEdge;
};

/// Blocks of the underlying undirected graph (Tarjan lowpoints), ordered by
/// smallest vertex, then by vertex list. Isolated vertices belong to no block.
std::vector<TwoConnectedComponent> two_connected_components(const Quiver& g);

/// Chordless cycle in canonical form: vertices listed in arc order
/// (x1 -> x2 -> ... -> xt -> x1) starting at the smallest vertex.
struct ChordlessCycle {
    /// Forward when the arc leaving x1 goes to the smaller of its two cycle neighbours.
    enum class Orientation { Forward, Backward };
    std::vector<std::size_t> vertices;
    Orientation orientation = Orientation::Forward;

    std::vector<Edge> edges() const;

    friend bool operator==(const ChordlessCycle&, const ChordlessCycle&) = default;
};

struct CycleInventory {
    std::vector<ChordlessCycle> cycles;  // stack, top at back(), in discovery order
    std::vector<Edge> single_edges;      // ascending
};

struct NotCyclicallyOriented {
    enum class Kind { EdgeBoundExceeded, NonCyclicCycle, StructuralFailure };
    Kind kind = Kind::StructuralFailure;
    /// Component vertices (edge bound, structural) or the offending cycle in
    /// walk order starting at its smallest vertex (non-cyclic cycle).
    std::vector<std::size_t> vertices;
    std::size_t edges = 0;
    std::size_t bound = 0;
    bool whole_graph = false;
    std::string detail;
};

/// Peels chordless cycles off every two-connected component, checking that
/// each one is cyclically oriented. On success the inventory holds every
/// chordless cycle of the graph.
std::variant<CycleInventory, NotCyclicallyOriented> chordless_cycles_cod(const Quiver& g);

}  // namespace finitype
