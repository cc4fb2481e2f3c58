#include "finitype/quiver.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>

namespace finitype {

Quiver::Quiver(std::size_t n) : adjacency_(n), successors_(n) {}

Quiver::Quiver(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& arcs) : Quiver(n) {
    for (const auto& [from, to] : arcs) add_arc(from, to, 1);
}

void Quiver::add_arc(std::size_t from, std::size_t to, Integer weight) {
    const std::size_t n = size();
    if (from >= n || to >= n) throw std::invalid_argument("Quiver: vertex out of range");
    if (from == to) throw std::invalid_argument("Quiver: loops are not allowed");
    if (sgn(weight) <= 0) throw std::invalid_argument("Quiver: arc weight must be positive");
    if (adjacent(from, to)) throw std::invalid_argument("Quiver: at most one arc per vertex pair");
    const auto insert_sorted = [](std::vector<std::size_t>& v, std::size_t x) {
        v.insert(std::lower_bound(v.begin(), v.end(), x), x);
    };
    insert_sorted(adjacency_[from], to);
    insert_sorted(adjacency_[to], from);
    insert_sorted(successors_[from], to);
    arcs_.push_back(Arc{from, to, std::move(weight)});
}

bool Quiver::adjacent(std::size_t a, std::size_t b) const {
    return std::binary_search(adjacency_[a].begin(), adjacency_[a].end(), b);
}

bool Quiver::has_arc(std::size_t from, std::size_t to) const {
    return std::binary_search(successors_[from].begin(), successors_[from].end(), to);
}

Quiver build_quiver(const SkewForm& form) {
    const SquareIntMatrix& b = form.matrix();
    const std::size_t n = b.size();
    Quiver g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (sgn(b(i, j)) > 0) g.add_arc(i, j, b(i, j));
    return g;
}

std::vector<TwoConnectedComponent> two_connected_components(const Quiver& g) {
    const std::size_t n = g.size();
    std::vector<std::size_t> disc(n, 0);
    std::vector<std::size_t> low(n, 0);
    std::size_t timer = 0;
    std::vector<Edge> edge_stack;
    std::vector<TwoConnectedComponent> out;

    struct Frame {
        std::size_t v;
        std::size_t parent;
        std::size_t next = 0;
    };
    constexpr std::size_t none = static_cast<std::size_t>(-1);

    const auto close_block = [&](std::size_t p, std::size_t v) {
        TwoConnectedComponent block;
        const Edge last = make_edge(p, v);
        while (true) {
            const Edge e = edge_stack.back();
            edge_stack.pop_back();
            block.edges.push_back(e);
            block.vertices.push_back(e.first);
            block.vertices.push_back(e.second);
            if (e == last) break;
        }
        std::sort(block.edges.begin(), block.edges.end());
        std::sort(block.vertices.begin(), block.vertices.end());
        block.vertices.erase(std::unique(block.vertices.begin(), block.vertices.end()), block.vertices.end());
        block.kind = block.edges.size() == 1 ? TwoConnectedComponent::Kind::SingleEdge
                                             : TwoConnectedComponent::Kind::Cyclic;
        out.push_back(std::move(block));
    };

    for (std::size_t root = 0; root < n; ++root) {
        if (disc[root] != 0 || g.neighbors(root).empty()) continue;
        disc[root] = low[root] = ++timer;
        std::vector<Frame> frames{Frame{root, none}};
        while (!frames.empty()) {
            Frame& f = frames.back();
            const std::size_t v = f.v;
            const auto& nbrs = g.neighbors(v);
            if (f.next < nbrs.size()) {
                const std::size_t w = nbrs[f.next++];
                if (disc[w] == 0) {
                    edge_stack.push_back(make_edge(v, w));
                    disc[w] = low[w] = ++timer;
                    frames.push_back(Frame{w, v});
                } else if (w != f.parent && disc[w] < disc[v]) {
                    edge_stack.push_back(make_edge(v, w));
                    low[v] = std::min(low[v], disc[w]);
                }
                continue;
            }
            const std::size_t parent = f.parent;
            frames.pop_back();
            if (parent == none) continue;
            low[parent] = std::min(low[parent], low[v]);
            if (low[v] >= disc[parent]) close_block(parent, v);
        }
    }

    std::sort(out.begin(), out.end(), [](const TwoConnectedComponent& a, const TwoConnectedComponent& b) {
        return a.vertices < b.vertices;
    });
    return out;
}

std::vector<Edge> ChordlessCycle::edges() const {
    std::vector<Edge> out;
    const std::size_t t = vertices.size();
    out.reserve(t);
    for (std::size_t i = 0; i < t; ++i) out.push_back(make_edge(vertices[i], vertices[(i + 1) % t]));
    return out;
}

namespace {

// Rotates a cyclic sequence so its smallest vertex comes first.
std::vector<std::size_t> rotate_to_min(std::vector<std::size_t> seq) {
    std::rotate(seq.begin(), std::min_element(seq.begin(), seq.end()), seq.end());
    return seq;
}

// Walk order starting at the smallest vertex, heading to its smaller cycle neighbour.
std::vector<std::size_t> undirected_canonical(const std::vector<std::size_t>& seq) {
    std::vector<std::size_t> out = rotate_to_min(seq);
    if (out.size() > 2 && out.back() < out[1]) std::reverse(out.begin() + 1, out.end());
    return out;
}

// Canonical chordless cycle when every arc of seq runs one way round, else nothing.
std::optional<ChordlessCycle> orient(const Quiver& g, const std::vector<std::size_t>& seq) {
    const std::size_t t = seq.size();
    bool forward = true;
    bool backward = true;
    for (std::size_t i = 0; i < t; ++i) {
        const std::size_t a = seq[i];
        const std::size_t b = seq[(i + 1) % t];
        forward = forward && g.has_arc(a, b);
        backward = backward && g.has_arc(b, a);
    }
    if (!forward && !backward) return std::nullopt;

    std::vector<std::size_t> arc_order = seq;
    if (!forward) std::reverse(arc_order.begin(), arc_order.end());
    ChordlessCycle c;
    c.vertices = rotate_to_min(std::move(arc_order));
    c.orientation = c.vertices[1] < c.vertices.back() ? ChordlessCycle::Orientation::Forward
                                                      : ChordlessCycle::Orientation::Backward;
    return c;
}

NotCyclicallyOriented non_cyclic(const std::vector<std::size_t>& seq) {
    NotCyclicallyOriented r;
    r.kind = NotCyclicallyOriented::Kind::NonCyclicCycle;
    r.vertices = undirected_canonical(seq);
    r.detail = "chordless cycle is not cyclically oriented";
    return r;
}

NotCyclicallyOriented structural(std::vector<std::size_t> vertices, std::string detail) {
    NotCyclicallyOriented r;
    r.kind = NotCyclicallyOriented::Kind::StructuralFailure;
    r.vertices = std::move(vertices);
    r.detail = std::move(detail);
    return r;
}

// Reduces one two-connected component to a single cycle by repeatedly
// removing ears: maximal paths of degree-2 vertices whose endpoints are
// adjacent. Each ear together with its base edge is a chordless cycle.
std::optional<NotCyclicallyOriented> reduce_component(const Quiver& g, const TwoConnectedComponent& comp,
                                                      std::vector<ChordlessCycle>& stack) {
    const std::size_t n = g.size();
    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto& [a, b] : comp.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (std::size_t v : comp.vertices) std::sort(adj[v].begin(), adj[v].end());

    std::vector<std::size_t> degree(n, 0);
    std::vector<bool> removed(n, false);
    std::vector<bool> pending(n, false);
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> queue;
    for (std::size_t v : comp.vertices) {
        degree[v] = adj[v].size();
        if (degree[v] == 2) {
            pending[v] = true;
            queue.push(v);
        }
    }
    std::size_t alive = comp.vertices.size();

    const auto live_neighbors = [&](std::size_t v) {
        std::vector<std::size_t> out;
        for (std::size_t w : adj[v])
            if (!removed[w]) out.push_back(w);
        return out;
    };
    const auto live_edge = [&](std::size_t a, std::size_t b) {
        return !removed[a] && !removed[b] && std::binary_search(adj[a].begin(), adj[a].end(), b);
    };
    const auto remaining = [&] {
        std::vector<std::size_t> out;
        for (std::size_t v : comp.vertices)
            if (!removed[v]) out.push_back(v);
        return out;
    };

    // Follows degree-2 vertices away from `from` through `start`; returns the
    // interior vertices visited and the first vertex of other degree, or
    // `origin` if the walk comes back round.
    const auto walk = [&](std::size_t origin, std::size_t from, std::size_t start) {
        std::vector<std::size_t> interior;
        std::size_t prev = from;
        std::size_t cur = start;
        while (cur != origin && degree[cur] == 2) {
            interior.push_back(cur);
            const auto nb = live_neighbors(cur);
            const std::size_t next = nb[0] == prev ? nb[1] : nb[0];
            prev = cur;
            cur = next;
        }
        return std::pair{std::move(interior), cur};
    };

    while (!queue.empty()) {
        const std::size_t v = queue.top();
        queue.pop();
        if (removed[v] || !pending[v]) continue;
        pending[v] = false;
        if (degree[v] != 2) continue;

        const auto nb = live_neighbors(v);
        auto [left, u] = walk(v, v, nb[0]);
        if (u == v) {
            // Everything left is one cycle.
            std::vector<std::size_t> seq{v};
            seq.insert(seq.end(), left.begin(), left.end());
            if (seq.size() != alive) return structural(remaining(), "closed walk does not cover the component");
            auto cycle = orient(g, seq);
            if (!cycle) return non_cyclic(seq);
            stack.push_back(std::move(*cycle));
            return std::nullopt;
        }
        auto [right, w] = walk(v, v, nb[1]);

        // Path u, p1, ..., pk, w with every p of degree 2.
        std::vector<std::size_t> path{u};
        path.insert(path.end(), left.rbegin(), left.rend());
        path.push_back(v);
        path.insert(path.end(), right.begin(), right.end());
        path.push_back(w);
        for (std::size_t i = 1; i + 1 < path.size(); ++i) pending[path[i]] = false;

        if (u == w) return structural(remaining(), "ear closes on a cut vertex");
        // Not an ear yet; revisited once an endpoint drops to degree 2.
        if (!live_edge(u, w)) continue;

        auto cycle = orient(g, path);
        if (!cycle) return non_cyclic(path);
        stack.push_back(std::move(*cycle));

        for (std::size_t i = 1; i + 1 < path.size(); ++i) removed[path[i]] = true;
        alive -= path.size() - 2;
        for (std::size_t end : {u, w}) {
            if (--degree[end] == 2) {
                pending[end] = true;
                queue.push(end);
            }
        }
    }
    return structural(remaining(), "component cannot be reduced to a cycle");
}

}  // namespace

std::variant<CycleInventory, NotCyclicallyOriented> chordless_cycles_cod(const Quiver& g) {
    using Kind = NotCyclicallyOriented::Kind;
    const std::size_t n = g.size();
    const std::size_t m = g.edge_count();
    if (m > 0 && m + 3 > 2 * n) {
        NotCyclicallyOriented r;
        r.kind = Kind::EdgeBoundExceeded;
        for (std::size_t v = 0; v < n; ++v) r.vertices.push_back(v);
        r.edges = m;
        r.bound = 2 * n >= 3 ? 2 * n - 3 : 0;
        r.whole_graph = true;
        r.detail = "more than 2n-3 edges";
        return r;
    }

    const auto components = two_connected_components(g);
    for (const auto& comp : components) {
        const std::size_t nc = comp.vertices.size();
        const std::size_t mc = comp.edges.size();
        if (mc + 3 > 2 * nc) {
            NotCyclicallyOriented r;
            r.kind = Kind::EdgeBoundExceeded;
            r.vertices = comp.vertices;
            r.edges = mc;
            r.bound = 2 * nc - 3;
            r.detail = "two-connected component has more than 2n-3 edges";
            return r;
        }
    }

    CycleInventory inv;
    for (const auto& comp : components) {
        if (comp.kind == TwoConnectedComponent::Kind::SingleEdge) {
            inv.single_edges.push_back(comp.edges.front());
            continue;
        }
        if (auto failure = reduce_component(g, comp, inv.cycles)) return std::move(*failure);
    }
    std::sort(inv.single_edges.begin(), inv.single_edges.end());
    return inv;
}

}  // namespace finitype
