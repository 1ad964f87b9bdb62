#include "ahg/graph.hpp"

#include <algorithm>
#include <cstdint>

namespace ahg {

FriendshipGraph FriendshipGraph::build(std::size_t num_vertices,
                                       std::span<const std::pair<VertexId, VertexId>> edges) {
    FriendshipGraph g;
    g.adjacency_.resize(num_vertices);
    g.edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a >= num_vertices || b >= num_vertices)
            throw StructuralError("edge {" + std::to_string(a) + "," + std::to_string(b) +
                                  "} has an endpoint outside 0.." + std::to_string(num_vertices) +
                                  "-1");
        if (a == b)
            throw StructuralError("self-loop at vertex " + std::to_string(a));
        g.edges_.push_back(a < b ? Edge{a, b} : Edge{b, a});
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
    for (const Edge& e : g.edges_) {
        g.adjacency_[e.u].push_back(e.v);
        g.adjacency_[e.v].push_back(e.u);
    }
    for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

FriendshipGraph FriendshipGraph::build(std::size_t num_vertices,
                                       std::initializer_list<std::pair<VertexId, VertexId>> edges) {
    return build(num_vertices, std::span<const std::pair<VertexId, VertexId>>(edges.begin(), edges.size()));
}

const std::vector<VertexId>& FriendshipGraph::neighbors(VertexId v) const {
    if (v >= adjacency_.size())
        throw ContractError("vertex id " + std::to_string(v) + " outside 0.." +
                            std::to_string(adjacency_.size()) + "-1");
    return adjacency_[v];
}

bool FriendshipGraph::has_edge(VertexId a, VertexId b) const {
    if (a >= adjacency_.size() || b >= adjacency_.size())
        throw ContractError("has_edge endpoint outside the vertex range");
    if (a == b) return false;
    const auto& nbrs = adjacency_[a].size() <= adjacency_[b].size() ? adjacency_[a] : adjacency_[b];
    VertexId other = adjacency_[a].size() <= adjacency_[b].size() ? b : a;
    return std::binary_search(nbrs.begin(), nbrs.end(), other);
}

InducedSubgraph induced_subgraph(const FriendshipGraph& g, std::span<const VertexId> m) {
    InducedSubgraph out;
    out.to_original.assign(m.begin(), m.end());
    std::sort(out.to_original.begin(), out.to_original.end());
    if (std::adjacent_find(out.to_original.begin(), out.to_original.end()) != out.to_original.end())
        throw ContractError("induced_subgraph: duplicate vertex in selection");
    for (VertexId v : out.to_original)
        if (v >= g.num_vertices())
            throw ContractError("induced_subgraph: vertex " + std::to_string(v) +
                                " is not in the graph");
    for (std::size_t i = 0; i < out.to_original.size(); ++i)
        out.to_local[out.to_original[i]] = static_cast<VertexId>(i);

    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const Edge& e : g.edges()) {
        auto iu = out.to_local.find(e.u);
        auto iv = out.to_local.find(e.v);
        if (iu != out.to_local.end() && iv != out.to_local.end())
            edges.emplace_back(iu->second, iv->second);
    }
    out.graph = FriendshipGraph::build(out.to_original.size(), edges);
    return out;
}

bool is_clique(const FriendshipGraph& g, std::span<const VertexId> m) {
    std::vector<VertexId> v(m.begin(), m.end());
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    for (VertexId x : v)
        if (x >= g.num_vertices())
            throw ContractError("is_clique: vertex " + std::to_string(x) + " is not in the graph");
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (!g.has_edge(v[i], v[j])) return false;
    return true;
}

namespace {

// Classic mask-based extension search; only reachable for n <= 30.
bool extend_clique(const std::vector<std::uint32_t>& nbr_mask, std::size_t n, std::size_t size,
                   std::vector<VertexId>& current, std::uint32_t candidates, VertexId next) {
    if (current.size() == size) return true;
    for (VertexId v = next; v < n; ++v) {
        if (!((candidates >> v) & 1u)) continue;
        if (n - v < size - current.size()) break; // too few ids left
        current.push_back(v);
        if (extend_clique(nbr_mask, n, size, current, candidates & nbr_mask[v],
                          static_cast<VertexId>(v + 1)))
            return true;
        current.pop_back();
    }
    return false;
}

} // namespace

std::optional<std::vector<VertexId>> find_clique(const FriendshipGraph& g, std::size_t size) {
    const std::size_t n = g.num_vertices();
    if (n > 30)
        throw CapacityError("find_clique is exact and guarded to 30 vertices; got " +
                            std::to_string(n));
    if (size == 0) return std::vector<VertexId>{};
    if (size > n) return std::nullopt;

    std::vector<std::uint32_t> nbr_mask(n, 0);
    for (const Edge& e : g.edges()) {
        nbr_mask[e.u] |= std::uint32_t{1} << e.v;
        nbr_mask[e.v] |= std::uint32_t{1} << e.u;
    }
    std::uint32_t all = n == 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1);
    std::vector<VertexId> current;
    current.reserve(size);
    if (extend_clique(nbr_mask, n, size, current, all, 0)) return current;
    return std::nullopt;
}

FriendshipGraph add_universal_vertex(const FriendshipGraph& g) {
    const std::size_t n = g.num_vertices();
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(g.num_edges() + n);
    for (const Edge& e : g.edges()) edges.emplace_back(e.u, e.v);
    for (VertexId v = 0; v < n; ++v) edges.emplace_back(v, static_cast<VertexId>(n));
    return FriendshipGraph::build(n + 1, edges);
}

FriendshipGraph add_isolated_vertex(const FriendshipGraph& g) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(g.num_edges());
    for (const Edge& e : g.edges()) edges.emplace_back(e.u, e.v);
    return FriendshipGraph::build(g.num_vertices() + 1, edges);
}

DisjointUnion disjoint_union(std::span<const FriendshipGraph> parts) {
    DisjointUnion out;
    std::size_t total = 0;
    for (const FriendshipGraph& p : parts) {
        out.offsets.push_back(static_cast<VertexId>(total));
        total += p.num_vertices();
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (const Edge& e : parts[i].edges())
            edges.emplace_back(out.offsets[i] + e.u, out.offsets[i] + e.v);
    out.graph = FriendshipGraph::build(total, edges);
    return out;
}

} // namespace ahg
