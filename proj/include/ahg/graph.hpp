#pragma once

#include "ahg/types.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ahg {

// An undirected edge, stored normalized with u < v.
struct Edge {
    VertexId u;
    VertexId v;
    auto operator<=>(const Edge&) const = default;
};

// Simple undirected graph over dense vertex ids 0..n-1. Immutable once
// built; edges are deduplicated and normalized, neighbor lists are sorted.
class FriendshipGraph {
public:
    FriendshipGraph() = default;

    // Rejects self-loops and out-of-range endpoints. Duplicate edges (in
    // either orientation) collapse to one.
    static FriendshipGraph build(std::size_t num_vertices,
                                 std::span<const std::pair<VertexId, VertexId>> edges);
    static FriendshipGraph build(std::size_t num_vertices,
                                 std::initializer_list<std::pair<VertexId, VertexId>> edges);

    std::size_t num_vertices() const { return adjacency_.size(); }
    std::size_t num_edges() const { return edges_.size(); }

    // Sorted by (u, v).
    const std::vector<Edge>& edges() const { return edges_; }

    // Sorted ascending. Throws ContractError on an out-of-range id.
    const std::vector<VertexId>& neighbors(VertexId v) const;

    std::size_t degree(VertexId v) const { return neighbors(v).size(); }

    bool has_edge(VertexId a, VertexId b) const;

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<VertexId>> adjacency_;
};

// Result of restricting a graph to a vertex subset: the restricted graph
// plus the id translation in both directions.
struct InducedSubgraph {
    FriendshipGraph graph;
    std::vector<VertexId> to_original;      // local id -> original id, ascending
    std::map<VertexId, VertexId> to_local;  // original id -> local id
};

// m may be given in any order; duplicates are rejected.
InducedSubgraph induced_subgraph(const FriendshipGraph& g, std::span<const VertexId> m);

// True iff every pair of the (duplicate-free) vertex list is adjacent.
// Empty and singleton lists are cliques.
bool is_clique(const FriendshipGraph& g, std::span<const VertexId> m);

// Exact search for a clique of the given size; first hit in lexicographic
// order on the sorted vertex list. Guarded to graphs with at most 30
// vertices (CapacityError beyond); intended for desk-sized inputs.
std::optional<std::vector<VertexId>> find_clique(const FriendshipGraph& g, std::size_t size);

// Copy of g with one extra vertex (id n) adjacent to every existing vertex.
FriendshipGraph add_universal_vertex(const FriendshipGraph& g);

// Copy of g with one extra isolated vertex (id n).
FriendshipGraph add_isolated_vertex(const FriendshipGraph& g);

// Disjoint union; part i occupies ids [offsets[i], offsets[i] + n_i).
struct DisjointUnion {
    FriendshipGraph graph;
    std::vector<VertexId> offsets;
};

DisjointUnion disjoint_union(std::span<const FriendshipGraph> parts);

} // namespace ahg
