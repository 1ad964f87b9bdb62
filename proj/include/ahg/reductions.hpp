#pragma once

#include "ahg/gadgets.hpp"
#include "ahg/game.hpp"
#include "ahg/graph.hpp"
#include "ahg/stability.hpp"
#include "ahg/types.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ahg {

// The three clique-to-AHG instance generators, named by the utility models
// whose core verification they target. CLI tag values: thm1, thm2, thm3.
enum class ReductionTarget { min_eq_al, avg_eq, avg_al };

std::string_view target_tag(ReductionTarget t);
std::optional<ReductionTarget> target_from_tag(std::string_view tag);

// The models under which the generated partition is blocked iff the source
// graph has a k-clique.
std::vector<UtilityModel> target_models(ReductionTarget t);

struct PreprocessStep {
    enum class Action { add_universal_vertex, add_isolated_vertex };
    Action action;
    std::size_t k_after; // the clique size parameter after this step
    std::string reason;
};

std::string_view to_string(PreprocessStep::Action a);

struct PreprocessResult {
    FriendshipGraph graph;
    std::size_t k_effective = 0;
    std::vector<PreprocessStep> log;
};

// Normalizes (h, k) into the domain each generator is defined on, keeping
// k-clique existence equivalent at every step:
//   min_eq_al: universal vertices until k is odd and >= 3;
//   avg_eq:    universal vertices until k >= 4, then isolated vertices
//              until |V|+|E| >= k^2;
//   avg_al:    universal vertices until k >= 3 and k = 2 (mod 3), then
//              isolated vertices until |V|+|E| > k.
PreprocessResult preprocess_clique_instance(const FriendshipGraph& h, std::size_t k,
                                            ReductionTarget target);

// A generated verification instance together with the provenance needed to
// interpret it: which player realizes which vertex/edge/incidence of the
// source graph, and the per-gadget role maps.
struct ReductionArtifact {
    GameInstance game;
    CoalitionStructure gamma;
    ReductionTarget target;
    std::size_t k_effective = 0;
    std::size_t k_prime = 0;

    // The (preprocessed) source graph the instance encodes.
    FriendshipGraph source;

    std::map<VertexId, PlayerId> vertex_players;
    std::map<Edge, PlayerId> edge_players;
    std::map<std::pair<VertexId, Edge>, PlayerId> incidence_players;
    // Companion sets attached to each edge gadget (min_eq_al with k >= 5
    // only; empty sets are omitted).
    std::map<Edge, std::vector<PlayerId>> dummy_players;

    // Allocation order: one gadget per source vertex (by id), then one per
    // edge (by edge order), then one per (vertex, edge) incidence; player
    // ids are contiguous per gadget. Dummy players follow all gadgets.
    std::vector<GadgetLayout> gadget_layouts;

    std::vector<PreprocessStep> preprocessing_log;

    std::size_t num_source_vertices() const { return source.num_vertices(); }
    std::size_t num_source_edges() const { return source.num_edges(); }
};

// The generators. Preconditions (checked, ContractError): min_eq_al needs
// k odd >= 3; avg_eq needs k >= 4 and |V|+|E| >= k^2; avg_al needs
// |V|+|E| > k >= 3 and (k+1)/3 integral. Run preprocess_clique_instance
// first, or use run_reduction which chains the two.
ReductionArtifact reduce_min_eq_al(const FriendshipGraph& h, std::size_t k);
ReductionArtifact reduce_avg_eq(const FriendshipGraph& h, std::size_t k);
ReductionArtifact reduce_avg_al(const FriendshipGraph& h, std::size_t k);

ReductionArtifact run_reduction(const FriendshipGraph& h, std::size_t k, ReductionTarget target);

// The deviation the instance is engineered around: vertex players and edge
// players of the clique plus the edge players' companions (incidence
// players, and dummy players for min_eq_al). The result is re-validated to
// block gamma under every target model before being returned (fail-stop).
Coalition witness_from_clique(const ReductionArtifact& r, std::span<const VertexId> clique);

// The source subgraph a coalition selects: vertex v present iff its vertex
// player is in c, edge e present iff its edge player is. An edge whose
// endpoint vertices are absent makes the result ill-formed (possible for
// arbitrary coalitions, impossible for blocking ones).
struct CandidateSubgraph {
    std::vector<VertexId> vertices;
    std::vector<Edge> edges;
    FriendshipGraph graph; // over the full source id space, edges as above
    bool well_formed = true;
};

CandidateSubgraph extract_candidate_subgraph(const ReductionArtifact& r, const Coalition& c);

// Closed-form predictions for players in gamma, used as the test oracle
// against the engine. Only tabulated player classes appear; exact pair
// equality is required for `utilities`, exact equality of the dominant
// component for `utility_primaries`, and >= for `primary_lower_bounds`.
struct ExpectedValues {
    std::optional<std::int64_t> valuation;
    std::vector<std::pair<UtilityModel, UtilityValue>> utilities;
    std::vector<std::pair<UtilityModel, Rational>> utility_primaries;
    std::vector<std::pair<UtilityModel, Rational>> primary_lower_bounds;
};

std::map<PlayerId, ExpectedValues> expected_gamma_values(const ReductionArtifact& r);

// Candidate pool for restricted verification of generated instances: every
// distinguished player, every mid player, every dummy player. Sorted.
std::vector<PlayerId> restricted_search_candidates(const ReductionArtifact& r);

} // namespace ahg
