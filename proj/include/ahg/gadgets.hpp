#pragma once

#include "ahg/graph.hpp"
#include "ahg/rational.hpp"
#include "ahg/types.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace ahg {

enum class GadgetKind { circulant, dome, pinched_dome };

std::string to_string(GadgetKind kind);

// Role map of one gadget's players. Ids are local (0-based within the
// gadget) until offset_by is applied during assembly into a larger graph.
struct GadgetLayout {
    GadgetKind kind = GadgetKind::circulant;
    std::size_t degree_param = 0; // k for circulants, d for domes
    std::size_t k_prime = 0;      // size parameter the gadget was built from
    std::size_t num_players = 0;

    // Domes have a top player; circulants do not.
    std::optional<PlayerId> top;

    // The gadget member that gets wired to the outside world when gadgets
    // are assembled: the top for domes, a fixed base-cycle player (id 0)
    // for circulants.
    PlayerId distinguished = 0;

    std::vector<PlayerId> mids;    // empty for circulants
    std::vector<PlayerId> fringe;  // base members with an extra mid friend
    std::vector<PlayerId> base;    // circulant: all players; domes: base clique

    GadgetLayout offset_by(PlayerId delta) const;
};

struct Gadget {
    FriendshipGraph graph;
    GadgetLayout layout;
};

// k' players 0..k'-1 on a cycle, each adjacent to every player within
// cycle distance (k-1)/2; every degree is exactly k-1. Requires k odd,
// k >= 3, k' > k.
Gadget make_circulant(std::size_t k, std::size_t k_prime);

// k' players: a top (id 0), d mids (ids 1..d), and a base clique of the
// remaining k'' = k'-d-1 players. Mid i is adjacent to the top and to the
// i-th fringe member (the d lowest-id base players). Requires d >= 1,
// k' > 2d+1.
Gadget make_dome(std::size_t d, std::size_t k_prime);

// A dome with all mids merged into one: k'-d+1 players — a top (id 0),
// one mid (id 1) adjacent to the top and to d fringe members of the base
// clique of k''= k'-d-1 players. Requires d >= 1, k' > 2d+1.
Gadget make_pinched_dome(std::size_t d, std::size_t k_prime);

enum class CliqueCheckResult {
    hypothesis_failed,   // the inequality or the degree bound does not hold
    clique_of_size_k,    // the graph is a complete graph on exactly k vertices
};

// Checks the counting certificate: if |V| + alpha*|E| <= k + alpha*C(k,2)
// for some alpha >= 1 and every degree is >= k-1, the graph must be a
// k-clique. Reports which side of the certificate applies; throws
// InternalError if the hypothesis holds but the graph is not a k-clique
// (that would contradict the counting argument).
CliqueCheckResult clique_counting_check(const FriendshipGraph& g, const Rational& alpha,
                                        std::size_t k);

} // namespace ahg
