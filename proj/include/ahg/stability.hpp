#pragma once

#include "ahg/game.hpp"
#include "ahg/types.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

namespace ahg {

enum class CoreStatus { stable, blocked, stable_up_to_bound };

std::string_view to_string(CoreStatus s);

// CLI contract: stable -> 0, blocked -> 10, stable_up_to_bound -> 20.
int exit_code_for(CoreStatus s);

// Scope actually searched by a restricted verification.
struct SearchBound {
    std::size_t max_size = 0;       // largest coalition size examined
    std::size_t num_candidates = 0; // players the search drew members from
};

struct CoreVerdict {
    CoreStatus status = CoreStatus::stable;
    std::optional<Coalition> certificate; // present iff status == blocked
    std::uint64_t explored = 0;           // coalitions actually tested
    std::optional<SearchBound> bound;     // present iff a restricted search ran
};

// Full enumeration of all 2^n - 1 nonempty coalitions, in ascending size
// and then lexicographic member order. Guarded by max_players (capacity
// error beyond it). The parallel variant splits the subset space by the
// membership pattern of the highest player ids; with deterministic = true
// it returns the same certificate the sequential order would find,
// otherwise any valid certificate.
struct ExhaustiveStrategy {
    bool parallel = false;
    unsigned threads = 0; // 0: AHG_THREADS env var, else hardware default
    bool deterministic = true;
    std::size_t max_players = 25;
};

// Only coalitions drawn from `candidates` with at most max_size members.
// Finding nothing proves nothing beyond the scope searched, hence the
// stable_up_to_bound status.
struct RestrictedStrategy {
    std::size_t max_size = 0;
    std::vector<PlayerId> candidates;
};

using SearchStrategy = std::variant<ExhaustiveStrategy, RestrictedStrategy>;

// True iff every member of c strictly prefers c to its current block.
bool blocks(const GameInstance& game, const Coalition& c, const CoalitionStructure& gamma,
            UtilityModel model);

// True iff every member weakly prefers c and at least one strictly does.
bool weakly_blocks(const GameInstance& game, const Coalition& c, const CoalitionStructure& gamma,
                   UtilityModel model);

// Searches for a coalition blocking gamma. Any returned certificate is
// re-validated through blocks() before the verdict leaves this function;
// a mismatch is a bug and throws InternalError.
CoreVerdict verify_core(const GameInstance& game, const CoalitionStructure& gamma,
                        UtilityModel model, const SearchStrategy& strategy);

// Same search with weakly_blocks as the predicate (strict core).
CoreVerdict verify_strict_core(const GameInstance& game, const CoalitionStructure& gamma,
                               UtilityModel model, const SearchStrategy& strategy);

// Independent test oracle: a deliberately naive mask loop over all
// coalitions, evaluating utilities with its own arithmetic (adjacency-list
// scans plus big rationals; none of the search machinery above). Guarded
// to 16 players. Status agrees with verify_core(exhaustive) by property.
CoreVerdict brute_force_core(const GameInstance& game, const CoalitionStructure& gamma,
                             UtilityModel model);

} // namespace ahg
