#pragma once

#include "ahg/graph.hpp"
#include "ahg/player_set.hpp"
#include "ahg/rational.hpp"
#include "ahg/types.hpp"

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ahg {

enum class Aggregate { avg, min };
enum class AltruismDegree { selfish_first, equal_treatment, altruistic_treatment };

// The six utility models: {avg, min} x {SF, EQ, AL}.
enum class UtilityModel : std::uint8_t { avg_sf, avg_eq, avg_al, min_sf, min_eq, min_al };

inline constexpr std::array<UtilityModel, 6> kAllModels = {
    UtilityModel::avg_sf, UtilityModel::avg_eq, UtilityModel::avg_al,
    UtilityModel::min_sf, UtilityModel::min_eq, UtilityModel::min_al,
};

Aggregate aggregate_of(UtilityModel m);
AltruismDegree degree_of(UtilityModel m);

// Canonical tags: "avg-sf", "avg-eq", "avg-al", "min-sf", "min-eq", "min-al".
std::string_view to_string(UtilityModel m);
std::optional<UtilityModel> model_from_string(std::string_view tag);

// A player's utility as an exact lexicographic pair; the weight w that
// scales the dominant term is factored out entirely:
//   SF: (own valuation, friend aggregate)
//   EQ: (aggregate including self, 0)
//   AL: (friend aggregate, own valuation)
// Comparing pairs lexicographically is equivalent to comparing the numeric
// utilities for every admissible weight w >= n^4 (see to_numeric).
struct UtilityValue {
    Rational primary;
    Rational secondary;

    friend bool operator==(const UtilityValue&, const UtilityValue&) = default;
};

// -1, 0, +1 as the first pair is below, equal to, or above the second.
int compare_values(const UtilityValue& a, const UtilityValue& b);

// A subset of the player universe 0..n-1.
class Coalition {
public:
    Coalition() = default;
    explicit Coalition(std::size_t universe) : set_(universe) {}

    static Coalition of(std::size_t universe, std::initializer_list<PlayerId> members);
    static Coalition from_members(std::size_t universe, std::span<const PlayerId> members);

    std::size_t universe() const { return set_.universe(); }
    std::size_t size() const { return set_.size(); }
    bool empty() const { return set_.empty(); }
    bool contains(PlayerId p) const { return set_.contains(p); }
    void insert(PlayerId p) { set_.insert(p); }
    void erase(PlayerId p) { set_.erase(p); }

    std::vector<PlayerId> members() const { return set_.members(); }
    const PlayerSet& as_set() const { return set_; }

    friend bool operator==(const Coalition& a, const Coalition& b) { return a.set_ == b.set_; }

private:
    PlayerSet set_;
};

// An exact partition of the players into nonempty blocks.
class CoalitionStructure {
public:
    // Validates the partition properties; throws StructuralError otherwise.
    CoalitionStructure(std::size_t num_players, std::vector<Coalition> blocks);

    static CoalitionStructure grand_coalition(std::size_t num_players);
    static CoalitionStructure singletons(std::size_t num_players);

    std::size_t num_players() const { return block_index_.size(); }
    const std::vector<Coalition>& blocks() const { return blocks_; }

    const Coalition& block_of(PlayerId i) const;
    std::size_t block_index_of(PlayerId i) const;

private:
    std::vector<Coalition> blocks_;
    std::vector<std::uint32_t> block_index_;
};

// An altruistic hedonic game: the friendship graph plus derived per-player
// friend sets. Immutable. Guarded to 20000 players so the per-player friend
// bitsets stay cheap; everything here is meant for exact desk-scale work.
class GameInstance {
public:
    explicit GameInstance(FriendshipGraph graph);

    std::size_t num_players() const { return graph_.num_vertices(); }
    const FriendshipGraph& graph() const { return graph_; }

    // Sorted list / bitset of i's friends.
    const std::vector<PlayerId>& friends(PlayerId i) const { return graph_.neighbors(i); }
    const PlayerSet& friends_mask(PlayerId i) const;

    static constexpr std::size_t kMaxPlayers = 20000;

private:
    FriendshipGraph graph_;
    std::vector<PlayerSet> friend_masks_;
};

// val_i(C) = n * |friends of i in C| - |enemies of i in C|. Exact; fits in
// 64 bits for every game within the instance guard.
std::int64_t valuation(const GameInstance& game, PlayerId i, const Coalition& c);

// The four friend aggregates: average or minimum of the valuations of i's
// friends in c, optionally including i itself. The aggregate over no
// players (no friends in c, without self) is 0 by convention — both for
// min and for avg; this function is the single home of that convention.
Rational friend_aggregate(const GameInstance& game, PlayerId i, const Coalition& c,
                          Aggregate aggregate, bool with_self);

UtilityValue utility(const GameInstance& game, PlayerId i, const Coalition& c, UtilityModel model);

// Collapses a utility pair to the single number used by the weighted
// definitions: EQ ignores w; SF and AL yield w*primary + secondary (their
// pairs are oriented so the dominant term always sits first).
Rational to_numeric(const UtilityValue& u, UtilityModel model, const BigInt& w);

enum class Preference { prefers_c, prefers_d, indifferent };

// Lexicographic preference of player i between coalitions c and d, both of
// which must contain i.
Preference compare(const GameInstance& game, PlayerId i, const Coalition& c, const Coalition& d,
                   UtilityModel model);

// The structure after the members of c abandon their blocks to form c:
// {c} plus every old block minus c (blocks swallowed whole disappear).
CoalitionStructure move_to_empty(const CoalitionStructure& gamma, const Coalition& c);

} // namespace ahg
