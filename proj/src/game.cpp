#include "ahg/game.hpp"

#include <algorithm>

namespace ahg {

Aggregate aggregate_of(UtilityModel m) {
    switch (m) {
        case UtilityModel::avg_sf:
        case UtilityModel::avg_eq:
        case UtilityModel::avg_al: return Aggregate::avg;
        case UtilityModel::min_sf:
        case UtilityModel::min_eq:
        case UtilityModel::min_al: return Aggregate::min;
    }
    throw InternalError("unhandled utility model");
}

AltruismDegree degree_of(UtilityModel m) {
    switch (m) {
        case UtilityModel::avg_sf:
        case UtilityModel::min_sf: return AltruismDegree::selfish_first;
        case UtilityModel::avg_eq:
        case UtilityModel::min_eq: return AltruismDegree::equal_treatment;
        case UtilityModel::avg_al:
        case UtilityModel::min_al: return AltruismDegree::altruistic_treatment;
    }
    throw InternalError("unhandled utility model");
}

std::string_view to_string(UtilityModel m) {
    switch (m) {
        case UtilityModel::avg_sf: return "avg-sf";
        case UtilityModel::avg_eq: return "avg-eq";
        case UtilityModel::avg_al: return "avg-al";
        case UtilityModel::min_sf: return "min-sf";
        case UtilityModel::min_eq: return "min-eq";
        case UtilityModel::min_al: return "min-al";
    }
    throw InternalError("unhandled utility model");
}

std::optional<UtilityModel> model_from_string(std::string_view tag) {
    for (UtilityModel m : kAllModels)
        if (to_string(m) == tag) return m;
    return std::nullopt;
}

int compare_values(const UtilityValue& a, const UtilityValue& b) {
    if (a.primary != b.primary) return a.primary < b.primary ? -1 : 1;
    if (a.secondary != b.secondary) return a.secondary < b.secondary ? -1 : 1;
    return 0;
}

Coalition Coalition::of(std::size_t universe, std::initializer_list<PlayerId> members) {
    Coalition c(universe);
    for (PlayerId p : members) c.insert(p);
    return c;
}

Coalition Coalition::from_members(std::size_t universe, std::span<const PlayerId> members) {
    Coalition c(universe);
    for (PlayerId p : members) c.insert(p);
    return c;
}

CoalitionStructure::CoalitionStructure(std::size_t num_players, std::vector<Coalition> blocks)
    : blocks_(std::move(blocks)), block_index_(num_players, UINT32_MAX) {
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        const Coalition& block = blocks_[b];
        if (block.universe() != num_players)
            throw StructuralError("partition block over a universe of " +
                                  std::to_string(block.universe()) + " players in a game of " +
                                  std::to_string(num_players));
        if (block.empty())
            throw StructuralError("partition contains an empty block");
        bool overlap = false;
        block.as_set().for_each_member([&](PlayerId p) {
            if (block_index_[p] != UINT32_MAX) overlap = true;
            block_index_[p] = static_cast<std::uint32_t>(b);
        });
        if (overlap)
            throw StructuralError("partition blocks overlap");
    }
    for (std::size_t p = 0; p < num_players; ++p)
        if (block_index_[p] == UINT32_MAX)
            throw StructuralError("partition does not cover player " + std::to_string(p));
}

CoalitionStructure CoalitionStructure::grand_coalition(std::size_t num_players) {
    Coalition all(num_players);
    for (PlayerId p = 0; p < num_players; ++p) all.insert(p);
    return CoalitionStructure(num_players, {all});
}

CoalitionStructure CoalitionStructure::singletons(std::size_t num_players) {
    std::vector<Coalition> blocks;
    blocks.reserve(num_players);
    for (PlayerId p = 0; p < num_players; ++p) blocks.push_back(Coalition::of(num_players, {p}));
    return CoalitionStructure(num_players, std::move(blocks));
}

const Coalition& CoalitionStructure::block_of(PlayerId i) const {
    return blocks_[block_index_of(i)];
}

std::size_t CoalitionStructure::block_index_of(PlayerId i) const {
    if (i >= block_index_.size())
        throw ContractError("player id " + std::to_string(i) + " outside the partition");
    return block_index_[i];
}

GameInstance::GameInstance(FriendshipGraph graph) : graph_(std::move(graph)) {
    const std::size_t n = graph_.num_vertices();
    if (n > kMaxPlayers)
        throw CapacityError("game instances are guarded to " + std::to_string(kMaxPlayers) +
                            " players; got " + std::to_string(n));
    friend_masks_.reserve(n);
    for (PlayerId i = 0; i < n; ++i)
        friend_masks_.push_back(PlayerSet::of(n, graph_.neighbors(i)));
}

const PlayerSet& GameInstance::friends_mask(PlayerId i) const {
    if (i >= friend_masks_.size())
        throw ContractError("player id " + std::to_string(i) + " outside the game");
    return friend_masks_[i];
}

namespace {

void check_membership(const GameInstance& game, PlayerId i, const Coalition& c, const char* op) {
    if (c.universe() != game.num_players())
        throw ContractError(std::string(op) + ": coalition universe does not match the game");
    if (!c.contains(i))
        throw ContractError(std::string(op) + ": player " + std::to_string(i) +
                            " is not a member of the coalition");
}

} // namespace

std::int64_t valuation(const GameInstance& game, PlayerId i, const Coalition& c) {
    check_membership(game, i, c, "valuation");
    const std::int64_t n = static_cast<std::int64_t>(game.num_players());
    const std::int64_t friends =
        static_cast<std::int64_t>(game.friends_mask(i).intersection_count(c.as_set()));
    const std::int64_t enemies = static_cast<std::int64_t>(c.size()) - 1 - friends;
    return n * friends - enemies;
}

Rational friend_aggregate(const GameInstance& game, PlayerId i, const Coalition& c,
                          Aggregate aggregate, bool with_self) {
    check_membership(game, i, c, "friend_aggregate");
    bool any = false;
    BigInt sum = 0;
    std::int64_t minimum = 0;
    std::size_t count = 0;
    auto feed = [&](std::int64_t val) {
        if (!any || val < minimum) minimum = val;
        sum += val;
        ++count;
        any = true;
    };
    for (PlayerId f : game.friends(i))
        if (c.contains(f)) feed(valuation(game, f, c));
    if (with_self) feed(valuation(game, i, c));

    // The aggregate over nobody is 0 by convention (only reachable without
    // self, for a player with no friends in c).
    if (!any) return Rational(0);
    if (aggregate == Aggregate::min) return Rational(minimum);
    return Rational(sum, BigInt(count));
}

UtilityValue utility(const GameInstance& game, PlayerId i, const Coalition& c, UtilityModel model) {
    check_membership(game, i, c, "utility");
    const Aggregate agg = aggregate_of(model);
    switch (degree_of(model)) {
        case AltruismDegree::selfish_first:
            return {Rational(valuation(game, i, c)), friend_aggregate(game, i, c, agg, false)};
        case AltruismDegree::equal_treatment:
            return {friend_aggregate(game, i, c, agg, true), Rational(0)};
        case AltruismDegree::altruistic_treatment:
            return {friend_aggregate(game, i, c, agg, false), Rational(valuation(game, i, c))};
    }
    throw InternalError("unhandled altruism degree");
}

Rational to_numeric(const UtilityValue& u, UtilityModel model, const BigInt& w) {
    if (degree_of(model) == AltruismDegree::equal_treatment) return u.primary;
    return Rational(w) * u.primary + u.secondary;
}

Preference compare(const GameInstance& game, PlayerId i, const Coalition& c, const Coalition& d,
                   UtilityModel model) {
    int cmp = compare_values(utility(game, i, c, model), utility(game, i, d, model));
    if (cmp > 0) return Preference::prefers_c;
    if (cmp < 0) return Preference::prefers_d;
    return Preference::indifferent;
}

CoalitionStructure move_to_empty(const CoalitionStructure& gamma, const Coalition& c) {
    if (c.empty())
        throw ContractError("move_to_empty: the deviating coalition must be nonempty");
    if (c.universe() != gamma.num_players())
        throw ContractError("move_to_empty: coalition universe does not match the partition");

    std::vector<Coalition> blocks;
    blocks.push_back(c);
    for (const Coalition& old : gamma.blocks()) {
        Coalition remnant(old.universe());
        old.as_set().for_each_member([&](PlayerId p) {
            if (!c.contains(p)) remnant.insert(p);
        });
        if (!remnant.empty()) blocks.push_back(remnant);
    }
    // Canonical block order: by smallest member.
    std::sort(blocks.begin(), blocks.end(), [](const Coalition& a, const Coalition& b) {
        return a.members().front() < b.members().front();
    });
    return CoalitionStructure(gamma.num_players(), std::move(blocks));
}

} // namespace ahg
