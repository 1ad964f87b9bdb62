#include "ahg/reductions.hpp"

#include <algorithm>
#include <utility>

namespace ahg {

std::string_view target_tag(ReductionTarget t) {
    switch (t) {
    case ReductionTarget::min_eq_al: return "thm1";
    case ReductionTarget::avg_eq: return "thm2";
    case ReductionTarget::avg_al: return "thm3";
    }
    throw InternalError("target_tag: unknown reduction target");
}

std::optional<ReductionTarget> target_from_tag(std::string_view tag) {
    if (tag == "thm1") return ReductionTarget::min_eq_al;
    if (tag == "thm2") return ReductionTarget::avg_eq;
    if (tag == "thm3") return ReductionTarget::avg_al;
    return std::nullopt;
}

std::vector<UtilityModel> target_models(ReductionTarget t) {
    switch (t) {
    case ReductionTarget::min_eq_al: return {UtilityModel::min_eq, UtilityModel::min_al};
    case ReductionTarget::avg_eq: return {UtilityModel::avg_eq};
    case ReductionTarget::avg_al: return {UtilityModel::avg_al};
    }
    throw InternalError("target_models: unknown reduction target");
}

std::string_view to_string(PreprocessStep::Action a) {
    switch (a) {
    case PreprocessStep::Action::add_universal_vertex: return "add-universal-vertex";
    case PreprocessStep::Action::add_isolated_vertex: return "add-isolated-vertex";
    }
    throw InternalError("to_string: unknown preprocessing action");
}

PreprocessResult preprocess_clique_instance(const FriendshipGraph& h, std::size_t k,
                                            ReductionTarget target) {
    if (k < 1)
        throw ContractError("preprocess_clique_instance: k must be at least 1");
    PreprocessResult r{h, k, {}};
    // A universal vertex joins every clique, so (G, k) and (G + universal,
    // k + 1) are equivalent; an isolated vertex joins none, so it pads
    // |V| + |E| without changing clique content (k stays >= 3 throughout).
    auto add_universal = [&r](const char* reason) {
        r.graph = add_universal_vertex(r.graph);
        ++r.k_effective;
        r.log.push_back({PreprocessStep::Action::add_universal_vertex, r.k_effective, reason});
    };
    auto add_isolated = [&r](const char* reason) {
        r.graph = add_isolated_vertex(r.graph);
        r.log.push_back({PreprocessStep::Action::add_isolated_vertex, r.k_effective, reason});
    };
    auto mass = [&r] { return r.graph.num_vertices() + r.graph.num_edges(); };
    switch (target) {
    case ReductionTarget::min_eq_al:
        while (r.k_effective < 3 || r.k_effective % 2 == 0)
            add_universal("clique size must be odd and at least 3");
        break;
    case ReductionTarget::avg_eq:
        while (r.k_effective < 4)
            add_universal("clique size must be at least 4");
        while (mass() < r.k_effective * r.k_effective)
            add_isolated("|V| + |E| must be at least k^2");
        break;
    case ReductionTarget::avg_al:
        while (r.k_effective < 3 || (r.k_effective + 1) % 3 != 0)
            add_universal("clique size must be at least 3 with (k+1)/3 integral");
        while (mass() <= r.k_effective)
            add_isolated("|V| + |E| must exceed k");
        break;
    }
    return r;
}

namespace {

// Accumulates gadgets and cross-friendships into one player universe.
// Gadget players are laid out contiguously in insertion order; every
// gadget (and every extra reserved block) becomes one partition block.
struct Assembly {
    std::size_t total = 0;
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<GadgetLayout> layouts;
    std::vector<std::pair<PlayerId, std::size_t>> block_ranges;

    PlayerId add_gadget(const Gadget& g) {
        const auto base = static_cast<PlayerId>(total);
        for (const Edge& e : g.graph.edges())
            edges.emplace_back(base + e.u, base + e.v);
        layouts.push_back(g.layout.offset_by(base));
        block_ranges.emplace_back(base, g.layout.num_players);
        total += g.layout.num_players;
        return base;
    }

    PlayerId reserve_block(std::size_t count) {
        const auto base = static_cast<PlayerId>(total);
        block_ranges.emplace_back(base, count);
        total += count;
        return base;
    }

    void link(PlayerId a, PlayerId b) { edges.emplace_back(a, b); }
};

struct Pieces {
    GameInstance game;
    CoalitionStructure gamma;
};

Pieces finalize(const Assembly& a) {
    FriendshipGraph g = FriendshipGraph::build(a.total, a.edges);
    std::vector<Coalition> blocks;
    blocks.reserve(a.block_ranges.size());
    for (const auto& [base, count] : a.block_ranges) {
        Coalition c(a.total);
        for (std::size_t j = 0; j < count; ++j)
            c.insert(base + static_cast<PlayerId>(j));
        blocks.push_back(std::move(c));
    }
    return {GameInstance(std::move(g)), CoalitionStructure(a.total, std::move(blocks))};
}

// inc[v] lists the edges at v in global edge order.
std::vector<std::vector<Edge>> incidence_lists(const FriendshipGraph& h) {
    std::vector<std::vector<Edge>> inc(h.num_vertices());
    for (const Edge& e : h.edges()) {
        inc[e.u].push_back(e);
        inc[e.v].push_back(e);
    }
    return inc;
}

struct ProvenanceMaps {
    std::map<VertexId, PlayerId> vertex_players;
    std::map<Edge, PlayerId> edge_players;
    std::map<std::pair<VertexId, Edge>, PlayerId> incidence_players;
};

// Lays out one gadget per vertex, per edge, and per (vertex, edge)
// incidence — in that order — and records the distinguished players.
ProvenanceMaps add_standard_gadgets(Assembly& a, const FriendshipGraph& h,
                                    const Gadget& vertex_gadget, const Gadget& edge_gadget,
                                    const Gadget& incidence_gadget) {
    ProvenanceMaps maps;
    for (std::size_t v = 0; v < h.num_vertices(); ++v) {
        const PlayerId base = a.add_gadget(vertex_gadget);
        maps.vertex_players[static_cast<VertexId>(v)] = base + vertex_gadget.layout.distinguished;
    }
    for (const Edge& e : h.edges()) {
        const PlayerId base = a.add_gadget(edge_gadget);
        maps.edge_players[e] = base + edge_gadget.layout.distinguished;
    }
    const auto inc = incidence_lists(h);
    for (std::size_t v = 0; v < h.num_vertices(); ++v)
        for (const Edge& e : inc[v]) {
            const PlayerId base = a.add_gadget(incidence_gadget);
            maps.incidence_players[{static_cast<VertexId>(v), e}] =
                base + incidence_gadget.layout.distinguished;
        }
    return maps;
}

ReductionArtifact make_artifact(Assembly&& a, ProvenanceMaps&& maps,
                                std::map<Edge, std::vector<PlayerId>>&& dummy_players,
                                const FriendshipGraph& h, ReductionTarget target, std::size_t k,
                                std::size_t k_prime) {
    Pieces p = finalize(a);
    return ReductionArtifact{std::move(p.game),
                             std::move(p.gamma),
                             target,
                             k,
                             k_prime,
                             h,
                             std::move(maps.vertex_players),
                             std::move(maps.edge_players),
                             std::move(maps.incidence_players),
                             std::move(dummy_players),
                             std::move(a.layouts),
                             {}};
}

} // namespace

ReductionArtifact reduce_min_eq_al(const FriendshipGraph& h, std::size_t k) {
    if (k < 3 || k % 2 == 0)
        throw ContractError("reduce_min_eq_al: k must be odd and at least 3 "
                            "(run preprocess_clique_instance first)");
    const std::size_t k_prime = k * (k * (k - 1) / 2) + k + 1;
    const Gadget gadget = make_circulant(k, k_prime);

    Assembly a;
    ProvenanceMaps maps = add_standard_gadgets(a, h, gadget, gadget, gadget);

    // Companion players: a (k-3)-clique per edge, each of its members also
    // befriending the edge player and both of the edge's incidence players.
    std::map<Edge, std::vector<PlayerId>> dummy_players;
    if (k > 3)
        for (const Edge& e : h.edges()) {
            const PlayerId base = a.reserve_block(k - 3);
            std::vector<PlayerId>& ids = dummy_players[e];
            for (std::size_t j = 0; j + 3 < k; ++j)
                ids.push_back(base + static_cast<PlayerId>(j));
        }

    for (const auto& [key, b] : maps.incidence_players) {
        a.link(maps.vertex_players.at(key.first), b);
        a.link(maps.edge_players.at(key.second), b);
    }
    for (const auto& [e, ids] : dummy_players) {
        const PlayerId ep = maps.edge_players.at(e);
        const PlayerId bx = maps.incidence_players.at({e.u, e});
        const PlayerId by = maps.incidence_players.at({e.v, e});
        for (std::size_t i = 0; i < ids.size(); ++i) {
            a.link(ids[i], ep);
            a.link(ids[i], bx);
            a.link(ids[i], by);
            for (std::size_t j = i + 1; j < ids.size(); ++j)
                a.link(ids[i], ids[j]);
        }
    }

    const std::size_t expected =
        (h.num_vertices() + 3 * h.num_edges()) * k_prime + h.num_edges() * (k - 3);
    if (a.total != expected)
        throw InternalError("reduce_min_eq_al: player count mismatch");
    return make_artifact(std::move(a), std::move(maps), std::move(dummy_players), h,
                         ReductionTarget::min_eq_al, k, k_prime);
}

ReductionArtifact reduce_avg_eq(const FriendshipGraph& h, std::size_t k) {
    if (k < 4)
        throw ContractError("reduce_avg_eq: k must be at least 4 "
                            "(run preprocess_clique_instance first)");
    if (h.num_vertices() + h.num_edges() < k * k)
        throw ContractError("reduce_avg_eq: |V| + |E| must be at least k^2 "
                            "(run preprocess_clique_instance first)");
    const std::size_t k_prime = k + 3 * (k * (k - 1) / 2) + 1;
    const Gadget vertex_gadget = make_dome(k - 1, k_prime);
    const Gadget small_gadget = make_dome(2, k_prime);

    Assembly a;
    ProvenanceMaps maps = add_standard_gadgets(a, h, vertex_gadget, small_gadget, small_gadget);
    for (const auto& [key, b] : maps.incidence_players) {
        a.link(maps.vertex_players.at(key.first), b);
        a.link(maps.edge_players.at(key.second), b);
    }

    if (a.total != (h.num_vertices() + 3 * h.num_edges()) * k_prime)
        throw InternalError("reduce_avg_eq: player count mismatch");
    return make_artifact(std::move(a), std::move(maps), {}, h, ReductionTarget::avg_eq, k,
                         k_prime);
}

ReductionArtifact reduce_avg_al(const FriendshipGraph& h, std::size_t k) {
    if (k < 3 || (k + 1) % 3 != 0)
        throw ContractError("reduce_avg_al: k must be at least 3 with (k+1)/3 integral "
                            "(run preprocess_clique_instance first)");
    if (h.num_vertices() + h.num_edges() <= k)
        throw ContractError("reduce_avg_al: |V| + |E| must exceed k "
                            "(run preprocess_clique_instance first)");
    const std::size_t k_prime = k + 3 * (k * (k - 1) / 2) + 1;
    const std::size_t d_inc = (k + 1) / 3;
    // Every gadget here must have exactly k_prime players. A pinched dome
    // built from size parameter s has s - d + 1 players, so pass
    // s = k_prime + d - 1; this also makes the base clique k_prime - 2
    // strong, the mid degree d + 1, and the top degree 1.
    const Gadget small_gadget = make_pinched_dome(2, k_prime + 1);
    const Gadget incidence_gadget = make_pinched_dome(d_inc, k_prime + d_inc - 1);

    Assembly a;
    ProvenanceMaps maps = add_standard_gadgets(a, h, small_gadget, small_gadget, incidence_gadget);
    for (const auto& [key, b] : maps.incidence_players) {
        a.link(maps.vertex_players.at(key.first), b);
        a.link(maps.edge_players.at(key.second), b);
    }
    // The two incidence players of each edge befriend each other.
    for (const Edge& e : h.edges())
        a.link(maps.incidence_players.at({e.u, e}), maps.incidence_players.at({e.v, e}));

    if (a.total != (h.num_vertices() + 3 * h.num_edges()) * k_prime)
        throw InternalError("reduce_avg_al: player count mismatch");
    return make_artifact(std::move(a), std::move(maps), {}, h, ReductionTarget::avg_al, k,
                         k_prime);
}

ReductionArtifact run_reduction(const FriendshipGraph& h, std::size_t k, ReductionTarget target) {
    PreprocessResult pre = preprocess_clique_instance(h, k, target);
    ReductionArtifact r = [&] {
        switch (target) {
        case ReductionTarget::min_eq_al: return reduce_min_eq_al(pre.graph, pre.k_effective);
        case ReductionTarget::avg_eq: return reduce_avg_eq(pre.graph, pre.k_effective);
        case ReductionTarget::avg_al: return reduce_avg_al(pre.graph, pre.k_effective);
        }
        throw InternalError("run_reduction: unknown reduction target");
    }();
    r.preprocessing_log = std::move(pre.log);
    return r;
}

Coalition witness_from_clique(const ReductionArtifact& r, std::span<const VertexId> clique) {
    if (clique.size() != r.k_effective)
        throw ContractError("witness_from_clique: expected exactly k vertices");
    std::vector<VertexId> sorted(clique.begin(), clique.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ContractError("witness_from_clique: duplicate vertices");
    if (!is_clique(r.source, sorted))
        throw ContractError("witness_from_clique: vertices do not form a clique in the source");

    Coalition c(r.game.num_players());
    for (VertexId v : sorted)
        c.insert(r.vertex_players.at(v));
    for (std::size_t i = 0; i < sorted.size(); ++i)
        for (std::size_t j = i + 1; j < sorted.size(); ++j) {
            const Edge e{sorted[i], sorted[j]};
            c.insert(r.edge_players.at(e));
            c.insert(r.incidence_players.at({e.u, e}));
            c.insert(r.incidence_players.at({e.v, e}));
            if (auto it = r.dummy_players.find(e); it != r.dummy_players.end())
                for (PlayerId p : it->second)
                    c.insert(p);
        }

    const std::size_t pairs = r.k_effective * (r.k_effective - 1) / 2;
    const std::size_t expected_size = r.target == ReductionTarget::min_eq_al
                                          ? r.k_effective + r.k_effective * pairs
                                          : r.k_effective + 3 * pairs;
    if (c.size() != expected_size)
        throw InternalError("witness_from_clique: coalition size mismatch");
    for (UtilityModel m : target_models(r.target))
        if (!blocks(r.game, c, r.gamma, m))
            throw InternalError("witness_from_clique: coalition fails to block");
    return c;
}

CandidateSubgraph extract_candidate_subgraph(const ReductionArtifact& r, const Coalition& c) {
    if (c.universe() != r.game.num_players())
        throw ContractError("extract_candidate_subgraph: coalition universe mismatch");
    CandidateSubgraph out;
    for (const auto& [v, p] : r.vertex_players)
        if (c.contains(p))
            out.vertices.push_back(v);
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (const auto& [e, p] : r.edge_players)
        if (c.contains(p)) {
            out.edges.push_back(e);
            pairs.emplace_back(e.u, e.v);
        }
    out.graph = FriendshipGraph::build(r.source.num_vertices(), pairs);
    out.well_formed = true;
    for (const Edge& e : out.edges)
        if (!std::binary_search(out.vertices.begin(), out.vertices.end(), e.u) ||
            !std::binary_search(out.vertices.begin(), out.vertices.end(), e.v))
            out.well_formed = false;
    return out;
}

std::map<PlayerId, ExpectedValues> expected_gamma_values(const ReductionArtifact& r) {
    std::map<PlayerId, ExpectedValues> out;
    const auto n = static_cast<std::int64_t>(r.game.num_players());
    const auto k = static_cast<std::int64_t>(r.k_effective);
    const auto kp = static_cast<std::int64_t>(r.k_prime);
    const std::size_t num_v = r.num_source_vertices();
    const std::size_t num_e = r.num_source_edges();
    if (r.gadget_layouts.size() != num_v + 3 * num_e)
        throw InternalError("expected_gamma_values: gadget count mismatch");

    switch (r.target) {
    case ReductionTarget::min_eq_al: {
        // Both target models: utility equals the player's own valuation;
        // two classes (gadget players vs companion players).
        std::vector<char> is_dummy(r.game.num_players(), 0);
        for (const auto& [e, ids] : r.dummy_players)
            for (PlayerId p : ids)
                is_dummy[p] = 1;
        for (std::int64_t i = 0; i < n; ++i) {
            const std::int64_t val =
                is_dummy[static_cast<std::size_t>(i)] ? (k - 4) * n : (k - 1) * n - (kp - k);
            ExpectedValues ev;
            ev.valuation = val;
            ev.utilities.push_back({UtilityModel::min_eq, {Rational(val), Rational(0)}});
            ev.utilities.push_back({UtilityModel::min_al, {Rational(val), Rational(val)}});
            out[static_cast<PlayerId>(i)] = std::move(ev);
        }
        break;
    }
    case ReductionTarget::avg_eq: {
        const Rational top_v_util =
            Rational((3 * k - 3) * n - (k * kp - 4 * k + 3), k);     // vertex players
        const Rational small_util = Rational(2 * n - (kp - 3));      // edge/incidence players
        const Rational mid_util = Rational((kp + 1) * n - (2 * kp - 4), 3); // any mid
        for (std::size_t idx = 0; idx < r.gadget_layouts.size(); ++idx) {
            const GadgetLayout& l = r.gadget_layouts[idx];
            const bool vertex_gadget = idx < num_v;
            {
                ExpectedValues ev;
                ev.valuation = vertex_gadget ? (k - 1) * n - (kp - k) : 2 * n - (kp - 3);
                ev.utilities.push_back(
                    {UtilityModel::avg_eq,
                     {vertex_gadget ? top_v_util : small_util, Rational(0)}});
                out[l.distinguished] = std::move(ev);
            }
            for (PlayerId m : l.mids) {
                ExpectedValues ev;
                ev.valuation = 2 * n - (kp - 3);
                ev.utilities.push_back({UtilityModel::avg_eq, {mid_util, Rational(0)}});
                out[m] = std::move(ev);
            }
            for (PlayerId f : l.fringe) {
                ExpectedValues ev;
                ev.valuation = vertex_gadget ? (kp - k) * n - (k - 1) : (kp - 3) * n - 2;
                out[f] = std::move(ev);
            }
        }
        break;
    }
    case ReductionTarget::avg_al: {
        const Rational top_ve_primary = Rational(3 * n - (kp - 4));
        const Rational top_b_primary = Rational((k + 4) * n - (3 * kp - k - 7), 3);
        const Rational mid_bound = Rational((2 * kp - 3) * n - kp, 3);
        for (std::size_t idx = 0; idx < r.gadget_layouts.size(); ++idx) {
            const GadgetLayout& l = r.gadget_layouts[idx];
            const bool incidence_gadget = idx >= num_v + num_e;
            {
                ExpectedValues ev;
                ev.utility_primaries.push_back(
                    {UtilityModel::avg_al, incidence_gadget ? top_b_primary : top_ve_primary});
                out[l.distinguished] = std::move(ev);
            }
            for (PlayerId m : l.mids) {
                ExpectedValues ev;
                ev.primary_lower_bounds.push_back({UtilityModel::avg_al, mid_bound});
                out[m] = std::move(ev);
            }
        }
        break;
    }
    }
    return out;
}

std::vector<PlayerId> restricted_search_candidates(const ReductionArtifact& r) {
    std::vector<PlayerId> out;
    for (const GadgetLayout& l : r.gadget_layouts) {
        out.push_back(l.distinguished);
        out.insert(out.end(), l.mids.begin(), l.mids.end());
    }
    for (const auto& [e, ids] : r.dummy_players)
        out.insert(out.end(), ids.begin(), ids.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace ahg
