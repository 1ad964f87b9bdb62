#include "ahg/gadgets.hpp"

#include <algorithm>

namespace ahg {

std::string to_string(GadgetKind kind) {
    switch (kind) {
        case GadgetKind::circulant: return "circulant";
        case GadgetKind::dome: return "dome";
        case GadgetKind::pinched_dome: return "pinched-dome";
    }
    throw InternalError("unhandled gadget kind");
}

GadgetLayout GadgetLayout::offset_by(PlayerId delta) const {
    GadgetLayout out = *this;
    if (out.top) *out.top += delta;
    out.distinguished += delta;
    for (PlayerId& p : out.mids) p += delta;
    for (PlayerId& p : out.fringe) p += delta;
    for (PlayerId& p : out.base) p += delta;
    return out;
}

Gadget make_circulant(std::size_t k, std::size_t k_prime) {
    if (k < 3 || k % 2 == 0)
        throw ParameterError("circulant gadget needs odd k >= 3; got k=" + std::to_string(k));
    if (k_prime <= k)
        throw ParameterError("circulant gadget needs k_prime > k; got k_prime=" +
                             std::to_string(k_prime) + ", k=" + std::to_string(k));

    const std::size_t reach = (k - 1) / 2; // friends per side along the cycle
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(k_prime * reach);
    for (std::size_t i = 0; i < k_prime; ++i)
        for (std::size_t step = 1; step <= reach; ++step)
            edges.emplace_back(static_cast<VertexId>(i),
                               static_cast<VertexId>((i + step) % k_prime));

    Gadget g;
    g.graph = FriendshipGraph::build(k_prime, edges);
    g.layout.kind = GadgetKind::circulant;
    g.layout.degree_param = k;
    g.layout.k_prime = k_prime;
    g.layout.num_players = k_prime;
    g.layout.distinguished = 0;
    g.layout.base.resize(k_prime);
    for (std::size_t i = 0; i < k_prime; ++i) g.layout.base[i] = static_cast<PlayerId>(i);
    return g;
}

namespace {

// Shared body for both dome variants. num_mids is d for the plain dome and
// 1 for the pinched dome; each mid is adjacent to the top, the pinched mid
// to all d fringe players, a plain mid to exactly one.
Gadget build_dome(GadgetKind kind, std::size_t d, std::size_t k_prime) {
    if (d < 1)
        throw ParameterError("dome gadget needs d >= 1");
    if (k_prime <= 2 * d + 1)
        throw ParameterError("dome gadget needs k_prime > 2d+1; got k_prime=" +
                             std::to_string(k_prime) + ", d=" + std::to_string(d));

    const std::size_t base_size = k_prime - d - 1;
    const std::size_t num_mids = kind == GadgetKind::pinched_dome ? 1 : d;
    const std::size_t total = 1 + num_mids + base_size;
    const PlayerId base_start = static_cast<PlayerId>(1 + num_mids);

    std::vector<std::pair<VertexId, VertexId>> edges;
    for (std::size_t m = 0; m < num_mids; ++m)
        edges.emplace_back(0, static_cast<VertexId>(1 + m)); // top - mid
    for (std::size_t i = 0; i < base_size; ++i)
        for (std::size_t j = i + 1; j < base_size; ++j)
            edges.emplace_back(base_start + i, base_start + j); // base clique
    // Fringe: the d lowest-id base members. Mid m watches fringe m; the
    // pinched mid watches all d of them.
    for (std::size_t f = 0; f < d; ++f) {
        VertexId mid = static_cast<VertexId>(kind == GadgetKind::pinched_dome ? 1 : 1 + f);
        edges.emplace_back(mid, base_start + static_cast<VertexId>(f));
    }

    Gadget g;
    g.graph = FriendshipGraph::build(total, edges);
    g.layout.kind = kind;
    g.layout.degree_param = d;
    g.layout.k_prime = k_prime;
    g.layout.num_players = total;
    g.layout.top = 0;
    g.layout.distinguished = 0;
    for (std::size_t m = 0; m < num_mids; ++m)
        g.layout.mids.push_back(static_cast<PlayerId>(1 + m));
    for (std::size_t f = 0; f < d; ++f)
        g.layout.fringe.push_back(base_start + static_cast<PlayerId>(f));
    for (std::size_t i = 0; i < base_size; ++i)
        g.layout.base.push_back(base_start + static_cast<PlayerId>(i));
    return g;
}

} // namespace

Gadget make_dome(std::size_t d, std::size_t k_prime) {
    return build_dome(GadgetKind::dome, d, k_prime);
}

Gadget make_pinched_dome(std::size_t d, std::size_t k_prime) {
    return build_dome(GadgetKind::pinched_dome, d, k_prime);
}

CliqueCheckResult clique_counting_check(const FriendshipGraph& g, const Rational& alpha,
                                        std::size_t k) {
    if (alpha < 1)
        throw ContractError("clique counting check requires alpha >= 1");

    const std::size_t v = g.num_vertices();
    const std::size_t e = g.num_edges();
    if (v == 0)
        // An empty graph satisfies the inequality and the degree bound
        // vacuously, but it is K_k only for k = 0.
        return k == 0 ? CliqueCheckResult::clique_of_size_k : CliqueCheckResult::hypothesis_failed;

    // |V| + alpha*|E| <= k + alpha*C(k,2), exact rational arithmetic.
    Rational lhs = Rational(v) + alpha * Rational(e);
    Rational rhs = Rational(k) + alpha * Rational(BigInt(k) * BigInt(k >= 1 ? k - 1 : 0), 2);
    if (lhs > rhs) return CliqueCheckResult::hypothesis_failed;

    for (VertexId i = 0; i < v; ++i)
        if (g.degree(i) + 1 < k) return CliqueCheckResult::hypothesis_failed;

    // The counting argument now forces g = K_k; verify rather than trust.
    std::vector<VertexId> all(v);
    for (VertexId i = 0; i < v; ++i) all[i] = i;
    if (v != k || !is_clique(g, all))
        throw InternalError("clique counting check: hypothesis held but the graph is not a "
                            "complete graph on k vertices");
    return CliqueCheckResult::clique_of_size_k;
}

} // namespace ahg
