#include "ahg/stability.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <thread>

namespace ahg {

std::string_view to_string(CoreStatus s) {
    switch (s) {
        case CoreStatus::stable: return "stable";
        case CoreStatus::blocked: return "blocked";
        case CoreStatus::stable_up_to_bound: return "stable-up-to-bound";
    }
    throw InternalError("unhandled core status");
}

int exit_code_for(CoreStatus s) {
    switch (s) {
        case CoreStatus::stable: return 0;
        case CoreStatus::blocked: return 10;
        case CoreStatus::stable_up_to_bound: return 20;
    }
    throw InternalError("unhandled core status");
}

bool blocks(const GameInstance& game, const Coalition& c, const CoalitionStructure& gamma,
            UtilityModel model) {
    if (c.empty()) throw ContractError("blocks: the coalition must be nonempty");
    for (PlayerId i : c.members())
        if (compare(game, i, c, gamma.block_of(i), model) != Preference::prefers_c) return false;
    return true;
}

bool weakly_blocks(const GameInstance& game, const Coalition& c, const CoalitionStructure& gamma,
                   UtilityModel model) {
    if (c.empty()) throw ContractError("weakly_blocks: the coalition must be nonempty");
    bool any_strict = false;
    for (PlayerId i : c.members()) {
        switch (compare(game, i, c, gamma.block_of(i), model)) {
            case Preference::prefers_d: return false;
            case Preference::prefers_c: any_strict = true; break;
            case Preference::indifferent: break;
        }
    }
    return any_strict;
}

namespace {

// ---------------------------------------------------------------------------
// Fast evaluation path for the search: utilities as pairs of int64
// fractions, compared by cross-multiplication in 128 bits. Within the
// instance guard (n <= 20000) every numerator fits comfortably:
// |valuation| <= n^2 and aggregate numerators are sums of at most n of
// them, so below 2^63; cross products stay below 2^127.
// ---------------------------------------------------------------------------

struct Frac {
    std::int64_t num = 0;
    std::int64_t den = 1; // always >= 1; never reduced (cheap comparisons)
};

int frac_cmp(const Frac& a, const Frac& b) {
    const __int128 lhs = static_cast<__int128>(a.num) * b.den;
    const __int128 rhs = static_cast<__int128>(b.num) * a.den;
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

struct UtilPair {
    Frac primary;
    Frac secondary;
};

int pair_cmp(const UtilPair& a, const UtilPair& b) {
    int c = frac_cmp(a.primary, b.primary);
    return c != 0 ? c : frac_cmp(a.secondary, b.secondary);
}

class FastEvaluator {
public:
    FastEvaluator(const GameInstance& game, UtilityModel model)
        : game_(game),
          model_(model),
          n_(static_cast<std::int64_t>(game.num_players())),
          vals_(game.num_players(), 0) {}

    // Populate the valuation scratch for each member of the coalition.
    // Only member entries are written; member_pair only reads friends that
    // are members, so no stale entry is ever consulted.
    void fill_vals(const std::vector<PlayerId>& members, const PlayerSet& mask) {
        const std::int64_t size = static_cast<std::int64_t>(members.size());
        for (PlayerId j : members) {
            const std::int64_t friends =
                static_cast<std::int64_t>(game_.friends_mask(j).intersection_count(mask));
            vals_[j] = n_ * friends - (size - 1 - friends);
        }
    }

    UtilPair member_pair(PlayerId i, const PlayerSet& mask) const {
        const std::int64_t own = vals_[i];
        std::int64_t sum = 0;
        std::int64_t minimum = std::numeric_limits<std::int64_t>::max();
        std::int64_t count = 0;
        for (PlayerId f : game_.friends(i)) {
            if (!mask.contains(f)) continue;
            const std::int64_t v = vals_[f];
            sum += v;
            minimum = std::min(minimum, v);
            ++count;
        }
        const bool avg = aggregate_of(model_) == Aggregate::avg;
        switch (degree_of(model_)) {
            case AltruismDegree::selfish_first: {
                Frac agg = count == 0 ? Frac{0, 1} : (avg ? Frac{sum, count} : Frac{minimum, 1});
                return {Frac{own, 1}, agg};
            }
            case AltruismDegree::equal_treatment: {
                Frac agg = avg ? Frac{sum + own, count + 1}
                               : Frac{count == 0 ? own : std::min(minimum, own), 1};
                return {agg, Frac{0, 1}};
            }
            case AltruismDegree::altruistic_treatment: {
                Frac agg = count == 0 ? Frac{0, 1} : (avg ? Frac{sum, count} : Frac{minimum, 1});
                return {agg, Frac{own, 1}};
            }
        }
        throw InternalError("unhandled altruism degree");
    }

private:
    const GameInstance& game_;
    UtilityModel model_;
    std::int64_t n_;
    std::vector<std::int64_t> vals_;
};

struct SearchInputs {
    const GameInstance& game;
    UtilityModel model;
    std::vector<UtilPair> baseline; // per-player utility pair under gamma
    bool weak = false;              // strict blocking vs weak blocking
};

// Per-player utility pairs under the current partition, via the same fast
// path the search uses (certificates are re-validated on the exact path).
std::vector<UtilPair> gamma_pairs(const GameInstance& game, const CoalitionStructure& gamma,
                                  UtilityModel model) {
    std::vector<UtilPair> pairs(game.num_players());
    FastEvaluator eval(game, model);
    for (const Coalition& block : gamma.blocks()) {
        const std::vector<PlayerId> members = block.members();
        eval.fill_vals(members, block.as_set());
        for (PlayerId i : members) pairs[i] = eval.member_pair(i, block.as_set());
    }
    return pairs;
}

// weak = false: every member strictly better than under gamma.
// weak = true: every member at least as well off, at least one strictly.
bool improves_on_gamma(const SearchInputs& in, FastEvaluator& eval,
                       const std::vector<PlayerId>& members, const PlayerSet& mask) {
    eval.fill_vals(members, mask);
    bool any_strict = false;
    for (PlayerId i : members) {
        const int cmp = pair_cmp(eval.member_pair(i, mask), in.baseline[i]);
        if (in.weak) {
            if (cmp < 0) return false;
            any_strict = any_strict || cmp > 0;
        } else {
            if (cmp <= 0) return false;
        }
    }
    return in.weak ? any_strict : true;
}

// Depth-first enumeration of size-`want` subsets of candidates[from..] in
// lexicographic order, on top of the members/mask already chosen. Invokes
// test on each complete coalition; returns true (leaving members/mask
// populated with the hit) as soon as test does.
template <typename Test>
bool for_each_combination(const std::vector<PlayerId>& candidates, std::size_t from,
                          std::size_t want, std::vector<PlayerId>& members, PlayerSet& mask,
                          const Test& test) {
    if (want == 0) return test(members, mask);
    for (std::size_t i = from; i + want <= candidates.size(); ++i) {
        members.push_back(candidates[i]);
        mask.insert(candidates[i]);
        if (for_each_combination(candidates, i + 1, want - 1, members, mask, test)) return true;
        mask.erase(candidates[i]);
        members.pop_back();
    }
    return false;
}

// Coalitions drawn from `candidates`, sizes 1..max_size, ascending size
// then lexicographic; first blocking coalition wins.
std::optional<Coalition> sequential_search(const SearchInputs& in,
                                           const std::vector<PlayerId>& candidates,
                                           std::size_t max_size, std::uint64_t& explored) {
    FastEvaluator eval(in.game, in.model);
    const std::size_t n = in.game.num_players();
    std::vector<PlayerId> members;
    PlayerSet mask(n);
    auto test = [&](const std::vector<PlayerId>& m, const PlayerSet& msk) {
        ++explored;
        return improves_on_gamma(in, eval, m, msk);
    };
    for (std::size_t size = 1; size <= std::min(max_size, candidates.size()); ++size)
        if (for_each_combination(candidates, 0, size, members, mask, test))
            return Coalition::from_members(n, members);
    return std::nullopt;
}

// One unit of parallel work: all coalitions whose intersection with the
// high-id candidate tail equals a fixed pattern.
struct ChunkHit {
    std::size_t size = 0;
    std::vector<PlayerId> members;
};

// The parallel exhaustive search partitions the subset space by the
// membership pattern of the last `p` candidates (the highest ids, so every
// fixed member sorts after every free one). Within a chunk, coalitions are
// enumerated in (size, lex) order, which is the restriction of the global
// order to the chunk; the final merge across chunk minima therefore
// reproduces the sequential certificate in deterministic mode.
std::optional<Coalition> parallel_search(const SearchInputs& in,
                                         const std::vector<PlayerId>& candidates, unsigned threads,
                                         bool deterministic, std::uint64_t& explored) {
    const std::size_t n = in.game.num_players();

    // Enough patterns to keep every thread busy, capped to keep per-chunk
    // state small.
    std::size_t p = 0;
    while ((std::size_t{1} << p) < 4u * threads && p < candidates.size() && p < 12) ++p;
    const std::size_t num_patterns = std::size_t{1} << p;
    const std::size_t low_count = candidates.size() - p;
    const std::vector<PlayerId> low(candidates.begin(), candidates.begin() + low_count);

    std::atomic<std::size_t> next_pattern{0};
    std::atomic<std::uint64_t> total_explored{0};
    std::atomic<std::size_t> best_size{std::numeric_limits<std::size_t>::max()};
    std::atomic<bool> found{false};
    std::mutex hits_mutex;
    std::vector<ChunkHit> hits;

    auto worker = [&]() {
        FastEvaluator eval(in.game, in.model);
        std::uint64_t local_explored = 0;
        std::vector<PlayerId> members;
        PlayerSet mask(n);

        for (;;) {
            const std::size_t pattern = next_pattern.fetch_add(1);
            if (pattern >= num_patterns) break;
            if (!deterministic && found.load(std::memory_order_relaxed)) break;

            // Fixed high-id part of this chunk, ascending.
            std::vector<PlayerId> fixed;
            for (std::size_t b = 0; b < p; ++b)
                if ((pattern >> b) & 1) fixed.push_back(candidates[low_count + b]);

            bool chunk_done = false;
            for (std::size_t size = std::max<std::size_t>(1, fixed.size());
                 size <= fixed.size() + low.size() && !chunk_done; ++size) {
                if (deterministic && size > best_size.load(std::memory_order_relaxed)) break;
                if (!deterministic && found.load(std::memory_order_relaxed)) break;

                members.clear();
                mask = PlayerSet(n);
                for (PlayerId f : fixed) mask.insert(f);

                bool cancelled = false;
                auto test = [&](const std::vector<PlayerId>& low_part, const PlayerSet& msk) {
                    if (!deterministic && found.load(std::memory_order_relaxed)) {
                        cancelled = true;
                        return true; // unwind the enumeration, not a hit
                    }
                    ++local_explored;
                    // Sorted member list: free low ids then fixed high ids.
                    std::vector<PlayerId> full = low_part;
                    full.insert(full.end(), fixed.begin(), fixed.end());
                    return improves_on_gamma(in, eval, full, msk);
                };
                if (for_each_combination(low, 0, size - fixed.size(), members, mask, test)) {
                    if (cancelled) break;
                    std::vector<PlayerId> full = members;
                    full.insert(full.end(), fixed.begin(), fixed.end());
                    std::size_t observed = best_size.load(std::memory_order_relaxed);
                    while (observed > full.size() &&
                           !best_size.compare_exchange_weak(observed, full.size())) {
                    }
                    {
                        std::lock_guard<std::mutex> lock(hits_mutex);
                        hits.push_back(ChunkHit{full.size(), std::move(full)});
                    }
                    found.store(true, std::memory_order_relaxed);
                    chunk_done = true; // later hits in this chunk are larger in the order
                }
            }
        }
        total_explored.fetch_add(local_explored);
    };

    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();

    explored += total_explored.load();
    if (hits.empty()) return std::nullopt;
    const ChunkHit* best = &hits.front();
    for (const ChunkHit& h : hits)
        if (h.size < best->size || (h.size == best->size && h.members < best->members)) best = &h;
    return Coalition::from_members(n, best->members);
}

CoreVerdict run_verification(const GameInstance& game, const CoalitionStructure& gamma,
                             UtilityModel model, const SearchStrategy& strategy, bool weak) {
    if (gamma.num_players() != game.num_players())
        throw ContractError("verification: partition and game have different player counts");

    SearchInputs in{game, model, gamma_pairs(game, gamma, model), weak};
    CoreVerdict verdict;
    std::optional<Coalition> hit;

    if (const auto* ex = std::get_if<ExhaustiveStrategy>(&strategy)) {
        const std::size_t n = game.num_players();
        if (n > ex->max_players)
            throw CapacityError(
                "exhaustive verification is guarded to " + std::to_string(ex->max_players) +
                " players (got " + std::to_string(n) +
                "); use the restricted strategy for larger instances");
        std::vector<PlayerId> all(n);
        for (PlayerId i = 0; i < n; ++i) all[i] = i;

        unsigned threads = ex->threads;
        if (ex->parallel && threads == 0) {
            if (const char* env = std::getenv("AHG_THREADS"))
                threads = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
            if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
        }
        if (ex->parallel && threads > 1)
            hit = parallel_search(in, all, threads, ex->deterministic, verdict.explored);
        else
            hit = sequential_search(in, all, n, verdict.explored);
    } else {
        const auto& re = std::get<RestrictedStrategy>(strategy);
        std::vector<PlayerId> candidates = re.candidates;
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (PlayerId c : candidates)
            if (c >= game.num_players())
                throw ContractError("restricted search: candidate player " + std::to_string(c) +
                                    " is not in the game");
        hit = sequential_search(in, candidates, re.max_size, verdict.explored);
        verdict.bound = SearchBound{re.max_size, candidates.size()};
    }

    if (hit) {
        // Fail-stop certificate audit on the exact arithmetic path.
        const bool valid = weak ? weakly_blocks(game, *hit, gamma, model)
                                : blocks(game, *hit, gamma, model);
        if (!valid)
            throw InternalError("search produced a certificate that fails re-validation; "
                                "this is a bug in the fast evaluation path");
        verdict.status = CoreStatus::blocked;
        verdict.certificate = std::move(hit);
    } else {
        verdict.status = std::holds_alternative<RestrictedStrategy>(strategy)
                             ? CoreStatus::stable_up_to_bound
                             : CoreStatus::stable;
    }
    return verdict;
}

} // namespace

CoreVerdict verify_core(const GameInstance& game, const CoalitionStructure& gamma,
                        UtilityModel model, const SearchStrategy& strategy) {
    return run_verification(game, gamma, model, strategy, /*weak=*/false);
}

CoreVerdict verify_strict_core(const GameInstance& game, const CoalitionStructure& gamma,
                               UtilityModel model, const SearchStrategy& strategy) {
    return run_verification(game, gamma, model, strategy, /*weak=*/true);
}

// ---------------------------------------------------------------------------
// Independent oracle. Everything below is deliberately self-contained:
// plain mask loop over coalitions, membership via sorted vectors, and
// utilities computed with big rationals straight from the definitions.
// ---------------------------------------------------------------------------

namespace {

std::int64_t naive_valuation(const FriendshipGraph& g, PlayerId i,
                             const std::vector<PlayerId>& coalition) {
    std::int64_t friends = 0;
    for (PlayerId f : g.neighbors(i))
        if (std::binary_search(coalition.begin(), coalition.end(), f)) ++friends;
    const std::int64_t enemies = static_cast<std::int64_t>(coalition.size()) - 1 - friends;
    return static_cast<std::int64_t>(g.num_vertices()) * friends - enemies;
}

// Utility pair per the lexicographic encoding, from first principles.
std::pair<Rational, Rational> naive_utility(const FriendshipGraph& g, PlayerId i,
                                            const std::vector<PlayerId>& coalition,
                                            UtilityModel model) {
    const Rational own(naive_valuation(g, i, coalition));
    std::vector<std::int64_t> friend_vals;
    for (PlayerId f : g.neighbors(i))
        if (std::binary_search(coalition.begin(), coalition.end(), f))
            friend_vals.push_back(naive_valuation(g, f, coalition));

    const bool avg = aggregate_of(model) == Aggregate::avg;
    auto aggregate = [&](bool with_self) -> Rational {
        std::vector<std::int64_t> pool = friend_vals;
        if (with_self) pool.push_back(naive_valuation(g, i, coalition));
        if (pool.empty()) return Rational(0);
        if (!avg) return Rational(*std::min_element(pool.begin(), pool.end()));
        BigInt sum = 0;
        for (std::int64_t v : pool) sum += v;
        return Rational(sum, BigInt(pool.size()));
    };

    switch (degree_of(model)) {
        case AltruismDegree::selfish_first: return {own, aggregate(false)};
        case AltruismDegree::equal_treatment: return {aggregate(true), Rational(0)};
        case AltruismDegree::altruistic_treatment: return {aggregate(false), own};
    }
    throw InternalError("unhandled altruism degree");
}

} // namespace

CoreVerdict brute_force_core(const GameInstance& game, const CoalitionStructure& gamma,
                             UtilityModel model) {
    const std::size_t n = game.num_players();
    if (n > 16)
        throw CapacityError("brute_force_core is guarded to 16 players; got " + std::to_string(n));
    if (gamma.num_players() != n)
        throw ContractError("brute_force_core: partition and game have different player counts");

    const FriendshipGraph& g = game.graph();

    // Baseline utilities straight from the partition blocks.
    std::vector<std::pair<Rational, Rational>> baseline(n);
    for (PlayerId i = 0; i < n; ++i) {
        std::vector<PlayerId> block = gamma.block_of(i).members();
        baseline[i] = naive_utility(g, i, block, model);
    }

    CoreVerdict verdict;
    for (std::uint32_t bits = 1; bits < (std::uint32_t{1} << n); ++bits) {
        std::vector<PlayerId> coalition;
        for (PlayerId i = 0; i < n; ++i)
            if ((bits >> i) & 1) coalition.push_back(i);

        ++verdict.explored;
        bool all_strict = true;
        for (PlayerId i : coalition) {
            const auto u = naive_utility(g, i, coalition, model);
            const auto& base = baseline[i];
            const bool strictly_better =
                u.first > base.first || (u.first == base.first && u.second > base.second);
            if (!strictly_better) {
                all_strict = false;
                break;
            }
        }
        if (all_strict) {
            verdict.status = CoreStatus::blocked;
            verdict.certificate = Coalition::from_members(n, coalition);
            return verdict;
        }
    }
    verdict.status = CoreStatus::stable;
    return verdict;
}

} // namespace ahg
