#pragma once

#include "ahg/types.hpp"

#include <bit>
#include <cstddef>
#include <vector>

namespace ahg {

// Fixed-universe bitset over player ids 0..universe-1. The universe is part
// of the value: sets over different universes never compare equal and must
// not be combined.
class PlayerSet {
public:
    PlayerSet() = default;

    explicit PlayerSet(std::size_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    template <typename Range>
    static PlayerSet of(std::size_t universe, const Range& members) {
        PlayerSet s(universe);
        for (PlayerId p : members) s.insert(p);
        return s;
    }

    std::size_t universe() const { return universe_; }

    bool contains(PlayerId p) const {
        return p < universe_ && (words_[p >> 6] >> (p & 63)) & 1u;
    }

    void insert(PlayerId p) {
        check_range(p);
        std::uint64_t& w = words_[p >> 6];
        std::uint64_t bit = std::uint64_t{1} << (p & 63);
        size_ += !(w & bit);
        w |= bit;
    }

    void erase(PlayerId p) {
        check_range(p);
        std::uint64_t& w = words_[p >> 6];
        std::uint64_t bit = std::uint64_t{1} << (p & 63);
        size_ -= (w & bit) ? 1 : 0;
        w &= ~bit;
    }

    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    std::size_t intersection_count(const PlayerSet& other) const {
        check_universe(other);
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
        return c;
    }

    bool intersects(const PlayerSet& other) const {
        check_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const PlayerSet& other) const {
        check_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    // Members in ascending id order.
    std::vector<PlayerId> members() const {
        std::vector<PlayerId> out;
        out.reserve(size_);
        for_each_member([&](PlayerId p) { out.push_back(p); });
        return out;
    }

    template <typename F>
    void for_each_member(F f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                unsigned bit = static_cast<unsigned>(std::countr_zero(w));
                f(static_cast<PlayerId>(i * 64 + bit));
                w &= w - 1;
            }
        }
    }

    friend bool operator==(const PlayerSet& a, const PlayerSet& b) {
        return a.universe_ == b.universe_ && a.words_ == b.words_;
    }

private:
    void check_range(PlayerId p) const {
        if (p >= universe_)
            throw ContractError("player id " + std::to_string(p) +
                                " outside universe of size " + std::to_string(universe_));
    }

    void check_universe(const PlayerSet& other) const {
        if (universe_ != other.universe_)
            throw ContractError("player sets over different universes cannot be combined");
    }

    std::size_t universe_ = 0;
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace ahg
