#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace seidel {

// Packed bitset over {0..universe-1}. Words are little-endian in vertex index.
class VertexSet {
  public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

    VertexSet(std::size_t universe, std::initializer_list<std::size_t> members) : VertexSet(universe) {
        for (auto v : members) insert(v);
    }

    VertexSet(std::size_t universe, std::span<const std::size_t> members) : VertexSet(universe) {
        for (auto v : members) insert(v);
    }

    static VertexSet all(std::size_t universe) {
        VertexSet s(universe);
        for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    // Low bits of `mask` select members; only valid for universe <= 64.
    static VertexSet from_mask(std::size_t universe, std::uint64_t mask) {
        if (universe > 64) throw std::invalid_argument("VertexSet::from_mask: universe exceeds 64");
        VertexSet s(universe);
        if (universe > 0) s.words_[0] = mask;
        s.trim();
        return s;
    }

    std::size_t universe() const noexcept { return universe_; }

    bool contains(std::size_t v) const noexcept {
        return v < universe_ && ((words_[v / 64] >> (v % 64)) & 1U) != 0;
    }

    void insert(std::size_t v) {
        check(v);
        words_[v / 64] |= std::uint64_t{1} << (v % 64);
    }

    void erase(std::size_t v) {
        check(v);
        words_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    }

    void toggle(std::size_t v) {
        check(v);
        words_[v / 64] ^= std::uint64_t{1} << (v % 64);
    }

    std::size_t size() const noexcept {
        std::size_t total = 0;
        for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }

    bool empty() const noexcept { return size() == 0; }

    std::vector<std::size_t> members() const {
        std::vector<std::size_t> out;
        out.reserve(size());
        for (std::size_t v = 0; v < universe_; ++v)
            if (contains(v)) out.push_back(v);
        return out;
    }

    VertexSet complement() const {
        VertexSet s(universe_);
        for (std::size_t w = 0; w < words_.size(); ++w) s.words_[w] = ~words_[w];
        s.trim();
        return s;
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

  private:
    void check(std::size_t v) const {
        if (v >= universe_)
            throw std::out_of_range("vertex " + std::to_string(v) + " outside set universe of size " +
                                    std::to_string(universe_));
    }

    void trim() noexcept {
        if (universe_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
    }

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace seidel
