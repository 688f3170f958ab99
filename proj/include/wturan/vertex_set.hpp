#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace wturan {

using Vertex = std::size_t;

/// Dynamic bitset over vertex indices 0..capacity-1.
class VertexSet {
public:
    static constexpr std::size_t word_bits = 64;

    VertexSet() = default;
    explicit VertexSet(std::size_t capacity)
        : capacity_(capacity), words_((capacity + word_bits - 1) / word_bits, 0) {}

    VertexSet(std::size_t capacity, std::span<const std::uint64_t> words)
        : capacity_(capacity), words_(words.begin(), words.end()) {}

    /// All of 0..capacity-1.
    static VertexSet full(std::size_t capacity) {
        VertexSet s(capacity);
        for (auto& w : s.words_) w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    std::size_t capacity() const noexcept { return capacity_; }
    std::span<const std::uint64_t> words() const noexcept { return words_; }

    bool test(Vertex v) const noexcept { return (words_[v / word_bits] >> (v % word_bits)) & 1U; }
    void set(Vertex v) noexcept { words_[v / word_bits] |= std::uint64_t{1} << (v % word_bits); }
    void reset(Vertex v) noexcept { words_[v / word_bits] &= ~(std::uint64_t{1} << (v % word_bits)); }

    bool empty() const noexcept {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    /// Smallest member, or capacity() when empty.
    Vertex first() const noexcept { return next(0); }

    /// Smallest member >= from, or capacity() when none.
    Vertex next(Vertex from) const noexcept {
        if (from >= capacity_) return capacity_;
        std::size_t wi = from / word_bits;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from % word_bits));
        while (true) {
            if (w) return wi * word_bits + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi == words_.size()) return capacity_;
            w = words_[wi];
        }
    }

    VertexSet& operator&=(std::span<const std::uint64_t> other) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& other) noexcept { return *this &= other.words(); }

    VertexSet& subtract(std::span<const std::uint64_t> other) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other[i];
        return *this;
    }
    VertexSet& subtract(const VertexSet& other) noexcept { return subtract(other.words()); }

    /// Drops every member < v.
    void clear_below(Vertex v) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::size_t lo = i * word_bits;
            if (lo + word_bits <= v) words_[i] = 0;
            else if (lo < v) words_[i] &= ~std::uint64_t{0} << (v - lo);
        }
    }

    std::vector<Vertex> members() const {
        std::vector<Vertex> out;
        for (Vertex v = first(); v < capacity_; v = next(v + 1)) out.push_back(v);
        return out;
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    void trim() noexcept {
        if (capacity_ % word_bits != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (capacity_ % word_bits)) - 1;
    }

    std::size_t capacity_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace wturan
