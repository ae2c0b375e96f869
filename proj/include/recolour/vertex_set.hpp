#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace recolour {

// Fixed-capacity bitset over vertex ids [0, capacity).
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int capacity)
        : words_((static_cast<std::size_t>(capacity) + 63) / 64, 0), capacity_(capacity) {}

    static VertexSet full(int capacity)
    {
        VertexSet s(capacity);
        for (int v = 0; v < capacity; ++v)
            s.insert(v);
        return s;
    }

    int capacity() const noexcept { return capacity_; }

    void insert(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    bool contains(int v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }

    int count() const
    {
        int total = 0;
        for (auto w : words_)
            total += std::popcount(w);
        return total;
    }

    bool empty() const
    {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }

    bool intersects(const VertexSet& other) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i])
                return true;
        return false;
    }

    // Least member >= from, or -1.
    int next(int from = 0) const
    {
        if (from >= capacity_)
            return -1;
        std::size_t i = static_cast<std::size_t>(from) >> 6;
        std::uint64_t w = words_[i] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w)
                return static_cast<int>(i * 64 + std::countr_zero(w));
            if (++i == words_.size())
                return -1;
            w = words_[i];
        }
    }

    VertexSet& operator&=(const VertexSet& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }
    // Set difference.
    VertexSet& operator-=(const VertexSet& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool operator==(const VertexSet&) const = default;

    std::vector<int> members() const
    {
        std::vector<int> out;
        for (int v = next(0); v != -1; v = next(v + 1))
            out.push_back(v);
        return out;
    }

private:
    std::vector<std::uint64_t> words_;
    int capacity_ = 0;
};

} // namespace recolour
