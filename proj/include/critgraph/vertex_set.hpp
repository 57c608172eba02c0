#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace critgraph {

/// Fixed-capacity bit set over the vertices {0, ..., universe-1}.
///
/// Storage is inline (no heap), so copies inside search loops are cheap.
/// Only the first word_count() words are ever non-zero.
class VertexSet {
public:
    static constexpr int kCapacity = 1024;
    static constexpr int kWordBits = 64;
    static constexpr int kMaxWords = kCapacity / kWordBits;

    VertexSet() = default;
    explicit VertexSet(int universe);
    VertexSet(int universe, std::initializer_list<int> members);
    VertexSet(int universe, std::span<const int> members);

    static VertexSet full(int universe);

    int universe() const { return universe_; }
    int word_count() const { return (universe_ + kWordBits - 1) / kWordBits; }
    std::span<const std::uint64_t> words() const { return {words_.data(), static_cast<std::size_t>(word_count())}; }

    bool contains(int v) const
    {
        return v >= 0 && v < universe_ && ((words_[v / kWordBits] >> (v % kWordBits)) & 1U) != 0;
    }

    void insert(int v) { words_[v / kWordBits] |= std::uint64_t{1} << (v % kWordBits); }
    void erase(int v) { words_[v / kWordBits] &= ~(std::uint64_t{1} << (v % kWordBits)); }

    int size() const
    {
        int total = 0;
        for (int w = 0; w < word_count(); ++w)
            total += std::popcount(words_[w]);
        return total;
    }

    bool empty() const
    {
        for (int w = 0; w < word_count(); ++w)
            if (words_[w] != 0)
                return false;
        return true;
    }

    /// Lowest member, or -1 when empty.
    int first() const
    {
        for (int w = 0; w < word_count(); ++w)
            if (words_[w] != 0)
                return w * kWordBits + std::countr_zero(words_[w]);
        return -1;
    }

    /// Lowest member >= from, or -1.
    int next(int from) const
    {
        if (from < 0)
            from = 0;
        if (from >= universe_)
            return -1;
        int w = from / kWordBits;
        std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (from % kWordBits));
        while (true) {
            if (bits != 0)
                return w * kWordBits + std::countr_zero(bits);
            if (++w >= word_count())
                return -1;
            bits = words_[w];
        }
    }

    /// Visits members in increasing order.
    template <typename Fn>
    void for_each(Fn&& fn) const
    {
        for (int w = 0; w < word_count(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                fn(w * kWordBits + std::countr_zero(bits));
                bits &= bits - 1;
            }
        }
    }

    std::vector<int> members() const;

    bool intersects(const VertexSet& other) const
    {
        for (int w = 0; w < word_count(); ++w)
            if ((words_[w] & other.words_[w]) != 0)
                return true;
        return false;
    }

    int intersection_size(const VertexSet& other) const
    {
        int total = 0;
        for (int w = 0; w < word_count(); ++w)
            total += std::popcount(words_[w] & other.words_[w]);
        return total;
    }

    bool is_subset_of(const VertexSet& other) const
    {
        for (int w = 0; w < word_count(); ++w)
            if ((words_[w] & ~other.words_[w]) != 0)
                return false;
        return true;
    }

    VertexSet& operator&=(const VertexSet& other)
    {
        for (int w = 0; w < word_count(); ++w)
            words_[w] &= other.words_[w];
        return *this;
    }

    VertexSet& operator|=(const VertexSet& other)
    {
        for (int w = 0; w < word_count(); ++w)
            words_[w] |= other.words_[w];
        return *this;
    }

    /// Set difference.
    VertexSet& operator-=(const VertexSet& other)
    {
        for (int w = 0; w < word_count(); ++w)
            words_[w] &= ~other.words_[w];
        return *this;
    }

    friend VertexSet operator&(VertexSet lhs, const VertexSet& rhs) { return lhs &= rhs; }
    friend VertexSet operator|(VertexSet lhs, const VertexSet& rhs) { return lhs |= rhs; }
    friend VertexSet operator-(VertexSet lhs, const VertexSet& rhs) { return lhs -= rhs; }

    friend bool operator==(const VertexSet& lhs, const VertexSet& rhs)
    {
        if (lhs.universe_ != rhs.universe_)
            return false;
        for (int w = 0; w < lhs.word_count(); ++w)
            if (lhs.words_[w] != rhs.words_[w])
                return false;
        return true;
    }

private:
    int universe_ = 0;
    std::array<std::uint64_t, kMaxWords> words_{};
};

} // namespace critgraph
