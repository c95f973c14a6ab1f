#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace orichrom {

/// Fixed-size dynamic bitset used for adjacency rows and search domains.
class Bitset {
  public:
    Bitset() = default;
    explicit Bitset(std::size_t size, bool value = false)
        : size_(size), words_((size + 63) / 64, value ? ~std::uint64_t{0} : 0)
    {
        trim();
    }

    std::size_t size() const { return size_; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool none() const
    {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }

    Bitset &operator&=(const Bitset &other)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= other.words_[i];
        return *this;
    }

    Bitset &operator|=(const Bitset &other)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= other.words_[i];
        return *this;
    }

    /// Index of the first set bit at or after `from`, or size() if none.
    std::size_t find_next(std::size_t from) const
    {
        if (from >= size_)
            return size_;
        std::size_t w = from >> 6;
        std::uint64_t word = words_[w] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (word)
                return (w << 6) + static_cast<std::size_t>(std::countr_zero(word));
            if (++w == words_.size())
                return size_;
            word = words_[w];
        }
    }
    std::size_t find_first() const { return find_next(0); }

    bool operator==(const Bitset &) const = default;

  private:
    void trim()
    {
        if (size_ % 64 != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace orichrom
