#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace mdim {

/// Fixed-width bitset sized at runtime. Width never changes after construction;
/// binary operations require equal widths.
class Bitset {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    Bitset() = default;
    explicit Bitset(std::size_t size) : size_(size), words_((size + word_bits - 1) / word_bits, 0) {}

    std::size_t size() const { return size_; }

    void set(std::size_t i) { words_[i / word_bits] |= Word{1} << (i % word_bits); }
    void reset(std::size_t i) { words_[i / word_bits] &= ~(Word{1} << (i % word_bits)); }
    bool test(std::size_t i) const { return (words_[i / word_bits] >> (i % word_bits)) & 1U; }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (Word w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool any() const
    {
        for (Word w : words_)
            if (w)
                return true;
        return false;
    }

    Bitset& operator|=(const Bitset& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }

    Bitset& operator&=(const Bitset& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }

    Bitset& operator^=(const Bitset& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] ^= o.words_[i];
        return *this;
    }

    friend Bitset operator^(Bitset a, const Bitset& b) { return a ^= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    bool operator==(const Bitset&) const = default;

    /// |a ∩ b| without materializing the intersection.
    static std::size_t and_count(const Bitset& a, const Bitset& b)
    {
        std::size_t c = 0;
        for (std::size_t i = 0; i < a.words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(a.words_[i] & b.words_[i]));
        return c;
    }

    /// |a △ b| without materializing the symmetric difference.
    static std::size_t xor_count(const Bitset& a, const Bitset& b)
    {
        std::size_t c = 0;
        for (std::size_t i = 0; i < a.words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(a.words_[i] ^ b.words_[i]));
        return c;
    }

    /// True iff s meets a △ b.
    static bool hits_xor(const Bitset& s, const Bitset& a, const Bitset& b)
    {
        for (std::size_t i = 0; i < s.words_.size(); ++i)
            if (s.words_[i] & (a.words_[i] ^ b.words_[i]))
                return true;
        return false;
    }

    std::vector<std::size_t> indices() const
    {
        std::vector<std::size_t> out;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            Word bits = words_[w];
            while (bits) {
                out.push_back(w * word_bits + static_cast<std::size_t>(std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
        return out;
    }

    const std::vector<Word>& words() const { return words_; }

private:
    std::size_t size_ = 0;
    std::vector<Word> words_;
};

} // namespace mdim
