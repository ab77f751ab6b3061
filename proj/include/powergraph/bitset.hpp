#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace powergraph {

// Set of integers from a fixed universe [0, n), packed into 64-bit blocks.
// Subset / intersection queries are what the subgroup machinery lives on.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int universe)
        : nbits_(universe), blocks_(static_cast<std::size_t>(universe + 63) / 64, 0) {}

    int universe_size() const { return nbits_; }

    void set(int i) { blocks_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { blocks_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const {
        return (blocks_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
    }

    int count() const {
        int c = 0;
        for (std::uint64_t b : blocks_) c += std::popcount(b);
        return c;
    }

    bool any() const {
        for (std::uint64_t b : blocks_)
            if (b) return true;
        return false;
    }
    bool none() const { return !any(); }

    bool intersects(const Bitset& other) const {
        const std::size_t k = std::min(blocks_.size(), other.blocks_.size());
        for (std::size_t i = 0; i < k; ++i)
            if (blocks_[i] & other.blocks_[i]) return true;
        return false;
    }

    // every member of *this is a member of other
    bool is_subset_of(const Bitset& other) const {
        for (std::size_t i = 0; i < blocks_.size(); ++i) {
            const std::uint64_t rhs = i < other.blocks_.size() ? other.blocks_[i] : 0;
            if (blocks_[i] & ~rhs) return false;
        }
        return true;
    }

    Bitset& operator|=(const Bitset& other) {
        for (std::size_t i = 0; i < blocks_.size() && i < other.blocks_.size(); ++i)
            blocks_[i] |= other.blocks_[i];
        return *this;
    }

    Bitset& operator&=(const Bitset& other) {
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            blocks_[i] &= i < other.blocks_.size() ? other.blocks_[i] : 0;
        return *this;
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;

    friend bool operator<(const Bitset& a, const Bitset& b) {
        if (a.nbits_ != b.nbits_) return a.nbits_ < b.nbits_;
        return a.blocks_ < b.blocks_;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
            std::uint64_t b = blocks_[bi];
            while (b) {
                f(static_cast<int>(bi * 64) + std::countr_zero(b));
                b &= b - 1;
            }
        }
    }

    std::vector<int> to_indices() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

private:
    int nbits_ = 0;
    std::vector<std::uint64_t> blocks_;
};

} // namespace powergraph
