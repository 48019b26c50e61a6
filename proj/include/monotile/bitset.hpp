#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace monotile {

// Dynamic bitset over vertex indices with in-place set algebra; sized once, reused in hot loops.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const noexcept { return size_; }
    std::size_t word_count() const noexcept { return words_.size(); }
    const std::uint64_t* data() const noexcept { return words_.data(); }
    std::uint64_t* data() noexcept { return words_.data(); }

    void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
    bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }

    void clear() noexcept;
    std::size_t count() const noexcept;
    bool any() const noexcept;
    bool none() const noexcept { return !any(); }

    Bitset& operator&=(const Bitset& o) noexcept;
    Bitset& operator|=(const Bitset& o) noexcept;
    Bitset& subtract(const Bitset& o) noexcept;  // this &= ~o

    bool intersects(const Bitset& o) const noexcept;
    bool is_subset_of(const Bitset& o) const noexcept;
    std::size_t intersection_count(const Bitset& o) const noexcept;

    // Index of first set bit at or after `from`, or size() when none.
    std::size_t next(std::size_t from) const noexcept;
    std::size_t first() const noexcept { return next(0); }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                fn(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

    std::vector<std::uint32_t> to_vector() const;

    friend bool operator==(const Bitset&, const Bitset&) = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

// dst = a & b, without allocating when dst is already sized.
void intersect_into(Bitset& dst, const Bitset& a, const Bitset& b) noexcept;

} // namespace monotile
