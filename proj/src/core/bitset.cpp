#include "monotile/bitset.hpp"

namespace monotile {

void Bitset::clear() noexcept {
    for (auto& w : words_) {
        w = 0;
    }
}

std::size_t Bitset::count() const noexcept {
    std::size_t total = 0;
    for (auto w : words_) {
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

bool Bitset::any() const noexcept {
    for (auto w : words_) {
        if (w) {
            return true;
        }
    }
    return false;
}

Bitset& Bitset::operator&=(const Bitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] &= o.words_[i];
    }
    return *this;
}

Bitset& Bitset::operator|=(const Bitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] |= o.words_[i];
    }
    return *this;
}

Bitset& Bitset::subtract(const Bitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] &= ~o.words_[i];
    }
    return *this;
}

bool Bitset::intersects(const Bitset& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (words_[i] & o.words_[i]) {
            return true;
        }
    }
    return false;
}

bool Bitset::is_subset_of(const Bitset& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (words_[i] & ~o.words_[i]) {
            return false;
        }
    }
    return true;
}

std::size_t Bitset::intersection_count(const Bitset& o) const noexcept {
    std::size_t total = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        total += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    }
    return total;
}

std::size_t Bitset::next(std::size_t from) const noexcept {
    if (from >= size_) {
        return size_;
    }
    std::size_t w = from >> 6;
    std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (from & 63));
    while (true) {
        if (bits) {
            return w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        }
        if (++w >= words_.size()) {
            return size_;
        }
        bits = words_[w];
    }
}

std::vector<std::uint32_t> Bitset::to_vector() const {
    std::vector<std::uint32_t> out;
    for_each([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i)); });
    return out;
}

void intersect_into(Bitset& dst, const Bitset& a, const Bitset& b) noexcept {
    auto* d = dst.data();
    const auto* x = a.data();
    const auto* y = b.data();
    for (std::size_t i = 0, n = dst.word_count(); i < n; ++i) {
        d[i] = x[i] & y[i];
    }
}

} // namespace monotile
