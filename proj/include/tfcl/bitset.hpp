#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace tfcl {

/// Fixed-size bitset over 64-bit words; just the operations the closure
/// enumeration needs (intersection, subset test, prefix comparison).
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    void fill() {
        for (auto& w : words_) w = ~std::uint64_t{0};
        trim();
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }

    Bitset& operator&=(const Bitset& rhs) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= rhs.words_[k];
        return *this;
    }

    bool is_subset_of(const Bitset& rhs) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            if ((words_[k] & ~rhs.words_[k]) != 0) return false;
        }
        return true;
    }

    /// Do the bits strictly below `limit` agree?
    bool prefix_equal(const Bitset& rhs, std::size_t limit) const {
        const std::size_t full = limit >> 6;
        for (std::size_t k = 0; k < full; ++k) {
            if (words_[k] != rhs.words_[k]) return false;
        }
        const std::size_t rem = limit & 63;
        if (rem == 0) return true;
        const std::uint64_t mask = (std::uint64_t{1} << rem) - 1;
        return (words_[full] & mask) == (rhs.words_[full] & mask);
    }

    friend bool operator==(const Bitset& a, const Bitset& b) {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w != 0) {
                const int bit = __builtin_ctzll(w);
                fn(k * 64 + static_cast<std::size_t>(bit));
                w &= w - 1;
            }
        }
    }

private:
    void trim() {
        const std::size_t rem = size_ & 63;
        if (rem != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << rem) - 1;
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace tfcl
