#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace hrl {

// Dense bit vector over a fixed ground set {0,...,n-1}.  Rows of adjacency
// matrices and vertex subsets use this; the hot loops in triangle counting
// are AND + popcount over these words.
class VBitset {
  public:
    VBitset() : n_(0) {}
    explicit VBitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int universe() const { return n_; }
    int words() const { return static_cast<int>(w_.size()); }
    uint64_t word(int i) const { return w_[i]; }
    uint64_t& word(int i) { return w_[i]; }

    void set(int i) { w_[i >> 6] |= (uint64_t{1} << (i & 63)); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

    void clear() { for (auto& x : w_) x = 0; }

    long count() const {
        long c = 0;
        for (uint64_t x : w_) c += std::popcount(x);
        return c;
    }

    long count_and(const VBitset& o) const {
        long c = 0;
        for (size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
        return c;
    }

    VBitset& operator&=(const VBitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    VBitset& operator|=(const VBitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    // this \ o
    VBitset& subtract(const VBitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    bool intersects(const VBitset& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool is_subset_of(const VBitset& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    bool operator==(const VBitset& o) const { return n_ == o.n_ && w_ == o.w_; }

    template <typename F>
    void for_each(F&& f) const {
        for (size_t i = 0; i < w_.size(); ++i) {
            uint64_t x = w_[i];
            while (x) {
                int b = std::countr_zero(x);
                f(static_cast<int>(i * 64 + b));
                x &= x - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    static VBitset of(int n, const std::vector<int>& items) {
        VBitset b(n);
        for (int v : items) b.set(v);
        return b;
    }

  private:
    int n_;
    std::vector<uint64_t> w_;
};

}  // namespace hrl
