#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace bollobas {

// Subset of a fixed universe {0,...,n-1}, packed into 64-bit words.
// Universes here are small (ground sets, block counts), so everything is
// value-semantic and inline.
class Bitset {
public:
    Bitset() = default;

    explicit Bitset(int universe) : n_(universe) {
        if (universe < 0) throw std::invalid_argument("Bitset: negative universe");
        w_.assign(words_for(universe), 0);
    }

    static Bitset full(int universe) {
        Bitset b(universe);
        for (int i = 0; i < universe; ++i) b.set(i);
        return b;
    }

    static Bitset of(int universe, std::initializer_list<int> elems) {
        Bitset b(universe);
        for (int e : elems) b.set(e);
        return b;
    }

    static Bitset of(int universe, const std::vector<int>& elems) {
        Bitset b(universe);
        for (int e : elems) b.set(e);
        return b;
    }

    int universe() const { return n_; }

    void set(int i) {
        check(i);
        w_[static_cast<size_t>(i) >> 6] |= (uint64_t{1} << (i & 63));
    }

    void reset(int i) {
        check(i);
        w_[static_cast<size_t>(i) >> 6] &= ~(uint64_t{1} << (i & 63));
    }

    bool test(int i) const {
        if (i < 0 || i >= n_) return false;
        return (w_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1;
    }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (uint64_t w : w_) if (w) return false;
        return true;
    }
    bool any() const { return !empty(); }

    // First element, or -1 when empty.
    int first() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return static_cast<int>(i * 64 + static_cast<size_t>(std::countr_zero(w_[i])));
        return -1;
    }

    Bitset& operator&=(const Bitset& o) {
        require_same(o);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        require_same(o);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    // Set difference.
    Bitset& operator-=(const Bitset& o) {
        require_same(o);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    Bitset complement() const {
        Bitset r(n_);
        for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
        r.trim();
        return r;
    }

    bool intersects(const Bitset& o) const {
        require_same(o);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool is_subset_of(const Bitset& o) const {
        require_same(o);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }

    // Word-wise comparison, low word last: orders masks as integers.
    // This is the column-encoding order used by the exact search.
    std::strong_ordering operator<=>(const Bitset& o) const {
        if (auto c = n_ <=> o.n_; c != 0) return c;
        for (size_t i = w_.size(); i-- > 0;)
            if (auto c = w_[i] <=> o.w_[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(static_cast<size_t>(count()));
        for (size_t i = 0; i < w_.size(); ++i) {
            uint64_t w = w_[i];
            while (w) {
                int b = std::countr_zero(w);
                out.push_back(static_cast<int>(i * 64) + b);
                w &= w - 1;
            }
        }
        return out;
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (size_t i = 0; i < w_.size(); ++i) {
            uint64_t w = w_[i];
            while (w) {
                fn(static_cast<int>(i * 64) + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    std::string to_string() const {
        std::string s = "{";
        bool sep = false;
        for (int e : elements()) {
            if (sep) s += ',';
            s += std::to_string(e);
            sep = true;
        }
        return s + "}";
    }

private:
    static size_t words_for(int n) { return (static_cast<size_t>(n) + 63) / 64; }

    void check(int i) const {
        if (i < 0 || i >= n_)
            throw std::out_of_range("Bitset: element " + std::to_string(i) +
                                    " outside universe [0," + std::to_string(n_) + ")");
    }

    void require_same(const Bitset& o) const {
        if (n_ != o.n_) throw std::invalid_argument("Bitset: universe mismatch");
    }

    void trim() {
        if (n_ & 63) w_.back() &= (uint64_t{1} << (n_ & 63)) - 1;
    }

    int n_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace bollobas
