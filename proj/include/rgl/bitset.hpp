#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <functional>
#include <vector>

namespace rgl {

// Fixed-universe bitset over vertex ids 0..universe()-1.
// All binary operations require both operands to share the same universe.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int universe)
        : n_(universe), w_((universe + 63) / 64, 0)
    {
        assert(universe >= 0);
    }

    int universe() const { return n_; }

    bool test(int v) const
    {
        assert(v >= 0 && v < n_);
        return (w_[v >> 6] >> (v & 63)) & 1;
    }
    void set(int v)
    {
        assert(v >= 0 && v < n_);
        w_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }
    void reset(int v)
    {
        assert(v >= 0 && v < n_);
        w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    int count() const
    {
        int c = 0;
        for (auto w : w_)
            c += std::popcount(w);
        return c;
    }
    bool empty() const
    {
        for (auto w : w_)
            if (w)
                return false;
        return true;
    }

    // First set bit, or -1.
    int first() const { return next(-1); }

    // First set bit strictly after v, or -1.
    int next(int v) const
    {
        int start = v + 1;
        if (start >= n_)
            return -1;
        int wi = start >> 6;
        std::uint64_t w = w_[wi] & (~std::uint64_t{0} << (start & 63));
        while (true) {
            if (w)
                return wi * 64 + std::countr_zero(w);
            if (++wi >= static_cast<int>(w_.size()))
                return -1;
            w = w_[wi];
        }
    }

    Bitset& operator&=(const Bitset& o)
    {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i)
            w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o)
    {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i)
            w_[i] |= o.w_[i];
        return *this;
    }
    // Set difference: this \ o.
    Bitset& setminus(const Bitset& o)
    {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i)
            w_[i] &= ~o.w_[i];
        return *this;
    }
    // Complement within the universe.
    void flip_all()
    {
        for (auto& w : w_)
            w = ~w;
        trim();
    }
    void clear()
    {
        for (auto& w : w_)
            w = 0;
    }
    void fill()
    {
        for (auto& w : w_)
            w = ~std::uint64_t{0};
        trim();
    }

    bool intersects(const Bitset& o) const
    {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i])
                return true;
        return false;
    }
    int count_and(const Bitset& o) const
    {
        assert(n_ == o.n_);
        int c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i)
            c += std::popcount(w_[i] & o.w_[i]);
        return c;
    }
    bool is_subset_of(const Bitset& o) const
    {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i])
                return false;
        return true;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend bool operator==(const Bitset& a, const Bitset& b)
    {
        return a.n_ == b.n_ && a.w_ == b.w_;
    }

    std::vector<int> to_vector() const
    {
        std::vector<int> out;
        for (int v = first(); v != -1; v = next(v))
            out.push_back(v);
        return out;
    }
    static Bitset of(int universe, const std::vector<int>& vs)
    {
        Bitset b(universe);
        for (int v : vs)
            b.set(v);
        return b;
    }

private:
    void trim()
    {
        if (n_ & 63)
            w_.back() &= (std::uint64_t{1} << (n_ & 63)) - 1;
    }

    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace rgl
