#ifndef RAMSEY_SRC_FIXED_BITS_HH
#define RAMSEY_SRC_FIXED_BITS_HH

#include <ramsey/graph.hh>

#include <array>
#include <bit>
#include <cstdint>

namespace ramsey::detail
{
    /// Allocation-free vertex set for hosts up to Graph::max_order, for use in
    /// search inner loops. Only the first `words` words are meaningful.
    struct FixedBits
    {
        static constexpr int capacity_words = Graph::max_order / 64;

        std::array<std::uint64_t, capacity_words> w{};

        auto test(int v) const -> bool { return (w[v >> 6] >> (v & 63)) & 1u; }
        auto set(int v) -> void { w[v >> 6] |= std::uint64_t{1} << (v & 63); }
        auto reset(int v) -> void { w[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

        auto count(int words) const -> int
        {
            int c = 0;
            for (int i = 0 ; i < words ; ++i)
                c += std::popcount(w[i]);
            return c;
        }

        auto any(int words) const -> bool
        {
            for (int i = 0 ; i < words ; ++i)
                if (w[i])
                    return true;
            return false;
        }

        auto first(int words) const -> int
        {
            for (int i = 0 ; i < words ; ++i)
                if (w[i])
                    return i * 64 + std::countr_zero(w[i]);
            return -1;
        }

        template <typename F>
        auto for_each(int words, F && f) const -> void
        {
            for (int i = 0 ; i < words ; ++i)
                for (auto bits = w[i] ; bits ; bits &= bits - 1)
                    f(i * 64 + std::countr_zero(bits));
        }
    };

    inline auto row_bits(const Graph & g, int v) -> FixedBits
    {
        FixedBits b;
        auto r = g.row(v);
        for (std::size_t i = 0 ; i < r.size() ; ++i)
            b.w[i] = r[i];
        return b;
    }

    inline auto all_bits(int order) -> FixedBits
    {
        FixedBits b;
        for (int v = 0 ; v < order ; ++v)
            b.set(v);
        return b;
    }

    inline auto and_bits(FixedBits a, const FixedBits & b, int words) -> FixedBits
    {
        for (int i = 0 ; i < words ; ++i)
            a.w[i] &= b.w[i];
        return a;
    }

    inline auto andnot_bits(FixedBits a, const FixedBits & b, int words) -> FixedBits
    {
        for (int i = 0 ; i < words ; ++i)
            a.w[i] &= ~b.w[i];
        return a;
    }

    inline auto or_bits(FixedBits a, const FixedBits & b, int words) -> FixedBits
    {
        for (int i = 0 ; i < words ; ++i)
            a.w[i] |= b.w[i];
        return a;
    }

    inline auto row_and_count(const Graph & g, int v, const FixedBits & b) -> int
    {
        auto r = g.row(v);
        int c = 0;
        for (std::size_t i = 0 ; i < r.size() ; ++i)
            c += std::popcount(r[i] & b.w[i]);
        return c;
    }
}

#endif
