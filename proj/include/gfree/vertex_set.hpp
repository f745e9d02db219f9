#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace gfree {

/// Hard limit on graph order. Every vertex subset is a single 64-bit word.
inline constexpr int kMaxVertices = 64;

/// A subset of the vertex labels 0..63, stored as a bitmask.
///
/// VertexSet does not remember which graph it belongs to; callers pair it
/// with a Graph and `Graph::contains_set` checks the range invariant.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<int> members)
    {
        for (int v : members) insert(v);
    }

    static VertexSet from_vector(const std::vector<int>& members)
    {
        VertexSet s;
        for (int v : members) s.insert(v);
        return s;
    }

    /// {0, ..., n-1}
    static constexpr VertexSet prefix(int n)
    {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int lowest() const { return std::countr_zero(bits_); }

    constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

    constexpr VertexSet with(int v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
    constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }

    constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
    constexpr bool operator==(const VertexSet&) const = default;

    /// Sorted member list.
    std::vector<int> to_vector() const
    {
        std::vector<int> out;
        out.reserve(size());
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

    template <class F>
    void for_each(F&& f) const
    {
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b));
    }

private:
    std::uint64_t bits_ = 0;
};

/// Lexicographic order on sorted member lists, restricted to sets of equal
/// size: a < b iff the smallest vertex in the symmetric difference is in a.
inline bool lex_less_equal_size(VertexSet a, VertexSet b)
{
    const std::uint64_t diff = a.bits() ^ b.bits();
    if (diff == 0) return false;
    return a.contains(std::countr_zero(diff));
}

}  // namespace gfree
