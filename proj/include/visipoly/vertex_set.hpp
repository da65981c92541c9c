#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace visipoly {

// Set of vertex indices 0..63 as one machine word. Graphs are capped at
// 64 vertices so every set in the engine is a single uint64_t.
struct VertexSet {
    std::uint64_t bits = 0;

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t b) : bits(b) {}

    static constexpr VertexSet empty_set() { return VertexSet{}; }

    static constexpr VertexSet single(int v) { return VertexSet{1ull << v}; }

    // {0, 1, ..., n-1}
    static constexpr VertexSet full(int n) {
        return VertexSet{n >= 64 ? ~0ull : (1ull << n) - 1};
    }

    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.bits |= 1ull << v;
        return s;
    }

    constexpr bool contains(int v) const { return (bits >> v) & 1; }
    constexpr bool empty() const { return bits == 0; }
    constexpr int count() const { return std::popcount(bits); }

    constexpr VertexSet with(int v) const { return VertexSet{bits | (1ull << v)}; }
    constexpr VertexSet without(int v) const { return VertexSet{bits & ~(1ull << v)}; }

    constexpr bool subset_of(VertexSet o) const { return (bits & ~o.bits) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits & o.bits) != 0; }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet{a.bits | b.bits}; }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet{a.bits & b.bits}; }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet{a.bits & ~b.bits}; }
    friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits == b.bits; }

    int lowest() const { return std::countr_zero(bits); }  // undefined on empty

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (std::uint64_t b = bits; b; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

    std::string to_string() const {
        std::string out = "{";
        bool first = true;
        for (std::uint64_t b = bits; b; b &= b - 1) {
            if (!first) out += ",";
            out += std::to_string(std::countr_zero(b));
            first = false;
        }
        return out + "}";
    }
};

// for (int v : bits_of(set)) ...
class bits_of {
public:
    explicit bits_of(VertexSet s) : bits_(s.bits) {}

    class iterator {
    public:
        explicit iterator(std::uint64_t b) : b_(b) {}
        int operator*() const { return std::countr_zero(b_); }
        iterator& operator++() { b_ &= b_ - 1; return *this; }
        bool operator!=(const iterator& o) const { return b_ != o.b_; }
    private:
        std::uint64_t b_;
    };

    iterator begin() const { return iterator{bits_}; }
    iterator end() const { return iterator{0}; }

private:
    std::uint64_t bits_;
};

}  // namespace visipoly
