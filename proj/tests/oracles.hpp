// Brute-force reference computations for the tests.
//
// Nothing here uses the library's linear algebra: vectors are plain bit
// masks and ranks come from counting the elements of a span. Slow, small,
// obviously right.

#ifndef BOIB_TESTS_ORACLES_HPP
#define BOIB_TESTS_ORACLES_HPP

#include "boib/book.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Mask = std::uint32_t;

inline std::set<Mask> span_of(const std::vector<Mask>& vectors)
{
    std::set<Mask> span{0};
    for (Mask v : vectors) {
        std::set<Mask> next = span;
        for (Mask x : span)
            next.insert(x ^ v);
        span.swap(next);
    }
    return span;
}

inline std::size_t log2_exact(std::size_t n)
{
    std::size_t r = 0;
    while ((std::size_t{1} << r) < n)
        ++r;
    return r;
}

inline std::size_t rank(const std::vector<Mask>& vectors) { return log2_exact(span_of(vectors).size()); }

/// Matrix given by its columns (bit i of column j is entry (i, j)).
inline std::size_t nullity(const std::vector<Mask>& columns)
{
    return columns.size() - rank(columns);
}

/// Smallest nonzero weight in the span, 0 for the zero space.
inline int min_weight(const std::vector<Mask>& vectors)
{
    int best = 0;
    for (Mask x : span_of(vectors))
        if (x != 0 && (best == 0 || std::popcount(x) < best))
            best = std::popcount(x);
    return best;
}

/// dim ker of the page-to-binding map, by counting page sets whose image
/// vanishes, straight from the annulus list.
inline std::size_t delta_kernel_rank(const boib::Book& book, const std::set<std::string>& b0 = {})
{
    std::map<std::string, std::size_t> page_bit;
    for (std::size_t i = 0; i < book.pages().size(); ++i)
        page_bit[book.pages()[i].id] = i;
    std::size_t count = 0;
    const Mask limit = Mask{1} << book.pages().size();
    for (Mask x = 0; x < limit; ++x) {
        bool zero = true;
        for (const auto& b : book.bindings()) {
            if (b0.count(b.id))
                continue;
            int sum = 0;
            for (const auto& a : book.annuli())
                if (a.binding == b.id && ((x >> page_bit[a.page]) & 1u))
                    sum += b.degree;
            if (sum % 2 != 0) {
                zero = false;
                break;
            }
        }
        if (zero)
            ++count;
    }
    return log2_exact(count);
}

// K1 by hand. Edge order a1 b1 d1 a2 b2 d2 c e1 e2, vertex order vP1 vP2 vB,
// 2-cell order S1 S2 A1 A2.
//   d2(S1) = d1, d2(S2) = d2, d2(A1) = d1 + c, d2(A2) = d2 + c
//   d1(e1) = vP1 + vB, d1(e2) = vP2 + vB, loops go to 0
inline const std::vector<Mask> k1_boundary2 = {
    0b000000100,  // S1: d1
    0b000100000,  // S2: d2
    0b001000100,  // A1: d1 + c
    0b001100000,  // A2: d2 + c
};
inline const std::vector<Mask> k1_boundary1 = {
    0, 0, 0, 0, 0, 0, 0,
    0b101,  // e1
    0b110,  // e2
};

struct Ranks
{
    std::size_t h0, h1, h2;
};

/// Homology ranks of a complex given by boundary columns.
inline Ranks homology(std::size_t vertices, const std::vector<Mask>& d1, const std::vector<Mask>& d2)
{
    const std::size_t r1 = rank(d1);
    const std::size_t r2 = rank(d2);
    return Ranks{vertices - r1, d1.size() - r1 - r2, d2.size() - r2};
}

/// Relative ranks of K1 modulo the cells of {P1}: vP1, vB, a1, b1, d1, c,
/// e1, S1, A1. What is left: vertex vP2, edges a2 b2 d2 e2, cells S2 A2.
inline Ranks k1_relative_to_p1()
{
    // edges renumbered a2=0 b2=1 d2=2 e2=3
    const std::vector<Mask> d2 = {0b0100, 0b0100};  // S2: d2, A2: d2 (+c, killed)
    const std::vector<Mask> d1 = {0, 0, 0, 0b1};    // e2: vP2 (+vB, killed)
    return homology(1, d1, d2);
}

/// Relative ranks of K1 modulo binding B: vB and c are removed.
inline Ranks k1_relative_to_b()
{
    // edges a1 b1 d1 a2 b2 d2 e1 e2 -> 0..7, vertices vP1 vP2
    const std::vector<Mask> d2 = {0b00000100, 0b00100000, 0b00000100, 0b00100000};
    const std::vector<Mask> d1 = {0, 0, 0, 0, 0, 0, 0b01, 0b10};
    return homology(2, d1, d2);
}

/// Number of set pairs whose intersection differs from k.
inline std::size_t bad_pairs(const std::vector<Mask>& sets, int k)
{
    std::size_t bad = 0;
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            if (std::popcount(sets[i] & sets[j]) != k)
                ++bad;
    return bad;
}

} // namespace oracle

#endif // BOIB_TESTS_ORACLES_HPP
