// Extraction of a connected half-size sub-book with nonzero H2.
//
// Given a connected book whose 2m pages all have chibar 1 and whose delta has
// kernel rank >= m, seashore() returns a connected sub-book with m pages whose
// own delta still has a nonzero kernel:
//
//   1. pick alpha in ker(delta) with 0 < weight <= m (pages as coordinates);
//   2. Z = sub-book on support(alpha), Z1 its first component. The restriction
//      of alpha to Z1 is still a cycle, because the components of Z share no
//      binding;
//   3. grow Z1 one adjacent page at a time until it has m pages. The grown
//      sub-book's delta is a restriction of the full delta, so the restricted
//      cycle survives.

#ifndef BOIB_SEASHORE_HPP
#define BOIB_SEASHORE_HPP

#include "boib/book.hpp"
#include "boib/f2.hpp"

#include <vector>

namespace boib {

/// `sub` plus the lowest-index page outside it sharing a binding with it.
/// Throws NoAdjacentPage when there is none (sub is everything, or the book
/// is disconnected) and PreconditionViolated when sub is empty.
SubBook grow_subbook(const Book& book, const SubBook& sub);

struct SeashoreResult
{
    SubBook subbook;          ///< the answer, chibar m
    F2Vector alpha;           ///< small-support kernel element of the whole book
    SubBook support;          ///< Z: pages of support(alpha)
    SubBook seed;             ///< Z1: first component of Z
    F2Vector seed_cycle;      ///< alpha restricted to Z1, a kernel element
    std::vector<SubBook> growth;  ///< Z1 = Y_0, Y_1, ..., Y_k = subbook
};

/// Throws PreconditionViolated naming the first failed hypothesis.
void check_seashore_hypotheses(const Book& book, int m);

SeashoreResult seashore_traced(const Book& book, int m);
SubBook seashore(const Book& book, int m);

} // namespace boib

#endif // BOIB_SEASHORE_HPP
