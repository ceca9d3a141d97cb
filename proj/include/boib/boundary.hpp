// The mod-2 boundary map from pages to bindings.
//
// Pages span the 2-chains, bindings outside B0 the 1-chains. The image of a
// page P is the sum over its vertical annuli A and bindings B not in B0 of
// [A lies on B] * degree(B), taken mod 2. Its kernel has the rank of
// H2(|W|, B0; Z/2).

#ifndef BOIB_BOUNDARY_HPP
#define BOIB_BOUNDARY_HPP

#include "boib/book.hpp"
#include "boib/f2.hpp"

#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace boib {

using BindingSet = std::set<std::string>;

/// Binding indices labelling the rows of delta(book, b0), in book order.
/// Throws UnknownId for ids in b0 that are not bindings of the book.
std::vector<std::size_t> delta_rows(const Book& book, const BindingSet& b0);

/// One column per page, one row per binding outside b0. Entry (B, P) is the
/// number of annuli joining P to B times degree(B), mod 2.
F2Matrix delta(const Book& book, const BindingSet& b0 = {});

/// dim ker delta(book, b0).
std::size_t h2_rank(const Book& book, const BindingSet& b0 = {});

} // namespace boib

#endif // BOIB_BOUNDARY_HPP
