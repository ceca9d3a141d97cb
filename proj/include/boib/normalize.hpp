#ifndef BOIB_NORMALIZE_HPP
#define BOIB_NORMALIZE_HPP

#include "boib/book.hpp"

namespace boib {

/// Splits every page of chibar k > 1 into a path of k pages of chibar 1,
/// consecutive fragments joined by a fresh degree-1 binding of valence 2.
///
/// Fragment ids are "<page>~<i>" (i from 1), link bindings "<page>~L<i>".
/// The page's annuli move onto the fragments in order, filling each fragment
/// up to three boundary circles (links included): a chibar-1 surface has at
/// most three. When the page has at most two annuli they all land on the first
/// fragment. Fragment bases are synthetic: one circle is a punctured torus, two
/// a punctured Moebius band, three a pair of pants.
///
/// Total chibar, connected components and dim ker delta (B0 empty) are
/// preserved: a kernel element must be constant along each path, so every
/// original binding sees the same parity as before.
///
/// Throws PageWithNonpositiveChibar if some page has chibar <= 0, and
/// InvalidBook when a page has more annuli than its base has room for.
Book normalize_pages(const Book& book);

} // namespace boib

#endif // BOIB_NORMALIZE_HPP
