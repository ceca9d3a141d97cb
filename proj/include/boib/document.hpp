// Text formats read and written by the command line tool.
//
// Book documents are JSON objects with three optional arrays:
//
//   {
//     "bindings": [ {"id": "B", "degree": 1} ],
//     "pages":    [ {"id": "P1", "orientable": true, "genus_or_crosscaps": 1,
//                    "boundary_circles": 1} ],
//     "annuli":   [ {"id": "A1", "page": "P1", "binding": "B",
//                    "circle_index": 0, "cover_degree": 1} ]
//   }
//
// Set families are {"n": 7, "k": 1, "sets": [[0,1,2], ...]}. Vector lists
// (bases, matrices) are one '0'/'1' string per line; blank lines and lines
// starting with '#' are skipped.

#ifndef BOIB_DOCUMENT_HPP
#define BOIB_DOCUMENT_HPP

#include "boib/book.hpp"
#include "boib/f2.hpp"
#include "boib/lowweight.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace boib {

/// Throws SyntaxError (with line) for malformed text or wrong field types,
/// UnknownId for dangling references, InvalidBook for duplicate ids. An empty
/// or whitespace-only document is the empty book.
Book parse_book(std::string_view text);

/// As above, then throws InvalidBook if validate(book, mode) reports anything.
Book parse_book(std::string_view text, ValidationMode mode);

/// Deterministic rendering; parse_book(print_book(b)) == b.
std::string print_book(const Book& book);

SetFamily parse_set_family(std::string_view text);
std::string print_set_family(const SetFamily& family);

std::vector<F2Vector> parse_vectors(std::string_view text);
std::string print_vectors(const std::vector<F2Vector>& vectors);

/// Whole file as a string; "-" reads standard input. Throws InputError.
std::string read_text_file(const std::string& path);

} // namespace boib

#endif // BOIB_DOCUMENT_HPP
