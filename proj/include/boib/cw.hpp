// An explicit mod-2 cell complex homotopy equivalent to |W|.
//
// Pages retract onto their base surfaces, bindings onto their core circles,
// and each vertical annulus becomes a mapping-cylinder rectangle between its
// two core maps. Cells:
//
//   0-cells  one vertex per page, one per binding
//   1-cells  per page: 2g handle loops (or c crosscap loops) and one loop per
//            boundary circle; per binding: its core loop; per annulus: a
//            connector from the page vertex to the binding vertex
//   2-cells  per page: the surface polygon; per annulus: the rectangle
//            circle^cover . connector . core^degree . connector^-1
//
// Mod 2 the handle and crosscap letters cancel, so the surface cell bounds the
// sum of its circle loops, and an annulus cell bounds
// cover * circle + degree * core.

#ifndef BOIB_CW_HPP
#define BOIB_CW_HPP

#include "boib/book.hpp"
#include "boib/boundary.hpp"
#include "boib/f2.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace boib {

enum class CellKind
{
    page_vertex,
    binding_vertex,
    handle_loop,
    circle_loop,
    core_loop,
    connector,
    surface,
    annulus,
};

struct Cell
{
    CellKind kind;
    std::size_t owner = 0;  ///< page, binding or annulus index
    std::size_t slot = 0;   ///< handle or circle number within the page
    std::string label;
    /// Cells one dimension down met by the attaching map, whether or not
    /// they survive mod 2.
    std::vector<std::size_t> faces;
};

/// Index sets of cells, one list per dimension.
struct CellSelection
{
    std::vector<std::size_t> vertices;
    std::vector<std::size_t> edges;
    std::vector<std::size_t> faces;
};

class CWModel
{
public:
    std::vector<Cell> vertices;
    std::vector<Cell> edges;
    std::vector<Cell> twocells;
    F2Matrix boundary1;  ///< rows: vertices, columns: edges
    F2Matrix boundary2;  ///< rows: edges, columns: 2-cells

    std::size_t page_vertex(std::size_t page) const { return page; }
    std::size_t binding_vertex(std::size_t binding) const { return page_count_ + binding; }
    std::size_t core_edge(std::size_t binding) const { return core_begin_ + binding; }
    std::size_t circle_edge(std::size_t page, std::size_t circle) const;
    std::size_t connector_edge(std::size_t annulus) const { return connector_begin_ + annulus; }
    std::size_t surface_cell(std::size_t page) const { return page; }
    std::size_t annulus_cell(std::size_t annulus) const { return page_count_ + annulus; }
    /// Handle and circle loops of a page, as edge indices.
    std::vector<std::size_t> page_edges(std::size_t page) const;

    /// V - E + F.
    long euler_characteristic() const;

private:
    friend CWModel build_cw(const Book& book);

    std::size_t page_count_ = 0;
    std::size_t core_begin_ = 0;
    std::size_t connector_begin_ = 0;
    std::vector<std::size_t> page_edge_begin_;
    std::vector<std::size_t> handle_count_;
};

/// Throws InvalidBook unless validate(book, permissive) is clean.
CWModel build_cw(const Book& book);

struct HomologyRanks
{
    std::size_t h0 = 0;
    std::size_t h1 = 0;
    std::size_t h2 = 0;

    friend bool operator==(const HomologyRanks&, const HomologyRanks&) = default;
};

std::string to_string(const HomologyRanks& ranks);

HomologyRanks homology_ranks(const CWModel& model);

/// Homology of the quotient complex with the selected cells deleted. Throws
/// NotASubcomplex if a selected cell has an unselected face.
HomologyRanks relative_ranks(const CWModel& model, const CellSelection& sub);

/// Cells of |sub|: its pages with their loops and surfaces, its bindings with
/// their cores, and the annuli of its pages.
CellSelection subbook_cells(const Book& book, const CWModel& model, const SubBook& sub);

/// Vertices and core loops of the listed bindings.
CellSelection binding_cells(const Book& book, const CWModel& model, const BindingSet& bindings);

HomologyRanks relative_ranks(const Book& book, const SubBook& sub);
HomologyRanks relative_ranks(const Book& book, const BindingSet& bindings);

// ---------------------------------------------------------------------------

enum class CheckStatus
{
    pass,
    pass_vacuous,
    fail,
    not_applicable,
};

std::string_view to_string(CheckStatus status);

struct BoundCheck
{
    std::string name;
    CheckStatus status = CheckStatus::not_applicable;
    std::string detail;
};

struct BoundReport
{
    std::vector<BoundCheck> checks;

    /// Any failed check: on a strict-valid book that is a bug in the model.
    bool fatal() const;
    const BoundCheck* find(std::string_view name) const;
    std::string to_string() const;
};

/// Rank bounds on a strict-valid book:
///   "h1-bound"       connected book: h1 <= 2 chibar + 1
///   "rel-h1-bound"   connected book and non-empty connected sub-book, every
///                    page of chibar 1: rel h1 <= 2 p1 (p1 = pages outside)
///   "rel-h2-bound"   same hypotheses: rel h2 <= p1
///   "half-chibar-bound"   connected book, chibar = 2m: h2 <= m-1 implies h1 <= 3m
///   "euler"          h0 - h1 + h2 = -chibar
/// Checks whose hypotheses do not hold are reported not_applicable.
/// Throws PreconditionViolated if the book is not strict-valid.
BoundReport bound_checks(const Book& book, const std::optional<SubBook>& sub = std::nullopt);

} // namespace boib

#endif // BOIB_CW_HPP
