#include "boib/cw.hpp"

#include "boib/error.hpp"

#include <algorithm>
#include <sstream>

namespace boib {

std::size_t CWModel::circle_edge(std::size_t page, std::size_t circle) const
{
    return page_edge_begin_.at(page) + handle_count_.at(page) + circle;
}

std::vector<std::size_t> CWModel::page_edges(std::size_t page) const
{
    const std::size_t begin = page_edge_begin_.at(page);
    const std::size_t end =
        page + 1 < page_count_ ? page_edge_begin_[page + 1] : core_begin_;
    std::vector<std::size_t> out;
    for (std::size_t e = begin; e < end; ++e)
        out.push_back(e);
    return out;
}

long CWModel::euler_characteristic() const
{
    return static_cast<long>(vertices.size()) - static_cast<long>(edges.size())
           + static_cast<long>(twocells.size());
}

CWModel build_cw(const Book& book)
{
    const auto report = validate(book, ValidationMode::permissive);
    if (!report.ok())
        throw InvalidBook("cannot build a cell model of an invalid book:\n" + report.to_string());

    CWModel m;
    m.page_count_ = book.page_count();

    for (std::size_t p = 0; p < book.page_count(); ++p)
        m.vertices.push_back(Cell{CellKind::page_vertex, p, 0, "v_" + book.pages()[p].id, {}});
    for (std::size_t b = 0; b < book.binding_count(); ++b)
        m.vertices.push_back(
            Cell{CellKind::binding_vertex, b, 0, "v_" + book.bindings()[b].id, {}});

    for (std::size_t p = 0; p < book.page_count(); ++p) {
        const auto& page = book.pages()[p];
        const auto handles = static_cast<std::size_t>(
            page.base.orientable ? 2 * page.base.genus_or_crosscaps : page.base.genus_or_crosscaps);
        m.page_edge_begin_.push_back(m.edges.size());
        m.handle_count_.push_back(handles);
        for (std::size_t h = 0; h < handles; ++h)
            m.edges.push_back(Cell{CellKind::handle_loop, p, h,
                                   "h" + std::to_string(h) + "_" + page.id, {m.page_vertex(p)}});
        for (std::size_t c = 0; c < static_cast<std::size_t>(page.base.boundary_circles); ++c)
            m.edges.push_back(Cell{CellKind::circle_loop, p, c,
                                   "d" + std::to_string(c) + "_" + page.id, {m.page_vertex(p)}});
    }
    m.core_begin_ = m.edges.size();
    for (std::size_t b = 0; b < book.binding_count(); ++b)
        m.edges.push_back(
            Cell{CellKind::core_loop, b, 0, "c_" + book.bindings()[b].id, {m.binding_vertex(b)}});
    m.connector_begin_ = m.edges.size();
    for (std::size_t a = 0; a < book.annuli().size(); ++a)
        m.edges.push_back(Cell{CellKind::connector, a, 0, "e_" + book.annuli()[a].id,
                               {m.page_vertex(book.annulus_page(a)),
                                m.binding_vertex(book.annulus_binding(a))}});

    std::vector<F2Vector> d2_columns;
    for (std::size_t p = 0; p < book.page_count(); ++p) {
        const auto faces = m.page_edges(p);
        std::vector<std::size_t> circles;
        for (std::size_t c = 0; c < static_cast<std::size_t>(book.pages()[p].base.boundary_circles);
             ++c)
            circles.push_back(m.circle_edge(p, c));
        m.twocells.push_back(Cell{CellKind::surface, p, 0, "S_" + book.pages()[p].id, faces});
        d2_columns.push_back(F2Vector::from_support(m.edges.size(), circles));
    }
    for (std::size_t a = 0; a < book.annuli().size(); ++a) {
        const auto& ann = book.annuli()[a];
        const std::size_t p = book.annulus_page(a);
        const std::size_t b = book.annulus_binding(a);
        const std::size_t circle = m.circle_edge(p, static_cast<std::size_t>(ann.circle_index));
        const std::size_t core = m.core_edge(b);
        m.twocells.push_back(
            Cell{CellKind::annulus, a, 0, "A_" + ann.id, {circle, m.connector_edge(a), core}});
        std::vector<std::size_t> support;
        if (ann.cover_degree % 2 != 0)
            support.push_back(circle);
        if (book.bindings()[b].degree % 2 != 0)
            support.push_back(core);
        d2_columns.push_back(F2Vector::from_support(m.edges.size(), support));
    }
    m.boundary2 = F2Matrix(m.edges.size(), std::move(d2_columns)).transposed();

    std::vector<F2Vector> d1_columns;
    for (const auto& edge : m.edges) {
        std::vector<std::size_t> support;
        if (edge.kind == CellKind::connector)
            support = edge.faces;
        d1_columns.push_back(F2Vector::from_support(m.vertices.size(), support));
    }
    m.boundary1 = F2Matrix(m.vertices.size(), std::move(d1_columns)).transposed();
    return m;
}

std::string to_string(const HomologyRanks& ranks)
{
    std::ostringstream os;
    os << "h0=" << ranks.h0 << " h1=" << ranks.h1 << " h2=" << ranks.h2;
    return os.str();
}

namespace {

HomologyRanks ranks_of(std::size_t v, std::size_t e, std::size_t f, const F2Matrix& d1,
                       const F2Matrix& d2)
{
    const std::size_t r1 = d1.rank();
    const std::size_t r2 = d2.rank();
    return HomologyRanks{v - r1, e - r1 - r2, f - r2};
}

} // namespace

HomologyRanks homology_ranks(const CWModel& model)
{
    return ranks_of(model.vertices.size(), model.edges.size(), model.twocells.size(),
                    model.boundary1, model.boundary2);
}

HomologyRanks relative_ranks(const CWModel& model, const CellSelection& sub)
{
    std::vector<bool> in_v(model.vertices.size(), false);
    std::vector<bool> in_e(model.edges.size(), false);
    for (std::size_t v : sub.vertices)
        in_v.at(v) = true;
    for (std::size_t e : sub.edges)
        in_e.at(e) = true;
    for (std::size_t e : sub.edges)
        for (std::size_t face : model.edges[e].faces)
            if (!in_v[face])
                throw NotASubcomplex("edge " + model.edges[e].label + " selected without vertex "
                                     + model.vertices[face].label);
    for (std::size_t f : sub.faces)
        for (std::size_t face : model.twocells.at(f).faces)
            if (!in_e[face])
                throw NotASubcomplex("cell " + model.twocells[f].label + " selected without edge "
                                     + model.edges[face].label);

    const F2Matrix d1 = model.boundary1.without(sub.vertices, sub.edges);
    const F2Matrix d2 = model.boundary2.without(sub.edges, sub.faces);
    return ranks_of(model.vertices.size() - sub.vertices.size(),
                    model.edges.size() - sub.edges.size(),
                    model.twocells.size() - sub.faces.size(), d1, d2);
}

CellSelection subbook_cells(const Book& book, const CWModel& model, const SubBook& sub)
{
    CellSelection cells;
    for (std::size_t p : sub.pages) {
        cells.vertices.push_back(model.page_vertex(p));
        for (std::size_t e : model.page_edges(p))
            cells.edges.push_back(e);
        cells.faces.push_back(model.surface_cell(p));
        for (std::size_t a : book.annuli_of_page(p)) {
            cells.edges.push_back(model.connector_edge(a));
            cells.faces.push_back(model.annulus_cell(a));
        }
    }
    for (std::size_t b : sub.bindings) {
        cells.vertices.push_back(model.binding_vertex(b));
        cells.edges.push_back(model.core_edge(b));
    }
    std::sort(cells.vertices.begin(), cells.vertices.end());
    std::sort(cells.edges.begin(), cells.edges.end());
    std::sort(cells.faces.begin(), cells.faces.end());
    return cells;
}

CellSelection binding_cells(const Book& book, const CWModel& model, const BindingSet& bindings)
{
    CellSelection cells;
    for (const auto& id : bindings) {
        const std::size_t b = book.binding_index(id);
        cells.vertices.push_back(model.binding_vertex(b));
        cells.edges.push_back(model.core_edge(b));
    }
    std::sort(cells.vertices.begin(), cells.vertices.end());
    std::sort(cells.edges.begin(), cells.edges.end());
    return cells;
}

HomologyRanks relative_ranks(const Book& book, const SubBook& sub)
{
    const CWModel model = build_cw(book);
    return relative_ranks(model, subbook_cells(book, model, sub));
}

HomologyRanks relative_ranks(const Book& book, const BindingSet& bindings)
{
    const CWModel model = build_cw(book);
    return relative_ranks(model, binding_cells(book, model, bindings));
}

// ---------------------------------------------------------------------------

std::string_view to_string(CheckStatus status)
{
    switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::pass_vacuous: return "pass-vacuous";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::not_applicable: return "n/a";
    }
    return "unknown";
}

bool BoundReport::fatal() const
{
    return std::any_of(checks.begin(), checks.end(),
                       [](const BoundCheck& c) { return c.status == CheckStatus::fail; });
}

const BoundCheck* BoundReport::find(std::string_view name) const
{
    for (const auto& c : checks)
        if (c.name == name)
            return &c;
    return nullptr;
}

std::string BoundReport::to_string() const
{
    std::ostringstream os;
    for (const auto& c : checks)
        os << c.name << ": " << boib::to_string(c.status) << " (" << c.detail << ")\n";
    return os.str();
}

BoundReport bound_checks(const Book& book, const std::optional<SubBook>& sub)
{
    const auto validity = validate(book, ValidationMode::strict);
    if (!validity.ok())
        throw PreconditionViolated("bound checks need a strict-valid book:\n"
                                   + validity.to_string());

    const CWModel model = build_cw(book);
    const HomologyRanks h = homology_ranks(model);
    const long chibar = book.chibar();
    const bool connected = is_connected(book);
    const bool unit_pages = std::all_of(book.pages().begin(), book.pages().end(),
                                        [](const Page& p) { return p.base.chibar() == 1; });

    auto verdict = [](bool ok) { return ok ? CheckStatus::pass : CheckStatus::fail; };
    auto num = [](auto x) { return std::to_string(x); };

    BoundReport report;

    {
        const long lhs = static_cast<long>(h.h0) - static_cast<long>(h.h1) + static_cast<long>(h.h2);
        report.checks.push_back({"euler", verdict(lhs == -chibar),
                                 "h0-h1+h2 = " + num(lhs) + ", -chibar = " + num(-chibar)});
    }

    if (connected)
        report.checks.push_back({"h1-bound", verdict(static_cast<long>(h.h1) <= 2 * chibar + 1),
                                 "h1 = " + num(h.h1) + " <= " + num(2 * chibar + 1)});
    else
        report.checks.push_back({"h1-bound", CheckStatus::not_applicable, "book not connected"});

    if (sub) {
        if (connected && unit_pages && is_connected(book, *sub)) {
            const HomologyRanks rel = relative_ranks(model, subbook_cells(book, model, *sub));
            const std::size_t p1 = book.page_count() - sub->pages.size();
            report.checks.push_back({"rel-h1-bound", verdict(rel.h1 <= 2 * p1),
                                     "rel h1 = " + num(rel.h1) + " <= 2p1 = " + num(2 * p1)});
            report.checks.push_back({"rel-h2-bound", verdict(rel.h2 <= p1),
                                     "rel h2 = " + num(rel.h2) + " <= p1 = " + num(p1)});
        } else {
            const std::string why = "needs connected book, connected sub-book, unit pages";
            report.checks.push_back({"rel-h1-bound", CheckStatus::not_applicable, why});
            report.checks.push_back({"rel-h2-bound", CheckStatus::not_applicable, why});
        }
    }

    if (connected && chibar > 0 && chibar % 2 == 0) {
        const long m = chibar / 2;
        if (static_cast<long>(h.h2) <= m - 1)
            report.checks.push_back({"half-chibar-bound", verdict(static_cast<long>(h.h1) <= 3 * m),
                                     "h2 = " + num(h.h2) + " <= m-1, h1 = " + num(h.h1)
                                         + " <= 3m = " + num(3 * m)});
        else
            report.checks.push_back({"half-chibar-bound", CheckStatus::pass_vacuous,
                                     "h2 = " + num(h.h2) + " > m-1 = " + num(m - 1)});
    } else {
        report.checks.push_back(
            {"half-chibar-bound", CheckStatus::not_applicable, "needs connected book with even chibar"});
    }
    return report;
}

} // namespace boib
