#include "boib/book.hpp"

#include "boib/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace boib {

int SurfaceSignature::euler_characteristic() const noexcept
{
    return orientable ? 2 - 2 * genus_or_crosscaps - boundary_circles
                      : 2 - genus_or_crosscaps - boundary_circles;
}

Book::Book(std::vector<Binding> bindings, std::vector<Page> pages, std::vector<Annulus> annuli)
    : bindings_(std::move(bindings)), pages_(std::move(pages)), annuli_(std::move(annuli))
{
    for (std::size_t i = 0; i < bindings_.size(); ++i)
        if (!binding_lookup_.emplace(bindings_[i].id, i).second)
            throw InvalidBook("duplicate binding id '" + bindings_[i].id + "'");
    for (std::size_t i = 0; i < pages_.size(); ++i)
        if (!page_lookup_.emplace(pages_[i].id, i).second)
            throw InvalidBook("duplicate page id '" + pages_[i].id + "'");

    std::set<std::string> annulus_ids;
    by_page_.resize(pages_.size());
    by_binding_.resize(bindings_.size());
    for (std::size_t a = 0; a < annuli_.size(); ++a) {
        const auto& ann = annuli_[a];
        if (!annulus_ids.insert(ann.id).second)
            throw InvalidBook("duplicate annulus id '" + ann.id + "'");
        const auto p = page_lookup_.find(ann.page);
        if (p == page_lookup_.end())
            throw UnknownId("page", ann.page);
        const auto b = binding_lookup_.find(ann.binding);
        if (b == binding_lookup_.end())
            throw UnknownId("binding", ann.binding);
        annulus_page_.push_back(p->second);
        annulus_binding_.push_back(b->second);
        by_page_[p->second].push_back(a);
        by_binding_[b->second].push_back(a);
    }
}

std::optional<std::size_t> Book::find_page(std::string_view id) const
{
    const auto it = page_lookup_.find(std::string(id));
    if (it == page_lookup_.end())
        return std::nullopt;
    return it->second;
}

std::optional<std::size_t> Book::find_binding(std::string_view id) const
{
    const auto it = binding_lookup_.find(std::string(id));
    if (it == binding_lookup_.end())
        return std::nullopt;
    return it->second;
}

std::size_t Book::page_index(std::string_view id) const
{
    if (auto p = find_page(id))
        return *p;
    throw UnknownId("page", std::string(id));
}

std::size_t Book::binding_index(std::string_view id) const
{
    if (auto b = find_binding(id))
        return *b;
    throw UnknownId("binding", std::string(id));
}

int Book::chibar() const noexcept
{
    int total = 0;
    for (const auto& p : pages_)
        total += p.base.chibar();
    return total;
}

// ---------------------------------------------------------------------------

std::string_view to_string(ViolationKind kind)
{
    switch (kind) {
    case ViolationKind::nonpositive_degree: return "nonpositive-degree";
    case ViolationKind::binding_meets_no_page: return "binding-meets-no-page";
    case ViolationKind::bad_signature: return "bad-signature";
    case ViolationKind::positive_euler_characteristic: return "positive-euler-characteristic";
    case ViolationKind::zero_euler_characteristic: return "zero-euler-characteristic";
    case ViolationKind::annulus_circle_mismatch: return "annulus-circle-mismatch";
    case ViolationKind::circle_index_out_of_range: return "circle-index-out-of-range";
    case ViolationKind::duplicate_circle: return "duplicate-circle";
    case ViolationKind::bad_cover_degree: return "bad-cover-degree";
    }
    return "unknown";
}

bool ValidationReport::has(ViolationKind kind) const
{
    return std::any_of(violations.begin(), violations.end(),
                       [kind](const Violation& v) { return v.kind == kind; });
}

std::string ValidationReport::to_string() const
{
    std::ostringstream os;
    for (const auto& v : violations)
        os << boib::to_string(v.kind) << " [" << v.subject << "]: " << v.message << '\n';
    return os.str();
}

ValidationReport validate(const Book& book, ValidationMode mode)
{
    ValidationReport report;
    auto add = [&report](ViolationKind kind, const std::string& subject, std::string message) {
        report.violations.push_back(Violation{kind, subject, std::move(message)});
    };

    for (std::size_t b = 0; b < book.binding_count(); ++b) {
        const auto& binding = book.bindings()[b];
        if (binding.degree < 1)
            add(ViolationKind::nonpositive_degree, binding.id,
                "degree " + std::to_string(binding.degree) + " < 1");
        if (book.valence(b) == 0)
            add(ViolationKind::binding_meets_no_page, binding.id, "binding meets no page");
    }

    for (std::size_t p = 0; p < book.page_count(); ++p) {
        const auto& page = book.pages()[p];
        const auto& base = page.base;
        if (base.genus_or_crosscaps < 0 || base.boundary_circles < 1
            || (!base.orientable && base.genus_or_crosscaps < 1)) {
            add(ViolationKind::bad_signature, page.id,
                "base needs genus >= 0 (crosscaps >= 1) and at least one boundary circle");
            continue;
        }
        const int chi = base.euler_characteristic();
        if (chi > 0)
            add(ViolationKind::positive_euler_characteristic, page.id,
                "base Euler characteristic " + std::to_string(chi) + " > 0");
        else if (chi == 0 && mode == ValidationMode::strict)
            add(ViolationKind::zero_euler_characteristic, page.id,
                "strict mode requires negative Euler characteristic");

        const auto& annuli = book.annuli_of_page(p);
        if (annuli.size() != static_cast<std::size_t>(base.boundary_circles))
            add(ViolationKind::annulus_circle_mismatch, page.id,
                std::to_string(base.boundary_circles) + " boundary circles but "
                    + std::to_string(annuli.size()) + " annuli");
    }

    std::set<std::pair<std::size_t, int>> circles;
    for (std::size_t a = 0; a < book.annuli().size(); ++a) {
        const auto& ann = book.annuli()[a];
        const std::size_t p = book.annulus_page(a);
        const int circles_on_page = book.pages()[p].base.boundary_circles;
        if (ann.circle_index < 0 || ann.circle_index >= circles_on_page)
            add(ViolationKind::circle_index_out_of_range, ann.id,
                "circle index " + std::to_string(ann.circle_index) + " not below "
                    + std::to_string(circles_on_page));
        if (!circles.emplace(p, ann.circle_index).second)
            add(ViolationKind::duplicate_circle, ann.id,
                "circle " + std::to_string(ann.circle_index) + " of page " + ann.page
                    + " already carries an annulus");
        if (ann.cover_degree != 1 && ann.cover_degree != 2)
            add(ViolationKind::bad_cover_degree, ann.id,
                "cover degree " + std::to_string(ann.cover_degree) + " is not 1 or 2");
    }
    return report;
}

// ---------------------------------------------------------------------------

SubBook induced_subbook(const Book& book, std::span<const std::size_t> pages)
{
    std::set<std::size_t> page_set;
    std::set<std::size_t> binding_set;
    for (std::size_t p : pages) {
        if (p >= book.page_count())
            throw UnknownId("page", "#" + std::to_string(p));
        page_set.insert(p);
        for (std::size_t a : book.annuli_of_page(p))
            binding_set.insert(book.annulus_binding(a));
    }
    return SubBook{{page_set.begin(), page_set.end()}, {binding_set.begin(), binding_set.end()}};
}

SubBook induced_subbook(const Book& book, std::span<const std::string> page_ids)
{
    std::vector<std::size_t> pages;
    for (const auto& id : page_ids)
        pages.push_back(book.page_index(id));
    return induced_subbook(book, pages);
}

SubBook whole_book(const Book& book)
{
    SubBook s;
    s.pages.resize(book.page_count());
    std::iota(s.pages.begin(), s.pages.end(), std::size_t{0});
    s.bindings.resize(book.binding_count());
    std::iota(s.bindings.begin(), s.bindings.end(), std::size_t{0});
    return s;
}

SubBook complement(const Book& book, const SubBook& sub)
{
    std::vector<bool> inside(book.page_count(), false);
    for (std::size_t p : sub.pages)
        inside.at(p) = true;
    std::vector<std::size_t> rest;
    for (std::size_t p = 0; p < book.page_count(); ++p)
        if (!inside[p])
            rest.push_back(p);
    return induced_subbook(book, rest);
}

int chibar(const Book& book, const SubBook& sub)
{
    int total = 0;
    for (std::size_t p : sub.pages)
        total += book.pages().at(p).base.chibar();
    return total;
}

std::vector<SubBook> components(const Book& book, const SubBook& sub)
{
    // Union-find over the sub-book's pages, joined through shared bindings.
    std::vector<std::size_t> parent(book.page_count());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&parent](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };

    std::vector<bool> inside(book.page_count(), false);
    for (std::size_t p : sub.pages)
        inside.at(p) = true;

    for (std::size_t b = 0; b < book.binding_count(); ++b) {
        std::optional<std::size_t> first;
        for (std::size_t a : book.annuli_of_binding(b)) {
            const std::size_t p = book.annulus_page(a);
            if (!inside[p])
                continue;
            if (!first)
                first = p;
            else
                parent[find(p)] = find(*first);
        }
    }

    std::map<std::size_t, std::vector<std::size_t>> groups;
    std::map<std::size_t, std::size_t> lowest;
    for (std::size_t p : sub.pages) {
        const std::size_t root = find(p);
        groups[root].push_back(p);
        lowest.emplace(root, p);
    }
    std::vector<std::pair<std::size_t, std::size_t>> order;
    for (const auto& [root, low] : lowest)
        order.emplace_back(low, root);
    std::sort(order.begin(), order.end());

    std::vector<SubBook> out;
    for (const auto& [low, root] : order)
        out.push_back(induced_subbook(book, groups[root]));
    return out;
}

std::vector<SubBook> components(const Book& book)
{
    return components(book, whole_book(book));
}

bool is_connected(const Book& book, const SubBook& sub)
{
    return !sub.empty() && components(book, sub).size() == 1;
}

bool is_connected(const Book& book)
{
    return is_connected(book, whole_book(book));
}

Book materialize(const Book& book, const SubBook& sub)
{
    std::vector<bool> inside(book.page_count(), false);
    for (std::size_t p : sub.pages)
        inside.at(p) = true;

    std::vector<Binding> bindings;
    for (std::size_t b : sub.bindings)
        bindings.push_back(book.bindings().at(b));
    std::vector<Page> pages;
    for (std::size_t p : sub.pages)
        pages.push_back(book.pages()[p]);
    std::vector<Annulus> annuli;
    for (std::size_t a = 0; a < book.annuli().size(); ++a)
        if (inside[book.annulus_page(a)])
            annuli.push_back(book.annuli()[a]);
    return Book(std::move(bindings), std::move(pages), std::move(annuli));
}

std::vector<std::string> page_ids(const Book& book, const SubBook& sub)
{
    std::vector<std::string> out;
    for (std::size_t p : sub.pages)
        out.push_back(book.pages().at(p).id);
    return out;
}

std::vector<std::string> binding_ids(const Book& book, const SubBook& sub)
{
    std::vector<std::string> out;
    for (std::size_t b : sub.bindings)
        out.push_back(book.bindings().at(b).id);
    return out;
}

Book with_prefix(const Book& book, const std::string& prefix)
{
    auto bindings = book.bindings();
    auto pages = book.pages();
    auto annuli = book.annuli();
    for (auto& b : bindings)
        b.id = prefix + b.id;
    for (auto& p : pages)
        p.id = prefix + p.id;
    for (auto& a : annuli) {
        a.id = prefix + a.id;
        a.page = prefix + a.page;
        a.binding = prefix + a.binding;
    }
    return Book(std::move(bindings), std::move(pages), std::move(annuli));
}

Book disjoint_union(const Book& a, const Book& b)
{
    auto bindings = a.bindings();
    auto pages = a.pages();
    auto annuli = a.annuli();
    bindings.insert(bindings.end(), b.bindings().begin(), b.bindings().end());
    pages.insert(pages.end(), b.pages().begin(), b.pages().end());
    annuli.insert(annuli.end(), b.annuli().begin(), b.annuli().end());
    return Book(std::move(bindings), std::move(pages), std::move(annuli));
}

} // namespace boib
