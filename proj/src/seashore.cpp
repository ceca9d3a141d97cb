#include "boib/seashore.hpp"

#include "boib/boundary.hpp"
#include "boib/error.hpp"
#include "boib/lowweight.hpp"

#include <algorithm>

namespace boib {

SubBook grow_subbook(const Book& book, const SubBook& sub)
{
    if (sub.empty())
        throw PreconditionViolated("cannot grow an empty sub-book");
    std::vector<bool> inside(book.page_count(), false);
    for (std::size_t p : sub.pages)
        inside.at(p) = true;
    std::vector<bool> touched(book.binding_count(), false);
    for (std::size_t b : sub.bindings)
        touched.at(b) = true;

    for (std::size_t p = 0; p < book.page_count(); ++p) {
        if (inside[p])
            continue;
        const auto& annuli = book.annuli_of_page(p);
        const bool adjacent = std::any_of(annuli.begin(), annuli.end(), [&](std::size_t a) {
            return touched[book.annulus_binding(a)];
        });
        if (adjacent) {
            std::vector<std::size_t> pages = sub.pages;
            pages.push_back(p);
            return induced_subbook(book, pages);
        }
    }
    throw NoAdjacentPage("no page outside the sub-book shares a binding with it");
}

void check_seashore_hypotheses(const Book& book, int m)
{
    if (m < 2)
        throw PreconditionViolated("seashore: m must be at least 2, got " + std::to_string(m));
    if (!is_connected(book))
        throw PreconditionViolated("seashore: book is not connected");
    for (const auto& page : book.pages())
        if (page.base.chibar() != 1)
            throw PreconditionViolated("seashore: page '" + page.id + "' has chibar "
                                       + std::to_string(page.base.chibar()) + ", expected 1");
    if (book.chibar() != 2 * m)
        throw PreconditionViolated("seashore: book chibar " + std::to_string(book.chibar())
                                   + " differs from 2m = " + std::to_string(2 * m));
    const std::size_t h2 = h2_rank(book);
    if (h2 < static_cast<std::size_t>(m))
        throw PreconditionViolated("seashore: H2 rank " + std::to_string(h2)
                                   + " is below m = " + std::to_string(m));
}

SeashoreResult seashore_traced(const Book& book, int m)
{
    check_seashore_hypotheses(book, m);
    const auto half = static_cast<std::size_t>(m);

    SeashoreResult result;
    SubspaceProblem problem{book.page_count(), half, delta(book).kernel_basis()};
    result.alpha = find_small_support(problem);

    const auto support = result.alpha.support();
    result.support = induced_subbook(book, support);
    const auto parts = components(book, result.support);
    result.seed = parts.front();
    result.seed_cycle = F2Vector::from_support(book.page_count(), result.seed.pages);

    // The restriction is a cycle exactly when the components share no binding.
    if (!delta(book).apply(result.seed_cycle).is_zero())
        throw InternalContradiction("restriction of a cycle to a component is not a cycle");

    SubBook current = result.seed;
    result.growth.push_back(current);
    while (current.pages.size() < half) {
        current = grow_subbook(book, current);
        result.growth.push_back(current);
    }
    result.subbook = current;
    return result;
}

SubBook seashore(const Book& book, int m)
{
    return seashore_traced(book, m).subbook;
}

} // namespace boib
