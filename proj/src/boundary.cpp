#include "boib/boundary.hpp"

#include "boib/error.hpp"

namespace boib {

std::vector<std::size_t> delta_rows(const Book& book, const BindingSet& b0)
{
    std::vector<bool> excluded(book.binding_count(), false);
    for (const auto& id : b0)
        excluded[book.binding_index(id)] = true;
    std::vector<std::size_t> rows;
    for (std::size_t b = 0; b < book.binding_count(); ++b)
        if (!excluded[b])
            rows.push_back(b);
    return rows;
}

F2Matrix delta(const Book& book, const BindingSet& b0)
{
    const auto rows = delta_rows(book, b0);
    std::vector<F2Vector> out;
    out.reserve(rows.size());
    for (std::size_t b : rows) {
        const int degree = book.bindings()[b].degree;
        std::vector<int> multiplicity(book.page_count(), 0);
        for (std::size_t a : book.annuli_of_binding(b))
            ++multiplicity[book.annulus_page(a)];
        std::vector<std::size_t> support;
        for (std::size_t p = 0; p < book.page_count(); ++p)
            if ((multiplicity[p] * degree) % 2 != 0)
                support.push_back(p);
        out.push_back(F2Vector::from_support(book.page_count(), support));
    }
    return F2Matrix(book.page_count(), std::move(out));
}

std::size_t h2_rank(const Book& book, const BindingSet& b0)
{
    return book.page_count() - delta(book, b0).rank();
}

} // namespace boib
