#include "boib/normalize.hpp"

#include "boib/error.hpp"

#include <set>

namespace boib {

namespace {

SurfaceSignature chibar_one_surface(int circles)
{
    switch (circles) {
    case 1: return SurfaceSignature{true, 1, 1};
    case 2: return SurfaceSignature{false, 1, 2};
    case 3: return SurfaceSignature{true, 0, 3};
    default: break;
    }
    throw InternalContradiction("no chibar-1 surface has " + std::to_string(circles)
                                + " boundary circles");
}

class FreshIds
{
public:
    explicit FreshIds(const Book& book)
    {
        for (const auto& b : book.bindings())
            taken_.insert(b.id);
        for (const auto& p : book.pages())
            taken_.insert(p.id);
        for (const auto& a : book.annuli())
            taken_.insert(a.id);
    }

    std::string make(std::string wanted)
    {
        while (!taken_.insert(wanted).second)
            wanted += '\'';
        return wanted;
    }

private:
    std::set<std::string> taken_;
};

} // namespace

Book normalize_pages(const Book& book)
{
    for (const auto& page : book.pages())
        if (page.base.chibar() <= 0)
            throw PageWithNonpositiveChibar("page '" + page.id + "' has chibar "
                                            + std::to_string(page.base.chibar()));

    FreshIds fresh(book);
    std::vector<Binding> bindings = book.bindings();
    std::vector<Page> pages;
    std::vector<Annulus> annuli = book.annuli();
    std::vector<Annulus> link_annuli;

    for (std::size_t p = 0; p < book.page_count(); ++p) {
        const Page& page = book.pages()[p];
        const int k = page.base.chibar();
        if (k == 1) {
            pages.push_back(page);
            continue;
        }

        const auto& own = book.annuli_of_page(p);
        if (own.size() > static_cast<std::size_t>(k) + 2)
            throw InvalidBook("page '" + page.id + "' carries " + std::to_string(own.size())
                              + " annuli, more than a chibar-" + std::to_string(k)
                              + " surface has boundary circles");

        std::vector<std::string> fragment_ids;
        for (int i = 1; i <= k; ++i)
            fragment_ids.push_back(fresh.make(page.id + "~" + std::to_string(i)));

        // links[i] joins fragment i and i+1.
        std::vector<int> circles(static_cast<std::size_t>(k), 0);
        for (int i = 0; i + 1 < k; ++i) {
            const std::string link = fresh.make(page.id + "~L" + std::to_string(i + 1));
            bindings.push_back(Binding{link, 1});
        }

        // Distribute the page's annuli; capacity 3 minus the fragment's links.
        std::size_t next = 0;
        for (int i = 0; i < k; ++i) {
            const int links = (i == 0 ? 0 : 1) + (i + 1 < k ? 1 : 0);
            int placed = 0;
            while (next < own.size() && placed + links < 3) {
                Annulus& ann = annuli[own[next]];
                ann.page = fragment_ids[static_cast<std::size_t>(i)];
                ann.circle_index = placed;
                ++placed;
                ++next;
            }
            circles[static_cast<std::size_t>(i)] = placed;
        }
        if (next != own.size())
            throw InternalContradiction("annulus distribution overflowed the fragment path");

        const std::size_t first_link = bindings.size() - static_cast<std::size_t>(k - 1);
        for (int i = 0; i + 1 < k; ++i) {
            const std::string& link = bindings[first_link + static_cast<std::size_t>(i)].id;
            const auto left = static_cast<std::size_t>(i);
            const auto right = left + 1;
            link_annuli.push_back(Annulus{fresh.make(link + "a"), fragment_ids[left], link,
                                          circles[left]++, 1});
            link_annuli.push_back(Annulus{fresh.make(link + "b"), fragment_ids[right], link,
                                          circles[right]++, 1});
        }

        for (int i = 0; i < k; ++i)
            pages.push_back(Page{fragment_ids[static_cast<std::size_t>(i)],
                                 chibar_one_surface(circles[static_cast<std::size_t>(i)])});
    }

    annuli.insert(annuli.end(), link_annuli.begin(), link_annuli.end());
    return Book(std::move(bindings), std::move(pages), std::move(annuli));
}

} // namespace boib
