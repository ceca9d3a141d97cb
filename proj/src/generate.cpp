#include "boib/generate.hpp"

#include "boib/error.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace boib {

std::uint64_t Rng::below(std::uint64_t n)
{
    if (n == 0)
        throw std::invalid_argument("Rng::below(0)");
    // Reject the top partial block so every residue is equally likely.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max()
                                - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x = next();
    while (x >= limit)
        x = next();
    return x % n;
}

int Rng::range(int lo, int hi)
{
    if (hi < lo)
        throw std::invalid_argument("Rng::range: empty interval");
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

namespace {

SurfaceSignature pick_signature(Rng& rng, int chibar, int circles)
{
    // orientable: 2g = chibar + 2 - b;  nonorientable: c = chibar + 2 - b >= 1.
    const int slack = chibar + 2 - circles;
    const bool can_orient = slack >= 0 && slack % 2 == 0;
    const bool can_twist = slack >= 1;
    if (can_orient && (!can_twist || rng.coin()))
        return SurfaceSignature{true, slack / 2, circles};
    if (can_twist)
        return SurfaceSignature{false, slack, circles};
    throw InternalContradiction("no surface with chibar " + std::to_string(chibar) + " and "
                                + std::to_string(circles) + " boundary circles");
}

} // namespace

Book gen_random(const GenParams& params)
{
    if (params.page_count == 0)
        throw UnsatisfiableParams("page_count must be at least 1");
    if (params.degree_min < 1 || params.degree_max < params.degree_min)
        throw UnsatisfiableParams("degree range must satisfy 1 <= min <= max");
    if (params.max_page_chibar < 1 && !params.all_pages_chibar_1)
        throw UnsatisfiableParams("max_page_chibar must be at least 1");
    if (params.force_even_degrees && params.degree_max < 2)
        throw UnsatisfiableParams("force_even_degrees needs degree_max >= 2");

    Rng rng(params.seed);
    const std::size_t np = params.page_count;
    const std::size_t nb = params.binding_count;

    std::vector<int> chibar(np);
    std::vector<int> capacity(np);
    for (std::size_t p = 0; p < np; ++p) {
        chibar[p] = params.all_pages_chibar_1
                        ? 1
                        : rng.range(params.allow_flat_pages ? 0 : 1, params.max_page_chibar);
        capacity[p] = chibar[p] + 2;
    }

    // Boundary circle counts: one each, then grow towards the target.
    std::vector<int> circles(np, 1);
    std::size_t total = np;
    const std::size_t needed = params.connected ? np + nb - 1 : nb;
    const std::size_t room = [&] {
        std::size_t r = 0;
        for (int c : capacity)
            r += static_cast<std::size_t>(c);
        return r;
    }();
    if (needed > room)
        throw UnsatisfiableParams(std::to_string(nb) + " bindings need " + std::to_string(needed)
                                  + " annuli but the pages have room for " + std::to_string(room));

    std::size_t wanted;
    if (params.valence_target > 0) {
        wanted = params.valence_target * nb;
    } else {
        wanted = 0;
        for (std::size_t p = 0; p < np; ++p)
            wanted += static_cast<std::size_t>(rng.range(1, capacity[p]));
    }
    wanted = std::clamp(wanted, std::max(needed, np), room);
    while (total < wanted) {
        const auto p = static_cast<std::size_t>(rng.below(np));
        if (circles[p] < capacity[p]) {
            ++circles[p];
            ++total;
        }
    }

    // Each entry is (page, binding); one per annulus.
    std::vector<std::pair<std::size_t, std::size_t>> joins;
    std::vector<int> used(np, 0);
    auto free_slot = [&](std::size_t p) { return used[p] < circles[p]; };

    if (params.connected) {
        std::vector<std::size_t> pages_left;
        for (std::size_t p = 1; p < np; ++p)
            pages_left.push_back(p);
        std::vector<std::size_t> bindings_left;
        for (std::size_t b = 0; b < nb; ++b)
            bindings_left.push_back(b);
        rng.shuffle(pages_left);
        rng.shuffle(bindings_left);

        std::vector<std::size_t> tree_pages{0};
        std::vector<std::size_t> tree_bindings;
        while (!pages_left.empty() || !bindings_left.empty()) {
            std::vector<std::size_t> open;
            for (std::size_t p : tree_pages)
                if (free_slot(p))
                    open.push_back(p);
            const bool can_bind = !bindings_left.empty() && !open.empty();
            const bool can_page = !pages_left.empty() && !tree_bindings.empty();
            if (!can_bind && !can_page)
                throw UnsatisfiableParams("ran out of boundary circles while connecting the book");
            if (can_bind && (!can_page || rng.coin())) {
                const std::size_t b = bindings_left.back();
                bindings_left.pop_back();
                const std::size_t p = open[static_cast<std::size_t>(rng.below(open.size()))];
                joins.emplace_back(p, b);
                ++used[p];
                tree_bindings.push_back(b);
            } else {
                const std::size_t p = pages_left.back();
                pages_left.pop_back();
                const std::size_t b =
                    tree_bindings[static_cast<std::size_t>(rng.below(tree_bindings.size()))];
                joins.emplace_back(p, b);
                ++used[p];
                tree_pages.push_back(p);
            }
        }
    } else {
        std::vector<std::size_t> bindings_left;
        for (std::size_t b = 0; b < nb; ++b)
            bindings_left.push_back(b);
        rng.shuffle(bindings_left);
        for (std::size_t b : bindings_left) {
            std::vector<std::size_t> open;
            for (std::size_t p = 0; p < np; ++p)
                if (free_slot(p))
                    open.push_back(p);
            const std::size_t p = open[static_cast<std::size_t>(rng.below(open.size()))];
            joins.emplace_back(p, b);
            ++used[p];
        }
    }

    if (nb == 0 && total > 0)
        throw UnsatisfiableParams("pages have boundary circles but there are no bindings");
    for (std::size_t p = 0; p < np; ++p)
        while (free_slot(p)) {
            joins.emplace_back(p, static_cast<std::size_t>(rng.below(nb)));
            ++used[p];
        }

    // Bindings.
    std::vector<Binding> bindings;
    for (std::size_t b = 0; b < nb; ++b) {
        int degree;
        if (params.force_even_degrees) {
            const int lo = (params.degree_min + 1) / 2;
            const int hi = params.degree_max / 2;
            degree = 2 * rng.range(std::max(lo, 1), hi);
        } else {
            degree = rng.range(params.degree_min, params.degree_max);
        }
        bindings.push_back(Binding{"B" + std::to_string(b + 1), degree});
    }

    std::vector<Page> pages;
    for (std::size_t p = 0; p < np; ++p)
        pages.push_back(Page{"P" + std::to_string(p + 1), pick_signature(rng, chibar[p], circles[p])});

    std::stable_sort(joins.begin(), joins.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<Annulus> annuli;
    std::vector<int> next_circle(np, 0);
    for (const auto& [p, b] : joins) {
        const int cover = params.allow_cover_degree_2 && rng.chance(1, 4) ? 2 : 1;
        annuli.push_back(Annulus{"A" + std::to_string(annuli.size() + 1), pages[p].id,
                                 bindings[b].id, next_circle[p]++, cover});
    }
    return Book(std::move(bindings), std::move(pages), std::move(annuli));
}

SubspaceProblem random_subspace(Rng& rng, std::size_t m)
{
    const std::size_t n = 2 * m;
    const auto d = static_cast<std::size_t>(rng.range(static_cast<int>(m), static_cast<int>(n)));
    const int style = rng.range(0, 2);

    auto random_vector = [&](std::size_t min_weight, std::size_t max_weight) {
        const auto w = static_cast<std::size_t>(
            rng.range(static_cast<int>(min_weight), static_cast<int>(max_weight)));
        std::vector<std::size_t> coords(n);
        for (std::size_t i = 0; i < n; ++i)
            coords[i] = i;
        rng.shuffle(coords);
        coords.resize(w);
        return F2Vector::from_support(n, coords);
    };

    SubspaceProblem p{n, m, {}};
    std::size_t attempts = 0;
    while (rank_of(p.basis) < d) {
        F2Vector v(n);
        if (style == 1 && attempts < 64 * n)
            v = random_vector(m + 2, n);
        else if (style == 2 && attempts < 64 * n)
            v = random_vector(m + 1, m + 1);
        else
            v = random_vector(1, n);
        ++attempts;
        p.basis.push_back(v);
        if (rank_of(p.basis) < p.basis.size())
            p.basis.pop_back();
    }
    return p;
}

BindingSet random_binding_subset(Rng& rng, const Book& book)
{
    BindingSet out;
    for (const auto& b : book.bindings())
        if (rng.coin())
            out.insert(b.id);
    return out;
}

SubBook random_connected_subbook(Rng& rng, const Book& book)
{
    if (book.page_count() == 0)
        throw PreconditionViolated("random_connected_subbook: book has no pages");
    const auto start = static_cast<std::size_t>(rng.below(book.page_count()));
    std::vector<std::size_t> pages{start};
    SubBook sub = induced_subbook(book, pages);
    const auto steps = rng.below(book.page_count());
    for (std::uint64_t s = 0; s < steps; ++s) {
        std::set<std::size_t> frontier;
        for (std::size_t b : sub.bindings)
            for (std::size_t a : book.annuli_of_binding(b))
                frontier.insert(book.annulus_page(a));
        for (std::size_t p : sub.pages)
            frontier.erase(p);
        if (frontier.empty())
            break;
        std::vector<std::size_t> choices(frontier.begin(), frontier.end());
        pages.push_back(choices[static_cast<std::size_t>(rng.below(choices.size()))]);
        sub = induced_subbook(book, pages);
    }
    return sub;
}

Book gen_seashore_instance(Rng& rng, int m)
{
    if (m < 2)
        throw UnsatisfiableParams("seashore instances need m >= 2");
    for (int attempt = 0; attempt < 10000; ++attempt) {
        GenParams params;
        params.page_count = static_cast<std::size_t>(2 * m);
        params.binding_count = static_cast<std::size_t>(rng.range(1, 3 * m));
        params.all_pages_chibar_1 = true;
        params.connected = true;
        params.degree_min = 1;
        params.degree_max = rng.range(2, 4);
        params.force_even_degrees = rng.chance(1, 8);
        params.seed = rng.next();
        const Book book = gen_random(params);
        if (h2_rank(book) >= static_cast<std::size_t>(m))
            return book;
    }
    throw UnsatisfiableParams("no seashore instance found for m = " + std::to_string(m));
}

} // namespace boib
