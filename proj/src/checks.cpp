#include "boib/checks.hpp"

#include "boib/boundary.hpp"
#include "boib/cw.hpp"
#include "boib/document.hpp"
#include "boib/error.hpp"
#include "boib/normalize.hpp"
#include "boib/seashore.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace boib {

namespace {

std::string num(long x) { return std::to_string(x); }

BindingSet shared_bindings(const Book& book, const SubBook& a, const SubBook& b)
{
    BindingSet out;
    for (std::size_t x : a.bindings)
        if (std::binary_search(b.bindings.begin(), b.bindings.end(), x))
            out.insert(book.bindings()[x].id);
    return out;
}

Book with_doubled_degrees(const Book& book)
{
    auto bindings = book.bindings();
    for (auto& b : bindings)
        b.degree *= 2;
    return Book(std::move(bindings), book.pages(), book.annuli());
}

} // namespace

Failures check_book(const Book& book, Rng& rng)
{
    Failures out;
    auto expect = [&](bool ok, const std::string& what) {
        if (!ok)
            out.push_back(what);
    };

    expect(parse_book(print_book(book)) == book, "round trip changed the book");

    const CWModel model = build_cw(book);
    const long total = book.chibar();
    expect(model.boundary1.multiply(model.boundary2).is_zero(), "boundary1 * boundary2 != 0");
    expect(model.euler_characteristic() == -total,
           "V-E+F = " + num(model.euler_characteristic()) + ", -chibar = " + num(-total));

    const HomologyRanks h = homology_ranks(model);
    const long alt = static_cast<long>(h.h0) - static_cast<long>(h.h1) + static_cast<long>(h.h2);
    expect(alt == -total, "h0-h1+h2 = " + num(alt) + " for chibar " + num(total));
    expect(h.h0 == components(book).size(), "h0 differs from the component count");

    expect(h.h2 == h2_rank(book), "absolute h2 " + num(h.h2) + " vs ker(delta) " + num(h2_rank(book)));
    const BindingSet b0 = random_binding_subset(rng, book);
    {
        const std::size_t cw = relative_ranks(model, binding_cells(book, model, b0)).h2;
        const std::size_t alg = h2_rank(book, b0);
        expect(cw == alg, "relative h2 " + num(cw) + " vs ker(delta) " + num(alg) + " for a random B0");
    }

    {
        std::size_t sum = 0;
        for (const auto& c : components(book))
            sum += h2_rank(materialize(book, c));
        expect(sum == h2_rank(book), "ker(delta) is not the sum over components");
    }

    expect(delta(with_doubled_degrees(book), b0).is_zero(), "doubling degrees left delta nonzero");

    if (book.page_count() > 0) {
        const SubBook sub = random_connected_subbook(rng, book);
        expect(is_connected(book, sub), "random sub-book is not connected");

        const SubBook rest = complement(book, sub);
        const std::size_t rel = relative_ranks(model, subbook_cells(book, model, sub)).h2;
        const std::size_t excised = h2_rank(materialize(book, rest), shared_bindings(book, rest, sub));
        expect(rel == excised, "excision: rel h2 " + num(rel) + " vs outside kernel " + num(excised));

        const bool unit_pages = std::all_of(book.pages().begin(), book.pages().end(),
                                            [](const Page& p) { return p.base.chibar() == 1; });
        if (unit_pages)
            expect(chibar(book, sub) == static_cast<int>(sub.pages.size()),
                   "chibar(S) != |pages(S)| on unit pages");

        if (validate(book, ValidationMode::strict).ok()) {
            const BoundReport report = bound_checks(book, sub);
            if (report.fatal())
                out.push_back("bound failure:\n" + report.to_string());
        }
    }
    return out;
}

Failures check_normalization(const Book& book)
{
    Failures out;
    const Book n = normalize_pages(book);
    if (n.chibar() != book.chibar())
        out.push_back("normalize changed chibar " + num(book.chibar()) + " -> " + num(n.chibar()));
    if (components(n).size() != components(book).size())
        out.push_back("normalize changed the component count");
    if (h2_rank(n) != h2_rank(book))
        out.push_back("normalize changed ker(delta) " + num(h2_rank(book)) + " -> " + num(h2_rank(n)));
    for (const auto& p : n.pages())
        if (p.base.chibar() != 1)
            out.push_back("normalized page " + p.id + " has chibar " + num(p.base.chibar()));
    const auto report = validate(n, ValidationMode::strict);
    if (!report.ok())
        out.push_back("normalized book is invalid:\n" + report.to_string());
    return out;
}

Failures check_seashore(const Book& book, int m)
{
    Failures out;
    const SubBook s = seashore(book, m);
    if (!is_connected(book, s))
        out.push_back("seashore output is not connected");
    if (chibar(book, s) != m)
        out.push_back("seashore output has chibar " + num(chibar(book, s)) + ", expected " + num(m));
    const Book y = materialize(book, s);
    if (h2_rank(y) == 0)
        out.push_back("seashore output has ker(delta) = 0");
    if (homology_ranks(build_cw(y)).h2 == 0)
        out.push_back("seashore output has CW h2 = 0");
    return out;
}

Failures check_small_support(const SubspaceProblem& problem)
{
    Failures out;
    const F2Vector alpha = find_small_support(problem);
    const std::size_t w = alpha.weight();
    if (w == 0)
        out.push_back("small support witness is zero");
    if (w > problem.m)
        out.push_back("witness weight " + num(static_cast<long>(w)) + " exceeds m = "
                      + num(static_cast<long>(problem.m)));
    if (!in_span(problem.basis, alpha))
        out.push_back("witness " + alpha.to_string() + " is not in H");
    if (rank_of(problem.basis) <= full_scan_rank) {
        const MinWeight best = min_weight_oracle(problem.basis);
        if (w < best.weight)
            out.push_back("witness lighter than the oracle minimum");
    }
    return out;
}

GenParams random_params(Rng& rng, std::size_t max_pages, std::size_t max_bindings)
{
    GenParams p;
    p.page_count = static_cast<std::size_t>(rng.range(1, static_cast<int>(std::max<std::size_t>(max_pages, 1))));
    p.binding_count = static_cast<std::size_t>(rng.range(1, static_cast<int>(std::max<std::size_t>(max_bindings, 1))));
    p.degree_min = 1;
    p.degree_max = rng.range(1, 4);
    p.max_page_chibar = rng.range(1, 3);
    p.all_pages_chibar_1 = rng.chance(1, 3);
    p.force_even_degrees = p.degree_max >= 2 && rng.chance(1, 8);
    p.connected = rng.chance(2, 3);
    p.allow_flat_pages = rng.chance(1, 6);
    p.seed = rng.next();
    return p;
}

namespace {

Book draw_normalization_book(Rng& rng, std::size_t max_pages)
{
    for (;;) {
        GenParams params;
        params.page_count = static_cast<std::size_t>(rng.range(1, static_cast<int>(std::max<std::size_t>(max_pages, 1))));
        params.binding_count = static_cast<std::size_t>(rng.range(1, static_cast<int>(2 * params.page_count)));
        params.max_page_chibar = 4;
        params.degree_max = rng.range(1, 4);
        params.connected = rng.coin();
        params.seed = rng.next();
        try {
            return gen_random(params);
        } catch (const UnsatisfiableParams&) {
        }
    }
}

} // namespace

SeedOutcome check_seed(std::uint64_t seed, std::size_t max_pages)
{
    SeedOutcome outcome;
    outcome.seed = seed;
    Rng rng(seed);
    auto run = [&](const char* what, auto&& body) {
        ++outcome.properties;
        try {
            for (auto& f : body())
                outcome.failures.push_back(std::string(what) + ": " + f);
        } catch (const std::exception& e) {
            outcome.failures.push_back(std::string(what) + ": unexpected error: " + e.what());
        }
    };

    run("book", [&] {
        const GenParams params = [&] {
            for (;;) {
                GenParams p = random_params(rng, max_pages, max_pages);
                try {
                    (void)gen_random(p);
                    return p;
                } catch (const UnsatisfiableParams&) {
                }
            }
        }();
        const Book book = gen_random(params);
        Failures f = check_book(book, rng);
        if (!(gen_random(params) == book))
            f.push_back("generator is not deterministic");
        return f;
    });
    run("normalize", [&] { return check_normalization(draw_normalization_book(rng, max_pages)); });
    run("seashore", [&] {
        const int top = std::clamp(static_cast<int>(max_pages / 2), 2, 5);
        const int m = rng.range(2, top);
        return check_seashore(gen_seashore_instance(rng, m), m);
    });
    run("lowweight", [&] {
        return check_small_support(random_subspace(rng, static_cast<std::size_t>(rng.range(2, 8))));
    });
    return outcome;
}

std::vector<SeedOutcome> run_suite(const SuiteOptions& options)
{
    std::vector<SeedOutcome> results(options.seeds);
    unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
    threads = std::clamp<unsigned>(threads, 1, 64);
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(options.seeds, 1)));

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < options.seeds; i = next++)
            results[i] = check_seed(options.first_seed + i, options.max_pages);
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    return results;
}

} // namespace boib
