#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "boib/boundary.hpp"
#include "boib/document.hpp"
#include "boib/error.hpp"
#include "boib/generate.hpp"
#include "boib/normalize.hpp"
#include "boib/seashore.hpp"
#include "oracles.hpp"

using namespace boib;

namespace {

Book fixture(const std::string& name)
{
    return parse_book(read_text_file(std::string(BOIB_FIXTURE_DIR) + "/" + name),
                      ValidationMode::permissive);
}

SurfaceSignature punctured_torus() { return {true, 1, 1}; }

// K2 plus pages P3, P4, each with one annulus to B.
Book k2_extended()
{
    std::vector<Page> pages;
    std::vector<Annulus> annuli;
    for (int i = 1; i <= 4; ++i) {
        const std::string p = "P" + std::to_string(i);
        pages.push_back({p, punctured_torus()});
        annuli.push_back({"A" + std::to_string(i), p, "B", 0, 1});
    }
    return Book({{"B", 2}}, pages, annuli);
}

std::vector<std::string> ids(const Book& b, const SubBook& s) { return page_ids(b, s); }

} // namespace

TEST_CASE("book construction errors")
{
    CHECK_THROWS_AS(Book({{"B", 1}, {"B", 2}}, {}, {}), InvalidBook);
    CHECK_THROWS_AS(Book({}, {{"P", punctured_torus()}, {"P", punctured_torus()}}, {}), InvalidBook);
    CHECK_THROWS_AS(Book({{"B", 1}}, {{"P", punctured_torus()}}, {{"A", "P", "C", 0, 1}}), UnknownId);
    CHECK_THROWS_AS(Book({{"B", 1}}, {{"P", punctured_torus()}}, {{"A", "Q", "B", 0, 1}}), UnknownId);
    try {
        Book({{"B", 1}}, {{"P", punctured_torus()}}, {{"A", "P", "C", 0, 1}});
    } catch (const UnknownId& e) {
        CHECK(e.id() == "C");
    }
}

TEST_CASE("validation")
{
    CHECK(validate(fixture("K1.json"), ValidationMode::strict).ok());

    const Book isolated({{"B", 1}, {"lonely", 1}}, {{"P", punctured_torus()}}, {{"A", "P", "B", 0, 1}});
    CHECK(validate(isolated, ValidationMode::permissive).has(ViolationKind::binding_meets_no_page));

    const Book short_of_annuli({{"B", 1}}, {{"P", {false, 1, 2}}}, {{"A", "P", "B", 0, 1}});
    CHECK(validate(short_of_annuli, ValidationMode::permissive).has(ViolationKind::annulus_circle_mismatch));

    const Book flat({{"B", 1}}, {{"P", {true, 0, 2}}}, {{"A", "P", "B", 0, 1}, {"A2", "P", "B", 1, 1}});
    CHECK(validate(flat, ValidationMode::permissive).ok());
    CHECK(validate(flat, ValidationMode::strict).has(ViolationKind::zero_euler_characteristic));

    const Book disc({{"B", 1}}, {{"P", {true, 0, 1}}}, {{"A", "P", "B", 0, 1}});
    CHECK(validate(disc, ValidationMode::permissive).has(ViolationKind::positive_euler_characteristic));

    const Book twice({{"B", 1}}, {{"P", {false, 1, 2}}}, {{"A", "P", "B", 0, 1}, {"A2", "P", "B", 0, 1}});
    CHECK(validate(twice, ValidationMode::permissive).has(ViolationKind::duplicate_circle));

    const Book far({{"B", 1}}, {{"P", punctured_torus()}}, {{"A", "P", "B", 3, 1}});
    CHECK(validate(far, ValidationMode::permissive).has(ViolationKind::circle_index_out_of_range));

    const Book bad_cover({{"B", 1}}, {{"P", punctured_torus()}}, {{"A", "P", "B", 0, 3}});
    CHECK(validate(bad_cover, ValidationMode::permissive).has(ViolationKind::bad_cover_degree));

    const Book zero_degree({{"B", 0}}, {{"P", punctured_torus()}}, {{"A", "P", "B", 0, 1}});
    CHECK(validate(zero_degree, ValidationMode::permissive).has(ViolationKind::nonpositive_degree));

    CHECK(to_string(ViolationKind::binding_meets_no_page) == "binding-meets-no-page");
    CHECK(validate(Book{}, ValidationMode::permissive).ok());
}

TEST_CASE("chibar and sub-books")
{
    const Book k1 = fixture("K1.json");
    CHECK(k1.chibar() == 2);
    const std::vector<std::string> p1{"P1"};
    const SubBook s = induced_subbook(k1, std::span<const std::string>(p1));
    CHECK(ids(k1, s) == p1);
    CHECK(binding_ids(k1, s) == std::vector<std::string>{"B"});
    CHECK(chibar(k1, s) == 1);
    CHECK(induced_subbook(k1, std::span<const std::size_t>{}).empty());
    CHECK(chibar(k1, SubBook{}) == 0);
    const std::vector<std::size_t> both{0, 1};
    CHECK(induced_subbook(k1, std::span<const std::size_t>(both)) == whole_book(k1));
    const std::vector<std::string> missing{"P9"};
    CHECK_THROWS_AS(induced_subbook(k1, std::span<const std::string>(missing)), UnknownId);
}

TEST_CASE("components")
{
    const Book k1 = fixture("K1.json");
    const Book two = disjoint_union(with_prefix(materialize(k1, induced_subbook(k1, std::vector<std::size_t>{0})), "x."),
                                    with_prefix(materialize(k1, induced_subbook(k1, std::vector<std::size_t>{1})), "y."));
    CHECK(components(two).size() == 2);
    CHECK(!is_connected(two));
    CHECK(components(fixture("K4.json")).size() == 1);
    CHECK(is_connected(fixture("K4.json")));
    CHECK(components(Book{}).empty());
}

TEST_CASE("delta and h2 on the worked books")
{
    const Book k1 = fixture("K1.json");
    const Book k2 = fixture("K2.json");
    CHECK(delta(k1) == F2Matrix::from_strings({"11"}));
    CHECK(delta(k2) == F2Matrix(1, 2));
    const F2Matrix d0 = delta(k1, {"B"});
    CHECK(d0.row_count() == 0);
    CHECK(d0.col_count() == 2);

    // frozen values, each recomputed by the brute-force counter
    constexpr std::size_t k1_h2 = 1, k2_h2 = 2, k1_rel_b = 2, k4_h2 = 4;
    CHECK(oracle::delta_kernel_rank(k1) == k1_h2);
    CHECK(oracle::delta_kernel_rank(k2) == k2_h2);
    CHECK(oracle::delta_kernel_rank(k1, {"B"}) == k1_rel_b);
    CHECK(oracle::delta_kernel_rank(fixture("K4.json")) == k4_h2);

    CHECK(h2_rank(k1) == k1_h2);
    CHECK(h2_rank(k2) == k2_h2);
    CHECK(h2_rank(k1, {"B"}) == k1_rel_b);
    CHECK(h2_rank(fixture("K4.json")) == k4_h2);
    CHECK_THROWS_AS(delta(k1, {"nope"}), UnknownId);
}

TEST_CASE("delta counts annuli with multiplicity")
{
    // two annuli from one page to the same odd-degree binding cancel
    const Book b({{"B", 1}}, {{"P", {false, 1, 2}}}, {{"A1", "P", "B", 0, 1}, {"A2", "P", "B", 1, 1}});
    CHECK(delta(b).is_zero());
    CHECK(h2_rank(b) == 1);
}

TEST_CASE("h2 against the brute-force kernel on random books")
{
    Rng rng(31);
    for (int trial = 0; trial < 400; ++trial) {
        GenParams p;
        p.page_count = static_cast<std::size_t>(rng.range(1, 8));
        p.binding_count = static_cast<std::size_t>(rng.range(1, static_cast<int>(p.page_count) + 2));
        p.max_page_chibar = rng.range(1, 3);
        p.degree_max = rng.range(1, 4);
        p.connected = rng.coin();
        p.seed = rng.next();
        const Book book = gen_random(p);
        const BindingSet b0 = random_binding_subset(rng, book);
        CHECK(h2_rank(book, b0) == oracle::delta_kernel_rank(book, b0));
    }
}

TEST_CASE("doubling every degree kills delta")
{
    Rng rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        GenParams p;
        p.page_count = 5;
        p.binding_count = 4;
        p.seed = rng.next();
        const Book book = gen_random(p);
        auto bindings = book.bindings();
        for (auto& b : bindings)
            b.degree *= 2;
        CHECK(delta(Book(bindings, book.pages(), book.annuli())).is_zero());
    }
}

TEST_CASE("normalization")
{
    const Book k1 = fixture("K1.json");
    CHECK(normalize_pages(k1) == k1);

    // one chibar-2 page, one annulus to a degree-1 binding
    const Book single({{"B", 1}}, {{"P", {false, 3, 1}}}, {{"A", "P", "B", 0, 1}});
    const Book n1 = normalize_pages(single);
    CHECK(n1.page_count() == 2);
    CHECK(n1.binding_count() == 2);
    CHECK(h2_rank(single) == 0);
    CHECK(h2_rank(n1) == 0);
    CHECK(validate(n1, ValidationMode::strict).ok());

    // K2 with P2 replaced by a chibar-2 page
    const Book k2x({{"B", 2}}, {{"P1", punctured_torus()}, {"P2", {false, 3, 1}}},
                   {{"A1", "P1", "B", 0, 1}, {"A2", "P2", "B", 0, 1}});
    CHECK(k2x.chibar() == 3);
    const Book n2 = normalize_pages(k2x);
    CHECK(n2.page_count() == 3);
    for (const auto& p : n2.pages())
        CHECK(p.base.chibar() == 1);
    CHECK(n2.chibar() == 3);
    CHECK(h2_rank(n2) == h2_rank(k2x));
    CHECK(oracle::delta_kernel_rank(n2) == oracle::delta_kernel_rank(k2x));

    const Book flat({{"B", 1}}, {{"P", {true, 0, 2}}}, {{"A", "P", "B", 0, 1}, {"A2", "P", "B", 1, 1}});
    CHECK_THROWS_AS(normalize_pages(flat), PageWithNonpositiveChibar);
}

TEST_CASE("normalization invariants on random books")
{
    Rng rng(12);
    for (int trial = 0; trial < 300; ++trial) {
        GenParams p;
        p.page_count = static_cast<std::size_t>(rng.range(1, 5));
        p.binding_count = static_cast<std::size_t>(rng.range(1, 6));
        p.max_page_chibar = 4;
        p.degree_max = 3;
        p.connected = rng.coin();
        p.seed = rng.next();
        Book book;
        try {
            book = gen_random(p);
        } catch (const UnsatisfiableParams&) {
            continue;
        }
        const Book n = normalize_pages(book);
        CHECK(n.chibar() == book.chibar());
        CHECK(components(n).size() == components(book).size());
        CHECK(oracle::delta_kernel_rank(n) == oracle::delta_kernel_rank(book));
        CHECK(validate(n, ValidationMode::strict).ok());
    }
}

TEST_CASE("growing sub-books")
{
    const Book k1 = fixture("K1.json");
    const SubBook g = grow_subbook(k1, induced_subbook(k1, std::vector<std::size_t>{0}));
    CHECK(ids(k1, g) == std::vector<std::string>{"P1", "P2"});
    CHECK_THROWS_AS(grow_subbook(k1, whole_book(k1)), NoAdjacentPage);

    const Book k4 = fixture("K4.json");
    const SubBook h = grow_subbook(k4, induced_subbook(k4, std::vector<std::size_t>{0}));
    CHECK(ids(k4, h) == std::vector<std::string>{"P1", "P2"});
    CHECK(chibar(k4, h) == 2);
}

TEST_CASE("seashore on the worked books")
{
    const Book k4 = fixture("K4.json");
    const SubBook s = seashore(k4, 2);
    CHECK(ids(k4, s) == std::vector<std::string>{"P1", "P2"});
    CHECK(is_connected(k4, s));
    CHECK(h2_rank(materialize(k4, s)) >= 1);

    const Book k2x = k2_extended();
    const SubBook t = seashore(k2x, 2);
    CHECK(t.pages.size() == 2);
    CHECK(h2_rank(materialize(k2x, t)) >= 1);

    CHECK_THROWS_AS(seashore(fixture("K1.json"), 2), PreconditionViolated);
    CHECK_THROWS_AS(seashore(k4, 1), PreconditionViolated);
}

TEST_CASE("seashore trace")
{
    Rng rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const int m = rng.range(2, 4);
        const Book book = gen_seashore_instance(rng, m);
        const SeashoreResult r = seashore_traced(book, m);
        CHECK(r.alpha.weight() >= 1);
        CHECK(r.alpha.weight() <= static_cast<std::size_t>(m));
        CHECK(delta(book).apply(r.alpha).is_zero());
        CHECK(delta(book).apply(r.seed_cycle).is_zero());
        REQUIRE(!r.growth.empty());
        CHECK(r.growth.front() == r.seed);
        CHECK(r.growth.back() == r.subbook);
        for (std::size_t j = 1; j < r.growth.size(); ++j)
            CHECK(r.growth[j].pages.size() == r.growth[j - 1].pages.size() + 1);
        CHECK(chibar(book, r.subbook) == m);
        CHECK(is_connected(book, r.subbook));
        CHECK(oracle::delta_kernel_rank(materialize(book, r.subbook)) >= 1);
    }
}

TEST_CASE("generator")
{
    GenParams p;
    p.seed = 1;
    p.page_count = 4;
    p.binding_count = 4;
    p.all_pages_chibar_1 = true;
    p.force_even_degrees = true;
    p.connected = true;
    const Book b = gen_random(p);
    CHECK(delta(b).is_zero());
    CHECK(h2_rank(b) == 4);
    CHECK(is_connected(b));
    CHECK(print_book(gen_random(p)) == print_book(b));

    GenParams none = p;
    none.page_count = 0;
    CHECK_THROWS_AS(gen_random(none), UnsatisfiableParams);

    GenParams crowded = p;
    crowded.binding_count = 40;
    CHECK_THROWS_AS(gen_random(crowded), UnsatisfiableParams);

    Rng rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        GenParams q;
        q.page_count = static_cast<std::size_t>(rng.range(1, 10));
        q.binding_count = static_cast<std::size_t>(rng.range(1, 10));
        q.max_page_chibar = rng.range(1, 3);
        q.all_pages_chibar_1 = rng.coin();
        q.connected = rng.coin();
        q.allow_flat_pages = rng.coin();
        q.seed = rng.next();
        Book book;
        try {
            book = gen_random(q);
        } catch (const UnsatisfiableParams&) {
            continue;
        }
        CHECK(validate(book, ValidationMode::permissive).ok());
        if (q.connected)
            CHECK(is_connected(book));
        if (q.all_pages_chibar_1)
            for (const auto& page : book.pages())
                CHECK(page.base.chibar() == 1);
    }
}

TEST_CASE("rng is reproducible and bounded")
{
    Rng a(5), b(5);
    for (int i = 0; i < 100; ++i)
        CHECK(a.next() == b.next());
    Rng c(6);
    for (int i = 0; i < 1000; ++i) {
        const int x = c.range(-3, 3);
        CHECK(x >= -3);
        CHECK(x <= 3);
    }
    // reference values of the 64-bit Mersenne twister for the default seed
    Rng d(5489);
    CHECK(d.next() == 14514284786278117030ull);
}
