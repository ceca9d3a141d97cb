#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "boib/error.hpp"
#include "boib/f2.hpp"
#include "boib/generate.hpp"
#include "oracles.hpp"

using namespace boib;

namespace {

oracle::Mask to_mask(const F2Vector& v)
{
    oracle::Mask m = 0;
    for (std::size_t i : v.support())
        m |= oracle::Mask{1} << i;
    return m;
}

F2Vector random_vector(Rng& rng, std::size_t n)
{
    F2Vector v(n);
    for (std::size_t i = 0; i < n; ++i)
        if (rng.coin())
            v = v.flipped(i);
    return v;
}

std::vector<F2Vector> random_rows(Rng& rng, std::size_t rows, std::size_t n)
{
    std::vector<F2Vector> out;
    for (std::size_t r = 0; r < rows; ++r)
        out.push_back(random_vector(rng, n));
    return out;
}

} // namespace

TEST_CASE("vector basics")
{
    const auto v = F2Vector::from_string("0110100");
    CHECK(v.length() == 7);
    CHECK(v.weight() == 3);
    CHECK(v.support() == std::vector<std::size_t>{1, 2, 4});
    CHECK(v.first_set() == 1);
    CHECK(v.to_string() == "0110100");
    CHECK(v + v == F2Vector(7));
    CHECK((v + F2Vector::unit(7, 1)).to_string() == "0010100");
    CHECK(F2Vector::from_support(7, {1, 2, 4}) == v);
    CHECK(overlap(v, F2Vector::from_string("0100101")) == 2);
    CHECK(support_less(F2Vector::from_string("1100"), F2Vector::from_string("1010")));
    CHECK_THROWS(F2Vector::from_string("01x"));
}

TEST_CASE("vectors wider than one word")
{
    auto v = F2Vector::from_support(130, {0, 64, 129});
    CHECK(v.weight() == 3);
    CHECK(v.test(129));
    CHECK(!v.test(128));
    CHECK(v.first_set() == 0);
    CHECK((v + F2Vector::unit(130, 0)).first_set() == 64);
}

TEST_CASE("rank and kernel against brute force")
{
    Rng rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t rows = static_cast<std::size_t>(rng.range(0, 9));
        const std::size_t cols = static_cast<std::size_t>(rng.range(1, 10));
        const F2Matrix m(cols, random_rows(rng, rows, cols));

        std::vector<oracle::Mask> row_masks;
        for (const auto& r : m.rows())
            row_masks.push_back(to_mask(r));
        const std::size_t r = oracle::rank(row_masks);
        CHECK(m.rank() == r);
        CHECK(m.transposed().rank() == r);

        const auto kernel = m.kernel_basis();
        CHECK(kernel.size() == cols - r);
        CHECK(rank_of(kernel) == kernel.size());
        for (const auto& k : kernel)
            CHECK(m.apply(k).is_zero());
    }
}

TEST_CASE("reduced form is in row echelon form with unit pivot columns")
{
    const auto m = F2Matrix::from_strings({"0110", "0111", "1001", "1111"});
    const auto r = m.reduced();
    const auto pivots = r.pivot_columns();
    REQUIRE(pivots.size() == m.rank());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < r.row_count(); ++j)
            CHECK(r.get(j, pivots[i]) == (i == j));
}

TEST_CASE("multiply and transpose")
{
    const auto a = F2Matrix::from_strings({"110", "011"});
    const auto b = F2Matrix::from_strings({"10", "11", "01"});
    CHECK(a.multiply(b) == F2Matrix::from_strings({"01", "10"}));
    CHECK(a.transposed() == F2Matrix::from_strings({"10", "11", "01"}));
    CHECK(F2Matrix::identity(3).multiply(b) == b);
}

TEST_CASE("intersection of subspaces against brute force")
{
    Rng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.range(1, 8));
        const auto a = random_rows(rng, static_cast<std::size_t>(rng.range(0, 5)), n);
        const auto b = random_rows(rng, static_cast<std::size_t>(rng.range(0, 5)), n);
        std::vector<oracle::Mask> am, bm;
        for (const auto& v : a)
            am.push_back(to_mask(v));
        for (const auto& v : b)
            bm.push_back(to_mask(v));
        const auto sa = oracle::span_of(am);
        const auto sb = oracle::span_of(bm);
        std::size_t common = 0;
        for (auto x : sa)
            common += sb.count(x);

        const auto meet = intersect_subspaces(a, b, n);
        CHECK(oracle::log2_exact(common) == rank_of(meet));
        for (const auto& v : meet) {
            CHECK(in_span(a, v));
            CHECK(in_span(b, v));
        }
    }
}

TEST_CASE("span enumeration")
{
    Rng rng(3);
    const auto basis = random_rows(rng, 6, 9);
    const auto all = enumerate_subspace(basis, 9);
    CHECK(all.size() == (std::size_t{1} << rank_of(basis)));
    std::set<std::string> distinct;
    for (const auto& v : all) {
        CHECK(in_span(basis, v));
        distinct.insert(v.to_string());
    }
    CHECK(distinct.size() == all.size());

    std::size_t visited = 0;
    for_each_in_span({}, 4, [&](const F2Vector& v) {
        CHECK(v.is_zero());
        ++visited;
    });
    CHECK(visited == 1);
}

TEST_CASE("enumeration refuses large ranks")
{
    std::vector<F2Vector> basis;
    for (std::size_t i = 0; i <= max_enumeration_rank; ++i)
        basis.push_back(F2Vector::unit(max_enumeration_rank + 1, i));
    CHECK_THROWS_AS(enumerate_subspace(basis, max_enumeration_rank + 1), BasisTooLarge);

    // dependent vectors are fine as long as the rank is small
    std::vector<F2Vector> many(40, F2Vector::unit(8, 3));
    CHECK(enumerate_subspace(many, 8).size() == 2);
}

TEST_CASE("weight of a sum")
{
    Rng rng(21);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.range(1, 150));
        const auto u = random_vector(rng, n);
        const auto v = random_vector(rng, n);
        CHECK((u + v).weight() == u.weight() + v.weight() - 2 * overlap(u, v));
    }
}

TEST_CASE("rank-nullity and the dimension formula on larger matrices")
{
    Rng rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = static_cast<std::size_t>(rng.range(0, 32));
        const std::size_t cols = static_cast<std::size_t>(rng.range(1, 32));
        const F2Matrix m(cols, random_rows(rng, rows, cols));
        CHECK(m.rank() + m.kernel_basis().size() == cols);

        const auto a = random_rows(rng, static_cast<std::size_t>(rng.range(0, 12)), cols);
        const auto b = random_rows(rng, static_cast<std::size_t>(rng.range(0, 12)), cols);
        std::vector<F2Vector> both = a;
        both.insert(both.end(), b.begin(), b.end());
        CHECK(rank_of(intersect_subspaces(a, b, cols)) + rank_of(both) == rank_of(a) + rank_of(b));
    }
}
