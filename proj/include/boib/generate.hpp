// Seeded random instances.
//
// All randomness comes from std::mt19937_64 (whose output sequence the C++
// standard fixes) seeded with one explicit 64-bit value. Bounded draws use
// rejection sampling on the raw 64-bit output and shuffles are Fisher-Yates,
// so instances are identical across compilers and standard libraries; the
// std:: distributions are deliberately not used.

#ifndef BOIB_GENERATE_HPP
#define BOIB_GENERATE_HPP

#include "boib/book.hpp"
#include "boib/boundary.hpp"
#include "boib/lowweight.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace boib {

class Rng
{
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, n); n > 0.
    std::uint64_t below(std::uint64_t n);
    /// Uniform in [lo, hi].
    int range(int lo, int hi);
    bool coin() { return (next() >> 63) != 0; }
    /// True with probability num/den.
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

    template <class T>
    void shuffle(std::vector<T>& v)
    {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[static_cast<std::size_t>(below(i))]);
    }

private:
    std::mt19937_64 engine_;
};

struct GenParams
{
    std::size_t page_count = 4;
    std::size_t binding_count = 4;
    int degree_min = 1;
    int degree_max = 3;
    /// Page chibar is drawn from [1, max_page_chibar] (from 0 with allow_flat_pages).
    int max_page_chibar = 1;
    /// Desired mean number of annuli per binding; 0 draws circle counts freely.
    std::size_t valence_target = 0;
    std::uint64_t seed = 0;

    bool all_pages_chibar_1 = false;
    bool force_even_degrees = false;
    bool connected = false;
    /// Allow chibar-0 pages (annulus and Moebius-band bases): permissive only.
    bool allow_flat_pages = false;
    /// Draw cover degree 2 on some annuli. The H2 agreement between delta and
    /// the cell model only holds for cover degree 1.
    bool allow_cover_degree_2 = false;
};

/// Deterministic in params (seed included). Pages are P1.., bindings B1..,
/// annuli A1.. ordered by page and circle. Throws UnsatisfiableParams when
/// the counts cannot be realized (e.g. no pages, or more bindings than the
/// pages have boundary circles).
Book gen_random(const GenParams& params);

/// Subspace of F2^(2m) of random rank in [m, 2m], mixing uniform vectors,
/// heavy vectors (weight >= m+2) and weight-(m+1) vectors.
SubspaceProblem random_subspace(Rng& rng, std::size_t m);

/// Each binding independently with probability 1/2.
BindingSet random_binding_subset(Rng& rng, const Book& book);

/// Connected sub-book grown from a random page by random adjacent pages.
/// The book must have at least one page.
SubBook random_connected_subbook(Rng& rng, const Book& book);

/// Book meeting the seashore hypotheses for this m: connected, 2m pages of
/// chibar 1, kernel rank >= m. Retries internally; throws UnsatisfiableParams
/// after too many attempts.
Book gen_seashore_instance(Rng& rng, int m);

} // namespace boib

#endif // BOIB_GENERATE_HPP
