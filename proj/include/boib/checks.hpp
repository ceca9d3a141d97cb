// Randomized invariant suite behind `boib check`.
//
// Each seed drives one independent round: a random book (round trip,
// determinism, H2 agreement against a random B0, Euler identity, excision,
// component additivity, parity, rank bounds on a random connected sub-book),
// a normalization instance, a seashore instance and a small-support problem.
// A property helper returns one message per violated property; empty means
// everything held.

#ifndef BOIB_CHECKS_HPP
#define BOIB_CHECKS_HPP

#include "boib/book.hpp"
#include "boib/generate.hpp"
#include "boib/lowweight.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace boib {

using Failures = std::vector<std::string>;

/// Book-level properties. rng supplies B0 and the sub-book.
Failures check_book(const Book& book, Rng& rng);

/// normalize_pages keeps chibar, component count and ker(delta); output pages
/// all have chibar 1 and the output is strict-valid.
Failures check_normalization(const Book& book);

/// seashore output is connected, has chibar m and nonzero H2 on both paths.
Failures check_seashore(const Book& book, int m);

/// find_small_support returns a nonzero element of H of weight <= m; for
/// rank <= full_scan_rank its weight is at least the true minimum.
Failures check_small_support(const SubspaceProblem& problem);

/// Random parameters for one book of the check corpus.
GenParams random_params(Rng& rng, std::size_t max_pages, std::size_t max_bindings);

struct SeedOutcome
{
    std::uint64_t seed = 0;
    std::size_t properties = 0;  ///< property groups evaluated
    Failures failures;
};

SeedOutcome check_seed(std::uint64_t seed, std::size_t max_pages);

struct SuiteOptions
{
    std::uint64_t first_seed = 1;
    std::size_t seeds = 100;
    std::size_t max_pages = 8;
    unsigned threads = 0;  ///< 0: hardware concurrency
};

/// Outcomes ordered by seed regardless of thread count.
std::vector<SeedOutcome> run_suite(const SuiteOptions& options);

} // namespace boib

#endif // BOIB_CHECKS_HPP
