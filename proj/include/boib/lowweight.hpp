// Small-support elements of subspaces of F2^(2m), and Fisher's inequality.
//
// For a subspace H of dimension >= m inside a 2m-dimensional space with a
// fixed coordinate basis, find_small_support produces a nonzero element of
// weight at most m by the two-case argument:
//
//   Case I   some beta in H has weight >= m+2. Then H meets the coordinate
//            subspace spanned by support(beta) in dimension >= 2, so there is
//            alpha1 there other than 0 and beta; alpha1 and beta + alpha1 split
//            support(beta), and one of them has weight <= m.
//   Case II  every weight is <= m+1. A weight <= m exists, since otherwise the
//            supports would form a family with constant pairwise intersection
//            (m+1)/2 and 2^m - 1 > 2m members, contradicting Fisher.

#ifndef BOIB_LOWWEIGHT_HPP
#define BOIB_LOWWEIGHT_HPP

#include "boib/f2.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace boib {

struct SubspaceProblem
{
    std::size_t ambient_dim = 0;  ///< 2m
    std::size_t m = 0;
    std::vector<F2Vector> basis;  ///< spans H; may be dependent
};

/// Rank up to which Case II is settled by a full scan of H.
inline constexpr std::size_t full_scan_rank = 20;

enum class SupportCase
{
    split,      ///< Case I: beta of weight >= m+2 split inside H ∩ L
    scan,       ///< Case II: exhaustive scan found weight <= m
    echelon,    ///< large rank, no heavy element sampled: reduced-basis certificate
};

struct SmallSupport
{
    F2Vector alpha;
    SupportCase route = SupportCase::scan;
    // Populated for SupportCase::split.
    std::optional<F2Vector> beta;
    std::optional<F2Vector> alpha1;
    std::optional<F2Vector> alpha2;
};

/// Throws PreconditionViolated unless m >= 2, ambient_dim == 2m, every vector
/// has length 2m, and rk H >= m.
void check_problem(const SubspaceProblem& p);

/// Nonzero alpha in H with weight(alpha) <= m, with the route taken.
/// Throws InternalContradiction if no such element turns up (unreachable).
SmallSupport find_small_support_traced(const SubspaceProblem& p);

F2Vector find_small_support(const SubspaceProblem& p);

struct MinWeight
{
    std::size_t weight = 0;
    F2Vector witness;
};

/// Exhaustive minimum nonzero weight of span(basis). Ties go to the
/// lexicographically smallest support. Throws BasisTooLarge above rank 24 and
/// ZeroSubspace when the span is {0}.
MinWeight min_weight_oracle(const std::vector<F2Vector>& basis);

// ---------------------------------------------------------------------------

/// Family of distinct subsets of {0, ..., ground_size-1} whose pairwise
/// intersections should all have size k.
class SetFamily
{
public:
    using Set = std::set<std::size_t>;

    /// Throws InputError on k == 0, ground_size == 0, out-of-range elements,
    /// or repeated sets.
    SetFamily(std::size_t ground_size, std::vector<Set> sets, std::size_t k);

    std::size_t ground_size() const noexcept { return ground_size_; }
    std::size_t k() const noexcept { return k_; }
    const std::vector<Set>& sets() const noexcept { return sets_; }

private:
    std::size_t ground_size_;
    std::vector<Set> sets_;
    std::size_t k_;
};

struct FisherVerdict
{
    enum class Kind
    {
        conforms,
        intersection_violation,
        cardinality_violation,
    };

    Kind kind = Kind::conforms;
    // For intersection_violation: the first offending pair (indices into sets)
    // and the size of their intersection.
    std::size_t first = 0;
    std::size_t second = 0;
    std::size_t intersection = 0;

    std::string describe(const SetFamily& family) const;
};

/// cardinality_violation is reported only when every pair intersects in
/// exactly k elements and the family still has more than n members.
FisherVerdict fisher_check(const SetFamily& family);

} // namespace boib

#endif // BOIB_LOWWEIGHT_HPP
