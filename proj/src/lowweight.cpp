#include "boib/lowweight.hpp"

#include "boib/error.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>

namespace boib {

namespace {

using Word = F2Vector::Word;

std::size_t popcount(std::span<const Word> words)
{
    std::size_t total = 0;
    for (Word w : words)
        total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

// Support order for two vectors of equal weight: the smaller one owns the
// lowest coordinate where they differ.
bool equal_weight_less(std::span<const Word> a, std::span<const Word> b)
{
    for (std::size_t k = 0; k < a.size(); ++k) {
        const Word diff = a[k] ^ b[k];
        if (diff)
            return (a[k] & (diff & (~diff + 1))) != 0;
    }
    return false;
}

// Lower weight first, then lexicographically smaller support.
bool preferred(const F2Vector& a, const F2Vector& b)
{
    if (a.weight() != b.weight())
        return a.weight() < b.weight();
    return support_less(a, b);
}

SmallSupport split_heavy(const std::vector<F2Vector>& basis, const F2Vector& beta, std::size_t m)
{
    const std::size_t n = beta.length();
    std::vector<F2Vector> coordinate;
    for (std::size_t i : beta.support())
        coordinate.push_back(F2Vector::unit(n, i));

    // dim(H ∩ L) >= rk H + weight(beta) - 2m >= 2.
    const auto meet = intersect_subspaces(basis, coordinate, n);
    if (meet.size() < 2)
        throw InternalContradiction("H meets the support subspace of a weight-"
                                    + std::to_string(beta.weight()) + " element in dimension "
                                    + std::to_string(meet.size()) + " < 2");

    const auto pick = std::find_if(meet.begin(), meet.end(),
                                   [&beta](const F2Vector& v) { return v != beta; });
    const F2Vector alpha1 = *pick;
    const F2Vector alpha2 = beta + alpha1;

    auto qualifies = [m](const F2Vector& v) { return v.weight() > 0 && v.weight() <= m; };
    SmallSupport out;
    out.route = SupportCase::split;
    out.beta = beta;
    out.alpha1 = alpha1;
    out.alpha2 = alpha2;
    if (qualifies(alpha1) && qualifies(alpha2))
        out.alpha = preferred(alpha2, alpha1) ? alpha2 : alpha1;
    else if (qualifies(alpha1))
        out.alpha = alpha1;
    else if (qualifies(alpha2))
        out.alpha = alpha2;
    else
        throw InternalContradiction("split of a heavy element produced no part of weight <= m");
    return out;
}

SmallSupport full_scan(const std::vector<F2Vector>& basis, std::size_t n, std::size_t m)
{
    const std::size_t d = basis.size();
    const std::size_t nwords = (n + F2Vector::word_bits - 1) / F2Vector::word_bits;

    std::vector<Word> current(nwords, 0);
    std::vector<Word> heaviest;
    std::size_t heaviest_weight = 0;
    std::vector<Word> lightest;
    std::size_t lightest_weight = m + 1;

    // Reflected Gray code: step g flips basis vector countr_zero(g).
    const std::uint64_t count = std::uint64_t{1} << d;
    for (std::uint64_t g = 1; g < count; ++g) {
        const auto& flip = basis[static_cast<std::size_t>(std::countr_zero(g))].words();
        for (std::size_t k = 0; k < nwords; ++k)
            current[k] ^= flip[k];
        const std::size_t w = popcount(current);
        if (w > heaviest_weight) {
            heaviest_weight = w;
            heaviest = current;
        }
        if (w < lightest_weight || (w == lightest_weight && !lightest.empty()
                                    && equal_weight_less(current, lightest))) {
            lightest_weight = w;
            lightest = current;
        }
    }

    if (heaviest_weight >= m + 2)
        return split_heavy(basis, F2Vector::from_words(n, heaviest), m);
    if (!lightest.empty()) {
        SmallSupport out;
        out.route = SupportCase::scan;
        out.alpha = F2Vector::from_words(n, lightest);
        return out;
    }
    throw InternalContradiction("every nonzero element of a rank-" + std::to_string(d)
                                + " subspace has weight m+1 = " + std::to_string(m + 1));
}

SmallSupport sampled(const std::vector<F2Vector>& basis, std::size_t n, std::size_t m)
{
    const std::size_t d = basis.size();
    F2Vector heaviest = basis.front();
    auto consider = [&heaviest](const F2Vector& v) {
        if (v.weight() > heaviest.weight())
            heaviest = v;
    };
    for (const auto& v : basis)
        consider(v);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            consider(basis[i] + basis[j]);

    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    constexpr std::size_t samples = 1u << 14;
    for (std::size_t s = 0; s < samples; ++s) {
        F2Vector v(n);
        for (std::size_t i = 0; i < d; ++i)
            if (rng() & 1u)
                v = v + basis[i];
        consider(v);
    }
    if (heaviest.weight() >= m + 2)
        return split_heavy(basis, heaviest, m);

    // Reduced rows have weight <= 1 + (n - d). With d >= m+1 that is <= m.
    // With d == m a row of weight m+1 is its pivot plus every free column,
    // so two such rows sum to a weight-2 vector.
    SmallSupport out;
    out.route = SupportCase::echelon;
    const auto best = std::min_element(basis.begin(), basis.end(), preferred);
    if (best->weight() <= m) {
        out.alpha = *best;
        return out;
    }
    const F2Vector pair = basis[0] + basis[1];
    if (pair.weight() > 0 && pair.weight() <= m) {
        out.alpha = pair;
        return out;
    }
    throw InternalContradiction("reduced basis yields no element of weight <= m");
}

} // namespace

void check_problem(const SubspaceProblem& p)
{
    if (p.m < 2)
        throw PreconditionViolated("m must be at least 2, got " + std::to_string(p.m));
    if (p.ambient_dim != 2 * p.m)
        throw PreconditionViolated("ambient dimension " + std::to_string(p.ambient_dim)
                                   + " is not 2m = " + std::to_string(2 * p.m));
    for (const auto& v : p.basis)
        if (v.length() != p.ambient_dim)
            throw PreconditionViolated("basis vector of length " + std::to_string(v.length())
                                       + " in ambient dimension "
                                       + std::to_string(p.ambient_dim));
    const std::size_t r = rank_of(p.basis);
    if (r < p.m)
        throw PreconditionViolated("subspace rank " + std::to_string(r) + " is below m = "
                                   + std::to_string(p.m));
}

SmallSupport find_small_support_traced(const SubspaceProblem& p)
{
    check_problem(p);
    const auto basis = reduce_basis(p.basis);
    if (basis.size() <= full_scan_rank)
        return full_scan(basis, p.ambient_dim, p.m);
    return sampled(basis, p.ambient_dim, p.m);
}

F2Vector find_small_support(const SubspaceProblem& p)
{
    return find_small_support_traced(p).alpha;
}

MinWeight min_weight_oracle(const std::vector<F2Vector>& basis)
{
    const std::size_t n = basis.empty() ? 0 : basis.front().length();
    std::optional<F2Vector> best;
    for_each_in_span(basis, n, [&best](const F2Vector& v) {
        if (v.is_zero())
            return;
        if (!best || v.weight() < best->weight()
            || (v.weight() == best->weight() && support_less(v, *best)))
            best = v;
    });
    if (!best)
        throw ZeroSubspace("min_weight_oracle: subspace is zero");
    return MinWeight{best->weight(), *best};
}

// ---------------------------------------------------------------------------

SetFamily::SetFamily(std::size_t ground_size, std::vector<Set> sets, std::size_t k)
    : ground_size_(ground_size), sets_(std::move(sets)), k_(k)
{
    if (ground_size_ == 0)
        throw InputError("set family: ground size must be positive");
    if (k_ == 0)
        throw InputError("set family: intersection size k must be positive");
    for (const auto& s : sets_)
        if (!s.empty() && *s.rbegin() >= ground_size_)
            throw InputError("set family: element " + std::to_string(*s.rbegin())
                             + " outside ground set of size " + std::to_string(ground_size_));
    std::vector<Set> sorted = sets_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InputError("set family: sets must be distinct");
}

FisherVerdict fisher_check(const SetFamily& family)
{
    const auto& sets = family.sets();
    FisherVerdict verdict;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            std::size_t common = 0;
            for (std::size_t x : sets[i])
                common += sets[j].count(x);
            if (common != family.k()) {
                verdict.kind = FisherVerdict::Kind::intersection_violation;
                verdict.first = i;
                verdict.second = j;
                verdict.intersection = common;
                return verdict;
            }
        }
    }
    if (sets.size() > family.ground_size())
        verdict.kind = FisherVerdict::Kind::cardinality_violation;
    return verdict;
}

std::string FisherVerdict::describe(const SetFamily& family) const
{
    auto show = [](const SetFamily::Set& s) {
        std::ostringstream os;
        os << '{';
        bool first_elem = true;
        for (std::size_t x : s) {
            os << (first_elem ? "" : ",") << x;
            first_elem = false;
        }
        os << '}';
        return os.str();
    };
    std::ostringstream os;
    switch (kind) {
    case Kind::conforms:
        os << "conforms (" << family.sets().size() << " <= " << family.ground_size() << ")";
        break;
    case Kind::intersection_violation:
        os << "intersection-violation: " << show(family.sets()[first]) << " and "
           << show(family.sets()[second]) << " meet in " << intersection << " elements, expected "
           << family.k();
        break;
    case Kind::cardinality_violation:
        os << "cardinality-violation (" << family.sets().size() << " > " << family.ground_size()
           << ")";
        break;
    }
    return os.str();
}

} // namespace boib
