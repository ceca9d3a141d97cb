#include "boib/f2.hpp"

#include "boib/error.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace boib {

namespace {

std::size_t word_count(std::size_t length)
{
    return (length + F2Vector::word_bits - 1) / F2Vector::word_bits;
}

void require_same_length(const F2Vector& a, const F2Vector& b)
{
    if (a.length() != b.length())
        throw std::invalid_argument("F2Vector length mismatch: " + std::to_string(a.length())
                                    + " vs " + std::to_string(b.length()));
}

std::size_t common_length(std::span<const F2Vector> vectors, std::size_t fallback)
{
    if (vectors.empty())
        return fallback;
    const std::size_t n = vectors.front().length();
    for (const auto& v : vectors)
        if (v.length() != n)
            throw std::invalid_argument("vectors of unequal length");
    return n;
}

// In-place Gauss-Jordan on a row list. Returns pivot columns, one per
// surviving row; zero rows are removed.
std::vector<std::size_t> gauss_jordan(std::vector<F2Vector>& rows, std::size_t cols,
                                      auto&& xor_rows)
{
    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    for (std::size_t c = 0; c < cols && next < rows.size(); ++c) {
        std::size_t pick = next;
        while (pick < rows.size() && !rows[pick].test(c))
            ++pick;
        if (pick == rows.size())
            continue;
        std::swap(rows[next], rows[pick]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != next && rows[r].test(c))
                xor_rows(rows[r], rows[next]);
        pivots.push_back(c);
        ++next;
    }
    rows.resize(next);
    return pivots;
}

} // namespace

F2Vector::F2Vector(std::size_t length) : length_(length), words_(word_count(length), 0) {}

F2Vector F2Vector::from_support(std::size_t length, std::span<const std::size_t> support)
{
    F2Vector v(length);
    for (std::size_t i : support) {
        if (i >= length)
            throw std::out_of_range("support index " + std::to_string(i) + " >= length "
                                    + std::to_string(length));
        v.words_[i / word_bits] |= Word{1} << (i % word_bits);
    }
    return v;
}

F2Vector F2Vector::from_support(std::size_t length, std::initializer_list<std::size_t> support)
{
    return from_support(length, std::span<const std::size_t>(support.begin(), support.size()));
}

F2Vector F2Vector::unit(std::size_t length, std::size_t index)
{
    return from_support(length, {index});
}

F2Vector F2Vector::from_string(std::string_view bits)
{
    F2Vector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            v.words_[i / word_bits] |= Word{1} << (i % word_bits);
        else if (bits[i] != '0')
            throw std::invalid_argument("bit string may only contain '0' and '1'");
    }
    return v;
}

F2Vector F2Vector::from_words(std::size_t length, std::vector<Word> words)
{
    if (words.size() != word_count(length))
        throw std::invalid_argument("word count does not match length");
    if (length % word_bits != 0 && !words.empty()) {
        const Word mask = (Word{1} << (length % word_bits)) - 1;
        if (words.back() & ~mask)
            throw std::invalid_argument("bits set beyond vector length");
    }
    F2Vector v;
    v.length_ = length;
    v.words_ = std::move(words);
    return v;
}

bool F2Vector::test(std::size_t index) const
{
    if (index >= length_)
        throw std::out_of_range("F2Vector index out of range");
    return (words_[index / word_bits] >> (index % word_bits)) & 1u;
}

bool F2Vector::is_zero() const noexcept
{
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::size_t F2Vector::weight() const noexcept
{
    std::size_t total = 0;
    for (Word w : words_)
        total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

std::vector<std::size_t> F2Vector::support() const
{
    std::vector<std::size_t> out;
    out.reserve(weight());
    for (std::size_t k = 0; k < words_.size(); ++k) {
        Word w = words_[k];
        while (w) {
            out.push_back(k * word_bits + static_cast<std::size_t>(std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

std::size_t F2Vector::first_set() const noexcept
{
    for (std::size_t k = 0; k < words_.size(); ++k)
        if (words_[k])
            return k * word_bits + static_cast<std::size_t>(std::countr_zero(words_[k]));
    return length_;
}

F2Vector F2Vector::flipped(std::size_t index) const
{
    if (index >= length_)
        throw std::out_of_range("F2Vector index out of range");
    F2Vector v = *this;
    v.words_[index / word_bits] ^= Word{1} << (index % word_bits);
    return v;
}

std::string F2Vector::to_string() const
{
    std::string s(length_, '0');
    for (std::size_t i : support())
        s[i] = '1';
    return s;
}

void F2Vector::xor_with(const F2Vector& other) noexcept
{
    for (std::size_t k = 0; k < words_.size(); ++k)
        words_[k] ^= other.words_[k];
}

F2Vector operator+(const F2Vector& a, const F2Vector& b)
{
    require_same_length(a, b);
    F2Vector sum = a;
    sum.xor_with(b);
    return sum;
}

std::size_t overlap(const F2Vector& a, const F2Vector& b)
{
    require_same_length(a, b);
    std::size_t total = 0;
    auto wa = a.words();
    auto wb = b.words();
    for (std::size_t k = 0; k < wa.size(); ++k)
        total += static_cast<std::size_t>(std::popcount(wa[k] & wb[k]));
    return total;
}

bool support_less(const F2Vector& a, const F2Vector& b)
{
    const auto sa = a.support();
    const auto sb = b.support();
    return std::lexicographical_compare(sa.begin(), sa.end(), sb.begin(), sb.end());
}

// ---------------------------------------------------------------------------

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, F2Vector(cols)) {}

F2Matrix::F2Matrix(std::vector<F2Vector> rows)
    : cols_(common_length(rows, 0)), rows_(std::move(rows))
{
}

F2Matrix::F2Matrix(std::size_t cols, std::vector<F2Vector> rows)
    : cols_(common_length(rows, cols)), rows_(std::move(rows))
{
    if (cols_ != cols)
        throw std::invalid_argument("row length does not match column count");
}

F2Matrix F2Matrix::identity(std::size_t n)
{
    std::vector<F2Vector> rows;
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        rows.push_back(F2Vector::unit(n, i));
    return F2Matrix(n, std::move(rows));
}

F2Matrix F2Matrix::from_strings(std::initializer_list<std::string_view> rows)
{
    std::vector<F2Vector> out;
    for (auto r : rows)
        out.push_back(F2Vector::from_string(r));
    return F2Matrix(std::move(out));
}

F2Matrix F2Matrix::with_entry(std::size_t r, std::size_t c, bool value) const
{
    F2Matrix m = *this;
    if (m.rows_.at(r).test(c) != value)
        m.rows_[r] = m.rows_[r].flipped(c);
    return m;
}

F2Matrix F2Matrix::transposed() const
{
    std::vector<std::vector<std::size_t>> supports(cols_);
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (std::size_t c : rows_[r].support())
            supports[c].push_back(r);
    std::vector<F2Vector> out;
    out.reserve(cols_);
    for (const auto& s : supports)
        out.push_back(F2Vector::from_support(rows_.size(), s));
    return F2Matrix(rows_.size(), std::move(out));
}

F2Matrix F2Matrix::reduced() const
{
    std::vector<F2Vector> rows = rows_;
    gauss_jordan(rows, cols_, [](F2Vector& dst, const F2Vector& src) { dst.xor_with(src); });
    return F2Matrix(cols_, std::move(rows));
}

std::vector<std::size_t> F2Matrix::pivot_columns() const
{
    std::vector<F2Vector> rows = rows_;
    return gauss_jordan(rows, cols_, [](F2Vector& dst, const F2Vector& src) { dst.xor_with(src); });
}

std::size_t F2Matrix::rank() const
{
    return pivot_columns().size();
}

std::vector<F2Vector> F2Matrix::kernel_basis() const
{
    std::vector<F2Vector> rows = rows_;
    const auto pivots =
        gauss_jordan(rows, cols_, [](F2Vector& dst, const F2Vector& src) { dst.xor_with(src); });

    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t p : pivots)
        is_pivot[p] = true;

    // For free column f: x_f = 1, x_p = R[p-row][f] for each pivot column p.
    std::vector<F2Vector> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f])
            continue;
        std::vector<std::size_t> support{f};
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (rows[i].test(f))
                support.push_back(pivots[i]);
        std::sort(support.begin(), support.end());
        basis.push_back(F2Vector::from_support(cols_, support));
    }
    return basis;
}

F2Vector F2Matrix::apply(const F2Vector& x) const
{
    if (x.length() != cols_)
        throw std::invalid_argument("F2Matrix::apply: vector length does not match column count");
    std::vector<std::size_t> support;
    for (std::size_t r = 0; r < rows_.size(); ++r)
        if (overlap(rows_[r], x) % 2 == 1)
            support.push_back(r);
    return F2Vector::from_support(rows_.size(), support);
}

F2Matrix F2Matrix::multiply(const F2Matrix& other) const
{
    if (cols_ != other.row_count())
        throw std::invalid_argument("F2Matrix::multiply: dimension mismatch");
    const F2Matrix t = other.transposed();
    std::vector<F2Vector> out;
    out.reserve(rows_.size());
    for (const auto& row : rows_)
        out.push_back(t.apply(row));
    return F2Matrix(other.col_count(), std::move(out));
}

bool F2Matrix::is_zero() const noexcept
{
    return std::all_of(rows_.begin(), rows_.end(), [](const F2Vector& r) { return r.is_zero(); });
}

F2Matrix F2Matrix::without(std::span<const std::size_t> drop_rows,
                           std::span<const std::size_t> drop_cols) const
{
    std::vector<bool> drop_r(rows_.size(), false);
    std::vector<bool> drop_c(cols_, false);
    for (std::size_t r : drop_rows)
        drop_r.at(r) = true;
    for (std::size_t c : drop_cols)
        drop_c.at(c) = true;

    std::vector<std::size_t> new_index(cols_, 0);
    std::size_t kept_cols = 0;
    for (std::size_t c = 0; c < cols_; ++c)
        if (!drop_c[c])
            new_index[c] = kept_cols++;

    std::vector<F2Vector> out;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (drop_r[r])
            continue;
        std::vector<std::size_t> support;
        for (std::size_t c : rows_[r].support())
            if (!drop_c[c])
                support.push_back(new_index[c]);
        out.push_back(F2Vector::from_support(kept_cols, support));
    }
    return F2Matrix(kept_cols, std::move(out));
}

std::string F2Matrix::to_string() const
{
    std::string s;
    for (const auto& r : rows_) {
        s += r.to_string();
        s += '\n';
    }
    return s;
}

// ---------------------------------------------------------------------------

std::vector<F2Vector> reduce_basis(std::span<const F2Vector> vectors)
{
    const std::size_t n = common_length(vectors, 0);
    return F2Matrix(n, std::vector<F2Vector>(vectors.begin(), vectors.end())).reduced().rows();
}

std::size_t rank_of(std::span<const F2Vector> vectors)
{
    return reduce_basis(vectors).size();
}

bool in_span(std::span<const F2Vector> basis, const F2Vector& v)
{
    std::vector<F2Vector> extended(basis.begin(), basis.end());
    const std::size_t before = rank_of(extended);
    extended.push_back(v);
    return rank_of(extended) == before;
}

std::vector<F2Vector> intersect_subspaces(std::span<const F2Vector> a, std::span<const F2Vector> b,
                                          std::size_t length)
{
    const std::size_t n = common_length(a, common_length(b, length));
    if (common_length(b, n) != n)
        throw std::invalid_argument("intersect_subspaces: operands of unequal length");

    // Rows (a | a) and (b | 0); after reduction the rows with a zero left half
    // carry a basis of the intersection in their right half.
    std::vector<F2Vector> rows;
    auto doubled = [n](const F2Vector& v, bool copy_right) {
        std::vector<std::size_t> s = v.support();
        if (copy_right)
            for (std::size_t i : v.support())
                s.push_back(n + i);
        return F2Vector::from_support(2 * n, s);
    };
    for (const auto& v : a)
        rows.push_back(doubled(v, true));
    for (const auto& v : b)
        rows.push_back(doubled(v, false));

    const F2Matrix red = F2Matrix(2 * n, std::move(rows)).reduced();
    std::vector<F2Vector> out;
    for (const auto& r : red.rows()) {
        if (r.first_set() < n)
            continue;
        std::vector<std::size_t> s;
        for (std::size_t i : r.support())
            s.push_back(i - n);
        out.push_back(F2Vector::from_support(n, s));
    }
    return reduce_basis(out);
}

void for_each_in_span(std::span<const F2Vector> basis, std::size_t length,
                      const std::function<void(const F2Vector&)>& visit)
{
    const std::size_t n = common_length(basis, length);
    const auto reduced = reduce_basis(basis);
    if (reduced.size() > max_enumeration_rank)
        throw BasisTooLarge("subspace of rank " + std::to_string(reduced.size())
                            + " exceeds enumeration limit of "
                            + std::to_string(max_enumeration_rank));
    // Binary counter: stepping c-1 -> c flips exactly the bits of c ^ (c-1).
    const std::uint64_t count = std::uint64_t{1} << reduced.size();
    F2Vector current(n);
    visit(current);
    for (std::uint64_t c = 1; c < count; ++c) {
        std::uint64_t changed = c ^ (c - 1);
        while (changed) {
            current.xor_with(reduced[static_cast<std::size_t>(std::countr_zero(changed))]);
            changed &= changed - 1;
        }
        visit(current);
    }
}

std::vector<F2Vector> enumerate_subspace(std::span<const F2Vector> basis, std::size_t length)
{
    std::vector<F2Vector> out;
    for_each_in_span(basis, length, [&out](const F2Vector& v) { out.push_back(v); });
    return out;
}

} // namespace boib
