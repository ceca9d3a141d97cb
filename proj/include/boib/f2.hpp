// Linear algebra over the two-element field.
//
// F2Vector is a bit-packed, immutable value; F2Matrix is an ordered list of
// equal-length rows. All elimination is Gauss-Jordan with first-nonzero-column
// pivoting, so reduced forms and kernel bases are deterministic.

#ifndef BOIB_F2_HPP
#define BOIB_F2_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace boib {

class F2Vector
{
public:
    using Word = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    F2Vector() = default;
    explicit F2Vector(std::size_t length);

    static F2Vector from_support(std::size_t length, std::span<const std::size_t> support);
    static F2Vector from_support(std::size_t length, std::initializer_list<std::size_t> support);
    static F2Vector unit(std::size_t length, std::size_t index);
    /// Parses a string of '0'/'1' characters, index 0 first.
    static F2Vector from_string(std::string_view bits);
    static F2Vector from_words(std::size_t length, std::vector<Word> words);

    std::size_t length() const noexcept { return length_; }
    bool test(std::size_t index) const;
    bool is_zero() const noexcept;

    /// Number of coordinates equal to 1.
    std::size_t weight() const noexcept;
    /// Indices of the coordinates equal to 1, ascending.
    std::vector<std::size_t> support() const;
    /// Index of the lowest set coordinate, or length() for the zero vector.
    std::size_t first_set() const noexcept;

    /// Copy with coordinate `index` flipped.
    F2Vector flipped(std::size_t index) const;

    std::span<const Word> words() const noexcept { return words_; }

    std::string to_string() const;

    friend F2Vector operator+(const F2Vector& a, const F2Vector& b);
    friend bool operator==(const F2Vector& a, const F2Vector& b) = default;

private:
    friend class F2Matrix;
    friend void for_each_in_span(std::span<const F2Vector>, std::size_t,
                                 const std::function<void(const F2Vector&)>&);
    void xor_with(const F2Vector& other) noexcept;

    std::size_t length_ = 0;
    std::vector<Word> words_;
};

/// |support(a) ∩ support(b)|.
std::size_t overlap(const F2Vector& a, const F2Vector& b);

/// Lexicographic order of the ascending support sequences.
bool support_less(const F2Vector& a, const F2Vector& b);

class F2Matrix
{
public:
    F2Matrix() = default;
    /// Zero matrix.
    F2Matrix(std::size_t rows, std::size_t cols);
    /// Rows must share one length; that length becomes the column count.
    explicit F2Matrix(std::vector<F2Vector> rows);
    /// Explicit column count, so matrices with no rows keep their width.
    F2Matrix(std::size_t cols, std::vector<F2Vector> rows);

    static F2Matrix identity(std::size_t n);
    /// Each string is one row of '0'/'1'.
    static F2Matrix from_strings(std::initializer_list<std::string_view> rows);

    std::size_t row_count() const noexcept { return rows_.size(); }
    std::size_t col_count() const noexcept { return cols_; }
    const std::vector<F2Vector>& rows() const noexcept { return rows_; }
    const F2Vector& row(std::size_t i) const { return rows_.at(i); }
    bool get(std::size_t r, std::size_t c) const { return rows_.at(r).test(c); }

    F2Matrix with_entry(std::size_t r, std::size_t c, bool value) const;
    F2Matrix transposed() const;
    F2Matrix reduced() const;
    std::vector<std::size_t> pivot_columns() const;

    std::size_t rank() const;

    /// Basis of { x : M x = 0 }, x indexed by columns. Dimension is
    /// col_count() - rank(); one vector per free column of the reduced form.
    std::vector<F2Vector> kernel_basis() const;

    /// M x, a vector indexed by rows.
    F2Vector apply(const F2Vector& x) const;

    /// Product this * other.
    F2Matrix multiply(const F2Matrix& other) const;

    bool is_zero() const noexcept;

    /// Drops the listed rows and columns; indices refer to this matrix.
    F2Matrix without(std::span<const std::size_t> drop_rows,
                     std::span<const std::size_t> drop_cols) const;

    std::string to_string() const;

    friend bool operator==(const F2Matrix& a, const F2Matrix& b) = default;

private:
    std::size_t cols_ = 0;
    std::vector<F2Vector> rows_;
};

/// Rank of the span of a list of equal-length vectors.
std::size_t rank_of(std::span<const F2Vector> vectors);

/// Reduced echelon basis of span(vectors); empty when the span is zero.
std::vector<F2Vector> reduce_basis(std::span<const F2Vector> vectors);

/// Whether v lies in span(basis).
bool in_span(std::span<const F2Vector> basis, const F2Vector& v);

/// Basis of span(a) ∩ span(b) (Zassenhaus). Vectors must share one length;
/// `length` is needed when both lists are empty.
std::vector<F2Vector> intersect_subspaces(std::span<const F2Vector> a,
                                          std::span<const F2Vector> b,
                                          std::size_t length);

/// Largest rank accepted by subspace enumeration.
inline constexpr std::size_t max_enumeration_rank = 24;

/// Calls `visit` once for every element of span(basis), zero included, in
/// binary-counter order over the reduced basis. Throws BasisTooLarge when
/// rank exceeds max_enumeration_rank.
void for_each_in_span(std::span<const F2Vector> basis, std::size_t length,
                      const std::function<void(const F2Vector&)>& visit);

/// All 2^rank elements of span(basis).
std::vector<F2Vector> enumerate_subspace(std::span<const F2Vector> basis, std::size_t length);

} // namespace boib

#endif // BOIB_F2_HPP
