// Combinatorial books of I-bundles.
//
// A book is a set of bindings (solid tori, each with a winding degree), pages
// (I-bundles, recorded by the signature of their base surface) and vertical
// annuli joining a boundary circle of a page base to a binding. Only the
// incidence data is stored; every quantity the library computes is a function
// of it.
//
// Pages, bindings and annuli are addressed by string id in documents and by
// their position in the book everywhere else. "Lowest id" tie-breaks use that
// position, i.e. declaration order.

#ifndef BOIB_BOOK_HPP
#define BOIB_BOOK_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace boib {

struct Binding
{
    std::string id;
    int degree = 1;

    friend bool operator==(const Binding&, const Binding&) = default;
};

struct SurfaceSignature
{
    bool orientable = true;
    int genus_or_crosscaps = 0;
    int boundary_circles = 1;

    /// 2 - 2g - b if orientable, 2 - c - b otherwise.
    int euler_characteristic() const noexcept;
    int chibar() const noexcept { return -euler_characteristic(); }

    friend bool operator==(const SurfaceSignature&, const SurfaceSignature&) = default;
};

struct Page
{
    std::string id;
    SurfaceSignature base;

    friend bool operator==(const Page&, const Page&) = default;
};

struct Annulus
{
    std::string id;
    std::string page;
    std::string binding;
    int circle_index = 0;
    /// Times the annulus core covers its base boundary circle (1 or 2).
    int cover_degree = 1;

    friend bool operator==(const Annulus&, const Annulus&) = default;
};

class Book
{
public:
    Book() = default;

    /// Checks id uniqueness within each kind (InvalidBook) and that every
    /// annulus names an existing page and binding (UnknownId). All other
    /// invariants are left to validate().
    Book(std::vector<Binding> bindings, std::vector<Page> pages, std::vector<Annulus> annuli);

    const std::vector<Binding>& bindings() const noexcept { return bindings_; }
    const std::vector<Page>& pages() const noexcept { return pages_; }
    const std::vector<Annulus>& annuli() const noexcept { return annuli_; }

    std::size_t page_count() const noexcept { return pages_.size(); }
    std::size_t binding_count() const noexcept { return bindings_.size(); }

    std::optional<std::size_t> find_page(std::string_view id) const;
    std::optional<std::size_t> find_binding(std::string_view id) const;
    /// Throw UnknownId when absent.
    std::size_t page_index(std::string_view id) const;
    std::size_t binding_index(std::string_view id) const;

    std::size_t annulus_page(std::size_t annulus) const { return annulus_page_.at(annulus); }
    std::size_t annulus_binding(std::size_t annulus) const { return annulus_binding_.at(annulus); }
    const std::vector<std::size_t>& annuli_of_page(std::size_t page) const { return by_page_.at(page); }
    const std::vector<std::size_t>& annuli_of_binding(std::size_t binding) const
    {
        return by_binding_.at(binding);
    }

    /// Number of annuli on the binding.
    std::size_t valence(std::size_t binding) const { return by_binding_.at(binding).size(); }

    /// Sum of page chibar; bindings and annuli contribute nothing.
    int chibar() const noexcept;

    friend bool operator==(const Book& a, const Book& b)
    {
        return a.bindings_ == b.bindings_ && a.pages_ == b.pages_ && a.annuli_ == b.annuli_;
    }

private:
    std::vector<Binding> bindings_;
    std::vector<Page> pages_;
    std::vector<Annulus> annuli_;

    std::unordered_map<std::string, std::size_t> page_lookup_;
    std::unordered_map<std::string, std::size_t> binding_lookup_;
    std::vector<std::size_t> annulus_page_;
    std::vector<std::size_t> annulus_binding_;
    std::vector<std::vector<std::size_t>> by_page_;
    std::vector<std::vector<std::size_t>> by_binding_;
};

// ---------------------------------------------------------------------------
// Validation

enum class ValidationMode
{
    strict,      ///< every page has chi < 0
    permissive,  ///< pages with chi == 0 tolerated
};

enum class ViolationKind
{
    nonpositive_degree,
    binding_meets_no_page,
    bad_signature,              ///< negative genus/crosscaps or no boundary circle
    positive_euler_characteristic,
    zero_euler_characteristic,  ///< strict mode only
    annulus_circle_mismatch,    ///< annulus count differs from boundary circle count
    circle_index_out_of_range,
    duplicate_circle,
    bad_cover_degree,
};

std::string_view to_string(ViolationKind kind);

struct Violation
{
    ViolationKind kind;
    std::string subject;  ///< id of the offending page, binding or annulus
    std::string message;
};

struct ValidationReport
{
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
    bool has(ViolationKind kind) const;
    std::string to_string() const;
};

ValidationReport validate(const Book& book, ValidationMode mode);

// ---------------------------------------------------------------------------
// Sub-books

/// A set of pages of a parent book together with every binding meeting them.
/// Both lists are ascending indices into the parent.
struct SubBook
{
    std::vector<std::size_t> pages;
    std::vector<std::size_t> bindings;

    bool empty() const noexcept { return pages.empty(); }
    friend bool operator==(const SubBook&, const SubBook&) = default;
};

SubBook induced_subbook(const Book& book, std::span<const std::size_t> pages);
/// Throws UnknownId for an unknown page id.
SubBook induced_subbook(const Book& book, std::span<const std::string> page_ids);
SubBook whole_book(const Book& book);

/// Complementary pages, with their incident bindings.
SubBook complement(const Book& book, const SubBook& sub);

int chibar(const Book& book, const SubBook& sub);

/// Connected components of the page-binding incidence graph restricted to
/// `sub`, each as an induced sub-book, ordered by lowest page index.
std::vector<SubBook> components(const Book& book, const SubBook& sub);
std::vector<SubBook> components(const Book& book);

/// Non-empty and a single component.
bool is_connected(const Book& book, const SubBook& sub);
bool is_connected(const Book& book);

/// The sub-book as a book of its own: its pages, their bindings, and the
/// annuli of its pages. Order of the parent is kept.
Book materialize(const Book& book, const SubBook& sub);

std::vector<std::string> page_ids(const Book& book, const SubBook& sub);
std::vector<std::string> binding_ids(const Book& book, const SubBook& sub);

/// Ids of all objects prefixed, e.g. to build disjoint unions.
Book with_prefix(const Book& book, const std::string& prefix);

/// Both books side by side. Throws InvalidBook on an id collision.
Book disjoint_union(const Book& a, const Book& b);

} // namespace boib

#endif // BOIB_BOOK_HPP
