#include "boib/document.hpp"

#include "boib/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

namespace boib {

using nlohmann::json;

namespace {

std::size_t line_of_offset(std::string_view text, std::size_t offset)
{
    offset = std::min(offset, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

// nlohmann::json keeps no source positions, so schema errors are located by
// searching for the section key and then the element's id.
std::size_t locate(std::string_view text, std::string_view section, std::string_view id)
{
    const std::string key = "\"" + std::string(section) + "\"";
    std::size_t at = text.find(key);
    if (at == std::string_view::npos)
        return 1;
    if (!id.empty()) {
        const std::string quoted = "\"" + std::string(id) + "\"";
        const std::size_t hit = text.find(quoted, at);
        if (hit != std::string_view::npos)
            at = hit;
    }
    return line_of_offset(text, at);
}

json parse_json(std::string_view text)
{
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw SyntaxError(line_of_offset(text, e.byte > 0 ? e.byte - 1 : 0), e.what());
    }
}

class Section
{
public:
    Section(std::string_view text, std::string name) : text_(text), name_(std::move(name)) {}

    [[noreturn]] void fail(std::size_t index, const std::string& id, const std::string& what) const
    {
        throw SyntaxError(locate(text_, name_, id),
                          name_ + "[" + std::to_string(index) + "]: " + what);
    }

    std::string string_field(const json& item, std::size_t index, const char* key,
                             const std::string& id) const
    {
        const auto it = item.find(key);
        if (it == item.end() || !it->is_string())
            fail(index, id, std::string("field '") + key + "' must be a string");
        return it->get<std::string>();
    }

    int int_field(const json& item, std::size_t index, const char* key, const std::string& id,
                  std::optional<int> fallback = std::nullopt) const
    {
        const auto it = item.find(key);
        if (it == item.end()) {
            if (fallback)
                return *fallback;
            fail(index, id, std::string("missing integer field '") + key + "'");
        }
        if (!it->is_number_integer())
            fail(index, id, std::string("field '") + key + "' must be an integer");
        return it->get<int>();
    }

    bool bool_field(const json& item, std::size_t index, const char* key,
                    const std::string& id) const
    {
        const auto it = item.find(key);
        if (it == item.end() || !it->is_boolean())
            fail(index, id, std::string("field '") + key + "' must be true or false");
        return it->get<bool>();
    }

    std::vector<json> items(const json& doc) const
    {
        const auto it = doc.find(name_);
        if (it == doc.end())
            return {};
        if (!it->is_array())
            throw SyntaxError(locate(text_, name_, ""), "'" + name_ + "' must be an array");
        std::vector<json> out;
        for (std::size_t i = 0; i < it->size(); ++i) {
            if (!(*it)[i].is_object())
                fail(i, "", "expected an object");
            out.push_back((*it)[i]);
        }
        return out;
    }

    std::string id_of(const json& item, std::size_t index) const
    {
        return string_field(item, index, "id", "");
    }

private:
    std::string_view text_;
    std::string name_;
};

} // namespace

Book parse_book(std::string_view text)
{
    if (std::all_of(text.begin(), text.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }))
        return Book{};

    const json doc = parse_json(text);
    if (!doc.is_object())
        throw SyntaxError(1, "book document must be a JSON object");

    const Section bsec(text, "bindings");
    std::vector<Binding> bindings;
    const auto bitems = bsec.items(doc);
    for (std::size_t i = 0; i < bitems.size(); ++i) {
        const std::string id = bsec.id_of(bitems[i], i);
        bindings.push_back(Binding{id, bsec.int_field(bitems[i], i, "degree", id)});
    }

    const Section psec(text, "pages");
    std::vector<Page> pages;
    const auto pitems = psec.items(doc);
    for (std::size_t i = 0; i < pitems.size(); ++i) {
        const std::string id = psec.id_of(pitems[i], i);
        pages.push_back(Page{id, SurfaceSignature{
                                     psec.bool_field(pitems[i], i, "orientable", id),
                                     psec.int_field(pitems[i], i, "genus_or_crosscaps", id),
                                     psec.int_field(pitems[i], i, "boundary_circles", id),
                                 }});
    }

    const Section asec(text, "annuli");
    std::vector<Annulus> annuli;
    const auto aitems = asec.items(doc);
    for (std::size_t i = 0; i < aitems.size(); ++i) {
        const std::string id = asec.id_of(aitems[i], i);
        annuli.push_back(Annulus{id, asec.string_field(aitems[i], i, "page", id),
                                 asec.string_field(aitems[i], i, "binding", id),
                                 asec.int_field(aitems[i], i, "circle_index", id),
                                 asec.int_field(aitems[i], i, "cover_degree", id, 1)});
    }

    return Book(std::move(bindings), std::move(pages), std::move(annuli));
}

Book parse_book(std::string_view text, ValidationMode mode)
{
    Book book = parse_book(text);
    const auto report = validate(book, mode);
    if (!report.ok())
        throw InvalidBook(report.to_string());
    return book;
}

std::string print_book(const Book& book)
{
    json bindings = json::array();
    for (const auto& b : book.bindings())
        bindings.push_back(json{{"id", b.id}, {"degree", b.degree}});
    json pages = json::array();
    for (const auto& p : book.pages())
        pages.push_back(json{{"id", p.id},
                             {"orientable", p.base.orientable},
                             {"genus_or_crosscaps", p.base.genus_or_crosscaps},
                             {"boundary_circles", p.base.boundary_circles}});
    json annuli = json::array();
    for (const auto& a : book.annuli())
        annuli.push_back(json{{"id", a.id},
                              {"page", a.page},
                              {"binding", a.binding},
                              {"circle_index", a.circle_index},
                              {"cover_degree", a.cover_degree}});
    json doc = json::object();
    doc["bindings"] = std::move(bindings);
    doc["pages"] = std::move(pages);
    doc["annuli"] = std::move(annuli);
    return doc.dump(2) + "\n";
}

SetFamily parse_set_family(std::string_view text)
{
    const json doc = parse_json(text);
    if (!doc.is_object())
        throw SyntaxError(1, "set family document must be a JSON object");
    auto count = [&](const char* key) {
        const auto it = doc.find(key);
        if (it == doc.end() || !it->is_number_unsigned())
            throw SyntaxError(locate(text, key, ""),
                              std::string("field '") + key + "' must be a non-negative integer");
        return it->get<std::size_t>();
    };
    const std::size_t n = count("n");
    const std::size_t k = count("k");
    const auto sets_it = doc.find("sets");
    if (sets_it == doc.end() || !sets_it->is_array())
        throw SyntaxError(locate(text, "sets", ""), "field 'sets' must be an array of arrays");
    std::vector<SetFamily::Set> sets;
    for (const auto& s : *sets_it) {
        if (!s.is_array())
            throw SyntaxError(locate(text, "sets", ""), "each set must be an array of integers");
        SetFamily::Set set;
        for (const auto& x : s) {
            if (!x.is_number_unsigned())
                throw SyntaxError(locate(text, "sets", ""), "set elements must be non-negative integers");
            set.insert(x.get<std::size_t>());
        }
        sets.push_back(std::move(set));
    }
    return SetFamily(n, std::move(sets), k);
}

std::string print_set_family(const SetFamily& family)
{
    json sets = json::array();
    for (const auto& s : family.sets())
        sets.push_back(json(std::vector<std::size_t>(s.begin(), s.end())));
    json doc = json::object();
    doc["n"] = family.ground_size();
    doc["k"] = family.k();
    doc["sets"] = std::move(sets);
    return doc.dump() + "\n";
}

std::vector<F2Vector> parse_vectors(std::string_view text)
{
    std::vector<F2Vector> out;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        line.erase(std::remove_if(line.begin(), line.end(),
                                  [](char c) { return std::isspace(static_cast<unsigned char>(c)); }),
                   line.end());
        if (line.empty() || line.front() == '#')
            continue;
        if (line.find_first_not_of("01") != std::string::npos)
            throw SyntaxError(number, "vector rows may only contain '0' and '1'");
        if (!out.empty() && out.front().length() != line.size())
            throw SyntaxError(number, "row of length " + std::to_string(line.size())
                                          + ", expected " + std::to_string(out.front().length()));
        out.push_back(F2Vector::from_string(line));
    }
    return out;
}

std::string print_vectors(const std::vector<F2Vector>& vectors)
{
    std::string s;
    for (const auto& v : vectors)
        s += v.to_string() + "\n";
    return s;
}

std::string read_text_file(const std::string& path)
{
    if (path == "-")
        return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

} // namespace boib
