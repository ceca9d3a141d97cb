// boib: command line front end.
//
// Exit codes: 0 success, 1 malformed or invalid input, 2 violated
// precondition, 3 internal contradiction (a certification or cross-check
// failed, which means a bug).

#include "boib/boundary.hpp"
#include "boib/checks.hpp"
#include "boib/cw.hpp"
#include "boib/document.hpp"
#include "boib/error.hpp"
#include "boib/lowweight.hpp"
#include "boib/seashore.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace boib;

constexpr int exit_ok = 0;
constexpr int exit_input = 1;
constexpr int exit_precondition = 2;
constexpr int exit_contradiction = 3;

std::string join(const std::vector<std::string>& items)
{
    std::string s;
    for (const auto& x : items)
        s += (s.empty() ? "" : ",") + x;
    return s;
}

Book load(const std::string& path) { return parse_book(read_text_file(path), ValidationMode::permissive); }

int cmd_validate(const std::string& path, bool strict)
{
    const Book book = parse_book(read_text_file(path));
    const auto report = validate(book, strict ? ValidationMode::strict : ValidationMode::permissive);
    if (report.ok()) {
        std::cout << "valid (" << (strict ? "strict" : "permissive") << "): " << book.page_count()
                  << " pages, " << book.binding_count() << " bindings, " << book.annuli().size()
                  << " annuli, chibar " << book.chibar() << "\n";
        return exit_ok;
    }
    std::cout << report.to_string();
    return exit_input;
}

int cmd_delta(const std::string& path, const std::vector<std::string>& b0)
{
    const Book book = load(path);
    const F2Matrix d = delta(book, BindingSet(b0.begin(), b0.end()));
    for (const auto& row : d.rows())
        std::cout << row.to_string() << "\n";
    return exit_ok;
}

int cmd_homology(const std::string& path, const std::vector<std::string>& rel_pages,
                 const std::vector<std::string>& rel_bindings, bool pages_given, bool bindings_given)
{
    const Book book = load(path);
    HomologyRanks h;
    std::size_t kernel = 0;
    if (pages_given) {
        const SubBook sub = induced_subbook(book, std::span<const std::string>(rel_pages));
        h = relative_ranks(book, sub);
        // Excision: the pages outside the sub-book, relative to the bindings
        // they share with it.
        const SubBook rest = complement(book, sub);
        BindingSet shared;
        for (std::size_t b : rest.bindings)
            if (std::binary_search(sub.bindings.begin(), sub.bindings.end(), b))
                shared.insert(book.bindings()[b].id);
        kernel = h2_rank(materialize(book, rest), shared);
    } else if (bindings_given) {
        const BindingSet b0(rel_bindings.begin(), rel_bindings.end());
        h = relative_ranks(book, b0);
        kernel = h2_rank(book, b0);
    } else {
        h = homology_ranks(build_cw(book));
        kernel = h2_rank(book);
    }
    const bool agree = h.h2 == kernel;
    std::cout << to_string(h) << "; ker(\xCE\x94)=" << kernel << "; " << (agree ? "AGREE" : "DISAGREE")
              << "\n";
    if (agree)
        return exit_ok;
    // The two paths are only claimed to agree when every annulus has cover degree 1.
    const bool unit_covers = std::all_of(book.annuli().begin(), book.annuli().end(),
                                         [](const Annulus& a) { return a.cover_degree == 1; });
    if (!unit_covers) {
        std::cout << "note: cover degree 2 present; agreement not expected\n";
        return exit_ok;
    }
    return exit_contradiction;
}

int cmd_seashore(const std::string& path, int m)
{
    const Book book = load(path);
    const SubBook s = seashore(book, m);
    const Book y = materialize(book, s);
    const bool connected = is_connected(book, s);
    const int chi = chibar(book, s);
    const std::size_t kernel = h2_rank(y);
    const std::size_t cw = homology_ranks(build_cw(y)).h2;

    auto mark = [](bool ok) { return ok ? "pass" : "FAIL"; };
    std::cout << "pages: " << join(page_ids(book, s)) << "\n"
              << "connected: " << mark(connected) << "\n"
              << "chibar = " << chi << " (m = " << m << "): " << mark(chi == m) << "\n"
              << "H2 != 0: " << mark(kernel > 0 && cw > 0) << " (ker(\xCE\x94)=" << kernel
              << ", cw h2=" << cw << ")\n";
    return connected && chi == m && kernel > 0 && cw > 0 ? exit_ok : exit_contradiction;
}

int cmd_minweight(std::size_t dim, std::size_t m, const std::string& basis_path)
{
    SubspaceProblem p{dim, m, parse_vectors(read_text_file(basis_path))};
    const SmallSupport s = find_small_support_traced(p);
    const char* route = s.route == SupportCase::split ? "split"
                        : s.route == SupportCase::scan ? "scan"
                                                       : "echelon";
    std::cout << "witness: " << s.alpha.to_string() << "\n"
              << "weight: " << s.alpha.weight() << " (m = " << m << ")\n"
              << "route: " << route << "\n";
    if (s.beta)
        std::cout << "beta: " << s.beta->to_string() << " (weight " << s.beta->weight() << ")\n";
    if (s.alpha.weight() == 0 || s.alpha.weight() > m || !in_span(p.basis, s.alpha))
        throw InternalContradiction("witness failed its own certificate");

    const std::size_t rank = rank_of(p.basis);
    if (rank <= full_scan_rank) {
        const MinWeight best = min_weight_oracle(p.basis);
        const bool ok = best.weight <= s.alpha.weight() && s.alpha.weight() <= m;
        std::cout << "oracle: minimum weight " << best.weight << " (" << best.witness.to_string()
                  << "): " << (ok ? "consistent" : "INCONSISTENT") << "\n";
        if (!ok)
            return exit_contradiction;
    } else {
        std::cout << "oracle: skipped (rank " << rank << " > " << full_scan_rank << ")\n";
    }
    return exit_ok;
}

int cmd_fisher(const std::string& path)
{
    const SetFamily family = parse_set_family(read_text_file(path));
    const FisherVerdict v = fisher_check(family);
    std::cout << v.describe(family) << "\n";
    switch (v.kind) {
    case FisherVerdict::Kind::conforms:
        return exit_ok;
    case FisherVerdict::Kind::intersection_violation:
        return exit_input;
    case FisherVerdict::Kind::cardinality_violation:
        break;
    }
    return exit_contradiction;
}

int cmd_check(const SuiteOptions& options, bool verbose)
{
    const auto outcomes = run_suite(options);
    std::size_t properties = 0;
    std::size_t failures = 0;
    std::size_t bad_seeds = 0;
    for (const auto& o : outcomes) {
        properties += o.properties;
        failures += o.failures.size();
        if (!o.failures.empty())
            ++bad_seeds;
        for (const auto& f : o.failures)
            std::cout << "seed " << o.seed << ": " << f << "\n";
        if (verbose && o.failures.empty())
            std::cout << "seed " << o.seed << ": ok\n";
    }
    std::cout << "checked " << outcomes.size() << " seeds (" << properties << " property groups): "
              << failures << " failures in " << bad_seeds << " seeds\n";
    return failures == 0 ? exit_ok : exit_contradiction;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Mod-2 homology tools for books of I-bundles"};
    app.require_subcommand(1);

    std::string file;
    bool strict = false;
    auto* validate_cmd = app.add_subcommand("validate", "check a book document");
    validate_cmd->add_option("FILE", file, "book document ('-' for stdin)")->required();
    validate_cmd->add_flag("--strict", strict, "reject pages with chi = 0");

    std::vector<std::string> b0;
    auto* delta_cmd = app.add_subcommand("delta", "print the boundary matrix, one row per binding");
    delta_cmd->add_option("FILE", file, "book document")->required();
    delta_cmd->add_option("--b0", b0, "bindings to drop")->delimiter(',');

    std::vector<std::string> rel_pages;
    std::vector<std::string> rel_bindings;
    auto* homology_cmd = app.add_subcommand("homology", "mod-2 homology ranks, checked against ker(delta)");
    homology_cmd->add_option("FILE", file, "book document")->required();
    auto* pages_opt = homology_cmd->add_option("--rel-pages", rel_pages, "relative to this sub-book")
                          ->delimiter(',');
    auto* bindings_opt =
        homology_cmd->add_option("--rel-bindings", rel_bindings, "relative to these bindings")
            ->delimiter(',');
    pages_opt->excludes(bindings_opt);

    int m = 0;
    auto* seashore_cmd = app.add_subcommand("seashore", "connected sub-book with chibar m and H2 != 0");
    seashore_cmd->add_option("FILE", file, "book document")->required();
    seashore_cmd->add_option("--m", m, "half the chibar of the book")->required();

    std::size_t dim = 0;
    std::size_t wm = 0;
    std::string basis;
    auto* minweight_cmd = app.add_subcommand("minweight", "nonzero element of weight <= m");
    minweight_cmd->add_option("--dim", dim, "ambient dimension 2m")->required();
    minweight_cmd->add_option("--m", wm, "weight bound")->required();
    minweight_cmd->add_option("--basis", basis, "spanning vectors, one 0/1 row per line")->required();

    auto* fisher_cmd = app.add_subcommand("fisher", "check a k-intersecting set family");
    fisher_cmd->add_option("FILE", file, "set family document")->required();

    SuiteOptions suite;
    bool verbose = false;
    auto* check_cmd = app.add_subcommand("check", "randomized invariant suite");
    check_cmd->add_option("--seeds", suite.seeds, "number of seeds")->required();
    check_cmd->add_option("--max-pages", suite.max_pages, "largest generated book")
        ->check(CLI::Range(1, 64));
    check_cmd->add_option("--first-seed", suite.first_seed, "first seed");
    check_cmd->add_option("--threads", suite.threads, "worker threads (0: all cores)");
    check_cmd->add_flag("-v,--verbose", verbose, "report passing seeds too");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input;
    }

    try {
        if (*validate_cmd)
            return cmd_validate(file, strict);
        if (*delta_cmd)
            return cmd_delta(file, b0);
        if (*homology_cmd)
            return cmd_homology(file, rel_pages, rel_bindings, pages_opt->count() > 0,
                                bindings_opt->count() > 0);
        if (*seashore_cmd)
            return cmd_seashore(file, m);
        if (*minweight_cmd)
            return cmd_minweight(dim, wm, basis);
        if (*fisher_cmd)
            return cmd_fisher(file);
        if (*check_cmd)
            return cmd_check(suite, verbose);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const PreconditionViolated& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return exit_precondition;
    } catch (const InternalContradiction& e) {
        std::cerr << "internal contradiction: " << e.what() << "\n";
        return exit_contradiction;
    }
    return exit_input;
}
