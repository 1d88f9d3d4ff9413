#include "cumtree/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "cumtree/cumulants.hpp"
#include "cumtree/enumerate.hpp"
#include "cumtree/examples.hpp"
#include "cumtree/partitions.hpp"
#include "cumtree/peaks.hpp"
#include "cumtree/series.hpp"
#include "cumtree/troupe.hpp"

namespace cumtree::cli {

namespace {

/// Bad input detected after argument parsing; reported with exit status 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <typename T>
std::string join(const std::vector<T>& items, const char* sep = ",")
{
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i)
            out += sep;
        if constexpr (std::is_same_v<T, int>)
            out += std::to_string(items[i]);
        else
            out += to_string(items[i]);
    }
    return out;
}

std::vector<RingElem> parse_coeff_list(const std::string& text)
{
    std::vector<RingElem> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(parse_ring_elem(item));
    if (out.empty())
        throw UsageError("--coeffs needs at least one coefficient");
    return out;
}

std::string read_input(const std::string& path, std::istream& in)
{
    std::ostringstream ss;
    if (path == "-") {
        ss << in.rdbuf();
    } else {
        std::ifstream f(path);
        if (!f)
            throw UsageError("cannot open " + path);
        ss << f.rdbuf();
    }
    return ss.str();
}

enum class CountKind { tree, partition, descending_runs };

struct KindChoice {
    CountKind what = CountKind::tree;
    TreeFamily family = TreeFamily::bpt;
    PartitionClass partition = PartitionClass::all;
};

KindChoice parse_kind(const std::string& kind)
{
    if (kind == "D")
        return {CountKind::descending_runs, {}, {}};
    if (kind == "bpt" || kind == "branch" || kind == "dbpt")
        return {CountKind::tree, parse_tree_family(kind), {}};
    return {CountKind::partition, {}, parse_partition_class(kind)};
}

ColorWord tree_word(int n, const std::string& colors)
{
    if (colors.empty())
        return uniform_word(n);
    ColorWord w = parse_word(colors);
    if (static_cast<int>(w.size()) != n + 1)
        throw UsageError("--colors must have n + 1 letters (vertices, then the box)");
    return w;
}

int count_or_enumerate(bool list, const std::string& kind, int n, const std::string& colors, std::ostream& out)
{
    if (n < 0)
        throw UsageError("--n must be nonnegative");
    KindChoice k = parse_kind(kind);
    std::vector<std::string> items;
    switch (k.what) {
    case CountKind::tree: {
        ColorWord w = tree_word(n, colors);
        if (k.family == TreeFamily::dbpt) {
            for (const auto& t : enumerate_dbpt(w))
                items.push_back(to_string(t));
        } else {
            for (const auto& t : k.family == TreeFamily::bpt ? enumerate_bpt(w) : enumerate_branches(w))
                items.push_back(canonical_encode(t));
        }
        break;
    }
    case CountKind::partition:
        if (n < 1)
            throw UsageError("--n must be positive for partitions");
        for (const auto& p : enumerate_partitions(n, k.partition))
            items.push_back(to_string(p));
        break;
    case CountKind::descending_runs:
        if (n < 1)
            throw UsageError("--n must be positive for permutations");
        for (const auto& s : enumerate_D(n))
            items.push_back(to_string(s));
        break;
    }
    if (list) {
        for (const auto& s : items)
            out << s << '\n';
    } else {
        out << items.size() << '\n';
    }
    return kOk;
}

int transform(const std::string& coeffs, const std::string& series_path, std::size_t order, bool inverse, std::istream& in,
              std::ostream& out)
{
    if (coeffs.empty() == series_path.empty())
        throw UsageError("transform needs exactly one of --coeffs or --series");
    auto apply = [&](const Series& s) { return inverse ? inverse_troupe_transform(s) : troupe_transform(s); };
    if (!series_path.empty()) {
        Series s = parse_series(read_input(series_path, in));
        out << serialize(apply(s));
        return kOk;
    }
    if (order < 2)
        throw UsageError("--order must be at least 2");
    std::vector<RingElem> c{RingElem(0)};
    for (auto& x : parse_coeff_list(coeffs))
        c.push_back(std::move(x));
    Series result = apply(Series::from_coeffs(c, order));
    std::vector<RingElem> tail(result.coeffs().begin() + 1, result.coeffs().end());
    out << join(tail) << '\n';
    return kOk;
}

int cumulants(const std::string& path, std::istream& in, std::ostream& out)
{
    WordTable t = parse_word_table(read_input(path, in));
    t.require_dense();
    MomentFunctional phi{t};
    for (CumulantKind k : {CumulantKind::classical, CumulantKind::free, CumulantKind::boolean}) {
        out << "# " << to_string(k) << '\n';
        out << serialize(moments_to_cumulants(phi, k).table);
    }
    return kOk;
}

int verify(const std::string& troupe, int n, int colors, std::uint64_t seed, std::ostream& out)
{
    if (n < 1)
        throw UsageError("--n must be positive");
    if (colors < 1)
        throw UsageError("--colors must be a positive number of colors for verify");
    WeightedTroupe tau = troupe == "random" ? random_troupe(seed, static_cast<std::uint32_t>(colors), n)
                                            : make_troupe(troupe);
    const int max_len = n + 1;
    bool ok = true;
    out << "troupe " << tau.name() << ", words of length 1.." << max_len << " over " << colors << " color(s)\n";
    out << "columns: tree sum | from moments | from boolean table\n";
    for (const auto& r : verify_equivalence_all(tau, static_cast<std::uint32_t>(colors), max_len)) {
        auto cols = [](const ConditionCheck& c) {
            return to_string(c.enumeration) + " | " + to_string(c.partition_formula) + " | " + to_string(c.bridge);
        };
        out << to_string(r.word) << "  classical " << cols(r.classical) << "  free " << cols(r.free) << "  boolean "
            << cols(r.boolean) << (r.all_equal() ? "  ok" : "  MISMATCH") << '\n';
        ok = ok && r.all_equal();
    }
    const auto order = static_cast<std::size_t>(max_len) + 1;
    CumulantTable b = boolean_table_from_troupe(tau, static_cast<std::uint32_t>(colors), max_len);
    CumulantTable r = boolean_to_free(b);
    bool series_ok = boolean_free_series_check(univariate_series(b, order), univariate_series(r, order));
    out << "boolean/free series identity: " << (series_ok ? "ok" : "MISMATCH") << '\n';
    ok = ok && series_ok;
    out << (ok ? "PASS" : "FAIL") << '\n';
    return ok ? kOk : kVerificationFailed;
}

int peaks_command(const std::string& perm, std::ostream& out)
{
    Plot w(parse_permutation(perm));
    out << "peaks: " << join(peaks(w)) << '\n';
    auto parts = southeast_decomposition(w);
    for (std::size_t j = 0; j < parts.size(); ++j)
        out << "w" << j << ": " << to_string(parts[j]) << '\n';
    for (const auto& f : factors_from_plot(w))
        out << "factor: " << to_string(f) << '\n';
    return kOk;
}

int examples_command(const std::string& name, int order, std::ostream& out)
{
    if (order < 1)
        throw UsageError("--order must be positive");
    NamedSequence s = named_sequence(name, order);
    std::vector<RingElem> from_one(s.moments.begin() + 1, s.moments.end());
    MomentFunctional phi = MomentFunctional::univariate(from_one);
    std::vector<RingElem> k = classical_via_egf(s.moments);
    auto cumulant_row = [&](CumulantKind kind) {
        CumulantTable c = moments_to_cumulants(phi, kind);
        std::vector<RingElem> row;
        for (int n = 1; n <= order; ++n)
            row.push_back(c(ColorWord(static_cast<std::size_t>(n), Color{0})));
        return row;
    };
    std::vector<RingElem> r = cumulant_row(CumulantKind::free);
    std::vector<RingElem> b = cumulant_row(CumulantKind::boolean);
    out << "moments: " << join(s.moments, "; ") << '\n';
    out << "classical: " << join(k, "; ") << '\n';
    out << "free: " << join(r, "; ") << '\n';
    out << "boolean: " << join(b, "; ") << '\n';
    bool ok = k == s.classical && (!s.free || *s.free == r) && (!s.boolean || *s.boolean == b);
    out << "closed forms: " << (ok ? "match" : "MISMATCH") << '\n';
    return ok ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Weighted troupes, insertion factors and cumulants", "cumtree"};
    app.require_subcommand(1, 1);

    std::string kind = "bpt";
    std::string colors;
    int n = 0;
    auto add_family_options = [&](CLI::App* sub) {
        sub->add_option("--kind", kind, "bpt, branch, dbpt, all, interval, noncrossing, nc_irreducible, nc_irreducible_min2 or D");
        sub->add_option("--n", n, "tree size, or the size of the ground set")->required();
        sub->add_option("--colors", colors, "color word i1,...,i_{n+1} for tree families");
    };
    auto* count = app.add_subcommand("count", "number of objects of a kind");
    add_family_options(count);
    auto* enumerate = app.add_subcommand("enumerate", "list the objects of a kind, one per line");
    add_family_options(enumerate);

    std::string coeffs;
    std::string series_path;
    std::size_t order = 8;
    bool inverse = false;
    auto* transform_cmd = app.add_subcommand("transform", "troupe transform of a branch series");
    transform_cmd->add_option("--coeffs", coeffs, "branch series coefficients of t^1, t^2, ...");
    transform_cmd->add_option("--series", series_path, "branch series file in serialized form, - for stdin");
    transform_cmd->add_option("--order", order, "truncation order (exclusive)");
    transform_cmd->add_flag("--inverse", inverse, "recover the branch series from a tree series");

    std::string moments_path;
    auto* cumulants_cmd = app.add_subcommand("cumulants", "classical, free and Boolean cumulants of a moment table");
    cumulants_cmd->add_option("--moments", moments_path, "moment table file, - for stdin")->required();

    std::string troupe = "all";
    int verify_n = 5;
    int verify_colors = 1;
    std::uint64_t seed = 1;
    auto* verify_cmd = app.add_subcommand("verify", "check the three tree-sum / cumulant identities");
    verify_cmd->add_option("--troupe", troupe, "all, full, motzkin, colorset:J, colorcount:J, rightmono:t1,t2, random");
    verify_cmd->add_option("--n", verify_n, "largest tree size");
    verify_cmd->add_option("--colors", verify_colors, "number of colors");
    verify_cmd->add_option("--seed", seed, "seed for --troupe random");

    std::string perm;
    auto* peaks_cmd = app.add_subcommand("peaks", "peaks, southeast regions and insertion factors of a permutation");
    peaks_cmd->add_option("permutation", perm)->required();
    auto* sort_cmd = app.add_subcommand("sort", "stack-sort a permutation");
    sort_cmd->add_option("permutation", perm)->required();

    std::string name;
    int example_order = 8;
    auto* examples_cmd = app.add_subcommand("examples", "moments and cumulants of a named sequence");
    examples_cmd->add_option("name", name, "gamma_minus_one, shifted_exponential, two_atom, geometric_like or secant")->required();
    examples_cmd->add_option("--order", example_order, "number of cumulants");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "cumtree: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (count->parsed())
            return count_or_enumerate(false, kind, n, colors, out);
        if (enumerate->parsed())
            return count_or_enumerate(true, kind, n, colors, out);
        if (transform_cmd->parsed())
            return transform(coeffs, series_path, order, inverse, in, out);
        if (cumulants_cmd->parsed())
            return cumulants(moments_path, in, out);
        if (verify_cmd->parsed())
            return verify(troupe, verify_n, verify_colors, seed, out);
        if (peaks_cmd->parsed())
            return peaks_command(perm, out);
        if (sort_cmd->parsed()) {
            out << to_string(stack_sort(parse_permutation(perm))) << '\n';
            return kOk;
        }
        if (examples_cmd->parsed())
            return examples_command(name, example_order, out);
    } catch (const std::exception& e) {
        err << "cumtree: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

int main(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, in, out, err);
}

}  // namespace cumtree::cli
