#include "cumtree/cumulants.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace cumtree {

WordTable::WordTable(std::uint32_t alphabet, int max_len) : alphabet_(alphabet), max_len_(max_len)
{
    if (alphabet == 0)
        throw std::invalid_argument("word table needs a nonempty alphabet");
    if (max_len < 0)
        throw std::invalid_argument("word table needs max_len >= 0");
}

const RingElem& WordTable::at(const ColorWord& w) const
{
    auto it = values_.find(w);
    if (it == values_.end())
        throw std::out_of_range("missing table entry for word " + to_string(w));
    return it->second;
}

void WordTable::set(const ColorWord& w, RingElem value)
{
    if (w.empty() || static_cast<int>(w.size()) > max_len_)
        throw std::out_of_range("word length outside 1..max_len: " + to_string(w));
    for (Color c : w)
        if (c.index >= alphabet_)
            throw std::out_of_range("letter outside the alphabet in word " + to_string(w));
    values_[w] = std::move(value);
}

void WordTable::require_dense() const
{
    for (int n = 1; n <= max_len_; ++n)
        for (const auto& w : all_words(alphabet_, n))
            if (!values_.contains(w))
                throw std::out_of_range("missing table entry for word " + to_string(w));
}

std::vector<ColorWord> all_words(std::uint32_t alphabet, int length)
{
    std::vector<ColorWord> out;
    if (length <= 0)
        return out;
    ColorWord w(static_cast<std::size_t>(length), Color{0});
    while (true) {
        out.push_back(w);
        int i = length - 1;
        while (i >= 0 && w[static_cast<std::size_t>(i)].index + 1 == alphabet)
            w[static_cast<std::size_t>(i--)].index = 0;
        if (i < 0)
            return out;
        ++w[static_cast<std::size_t>(i)].index;
    }
}

ColorWord restrict_word(const ColorWord& w, const Block& block)
{
    ColorWord out;
    out.reserve(block.size());
    for (int u : block)
        out.push_back(w.at(static_cast<std::size_t>(u - 1)));
    return out;
}

RingElem MomentFunctional::operator()(const ColorWord& w) const { return w.empty() ? RingElem(1) : table.at(w); }

MomentFunctional MomentFunctional::univariate(const std::vector<RingElem>& moments_from_one)
{
    MomentFunctional phi{WordTable(1, static_cast<int>(moments_from_one.size()))};
    for (std::size_t n = 0; n < moments_from_one.size(); ++n)
        phi.table.set(ColorWord(n + 1, Color{0}), moments_from_one[n]);
    return phi;
}

CumulantTable CumulantTable::univariate(CumulantKind kind, const std::vector<RingElem>& cumulants_from_one)
{
    CumulantTable c{kind, WordTable(1, static_cast<int>(cumulants_from_one.size()))};
    for (std::size_t n = 0; n < cumulants_from_one.size(); ++n)
        c.table.set(ColorWord(n + 1, Color{0}), cumulants_from_one[n]);
    return c;
}

std::string to_string(CumulantKind k)
{
    switch (k) {
    case CumulantKind::classical: return "classical";
    case CumulantKind::free: return "free";
    case CumulantKind::boolean: return "boolean";
    }
    return "?";
}

CumulantKind parse_cumulant_kind(std::string_view name)
{
    if (name == "classical")
        return CumulantKind::classical;
    if (name == "free")
        return CumulantKind::free;
    if (name == "boolean")
        return CumulantKind::boolean;
    throw std::invalid_argument("unknown cumulant kind: " + std::string(name));
}

PartitionClass partition_class(CumulantKind k)
{
    switch (k) {
    case CumulantKind::classical: return PartitionClass::all;
    case CumulantKind::free: return PartitionClass::noncrossing;
    case CumulantKind::boolean: return PartitionClass::interval;
    }
    return PartitionClass::all;
}

const std::vector<SetPartition>& cached_partitions(int n, PartitionClass c)
{
    static std::mutex mu;
    static std::map<std::pair<int, PartitionClass>, std::vector<SetPartition>> cache;
    std::lock_guard lock(mu);
    auto key = std::make_pair(n, c);
    if (auto it = cache.find(key); it != cache.end())
        return it->second;
    return cache.emplace(key, enumerate_partitions(n, c)).first->second;
}

namespace {

RingElem block_product(const WordTable& t, const ColorWord& w, const SetPartition& p, bool negate)
{
    RingElem acc(1);
    for (const Block& b : p.blocks()) {
        const RingElem& v = t.at(restrict_word(w, b));
        if (v.is_zero())
            return RingElem(0);
        acc *= negate ? -v : v;
    }
    return acc;
}

// Cumulant of one word, with every shorter word already in `out`.
RingElem solve_word(const MomentFunctional& phi, const WordTable& out, const ColorWord& w, const std::vector<SetPartition>& parts)
{
    RingElem c = phi(w);
    for (const auto& p : parts)
        if (p.block_count() > 1)
            c -= block_product(out, w, p, false);
    return c;
}

void check_input(const WordTable& t)
{
    t.require_dense();
}

}  // namespace

CumulantTable moments_to_cumulants(const MomentFunctional& phi, CumulantKind kind)
{
    check_input(phi.table);
    CumulantTable out{kind, WordTable(phi.table.alphabet(), phi.table.max_len())};
    for (int n = 1; n <= phi.table.max_len(); ++n) {
        const auto& parts = cached_partitions(n, partition_class(kind));
        const std::vector<ColorWord> words = all_words(phi.table.alphabet(), n);
        std::vector<RingElem> values(words.size());
        const auto count = static_cast<std::int64_t>(words.size());
        const WordTable& done = out.table;
#pragma omp parallel for schedule(dynamic, 1)
        for (std::int64_t i = 0; i < count; ++i)
            values[static_cast<std::size_t>(i)] = solve_word(phi, done, words[static_cast<std::size_t>(i)], parts);
        for (std::size_t i = 0; i < words.size(); ++i)
            out.table.set(words[i], std::move(values[i]));
    }
    return out;
}

namespace reference {

CumulantTable moments_to_cumulants(const MomentFunctional& phi, CumulantKind kind)
{
    check_input(phi.table);
    CumulantTable out{kind, WordTable(phi.table.alphabet(), phi.table.max_len())};
    for (int n = 1; n <= phi.table.max_len(); ++n) {
        const auto& parts = cached_partitions(n, partition_class(kind));
        for (const auto& w : all_words(phi.table.alphabet(), n))
            out.table.set(w, solve_word(phi, out.table, w, parts));
    }
    return out;
}

}  // namespace reference

MomentFunctional cumulants_to_moments(const CumulantTable& c)
{
    check_input(c.table);
    MomentFunctional phi{WordTable(c.table.alphabet(), c.table.max_len())};
    for (int n = 1; n <= c.table.max_len(); ++n) {
        const auto& parts = cached_partitions(n, partition_class(c.kind));
        for (const auto& w : all_words(c.table.alphabet(), n)) {
            RingElem m(0);
            for (const auto& p : parts)
                m += block_product(c.table, w, p, false);
            phi.table.set(w, std::move(m));
        }
    }
    return phi;
}

namespace {

void require_boolean(const CumulantTable& b)
{
    if (b.kind != CumulantKind::boolean)
        throw std::invalid_argument("expected a Boolean cumulant table, got " + to_string(b.kind));
    check_input(b.table);
}

}  // namespace

CumulantTable boolean_to_free(const CumulantTable& boolean)
{
    require_boolean(boolean);
    CumulantTable out{CumulantKind::free, WordTable(boolean.table.alphabet(), boolean.table.max_len())};
    for (int n = 1; n <= boolean.table.max_len(); ++n) {
        const auto& parts = cached_partitions(n, PartitionClass::nc_irreducible);
        for (const auto& w : all_words(boolean.table.alphabet(), n)) {
            RingElem neg(0);
            for (const auto& p : parts)
                neg += block_product(boolean.table, w, p, true);
            out.table.set(w, -neg);
        }
    }
    return out;
}

CumulantTable boolean_to_classical(const CumulantTable& boolean)
{
    require_boolean(boolean);
    CumulantTable out{CumulantKind::classical, WordTable(boolean.table.alphabet(), boolean.table.max_len())};
    for (int n = 1; n <= boolean.table.max_len(); ++n) {
        std::vector<SetPartition> runs;
        for (const auto& sigma : enumerate_first_max(n))
            runs.push_back(druns(sigma));
        for (const auto& w : all_words(boolean.table.alphabet(), n)) {
            RingElem neg(0);
            for (const auto& p : runs)
                neg += block_product(boolean.table, w, p, true);
            out.table.set(w, -neg);
        }
    }
    return out;
}

std::vector<RingElem> classical_via_egf(const std::vector<RingElem>& moments_from_zero)
{
    if (moments_from_zero.empty() || !moments_from_zero.front().is_one())
        throw std::domain_error("classical_via_egf: m_0 must be 1");
    const std::size_t order = moments_from_zero.size();
    std::vector<RingElem> egf(order);
    for (std::size_t n = 0; n < order; ++n)
        egf[n] = moments_from_zero[n] * RingElem(Rational(1) / factorial(static_cast<unsigned>(n)));
    Series log_m = series_log(Series(std::move(egf)));
    std::vector<RingElem> out;
    for (std::size_t n = 1; n < order; ++n)
        out.push_back(log_m[n] * RingElem(factorial(static_cast<unsigned>(n))));
    return out;
}

Series univariate_series(const CumulantTable& c, std::size_t order, Color letter)
{
    std::vector<RingElem> coeffs(order, RingElem(0));
    for (std::size_t n = 1; n < order; ++n)
        coeffs[n] = c(ColorWord(n, letter));
    return Series(std::move(coeffs));
}

// ---------------------------------------------------------------------------

CumulantTable boolean_table_from_troupe(const WeightedTroupe& tau, std::uint32_t alphabet, int max_len)
{
    CumulantTable b{CumulantKind::boolean, WordTable(alphabet, max_len)};
    for (int n = 1; n <= max_len; ++n)
        for (const auto& w : all_words(alphabet, n))
            b.table.set(w, -weighted_sum(tau, TreeFamily::branch, w));
    return b;
}

namespace {

struct Tables {
    CumulantTable boolean_input;
    CumulantTable classical, free, boolean;
    CumulantTable classical_bridge, free_bridge;
};

Tables build_tables(const WeightedTroupe& tau, std::uint32_t alphabet, int max_len)
{
    Tables t;
    t.boolean_input = boolean_table_from_troupe(tau, alphabet, max_len);
    MomentFunctional phi = cumulants_to_moments(t.boolean_input);
    t.classical = moments_to_cumulants(phi, CumulantKind::classical);
    t.free = moments_to_cumulants(phi, CumulantKind::free);
    t.boolean = moments_to_cumulants(phi, CumulantKind::boolean);
    t.classical_bridge = boolean_to_classical(t.boolean_input);
    t.free_bridge = boolean_to_free(t.boolean_input);
    return t;
}

EquivalenceReport report_for(const WeightedTroupe& tau, const Tables& t, const ColorWord& w)
{
    EquivalenceReport r;
    r.word = w;
    r.classical = {weighted_sum(tau, TreeFamily::dbpt, w), -t.classical(w), -t.classical_bridge(w)};
    r.free = {weighted_sum(tau, TreeFamily::bpt, w), -t.free(w), -t.free_bridge(w)};
    r.boolean = {weighted_sum(tau, TreeFamily::branch, w), -t.boolean(w), -t.boolean_input(w)};
    return r;
}

}  // namespace

EquivalenceReport verify_equivalence(const WeightedTroupe& tau, const ColorWord& word)
{
    if (word.empty())
        throw std::invalid_argument("verify_equivalence needs a nonempty word");
    std::uint32_t alphabet = 1;
    for (Color c : word)
        alphabet = std::max(alphabet, c.index + 1);
    Tables t = build_tables(tau, alphabet, static_cast<int>(word.size()));
    return report_for(tau, t, word);
}

std::vector<EquivalenceReport> verify_equivalence_all(const WeightedTroupe& tau, std::uint32_t alphabet, int max_len)
{
    Tables t = build_tables(tau, alphabet, max_len);
    std::vector<EquivalenceReport> out;
    for (int n = 1; n <= max_len; ++n)
        for (const auto& w : all_words(alphabet, n))
            out.push_back(report_for(tau, t, w));
    return out;
}

// ---------------------------------------------------------------------------

std::string serialize(const WordTable& t)
{
    std::ostringstream os;
    for (int n = 1; n <= t.max_len(); ++n)
        for (const auto& w : all_words(t.alphabet(), n))
            if (auto it = t.values().find(w); it != t.values().end())
                os << "word " << to_string(w) << " = " << to_string(it->second) << '\n';
    return os.str();
}

WordTable parse_word_table(std::istream& in)
{
    std::string line;
    std::size_t lineno = 0;
    std::vector<std::pair<ColorWord, RingElem>> entries;
    std::uint32_t alphabet = 1;
    int max_len = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        auto fail = [&](const std::string& why) {
            return std::invalid_argument("table line " + std::to_string(lineno) + ": " + why + ": '" + line + "'");
        };
        if (line.compare(first, 5, "word ") != 0)
            throw fail("expected 'word i1,i2,... = value'");
        auto eq = line.find('=', first);
        if (eq == std::string::npos)
            throw fail("missing '='");
        ColorWord w;
        RingElem v;
        try {
            w = parse_word(line.substr(first + 5, eq - first - 5));
            v = parse_ring_elem(line.substr(eq + 1));
        } catch (const std::exception& e) {
            throw fail(e.what());
        }
        for (Color c : w)
            alphabet = std::max(alphabet, c.index + 1);
        max_len = std::max(max_len, static_cast<int>(w.size()));
        entries.emplace_back(std::move(w), std::move(v));
    }
    WordTable t(alphabet, max_len);
    for (auto& [w, v] : entries) {
        if (t.contains(w))
            throw std::invalid_argument("duplicate table entry for word " + to_string(w));
        t.set(w, std::move(v));
    }
    return t;
}

WordTable parse_word_table(const std::string& text)
{
    std::istringstream in(text);
    return parse_word_table(in);
}

}  // namespace cumtree
