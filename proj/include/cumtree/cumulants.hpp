#pragma once

// Multivariate moments and classical / free / Boolean cumulants over words in the index set.

#include "cumtree/partitions.hpp"
#include "cumtree/ring.hpp"
#include "cumtree/series.hpp"
#include "cumtree/tree.hpp"
#include "cumtree/troupe.hpp"

#include <cstdint>
#include <istream>
#include <map>
#include <string>
#include <vector>

namespace cumtree {

/// Dense table over every word of length 1..max_len on the letters [0, alphabet).
class WordTable {
public:
    WordTable() = default;
    WordTable(std::uint32_t alphabet, int max_len);

    std::uint32_t alphabet() const { return alphabet_; }
    int max_len() const { return max_len_; }
    /// Throws naming the word if the entry is missing.
    const RingElem& at(const ColorWord& w) const;
    void set(const ColorWord& w, RingElem value);
    bool contains(const ColorWord& w) const { return values_.contains(w); }
    const std::map<ColorWord, RingElem>& values() const { return values_; }
    /// Throws unless every word of length 1..max_len is present.
    void require_dense() const;

    friend bool operator==(const WordTable&, const WordTable&) = default;

private:
    std::uint32_t alphabet_ = 1;
    int max_len_ = 0;
    std::map<ColorWord, RingElem> values_;
};

/// All words of the given length over [0, alphabet), lexicographic.
std::vector<ColorWord> all_words(std::uint32_t alphabet, int length);

/// Letters at the positions of `block` (1-based, increasing).
ColorWord restrict_word(const ColorWord& w, const Block& block);

/// Unital moment functional: the empty word has moment 1 implicitly.
struct MomentFunctional {
    WordTable table;

    /// phi(w); 1 for the empty word.
    RingElem operator()(const ColorWord& w) const;
    /// Univariate moments m_1..m_N for a single letter.
    static MomentFunctional univariate(const std::vector<RingElem>& moments_from_one);
    friend bool operator==(const MomentFunctional&, const MomentFunctional&) = default;
};

enum class CumulantKind { classical, free, boolean };

std::string to_string(CumulantKind k);
CumulantKind parse_cumulant_kind(std::string_view name);
/// Π(n), NC(n) and Int(n) respectively.
PartitionClass partition_class(CumulantKind k);

struct CumulantTable {
    CumulantKind kind = CumulantKind::classical;
    WordTable table;

    const RingElem& operator()(const ColorWord& w) const { return table.at(w); }
    static CumulantTable univariate(CumulantKind kind, const std::vector<RingElem>& cumulants_from_one);
    friend bool operator==(const CumulantTable&, const CumulantTable&) = default;
};

/// Partitions of [n] in a class, cached per process.
const std::vector<SetPartition>& cached_partitions(int n, PartitionClass c);

/// Triangular solve: c(w) = phi(w) minus the sum over the other partitions in the class of the
/// products of c over the restricted words. Parallel over words of equal length.
CumulantTable moments_to_cumulants(const MomentFunctional& phi, CumulantKind kind);
/// phi(w) = sum over the class of the products of c over the restricted words.
MomentFunctional cumulants_to_moments(const CumulantTable& c);

/// -R(w) = sum over irreducible noncrossing partitions of the product of -B(w|U).
CumulantTable boolean_to_free(const CumulantTable& boolean);
/// -K(w) = sum over sigma with sigma(1) = n of the product over druns(sigma) of -B(w|U).
CumulantTable boolean_to_classical(const CumulantTable& boolean);

/// K_1..K_N from m_0 = 1, m_1..m_N through the logarithm of the exponential generating function.
std::vector<RingElem> classical_via_egf(const std::vector<RingElem>& moments_from_zero);

/// Ordinary generating function sum_{n>=1} c(letter^n) t^n of a single-letter table, to `order`.
Series univariate_series(const CumulantTable& c, std::size_t order, Color letter = Color{0});

/// Enumeration, partition-formula and bridge values for one of the three conditions.
struct ConditionCheck {
    RingElem enumeration;        ///< sum of tau over DBPT / BPT / Branch
    RingElem partition_formula;  ///< minus the cumulant obtained from the moments
    RingElem bridge;             ///< minus the cumulant obtained from the Boolean table
    bool equal() const { return enumeration == partition_formula && partition_formula == bridge; }
};

struct EquivalenceReport {
    ColorWord word;
    ConditionCheck classical;
    ConditionCheck free;
    ConditionCheck boolean;
    bool all_equal() const { return classical.equal() && free.equal() && boolean.equal(); }
};

/// Moments are synthesized so that -B(w) equals the branch sum for every word, then the classical
/// and free conditions are checked against the DBPT and BPT sums for `word`.
EquivalenceReport verify_equivalence(const WeightedTroupe& tau, const ColorWord& word);
/// Every word of length 1..max_len over [0, alphabet).
std::vector<EquivalenceReport> verify_equivalence_all(const WeightedTroupe& tau, std::uint32_t alphabet, int max_len);

/// Moments with -B(w) = sum of tau over Branch(w), for every word of length <= max_len.
CumulantTable boolean_table_from_troupe(const WeightedTroupe& tau, std::uint32_t alphabet, int max_len);

/// One line per word: `word i1,i2,...,ik = <value>`.
std::string serialize(const WordTable& t);
/// Parses the serialize() format. Alphabet and max_len are inferred; density is not checked.
WordTable parse_word_table(std::istream& in);
WordTable parse_word_table(const std::string& text);

namespace reference {
CumulantTable moments_to_cumulants(const MomentFunctional& phi, CumulantKind kind);
}  // namespace reference

}  // namespace cumtree
