#pragma once

// Worked families: moment sequences with known cumulants, and the polynomial counts behind them.

#include "cumtree/ring.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cumtree {

/// Sum over S_n of q^{des(sigma)}.
Poly eulerian_polynomial(int n);
/// Sum over binary plane trees of size n of q^{right(T)}.
Poly narayana_polynomial(int n);
/// Number of alternating permutations sigma(1) < sigma(2) > sigma(3) < ... of [n].
Rational alternating_count(int n);

/// Univariate moments m_0 = 1, m_1, ..., m_N with closed forms for the cumulants c_1..c_N.
struct NamedSequence {
    std::string name;
    std::vector<RingElem> moments;
    std::vector<RingElem> classical;
    std::optional<std::vector<RingElem>> free;
    std::optional<std::vector<RingElem>> boolean;
};

/// gamma_minus_one, shifted_exponential, two_atom, geometric_like, secant; moments up to m_order.
NamedSequence named_sequence(std::string_view name, int order);
std::vector<std::string> named_sequence_names();

/// Moments of the formal convolution: the product of the two moment EGFs.
std::vector<RingElem> convolution_moments(const std::vector<RingElem>& f, const std::vector<RingElem>& g);

/// Classical cumulants of f * g equal the sums of those of f and g.
bool convolution_additivity_check(const NamedSequence& f, const NamedSequence& g);

}  // namespace cumtree
