#include "cumtree/examples.hpp"

#include <stdexcept>

#include "cumtree/cumulants.hpp"
#include "cumtree/enumerate.hpp"
#include "cumtree/partitions.hpp"
#include "cumtree/series.hpp"
#include "cumtree/tree.hpp"

namespace cumtree {

Poly eulerian_polynomial(int n)
{
    if (n < 1)
        throw std::invalid_argument("eulerian_polynomial needs n >= 1");
    std::vector<Rational> c(static_cast<std::size_t>(n));
    for_each_permutation(n, [&](const Permutation& s) { c[static_cast<std::size_t>(s.des())] += 1; });
    return Poly(std::move(c));
}

Poly narayana_polynomial(int n)
{
    if (n < 1)
        throw std::invalid_argument("narayana_polynomial needs n >= 1");
    std::vector<Rational> c(static_cast<std::size_t>(n));
    for (const auto& t : shapes(n))
        c[static_cast<std::size_t>(right_edges(t))] += 1;
    return Poly(std::move(c));
}

Rational alternating_count(int n)
{
    if (n < 1)
        throw std::invalid_argument("alternating_count needs n >= 1");
    long count = 0;
    for_each_permutation(n, [&](const Permutation& s) {
        for (int i = 1; i < n; ++i)
            if ((s(i) < s(i + 1)) != (i % 2 == 1))
                return;
        ++count;
    });
    return Rational(count);
}

namespace {

using Kind = RingElem::Kind;

std::vector<RingElem> moments_from_cumulant_egf(const std::vector<RingElem>& cumulants, Kind kind)
{
    const std::size_t order = cumulants.size() + 1;
    Series k(order, kind);
    for (std::size_t n = 1; n < order; ++n)
        k.set(n, cumulants[n - 1] * RingElem(Rational(1) / factorial(static_cast<unsigned>(n))));
    Series m = series_exp(k);
    std::vector<RingElem> out;
    for (std::size_t n = 0; n < order; ++n)
        out.push_back(m[n] * RingElem(factorial(static_cast<unsigned>(n))));
    return out;
}

Poly geometric_sum(int terms)
{
    std::vector<Rational> c(static_cast<std::size_t>(std::max(terms, 0)), Rational(1));
    return Poly(std::move(c));
}

RingElem catalan(int n) { return RingElem(Rational(binomial(static_cast<unsigned>(2 * n), static_cast<unsigned>(n)) / Rational(n + 1))); }

}  // namespace

std::vector<std::string> named_sequence_names()
{
    return {"gamma_minus_one", "shifted_exponential", "two_atom", "geometric_like", "secant"};
}

NamedSequence named_sequence(std::string_view name, int order)
{
    if (order < 1)
        throw std::invalid_argument("named_sequence needs order >= 1");
    const auto N = static_cast<std::size_t>(order);
    NamedSequence s{std::string(name), {}, {}, std::nullopt, std::nullopt};
    const RingElem q = RingElem::q();

    if (name == "gamma_minus_one") {
        std::vector<RingElem> r, b;
        for (int n = 0; n <= order; ++n)
            s.moments.push_back(RingElem(1 - n));
        for (int n = 1; n <= order; ++n) {
            s.classical.push_back(n == 1 ? RingElem(0) : RingElem(-factorial(static_cast<unsigned>(n - 1))));
            r.push_back(n == 1 ? RingElem(0) : -catalan(n - 1));
            b.push_back(n == 1 ? RingElem(0) : RingElem(Rational(-(1L << (n - 2)))));
        }
        s.free = std::move(r);
        s.boolean = std::move(b);
    } else if (name == "shifted_exponential") {
        for (int n = 1; n <= order; ++n)
            s.classical.push_back(n == 1 ? RingElem(0) : RingElem(factorial(static_cast<unsigned>(n - 1))));
        s.moments = moments_from_cumulant_egf(s.classical, Kind::rational);
    } else if (name == "two_atom") {
        std::vector<RingElem> r, b;
        s.moments.push_back(RingElem::one(Kind::poly));
        for (int n = 1; n <= order; ++n) {
            s.moments.push_back(-(q * RingElem(geometric_sum(n - 1))));
            if (n == 1) {
                s.classical.push_back(RingElem::zero(Kind::poly));
                r.push_back(RingElem::zero(Kind::poly));
                b.push_back(RingElem::zero(Kind::poly));
                continue;
            }
            s.classical.push_back(-(q * RingElem(eulerian_polynomial(n - 1))));
            r.push_back(-(q * RingElem(narayana_polynomial(n - 1))));
            b.push_back(-(q * (RingElem(1) + q).pow(static_cast<unsigned>(n - 2))));
        }
        s.free = std::move(r);
        s.boolean = std::move(b);
    } else if (name == "geometric_like") {
        for (int n = 1; n <= order; ++n)
            s.classical.push_back(n == 1 ? RingElem::zero(Kind::poly) : q * RingElem(eulerian_polynomial(n - 1)));
        s.moments = moments_from_cumulant_egf(s.classical, Kind::poly);
    } else if (name == "secant") {
        // 1 / cos t as an exponential generating function.
        Series cos_t(N + 1, Kind::rational);
        for (std::size_t k = 0; 2 * k <= N; ++k)
            cos_t.set(2 * k, RingElem(Rational(Rational(k % 2 ? -1 : 1) / factorial(static_cast<unsigned>(2 * k)))));
        Series sec = Series::one(N + 1) / cos_t;
        for (std::size_t n = 0; n <= N; ++n)
            s.moments.push_back(sec[n] * RingElem(factorial(static_cast<unsigned>(n))));
        for (int n = 1; n <= order; ++n)
            s.classical.push_back(n % 2 == 0 ? RingElem(alternating_count(n - 1)) : RingElem(0));
    } else {
        throw std::invalid_argument("unknown sequence: " + std::string(name));
    }
    return s;
}

std::vector<RingElem> convolution_moments(const std::vector<RingElem>& f, const std::vector<RingElem>& g)
{
    const std::size_t order = std::min(f.size(), g.size());
    std::vector<RingElem> out;
    for (std::size_t n = 0; n < order; ++n) {
        RingElem acc(0);
        for (std::size_t k = 0; k <= n; ++k)
            acc += RingElem(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k))) * f[k] * g[n - k];
        out.push_back(acc);
    }
    return out;
}

bool convolution_additivity_check(const NamedSequence& f, const NamedSequence& g)
{
    const std::vector<RingElem> kf = classical_via_egf(f.moments);
    const std::vector<RingElem> kg = classical_via_egf(g.moments);
    const std::vector<RingElem> kfg = classical_via_egf(convolution_moments(f.moments, g.moments));
    for (std::size_t n = 0; n < kfg.size(); ++n)
        if (kfg[n] != kf[n] + kg[n])
            return false;
    return true;
}

}  // namespace cumtree
