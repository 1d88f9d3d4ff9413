#include <doctest.h>

#include <sstream>

#include "cumtree/series.hpp"
#include "oracles.hpp"

using namespace cumtree;

namespace {
Poly P(std::vector<Rational> c) { return Poly(std::move(c)); }
}  // namespace

namespace {

Series rat_series(std::vector<Rational> c)
{
    std::vector<RingElem> v(c.begin(), c.end());
    return Series(std::move(v), RingElem::Kind::rational);
}

Series geometric(std::size_t order)
{
    return rat_series(std::vector<Rational>(order, Rational(1)));
}

const std::size_t N = 8;

}  // namespace

TEST_CASE("series arithmetic")
{
    Series t = Series::variable(N);
    Series one = Series::one(N);
    CHECK((one + t) * (one - t) == one - t * t);
    CHECK(one / (one - t) == geometric(N));
    // (1 - q t) / (1 - t) = 1 + (1 - q)(t + t^2 + ...)
    const auto P = RingElem::Kind::poly;
    Series tp = Series::variable(3, P);
    Series onep = Series::one(3, P);
    Series r = (onep - scale(tp, RingElem::q())) / (onep - tp);
    RingElem one_minus_q = RingElem(1) - RingElem::q();
    CHECK(r == Series({RingElem(Poly(Rational(1))), one_minus_q, one_minus_q}, P));
}

TEST_CASE("series arithmetic agrees with the oracle product")
{
    Series a = rat_series({1, 2, make_rational(-1, 3), 5, 0, 7});
    Series b = rat_series({3, 0, 1, make_rational(1, 2), -2, 1});
    oracle::Coeffs expected = oracle::mul(a.coeffs(), b.coeffs());
    CHECK((a * b).coeffs() == expected);
    CHECK((a * b) / b == a);
}

TEST_CASE("series arithmetic errors")
{
    Series t = Series::variable(N);
    CHECK_THROWS_AS(Series::one(N) / t, std::domain_error);
    CHECK_THROWS_AS(t + Series::variable(N, RingElem::Kind::poly), std::domain_error);
    CHECK_THROWS(series_compose(t, Series::one(N)));
    CHECK_THROWS(series_comp_inverse(Series::one(N)));
    CHECK_THROWS(series_log(t));
    CHECK_THROWS(series_exp(Series::one(N)));
}

TEST_CASE("composition")
{
    Series t = Series::variable(N);
    Series one = Series::one(N);
    Series t_over = t / (one - t);
    CHECK(series_compose(t_over, t) == t_over);
    CHECK(series_compose(t * t, t + t * t) == t * t + scale(t * t * t, RingElem(2)) + t * t * t * t);
    Series c = series_compose(geometric(6), rat_series({0, 1, 1, 1, 1, 1}));
    CHECK(c == rat_series({1, 1, 2, 4, 8, 16}));
}

TEST_CASE("compositional inverse")
{
    Series t = Series::variable(N);
    Series one = Series::one(N);
    CHECK(series_comp_inverse(t) == t);
    CHECK(series_comp_inverse(t / (one - t)) == t / (one + t));
    Series v = series_comp_inverse(t - t * t);
    std::vector<RingElem> expected{RingElem(0)};
    for (std::size_t n = 1; n < N; ++n)
        expected.push_back(RingElem(oracle::catalan(static_cast<int>(n) - 1)));
    CHECK(v == Series(expected));
    // Both one-sided identities.
    Series w = rat_series({0, 2, -1, make_rational(1, 3), 4, 0, 1, -2});
    Series wi = series_comp_inverse(w);
    CHECK(series_compose(w, wi) == t);
    CHECK(series_compose(wi, w) == t);
}

TEST_CASE("log and exp")
{
    Series t = Series::variable(N);
    Series one = Series::one(N);
    std::vector<Rational> mercator{0};
    std::vector<Rational> expo;
    for (std::size_t n = 1; n < N; ++n)
        mercator.push_back(make_rational(1, static_cast<long>(n)));
    for (std::size_t n = 0; n < N; ++n)
        expo.push_back(1 / oracle::fact(static_cast<int>(n)));
    CHECK(series_log(one / (one - t)) == rat_series(mercator));
    CHECK(series_exp(t) == rat_series(expo));
    // log((1 - t) e^t) = -sum_{n>=2} t^n / n
    Series lhs = series_log((one - t) * series_exp(t));
    std::vector<Rational> neg{0, 0};
    for (std::size_t n = 2; n < N; ++n)
        neg.push_back(make_rational(-1, static_cast<long>(n)));
    CHECK(lhs == rat_series(neg));
    Series f = rat_series({0, 1, -2, make_rational(1, 5), 3, 0, 1, 1});
    CHECK(series_log(series_exp(f)) == f);
    CHECK(series_log_exp(series_log_exp(f, LogExp::exp), LogExp::log) == f);
    CHECK(derivative(t * t) == scale(t, RingElem(2)));
}

TEST_CASE("troupe transform examples")
{
    const std::size_t order = 12;
    std::vector<RingElem> pow2{RingElem(0)}, cat{RingElem(0)}, ones{RingElem(0)}, motz{RingElem(0)}, single{RingElem(0)}, full{RingElem(0)};
    for (std::size_t n = 1; n < order; ++n) {
        const int k = static_cast<int>(n);
        pow2.push_back(RingElem(Rational(1L << (k - 1))));
        cat.push_back(RingElem(oracle::catalan(k)));
        ones.push_back(RingElem(1));
        motz.push_back(RingElem(oracle::motzkin(k - 1)));
        single.push_back(RingElem(k == 1 ? 1 : 0));
        full.push_back(RingElem(k % 2 ? oracle::catalan((k - 1) / 2) : Rational(0)));
    }
    CHECK(troupe_transform(Series(pow2)) == Series(cat));
    CHECK(troupe_transform(Series(ones)) == Series(motz));
    CHECK(troupe_transform(Series(single)) == Series(full));
    CHECK(inverse_troupe_transform(Series(cat)) == Series(pow2));
    CHECK(inverse_troupe_transform(Series(motz)) == Series(ones));
    Series t = Series::variable(order);
    CHECK(troupe_transform(inverse_troupe_transform(t)) == t);
    // T = B(t / (1 - t T)) holds for the result.
    Series b = Series(pow2);
    Series tt = troupe_transform(b);
    Series one = Series::one(order);
    CHECK(series_compose(b, t / (one - t * tt)) == tt);
}

TEST_CASE("boolean/free series identity")
{
    const std::size_t order = 10;
    Series zero = Series::zero(order);
    CHECK(boolean_free_series_check(zero, zero));
    CHECK_FALSE(boolean_free_series_check(Series::variable(order), zero));
    std::vector<RingElem> b{RingElem(0)}, r{RingElem(0)};
    for (std::size_t n = 1; n < order; ++n) {
        const int k = static_cast<int>(n);
        b.push_back(n == 1 ? RingElem(0) : RingElem(-Rational(1L << (k - 2))));
        r.push_back(n == 1 ? RingElem(0) : RingElem(-oracle::catalan(k - 1)));
    }
    CHECK(boolean_free_series_check(Series(b), Series(r)));
}

TEST_CASE("series serialization round trips")
{
    Series s({RingElem(0), RingElem(make_rational(1, 2)), RingElem::q(), RingElem(P({1, -1}))});
    CHECK(parse_series(serialize(s)) == s);
    std::ostringstream os;
    os << s;
    CHECK(os.str() == serialize(s));
    CHECK(serialize(Series::variable(2)) == "order 2\n0: 0\n1: 1\n");
    try {
        parse_series("order 2\n0: 1\n1: x\n");
        FAIL("expected a parse error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    // Omitted coefficients are zero.
    CHECK(parse_series("order 3\n0: 1\n") == Series::one(3));
    CHECK_THROWS_AS(parse_series("order 2\n0: 1\n0: 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_series("order 2\n5: 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_series("0: 1\n"), std::invalid_argument);
}
