#include "cumtree/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cumtree {

namespace {

Series::Kind common_kind(const std::vector<RingElem>& coeffs)
{
    bool poly = std::any_of(coeffs.begin(), coeffs.end(), [](const RingElem& c) { return !c.is_rational(); });
    return poly ? Series::Kind::poly : Series::Kind::rational;
}

void require_zero_constant(const Series& s, const char* what)
{
    if (s.order() > 0 && !s[0].is_zero())
        throw std::domain_error(std::string(what) + ": series must have zero constant term");
}

}  // namespace

Series::Series(std::size_t order, Kind kind) : coeffs_(order, RingElem::zero(kind)), kind_(kind)
{
    if (order == 0)
        throw std::invalid_argument("series order must be positive");
}

Series::Series(std::vector<RingElem> coeffs) : Series(coeffs, common_kind(coeffs)) {}

Series::Series(std::vector<RingElem> coeffs, Kind kind) : coeffs_(std::move(coeffs)), kind_(kind)
{
    if (coeffs_.empty())
        throw std::invalid_argument("series order must be positive");
    for (auto& c : coeffs_)
        c = c.as_kind(kind_);
}

Series Series::one(std::size_t order, Kind kind)
{
    Series s(order, kind);
    s.set(0, RingElem::one(kind));
    return s;
}

Series Series::variable(std::size_t order, Kind kind)
{
    Series s(order, kind);
    if (order > 1)
        s.set(1, RingElem::one(kind));
    return s;
}

Series Series::from_coeffs(const std::vector<RingElem>& coeffs, std::size_t order)
{
    std::vector<RingElem> v(order, RingElem(0));
    for (std::size_t i = 0; i < std::min(order, coeffs.size()); ++i)
        v[i] = coeffs[i];
    return Series(std::move(v));
}

void Series::set(std::size_t n, const RingElem& value)
{
    if (n >= coeffs_.size())
        throw std::out_of_range("series coefficient index beyond truncation order");
    if (!value.is_rational() && kind_ == Kind::rational)
        throw std::domain_error("cannot store a polynomial coefficient in a rational series");
    coeffs_[n] = value.as_kind(kind_);
}

Series Series::truncated(std::size_t order) const
{
    order = std::min(order, coeffs_.size());
    return Series(std::vector<RingElem>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order)), kind_);
}

std::size_t Series::order_check(const Series& o) const
{
    if (kind_ != o.kind_)
        throw std::domain_error("series ring mismatch: rational vs polynomial coefficients");
    return std::min(order(), o.order());
}

bool operator==(const Series& a, const Series& b)
{
    return a.order() == b.order() && a.coeffs_ == b.coeffs_;
}

Series series_arith(const Series& a, const Series& b, SeriesOp op)
{
    if (a.kind() != b.kind())
        throw std::domain_error("series ring mismatch: rational vs polynomial coefficients");
    const std::size_t n = std::min(a.order(), b.order());
    Series out(n, a.kind());
    switch (op) {
    case SeriesOp::add:
        for (std::size_t i = 0; i < n; ++i)
            out.set(i, a[i] + b[i]);
        break;
    case SeriesOp::sub:
        for (std::size_t i = 0; i < n; ++i)
            out.set(i, a[i] - b[i]);
        break;
    case SeriesOp::mul:
        for (std::size_t i = 0; i < n; ++i) {
            RingElem acc = RingElem::zero(a.kind());
            for (std::size_t j = 0; j <= i; ++j)
                if (!a[j].is_zero() && !b[i - j].is_zero())
                    acc += a[j] * b[i - j];
            out.set(i, acc);
        }
        break;
    case SeriesOp::div: {
        if (!b[0].is_unit())
            throw std::domain_error("series division: divisor constant term is not invertible");
        RingElem inv = b[0].inverse();
        std::vector<RingElem> q(n, RingElem::zero(a.kind()));
        for (std::size_t i = 0; i < n; ++i) {
            RingElem acc = a[i];
            for (std::size_t j = 1; j <= i; ++j)
                if (!b[j].is_zero())
                    acc -= b[j] * q[i - j];
            q[i] = acc * inv;
            out.set(i, q[i]);
        }
        break;
    }
    }
    return out;
}

Series operator+(const Series& a, const Series& b) { return series_arith(a, b, SeriesOp::add); }
Series operator-(const Series& a, const Series& b) { return series_arith(a, b, SeriesOp::sub); }
Series operator*(const Series& a, const Series& b) { return series_arith(a, b, SeriesOp::mul); }
Series operator/(const Series& a, const Series& b) { return series_arith(a, b, SeriesOp::div); }

Series scale(const Series& a, const RingElem& c)
{
    Series::Kind k = (a.kind() == Series::Kind::poly || !c.is_rational()) ? Series::Kind::poly : Series::Kind::rational;
    Series out(a.order(), k);
    for (std::size_t i = 0; i < a.order(); ++i)
        out.set(i, a[i] * c);
    return out;
}

Series series_compose(const Series& outer, const Series& inner)
{
    if (outer.kind() != inner.kind())
        throw std::domain_error("series ring mismatch: rational vs polynomial coefficients");
    require_zero_constant(inner, "series_compose");
    const std::size_t n = std::min(outer.order(), inner.order());
    // Horner: outer_0 + inner*(outer_1 + inner*(outer_2 + ...)).
    Series acc(n, outer.kind());
    const Series in = inner.truncated(n);
    for (std::size_t k = n; k-- > 0;) {
        acc = acc * in;
        acc.set(0, acc[0] + outer[k]);
    }
    return acc;
}

Series series_comp_inverse(const Series& w)
{
    require_zero_constant(w, "series_comp_inverse");
    if (w.order() < 2 || !w[1].is_unit())
        throw std::domain_error("series_comp_inverse: linear coefficient must be invertible");
    const std::size_t n = w.order();
    const RingElem inv1 = w[1].inverse();
    Series v(n, w.kind());
    v.set(1, inv1);
    // Coefficient k of w(v) is w_1 v_k plus terms in v_1..v_{k-1}; solve for v_k.
    for (std::size_t k = 2; k < n; ++k) {
        Series probe = series_compose(w, v.truncated(k + 1));
        v.set(k, -(probe[k] * inv1));
    }
    return v;
}

Series derivative(const Series& f)
{
    Series out(f.order(), f.kind());
    for (std::size_t i = 1; i < f.order(); ++i)
        out.set(i - 1, f[i] * RingElem(static_cast<long>(i)));
    return out;
}

Series series_log(const Series& f)
{
    if (!f[0].is_one())
        throw std::domain_error("series log: constant term must be 1");
    const std::size_t n = f.order();
    // log f = integral of f'/f.
    Series q = derivative(f) / f;
    Series out(n, f.kind());
    for (std::size_t i = 1; i < n; ++i)
        out.set(i, q[i - 1] * RingElem(make_rational(1, static_cast<long>(i))));
    return out;
}

Series series_exp(const Series& f)
{
    require_zero_constant(f, "series exp");
    const std::size_t n = f.order();
    // g = exp f satisfies k g_k = sum_{j=1}^k j f_j g_{k-j}.
    std::vector<RingElem> g(n, RingElem::zero(f.kind()));
    g[0] = RingElem::one(f.kind());
    for (std::size_t k = 1; k < n; ++k) {
        RingElem acc = RingElem::zero(f.kind());
        for (std::size_t j = 1; j <= k; ++j)
            if (!f[j].is_zero())
                acc += f[j] * g[k - j] * RingElem(static_cast<long>(j));
        g[k] = acc * RingElem(make_rational(1, static_cast<long>(k)));
    }
    return Series(std::move(g), f.kind());
}

Series series_log_exp(const Series& f, LogExp op) { return op == LogExp::log ? series_log(f) : series_exp(f); }

namespace {

// W = t / (1 - t T).
Series tree_argument(const Series& tree_series)
{
    const std::size_t n = tree_series.order();
    const Series t = Series::variable(n, tree_series.kind());
    return t / (Series::one(n, tree_series.kind()) - t * tree_series);
}

}  // namespace

Series troupe_transform(const Series& branch_series)
{
    require_zero_constant(branch_series, "troupe_transform");
    const std::size_t n = branch_series.order();
    Series tree(n, branch_series.kind());
    // Coefficient k of B(t/(1 - tT)) only involves T_0..T_{k-2}, so each pass fixes T_k.
    for (std::size_t k = 1; k < n; ++k) {
        Series rhs = series_compose(branch_series.truncated(k + 1), tree_argument(tree.truncated(k + 1)));
        tree.set(k, rhs[k]);
    }
    return tree;
}

Series inverse_troupe_transform(const Series& tree_series)
{
    require_zero_constant(tree_series, "inverse_troupe_transform");
    if (tree_series.order() < 2)
        return Series(tree_series.order(), tree_series.kind());
    return series_compose(tree_series, series_comp_inverse(tree_argument(tree_series)));
}

bool boolean_free_series_check(const Series& boolean_series, const Series& free_series)
{
    require_zero_constant(boolean_series, "boolean_free_series_check");
    require_zero_constant(free_series, "boolean_free_series_check");
    if (boolean_series.kind() != free_series.kind())
        throw std::domain_error("series ring mismatch: rational vs polynomial coefficients");
    const std::size_t n = std::min(boolean_series.order(), free_series.order());
    const auto kind = boolean_series.kind();
    const Series one = Series::one(n, kind);
    const Series t = Series::variable(n, kind);
    const Series denom = one + free_series.truncated(n);
    const Series lhs = one - series_compose(boolean_series.truncated(n), t / denom);
    const Series rhs = one / denom;
    return lhs == rhs;
}

std::string serialize(const Series& s)
{
    std::ostringstream os;
    os << "order " << s.order() << '\n';
    for (std::size_t i = 0; i < s.order(); ++i)
        os << i << ": " << to_string(s[i]) << '\n';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Series& s) { return os << serialize(s); }

Series parse_series(std::istream& in)
{
    std::string line;
    std::size_t lineno = 0;
    std::size_t order = 0;
    std::vector<RingElem> coeffs;
    std::vector<bool> seen;
    auto fail = [&](const std::string& why) {
        return std::invalid_argument("series line " + std::to_string(lineno) + ": " + why + ": '" + line + "'");
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        if (order == 0) {
            std::istringstream ls(line);
            std::string kw;
            long long n = 0;
            if (!(ls >> kw >> n) || kw != "order" || n <= 0)
                throw fail("expected 'order N'");
            std::string extra;
            if (ls >> extra)
                throw fail("trailing text");
            order = static_cast<std::size_t>(n);
            coeffs.assign(order, RingElem(0));
            seen.assign(order, false);
            continue;
        }
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw fail("expected 'n: <coeff>'");
        std::size_t idx = 0;
        try {
            std::size_t used = 0;
            std::string head = line.substr(0, colon);
            long long v = std::stoll(head, &used);
            if (v < 0 || head.find_first_not_of(" \t", used) != std::string::npos)
                throw std::invalid_argument("index");
            idx = static_cast<std::size_t>(v);
        } catch (const std::exception&) {
            throw fail("bad coefficient index");
        }
        if (idx >= order)
            throw fail("index beyond order");
        if (seen[idx])
            throw fail("duplicate index");
        try {
            coeffs[idx] = parse_ring_elem(line.substr(colon + 1));
        } catch (const std::exception& e) {
            throw fail(e.what());
        }
        seen[idx] = true;
    }
    if (order == 0)
        throw std::invalid_argument("series: missing 'order N' header");
    return Series(std::move(coeffs));
}

Series parse_series(const std::string& text)
{
    std::istringstream in(text);
    return parse_series(in);
}

}  // namespace cumtree
