#include "cumtree/ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace cumtree {

namespace {

std::string_view trim_view(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

bool is_integer_text(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

Rational make_rational(long num, long den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(std::string_view text)
{
    text = trim_view(text);
    auto slash = text.find('/');
    std::string_view num = trim_view(text.substr(0, slash));
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trim_view(text.substr(slash + 1));
    if (!is_integer_text(num) || !is_integer_text(den))
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    std::string n(num), d(den);
    if (n.front() == '+')
        n.erase(0, 1);
    if (d.front() == '+')
        d.erase(0, 1);
    mpz_class zn(n, 10), zd(d, 10);
    if (zd == 0)
        throw std::domain_error("rational with zero denominator: '" + std::string(text) + "'");
    Rational r(zn, zd);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational factorial(unsigned n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Rational binomial(unsigned n, unsigned k)
{
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(const Rational& constant)
{
    if (constant != 0)
        coeffs_.push_back(constant);
}

Poly Poly::monomial(const Rational& c, std::size_t k)
{
    std::vector<Rational> v(k + 1, Rational(0));
    v[k] = c;
    return Poly(std::move(v));
}

Rational Poly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

void Poly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Poly& Poly::operator+=(const Poly& o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero())
        return Poly();
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& c)
{
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_)
        x *= c;
    return *this;
}

Poly operator-(Poly a)
{
    for (auto& x : a.coeffs_)
        x = -x;
    return a;
}

Poly Poly::pow(unsigned e) const
{
    Poly result(Rational(1));
    Poly base = *this;
    while (e) {
        if (e & 1u)
            result *= base;
        e >>= 1u;
        if (e)
            base *= base;
    }
    return result;
}

Rational Poly::evaluate(const Rational& x) const
{
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

std::string to_string(const Poly& p)
{
    if (p.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        const Rational& c = p.coeffs()[k];
        if (c == 0)
            continue;
        Rational mag = abs(c);
        if (first) {
            if (c < 0)
                out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        std::string power = k == 0 ? "" : k == 1 ? "q" : "q^" + std::to_string(k);
        if (k == 0)
            out += to_string(mag);
        else if (mag == 1)
            out += power;
        else
            out += to_string(mag) + "*" + power;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_string(p); }

// ---------------------------------------------------------------------------
// RingElem

RingElem RingElem::zero(Kind k) { return k == Kind::rational ? RingElem(Rational(0)) : RingElem(Poly()); }

RingElem RingElem::one(Kind k) { return k == Kind::rational ? RingElem(Rational(1)) : RingElem(Poly(Rational(1))); }

const Rational& RingElem::rational() const
{
    if (auto* r = std::get_if<Rational>(&value_))
        return *r;
    throw std::logic_error("ring element is a polynomial, not a rational");
}

const Poly& RingElem::poly() const
{
    if (auto* p = std::get_if<Poly>(&value_))
        return *p;
    throw std::logic_error("ring element is a rational, not a polynomial");
}

Poly RingElem::as_poly() const { return is_rational() ? Poly(rational()) : poly(); }

RingElem RingElem::as_kind(Kind k) const
{
    if (k == kind())
        return *this;
    if (k == Kind::poly)
        return RingElem(as_poly());
    const Poly& p = poly();
    if (!p.is_constant())
        throw std::domain_error("cannot demote non-constant polynomial " + to_string(p) + " to a rational");
    return RingElem(p.coeff(0));
}

bool RingElem::is_zero() const { return is_rational() ? rational() == 0 : poly().is_zero(); }

bool RingElem::is_one() const { return is_rational() ? rational() == 1 : poly() == Poly(Rational(1)); }

bool RingElem::is_unit() const { return is_rational() ? rational() != 0 : (poly().is_constant() && !poly().is_zero()); }

RingElem RingElem::inverse() const
{
    if (!is_unit())
        throw std::domain_error("element " + to_string(*this) + " is not invertible");
    if (is_rational())
        return RingElem(Rational(1) / rational());
    return RingElem(Poly(Rational(1) / poly().coeff(0)));
}

RingElem& RingElem::operator+=(const RingElem& o)
{
    if (is_rational() && o.is_rational())
        std::get<Rational>(value_) += o.rational();
    else
        value_ = as_poly() + o.as_poly();
    return *this;
}

RingElem& RingElem::operator-=(const RingElem& o)
{
    if (is_rational() && o.is_rational())
        std::get<Rational>(value_) -= o.rational();
    else
        value_ = as_poly() - o.as_poly();
    return *this;
}

RingElem& RingElem::operator*=(const RingElem& o)
{
    if (is_rational() && o.is_rational())
        std::get<Rational>(value_) *= o.rational();
    else if (o.is_rational()) {
        Poly p = poly();
        p *= o.rational();
        value_ = std::move(p);
    } else if (is_rational()) {
        Poly p = o.poly();
        p *= rational();
        value_ = std::move(p);
    } else
        value_ = poly() * o.poly();
    return *this;
}

RingElem& RingElem::operator/=(const RingElem& o)
{
    RingElem inv = o.inverse();
    return *this *= inv;
}

RingElem operator-(const RingElem& a)
{
    if (a.is_rational())
        return RingElem(Rational(-a.rational()));
    return RingElem(-a.poly());
}

bool operator==(const RingElem& a, const RingElem& b)
{
    if (a.is_rational() && b.is_rational())
        return a.rational() == b.rational();
    return a.as_poly() == b.as_poly();
}

RingElem RingElem::pow(unsigned e) const
{
    RingElem result = one(kind());
    RingElem base = *this;
    while (e) {
        if (e & 1u)
            result *= base;
        e >>= 1u;
        if (e)
            base *= base;
    }
    return result;
}

std::string to_string(const RingElem& x) { return x.is_rational() ? to_string(x.rational()) : to_string(x.poly()); }

std::ostream& operator<<(std::ostream& os, const RingElem& x) { return os << to_string(x); }

namespace {

// term := [coeff] ['*'] ['q' ['^' k]]   (at least one of coeff / q present)
Poly parse_term(std::string_view term, std::string_view whole)
{
    term = trim_view(term);
    auto bad = [&] { return std::invalid_argument("malformed ring element: '" + std::string(whole) + "'"); };
    if (term.empty())
        throw bad();
    auto qpos = term.find('q');
    if (qpos == std::string_view::npos)
        return Poly(parse_rational(term));
    std::string_view coeff_text = trim_view(term.substr(0, qpos));
    std::string_view rest = trim_view(term.substr(qpos + 1));
    Rational c(1);
    if (!coeff_text.empty()) {
        if (coeff_text.back() == '*')
            coeff_text = trim_view(coeff_text.substr(0, coeff_text.size() - 1));
        if (coeff_text.empty())
            throw bad();
        c = parse_rational(coeff_text);
    }
    std::size_t k = 1;
    if (!rest.empty()) {
        if (rest.front() != '^')
            throw bad();
        rest = trim_view(rest.substr(1));
        if (rest.empty() || !std::all_of(rest.begin(), rest.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
            throw bad();
        k = std::stoul(std::string(rest));
    }
    return Poly::monomial(c, k);
}

}  // namespace

RingElem parse_ring_elem(std::string_view text)
{
    std::string_view s = trim_view(text);
    if (s.empty())
        throw std::invalid_argument("empty ring element");
    if (s.find('q') == std::string_view::npos && s.find(" + ") == std::string_view::npos &&
        s.find(" - ") == std::string_view::npos)
        return RingElem(parse_rational(s));

    // Split into signed terms. A sign is a separator unless it starts the string or follows '^', '*' or '/'.
    Poly acc;
    std::size_t start = 0;
    bool negate = false;
    if (s.front() == '-' || s.front() == '+') {
        negate = s.front() == '-';
        start = 1;
    }
    auto flush = [&](std::size_t end) {
        Poly t = parse_term(s.substr(start, end - start), text);
        acc += negate ? -t : t;
    };
    for (std::size_t i = start; i < s.size(); ++i) {
        char c = s[i];
        if ((c == '+' || c == '-') && i > start) {
            std::size_t j = i;
            while (j > start && std::isspace(static_cast<unsigned char>(s[j - 1])))
                --j;
            char prev = s[j - 1];
            if (prev == '^' || prev == '*' || prev == '/')
                continue;
            flush(i);
            negate = c == '-';
            start = i + 1;
        }
    }
    flush(s.size());
    return RingElem(std::move(acc));
}

}  // namespace cumtree
