#pragma once

// Exact scalars: GMP rationals and dense univariate polynomials over them.

#include <gmpxx.h>

#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace cumtree {

/// Arbitrary-precision rational, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

/// Dense polynomial in the indeterminate q with rational coefficients, ascending degree.
/// The zero polynomial has no coefficients; otherwise the top coefficient is nonzero.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    explicit Poly(const Rational& constant);

    /// The monomial c*q^k.
    static Poly monomial(const Rational& c, std::size_t k);
    static Poly q() { return monomial(Rational(1), 1); }

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coeff(std::size_t k) const;
    bool is_constant() const { return coeffs_.size() <= 1; }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator-(Poly a);
    friend bool operator==(const Poly& a, const Poly& b) = default;

    Poly pow(unsigned e) const;
    Rational evaluate(const Rational& x) const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

std::string to_string(const Poly& p);

/// Element of the coefficient ring: Q or Q[q].
///
/// Mixed arithmetic promotes the rational operand to a constant polynomial.
/// Results are never demoted, so a Poly-valued computation stays Poly-valued.
/// Equality compares values, so Rational(2) == Poly{2}.
class RingElem {
public:
    enum class Kind { rational, poly };

    RingElem() : value_(Rational(0)) {}
    RingElem(const Rational& r) : value_(r) {}          // NOLINT(google-explicit-constructor)
    RingElem(const Poly& p) : value_(p) {}              // NOLINT(google-explicit-constructor)
    RingElem(long v) : value_(Rational(v)) {}           // NOLINT(google-explicit-constructor)
    RingElem(int v) : value_(Rational(v)) {}            // NOLINT(google-explicit-constructor)

    static RingElem zero(Kind k);
    static RingElem one(Kind k);
    /// The indeterminate q.
    static RingElem q() { return RingElem(Poly::q()); }

    Kind kind() const { return value_.index() == 0 ? Kind::rational : Kind::poly; }
    bool is_rational() const { return kind() == Kind::rational; }
    const Rational& rational() const;
    const Poly& poly() const;
    /// Value as a polynomial, promoting if necessary.
    Poly as_poly() const;
    /// Same value, stored in the requested variant. Throws if a non-constant polynomial is demoted.
    RingElem as_kind(Kind k) const;

    bool is_zero() const;
    bool is_one() const;
    /// Units are nonzero rationals and nonzero constant polynomials.
    bool is_unit() const;
    RingElem inverse() const;

    RingElem& operator+=(const RingElem& o);
    RingElem& operator-=(const RingElem& o);
    RingElem& operator*=(const RingElem& o);
    /// Division by a unit only.
    RingElem& operator/=(const RingElem& o);

    friend RingElem operator+(RingElem a, const RingElem& b) { return a += b; }
    friend RingElem operator-(RingElem a, const RingElem& b) { return a -= b; }
    friend RingElem operator*(RingElem a, const RingElem& b) { return a *= b; }
    friend RingElem operator/(RingElem a, const RingElem& b) { return a /= b; }
    friend RingElem operator-(const RingElem& a);
    friend bool operator==(const RingElem& a, const RingElem& b);

    RingElem pow(unsigned e) const;

private:
    std::variant<Rational, Poly> value_;
};

/// Rationals print as `p/q` (or `p`), polynomials as `c0 + c1*q + c2*q^2` with zero terms omitted.
std::string to_string(const RingElem& x);
/// Inverse of to_string; also accepts `q`, `-q^3`, `1/2*q`, and terms joined by `+`/`-`.
RingElem parse_ring_elem(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Poly& p);
std::ostream& operator<<(std::ostream& os, const RingElem& x);

Rational factorial(unsigned n);
Rational binomial(unsigned n, unsigned k);

}  // namespace cumtree
