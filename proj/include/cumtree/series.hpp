#pragma once

// Truncated formal power series in t over Q or Q[q].

#include "cumtree/ring.hpp"

#include <cstddef>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace cumtree {

/// Coefficients c_0..c_{N-1}; N is the truncation order (exclusive).
/// Every coefficient is stored in the series' ring kind.
class Series {
public:
    using Kind = RingElem::Kind;

    Series(std::size_t order, Kind kind);
    /// Coefficient kind is Poly if any input coefficient is a polynomial.
    explicit Series(std::vector<RingElem> coeffs);
    Series(std::vector<RingElem> coeffs, Kind kind);

    static Series zero(std::size_t order, Kind kind = Kind::rational) { return Series(order, kind); }
    static Series one(std::size_t order, Kind kind = Kind::rational);
    /// The series t.
    static Series variable(std::size_t order, Kind kind = Kind::rational);
    /// c_0 + c_1 t + ...; coefficients beyond the list are zero.
    static Series from_coeffs(const std::vector<RingElem>& coeffs, std::size_t order);

    std::size_t order() const { return coeffs_.size(); }
    Kind kind() const { return kind_; }
    const std::vector<RingElem>& coeffs() const { return coeffs_; }
    const RingElem& operator[](std::size_t n) const { return coeffs_.at(n); }
    void set(std::size_t n, const RingElem& value);
    Series truncated(std::size_t order) const;

    friend bool operator==(const Series& a, const Series& b);

private:
    std::size_t order_check(const Series& o) const;
    std::vector<RingElem> coeffs_;
    Kind kind_;
};

enum class SeriesOp { add, sub, mul, div };

/// Exact arithmetic to the common (minimum) order. Throws on ring-kind mismatch and on
/// division by a series whose constant term is not a unit.
Series series_arith(const Series& a, const Series& b, SeriesOp op);
Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator*(const Series& a, const Series& b);
Series operator/(const Series& a, const Series& b);
Series scale(const Series& a, const RingElem& c);

/// outer(inner(t)); inner must have zero constant term.
Series series_compose(const Series& outer, const Series& inner);

/// Compositional inverse v with w(v(t)) = v(w(t)) = t. Requires w_0 = 0 and w_1 a unit.
Series series_comp_inverse(const Series& w);

enum class LogExp { log, exp };

/// log needs constant term 1, exp needs constant term 0.
Series series_log_exp(const Series& f, LogExp op);
Series series_log(const Series& f);
Series series_exp(const Series& f);

/// Formal derivative; the result keeps the same order with a zero top coefficient.
Series derivative(const Series& f);

/// The unique T with T_0 = 0 and T(t) = B(t / (1 - t T(t))), solved degree by degree.
Series troupe_transform(const Series& branch_series);

/// B = T o W^{<-1>} with W = t / (1 - t T). Inverse of troupe_transform.
Series inverse_troupe_transform(const Series& tree_series);

/// Checks 1 - B(t/(1+R)) = 1/(1+R) exactly to the common order, where B and R are the
/// ordinary generating functions of Boolean and free cumulants.
bool boolean_free_series_check(const Series& boolean_series, const Series& free_series);

/// `order N` then one `n: <coeff>` line per coefficient.
std::string serialize(const Series& s);
/// Parses the serialize() format; reports the offending line on error.
Series parse_series(std::istream& in);
Series parse_series(const std::string& text);

std::ostream& operator<<(std::ostream& os, const Series& s);

}  // namespace cumtree
