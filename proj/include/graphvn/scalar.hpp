#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <compare>
#include <string>
#include <string_view>

#include "graphvn/errors.hpp"

namespace graphvn {

using Rational = boost::multiprecision::mpq_rational;
using Real = boost::multiprecision::mpfr_float;

// Read-only numeric configuration, fixed at startup before any Scalar work.
class NumericConfig {
public:
    static void init(unsigned precision_digits, const std::string& tolerance);
    static unsigned precision_digits();
    static const Real& tolerance();
};

// A trace / weight / parameter value: exact rational, high-precision real,
// or the +inf marker produced by infinite free-group-factor parameters.
//
// Rationals never silently become reals: mixed-mode arithmetic promotes the
// result to real and sets its promoted() flag.  Semantic comparisons (eq, lt,
// ...) use the configured tolerance whenever a real is involved; ordering for
// canonical sorts uses compare_exact().
class Scalar {
public:
    enum class Kind { Rational, Real, Infinity };

    Scalar() : kind_(Kind::Rational), rat_(0) {}
    Scalar(long v) : kind_(Kind::Rational), rat_(v) {}

    static Scalar rational(const Rational& q);
    static Scalar rational(long num, long den);
    static Scalar real(const Real& r);
    static Scalar real_from(const std::string& decimal);
    static Scalar infinity();

    // Accepts "p/q", an integer, a decimal literal (parsed exactly as a
    // rational), or "inf".  `prefer_real` converts finite results to reals.
    static Scalar parse(std::string_view text, bool prefer_real = false);

    Kind kind() const { return kind_; }
    bool is_rational() const { return kind_ == Kind::Rational; }
    bool is_real() const { return kind_ == Kind::Real; }
    bool is_infinite() const { return kind_ == Kind::Infinity; }
    bool is_finite() const { return kind_ != Kind::Infinity; }
    bool promoted() const { return promoted_; }

    const Rational& as_rational() const;
    Real as_real() const;  // converts rationals; throws on infinity
    double to_double() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar squared() const { return *this * *this; }
    Scalar pow_int(long e) const;
    static Scalar sqrt(const Scalar& s);  // always real (or inf)

    // Tolerance-aware predicates.  |a - b| <= eps counts as equal when either
    // side is real; rationals compare exactly.
    bool eq(const Scalar& o) const;
    bool lt(const Scalar& o) const { return compare_exact(o) < 0 && !eq(o); }
    bool le(const Scalar& o) const { return compare_exact(o) < 0 || eq(o); }
    bool gt(const Scalar& o) const { return o.lt(*this); }
    bool ge(const Scalar& o) const { return o.le(*this); }
    bool is_zero() const { return eq(Scalar(0)); }
    bool is_positive() const { return gt(Scalar(0)); }

    // Exact three-way comparison on values, no tolerance.  Infinity compares
    // greater than everything finite.  Used for canonical ordering.
    int compare_exact(const Scalar& o) const;

    bool operator==(const Scalar& o) const { return eq(o); }

    // "p/q" or "n" in rational mode, decimal string in real mode, "inf".
    std::string str() const;

private:
    Kind kind_;
    Rational rat_;
    Real real_;
    bool promoted_ = false;

    static Scalar promote_pair(const Scalar& a, const Scalar& b, Real& x, Real& y);
};

inline Scalar abs(const Scalar& s) { return s.compare_exact(Scalar(0)) < 0 ? -s : s; }

}  // namespace graphvn
