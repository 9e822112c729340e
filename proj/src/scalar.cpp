#include "graphvn/scalar.hpp"

#include <cctype>
#include <sstream>

namespace graphvn {

namespace {

struct ConfigState {
    unsigned digits = 50;
    Real tolerance;
    bool initialized = false;
};

ConfigState& state() {
    static ConfigState s;
    return s;
}

void ensure_init() {
    if (!state().initialized) NumericConfig::init(50, "1e-12");
}

}  // namespace

void NumericConfig::init(unsigned precision_digits, const std::string& tolerance) {
    if (precision_digits < 15) throw InvariantError("precision must be at least 15 digits");
    Real::default_precision(precision_digits);
    state().digits = precision_digits;
    state().tolerance = Real(tolerance);
    if (state().tolerance <= 0) throw InvariantError("tolerance must be positive");
    state().initialized = true;
}

unsigned NumericConfig::precision_digits() {
    ensure_init();
    return state().digits;
}

const Real& NumericConfig::tolerance() {
    ensure_init();
    return state().tolerance;
}

Scalar Scalar::rational(const Rational& q) {
    Scalar s;
    s.kind_ = Kind::Rational;
    s.rat_ = q;
    return s;
}

Scalar Scalar::rational(long num, long den) {
    if (den == 0) throw NumericError("rational with zero denominator");
    return rational(Rational(num, den));
}

Scalar Scalar::real(const Real& r) {
    ensure_init();
    Scalar s;
    s.kind_ = Kind::Real;
    s.real_ = r;
    return s;
}

Scalar Scalar::real_from(const std::string& decimal) { return real(Real(decimal)); }

Scalar Scalar::infinity() {
    Scalar s;
    s.kind_ = Kind::Infinity;
    return s;
}

Scalar Scalar::parse(std::string_view text, bool prefer_real) {
    std::string t(text);
    if (t.empty()) throw ParseError("empty number");
    if (t == "inf" || t == "+inf" || t == "infinity") return infinity();
    Scalar out;
    auto slash = t.find('/');
    try {
        if (slash != std::string::npos) {
            Rational num(t.substr(0, slash)), den(t.substr(slash + 1));
            if (den == 0) throw NumericError("zero denominator");
            out = rational(num / den);
        } else if (t.find('e') != std::string::npos || t.find('E') != std::string::npos) {
            out = real_from(t);
            return out;
        } else if (auto dot = t.find('.'); dot != std::string::npos) {
            // Decimal literals parse exactly: 0.8 -> 4/5.
            std::string digits = t.substr(0, dot) + t.substr(dot + 1);
            long frac_len = static_cast<long>(t.size() - dot - 1);
            Rational den = 1;
            for (long i = 0; i < frac_len; ++i) den *= 10;
            out = rational(Rational(digits) / den);
        } else {
            out = rational(Rational(t));
        }
    } catch (const std::exception& e) {
        throw ParseError("bad number '" + t + "'");
    }
    if (prefer_real) return real(out.as_real());
    return out;
}

const Rational& Scalar::as_rational() const {
    if (kind_ != Kind::Rational) throw NumericError("scalar is not rational: " + str());
    return rat_;
}

Real Scalar::as_real() const {
    ensure_init();
    switch (kind_) {
        case Kind::Rational: return Real(rat_);
        case Kind::Real: return real_;
        default: throw NumericError("infinite scalar has no real value");
    }
}

double Scalar::to_double() const {
    if (is_infinite()) return std::numeric_limits<double>::infinity();
    return static_cast<double>(as_real());
}

Scalar Scalar::promote_pair(const Scalar& a, const Scalar& b, Real& x, Real& y) {
    x = a.as_real();
    y = b.as_real();
    Scalar s;
    s.kind_ = Kind::Real;
    // A genuine promotion only happens when modes are mixed.
    s.promoted_ = (a.kind_ != b.kind_) || a.promoted_ || b.promoted_;
    return s;
}

Scalar Scalar::operator-() const {
    if (is_infinite()) throw NumericError("negating infinity is not supported");
    Scalar s = *this;
    if (kind_ == Kind::Rational)
        s.rat_ = -rat_;
    else
        s.real_ = -real_;
    return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (is_infinite() || o.is_infinite()) {
        return infinity();
    }
    if (kind_ == Kind::Rational && o.kind_ == Kind::Rational) {
        Scalar s = rational(rat_ + o.rat_);
        s.promoted_ = promoted_ || o.promoted_;
        return s;
    }
    Real x, y;
    Scalar s = promote_pair(*this, o, x, y);
    s.real_ = x + y;
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    if (is_infinite() && o.is_infinite()) throw NumericError("inf - inf");
    if (is_infinite()) return infinity();
    if (o.is_infinite()) throw NumericError("finite - inf is negative infinity");
    if (kind_ == Kind::Rational && o.kind_ == Kind::Rational) {
        Scalar s = rational(rat_ - o.rat_);
        s.promoted_ = promoted_ || o.promoted_;
        return s;
    }
    Real x, y;
    Scalar s = promote_pair(*this, o, x, y);
    s.real_ = x - y;
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    if (is_infinite() || o.is_infinite()) {
        const Scalar& fin = is_infinite() ? o : *this;
        if (fin.is_finite() && fin.compare_exact(Scalar(0)) <= 0)
            throw NumericError("inf * nonpositive");
        return infinity();
    }
    if (kind_ == Kind::Rational && o.kind_ == Kind::Rational) {
        Scalar s = rational(rat_ * o.rat_);
        s.promoted_ = promoted_ || o.promoted_;
        return s;
    }
    Real x, y;
    Scalar s = promote_pair(*this, o, x, y);
    s.real_ = x * y;
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_infinite()) throw NumericError("division by infinity");
    if (o.compare_exact(Scalar(0)) == 0) throw NumericError("division by zero");
    if (is_infinite()) {
        if (o.compare_exact(Scalar(0)) < 0) throw NumericError("inf / negative");
        return infinity();
    }
    if (kind_ == Kind::Rational && o.kind_ == Kind::Rational) {
        Scalar s = rational(rat_ / o.rat_);
        s.promoted_ = promoted_ || o.promoted_;
        return s;
    }
    Real x, y;
    Scalar s = promote_pair(*this, o, x, y);
    s.real_ = x / y;
    return s;
}

Scalar Scalar::pow_int(long e) const {
    if (e < 0) return Scalar(1) / pow_int(-e);
    Scalar acc(1), base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Scalar Scalar::sqrt(const Scalar& s) {
    if (s.is_infinite()) return infinity();
    if (s.compare_exact(Scalar(0)) < 0) throw NumericError("sqrt of negative scalar");
    return real(boost::multiprecision::sqrt(s.as_real()));
}

bool Scalar::eq(const Scalar& o) const {
    if (is_infinite() || o.is_infinite()) return is_infinite() && o.is_infinite();
    if (kind_ == Kind::Rational && o.kind_ == Kind::Rational) return rat_ == o.rat_;
    Real d = as_real() - o.as_real();
    if (d < 0) d = -d;
    return d <= NumericConfig::tolerance();
}

int Scalar::compare_exact(const Scalar& o) const {
    if (is_infinite() && o.is_infinite()) return 0;
    if (is_infinite()) return 1;
    if (o.is_infinite()) return -1;
    if (kind_ == Kind::Rational && o.kind_ == Kind::Rational)
        return rat_ < o.rat_ ? -1 : (rat_ == o.rat_ ? 0 : 1);
    Real x = as_real(), y = o.as_real();
    return x < y ? -1 : (x == y ? 0 : 1);
}

std::string Scalar::str() const {
    switch (kind_) {
        case Kind::Infinity: return "inf";
        case Kind::Rational: {
            std::ostringstream os;
            os << rat_;
            return os.str();
        }
        default: {
            std::ostringstream os;
            os << std::setprecision(static_cast<int>(NumericConfig::precision_digits())) << real_;
            return os.str();
        }
    }
}

}  // namespace graphvn
