#pragma once

#include "contx/bigint.hpp"
#include "contx/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>

namespace contx {

// Exact rational with a distinguished +infinity, which compares greater
// than every finite value. Arithmetic on +infinity is rejected; it exists
// only as a comparison sentinel for continued-fraction values.
class Rational {
public:
    using Q = boost::multiprecision::cpp_rational;

    Rational() = default;
    Rational(const Q& q) : q_(q) {}
    Rational(long long v) : q_(v) {}
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw domain_error("Rational: zero denominator");
        q_ = Q(num, den);
    }

    static Rational infinity() {
        Rational r;
        r.inf_ = true;
        return r;
    }

    bool is_infinite() const { return inf_; }

    const Q& value() const {
        if (inf_) throw domain_error("Rational: +infinity has no finite value");
        return q_;
    }

    BigInt numerator() const { return boost::multiprecision::numerator(value()); }
    BigInt denominator() const { return boost::multiprecision::denominator(value()); }

    int sign() const {
        if (inf_) return 1;
        return q_.sign();
    }

    Rational operator-(const Rational& o) const { return Rational(value() - o.value()); }
    Rational operator+(const Rational& o) const { return Rational(value() + o.value()); }
    Rational operator*(const Rational& o) const { return Rational(value() * o.value()); }
    Rational operator/(const Rational& o) const {
        if (o.value() == 0) throw domain_error("Rational: division by zero");
        return Rational(value() / o.value());
    }

    bool operator==(const Rational& o) const {
        if (inf_ || o.inf_) return inf_ && o.inf_;
        return q_ == o.q_;
    }
    bool operator<(const Rational& o) const {
        if (inf_) return false;
        if (o.inf_) return true;
        return q_ < o.q_;
    }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>=(const Rational& o) const { return !(*this < o); }
    bool operator!=(const Rational& o) const { return !(*this == o); }

    std::string str() const {
        if (inf_) return "+inf";
        return q_.str();
    }

private:
    Q q_ = 0;
    bool inf_ = false;
};

} // namespace contx
