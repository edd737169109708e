#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace pspos {

using Int = boost::multiprecision::cpp_int;

/// An exact rational number extended by a single unsigned point at infinity.
///
/// Finite values are kept reduced with positive denominator; 0 is 0/1.
/// Infinity is the canonical value 1/0, and normalizing any x/0 with
/// x != 0 produces it. 0/0 is rejected.
class ExtRational {
public:
    ExtRational() : num_(0), den_(1) {}
    ExtRational(Int value) : num_(std::move(value)), den_(1) {}
    ExtRational(long long value) : num_(value), den_(1) {}
    ExtRational(Int numerator, Int denominator);

    static ExtRational infinity();

    bool is_infinite() const { return den_ == 0; }
    bool is_zero() const { return den_ != 0 && num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    /// Reduced numerator; sign lives here. For infinity this is 1.
    const Int& numerator() const { return num_; }
    /// Reduced denominator, >= 1 for finite values, 0 for infinity.
    const Int& denominator() const { return den_; }

    /// 1/x with the extended rules 1/0 = inf and 1/inf = 0.
    ExtRational reciprocal() const;

    /// Largest integer <= value. Throws on infinity.
    Int floor() const;

    ExtRational operator-() const;

    friend ExtRational operator+(const ExtRational& a, const ExtRational& b);
    friend ExtRational operator-(const ExtRational& a, const ExtRational& b);
    friend ExtRational operator*(const ExtRational& a, const ExtRational& b);
    friend ExtRational operator/(const ExtRational& a, const ExtRational& b);

    friend bool operator==(const ExtRational& a, const ExtRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const ExtRational& a, const ExtRational& b) {
        return !(a == b);
    }
    // Finite values are ordered by value; infinity compares above everything.
    friend bool operator<(const ExtRational& a, const ExtRational& b);
    friend bool operator>(const ExtRational& a, const ExtRational& b) { return b < a; }
    friend bool operator<=(const ExtRational& a, const ExtRational& b) { return !(b < a); }
    friend bool operator>=(const ExtRational& a, const ExtRational& b) { return !(a < b); }

private:
    Int num_;
    Int den_;
};

/// The representative of r in [0, 1), exact. Throws on infinity.
ExtRational mod_one(const ExtRational& r);

/// Always "num/den" ("1/0" for infinity); stable wire form.
std::string to_fraction_string(const ExtRational& r);

/// "num" for integers, "inf" for infinity, otherwise "num/den".
std::string to_display_string(const ExtRational& r);

/// Accepts "p/q", a bare integer, or "inf". Throws std::invalid_argument.
ExtRational parse_rational(const std::string& text);

std::ostream& operator<<(std::ostream& os, const ExtRational& r);

}  // namespace pspos
