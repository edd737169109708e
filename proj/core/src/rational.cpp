#include "pspos/rational.hpp"

#include <ostream>
#include <utility>

namespace pspos {

namespace {

Int gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

}  // namespace

ExtRational::ExtRational(Int numerator, Int denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_ == 0) {
        if (num_ == 0)
            throw std::invalid_argument("ExtRational: 0/0 is undefined");
        num_ = 1;  // single unsigned infinity
        return;
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Int g = gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

ExtRational ExtRational::infinity() {
    ExtRational r;
    r.num_ = 1;
    r.den_ = 0;
    return r;
}

ExtRational ExtRational::reciprocal() const {
    if (is_infinite()) return ExtRational();
    if (num_ == 0) return infinity();
    return ExtRational(den_, num_);
}

Int ExtRational::floor() const {
    if (is_infinite())
        throw std::domain_error("ExtRational: floor of infinity");
    if (num_ >= 0) return num_ / den_;
    return -((-num_ + den_ - 1) / den_);
}

ExtRational ExtRational::operator-() const {
    if (is_infinite()) return *this;  // unsigned infinity
    ExtRational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

ExtRational operator+(const ExtRational& a, const ExtRational& b) {
    if (a.is_infinite() || b.is_infinite()) {
        if (a.is_infinite() && b.is_infinite())
            throw std::domain_error("ExtRational: inf + inf is undefined");
        return ExtRational::infinity();
    }
    return ExtRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

ExtRational operator-(const ExtRational& a, const ExtRational& b) {
    if (a.is_infinite() || b.is_infinite()) {
        if (a.is_infinite() && b.is_infinite())
            throw std::domain_error("ExtRational: inf - inf is undefined");
        return ExtRational::infinity();
    }
    return ExtRational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

ExtRational operator*(const ExtRational& a, const ExtRational& b) {
    if (a.is_infinite() || b.is_infinite()) {
        if (a.is_zero() || b.is_zero())
            throw std::domain_error("ExtRational: inf * 0 is undefined");
        return ExtRational::infinity();
    }
    return ExtRational(a.num_ * b.num_, a.den_ * b.den_);
}

ExtRational operator/(const ExtRational& a, const ExtRational& b) {
    return a * b.reciprocal();
}

bool operator<(const ExtRational& a, const ExtRational& b) {
    if (a.is_infinite()) return false;
    if (b.is_infinite()) return true;
    return a.num_ * b.den_ < b.num_ * a.den_;
}

ExtRational mod_one(const ExtRational& r) {
    if (r.is_infinite())
        throw std::domain_error("mod_one: undefined for infinity");
    Int rem = r.numerator() % r.denominator();
    if (rem < 0) rem += r.denominator();
    return ExtRational(rem, r.denominator());
}

std::string to_fraction_string(const ExtRational& r) {
    return r.numerator().str() + "/" + r.denominator().str();
}

std::string to_display_string(const ExtRational& r) {
    if (r.is_infinite()) return "inf";
    if (r.is_integer()) return r.numerator().str();
    return to_fraction_string(r);
}

ExtRational parse_rational(const std::string& text) {
    if (text.empty())
        throw std::invalid_argument("parse_rational: empty string");
    if (text == "inf" || text == "Inf" || text == "INF")
        return ExtRational::infinity();
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return ExtRational(Int(text));
        if (slash == 0 || slash + 1 == text.size())
            throw std::invalid_argument("missing numerator or denominator");
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0 && num == 0)
            throw std::invalid_argument("0/0 is undefined");
        return ExtRational(std::move(num), std::move(den));
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_rational: cannot parse '" + text +
                                    "' (expected p/q, an integer, or inf)");
    }
}

std::ostream& operator<<(std::ostream& os, const ExtRational& r) {
    return os << to_display_string(r);
}

}  // namespace pspos
