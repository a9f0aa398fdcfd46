#ifndef BUNKBED_RATIONAL_HPP
#define BUNKBED_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace bunkbed {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact probability value: an arbitrary-precision rational plus a
/// double-precision view for display.
class Rational {
public:
    Rational() = default;
    Rational(const BigRational& v) : value_(v) {}
    Rational(const BigInt& num, const BigInt& den) : value_(num, den) {}
    Rational(long num, long den) : value_(num, den) {}
    explicit Rational(long v) : value_(v) {}

    const BigRational& value() const { return value_; }
    BigInt num() const { return boost::multiprecision::numerator(value_); }
    BigInt den() const { return boost::multiprecision::denominator(value_); }

    double approx() const { return static_cast<double>(value_); }
    std::string num_str() const { return num().str(); }
    std::string den_str() const { return den().str(); }
    std::string str() const { return num_str() + "/" + den_str(); }

    Rational operator+(const Rational& o) const { return Rational(value_ + o.value_); }
    Rational operator-(const Rational& o) const { return Rational(value_ - o.value_); }
    Rational operator*(const Rational& o) const { return Rational(value_ * o.value_); }
    Rational operator/(const Rational& o) const { return Rational(value_ / o.value_); }
    bool operator==(const Rational& o) const { return value_ == o.value_; }
    bool operator!=(const Rational& o) const { return value_ != o.value_; }
    bool operator<(const Rational& o) const { return value_ < o.value_; }
    bool operator<=(const Rational& o) const { return value_ <= o.value_; }
    bool operator>(const Rational& o) const { return value_ > o.value_; }
    bool operator>=(const Rational& o) const { return value_ >= o.value_; }

    static Rational zero() { return Rational(BigRational(0)); }
    static Rational one() { return Rational(BigRational(1)); }
    static Rational half() { return Rational(1, 2); }

    /// 2^-k
    static Rational dyadic(unsigned k) {
        BigInt den = BigInt(1) << k;
        return Rational(BigInt(1), den);
    }

    /// Parse "a/b" or "a".
    static Rational parse(const std::string& s);

private:
    BigRational value_;
};

inline Rational abs(const Rational& r) {
    return r < Rational::zero() ? Rational::zero() - r : r;
}

inline Rational pow(const Rational& r, unsigned k) {
    using boost::multiprecision::pow;
    return Rational(pow(r.num(), k), pow(r.den(), k));
}

inline Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigRational(BigInt(s)));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    return Rational(num, den);
}

} // namespace bunkbed

#endif
