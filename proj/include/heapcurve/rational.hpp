#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace heapcurve {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }
inline BigInt big_lcm(const BigInt& a, const BigInt& b) { return boost::multiprecision::lcm(a, b); }

/// Exact rational number over arbitrary-precision integers.
///
/// Invariants: denominator > 0 and gcd(|num|, den) = 1, so equality is
/// structural and every value has exactly one stored form.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : num_(n) {}
    Rational(BigInt n) : num_(std::move(n)) {}
    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }
    Rational(long long num, long long den) : num_(num), den_(den) { normalize(); }

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }

    Rational operator-() const { return Rational(raw{}, -num_, den_); }

    Rational operator+(const Rational& o) const {
        return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Rational operator*(const Rational& o) const { return Rational(num_ * o.num_, den_ * o.den_); }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(num_ * o.den_, den_ * o.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return num_ * o.den_ < o.num_ * den_; }
    bool operator<=(const Rational& o) const { return num_ * o.den_ <= o.num_ * den_; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    /// Largest integer <= this.
    BigInt floor() const {
        BigInt q = num_ / den_;
        if (num_ < 0 && q * den_ != num_) --q;
        return q;
    }

    /// Canonical representative in [0, 1) of this mod 1.
    Rational mod1() const { return *this - Rational(floor()); }

    /// Renders "num/den", with "/den" omitted for integers.
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) {
            s += '/';
            s += den_.str();
        }
        return s;
    }

    /// Parses "num" or "num/den" (optional leading minus sign).
    static Rational parse(std::string_view text) {
        auto bad = [&] {
            throw std::invalid_argument("invalid rational literal '" + std::string(text) + "'");
        };
        if (text.empty()) bad();
        const auto slash = text.find('/');
        std::string_view num_part = text.substr(0, slash);
        std::string_view den_part =
            slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
        if (num_part.empty() || den_part.empty()) bad();
        auto digits_only = [](std::string_view s) {
            for (char c : s)
                if (c < '0' || c > '9') return false;
            return !s.empty();
        };
        bool neg = false;
        if (num_part.front() == '-' || num_part.front() == '+') {
            neg = num_part.front() == '-';
            num_part.remove_prefix(1);
        }
        if (!digits_only(num_part) || !digits_only(den_part)) bad();
        BigInt num{std::string(num_part)};
        BigInt den{std::string(den_part)};
        if (den == 0) throw std::domain_error("Rational: division by zero");
        if (neg) num = -num;
        return Rational(std::move(num), std::move(den));
    }

private:
    struct raw {};
    Rational(raw, BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {}

    void normalize() {
        if (den_ == 0) throw std::domain_error("Rational: division by zero");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        BigInt g = big_gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_{0};
    BigInt den_{1};
};

inline Rational abs(const Rational& r) { return r.is_negative() ? -r : r; }

/// Element re + im*sqrt(-d) of the imaginary quadratic field Q(sqrt(-d)).
/// Arithmetic is exact; operands must share the same d.
class QuadraticNumber {
public:
    QuadraticNumber(Rational re, Rational im, BigInt d)
        : re_(std::move(re)), im_(std::move(im)), d_(std::move(d)) {
        if (d_ < 1) throw std::invalid_argument("QuadraticNumber: d must be a positive integer");
    }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }
    const BigInt& d() const { return d_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    QuadraticNumber conj() const { return QuadraticNumber(re_, -im_, d_); }

    /// re^2 + d*im^2 (the field norm; zero only at zero).
    Rational norm() const { return re_ * re_ + Rational(d_) * im_ * im_; }

    QuadraticNumber operator-() const { return QuadraticNumber(-re_, -im_, d_); }

    QuadraticNumber operator+(const QuadraticNumber& o) const {
        check_same_d(o);
        return QuadraticNumber(re_ + o.re_, im_ + o.im_, d_);
    }
    QuadraticNumber operator-(const QuadraticNumber& o) const {
        check_same_d(o);
        return QuadraticNumber(re_ - o.re_, im_ - o.im_, d_);
    }
    QuadraticNumber operator*(const QuadraticNumber& o) const {
        check_same_d(o);
        // (a + b sqrt(-d))(a' + b' sqrt(-d)) = (aa' - d bb') + (ab' + a'b) sqrt(-d)
        return QuadraticNumber(re_ * o.re_ - Rational(d_) * im_ * o.im_,
                               re_ * o.im_ + o.re_ * im_, d_);
    }
    QuadraticNumber operator/(const QuadraticNumber& o) const {
        check_same_d(o);
        if (o.is_zero()) throw std::domain_error("QuadraticNumber: division by zero");
        const Rational n = o.norm();
        QuadraticNumber scaled = *this * o.conj();
        return QuadraticNumber(scaled.re_ / n, scaled.im_ / n, d_);
    }

    bool operator==(const QuadraticNumber& o) const {
        return d_ == o.d_ && re_ == o.re_ && im_ == o.im_;
    }
    bool operator!=(const QuadraticNumber& o) const { return !(*this == o); }

    std::string str() const {
        return re_.str() + (im_.is_negative() ? " - " : " + ") + abs(im_).str() + "*sqrt(-" +
               d_.str() + ")";
    }

private:
    void check_same_d(const QuadraticNumber& o) const {
        if (d_ != o.d_)
            throw std::invalid_argument("QuadraticNumber: mixed field parameters d=" + d_.str() +
                                        " and d=" + o.d_.str());
    }

    Rational re_;
    Rational im_;
    BigInt d_;
};

}  // namespace heapcurve
