#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace diracint {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational, always in lowest terms with positive denominator.
// Thin wrapper over cpp_rational so the rest of the code never touches
// backend types directly.
class Rational {
public:
    using Backend = boost::multiprecision::cpp_rational;

    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {}
    Rational(const BigInt& n) : v_(n) {}
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        // cpp_rational's (num, den) constructor rejects negative denominators
        v_ = den < 0 ? Backend(-num, -den) : Backend(num, den);
    }
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}
    explicit Rational(Backend v) : v_(std::move(v)) {}

    BigInt num() const { return boost::multiprecision::numerator(v_); }
    BigInt den() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return den() == 1; }
    int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

    Rational operator-() const { return Rational(Backend(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    // Integer exponent; negative exponents require a nonzero base.
    Rational pow(long long e) const {
        if (e == 0) return Rational(1);
        if (e < 0) {
            if (is_zero()) throw std::domain_error("Rational: 0 to negative power");
            return Rational(1) / pow(-e);
        }
        Rational base = *this, acc(1);
        long long k = e;
        while (k > 0) {
            if (k & 1) acc *= base;
            base *= base;
            k >>= 1;
        }
        return acc;
    }

    BigInt floor() const {
        BigInt q = num() / den();
        if (v_ < 0 && q * den() != num()) --q;
        return q;
    }
    BigInt ceil() const { return -Rational(-v_).floor(); }

    // Exact square root if this is a perfect square of a rational, else nullopt.
    std::optional<Rational> exact_sqrt() const {
        if (sign() < 0) return std::nullopt;
        BigInt sn = boost::multiprecision::sqrt(num());
        if (sn * sn != num()) return std::nullopt;
        BigInt sd = boost::multiprecision::sqrt(den());
        if (sd * sd != den()) return std::nullopt;
        return Rational(sn, sd);
    }
    bool is_perfect_square() const { return exact_sqrt().has_value(); }

    std::string str() const {
        std::string s = num().str();
        if (!is_integer()) s += "/" + den().str();
        return s;
    }

    double to_double() const { return static_cast<double>(v_); }

    // Accepts "n", "n/d", and finite decimals like "-0.25". Anything else throws.
    static Rational parse(std::string_view text);

private:
    Backend v_;
};

inline Rational Rational::parse(std::string_view text) {
    auto bad = [&] {
        return std::invalid_argument("Rational::parse: malformed value '" + std::string(text) + "'");
    };
    if (text.empty()) throw bad();

    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        auto n = text.substr(0, slash), d = text.substr(slash + 1);
        if (n.empty() || d.empty() || d.find('/') != std::string_view::npos ||
            n.find('.') != std::string_view::npos || d.find('.') != std::string_view::npos)
            throw bad();
        try {
            BigInt num = BigInt(std::string(n));
            BigInt den = BigInt(std::string(d));
            if (den == 0) throw bad();
            return Rational(num, den);
        } catch (const std::runtime_error&) {
            throw bad();
        }
    }

    auto dot = text.find('.');
    if (dot == std::string_view::npos) {
        try {
            return Rational(BigInt(std::string(text)));
        } catch (const std::runtime_error&) {
            throw bad();
        }
    }

    auto ipart = text.substr(0, dot), fpart = text.substr(dot + 1);
    if (fpart.empty() || fpart.find('.') != std::string_view::npos) throw bad();
    bool neg = false;
    if (!ipart.empty() && (ipart[0] == '-' || ipart[0] == '+')) {
        neg = ipart[0] == '-';
        ipart.remove_prefix(1);
    }
    for (char c : ipart) if (c < '0' || c > '9') throw bad();
    for (char c : fpart) if (c < '0' || c > '9') throw bad();
    try {
        BigInt whole = ipart.empty() ? BigInt(0) : BigInt(std::string(ipart));
        BigInt frac = BigInt(std::string(fpart));
        BigInt scale(1);
        for (size_t i = 0; i < fpart.size(); ++i) scale *= 10;
        Rational r(whole * scale + frac, scale);
        return neg ? -r : r;
    } catch (const std::runtime_error&) {
        throw bad();
    }
}

inline Rational abs(const Rational& r) { return r.abs(); }

}  // namespace diracint
