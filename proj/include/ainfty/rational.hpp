#pragma once
#include <cstdint>
#include <numeric>
#include <string>
#include <stdexcept>

namespace af {

/* Exact rational with int64 parts; enough for action bookkeeping. */
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d = 1) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num * b.num, a.den * b.den);
    }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num * b.den < b.num * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return a.num * b.den <= b.num * a.den;
    }

    double to_double() const { return (double)num / (double)den; }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    /* parse "p" or "p/q"; throws std::invalid_argument on junk */
    static Rational parse(const std::string& s);
};

inline Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    std::size_t pos = 0;
    long long n = std::stoll(s.substr(0, slash), &pos);
    if (pos != (slash == std::string::npos ? s.size() : slash))
        throw std::invalid_argument("bad rational: " + s);
    long long d = 1;
    if (slash != std::string::npos) {
        std::string rest = s.substr(slash + 1);
        d = std::stoll(rest, &pos);
        if (pos != rest.size()) throw std::invalid_argument("bad rational: " + s);
    }
    return Rational(n, d);
}

} // namespace af
