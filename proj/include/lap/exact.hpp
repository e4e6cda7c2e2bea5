#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lap {

// A value in (1/2)Z stored as twice its value.
struct HalfInt {
    int64_t twice = 0;

    static constexpr HalfInt from_twice(int64_t t) { return HalfInt{t}; }
    static constexpr HalfInt of(int64_t n) { return HalfInt{2 * n}; }

    constexpr bool is_integer() const { return twice % 2 == 0; }
    constexpr int64_t floor() const { return twice >= 0 ? twice / 2 : -((-twice + 1) / 2); }
    int64_t to_int() const {
        if (!is_integer()) throw std::domain_error("half-integer is not an integer: " + str());
        return twice / 2;
    }

    constexpr HalfInt operator+(HalfInt o) const { return {twice + o.twice}; }
    constexpr HalfInt operator-(HalfInt o) const { return {twice - o.twice}; }
    constexpr HalfInt operator-() const { return {-twice}; }
    constexpr HalfInt operator+(int64_t n) const { return {twice + 2 * n}; }
    constexpr HalfInt operator-(int64_t n) const { return {twice - 2 * n}; }
    HalfInt& operator+=(HalfInt o) { twice += o.twice; return *this; }
    HalfInt& operator-=(HalfInt o) { twice -= o.twice; return *this; }

    constexpr auto operator<=>(const HalfInt&) const = default;
    constexpr bool operator==(const HalfInt&) const = default;
    constexpr bool operator==(int64_t n) const { return twice == 2 * n; }
    constexpr auto operator<=>(int64_t n) const { return twice <=> 2 * n; }

    std::string str() const {
        if (is_integer()) return std::to_string(twice / 2);
        return std::to_string(twice) + "/2";
    }
};

inline HalfInt abs(HalfInt h) { return h.twice < 0 ? -h : h; }

// Reduced fraction with positive denominator.
struct Rational {
    int64_t num = 0;
    int64_t den = 1;

    Rational() = default;
    Rational(int64_t n) : num(n), den(1) {}
    Rational(int64_t n, int64_t d) : num(n), den(d) { normalize(); }
    Rational(HalfInt h) : num(h.twice), den(2) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("zero denominator");
        if (den < 0) { num = -num; den = -den; }
        int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    Rational operator+(const Rational& o) const { return {num * o.den + o.num * den, den * o.den}; }
    Rational operator-(const Rational& o) const { return {num * o.den - o.num * den, den * o.den}; }
    Rational operator*(const Rational& o) const { return {num * o.num, den * o.den}; }
    Rational operator-() const { return {-num, den}; }

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    std::strong_ordering operator<=>(const Rational& o) const { return num * o.den <=> o.num * den; }

    bool is_zero() const { return num == 0; }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(std::stoll(s));
            return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
        } catch (const std::logic_error&) {
            throw std::invalid_argument("not a rational: '" + s + "'");
        }
    }
};

inline int sign_pow(int64_t e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace lap
