#pragma once
/**
 * @file rational.hpp
 * @brief Exact rationals over arbitrary precision integers.
 *
 * Values are kept in lowest terms with a positive denominator, so two
 * equal rationals always have identical representations.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace gridtorus {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by design
    Rational(BigInt value) : num_(std::move(value)) {}  // NOLINT
    Rational(BigInt num, BigInt den);

    /// Parses "p", "-p" or "p/q".
    static Rational parse(std::string_view text);

    const BigInt& num() const noexcept { return num_; }
    const BigInt& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_integer() const noexcept { return den_ == 1; }
    int sign() const noexcept { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

    /// Throws std::domain_error unless the value is an integer fitting in 64 bits.
    std::int64_t to_int64() const;
    BigInt floor() const;
    Rational abs() const;
    Rational inverse() const;
    double to_double() const;

    /// "p" for integers, "p/q" otherwise.
    std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    void reduce();

    BigInt num_{0};
    BigInt den_{1};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Binomial coefficient C(n, k) as an exact integer; zero outside 0 <= k <= n.
BigInt binomial(std::int64_t n, std::int64_t k);

}  // namespace gridtorus
