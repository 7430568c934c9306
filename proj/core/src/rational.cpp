#include "gridtorus/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace gridtorus {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    reduce();
}

void Rational::reduce() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::parse(std::string_view text) {
    auto to_int = [&](std::string_view s) {
        if (s.empty()) throw std::invalid_argument("empty rational component");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw std::invalid_argument("bad rational: " + std::string(text));
        for (std::size_t k = i; k < s.size(); ++k)
            if (s[k] < '0' || s[k] > '9') throw std::invalid_argument("bad rational: " + std::string(text));
        std::string digits(s.substr(s[0] == '+' ? 1 : 0));
        return BigInt(digits);
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(to_int(text));
    BigInt den = to_int(text.substr(slash + 1));
    if (den == 0) throw std::domain_error("rational with zero denominator");
    return Rational(to_int(text.substr(0, slash)), den);
}

std::int64_t Rational::to_int64() const {
    if (!is_integer()) throw std::domain_error("rational " + str() + " is not an integer");
    if (num_ > std::numeric_limits<std::int64_t>::max() || num_ < std::numeric_limits<std::int64_t>::min())
        throw std::domain_error("integer " + str() + " exceeds 64 bits");
    return static_cast<std::int64_t>(num_);
}

BigInt Rational::floor() const {
    BigInt q = num_ / den_;
    if (num_ < 0 && q * den_ != num_) q -= 1;
    return q;
}

Rational Rational::abs() const {
    Rational r = *this;
    if (r.num_ < 0) r.num_ = -r.num_;
    return r;
}

Rational Rational::inverse() const {
    if (num_ == 0) throw std::domain_error("division by zero");
    return Rational(den_, num_);
}

double Rational::to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
    }
    reduce();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::domain_error("division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    reduce();
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt out = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        out *= (n - k + i);
        out /= i;
    }
    return out;
}

}  // namespace gridtorus
