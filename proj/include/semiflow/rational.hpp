#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace semiflow {

using BigInt = mpz_class;

/// Thrown when a request exceeds the configured feasibility cap of a
/// schedule (indices past the materializable blocks, growth terms whose
/// exponents no longer fit in memory, and the like).
struct CapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact rational scalar. Always stored canonically: positive
/// denominator, numerator and denominator coprime. No floating point is
/// involved anywhere; decimal rendering is a formatting operation only.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(int n) : value_(n) {}
    Rational(long n) : value_(n) {}
    Rational(unsigned long n) : value_(mpz_class(n)) {}
    Rational(const BigInt& n) : value_(n) {}

    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    static Rational from_uint(std::uint64_t n) {
        static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
        return Rational(static_cast<unsigned long>(n));
    }

    /// Parses "p/q" or "p" (optional sign on p). Decimal notation is
    /// rejected so no precision can be lost silently.
    static Rational parse(const std::string& text);

    const BigInt numerator() const { return value_.get_num(); }
    const BigInt denominator() const { return value_.get_den(); }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.value_ == 0) throw std::domain_error("division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

    Rational abs() const { return Rational(mpq_class(::abs(value_))); }

    /// Text form "p/q", with "/q" omitted for integers.
    std::string str() const;

    /// Exact decimal rendering with the given number of significant
    /// digits (round half up). Informational output only.
    std::string decimal(int significant_digits = 15) const;

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {}
    mpq_class value_;
};

inline Rational abs(const Rational& r) { return r.abs(); }

inline BigInt big_from_uint(std::uint64_t n) {
    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
    return BigInt(static_cast<unsigned long>(n));
}

/// Converts a BigInt known to be small enough back to uint64_t;
/// throws std::overflow_error otherwise.
std::uint64_t to_uint64(const BigInt& n);

}  // namespace semiflow
