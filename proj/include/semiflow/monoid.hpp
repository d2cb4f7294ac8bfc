#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace semiflow {

/// Element of the one-point extension of the naturals: a value n >= 0 or
/// the absorbing element inf. Addition is total; inf absorbs.
class GElement {
public:
    GElement() : finite_(0), is_inf_(false) {}
    GElement(std::uint64_t n) : finite_(n), is_inf_(false) {}

    static GElement infinity() {
        GElement g;
        g.is_inf_ = true;
        return g;
    }

    bool is_infinity() const { return is_inf_; }
    std::uint64_t finite_value() const {
        if (is_inf_) throw std::domain_error("inf has no finite value");
        return finite_;
    }

    friend bool operator==(const GElement& a, const GElement& b) {
        return a.is_inf_ == b.is_inf_ && (a.is_inf_ || a.finite_ == b.finite_);
    }

    std::string str() const { return is_inf_ ? "inf" : std::to_string(finite_); }
    static GElement parse(const std::string& text);

private:
    std::uint64_t finite_;
    bool is_inf_;
};

/// Natural sum when both operands are finite; inf when either is inf.
inline GElement monoid_add(const GElement& a, const GElement& b) {
    if (a.is_infinity() || b.is_infinity()) return GElement::infinity();
    std::uint64_t sum = 0;
    if (__builtin_add_overflow(a.finite_value(), b.finite_value(), &sum))
        throw std::overflow_error("monoid sum exceeds uint64 range");
    return GElement(sum);
}

inline GElement GElement::parse(const std::string& text) {
    if (text == "inf" || text == "infinity") return infinity();
    try {
        return GElement(static_cast<std::uint64_t>(std::stoull(text)));
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed monoid element: '" + text + "'");
    }
}

}  // namespace semiflow
