#include "semiflow/rational.hpp"

#include <cctype>

namespace semiflow {

namespace {

bool digits_only(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

}  // namespace

Rational Rational::parse(const std::string& text) {
    std::string t = trim(text);
    if (t.empty()) throw std::invalid_argument("empty rational literal");
    if (t.find('.') != std::string::npos)
        throw std::invalid_argument("decimal notation rejected, use p/q: '" + text + "'");

    std::string num = t, den = "1";
    if (auto slash = t.find('/'); slash != std::string::npos) {
        num = trim(t.substr(0, slash));
        den = trim(t.substr(slash + 1));
    }
    bool negative = false;
    if (!num.empty() && (num[0] == '-' || num[0] == '+')) {
        negative = num[0] == '-';
        num = num.substr(1);
    }
    if (!digits_only(num) || !digits_only(den))
        throw std::invalid_argument("malformed rational literal: '" + text + "'");

    BigInt n(num), d(den);
    if (negative) n = -n;
    if (d == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    return Rational(n, d);
}

std::string Rational::str() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::decimal(int significant_digits) const {
    if (significant_digits < 1) throw std::invalid_argument("need at least one significant digit");
    if (value_ == 0) return "0";

    BigInt a = ::abs(value_.get_num());
    BigInt b = value_.get_den();

    // Exponent e with 10^e <= a/b < 10^(e+1).
    long e = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 10));
    auto cmp_at = [&](long k) {
        // compares a/b against 10^k
        BigInt lhs = a, rhs = b;
        BigInt p10;
        if (k >= 0) {
            mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(k));
            rhs *= p10;
        } else {
            mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(-k));
            lhs *= p10;
        }
        return cmp(lhs, rhs);
    };
    while (cmp_at(e) < 0) --e;
    while (cmp_at(e + 1) >= 0) ++e;

    // significant_digits digits of a/b, rounded half up.
    long shift = significant_digits - 1 - e;
    BigInt num = a, den = b, p10;
    if (shift >= 0) {
        mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(shift));
        num *= p10;
    } else {
        mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(-shift));
        den *= p10;
    }
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (2 * r >= den) q += 1;

    std::string digits = q.get_str();
    if (static_cast<int>(digits.size()) > significant_digits) {
        // rounding carried into a new leading digit (e.g. 999.. -> 1000..)
        digits.pop_back();
        ++e;
    }

    std::string out;
    if (sign() < 0) out += '-';
    if (e >= 0) {
        if (e + 1 >= static_cast<long>(digits.size())) {
            out += digits;
            out.append(static_cast<std::size_t>(e + 1 - digits.size()), '0');
        } else {
            out += digits.substr(0, e + 1);
            out += '.';
            out += digits.substr(e + 1);
        }
    } else {
        out += "0.";
        out.append(static_cast<std::size_t>(-e - 1), '0');
        out += digits;
    }
    return out;
}

std::uint64_t to_uint64(const BigInt& n) {
    if (n < 0 || !n.fits_ulong_p())
        throw std::overflow_error("big integer does not fit in uint64");
    return static_cast<std::uint64_t>(n.get_ui());
}

}  // namespace semiflow
