#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "wturan/error.hpp"

namespace wturan {

/// Exact rational number backed by GMP. Always held in lowest terms with a
/// positive denominator. Text form is "p/q", or "p" when q = 1.
class Rational {
public:
    Rational() = default;

    template <std::signed_integral I>
    Rational(I v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

    template <std::unsigned_integral U>
    Rational(U v) : v_(static_cast<unsigned long>(v)) {}  // NOLINT(google-explicit-constructor)

    explicit Rational(const mpz_class& v) : v_(v) {}

    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw InvalidArgument("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    template <std::integral A, std::integral B>
    Rational(A num, B den) : Rational(to_mpz(num), to_mpz(den)) {}

    /// Parses "p", "-p", "p/q" or "-p/q" with decimal digits only.
    static Rational parse(std::string_view text) {
        auto bad = [&] { return ParseError("invalid rational '" + std::string(text) + "'"); };
        if (text.empty()) throw bad();
        auto slash = text.find('/');
        auto num_part = text.substr(0, slash);
        auto den_part = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
        auto digits_ok = [](std::string_view s, bool allow_sign) {
            if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
            if (s.empty()) return false;
            for (char c : s)
                if (c < '0' || c > '9') return false;
            return true;
        };
        if (!digits_ok(num_part, true) || !digits_ok(den_part, false)) throw bad();
        if (num_part.front() == '+') num_part.remove_prefix(1);
        mpz_class num(std::string(num_part), 10);
        mpz_class den(std::string(den_part), 10);
        if (den == 0) throw bad();
        return Rational(num, den);
    }

    const mpq_class& value() const noexcept { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    int sign() const noexcept { return sgn(v_); }
    bool is_zero() const noexcept { return sign() == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    std::string str() const { return v_.get_str(); }

    /// Lossy; for display only.
    double approx() const { return v_.get_d(); }

    Rational& operator+=(const Rational& o) { mpq_add(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t()); return *this; }
    Rational& operator-=(const Rational& o) { mpq_sub(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t()); return *this; }
    Rational& operator*=(const Rational& o) { mpq_mul(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t()); return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw InvalidArgument("division by zero");
        mpq_div(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(Rational a) { mpq_neg(a.v_.get_mpq_t(), a.v_.get_mpq_t()); return a; }

    friend bool operator==(const Rational& a, const Rational& b) noexcept {
        return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
        int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    template <std::integral I>
    static mpz_class to_mpz(I v) {
        if constexpr (std::signed_integral<I>) return mpz_class(static_cast<long>(v));
        else return mpz_class(static_cast<unsigned long>(v));
    }

    mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

} // namespace wturan
