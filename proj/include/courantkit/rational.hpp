#ifndef COURANTKIT_RATIONAL_HPP
#define COURANTKIT_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace courantkit {

/// Exact rational scalar. Always in lowest terms with positive denominator;
/// every arithmetic operation is exact (arbitrary-precision, no overflow).
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, scalars appear in formulas
    Rational(int n) : v_(n) {}   // NOLINT

    Rational(long num, long den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Parses "p/q" or "p" with optional sign. Returns nullopt on malformed
    /// input or zero denominator; the result is canonical.
    static std::optional<Rational> parse(std::string_view s) {
        if (s.empty()) return std::nullopt;
        const auto slash = s.find('/');
        const std::string num(s.substr(0, slash));
        std::string den = slash == std::string_view::npos ? "1" : std::string(s.substr(slash + 1));
        if (!valid_int(num, true) || !valid_int(den, false)) return std::nullopt;
        mpz_class n(num), d(den);
        if (d == 0) return std::nullopt;
        Rational r;
        r.v_ = mpq_class(n, d);
        r.v_.canonicalize();
        return r;
    }

    [[nodiscard]] mpz_class numerator() const { return v_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return v_.get_den(); }

    [[nodiscard]] bool is_zero() const { return v_ == 0; }
    [[nodiscard]] int sign() const { return sgn(v_); }

    [[nodiscard]] std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

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
    friend Rational operator-(const Rational& a) {
        Rational r;
        r.v_ = -a.v_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

  private:
    static bool valid_int(std::string_view s, bool allow_sign) {
        if (s.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    }

    mpq_class v_;
};

inline Rational half() { return {1, 2}; }

}  // namespace courantkit

#endif
