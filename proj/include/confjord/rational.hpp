#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace confjord {

/// Raised on malformed input (bad literals, dimension mismatches, invalid
/// parameters). The CLI maps it to a usage error.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when an internal invariant is violated (kernel bug, not user error).
struct KernelError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Exact rational number. Always reduced to lowest terms with positive
/// denominator; the canonical zero is 0/1.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0)
            throw InputError("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Parses "p" or "p/q".
    static Rational parse(const std::string& s);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw InputError("division by zero");
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

    /// "p/q", with "/q" omitted when q == 1.
    std::string str() const;

    const mpq_class& raw() const { return v_; }

  private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Generalized binomial coefficient a(a-1)...(a-n+1)/n! for any integer a and
/// n >= 0. This is the coefficient pattern of the expansion of (z-x)^{-1} in
/// the second variable, so binom(-j-1, n) = (-1)^n binom(j+n, n).
Rational binom(long a, long n);

/// n!
Rational factorial(long n);

}  // namespace confjord
