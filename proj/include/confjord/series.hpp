#pragma once

#include <map>
#include <string>
#include <utility>

#include "confjord/rational.hpp"

namespace confjord {

// Coefficients of a formal series: anything with is_zero(), +=, *= Rational
// and ==. Rational itself qualifies, as do the element types built on it.

/// Formal series with finite support over integer powers of one variable.
/// Zero coefficients are never stored, so equality is map comparison.
template <class C>
class ZSeries {
  public:
    ZSeries() = default;
    explicit ZSeries(std::string variable) : var_(std::move(variable)) {}

    const std::string& variable() const { return var_; }
    const std::map<long, C>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    const C& at(long e) const {
        static const C zero{};
        auto it = c_.find(e);
        return it == c_.end() ? zero : it->second;
    }

    void add(long e, const C& v) {
        if (v.is_zero())
            return;
        auto it = c_.find(e);
        if (it == c_.end()) {
            c_.emplace(e, v);
        } else {
            it->second += v;
            if (it->second.is_zero())
                c_.erase(it);
        }
    }

    ZSeries& operator+=(const ZSeries& o) {
        for (const auto& [e, v] : o.c_)
            add(e, v);
        return *this;
    }

    ZSeries& operator*=(const Rational& s) {
        if (s.is_zero()) {
            c_.clear();
            return *this;
        }
        for (auto& [e, v] : c_)
            v *= s;
        return *this;
    }

    /// Lowest/highest exponent present; only meaningful when nonzero.
    long min_exponent() const { return c_.begin()->first; }
    long max_exponent() const { return c_.rbegin()->first; }

    friend bool operator==(const ZSeries& a, const ZSeries& b) { return a.c_ == b.c_; }

  private:
    std::string var_{"z"};
    std::map<long, C> c_;
};

/// Coefficient at exponent -1.
template <class C>
C residue(const ZSeries<C>& s) {
    return s.at(-1);
}

/// Keeps exactly the exponents < 0, retagged to a new variable.
template <class C>
ZSeries<C> negative_part(const ZSeries<C>& s, const std::string& new_variable) {
    ZSeries<C> out(new_variable);
    for (const auto& [e, v] : s.coeffs())
        if (e < 0)
            out.add(e, v);
    return out;
}

/// d/dz: exponent e contributes e * coefficient at exponent e-1.
template <class C>
ZSeries<C> derivative(const ZSeries<C>& s) {
    ZSeries<C> out(s.variable());
    for (const auto& [e, v] : s.coeffs()) {
        if (e == 0)
            continue;
        C w = v;
        w *= Rational(e);
        out.add(e - 1, w);
    }
    return out;
}

template <class C>
ZSeries<C> derivative(const ZSeries<C>& s, long times) {
    ZSeries<C> out = s;
    for (long i = 0; i < times; ++i)
        out = derivative(out);
    return out;
}

/// Substitutes z -> -z: coefficient at exponent e picks up (-1)^e.
template <class C>
ZSeries<C> negate_variable(const ZSeries<C>& s, const std::string& new_variable) {
    ZSeries<C> out(new_variable);
    for (const auto& [e, v] : s.coeffs()) {
        C w = v;
        if (e % 2 != 0)
            w *= Rational(-1);
        out.add(e, w);
    }
    return out;
}

inline ZSeries<Rational> operator*(const ZSeries<Rational>& a, const ZSeries<Rational>& b) {
    ZSeries<Rational> out(a.variable());
    for (const auto& [ea, va] : a.coeffs())
        for (const auto& [eb, vb] : b.coeffs())
            out.add(ea + eb, va * vb);
    return out;
}

/// Two-variable series with finite support. Used for the formal-distribution
/// identity checks, where the delta distribution is materialized inside a
/// caller-declared exponent window.
template <class C>
class BiSeries {
  public:
    using Key = std::pair<long, long>;

    const std::map<Key, C>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    const C& at(long e1, long e2) const {
        static const C zero{};
        auto it = c_.find({e1, e2});
        return it == c_.end() ? zero : it->second;
    }

    void add(long e1, long e2, const C& v) {
        if (v.is_zero())
            return;
        Key k{e1, e2};
        auto it = c_.find(k);
        if (it == c_.end()) {
            c_.emplace(k, v);
        } else {
            it->second += v;
            if (it->second.is_zero())
                c_.erase(it);
        }
    }

    BiSeries& operator+=(const BiSeries& o) {
        for (const auto& [k, v] : o.c_)
            add(k.first, k.second, v);
        return *this;
    }

    friend bool operator==(const BiSeries& a, const BiSeries& b) { return a.c_ == b.c_; }

  private:
    std::map<Key, C> c_;
};

}  // namespace confjord
