#pragma once

#include <map>
#include <string>
#include <vector>

#include "confjord/rational.hpp"

namespace confjord {

/// Sparse k x k matrix over the rationals. Indices are 0-based; no zero
/// entries are stored.
class RMatrix {
  public:
    RMatrix() = default;
    explicit RMatrix(int k) : k_(k) {}

    static RMatrix unit(int k, int i, int j) {
        RMatrix m(k);
        m.set(i, j, Rational(1));
        return m;
    }
    static RMatrix identity(int k) {
        RMatrix m(k);
        for (int i = 0; i < k; ++i)
            m.set(i, i, Rational(1));
        return m;
    }

    int k() const { return k_; }
    bool is_zero() const { return e_.empty(); }
    const std::map<std::pair<int, int>, Rational>& entries() const { return e_; }

    Rational at(int i, int j) const {
        auto it = e_.find({i, j});
        return it == e_.end() ? Rational() : it->second;
    }

    void set(int i, int j, const Rational& v) {
        if (v.is_zero())
            e_.erase({i, j});
        else
            e_[{i, j}] = v;
    }

    void add(int i, int j, const Rational& v) {
        if (v.is_zero())
            return;
        auto it = e_.find({i, j});
        if (it == e_.end()) {
            e_.emplace(std::make_pair(i, j), v);
        } else {
            it->second += v;
            if (it->second.is_zero())
                e_.erase(it);
        }
    }

    RMatrix& operator+=(const RMatrix& o) {
        for (const auto& [ij, v] : o.e_)
            add(ij.first, ij.second, v);
        return *this;
    }

    RMatrix& operator*=(const Rational& s) {
        if (s.is_zero()) {
            e_.clear();
            return *this;
        }
        for (auto& [ij, v] : e_)
            v *= s;
        return *this;
    }

    friend RMatrix operator*(const RMatrix& a, const RMatrix& b) {
        RMatrix out(a.k_);
        for (const auto& [ij, v] : a.e_)
            for (const auto& [pq, w] : b.e_)
                if (ij.second == pq.first)
                    out.add(ij.first, pq.second, v * w);
        return out;
    }

    friend bool operator==(const RMatrix& a, const RMatrix& b) { return a.e_ == b.e_; }
    friend bool operator<(const RMatrix& a, const RMatrix& b) {
        if (a.k_ != b.k_)
            return a.k_ < b.k_;
        auto ai = a.e_.begin(), bi = b.e_.begin();
        for (; ai != a.e_.end() && bi != b.e_.end(); ++ai, ++bi) {
            if (ai->first != bi->first)
                return ai->first < bi->first;
            if (ai->second != bi->second)
                return ai->second < bi->second;
        }
        return a.e_.size() < b.e_.size();
    }

    RMatrix transpose() const {
        RMatrix out(k_);
        for (const auto& [ij, v] : e_)
            out.set(ij.second, ij.first, v);
        return out;
    }

    /// J u^T J^{-1} with J the standard symplectic form; requires even k.
    RMatrix symplectic_twist() const;

    Rational trace() const {
        Rational t;
        for (const auto& [ij, v] : e_)
            if (ij.first == ij.second)
                t += v;
        return t;
    }

    std::string str() const;
    /// Row-major "p/q" strings.
    std::vector<std::string> row_major() const;

  private:
    int k_ = 0;
    std::map<std::pair<int, int>, Rational> e_;
};

RMatrix commutator(const RMatrix& a, const RMatrix& b);
RMatrix anticommutator(const RMatrix& a, const RMatrix& b);

}  // namespace confjord
