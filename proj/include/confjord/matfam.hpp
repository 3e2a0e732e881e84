#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "confjord/conformal.hpp"
#include "confjord/matrix.hpp"
#include "confjord/report.hpp"
#include "confjord/series.hpp"

namespace confjord {

/// Element of the matrix conformal algebra: sparse map from bidegrees
/// (m1, m2) to k x k rational matrices. All terms share k; no zero matrices
/// are stored.
class MatElement {
  public:
    using Bidegree = std::pair<long, long>;

    MatElement() = default;
    explicit MatElement(int k) : k_(k) {}

    static MatElement unit(int k, int i, int j, long m1, long m2) {
        MatElement e(k);
        e.add(m1, m2, RMatrix::unit(k, i, j));
        return e;
    }
    static MatElement single(long m1, long m2, RMatrix m) {
        MatElement e(m.k());
        e.add(m1, m2, std::move(m));
        return e;
    }

    int k() const { return k_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Bidegree, RMatrix>& terms() const { return terms_; }

    void add(long m1, long m2, const RMatrix& m) {
        if (m.is_zero())
            return;
        if (m1 < 0 || m2 < 0)
            throw KernelError("negative bidegree");
        if (k_ == 0)
            k_ = m.k();
        if (m.k() != k_)
            throw InputError("matrix size mismatch");
        Bidegree d{m1, m2};
        auto it = terms_.find(d);
        if (it == terms_.end()) {
            terms_.emplace(d, m);
        } else {
            it->second += m;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    RMatrix at(long m1, long m2) const {
        auto it = terms_.find({m1, m2});
        return it == terms_.end() ? RMatrix(k_) : it->second;
    }

    MatElement& operator+=(const MatElement& o) {
        for (const auto& [d, m] : o.terms_)
            add(d.first, d.second, m);
        return *this;
    }
    MatElement& operator*=(const Rational& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [d, m] : terms_)
            m *= s;
        return *this;
    }
    friend MatElement operator+(MatElement a, const MatElement& b) { return a += b; }
    friend bool operator==(const MatElement& a, const MatElement& b) {
        return a.terms_ == b.terms_;
    }

    /// Weight when all bidegrees agree on m1 + m2 + 1.
    std::optional<long> homogeneous_weight() const;
    long top_weight() const;

    std::string str() const;
    Json to_json() const;

  private:
    int k_ = 0;
    std::map<Bidegree, RMatrix> terms_;
};

inline long bidegree_weight(long m1, long m2) {
    return m1 + m2 + 1;
}

/// The module derivation: u(m,n) -> (m+1)u(m+1,n) + (n+1)u(m,n+1).
MatElement partial_action(const MatElement& e);

/// The two-sum structure map on bidegree generators, extended bilinearly.
/// Supported on strictly negative exponents.
ZSeries<MatElement> yplus_matrix(const MatElement& a, const MatElement& b);

/// Component u(j) of a homogeneous element of weight l applied to x: the
/// coefficient of z^{-j-l}. Zero operator below the lower summation bound.
MatElement component_by_weight(const MatElement& a, long j, const MatElement& x);

enum class FamilyName { Full, Star, Dagger };

/// Subalgebra family label. L >= 1 is the minimal weight; the internal shift
/// s = L - 1. Dagger requires an even matrix size.
struct FamilyKind {
    FamilyName kind;
    int k;
    int L;

    FamilyKind(FamilyName kind_, int k_, int L_);
    long shift() const { return L - 1; }
    /// Transpose or the symplectic twist, per the family.
    RMatrix involution(const RMatrix& m) const;
    std::string name() const;
    Json to_json() const;
};

/// Spanning element C(n+s,s) u(m, n+s) - (-1)^s C(m+s,s) iota(u)(n, m+s) of
/// the involution families (iota = transpose or the symplectic twist).
MatElement family_span_element(const FamilyKind& f, const RMatrix& u, long m, long n);

/// Linearly independent basis of the weight-w slice of the family.
std::vector<MatElement> family_basis_weight(const FamilyKind& f, long w);
/// All weights L..w_max, concatenated.
std::vector<MatElement> family_basis(const FamilyKind& f, long w_max);

/// Exact span membership, decided per involution orbit of bidegrees.
bool membership(const MatElement& e, const FamilyKind& f);

/// Basis of the minimal-weight slice (weight L).
std::vector<MatElement> minimal_weight_basis(const FamilyKind& f);

/// u o v = u(0) v on the minimal-weight slice: the coefficient of z^{-L}.
/// Both inputs and the output are checked to lie in the minimal-weight span.
MatElement circle_product(const MatElement& a, const MatElement& b, const FamilyKind& f);

/// Unique rewriting of an element as sum_i d^i v_i with v_i supported on
/// bidegrees (0, n); round-trips exactly through the derivation.
std::map<long, MatElement> canonicalize_over_V(const MatElement& e);

/// The matrix conformal algebra presented through the generic kernel
/// interface. Basis ids encode (m1, m2, i, j); the module is not free (the
/// derivation maps bidegree generators to bidegree combinations) and the
/// declared generating space is the (0, n) slice up to a weight cutoff.
class MatrixAlgebra final : public ConformalAlgebra {
  public:
    MatrixAlgebra(int k, long generator_weight_cutoff);

    static constexpr long kStride = 1 << 10;

    BasisId encode(long m1, long m2, int i, int j) const;
    void decode(BasisId b, long& m1, long& m2, int& i, int& j) const;

    ConformalElement from_mat(const MatElement& e) const;
    MatElement to_mat(const ConformalElement& e) const;

    std::string label() const override;
    std::string basis_name(BasisId b) const override;
    std::optional<long> basis_weight(BasisId b) const override;
    ConformalElement component(BasisId u, BasisId v, long n) const override;
    long locality(BasisId u, BasisId v) const override;
    bool free_module() const override { return false; }
    ConformalElement partial_of_basis(BasisId b) const override;
    std::vector<BasisId> generators() const override;

    int k() const { return k_; }
    /// Basis ids of all bidegree generators with entries <= bound.
    std::vector<BasisId> basis_up_to_bidegree(long bound) const;

  private:
    int k_;
    long gen_cutoff_;
};

}  // namespace confjord
