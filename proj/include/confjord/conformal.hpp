#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "confjord/linalg.hpp"
#include "confjord/rational.hpp"
#include "confjord/series.hpp"

namespace confjord {

using BasisId = std::uint64_t;

/// Element of an F[d]-module over an indexed basis: finite sum of
/// coefficient * d^i (basis vector). No zero coefficients are stored and
/// d-powers are nonnegative, so equality is map comparison.
class ConformalElement {
  public:
    using TermKey = std::pair<long, BasisId>;  // (d-power, basis)

    ConformalElement() = default;

    static ConformalElement basis(BasisId b) { return with_power(0, b); }
    static ConformalElement with_power(long i, BasisId b) {
        ConformalElement e;
        e.add(i, b, Rational(1));
        return e;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<TermKey, Rational>& terms() const { return terms_; }

    void add(long power, BasisId b, const Rational& c) {
        if (c.is_zero())
            return;
        if (power < 0)
            throw KernelError("negative d-power in element");
        TermKey k{power, b};
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    ConformalElement& operator+=(const ConformalElement& o) {
        for (const auto& [k, c] : o.terms_)
            add(k.first, k.second, c);
        return *this;
    }

    ConformalElement& operator*=(const Rational& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_)
            c *= s;
        return *this;
    }

    friend ConformalElement operator+(ConformalElement a, const ConformalElement& b) {
        return a += b;
    }
    friend ConformalElement operator*(const Rational& s, ConformalElement a) { return a *= s; }
    friend bool operator==(const ConformalElement& a, const ConformalElement& b) {
        return a.terms_ == b.terms_;
    }

    /// Formal d-shift: raises every d-power by dp. Only meaningful for free
    /// F[d]-module presentations.
    ConformalElement shifted(long dp) const {
        ConformalElement out;
        for (const auto& [k, c] : terms_)
            out.add(k.first + dp, k.second, c);
        return out;
    }

    long max_power() const {
        long m = 0;
        for (const auto& [k, c] : terms_)
            m = std::max(m, k.first);
        return m;
    }

  private:
    std::map<TermKey, Rational> terms_;
};

using ElementSeries = ZSeries<ConformalElement>;

/// Interns (d-power, basis) pairs as columns for exact span arithmetic.
class Coordinatizer {
  public:
    long column(long power, BasisId b) {
        auto [it, inserted] = cols_.try_emplace({power, b}, next_);
        if (inserted)
            ++next_;
        return it->second;
    }
    SparseVec vec(const ConformalElement& e) {
        std::map<long, Rational> by_col;
        for (const auto& [k, c] : e.terms())
            by_col[column(k.first, k.second)] = c;
        return SparseVec(by_col.begin(), by_col.end());
    }

  private:
    std::map<std::pair<long, BasisId>, long> cols_;
    long next_ = 0;
};

/// A conformal algebra presented through a component structure map on an
/// indexed module basis. Two module flavors exist:
///
///  - free_module() == true: the basis spans the generating space V and the
///    module is F[d]-free over it; d acts as the formal shift and products of
///    d-shifted elements are evaluated through the unique extension
///      Y(d^m u, z) d^n v = sum_j (-1)^j C(n,j) (d/dz)^{m+j} d^{n-j} Y(u,z)v.
///
///  - free_module() == false: d maps basis vectors to combinations of basis
///    vectors (partial_of_basis), the canonical form of an element carries no
///    d-powers, and products are evaluated directly from the component map.
class ConformalAlgebra {
  public:
    virtual ~ConformalAlgebra() = default;

    virtual std::string label() const = 0;
    virtual std::string basis_name(BasisId b) const = 0;
    virtual std::optional<long> basis_weight(BasisId) const { return std::nullopt; }

    /// u_n(v) for basis u, v; zero for n >= locality(u, v).
    virtual ConformalElement component(BasisId u, BasisId v, long n) const = 0;
    virtual long locality(BasisId u, BasisId v) const = 0;

    virtual bool free_module() const { return true; }
    virtual ConformalElement partial_of_basis(BasisId b) const {
        return ConformalElement::with_power(1, b);
    }

    /// Basis of the declared generating space V with R = F[d]V.
    virtual std::vector<BasisId> generators() const = 0;

    bool has_weights() const;

    // --- derived machinery -------------------------------------------------

    /// Module d, extended linearly; respects the module flavor.
    ConformalElement partial(const ConformalElement& e) const;
    ConformalElement partial_pow(const ConformalElement& e, long n) const;

    /// Canonical form: expands d-powers through partial_of_basis when the
    /// module is not free. Identity for free modules.
    ConformalElement canonical(const ConformalElement& e) const;
    ElementSeries canonical_series(const ElementSeries& s) const;

    /// sum_n u_n(v) z^{-n-1} from the raw component map.
    ElementSeries raw_series(BasisId u, BasisId v) const;

    /// Y(a, z) b through the formal extension above, treating d-powers in the
    /// element representation as formal symbols over their basis vectors.
    ElementSeries eval_formal(const ConformalElement& a, const ConformalElement& b) const;

    /// Y(a, z) b through the canonical path of the module flavor.
    ElementSeries eval(const ConformalElement& a, const ConformalElement& b) const;

    /// Y(a, z) b computed from the flipped product by the skew transport:
    /// negative part of exp(x d) Y(b, -x) a, retagged to z. Exact: the
    /// exponential is cut at the flipped locality bound.
    ElementSeries eval_transport(const ConformalElement& a, const ConformalElement& b) const;

    /// Component a_n(b) through eval.
    ConformalElement component_of(const ConformalElement& a, const ConformalElement& b,
                                  long n) const;

    /// Weight of an element, when homogeneous and the algebra is weighted.
    std::optional<long> element_weight(const ConformalElement& e) const;

    std::string element_str(const ConformalElement& e) const;
    std::string series_str(const ElementSeries& s) const;
};

/// Finite-basis conformal algebra stored as explicit tables. Always a free
/// F[d]-module over its basis.
class TableAlgebra final : public ConformalAlgebra {
  public:
    TableAlgebra(std::string label) : label_(std::move(label)) {}

    BasisId add_generator(const std::string& name, std::optional<long> weight = std::nullopt);
    /// Sets u_n(v) = value (overwrites).
    void set_component(BasisId u, BasisId v, long n, ConformalElement value);

    std::string label() const override { return label_; }
    std::string basis_name(BasisId b) const override;
    std::optional<long> basis_weight(BasisId b) const override;
    ConformalElement component(BasisId u, BasisId v, long n) const override;
    long locality(BasisId u, BasisId v) const override;
    std::vector<BasisId> generators() const override;

    std::optional<BasisId> find(const std::string& name) const;
    std::size_t size() const { return names_.size(); }

  private:
    std::string label_;
    std::vector<std::string> names_;
    std::vector<std::optional<long>> weights_;
    std::map<std::tuple<BasisId, BasisId, long>, ConformalElement> table_;
};

/// Rank-one algebra with a single weight-2 generator e, e_0(e) = de,
/// e_1(e) = 2e. Its coefficient algebra is the rank-one Witt algebra.
std::shared_ptr<TableAlgebra> make_witt();

/// Current-algebra construction over a Lie algebra given by structure
/// constants: u_0(v) = [u, v], all higher components zero, weights 1.
/// The input table is validated (antisymmetry and the Jacobi identity) and
/// rejected with the violating triple otherwise.
struct LieStructure {
    std::vector<std::string> names;
    // brackets[{i,j}] = sum_k coeff * basis_k; missing means zero.
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::pair<std::size_t, Rational>>>
        brackets;
};
std::shared_ptr<TableAlgebra> from_lie_algebra(const std::string& label, const LieStructure& ls);

std::shared_ptr<TableAlgebra> make_sl2_current();

/// Deliberately corrupted structure maps for validating the checkers.
std::shared_ptr<TableAlgebra> make_witt_skew_mutant();     // e_1(e) = 3e
std::shared_ptr<TableAlgebra> make_sl2_jacobi_mutant();    // [e,f] corrupted to e

}  // namespace confjord
