#include "confjord/conformal.hpp"

#include <sstream>

namespace confjord {

bool ConformalAlgebra::has_weights() const {
    for (BasisId b : generators())
        if (!basis_weight(b))
            return false;
    return !generators().empty();
}

ConformalElement ConformalAlgebra::partial(const ConformalElement& e) const {
    ConformalElement out;
    if (free_module())
        return e.shifted(1);
    for (const auto& [k, c] : e.terms()) {
        // d(d^i b) = d^{i+1} b before expansion; canonical elements have i = 0.
        ConformalElement db = partial_of_basis(k.second);
        for (const auto& [dk, dc] : db.terms())
            out.add(dk.first + k.first, dk.second, dc * c);
    }
    return out;
}

ConformalElement ConformalAlgebra::partial_pow(const ConformalElement& e, long n) const {
    ConformalElement out = e;
    for (long i = 0; i < n; ++i)
        out = partial(out);
    return out;
}

ConformalElement ConformalAlgebra::canonical(const ConformalElement& e) const {
    if (free_module())
        return e;
    ConformalElement out;
    for (const auto& [k, c] : e.terms()) {
        if (k.first == 0) {
            out.add(0, k.second, c);
            continue;
        }
        ConformalElement x = ConformalElement::basis(k.second);
        x = partial_pow(x, k.first);
        x *= c;
        out += x;
    }
    return out;
}

ElementSeries ConformalAlgebra::canonical_series(const ElementSeries& s) const {
    if (free_module())
        return s;
    ElementSeries out(s.variable());
    for (const auto& [e, v] : s.coeffs())
        out.add(e, canonical(v));
    return out;
}

ElementSeries ConformalAlgebra::raw_series(BasisId u, BasisId v) const {
    ElementSeries out;
    long bound = locality(u, v);
    for (long n = 0; n < bound; ++n)
        out.add(-n - 1, component(u, v, n));
    return out;
}

ElementSeries ConformalAlgebra::eval_formal(const ConformalElement& a,
                                            const ConformalElement& b) const {
    ElementSeries out;
    for (const auto& [ka, ca] : a.terms()) {
        const auto [m, u] = ka;
        for (const auto& [kb, cb] : b.terms()) {
            const auto [n, v] = kb;
            ElementSeries base = raw_series(u, v);
            Rational scale = ca * cb;
            for (long j = 0; j <= n; ++j) {
                // (-1)^j C(n,j) (d/dz)^{m+j} applied to d^{n-j}-shifted coefficients
                ElementSeries term;
                for (const auto& [e, coeff] : base.coeffs())
                    term.add(e, partial_pow(coeff, n - j));
                term = derivative(term, m + j);
                Rational f = scale * binom(n, j);
                if (j % 2 != 0)
                    f *= Rational(-1);
                term *= f;
                out += term;
            }
        }
    }
    return out;
}

ElementSeries ConformalAlgebra::eval(const ConformalElement& a, const ConformalElement& b) const {
    if (free_module())
        return eval_formal(a, b);
    ConformalElement ca = canonical(a);
    ConformalElement cb = canonical(b);
    ElementSeries out;
    for (const auto& [ka, va] : ca.terms())
        for (const auto& [kb, vb] : cb.terms()) {
            ElementSeries base = raw_series(ka.second, kb.second);
            base *= va * vb;
            out += base;
        }
    return out;
}

ElementSeries ConformalAlgebra::eval_transport(const ConformalElement& a,
                                               const ConformalElement& b) const {
    ElementSeries flipped = eval(b, a);  // series in w
    if (flipped.is_zero())
        return ElementSeries();
    // Substitute w -> -x, multiply by the exponential cut at the flipped
    // support depth (terms with nonnegative x-exponent die below), keep the
    // negative part and retag x -> z.
    ElementSeries in_x = negate_variable(flipped, "x");
    long cut = -in_x.min_exponent();  // = max component index + 1
    ElementSeries acc("x");
    for (long i = 0; i <= cut; ++i) {
        Rational inv_fact = Rational(1) / factorial(i);
        for (const auto& [e, coeff] : in_x.coeffs()) {
            if (e + i >= 0)
                continue;
            ConformalElement t = partial_pow(coeff, i);
            t *= inv_fact;
            acc.add(e + i, t);
        }
    }
    ElementSeries out = negative_part(acc, "z");
    return canonical_series(out);
}

ConformalElement ConformalAlgebra::component_of(const ConformalElement& a,
                                                const ConformalElement& b, long n) const {
    return eval(a, b).at(-n - 1);
}

std::optional<long> ConformalAlgebra::element_weight(const ConformalElement& e) const {
    std::optional<long> w;
    for (const auto& [k, c] : e.terms()) {
        auto bw = basis_weight(k.second);
        if (!bw)
            return std::nullopt;
        long tw = *bw + k.first;
        if (w && *w != tw)
            return std::nullopt;  // not homogeneous
        w = tw;
    }
    return w;
}

std::string ConformalAlgebra::element_str(const ConformalElement& e) const {
    if (e.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : e.terms()) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (k.first > 0)
            os << "d^" << k.first << " ";
        os << basis_name(k.second);
    }
    return os.str();
}

std::string ConformalAlgebra::series_str(const ElementSeries& s) const {
    if (s.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, v] : s.coeffs()) {
        if (!first)
            os << "  +  ";
        first = false;
        os << "[" << element_str(v) << "] z^" << e;
    }
    return os.str();
}

// --- TableAlgebra -----------------------------------------------------------

BasisId TableAlgebra::add_generator(const std::string& name, std::optional<long> weight) {
    names_.push_back(name);
    weights_.push_back(weight);
    return names_.size() - 1;
}

void TableAlgebra::set_component(BasisId u, BasisId v, long n, ConformalElement value) {
    if (n < 0)
        throw InputError("component index must be nonnegative");
    table_[{u, v, n}] = std::move(value);
}

std::string TableAlgebra::basis_name(BasisId b) const {
    return names_.at(b);
}

std::optional<long> TableAlgebra::basis_weight(BasisId b) const {
    return weights_.at(b);
}

ConformalElement TableAlgebra::component(BasisId u, BasisId v, long n) const {
    auto it = table_.find({u, v, n});
    return it == table_.end() ? ConformalElement() : it->second;
}

long TableAlgebra::locality(BasisId u, BasisId v) const {
    long bound = 0;
    for (const auto& [key, val] : table_) {
        if (std::get<0>(key) == u && std::get<1>(key) == v && !val.is_zero())
            bound = std::max(bound, std::get<2>(key) + 1);
    }
    return bound;
}

std::vector<BasisId> TableAlgebra::generators() const {
    std::vector<BasisId> out(names_.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = i;
    return out;
}

std::optional<BasisId> TableAlgebra::find(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name)
            return i;
    return std::nullopt;
}

// --- built-ins ---------------------------------------------------------------

std::shared_ptr<TableAlgebra> make_witt() {
    auto alg = std::make_shared<TableAlgebra>("witt");
    BasisId e = alg->add_generator("e", 2);
    alg->set_component(e, e, 0, ConformalElement::with_power(1, e));
    ConformalElement two_e;
    two_e.add(0, e, Rational(2));
    alg->set_component(e, e, 1, two_e);
    return alg;
}

std::shared_ptr<TableAlgebra> make_witt_skew_mutant() {
    auto alg = std::make_shared<TableAlgebra>("witt-skew-mutant");
    BasisId e = alg->add_generator("e", 2);
    alg->set_component(e, e, 0, ConformalElement::with_power(1, e));
    ConformalElement three_e;
    three_e.add(0, e, Rational(3));
    alg->set_component(e, e, 1, three_e);
    return alg;
}

namespace {

ConformalElement combo_to_element(const std::vector<std::pair<std::size_t, Rational>>& combo) {
    ConformalElement out;
    for (const auto& [idx, c] : combo)
        out.add(0, idx, c);
    return out;
}

std::vector<Rational> combo_to_dense(
    const std::vector<std::pair<std::size_t, Rational>>& combo, std::size_t dim) {
    std::vector<Rational> v(dim);
    for (const auto& [idx, c] : combo)
        v[idx] += c;
    return v;
}

std::vector<std::pair<std::size_t, Rational>> lookup(const LieStructure& ls, std::size_t i,
                                                     std::size_t j) {
    auto it = ls.brackets.find({i, j});
    if (it != ls.brackets.end())
        return it->second;
    return {};
}

std::vector<Rational> bracket_dense(const LieStructure& ls, std::size_t i, std::size_t j) {
    return combo_to_dense(lookup(ls, i, j), ls.names.size());
}

std::vector<Rational> bracket_dense(const LieStructure& ls, const std::vector<Rational>& x,
                                    std::size_t j) {
    std::vector<Rational> out(ls.names.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero())
            continue;
        auto b = bracket_dense(ls, i, j);
        for (std::size_t t = 0; t < out.size(); ++t)
            out[t] += x[i] * b[t];
    }
    return out;
}

bool dense_zero(const std::vector<Rational>& v) {
    for (const auto& c : v)
        if (!c.is_zero())
            return false;
    return true;
}

}  // namespace

std::shared_ptr<TableAlgebra> from_lie_algebra(const std::string& label, const LieStructure& ls) {
    const std::size_t n = ls.names.size();
    // Antisymmetry.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto lhs = bracket_dense(ls, i, j);
            auto rhs = bracket_dense(ls, j, i);
            for (std::size_t t = 0; t < n; ++t)
                lhs[t] += rhs[t];
            if (!dense_zero(lhs))
                throw InputError("structure constants not antisymmetric at (" + ls.names[i] +
                                 "," + ls.names[j] + ")");
        }
    // Jacobi: [[i,j],k] + [[j,k],i] + [[k,i],j] = 0.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                auto s = bracket_dense(ls, bracket_dense(ls, i, j), k);
                auto t1 = bracket_dense(ls, bracket_dense(ls, j, k), i);
                auto t2 = bracket_dense(ls, bracket_dense(ls, k, i), j);
                for (std::size_t t = 0; t < n; ++t)
                    s[t] += t1[t] + t2[t];
                if (!dense_zero(s))
                    throw InputError("Jacobi identity fails at (" + ls.names[i] + "," +
                                     ls.names[j] + "," + ls.names[k] + ")");
            }

    auto alg = std::make_shared<TableAlgebra>(label);
    for (const auto& name : ls.names)
        alg->add_generator(name, 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto combo = lookup(ls, i, j);
            if (!combo.empty())
                alg->set_component(i, j, 0, combo_to_element(combo));
        }
    return alg;
}

namespace {

LieStructure sl2_structure() {
    LieStructure ls;
    ls.names = {"e", "f", "h"};
    auto set = [&ls](std::size_t i, std::size_t j, std::size_t k, long c) {
        ls.brackets[{i, j}] = {{k, Rational(c)}};
        ls.brackets[{j, i}] = {{k, Rational(-c)}};
    };
    set(0, 1, 2, 1);   // [e,f] = h
    set(2, 0, 0, 2);   // [h,e] = 2e
    set(2, 1, 1, -2);  // [h,f] = -2f
    return ls;
}

}  // namespace

std::shared_ptr<TableAlgebra> make_sl2_current() {
    return from_lie_algebra("sl2", sl2_structure());
}

std::shared_ptr<TableAlgebra> make_sl2_jacobi_mutant() {
    // Antisymmetric but non-Lie: [e,f] replaced by e. Built directly, since
    // from_lie_algebra would reject it.
    auto alg = std::make_shared<TableAlgebra>("sl2-jacobi-mutant");
    BasisId e = alg->add_generator("e", 1);
    BasisId f = alg->add_generator("f", 1);
    BasisId h = alg->add_generator("h", 1);
    auto one = [](BasisId b, long c) {
        ConformalElement x;
        x.add(0, b, Rational(c));
        return x;
    };
    alg->set_component(e, f, 0, one(e, 1));
    alg->set_component(f, e, 0, one(e, -1));
    alg->set_component(h, e, 0, one(e, 2));
    alg->set_component(e, h, 0, one(e, -2));
    alg->set_component(h, f, 0, one(f, -2));
    alg->set_component(f, h, 0, one(f, 2));
    return alg;
}

}  // namespace confjord
