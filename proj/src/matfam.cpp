#include "confjord/matfam.hpp"

#include <sstream>

#include "confjord/linalg.hpp"

namespace confjord {

std::optional<long> MatElement::homogeneous_weight() const {
    std::optional<long> w;
    for (const auto& [d, m] : terms_) {
        long tw = bidegree_weight(d.first, d.second);
        if (w && *w != tw)
            return std::nullopt;
        w = tw;
    }
    return w;
}

long MatElement::top_weight() const {
    long w = 0;
    for (const auto& [d, m] : terms_)
        w = std::max(w, bidegree_weight(d.first, d.second));
    return w;
}

std::string MatElement::str() const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, m] : terms_) {
        for (const auto& [ij, v] : m.entries()) {
            if (!first)
                os << " + ";
            first = false;
            os << "(" << v.str() << ")E" << ij.first + 1 << ij.second + 1 << "(" << d.first
               << "," << d.second << ")";
        }
    }
    return os.str();
}

Json MatElement::to_json() const {
    Json j;
    j["k"] = k_;
    Json terms = Json::array();
    for (const auto& [d, m] : terms_) {
        Json t;
        t["m1"] = d.first;
        t["m2"] = d.second;
        t["matrix"] = m.row_major();
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

MatElement partial_action(const MatElement& e) {
    MatElement out(e.k());
    for (const auto& [d, m] : e.terms()) {
        RMatrix a = m;
        a *= Rational(d.first + 1);
        out.add(d.first + 1, d.second, a);
        RMatrix b = m;
        b *= Rational(d.second + 1);
        out.add(d.first, d.second + 1, b);
    }
    return out;
}

ZSeries<MatElement> yplus_matrix(const MatElement& a, const MatElement& b) {
    if (a.k() != b.k() && !a.is_zero() && !b.is_zero())
        throw InputError("matrix size mismatch in product");
    ZSeries<MatElement> out;
    for (const auto& [da, ma] : a.terms()) {
        const auto [m1, m2] = da;
        for (const auto& [db, mb] : b.terms()) {
            const auto [n1, n2] = db;
            RMatrix uv = ma * mb;
            RMatrix vu = mb * ma;
            Rational c1 = binom(-n1 - 1, m2);
            if (!c1.is_zero() && !uv.is_zero()) {
                for (long p = 0; p <= m1 + m2 + n1; ++p) {
                    Rational c = c1 * binom(p, m1);
                    if (c.is_zero())
                        continue;
                    RMatrix t = uv;
                    t *= c;
                    out.add(p - m1 - m2 - n1 - 1, MatElement::single(p, n2, t));
                }
            }
            Rational c2 = binom(-n2 - 1, m1);
            if (!c2.is_zero() && !vu.is_zero()) {
                for (long q = 0; q <= m1 + m2 + n2; ++q) {
                    Rational c = c2 * binom(q, m2);
                    if (c.is_zero())
                        continue;
                    RMatrix t = vu;
                    t *= Rational(-1) * c;
                    out.add(q - m1 - m2 - n2 - 1, MatElement::single(n1, q, t));
                }
            }
        }
    }
    return out;
}

MatElement component_by_weight(const MatElement& a, long j, const MatElement& x) {
    auto w = a.homogeneous_weight();
    if (!w)
        throw InputError("component_by_weight needs a homogeneous element");
    if (j < 1 - *w)
        return MatElement(a.k());
    return yplus_matrix(a, x).at(-j - *w);
}

FamilyKind::FamilyKind(FamilyName kind_, int k_, int L_) : kind(kind_), k(k_), L(L_) {
    if (k < 1)
        throw InputError("matrix size must be positive");
    if (L < 1)
        throw InputError("family label must be >= 1");
    if (kind == FamilyName::Dagger && k % 2 != 0)
        throw InputError("dagger family requires an even matrix size");
}

RMatrix FamilyKind::involution(const RMatrix& m) const {
    switch (kind) {
        case FamilyName::Star:
            return m.transpose();
        case FamilyName::Dagger:
            return m.symplectic_twist();
        default:
            throw KernelError("full family has no involution");
    }
}

std::string FamilyKind::name() const {
    switch (kind) {
        case FamilyName::Full:
            return "full";
        case FamilyName::Star:
            return "star";
        default:
            return "dagger";
    }
}

Json FamilyKind::to_json() const {
    return Json{{"kind", name()}, {"L", L}, {"k", k}};
}

MatElement family_span_element(const FamilyKind& f, const RMatrix& u, long m, long n) {
    if (f.kind == FamilyName::Full)
        throw KernelError("span elements are for the involution families");
    const long s = f.shift();
    MatElement e(f.k);
    RMatrix first = u;
    first *= binom(n + s, s);
    e.add(m, n + s, first);
    RMatrix second = f.involution(u);
    Rational c = binom(m + s, s);
    if (s % 2 == 0)
        c *= Rational(-1);
    second *= c;
    e.add(n, m + s, second);
    return e;
}

std::vector<MatElement> family_basis_weight(const FamilyKind& f, long w) {
    std::vector<MatElement> out;
    if (w < f.L)
        return out;
    const long s = f.shift();
    if (f.kind == FamilyName::Full) {
        for (long m = 0; m + s <= w - 1; ++m) {
            long n2 = w - 1 - m;  // second index, >= s
            for (int i = 0; i < f.k; ++i)
                for (int j = 0; j < f.k; ++j)
                    out.push_back(MatElement::unit(f.k, i, j, m, n2));
        }
        return out;
    }
    SpanBasis span;
    auto coords = [&f](const MatElement& e) {
        SparseVec v;
        for (const auto& [d, m] : e.terms())
            for (const auto& [ij, val] : m.entries())
                v.emplace_back(((d.first * MatrixAlgebra::kStride + d.second) * f.k +
                                ij.first) * f.k + ij.second,
                               val);
        return v;
    };
    for (long m = 0; m + s <= w - 1; ++m) {
        long n = w - 1 - s - m;
        for (int i = 0; i < f.k; ++i)
            for (int j = 0; j < f.k; ++j) {
                MatElement e = family_span_element(f, RMatrix::unit(f.k, i, j), m, n);
                if (e.is_zero())
                    continue;
                if (span.insert(coords(e)))
                    out.push_back(e);
            }
    }
    return out;
}

std::vector<MatElement> family_basis(const FamilyKind& f, long w_max) {
    std::vector<MatElement> out;
    for (long w = f.L; w <= w_max; ++w) {
        auto slice = family_basis_weight(f, w);
        out.insert(out.end(), slice.begin(), slice.end());
    }
    return out;
}

namespace {

/// Orbit of a bidegree under the involution pairing (m, c) <-> (c - s, m + s).
std::pair<MatElement::Bidegree, MatElement::Bidegree> orbit_of(const FamilyKind& f,
                                                               MatElement::Bidegree d) {
    const long s = f.shift();
    MatElement::Bidegree partner{d.second - s, d.first + s};
    return {std::min(d, partner), std::max(d, partner)};
}

}  // namespace

bool membership(const MatElement& e, const FamilyKind& f) {
    if (e.is_zero())
        return true;
    if (e.k() != f.k)
        return false;
    const long s = f.shift();
    if (f.kind == FamilyName::Full) {
        for (const auto& [d, m] : e.terms())
            if (d.second < s)
                return false;
        return true;
    }
    // Decompose into involution orbits; solve a small exact span problem in
    // each. Any bidegree with second index < s is untouchable by the family.
    std::map<std::pair<MatElement::Bidegree, MatElement::Bidegree>, MatElement> by_orbit;
    for (const auto& [d, m] : e.terms()) {
        if (d.second < s)
            return false;
        by_orbit[orbit_of(f, d)].add(d.first, d.second, m);
    }
    for (const auto& [orbit, part] : by_orbit) {
        // Generators supported on this orbit: B_{m,n}(u) with (m, n+s) = first.
        const auto [m, c] = orbit.first;
        long n = c - s;
        SpanBasis span;
        auto coords = [&f](const MatElement& x) {
            SparseVec v;
            for (const auto& [d, mm] : x.terms())
                for (const auto& [ij, val] : mm.entries())
                    v.emplace_back(((d.first * MatrixAlgebra::kStride + d.second) * f.k +
                                    ij.first) * f.k + ij.second,
                                   val);
            return v;
        };
        for (int i = 0; i < f.k; ++i)
            for (int j = 0; j < f.k; ++j) {
                MatElement g = family_span_element(f, RMatrix::unit(f.k, i, j), m, n);
                if (!g.is_zero())
                    span.insert(coords(g));
            }
        if (!span.contains(coords(part)))
            return false;
    }
    return true;
}

std::vector<MatElement> minimal_weight_basis(const FamilyKind& f) {
    return family_basis_weight(f, f.L);
}

namespace {

bool in_minimal_span(const MatElement& e, const FamilyKind& f) {
    if (e.is_zero())
        return true;
    const long s = f.shift();
    for (const auto& [d, m] : e.terms())
        if (d != MatElement::Bidegree{0, s})
            return false;
    if (f.kind == FamilyName::Full)
        return true;
    // The minimal slice is the (-1)^{s+1}-eigenspace of the involution.
    RMatrix m = e.at(0, s);
    RMatrix refl = f.involution(m);
    if (s % 2 == 0)
        refl *= Rational(-1);
    return refl == m;
}

}  // namespace

MatElement circle_product(const MatElement& a, const MatElement& b, const FamilyKind& f) {
    if (!in_minimal_span(a, f) || !in_minimal_span(b, f))
        throw InputError("circle product arguments must lie in the minimal-weight space");
    MatElement out = yplus_matrix(a, b).at(-f.L);
    if (!in_minimal_span(out, f))
        throw KernelError("circle product escaped the minimal-weight space");
    return out;
}

std::map<long, MatElement> canonicalize_over_V(const MatElement& e) {
    std::map<long, MatElement> parts;
    MatElement rest = e;
    while (!rest.is_zero()) {
        long top = 0;
        for (const auto& [d, m] : rest.terms())
            top = std::max(top, d.first);
        // The (top, n) layer comes only from d^top applied to (0, n) pieces,
        // with coefficient top!.
        MatElement v(rest.k());
        Rational inv = Rational(1) / factorial(top);
        for (const auto& [d, m] : rest.terms()) {
            if (d.first != top)
                continue;
            RMatrix t = m;
            t *= inv;
            v.add(0, d.second, t);
        }
        MatElement expanded = v;
        for (long i = 0; i < top; ++i)
            expanded = partial_action(expanded);
        expanded *= Rational(-1);
        rest += expanded;
        parts[top] = v;
        if (!rest.is_zero()) {
            long new_top = 0;
            for (const auto& [d, m] : rest.terms())
                new_top = std::max(new_top, d.first);
            if (new_top >= top)
                throw KernelError("triangular inversion failed to make progress");
        }
    }
    return parts;
}

// --- kernel adapter -----------------------------------------------------------

MatrixAlgebra::MatrixAlgebra(int k, long generator_weight_cutoff)
    : k_(k), gen_cutoff_(generator_weight_cutoff) {
    if (k < 1)
        throw InputError("matrix size must be positive");
}

BasisId MatrixAlgebra::encode(long m1, long m2, int i, int j) const {
    if (m1 < 0 || m2 < 0 || m1 >= kStride || m2 >= kStride)
        throw KernelError("bidegree out of encodable range");
    return static_cast<BasisId>(((m1 * kStride + m2) * k_ + i) * k_ + j);
}

void MatrixAlgebra::decode(BasisId b, long& m1, long& m2, int& i, int& j) const {
    j = static_cast<int>(b % static_cast<BasisId>(k_));
    b /= static_cast<BasisId>(k_);
    i = static_cast<int>(b % static_cast<BasisId>(k_));
    b /= static_cast<BasisId>(k_);
    m2 = static_cast<long>(b % static_cast<BasisId>(kStride));
    m1 = static_cast<long>(b / static_cast<BasisId>(kStride));
}

ConformalElement MatrixAlgebra::from_mat(const MatElement& e) const {
    ConformalElement out;
    for (const auto& [d, m] : e.terms())
        for (const auto& [ij, v] : m.entries())
            out.add(0, encode(d.first, d.second, ij.first, ij.second), v);
    return out;
}

MatElement MatrixAlgebra::to_mat(const ConformalElement& e) const {
    MatElement out(k_);
    for (const auto& [key, v] : e.terms()) {
        if (key.first != 0)
            throw KernelError("element has unexpanded d-powers");
        long m1, m2;
        int i, j;
        decode(key.second, m1, m2, i, j);
        RMatrix m(k_);
        m.set(i, j, v);
        out.add(m1, m2, m);
    }
    return out;
}

std::string MatrixAlgebra::label() const {
    return "r" + std::to_string(k_) + std::to_string(k_);
}

std::string MatrixAlgebra::basis_name(BasisId b) const {
    long m1, m2;
    int i, j;
    decode(b, m1, m2, i, j);
    std::ostringstream os;
    os << "E" << i + 1 << j + 1 << "(" << m1 << "," << m2 << ")";
    return os.str();
}

std::optional<long> MatrixAlgebra::basis_weight(BasisId b) const {
    long m1, m2;
    int i, j;
    decode(b, m1, m2, i, j);
    return bidegree_weight(m1, m2);
}

ConformalElement MatrixAlgebra::component(BasisId u, BasisId v, long n) const {
    long am1, am2, bm1, bm2;
    int ai, aj, bi, bj;
    decode(u, am1, am2, ai, aj);
    decode(v, bm1, bm2, bi, bj);
    MatElement a = MatElement::unit(k_, ai, aj, am1, am2);
    MatElement b = MatElement::unit(k_, bi, bj, bm1, bm2);
    return from_mat(yplus_matrix(a, b).at(-n - 1));
}

long MatrixAlgebra::locality(BasisId u, BasisId v) const {
    long am1, am2, bm1, bm2;
    int ai, aj, bi, bj;
    decode(u, am1, am2, ai, aj);
    decode(v, bm1, bm2, bi, bj);
    return am1 + am2 + std::max(bm1, bm2) + 1;
}

ConformalElement MatrixAlgebra::partial_of_basis(BasisId b) const {
    long m1, m2;
    int i, j;
    decode(b, m1, m2, i, j);
    return from_mat(partial_action(MatElement::unit(k_, i, j, m1, m2)));
}

std::vector<BasisId> MatrixAlgebra::generators() const {
    std::vector<BasisId> out;
    for (long n = 0; n + 1 <= gen_cutoff_; ++n)
        for (int i = 0; i < k_; ++i)
            for (int j = 0; j < k_; ++j)
                out.push_back(encode(0, n, i, j));
    return out;
}

std::vector<BasisId> MatrixAlgebra::basis_up_to_bidegree(long bound) const {
    std::vector<BasisId> out;
    for (long m1 = 0; m1 <= bound; ++m1)
        for (long m2 = 0; m2 <= bound; ++m2)
            for (int i = 0; i < k_; ++i)
                for (int j = 0; j < k_; ++j)
                    out.push_back(encode(m1, m2, i, j));
    return out;
}

}  // namespace confjord
