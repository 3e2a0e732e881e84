#include "confjord/affinize.hpp"

#include <set>
#include <sstream>

#include "confjord/matrix.hpp"
#include "confjord/series.hpp"

namespace confjord {

namespace {

void combo_add(ModeCombo& c, BasisId b, long mode, const Rational& v) {
    if (v.is_zero())
        return;
    auto key = std::make_pair(b, mode);
    auto it = c.find(key);
    if (it == c.end()) {
        c.emplace(key, v);
    } else {
        it->second += v;
        if (it->second.is_zero())
            c.erase(it);
    }
}

std::string combo_str(const ConformalAlgebra& alg, const ModeCombo& c) {
    if (c.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, v] : c) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << v.str() << ")" << alg.basis_name(key.first) << "@t^" << key.second;
    }
    return os.str();
}

}  // namespace

ModeCombo mode_bracket(const ConformalAlgebra& alg, BasisId u, long m, BasisId v, long n) {
    const bool weighted = alg.has_weights();
    long mu = weighted ? m + *alg.basis_weight(u) - 1 : m;
    long nv = weighted ? n + *alg.basis_weight(v) - 1 : n;
    ModeCombo out;
    long bound = alg.locality(u, v);
    for (long i = 0; i < bound; ++i) {
        ConformalElement e = alg.component(u, v, i);
        if (e.is_zero())
            continue;
        Rational ci = binom(mu, i);
        if (ci.is_zero())
            continue;
        long total = mu + nv - i;
        for (const auto& [k, c] : e.terms()) {
            const auto [j, w] = k;
            long target = total - j;
            // d^j converts into the falling product (-target-1)...(-target-j).
            Rational f = ci * c;
            for (long r = 1; r <= j; ++r)
                f *= Rational(-target - r);
            if (f.is_zero())
                continue;
            long label = weighted ? target - *alg.basis_weight(w) + 1 : target;
            combo_add(out, w, label, f);
        }
    }
    return out;
}

ModeBracketTable affinize(const ConformalAlgebra& alg, long window, long jacobi_window,
                          VerificationReport& rep) {
    rep.command = "affinize";
    ModeBracketTable t;
    t.window = window;
    t.weighted = alg.has_weights();
    std::vector<BasisId> basis = alg.generators();
    for (BasisId u : basis)
        for (BasisId v : basis)
            for (long m = -window; m <= window; ++m)
                for (long n = -window; n <= window; ++n)
                    t.entries[ModeKey{u, m, v, n}] = mode_bracket(alg, u, m, v, n);

    // Antisymmetry on the whole window.
    for (const auto& [key, combo] : t.entries) {
        const ModeCombo* flip = t.find(key.v, key.n, key.u, key.m);
        ModeCombo sum = combo;
        if (flip)
            for (const auto& [bk, c] : *flip)
                combo_add(sum, bk.first, bk.second, c);
        rep.count();
        if (!sum.empty())
            rep.fail("affinize/antisymmetry",
                     Json{{"algebra", alg.label()},
                          {"u", alg.basis_name(key.u)},
                          {"m", key.m},
                          {"v", alg.basis_name(key.v)},
                          {"n", key.n}},
                     "0", combo_str(alg, sum));
    }

    // Mode Jacobi on the sub-window, via table lookups only.
    auto bracket_with_combo = [&](BasisId x, long a, const ModeCombo& inner,
                                  ModeCombo& acc, const Rational& scale,
                                  bool& overflow) {
        for (const auto& [bk, c] : inner) {
            const ModeCombo* e = t.find(x, a, bk.first, bk.second);
            if (!e) {
                overflow = true;
                return;
            }
            for (const auto& [bk2, c2] : *e)
                combo_add(acc, bk2.first, bk2.second, scale * c * c2);
        }
    };
    for (BasisId x : basis)
        for (BasisId y : basis)
            for (BasisId z : basis)
                for (long a = -jacobi_window; a <= jacobi_window; ++a)
                    for (long b = -jacobi_window; b <= jacobi_window; ++b)
                        for (long c = -jacobi_window; c <= jacobi_window; ++c) {
                            bool overflow = false;
                            ModeCombo acc;
                            const ModeCombo* yz = t.find(y, b, z, c);
                            const ModeCombo* xz = t.find(x, a, z, c);
                            const ModeCombo* xy = t.find(x, a, y, b);
                            if (!yz || !xz || !xy) {
                                overflow = true;
                            } else {
                                bracket_with_combo(x, a, *yz, acc, Rational(1), overflow);
                                if (!overflow)
                                    bracket_with_combo(y, b, *xz, acc, Rational(-1), overflow);
                                if (!overflow)
                                    for (const auto& [bk, cc] : *xy) {
                                        const ModeCombo* e =
                                            t.find(bk.first, bk.second, z, c);
                                        if (!e) {
                                            overflow = true;
                                            break;
                                        }
                                        for (const auto& [bk2, c2] : *e)
                                            combo_add(acc, bk2.first, bk2.second,
                                                      Rational(-1) * cc * c2);
                                    }
                            }
                            Json in{{"algebra", alg.label()},
                                    {"x", alg.basis_name(x)},
                                    {"a", a},
                                    {"y", alg.basis_name(y)},
                                    {"b", b},
                                    {"z", alg.basis_name(z)},
                                    {"c", c}};
                            rep.count();
                            if (overflow)
                                rep.fail("affinize/widen-window", in,
                                         "all intermediate modes inside window " +
                                             std::to_string(window),
                                         "lookup outside window; widen the window");
                            else if (!acc.empty())
                                rep.fail("affinize/jacobi", in, "0", combo_str(alg, acc));
                        }
    return t;
}

VerificationReport verify_witt_modes(const ConformalAlgebra& alg, const ModeBracketTable& t) {
    VerificationReport rep;
    rep.command = "affinize/witt";
    BasisId e = alg.generators().at(0);
    for (long j = -t.window; j <= t.window; ++j)
        for (long l = -t.window; l <= t.window; ++l) {
            ModeCombo expected;
            combo_add(expected, e, j + l, Rational(j - l));
            const ModeCombo* got = t.find(e, j, e, l);
            rep.count();
            if (!got || !(*got == expected))
                rep.fail("affinize/witt-bracket", Json{{"j", j}, {"l", l}},
                         combo_str(alg, expected), got ? combo_str(alg, *got) : "<missing>");
        }
    return rep;
}

VerificationReport verify_loop_modes(const ConformalAlgebra& alg, const ModeBracketTable& t) {
    VerificationReport rep;
    rep.command = "affinize/loop";
    for (BasisId u : alg.generators())
        for (BasisId v : alg.generators())
            for (long j = -t.window; j <= t.window; ++j)
                for (long l = -t.window; l <= t.window; ++l) {
                    ModeCombo expected;
                    for (const auto& [k, c] : alg.component(u, v, 0).terms()) {
                        if (k.first != 0)
                            throw KernelError("loop expectation needs d-free brackets");
                        combo_add(expected, k.second, j + l, c);
                    }
                    const ModeCombo* got = t.find(u, j, v, l);
                    rep.count();
                    if (!got || !(*got == expected))
                        rep.fail("affinize/loop-bracket",
                                 Json{{"u", alg.basis_name(u)},
                                      {"v", alg.basis_name(v)},
                                      {"j", j},
                                      {"l", l}},
                                 combo_str(alg, expected),
                                 got ? combo_str(alg, *got) : "<missing>");
                }
    return rep;
}

// --- delta identities --------------------------------------------------------

namespace {

/// Mode-symbol combination with a central coefficient: sum c_p * X(p) + c * kappa,
/// where X(p) is matrix-valued for the current case and scalar for the
/// rank-one case (the matrix is then 1x1).
struct SymCoeff {
    std::map<long, RMatrix> modes;
    Rational kappa;

    bool is_zero() const { return modes.empty() && kappa.is_zero(); }

    void add_mode(long p, const RMatrix& m) {
        if (m.is_zero())
            return;
        auto it = modes.find(p);
        if (it == modes.end()) {
            modes.emplace(p, m);
        } else {
            it->second += m;
            if (it->second.is_zero())
                modes.erase(it);
        }
    }

    SymCoeff& operator+=(const SymCoeff& o) {
        for (const auto& [p, m] : o.modes)
            add_mode(p, m);
        kappa += o.kappa;
        return *this;
    }

    SymCoeff& operator*=(const Rational& s) {
        if (s.is_zero()) {
            modes.clear();
            kappa = Rational();
            return *this;
        }
        for (auto& [p, m] : modes)
            m *= s;
        kappa *= s;
        return *this;
    }

    friend bool operator==(const SymCoeff& a, const SymCoeff& b) {
        return a.modes == b.modes && a.kappa == b.kappa;
    }

    std::string str() const {
        if (is_zero())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [p, m] : modes) {
            if (!first)
                os << " + ";
            first = false;
            os << m.str() << "@t^" << p;
        }
        if (!kappa.is_zero()) {
            if (!first)
                os << " + ";
            os << "(" << kappa.str() << ")kappa";
        }
        return os.str();
    }
};

std::vector<RMatrix> sl_basis(int n) {
    std::vector<RMatrix> out;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j)
                out.push_back(RMatrix::unit(n, i, j));
    for (int i = 0; i + 1 < n; ++i) {
        RMatrix h(n);
        h.set(i, i, Rational(1));
        h.set(i + 1, i + 1, Rational(-1));
        out.push_back(h);
    }
    return out;
}

}  // namespace

VerificationReport check_delta_identity(DeltaCase which, int n, long window) {
    VerificationReport rep;
    rep.command = "delta";
    const long W = window;
    const long K = 2 * W + 6;

    if (which == DeltaCase::AffineSl) {
        if (n < 2)
            throw InputError("affine case needs matrix size >= 2");
        auto basis = sl_basis(n);
        // The kappa term's sign is determined here rather than trusted: run the
        // extraction with the printed sign (-1) and with the flipped one, keep
        // whichever reconciles with the mode brackets.
        auto attempt_with_sign = [&](long ks) {
            VerificationReport attempt;
            for (std::size_t bu = 0; bu < basis.size(); ++bu) {
                for (std::size_t bv = 0; bv < basis.size(); ++bv) {
                    const RMatrix& u = basis[bu];
                    const RMatrix& v = basis[bv];
                    RMatrix uv = commutator(u, v);
                    Rational form = (u * v).trace();

                    // Right side: z2^{-1} delta(z1/z2) [u,v](z2)
                    //           + ks * z2^{-1} d_{z1} delta(z1/z2) <u,v> kappa.
                    BiSeries<SymCoeff> rhs;
                    for (long k = -K; k <= K; ++k) {
                        for (long p = -K; p <= K; ++p) {
                            SymCoeff c;
                            c.add_mode(p, uv);
                            rhs.add(k, -k - p - 2, c);
                        }
                        SymCoeff c;
                        c.kappa = Rational(ks) * Rational(k) * form;
                        rhs.add(k - 1, -k - 1, c);
                    }

                    for (long l = -W; l <= W; ++l) {
                        for (long j = -W; j <= W; ++j) {
                            SymCoeff expected;  // mode bracket with central term
                            expected.add_mode(l + j, uv);
                            if (l + j == 0)
                                expected.kappa = Rational(l) * form;
                            attempt.count();
                            SymCoeff got = rhs.at(-l - 1, -j - 1);
                            if (!(got == expected))
                                attempt.fail("delta/affine",
                                             Json{{"u", static_cast<long>(bu)},
                                                  {"v", static_cast<long>(bv)},
                                                  {"l", l},
                                                  {"j", j},
                                                  {"kappa_sign", ks}},
                                             expected.str(), got.str());
                        }
                    }
                }
            }
            return attempt;
        };
        VerificationReport printed = attempt_with_sign(-1);
        if (printed.passed()) {
            rep.merge(printed);
            rep.notes["kappa_sign"] = "printed (-d_z1 delta reconciles with +l kappa)";
            return rep;
        }
        VerificationReport flipped = attempt_with_sign(+1);
        if (flipped.passed()) {
            rep.merge(flipped);
            rep.notes["kappa_sign"] = "flipped (+d_z1 delta)";
            return rep;
        }
        rep.merge(printed);
        rep.notes["kappa_sign"] = "none";
        return rep;
    }

    // Rank-one case: modes at z^{-j-2}, bracket (j-l) L(j+l) + (j^3-j)/12 kappa.
    RMatrix one = RMatrix::identity(1);
    BiSeries<SymCoeff> rhs;
    for (long k = -K; k <= K; ++k) {
        for (long p = -K; p <= K; ++p) {
            // z2^{-1} delta(z1/z2) dL/dz2: mode p with coefficient (-p-2)
            SymCoeff c1;
            RMatrix m1 = one;
            m1 *= Rational(-p - 2);
            c1.add_mode(p, m1);
            rhs.add(k, -k - p - 4, c1);
            // -2 z2^{-1} d_{z1} delta L(z2)
            SymCoeff c2;
            RMatrix m2 = one;
            m2 *= Rational(-2 * k);
            c2.add_mode(p, m2);
            rhs.add(k - 1, -k - p - 3, c2);
        }
        // -(1/12) z2^{-1} d^3_{z1} delta kappa
        SymCoeff c3;
        c3.kappa = Rational(-k * (k - 1) * (k - 2), 12);
        rhs.add(k - 3, -k - 1, c3);
    }
    for (long j = -W; j <= W; ++j) {
        for (long l = -W; l <= W; ++l) {
            SymCoeff expected;
            RMatrix m = one;
            m *= Rational(j - l);
            expected.add_mode(j + l, m);
            if (j + l == 0)
                expected.kappa = Rational(j * j * j - j, 12);
            rep.count();
            SymCoeff got = rhs.at(-j - 2, -l - 2);
            if (!(got == expected))
                rep.fail("delta/virasoro", Json{{"j", j}, {"l", l}}, expected.str(), got.str());
        }
    }
    rep.notes["kappa_sign"] = "printed (-(1/12) d^3_z1 delta)";
    return rep;
}

}  // namespace confjord
