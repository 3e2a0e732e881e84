#include "confjord/checks.hpp"

#include <set>

namespace confjord {

namespace {

long series_depth(const ElementSeries& s) {
    return s.is_zero() ? 0 : -s.min_exponent();  // components live at z^{-n-1}, n < depth
}

void compare_series(const ConformalAlgebra& alg, const ElementSeries& lhs,
                    const ElementSeries& rhs, const std::string& check_id, const Json& inputs,
                    VerificationReport& rep) {
    std::set<long> exps;
    for (const auto& [e, v] : lhs.coeffs())
        exps.insert(e);
    for (const auto& [e, v] : rhs.coeffs())
        exps.insert(e);
    if (exps.empty()) {
        rep.count();
        return;
    }
    for (long e : exps) {
        rep.count();
        if (!(lhs.at(e) == rhs.at(e))) {
            Json in = inputs;
            in["exponent"] = e;
            rep.fail(check_id, in, alg.element_str(lhs.at(e)), alg.element_str(rhs.at(e)));
        }
    }
}

}  // namespace

VerificationReport check_skew(const ConformalAlgebra& alg, const ConformalElement& a,
                              const ConformalElement& b, const std::string& a_name,
                              const std::string& b_name) {
    VerificationReport rep;
    rep.command = "skew";
    Json inputs{{"algebra", alg.label()}, {"a", a_name}, {"b", b_name}};

    ElementSeries direct = alg.canonical_series(alg.eval(a, b));
    ElementSeries transported = alg.eval_transport(a, b);
    compare_series(alg, direct, transported, "skew/residue:" + a_name + "," + b_name, inputs, rep);

    // Component identity, built from the flipped product.
    ElementSeries flipped = alg.eval(b, a);
    long depth = std::max(series_depth(direct), series_depth(flipped));
    ElementSeries component_path;
    for (long n = 0; n < depth; ++n) {
        ConformalElement acc;
        for (long i = 0; n + i < depth; ++i) {
            ConformalElement t = alg.partial_pow(flipped.at(-(n + i) - 1), i);
            Rational f = Rational(1) / factorial(i);
            if ((n + i + 1) % 2 != 0)
                f *= Rational(-1);
            t *= f;
            acc += t;
        }
        component_path.add(-n - 1, acc);
    }
    compare_series(alg, direct, alg.canonical_series(component_path),
                   "skew/components:" + a_name + "," + b_name, inputs, rep);
    return rep;
}

VerificationReport check_skew(const ConformalAlgebra& alg, BasisId a, BasisId b) {
    return check_skew(alg, ConformalElement::basis(a), ConformalElement::basis(b),
                      alg.basis_name(a), alg.basis_name(b));
}

VerificationReport check_jacobi(const ConformalAlgebra& alg, const ConformalElement& a,
                                const ConformalElement& b, const ConformalElement& c,
                                const std::string& a_name, const std::string& b_name,
                                const std::string& c_name) {
    VerificationReport rep;
    rep.command = "jacobi";
    const std::string tag = a_name + "," + b_name + "," + c_name;
    Json inputs{{"algebra", alg.label()}, {"a", a_name}, {"b", b_name}, {"c", c_name}};

    ElementSeries s_ab = alg.eval(a, b);
    ElementSeries s_ac = alg.eval(a, c);
    ElementSeries s_bc = alg.eval(b, c);
    long n_ab = series_depth(s_ab), n_ac = series_depth(s_ac), n_bc = series_depth(s_bc);

    // Right side from the residue expansion of Y(Y(a, z1 - x)b, x)c, collected
    // as a two-variable series; entries sit at (-i-1-p, p-q-1).
    BiSeries<ConformalElement> rhs_bi;
    long m_extent = n_ab + n_ac, n_extent = n_bc + n_ab;
    std::vector<ElementSeries> aib_c(static_cast<std::size_t>(n_ab));
    for (long i = 0; i < n_ab; ++i) {
        aib_c[static_cast<std::size_t>(i)] = alg.eval(s_ab.at(-i - 1), c);
        const ElementSeries& s = aib_c[static_cast<std::size_t>(i)];
        long qmax = series_depth(s);
        for (long q = 0; q < qmax; ++q) {
            ConformalElement x = alg.canonical(s.at(-q - 1));
            if (x.is_zero())
                continue;
            for (long p = 0; p <= q; ++p) {
                ConformalElement t = x;
                Rational f = binom(-i - 1, p);
                if (p % 2 != 0)
                    f *= Rational(-1);
                t *= f;
                rhs_bi.add(-i - 1 - p, p - q - 1, t);
                m_extent = std::max(m_extent, i + p + 1);
                n_extent = std::max(n_extent, q - p + 1);
            }
        }
    }

    // Left side on the same window; cache the inner products.
    std::vector<ElementSeries> a_bnc(static_cast<std::size_t>(n_extent));
    for (long n = 0; n < n_extent; ++n)
        a_bnc[static_cast<std::size_t>(n)] = alg.eval(a, s_bc.at(-n - 1));
    std::vector<ElementSeries> b_amc(static_cast<std::size_t>(m_extent));
    for (long m = 0; m < m_extent; ++m)
        b_amc[static_cast<std::size_t>(m)] = alg.eval(b, s_ac.at(-m - 1));

    BiSeries<ConformalElement> lhs_bi;
    for (long m = 0; m < m_extent; ++m) {
        for (long n = 0; n < n_extent; ++n) {
            ConformalElement lhs = alg.canonical(a_bnc[static_cast<std::size_t>(n)].at(-m - 1));
            ConformalElement tmp = alg.canonical(b_amc[static_cast<std::size_t>(m)].at(-n - 1));
            tmp *= Rational(-1);
            lhs += tmp;
            lhs_bi.add(-m - 1, -n - 1, lhs);

            // Component identity at (m, n).
            ConformalElement rhs;
            for (long i = 0; i <= std::min(m, n_ab - 1); ++i) {
                long q = m + n - i;
                ConformalElement t =
                    alg.canonical(aib_c[static_cast<std::size_t>(i)].at(-q - 1));
                t *= binom(m, i);
                rhs += t;
            }
            rep.count();
            if (!(lhs == rhs)) {
                Json in = inputs;
                in["m"] = m;
                in["n"] = n;
                rep.fail("jacobi/components:" + tag, in, alg.element_str(rhs),
                         alg.element_str(lhs));
            }
        }
    }

    // The two-variable assembly must agree with the componentwise left side.
    std::set<std::pair<long, long>> keys;
    for (const auto& [k, v] : lhs_bi.coeffs())
        keys.insert(k);
    for (const auto& [k, v] : rhs_bi.coeffs())
        keys.insert(k);
    for (const auto& [e1, e2] : keys) {
        rep.count();
        if (!(lhs_bi.at(e1, e2) == rhs_bi.at(e1, e2))) {
            Json in = inputs;
            in["z1_exponent"] = e1;
            in["z2_exponent"] = e2;
            rep.fail("jacobi/biseries:" + tag, in, alg.element_str(rhs_bi.at(e1, e2)),
                     alg.element_str(lhs_bi.at(e1, e2)));
        }
    }
    return rep;
}

VerificationReport check_jacobi(const ConformalAlgebra& alg, BasisId a, BasisId b, BasisId c) {
    return check_jacobi(alg, ConformalElement::basis(a), ConformalElement::basis(b),
                        ConformalElement::basis(c), alg.basis_name(a), alg.basis_name(b),
                        alg.basis_name(c));
}

VerificationReport check_translation(const ConformalAlgebra& alg,
                                     const std::vector<BasisId>& basis, long sample_depth) {
    VerificationReport rep;
    rep.command = "translation";
    for (BasisId ua : basis) {
        for (BasisId ub : basis) {
            for (long i = 0; i <= sample_depth; ++i) {
                for (long j = 0; i + j <= sample_depth; ++j) {
                    ConformalElement A =
                        alg.partial_pow(ConformalElement::basis(ua), i);
                    ConformalElement B =
                        alg.partial_pow(ConformalElement::basis(ub), j);
                    ConformalElement dA = alg.partial(A);
                    Json inputs{{"algebra", alg.label()},
                                {"a", alg.basis_name(ua)},
                                {"b", alg.basis_name(ub)},
                                {"i", i},
                                {"j", j}};
                    const std::string tag =
                        alg.basis_name(ua) + "," + alg.basis_name(ub) + ":" +
                        std::to_string(i) + "," + std::to_string(j);

                    ElementSeries sAB = alg.canonical_series(alg.eval(A, B));
                    ElementSeries lhs_d = alg.canonical_series(alg.eval(dA, B));
                    compare_series(alg, lhs_d, derivative(sAB), "translation/dz:" + tag, inputs,
                                   rep);

                    // d(Y(A,z)B) - Y(A,z)dB = Y(dA,z)B
                    ElementSeries commut;
                    for (const auto& [e, v] : sAB.coeffs())
                        commut.add(e, alg.partial(v));
                    ElementSeries adb = alg.canonical_series(alg.eval(A, alg.partial(B)));
                    adb *= Rational(-1);
                    commut += adb;
                    compare_series(alg, commut, lhs_d, "translation/commutator:" + tag, inputs,
                                   rep);

                    // Skew transport of the shifted product.
                    ElementSeries transported = alg.eval_transport(dA, B);
                    compare_series(alg, lhs_d, transported, "translation/transport:" + tag,
                                   inputs, rep);
                }
            }
        }
    }
    return rep;
}

VerificationReport check_on_generators(const ConformalAlgebra& alg, long extended_depth,
                                       std::size_t max_triples) {
    VerificationReport rep;
    rep.command = "on-generators";
    std::vector<BasisId> gens = alg.generators();

    VerificationReport gen_level;
    for (BasisId a : gens)
        for (BasisId b : gens)
            gen_level.merge(check_skew(alg, a, b));
    std::size_t triples = 0;
    for (BasisId a : gens) {
        for (BasisId b : gens) {
            for (BasisId c : gens) {
                if (triples++ >= max_triples)
                    break;
                gen_level.merge(check_jacobi(alg, a, b, c));
            }
        }
    }

    VerificationReport ext_level;
    ext_level.command = "on-generators/extended";
    for (BasisId a : gens) {
        for (BasisId b : gens) {
            for (long i = 0; i <= extended_depth; ++i) {
                for (long j = 0; i + j <= extended_depth; ++j) {
                    ConformalElement A = alg.partial_pow(ConformalElement::basis(a), i);
                    ConformalElement B = alg.partial_pow(ConformalElement::basis(b), j);
                    std::string an = "d^" + std::to_string(i) + "(" + alg.basis_name(a) + ")";
                    std::string bn = "d^" + std::to_string(j) + "(" + alg.basis_name(b) + ")";
                    ext_level.merge(check_skew(alg, A, B, an, bn));
                }
            }
        }
    }
    triples = 0;
    for (BasisId a : gens) {
        for (BasisId b : gens) {
            for (BasisId c : gens) {
                if (triples++ >= max_triples)
                    break;
                long d = std::min<long>(extended_depth, 1);
                ConformalElement A = alg.partial_pow(ConformalElement::basis(a), d);
                ConformalElement B = ConformalElement::basis(b);
                ConformalElement C = alg.partial_pow(ConformalElement::basis(c), d);
                ext_level.merge(check_jacobi(
                    alg, A, B, C, "d^" + std::to_string(d) + "(" + alg.basis_name(a) + ")",
                    alg.basis_name(b), "d^" + std::to_string(d) + "(" + alg.basis_name(c) + ")"));
            }
        }
    }

    bool gen_pass = gen_level.passed();
    bool ext_pass = ext_level.passed();
    rep.merge(gen_level);
    rep.merge(ext_level);
    rep.notes["generator_level"] = gen_pass ? "pass" : "fail";
    rep.notes["extended_level"] = ext_pass ? "pass" : "fail";
    if (gen_pass != ext_pass) {
        rep.errored = true;
        rep.error_message =
            "generator-level and extended-level verdicts disagree; this contradicts generator "
            "sufficiency and indicates a kernel bug";
    }
    return rep;
}

VerificationReport check_weight_grading(const ConformalAlgebra& alg,
                                        const std::vector<BasisId>& basis, long max_weight) {
    VerificationReport rep;
    rep.command = "grading";
    if (!alg.has_weights()) {
        rep.errored = true;
        rep.error_message = "algebra carries no weights";
        return rep;
    }
    for (BasisId u : basis) {
        for (BasisId v : basis) {
            long wu = *alg.basis_weight(u), wv = *alg.basis_weight(v);
            long bound = alg.locality(u, v);
            for (long n = 0; n < bound; ++n) {
                ConformalElement e = alg.component(u, v, n);
                rep.count();
                long expected = wu + wv - n - 1;
                for (const auto& [k, c] : e.terms()) {
                    auto bw = alg.basis_weight(k.second);
                    long got = (bw ? *bw : 0) + k.first;
                    if (!bw || got != expected) {
                        rep.fail("grading/shift",
                                 Json{{"algebra", alg.label()},
                                      {"u", alg.basis_name(u)},
                                      {"v", alg.basis_name(v)},
                                      {"n", n},
                                      {"term", alg.basis_name(k.second)}},
                                 "weight " + std::to_string(expected),
                                 "weight " + std::to_string(got));
                    }
                }
            }
        }
    }
    // Growth bound: per-weight dimension of the generating slice.
    std::map<long, long> slice;
    for (BasisId g : alg.generators()) {
        auto w = alg.basis_weight(g);
        if (w && *w <= max_weight)
            slice[*w] += 1;
    }
    long n0 = 0;
    for (const auto& [w, d] : slice)
        n0 = std::max(n0, d);
    rep.notes["growth_bound_N0"] = n0;
    rep.notes["max_weight_tested"] = max_weight;
    return rep;
}

}  // namespace confjord
