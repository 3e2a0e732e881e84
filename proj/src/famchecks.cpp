#include "confjord/famchecks.hpp"

#include <deque>
#include <sstream>

#include "confjord/linalg.hpp"

namespace confjord {

namespace {

long mat_column(int k, long m1, long m2, int i, int j) {
    return ((m1 * MatrixAlgebra::kStride + m2) * k + i) * k + j;
}

SparseVec mat_coords(const MatElement& e) {
    SparseVec v;
    for (const auto& [d, m] : e.terms())
        for (const auto& [ij, val] : m.entries())
            v.emplace_back(mat_column(e.k(), d.first, d.second, ij.first, ij.second), val);
    return v;
}

}  // namespace

VerificationReport closure_check_cross(const FamilyKind& products_of,
                                       const FamilyKind& membership_in, long w_max) {
    VerificationReport rep;
    rep.command = "closure";
    auto basis = family_basis(products_of, w_max);
    long products = 0;
    for (std::size_t ia = 0; ia < basis.size(); ++ia) {
        rep.count();
        if (!membership(partial_action(basis[ia]), membership_in))
            rep.fail("closure/derivation", Json{{"index", ia}}, "member",
                     partial_action(basis[ia]).str());
        for (std::size_t ib = 0; ib < basis.size(); ++ib) {
            ZSeries<MatElement> s = yplus_matrix(basis[ia], basis[ib]);
            for (const auto& [e, coeff] : s.coeffs()) {
                ++products;
                rep.count();
                if (!membership(coeff, membership_in))
                    rep.fail("closure/component",
                             Json{{"a", static_cast<long>(ia)},
                                  {"b", static_cast<long>(ib)},
                                  {"exponent", e}},
                             "member", coeff.str());
            }
        }
    }
    rep.notes["basis_size"] = basis.size();
    rep.notes["product_components"] = products;
    return rep;
}

VerificationReport closure_check(const FamilyKind& f, long w_max) {
    VerificationReport rep = closure_check_cross(f, f, w_max);
    rep.parameters = Json{{"family", f.to_json()}, {"wmax", w_max}};
    return rep;
}

VerificationReport ideal_probe(const FamilyKind& f, const MatElement& seed, long w_max,
                               long w_target, long w_cap) {
    VerificationReport rep;
    rep.command = "ideal-probe";
    if (seed.is_zero())
        throw InputError("ideal probe needs a nonzero seed");
    if (!membership(seed, f))
        throw InputError("seed is not a member of the family");

    auto acting = family_basis(f, w_max);
    SpanBasis span;
    std::deque<MatElement> frontier;
    span.insert(mat_coords(seed));
    frontier.push_back(seed);

    auto offer = [&](const MatElement& e) {
        if (e.is_zero() || e.top_weight() > w_cap)
            return;
        if (span.insert(mat_coords(e)))
            frontier.push_back(e);
    };

    while (!frontier.empty()) {
        MatElement x = frontier.front();
        frontier.pop_front();
        offer(partial_action(x));
        for (const auto& a : acting) {
            for (const auto& [e, coeff] : yplus_matrix(a, x).coeffs())
                offer(coeff);
            for (const auto& [e, coeff] : yplus_matrix(x, a).coeffs())
                offer(coeff);
        }
    }

    Json dims = Json::array();
    for (long w = f.L; w <= w_target; ++w) {
        auto slice = family_basis_weight(f, w);
        long reached = 0;
        for (const auto& b : slice) {
            rep.count();
            if (span.contains(mat_coords(b)))
                ++reached;
            else
                rep.fail("ideal/deficit", Json{{"weight", w}}, "reachable: " + b.str(),
                         "outside the saturated span");
        }
        dims.push_back(Json{{"weight", w},
                            {"family_dim", slice.size()},
                            {"reached", reached}});
    }
    rep.notes["saturated_rank"] = span.rank();
    rep.notes["per_weight"] = dims;
    return rep;
}

MatElement random_family_element(const FamilyKind& f, long w_max, Rng& rng) {
    auto basis = family_basis(f, w_max);
    for (int attempt = 0; attempt < 64; ++attempt) {
        MatElement out(f.k);
        for (const auto& b : basis) {
            if (rng.uniform(0, 2) != 0)
                continue;  // sparse combinations keep the probe elements small
            MatElement t = b;
            t *= rng.rational_entry();
            out += t;
        }
        if (!out.is_zero())
            return out;
    }
    throw KernelError("random sampler failed to produce a nonzero element");
}

namespace {

MatElement circ(const MatElement& a, const MatElement& b, const FamilyKind& f) {
    return yplus_matrix(a, b).at(-f.L);
}

MatElement random_minimal_element(const FamilyKind& f, Rng& rng,
                                  const std::vector<MatElement>& basis) {
    MatElement out(f.k);
    for (const auto& b : basis) {
        MatElement t = b;
        t *= rng.rational_entry();
        out += t;
    }
    return out;
}

}  // namespace

VerificationReport check_jordan(const FamilyKind& f, long random_trials, Rng& rng) {
    VerificationReport rep;
    rep.command = "jordan";
    if (f.L % 2 != 0)
        throw InputError("the jordan check needs an even label");
    auto basis = minimal_weight_basis(f);
    const std::size_t d = basis.size();

    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            rep.count();
            if (!(circ(basis[i], basis[j], f) == circ(basis[j], basis[i], f)))
                rep.fail("jordan/commutativity", Json{{"i", i}, {"j", j}}, "x o y = y o x",
                         "mismatch");
        }

    // Four-variable linearization of (x o y) o x^2 = x o (y o x^2); with
    // commutativity and characteristic zero this is equivalent to the
    // identity itself.
    for (std::size_t x1 = 0; x1 < d; ++x1)
        for (std::size_t x2 = 0; x2 < d; ++x2)
            for (std::size_t x3 = 0; x3 < d; ++x3)
                for (std::size_t y = 0; y < d; ++y) {
                    MatElement lhs(f.k), rhs(f.k);
                    const std::size_t idx[3] = {x1, x2, x3};
                    for (int a = 0; a < 3; ++a) {
                        const MatElement& xa = basis[idx[a]];
                        const MatElement& xb = basis[idx[(a + 1) % 3]];
                        const MatElement& xc = basis[idx[(a + 2) % 3]];
                        MatElement bc = circ(xb, xc, f);
                        lhs += circ(circ(xa, basis[y], f), bc, f);
                        rhs += circ(xa, circ(basis[y], bc, f), f);
                    }
                    rep.count();
                    if (!(lhs == rhs))
                        rep.fail("jordan/linearized",
                                 Json{{"x1", x1}, {"x2", x2}, {"x3", x3}, {"y", y}},
                                 "sums agree", "mismatch");
                }

    for (long t = 0; t < random_trials; ++t) {
        MatElement x = random_minimal_element(f, rng, basis);
        MatElement y = random_minimal_element(f, rng, basis);
        MatElement xx = circ(x, x, f);
        rep.count();
        if (!(circ(circ(x, y, f), xx, f) == circ(x, circ(y, xx, f), f)))
            rep.fail("jordan/identity", Json{{"trial", t}, {"x", x.to_json()}, {"y", y.to_json()}},
                     "(x o y) o x^2 = x o (y o x^2)", "mismatch");
    }
    rep.notes["minimal_dim"] = d;
    return rep;
}

VerificationReport check_lie(const FamilyKind& f, long random_trials, Rng& rng) {
    VerificationReport rep;
    rep.command = "lie";
    if (f.L % 2 != 1)
        throw InputError("the lie check needs an odd label");
    auto basis = minimal_weight_basis(f);
    const std::size_t d = basis.size();

    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            MatElement sum = circ(basis[i], basis[j], f);
            sum += circ(basis[j], basis[i], f);
            rep.count();
            if (!sum.is_zero())
                rep.fail("lie/anticommutativity", Json{{"i", i}, {"j", j}}, "x o y = -(y o x)",
                         sum.str());
        }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t l = 0; l < d; ++l) {
                MatElement sum = circ(circ(basis[i], basis[j], f), basis[l], f);
                sum += circ(circ(basis[j], basis[l], f), basis[i], f);
                sum += circ(circ(basis[l], basis[i], f), basis[j], f);
                rep.count();
                if (!sum.is_zero())
                    rep.fail("lie/jacobi", Json{{"i", i}, {"j", j}, {"l", l}}, "0", sum.str());
            }
    for (long t = 0; t < random_trials; ++t) {
        MatElement x = random_minimal_element(f, rng, basis);
        MatElement y = random_minimal_element(f, rng, basis);
        MatElement z = random_minimal_element(f, rng, basis);
        MatElement sum = circ(circ(x, y, f), z, f);
        sum += circ(circ(y, z, f), x, f);
        sum += circ(circ(z, x, f), y, f);
        rep.count();
        if (!sum.is_zero())
            rep.fail("lie/jacobi-random", Json{{"trial", t}}, "0", sum.str());
    }
    rep.notes["minimal_dim"] = d;
    return rep;
}

namespace {

std::vector<RMatrix> model_space(const std::string& label, const FamilyKind& f) {
    const int k = f.k;
    std::vector<RMatrix> out;
    if (label == "JordanA" || label == "gl") {
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                out.push_back(RMatrix::unit(k, i, j));
    } else if (label == "JordanB") {  // symmetric matrices
        for (int i = 0; i < k; ++i)
            for (int j = i; j < k; ++j) {
                RMatrix m = RMatrix::unit(k, i, j);
                if (i != j)
                    m += RMatrix::unit(k, j, i);
                out.push_back(m);
            }
    } else if (label == "o") {  // antisymmetric matrices
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                RMatrix m = RMatrix::unit(k, i, j);
                RMatrix n = RMatrix::unit(k, j, i);
                n *= Rational(-1);
                m += n;
                out.push_back(m);
            }
    } else if (label == "JordanC" || label == "sp") {
        // Fixed (resp. anti-fixed) space of the symplectic twist, by brute
        // force over the unit symmetrization.
        SpanBasis span;
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                RMatrix u = RMatrix::unit(k, i, j);
                RMatrix t = u.symplectic_twist();
                if (label == "sp")
                    t *= Rational(-1);
                u += t;
                if (u.is_zero())
                    continue;
                SparseVec v;
                for (const auto& [ij, val] : u.entries())
                    v.emplace_back(ij.first * k + ij.second, val);
                if (span.insert(v))
                    out.push_back(u);
            }
    } else {
        throw KernelError("unknown model label " + label);
    }
    return out;
}

bool in_matrix_span(const RMatrix& m, const std::vector<RMatrix>& basis) {
    const int k = m.k();
    SpanBasis span;
    for (const auto& b : basis) {
        SparseVec v;
        for (const auto& [ij, val] : b.entries())
            v.emplace_back(ij.first * k + ij.second, val);
        span.insert(v);
    }
    SparseVec v;
    for (const auto& [ij, val] : m.entries())
        v.emplace_back(ij.first * k + ij.second, val);
    return span.contains(v);
}

}  // namespace

IdentifyResult identify_model(const FamilyKind& f, VerificationReport& rep) {
    rep.command = "identify";
    const bool jordan = f.L % 2 == 0;
    auto basis = minimal_weight_basis(f);
    const long s = f.shift();

    // The matching map sends a minimal-weight element to its matrix at the
    // (0, s) bidegree.
    std::vector<RMatrix> mats;
    mats.reserve(basis.size());
    for (const auto& b : basis)
        mats.push_back(b.at(0, s));

    std::vector<std::string> candidates;
    if (jordan)
        candidates = {"JordanA", "JordanB", "JordanC"};
    else
        candidates = {"gl", "o", "sp"};

    for (const auto& label : candidates) {
        if ((label == "JordanC" || label == "sp") && f.k % 2 != 0)
            continue;
        auto model = model_space(label, f);
        if (model.size() != mats.size())
            continue;
        bool span_ok = true;
        for (const auto& m : mats)
            if (!in_matrix_span(m, model)) {
                span_ok = false;
                break;
            }
        if (!span_ok)
            continue;

        // Fit the global scalar from the first nonzero structure constant,
        // then demand it everywhere.
        std::optional<Rational> lambda;
        bool match = true;
        long compared = 0;
        for (std::size_t i = 0; i < basis.size() && match; ++i) {
            for (std::size_t j = 0; j < basis.size() && match; ++j) {
                RMatrix got = circ(basis[i], basis[j], f).at(0, s);
                RMatrix want = jordan ? anticommutator(mats[i], mats[j])
                                      : commutator(mats[i], mats[j]);
                ++compared;
                if (want.is_zero()) {
                    match = got.is_zero();
                    continue;
                }
                if (!lambda) {
                    if (got.is_zero()) {
                        match = false;
                        continue;
                    }
                    lambda = got.entries().begin()->second /
                             want.at(got.entries().begin()->first.first,
                                     got.entries().begin()->first.second);
                    if (lambda->is_zero()) {
                        match = false;
                        continue;
                    }
                }
                RMatrix scaled = want;
                scaled *= *lambda;
                match = scaled == got;
            }
        }
        rep.count(compared);
        if (match) {
            Rational l = lambda.value_or(Rational(1));
            rep.notes["label"] = label;
            rep.notes["lambda"] = l.str();
            return IdentifyResult{label, l};
        }
    }
    rep.errored = true;
    rep.error_message =
        "no model algebra matches the minimal-weight product table; this would falsify the "
        "classification at this size";
    throw KernelError(rep.error_message);
}

VerificationReport generation_check(const FamilyKind& f, long w_max) {
    VerificationReport rep;
    rep.command = "generate";
    if (f.L < 2)
        throw InputError("generation is only claimed for labels >= 2");
    const bool hypothesis = f.kind == FamilyName::Dagger ? f.k >= 4 : f.k >= 2;

    std::map<long, SpanBasis> spans;
    std::vector<MatElement> reps;
    auto offer = [&](const MatElement& e) {
        if (e.is_zero())
            return;
        long w = *e.homogeneous_weight();
        if (w > w_max)
            return;
        if (spans[w].insert(mat_coords(e)))
            reps.push_back(e);
    };
    for (const auto& b : minimal_weight_basis(f))
        offer(b);
    // Each element pairs with everything present at its turn; later arrivals
    // pick up the missing pairs at their own turn, so the loop closes the
    // span under all components.
    for (std::size_t turn = 0; turn < reps.size(); ++turn) {
        MatElement x = reps[turn];
        for (std::size_t i = 0; i <= turn; ++i) {
            MatElement y = reps[i];
            for (const auto& [e, coeff] : yplus_matrix(x, y).coeffs())
                offer(coeff);
            for (const auto& [e, coeff] : yplus_matrix(y, x).coeffs())
                offer(coeff);
        }
    }

    Json dims = Json::array();
    for (long w = f.L; w <= w_max; ++w) {
        std::size_t family_dim = family_basis_weight(f, w).size();
        std::size_t got = spans.count(w) ? spans[w].rank() : 0;
        dims.push_back(Json{{"weight", w}, {"family_dim", family_dim}, {"generated", got}});
        rep.count();
        if (hypothesis && got != family_dim)
            rep.fail("generate/deficit", Json{{"weight", w}},
                     std::to_string(family_dim) + " dimensions",
                     std::to_string(got) + " dimensions");
    }
    rep.notes["hypothesis_met"] = hypothesis;
    rep.notes["per_weight"] = dims;
    return rep;
}

}  // namespace confjord
