#pragma once

#include "confjord/conformal.hpp"
#include "confjord/report.hpp"

namespace confjord {

/// (basis, mode) -> coefficient.
using ModeCombo = std::map<std::pair<BasisId, long>, Rational>;

struct ModeKey {
    BasisId u;
    long m;
    BasisId v;
    long n;
    friend bool operator<(const ModeKey& a, const ModeKey& b) {
        return std::tie(a.u, a.m, a.v, a.n) < std::tie(b.u, b.m, b.v, b.n);
    }
};

/// Centerless mode brackets of the coefficient algebra on a window. For
/// weighted algebras the modes are the weighted labels (the coefficient of
/// z^{-m-wt}), so the rank-one weight-2 algebra reproduces the classical
/// (j-l) bracket on the nose.
struct ModeBracketTable {
    long window = 0;
    bool weighted = false;
    std::map<ModeKey, ModeCombo> entries;

    const ModeCombo* find(BasisId u, long m, BasisId v, long n) const {
        auto it = entries.find(ModeKey{u, m, v, n});
        return it == entries.end() ? nullptr : &it->second;
    }
};

/// One bracket [u x t^m, v x t^n], computed from the component structure map
/// by converting d-powers into mode shifts.
ModeCombo mode_bracket(const ConformalAlgebra& alg, BasisId u, long m, BasisId v, long n);

/// Builds the window table and verifies antisymmetry on the whole window and
/// the mode Jacobi identity on the sub-window where all intermediate brackets
/// resolve inside the table; an unresolvable lookup is reported as a
/// widen-window failure.
ModeBracketTable affinize(const ConformalAlgebra& alg, long window, long jacobi_window,
                          VerificationReport& rep);

/// Table equality against (j - l) e_{j+l} on the window (rank-one weight-2).
VerificationReport verify_witt_modes(const ConformalAlgebra& alg, const ModeBracketTable& t);

/// Table equality against [u x t^j, v x t^l] = [u,v] x t^{j+l} where [u,v] is
/// the 0th component of the algebra (current-algebra loop brackets).
VerificationReport verify_loop_modes(const ConformalAlgebra& alg, const ModeBracketTable& t);

enum class DeltaCase { AffineSl, Virasoro };

/// Checks the formal-distribution commutator identities including the central
/// terms: both sides are materialized as two-variable series in a window wide
/// enough that every extracted coefficient is exact, and matched against the
/// mode-algebra brackets coefficientwise in kappa and in the modes. The kappa
/// term's printed sign is not trusted: both signs are extracted and the one
/// that reconciles is recorded in the notes.
VerificationReport check_delta_identity(DeltaCase which, int n, long window);

}  // namespace confjord
