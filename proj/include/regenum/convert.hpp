#pragma once

#include <vector>

#include "regenum/linear_ode.hpp"
#include "regenum/precurrence.hpp"

namespace regenum {

// Annihilating operator of sum a_n t^n (egf = false) or sum a_n t^n / n!
// (egf = true) for any sequence satisfying `rec`. The direct construction is
// exact; a minimization pass then searches for the smallest operator that
// annihilates a long recurrence-extended prefix and returns it when found
// (round trips are equivalence up to left factors, checked by annihilation).
LinearODE rec_to_ode(const PRecurrence& rec, bool egf);

// The construction step alone, without minimization.
LinearODE rec_to_ode_raw(const PRecurrence& rec, bool egf);

// Coefficient recurrence of the ODE's power-series solutions, in the same
// egf/ogf convention.
PRecurrence ode_to_rec(const LinearODE& ode, bool egf);

// Recurrence for b_n = a_n / (n!)^q, integer q (exact rewrite).
PRecurrence borel_scale(const PRecurrence& rec, long q);

// Fractional scaling q = u/v acts per residue class modulo v: class rho
// carries b_m = a_{vm+rho} / ( ((vm+rho)!)^alpha * (m!)^beta ) with
// alpha = floor(u/v) and beta = u - v*alpha, whose growth has finite nonzero
// radius whenever a_n grows like (n!)^{u/v} omega^n poly(n). The class
// recurrences are inferred from exactly scaled terms and guard-verified.
struct ScaledClass {
    int residue;
    int modulus;
    long alpha;
    long beta;
    PRecurrence rec;
};

std::vector<ScaledClass> borel_scale_frac(const PRecurrence& rec, const Rat& q,
                                          long sample_terms = 240);

}  // namespace regenum
