#pragma once

#include <optional>
#include <vector>

#include "regenum/precurrence.hpp"

namespace regenum {

struct GuessOptions {
    int max_order = 5;
    int max_degree = 4;
    bool egf_mode = false;  // fit on b_n with a_n = n! b_n, return in a_n form
    int guards = 10;        // trailing terms never used for fitting
    int max_valid_from = 2;
};

// Minimal (order, then degree) recurrence annihilating the whole input,
// fitted by exact nullspace computation on the non-guard prefix and verified
// on every term including the guards. Returns nothing when no candidate in
// the search grid survives. Throws std::invalid_argument when the input is
// shorter than (max_order+1)(max_degree+2) + max_order + guards.
std::optional<PRecurrence> guess_recurrence(const std::vector<Rat>& terms,
                                            const GuessOptions& opts = {});

// Exact rational nullspace helpers shared with the ODE fitter: returns a
// deterministic nullspace vector of the (rows x cols) matrix, or nothing if
// the matrix has full column rank. When several free columns exist the first
// one is set to 1 with later free columns at 0; `skip` asks for the
// (skip+1)-th such choice.
std::optional<std::vector<Rat>> nullspace_vector(std::vector<std::vector<Rat>> M, size_t cols,
                                                 int skip = 0);

}  // namespace regenum
