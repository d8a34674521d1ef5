#pragma once

#include <span>
#include <string>
#include <vector>

#include "regenum/ratpoly.hpp"

namespace regenum {

// Linear recurrence with polynomial coefficients:
//   sum_{j=0..r} coeff[j](n) a_{n+j} = 0   for every n >= valid_from.
// initial carries a_0 .. a_{valid_from + r - 1}; counting recurrences often
// need the explicit validity offset for their first few terms.
struct PRecurrence {
    std::vector<RatPoly> coeff;
    long valid_from = 0;
    std::vector<Rat> initial;
    bool egf_fitted = false;  // inferred through the a_n = n! b_n change of variable

    int order() const { return static_cast<int>(coeff.size()) - 1; }

    // Joint integer content removed; leading polynomial gets a positive
    // leading coefficient.
    void canonicalize();

    // Max degree over the coefficient polynomials.
    int degree() const;

    // True iff every applicable window of `terms` satisfies the recurrence.
    bool annihilates(std::span<const Rat> terms) const;

    // Canonical one-line form for golden files.
    std::string canonical_text() const;
};

// Terms a_0..a_N. Prefix comes from `initial`; past it each step divides by
// coeff[r](n), and a zero leading coefficient raises std::runtime_error
// naming the blocking n.
std::vector<Rat> extend_terms(const PRecurrence& rec, long N);

}  // namespace regenum
