#pragma once

#include <string>
#include <vector>

#include "regenum/species.hpp"

namespace regenum {

// Finite set S of admissible degrees.
struct RegularityProfile {
    std::vector<int> degrees;  // sorted, unique, positive

    static RegularityProfile of(std::vector<int> v);
    int max_degree() const { return degrees.empty() ? 0 : degrees.back(); }
    std::string str() const;
    bool operator==(const RegularityProfile&) const = default;
};

struct Sequence {
    std::vector<Int> terms;
    std::string class_name;
    RegularityProfile profile;
    std::string method;             // "adjoint" or "direct"
    std::string generator_version;  // engine version string
};

struct EnumerateOptions {
    int max_degree_limit = 6;  // config knob, not a hard wall
};

// a_n = n! [t^n] <F, exp(t sum_{i in S} h_i)> computed by iterating the
// adjoint (Hammond) operator D = sum h_i^perp on the A of F = A exp(g).
Sequence count_adjoint(const SpeciesExpr& expr, const RegularityProfile& S, long N,
                       const EnumerateOptions& opts = {});

// Independent witness: expands F = exp(g) to weight N*max(S) and applies the
// scalar product against powers of sum h_i termwise.
Sequence count_direct(const SpeciesExpr& expr, const RegularityProfile& S, long N,
                      const EnumerateOptions& opts = {});

struct IdentityReport {
    bool match;
    long first_divergence;  // -1 when match
};

IdentityReport verify_identity(const SpeciesExpr& lhs_expr, const RegularityProfile& lhs_S,
                               const SpeciesExpr& rhs_expr, const RegularityProfile& rhs_S,
                               long N, const EnumerateOptions& opts = {});

}  // namespace regenum
