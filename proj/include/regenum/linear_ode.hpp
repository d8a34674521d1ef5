#pragma once

#include <string>
#include <vector>

#include "regenum/ratpoly.hpp"

namespace regenum {

// sum_{k=0..K} q[k](t) f^{(k)}(t) = 0, q[K] not identically zero.
struct LinearODE {
    std::vector<RatPoly> q;

    int order() const { return static_cast<int>(q.size()) - 1; }
    const RatPoly& leading() const { return q.back(); }

    void canonicalize();  // joint content out, positive leading coefficient
    std::string canonical_text() const;
    bool operator==(const LinearODE&) const = default;
};

}  // namespace regenum
