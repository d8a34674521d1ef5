#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace regenum {

// Monomial p_1^{e_1} p_2^{e_2} ... in the power-sum generators.
// exps()[i] is the exponent of p_{i+1}; trailing zeros are trimmed.
// Weighted degree gives p_i degree i.
class PowerMonomial {
public:
    PowerMonomial() = default;

    // p_var^exp (var is 1-based)
    static PowerMonomial var(int v, unsigned exp = 1);

    const std::vector<uint32_t>& exps() const { return e_; }
    bool is_one() const { return e_.empty(); }

    long weight() const {
        long w = 0;
        for (size_t i = 0; i < e_.size(); ++i) w += static_cast<long>(i + 1) * e_[i];
        return w;
    }

    unsigned exponent(int v) const {
        if (v < 1 || static_cast<size_t>(v) > e_.size()) return 0;
        return e_[static_cast<size_t>(v) - 1];
    }

    int max_var() const { return static_cast<int>(e_.size()); }

    PowerMonomial times(const PowerMonomial& o) const;
    // Divide by p_v once; exponent of v must be positive.
    PowerMonomial divided_by_var(int v) const;
    // p_i -> p_{i*n}
    PowerMonomial stretched(int n) const;

    bool operator==(const PowerMonomial& o) const { return e_ == o.e_; }
    std::string str() const;

    struct GradedLess {
        // Ascending weight, then descending lex on exponent vectors, so
        // p1^2 sorts before p2 within weight 2.
        bool operator()(const PowerMonomial& a, const PowerMonomial& b) const {
            long wa = a.weight(), wb = b.weight();
            if (wa != wb) return wa < wb;
            return a.e_ > b.e_;
        }
    };

private:
    std::vector<uint32_t> e_;
    void trim() {
        while (!e_.empty() && e_.back() == 0) e_.pop_back();
    }
    friend class PowerSumPoly;
};

}  // namespace regenum
