#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "regenum/monomial.hpp"
#include "regenum/partition.hpp"
#include "regenum/rational.hpp"

namespace regenum {

// Truncated series coefficients: c[n] is the coefficient of t^n.
struct UniSeries {
    std::vector<Rat> coeff;

    long order_bound() const { return static_cast<long>(coeff.size()) - 1; }
    Rat at(long n) const {
        if (n < 0 || n >= static_cast<long>(coeff.size())) return Rat(0);
        return coeff[static_cast<size_t>(n)];
    }
    bool operator==(const UniSeries&) const = default;
};

// Sparse exact polynomial in p_1..p_m over Q, the carrier for truncated
// symmetric series in the power-sum basis. An optional weight bound W
// records that terms of weighted degree > W have been discarded; it is
// combined as min() under ring operations so stale truncations cannot mix.
class PowerSumPoly {
public:
    using TermMap = std::map<PowerMonomial, Rat, PowerMonomial::GradedLess>;
    static constexpr long kUnbounded = -1;

    PowerSumPoly() = default;
    explicit PowerSumPoly(long weight_bound) : bound_(weight_bound) {}

    static PowerSumPoly zero(long weight_bound = kUnbounded) { return PowerSumPoly(weight_bound); }
    static PowerSumPoly constant(const Rat& c, long weight_bound = kUnbounded);
    static PowerSumPoly var(int v, unsigned exp = 1, long weight_bound = kUnbounded);
    static PowerSumPoly monomial(const PowerMonomial& m, const Rat& c,
                                 long weight_bound = kUnbounded);

    const TermMap& terms() const { return terms_; }
    long weight_bound() const { return bound_; }
    bool bounded() const { return bound_ != kUnbounded; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    Rat coeff(const PowerMonomial& m) const;
    Rat constant_term() const { return coeff(PowerMonomial()); }
    long max_weight() const;  // 0 for the zero polynomial
    long min_term_weight() const;  // weight of lightest nonzero term; 0 for zero poly
    int max_var() const;

    // Accumulate c on monomial m, dropping the entry if it cancels and
    // ignoring it when it exceeds the weight bound.
    void add_term(const PowerMonomial& m, const Rat& c);

    PowerSumPoly truncated(long W) const;
    PowerSumPoly restricted_vars(int m) const;  // drop terms using p_i with i > m
    PowerSumPoly with_bound(long W) const;      // retag only; requires terms already within W

    bool operator==(const PowerSumPoly& o) const { return terms_ == o.terms_; }

    friend PowerSumPoly add(const PowerSumPoly& a, const PowerSumPoly& b);
    friend PowerSumPoly sub(const PowerSumPoly& a, const PowerSumPoly& b);
    friend PowerSumPoly scale(const PowerSumPoly& a, const Rat& c);
    friend PowerSumPoly mul(const PowerSumPoly& a, const PowerSumPoly& b);
    friend PowerSumPoly mul_serial(const PowerSumPoly& a, const PowerSumPoly& b);
    friend PowerSumPoly mul_parallel(const PowerSumPoly& a, const PowerSumPoly& b);

private:
    TermMap terms_;
    long bound_ = kUnbounded;
};

PowerSumPoly add(const PowerSumPoly& a, const PowerSumPoly& b);
PowerSumPoly sub(const PowerSumPoly& a, const PowerSumPoly& b);
PowerSumPoly scale(const PowerSumPoly& a, const Rat& c);

// Product truncated to min of the operands' weight bounds. mul() dispatches
// between the serial reference kernel and the OpenMP kernel by problem size;
// both produce identical results (arithmetic is exact).
PowerSumPoly mul(const PowerSumPoly& a, const PowerSumPoly& b);
PowerSumPoly mul_serial(const PowerSumPoly& a, const PowerSumPoly& b);
PowerSumPoly mul_parallel(const PowerSumPoly& a, const PowerSumPoly& b);

// d/dp_v
PowerSumPoly derivative(const PowerSumPoly& a, int v);

// sum_{j>=0} g^j / j! truncated to weighted degree <= W.
// Throws std::invalid_argument if g has a nonzero constant term.
PowerSumPoly exp_trunc(const PowerSumPoly& g, long W);

// Plethysm by p_n: every p_i becomes p_{i*n}; the weight bound scales by n.
PowerSumPoly plethysm_pn(const PowerSumPoly& a, int n);

// Hall scalar product: sum over common monomials of
// coeff_a * coeff_b * prod_i (i^{e_i} e_i!).
Rat scalar_product(const PowerSumPoly& a, const PowerSumPoly& b);
Rat scalar_product_serial(const PowerSumPoly& a, const PowerSumPoly& b);
Rat scalar_product_parallel(const PowerSumPoly& a, const PowerSumPoly& b);

// z factor of a monomial read as a partition: prod_i i^{e_i} e_i!.
Int monomial_z(const PowerMonomial& m);

// Image under theta (p_1 -> t, p_n -> 0 for n > 1), truncated at t^N.
UniSeries theta(const PowerSumPoly& a, long N);
// Same substitution as theta: the exponential-generating specialization.
UniSeries specialize_egf(const PowerSumPoly& a, long N);
// p_i -> t^i, truncated at t^N.
UniSeries specialize_ogf(const PowerSumPoly& a, long N);

PowerMonomial monomial_of(const Partition& lambda);

// Canonical textual form used by golden files: graded-lex term order,
// each term "c * p1^a1*p2^a2", rationals as num or num/den.
std::string to_canonical_string(const PowerSumPoly& a);

}  // namespace regenum
