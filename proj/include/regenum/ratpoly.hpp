#pragma once

#include <string>
#include <vector>

#include "regenum/rational.hpp"

namespace regenum {

// Dense univariate polynomial over Q; coefficient i multiplies n^i.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    RatPoly(std::initializer_list<long> coeffs);

    static RatPoly constant(const Rat& v);
    static RatPoly variable();                       // n
    static RatPoly monomial(int deg, const Rat& v);  // v * n^deg
    // n (n-1) ... (n-k+1)
    static RatPoly falling_factorial(int k);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rat coeff(int i) const {
        return (i < 0 || i >= static_cast<int>(c_.size())) ? Rat(0) : c_[static_cast<size_t>(i)];
    }
    Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }
    const std::vector<Rat>& coeffs() const { return c_; }

    Rat eval(const Rat& x) const;
    Rat eval_int(long n) const { return eval(Rat(n)); }

    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly scaled(const Rat& v) const;
    bool operator==(const RatPoly&) const = default;

    RatPoly shifted(const Rat& s) const;  // p(n + s)
    RatPoly derivative() const;

    // Rational c > 0 with p = +-c * primitive(p), primitive having coprime
    // integer coefficients. Zero polynomial has content 0.
    Rat content() const;

    // Coefficients gamma_s with p(n) = sum_s gamma_s * (n - base)(n - base - 1)...
    // (falling factorials shifted to start at `base`), via Newton forward
    // differences at base.
    std::vector<Rat> falling_coeffs(long base = 0) const;

    std::string str(const std::string& var = "n") const;

private:
    std::vector<Rat> c_;
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

// Polynomial gcd over Q, monic result; gcd(0,0) = 0.
RatPoly poly_gcd(RatPoly a, RatPoly b);
// Exact division; throws std::invalid_argument if the remainder is nonzero.
RatPoly poly_divexact(const RatPoly& num, const RatPoly& den);
// Product of squarefree part: p / gcd(p, p').
RatPoly squarefree_part(const RatPoly& p);

}  // namespace regenum
