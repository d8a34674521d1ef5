#include "regenum/ratpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace regenum {

RatPoly::RatPoly(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.push_back(Rat(v));
    trim();
}

RatPoly RatPoly::constant(const Rat& v) {
    RatPoly p;
    if (v != 0) p.c_.push_back(v);
    return p;
}

RatPoly RatPoly::variable() { return monomial(1, Rat(1)); }

RatPoly RatPoly::monomial(int deg, const Rat& v) {
    RatPoly p;
    if (v == 0) return p;
    p.c_.assign(static_cast<size_t>(deg) + 1, Rat(0));
    p.c_.back() = v;
    return p;
}

RatPoly RatPoly::falling_factorial(int k) {
    RatPoly p = constant(Rat(1));
    for (int i = 0; i < k; ++i) p = p * (variable() - constant(Rat(i)));
    return p;
}

Rat RatPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    RatPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
    r.trim();
    return r;
}

RatPoly RatPoly::operator-(const RatPoly& o) const { return *this + o.scaled(Rat(-1)); }

RatPoly RatPoly::operator*(const RatPoly& o) const {
    RatPoly r;
    if (is_zero() || o.is_zero()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    r.trim();
    return r;
}

RatPoly RatPoly::scaled(const Rat& v) const {
    RatPoly r;
    if (v == 0) return r;
    r.c_ = c_;
    for (auto& x : r.c_) x *= v;
    return r;
}

RatPoly RatPoly::shifted(const Rat& s) const {
    // Horner in (n + s)
    RatPoly r;
    RatPoly shift_var = variable() + constant(s);
    for (size_t i = c_.size(); i-- > 0;) r = r * shift_var + constant(c_[i]);
    return r;
}

RatPoly RatPoly::derivative() const {
    RatPoly r;
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return r;
}

Rat RatPoly::content() const {
    if (is_zero()) return Rat(0);
    Int num_gcd = 0, den_lcm = 1;
    for (const Rat& x : c_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
    }
    return make_rat(num_gcd, den_lcm);
}

std::vector<Rat> RatPoly::falling_coeffs(long base) const {
    std::vector<Rat> gamma;
    RatPoly p = shifted(Rat(base));  // expand around the base point
    Rat fact(1);
    long s = 0;
    while (!p.is_zero()) {
        gamma.push_back(p.eval_int(0) / fact);
        p = p.shifted(Rat(1)) - p;  // forward difference
        ++s;
        fact *= s;
    }
    return gamma;
}

std::string RatPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        os << c_[i].get_str();
        if (i >= 1) os << "*" << var;
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os.str();
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        // remainder of a by b
        RatPoly r = a;
        while (!r.is_zero() && r.degree() >= b.degree()) {
            Rat f = r.leading() / b.leading();
            int d = r.degree() - b.degree();
            r = r - b * RatPoly::monomial(d, f);
        }
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    return a.scaled(Rat(1) / a.leading());  // monic
}

RatPoly poly_divexact(const RatPoly& num, const RatPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("poly_divexact: division by zero polynomial");
    RatPoly r = num, q;
    while (!r.is_zero() && r.degree() >= den.degree()) {
        Rat f = r.leading() / den.leading();
        int d = r.degree() - den.degree();
        RatPoly t = RatPoly::monomial(d, f);
        q = q + t;
        r = r - den * t;
    }
    if (!r.is_zero()) throw std::invalid_argument("poly_divexact: inexact division");
    return q;
}

RatPoly squarefree_part(const RatPoly& p) {
    if (p.is_zero() || p.degree() == 0) return p;
    RatPoly g = poly_gcd(p, p.derivative());
    if (g.degree() == 0) return p;
    return poly_divexact(p, g);
}

}  // namespace regenum
