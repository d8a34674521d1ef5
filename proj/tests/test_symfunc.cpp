#include <map>
#include <vector>

#include "doctest.h"
#include "regenum/powersum_poly.hpp"
#include "regenum/symfunc.hpp"

using namespace regenum;

namespace {

// Orbit counter for colourings of a k-cycle under rotation: paints each of
// the k positions with one of c colours, canonicalizes by rotation, counts
// distinct classes. Independent of the cycle-index formula.
long brute_cycle_colourings(int k, int c) {
    std::map<std::vector<int>, bool> seen;
    std::vector<int> col(static_cast<size_t>(k), 0);
    long orbits = 0;
    while (true) {
        std::vector<int> best = col;
        std::vector<int> rot = col;
        for (int r = 1; r < k; ++r) {
            std::rotate(rot.begin(), rot.begin() + 1, rot.end());
            if (rot < best) best = rot;
        }
        if (!seen[best]) {
            seen[best] = true;
        }
        size_t i = 0;
        while (i < col.size() && col[i] == c - 1) col[i++] = 0;
        if (i == col.size()) break;
        ++col[i];
    }
    for (const auto& [key, v] : seen) (void)key, orbits += v ? 1 : 0;
    return orbits;
}

Rat eval_all_vars(const PowerSumPoly& f, long value) {
    // substitute p_i := value for every i (the c-colour specialization)
    Rat acc(0);
    for (const auto& [m, coef] : f.terms()) {
        Rat term = coef;
        for (size_t i = 0; i < m.exps().size(); ++i)
            for (unsigned e = 0; e < m.exps()[i]; ++e) term *= value;
        acc += term;
    }
    return acc;
}

// Tiny exact solver: returns x with M x = rhs (M square, invertible).
std::vector<Rat> solve_linear(std::vector<std::vector<Rat>> M, std::vector<Rat> rhs) {
    size_t n = M.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && M[piv][col] == 0) ++piv;
        REQUIRE(piv < n);
        std::swap(M[piv], M[col]);
        std::swap(rhs[piv], rhs[col]);
        for (size_t r = 0; r < n; ++r) {
            if (r == col || M[r][col] == 0) continue;
            Rat f = M[r][col] / M[col][col];
            for (size_t c = col; c < n; ++c) M[r][c] -= f * M[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    std::vector<Rat> x(n);
    for (size_t i = 0; i < n; ++i) x[i] = rhs[i] / M[i][i];
    return x;
}

}  // namespace

TEST_CASE("small symmetric functions in the p basis") {
    PowerSumPoly h2;
    h2.add_term(PowerMonomial::var(1, 2), make_rat(1, 2));
    h2.add_term(PowerMonomial::var(2), make_rat(1, 2));
    CHECK(h_poly(2) == h2);

    PowerSumPoly e2;
    e2.add_term(PowerMonomial::var(1, 2), make_rat(1, 2));
    e2.add_term(PowerMonomial::var(2), make_rat(-1, 2));
    CHECK(e_poly(2) == e2);

    CHECK(power_poly(4) == PowerSumPoly::var(1, 4));
    CHECK(h_poly(0) == PowerSumPoly::constant(Rat(1)));
    CHECK(e_poly(0) == PowerSumPoly::constant(Rat(1)));
}

TEST_CASE("Newton recurrences hold as polynomial identities") {
    for (int k = 1; k <= 8; ++k) {
        PowerSumPoly lhs_e = scale(e_poly(k), Rat(k));
        PowerSumPoly rhs_e;
        PowerSumPoly lhs_h = scale(h_poly(k), Rat(k));
        PowerSumPoly rhs_h;
        for (int i = 1; i <= k; ++i) {
            PowerSumPoly pi = PowerSumPoly::var(i);
            rhs_e = add(rhs_e, scale(mul(pi, e_poly(k - i)), Rat(i % 2 == 1 ? 1 : -1)));
            rhs_h = add(rhs_h, mul(pi, h_poly(k - i)));
        }
        CHECK(lhs_e == rhs_e);
        CHECK(lhs_h == rhs_h);
    }
}

TEST_CASE("cycle index matches the Burnside orbit count") {
    // 3-colourings of the 3-cycle: standard formula gives 11
    CHECK(eval_all_vars(cycle_z_poly(3), 3) == 11);
    for (int k = 2; k <= 6; ++k)
        for (int c = 1; c <= 4; ++c)
            CHECK(eval_all_vars(cycle_z_poly(k), c) == Rat(brute_cycle_colourings(k, c)));

    PowerSumPoly c3;
    c3.add_term(PowerMonomial::var(1, 3), make_rat(1, 3));
    c3.add_term(PowerMonomial::var(3), make_rat(2, 3));
    CHECK(cycle_z_poly(3) == c3);
}

TEST_CASE("euler phi") {
    std::vector<int> expected{1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4};
    for (int n = 1; n <= 12; ++n) CHECK(euler_phi(n) == expected[static_cast<size_t>(n - 1)]);
}

TEST_CASE("h is dual to the monomial basis under the scalar product") {
    // For each weight w <= 6, solve for the m_mu in the p basis from
    // <p_lambda, p_mu> = delta z and the h expansion, then check
    // <h_lambda, m_mu> = delta.
    for (int w = 1; w <= 6; ++w) {
        auto parts = partitions_of(w);
        size_t n = parts.size();
        // h_lambda in the p basis
        std::vector<PowerSumPoly> hl(n);
        for (size_t i = 0; i < n; ++i) {
            PowerSumPoly prod = PowerSumPoly::constant(Rat(1));
            for (int part : parts[i].parts) prod = mul(prod, h_poly(part));
            hl[i] = prod;
        }
        // m_mu = sum_nu c_nu p_nu with <h_lambda, m_mu> = delta:
        // rows lambda, unknowns c_nu: sum_nu A[lambda][nu] z_nu c_nu = delta.
        for (size_t mu = 0; mu < n; ++mu) {
            std::vector<std::vector<Rat>> M(n, std::vector<Rat>(n));
            std::vector<Rat> rhs(n, Rat(0));
            for (size_t lam = 0; lam < n; ++lam)
                for (size_t nu = 0; nu < n; ++nu)
                    M[lam][nu] = hl[lam].coeff(monomial_of(parts[nu])) * Rat(z_of(parts[nu]));
            rhs[mu] = 1;
            auto c = solve_linear(M, rhs);
            PowerSumPoly m_mu;
            for (size_t nu = 0; nu < n; ++nu) m_mu.add_term(monomial_of(parts[nu]), c[nu]);
            for (size_t lam = 0; lam < n; ++lam)
                CHECK(scalar_product(hl[lam], m_mu) == (lam == mu ? 1 : 0));
        }
    }
}
