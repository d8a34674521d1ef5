#include <random>

#include "doctest.h"
#include "regenum/powersum_poly.hpp"
#include "regenum/symfunc.hpp"

using namespace regenum;

namespace {

PowerSumPoly random_poly(std::mt19937& rng, int max_var, int max_weight, int max_terms) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> var(1, max_var);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 3);
    PowerSumPoly r;
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        PowerMonomial m;
        while (true) {
            int v = var(rng);
            if (m.weight() + v > max_weight) break;
            m = m.times(PowerMonomial::var(v));
            if (rng() % 3 == 0) break;
        }
        r.add_term(m, make_rat(num(rng), den(rng)));
    }
    return r;
}

}  // namespace

TEST_CASE("h_1 adjoint on exp(g) is d/dp_1 of the exponent") {
    PowerSumPoly g;
    for (int i = 1; i <= 5; ++i) g.add_term(PowerMonomial::var(i), make_rat(1, i));
    PowerSumPoly a = adjoint_h_step(PowerSumPoly::constant(Rat(1)), g, 1, 5);
    CHECK(a == PowerSumPoly::constant(Rat(1)));  // d/dp_1 of sum p_i/i
}

TEST_CASE("two-regular first step has no constant term") {
    // exponent of the asymmetry series of sets-of-2-sets, truncated to p_1,p_2
    PowerSumPoly g;
    g.add_term(PowerMonomial::var(1, 2), make_rat(1, 2));
    g.add_term(PowerMonomial::var(2), make_rat(-1, 2));
    g.add_term(PowerMonomial::var(2, 2), make_rat(-1, 4));
    PowerSumPoly a = adjoint_h_step(PowerSumPoly::constant(Rat(1)), g, 2, 2);
    CHECK(a.constant_term() == 0);
    // worked by hand: (d2 g) + (1 + p1^2)/2 = p1^2/2 - p2/2
    CHECK(a == e_poly(2));
}

TEST_CASE("adjointness: <h_i A, B> = <A, h_i-perp B>") {
    std::mt19937 rng(424242);
    PowerSumPoly zero_g;
    for (int i = 1; i <= 3; ++i) {
        for (int trial = 0; trial < 10; ++trial) {
            PowerSumPoly A = random_poly(rng, 4, 6, 6);
            PowerSumPoly B = random_poly(rng, 4, 6, 6);
            Rat lhs = scalar_product(mul(h_poly(i), A), B);
            Rat rhs = scalar_product(A, adjoint_h_step(B, zero_g, i, 4));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("adjoint_h_step rejects indices beyond the truncation") {
    PowerSumPoly g;
    g.add_term(PowerMonomial::var(1, 2), make_rat(1, 2));
    CHECK_THROWS_AS(adjoint_h_step(PowerSumPoly::constant(Rat(1)), g, 3, 2),
                    std::invalid_argument);
}
