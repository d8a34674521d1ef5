#include "regenum/symfunc.hpp"

#include <stdexcept>

namespace regenum {

PowerSumPoly h_poly(int k) {
    if (k < 0) throw std::invalid_argument("h_poly: negative index");
    PowerSumPoly r;
    for (const auto& lambda : partitions_of(k))
        r.add_term(monomial_of(lambda), make_rat(Int(1), z_of(lambda)));
    return r;
}

PowerSumPoly e_poly(int k) {
    if (k < 0) throw std::invalid_argument("e_poly: negative index");
    PowerSumPoly r;
    for (const auto& lambda : partitions_of(k)) {
        int sign = ((k - lambda.length()) % 2 == 0) ? 1 : -1;
        r.add_term(monomial_of(lambda), make_rat(Int(sign), z_of(lambda)));
    }
    return r;
}

int euler_phi(int n) {
    int result = n, m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

PowerSumPoly cycle_z_poly(int k) {
    if (k < 1) throw std::invalid_argument("cycle_z_poly: index must be >= 1");
    PowerSumPoly r;
    for (int d = 1; d <= k; ++d) {
        if (k % d != 0) continue;
        r.add_term(PowerMonomial::var(d, static_cast<unsigned>(k / d)),
                   make_rat(euler_phi(d), k));
    }
    return r;
}

PowerSumPoly power_poly(int k) {
    if (k < 1) throw std::invalid_argument("power_poly: index must be >= 1");
    return PowerSumPoly::var(1, static_cast<unsigned>(k));
}

PowerSumPoly adjoint_h_step(const PowerSumPoly& A, const PowerSumPoly& g, int i, int max_var) {
    if (i < 1) throw std::invalid_argument("adjoint_h_step: index must be >= 1");
    if (i > max_var)
        throw std::invalid_argument("adjoint_h_step: operator index exceeds variable truncation");
    if (g.constant_term() != 0)
        throw std::invalid_argument("adjoint_h_step: exponent polynomial has a constant term");

    // Cache the needed derivatives of g.
    std::vector<PowerSumPoly> dg(static_cast<size_t>(i) + 1);
    for (int j = 1; j <= i; ++j) dg[static_cast<size_t>(j)] = derivative(g, j);

    PowerSumPoly result(A.weight_bound());
    for (const auto& lambda : partitions_of(i)) {
        PowerSumPoly B = A;
        Int part_product = 1;
        for (int j : lambda.parts) {
            // lambda_j * d/dp_j acting on B e^g
            B = add(derivative(B, j), mul(B, dg[static_cast<size_t>(j)]));
            part_product *= j;
        }
        result = add(result, scale(B, make_rat(part_product, z_of(lambda))));
    }
    return result;
}

}  // namespace regenum
