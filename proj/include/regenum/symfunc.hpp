#pragma once

#include "regenum/powersum_poly.hpp"

namespace regenum {

// h_k in the p basis: sum over lambda |- k of p_lambda / z_lambda.
PowerSumPoly h_poly(int k);
// e_k in the p basis: sum over lambda |- k of (-1)^{k - len(lambda)} p_lambda / z_lambda.
PowerSumPoly e_poly(int k);
// Cycle index of the k-cycle: (1/k) sum_{d|k} phi(d) p_d^{k/d}.
PowerSumPoly cycle_z_poly(int k);
// p_1^k (lists / k-arrays).
PowerSumPoly power_poly(int k);

// Euler totient, small arguments.
int euler_phi(int n);

// Hammond operator step: returns A' with h_i^perp(A e^g) = A' e^g, where
// h_i^perp = sum_{lambda |- i} (1/z_lambda) prod_j (lambda_j d/dp_{lambda_j})
// and a single derivative acts by d_j(A e^g) = (d_j A + A d_j g) e^g.
// max_var guards against operating beyond the truncation: i > max_var throws.
PowerSumPoly adjoint_h_step(const PowerSumPoly& A, const PowerSumPoly& g, int i, int max_var);

}  // namespace regenum
