#pragma once

#include <vector>
#include "berndt/quad.hpp"
#include "berndt/real.hpp"

namespace berndt {

// Multiple zeta over the N-dimensional lattice:
//   sum_{n in N_0^N} (prod_j signs[j]^(n_j)) (omega + sum n_j a_j)^(-s)
// Convergence: Re(s) > N when any sign is +1, Re(s) > N-1 when all are -1.
struct BarnesParams {
    long N;
    Real s;
    Complex omega;
    std::vector<Complex> weights;
    std::vector<int> signs;

    bool conjugate_closed() const;
    void validate() const;
};

// Lemniscatic four-weight parameter set c4 = (2+2i, 2-2i, 1+i, 1-i),
// omega = 3, all signs +1.
BarnesParams c4_params(long m, long bits);

// Direct summation.  N = 1 runs certified to full precision
// (Euler-Maclaurin for the plain case, Euler transform for the
// alternating case); N >= 2 sums shells t = n_1+...+n_N under a point
// budget and reports the honest geometric tail bound, which may exceed
// the target precision for slowly converging parameters.
Complex barnes_zeta(const BarnesParams& p, const Prec& ctx,
                    Real* tail_bound = nullptr);

// Fixed shell count variant (testing hook for the tail-bound property).
Complex barnes_shell_sum(const BarnesParams& p, long shells, const Prec& ctx,
                         Real* tail_bound = nullptr);

// (1/Gamma(s)) integral_0^inf u^(s-1) e^(-omega u)
//                prod_j 1/(1 - signs[j] e^(-a_j u)) du
Complex barnes_via_laplace(const BarnesParams& p, const Prec& ctx,
                           Real* err_bound = nullptr);

// |integrate_mixed(4m-3) - 4 (4m-3)! * laplace-route zeta_4|
Real verify_thm72(long m, const Prec& ctx);

} // namespace berndt
