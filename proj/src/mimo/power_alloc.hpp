#pragma once

#include <armadillo>
#include <stdexcept>
#include <string_view>

#include "mimo/sinr.hpp"

namespace mimo {

enum class Strategy { equal, maxmin, maxprod };

const char* to_string(Strategy s);
Strategy strategy_from_string(std::string_view s);

// Raised when a power allocation solver cannot certify its result.
struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Power vector plus the solver's own evidence. MaxMin carries the common
// SINR value and the bisection gap; MaxProd the final projected-gradient
// norm and iteration count.
struct AllocationResult {
  arma::vec rho;  // W
  Strategy strategy = Strategy::equal;

  // maxmin certificate
  double t_star = 0.0;         // common SINR at the optimum
  double bisection_gap = 0.0;  // final relative bracket width
  double sinr_spread = 0.0;    // max_k |gamma_k - t*| / t*

  // maxprod certificate
  double grad_norm = 0.0;  // final projected-gradient norm (relative)
  int iterations = 0;
  bool converged = true;
};

// rho_k = Pmax / K.
AllocationResult equal_power(std::size_t K, double p_max);

// Maximizes min_k gamma_k subject to sum rho <= Pmax. Bisection on the
// common SINR target t; each probe solves the K x K equal-SINR linear
// system and is feasible iff the solution is elementwise nonnegative with
// sum <= Pmax. The final power vector is scaled to consume Pmax and
// polished so that all SINRs agree to ~1e-12 relative.
AllocationResult maxmin_allocation(const SinrCoefficients& coeffs,
                                   double p_max);

// Maximizes prod_k gamma_k subject to sum rho <= Pmax. Concave in
// q = log(rho); solved by projected gradient ascent with backtracking line
// search, renormalizing sum(exp(q)) = Pmax by a uniform log-shift after
// every step. Starts from equal power.
AllocationResult maxprod_allocation(const SinrCoefficients& coeffs,
                                    double p_max);

AllocationResult allocate(Strategy s, const SinrCoefficients& coeffs,
                          double p_max);

}  // namespace mimo
