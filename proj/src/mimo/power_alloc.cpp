#include "mimo/power_alloc.hpp"

#include <cmath>
#include <string>

namespace mimo {

const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::equal: return "equal";
    case Strategy::maxmin: return "maxmin";
    default: return "maxprod";
  }
}

Strategy strategy_from_string(std::string_view s) {
  if (s == "equal") return Strategy::equal;
  if (s == "maxmin") return Strategy::maxmin;
  if (s == "maxprod") return Strategy::maxprod;
  throw std::invalid_argument("unknown strategy: " + std::string(s));
}

namespace {

void check_instance(const SinrCoefficients& coeffs, double p_max) {
  if (coeffs.a.n_elem == 0)
    throw std::invalid_argument("power allocation: empty instance");
  if (p_max <= 0.0)
    throw std::invalid_argument("power allocation: Pmax must be > 0");
  if (coeffs.sigma2 <= 0.0)
    throw std::invalid_argument("power allocation: sigma2 must be > 0");
  if (coeffs.a.min() <= 0.0)
    throw std::invalid_argument(
        "power allocation: degenerate instance with a_k <= 0");
  if (coeffs.G.min() < 0.0)
    throw std::invalid_argument("power allocation: negative second moment");
}

// Equal-SINR-at-t power vector: rho_k a_k (1 + t) = t (sum_i G(k,i) rho_i
// + sigma2). Returns false when the system is singular or the solution
// is not a feasible power vector.
bool equal_sinr_powers(const SinrCoefficients& coeffs, double t, double p_max,
                       arma::vec& rho_out) {
  const arma::uword K = coeffs.a.n_elem;
  arma::mat lhs = -coeffs.G;
  for (arma::uword k = 0; k < K; ++k)
    lhs(k, k) += coeffs.a(k) * (1.0 + t) / t;
  arma::vec rhs(K, arma::fill::value(coeffs.sigma2));
  arma::vec rho;
  if (!arma::solve(rho, lhs, rhs, arma::solve_opts::no_approx)) return false;
  if (!rho.is_finite() || rho.min() < 0.0) return false;
  if (arma::accu(rho) > p_max) return false;
  rho_out = std::move(rho);
  return true;
}

}  // namespace

AllocationResult equal_power(std::size_t K, double p_max) {
  if (K == 0) throw std::invalid_argument("equal_power: K must be >= 1");
  if (p_max <= 0.0) throw std::invalid_argument("equal_power: Pmax must be > 0");
  AllocationResult res;
  res.strategy = Strategy::equal;
  res.rho = arma::vec(K, arma::fill::value(p_max / static_cast<double>(K)));
  return res;
}

AllocationResult maxmin_allocation(const SinrCoefficients& coeffs,
                                   double p_max) {
  check_instance(coeffs, p_max);
  const arma::uword K = coeffs.a.n_elem;

  AllocationResult res;
  res.strategy = Strategy::maxmin;

  if (K == 1) {
    res.rho = arma::vec{p_max};
    res.t_star = sinr(coeffs, res.rho)(0);
    return res;
  }

  // Guaranteed overestimate of any achievable common SINR.
  double t_hi = (p_max * coeffs.a / coeffs.sigma2).max();
  double t_lo = 0.0;  // trivially feasible (zero power)
  arma::vec rho_best;

  constexpr int kMaxBisection = 200;
  constexpr double kGapTol = 1e-8;
  int iter = 0;
  for (; iter < kMaxBisection; ++iter) {
    if ((t_hi - t_lo) / t_hi <= kGapTol) break;
    const double t_mid = 0.5 * (t_lo + t_hi);
    arma::vec rho;
    if (equal_sinr_powers(coeffs, t_mid, p_max, rho)) {
      t_lo = t_mid;
      rho_best = std::move(rho);
    } else {
      t_hi = t_mid;
    }
  }
  res.bisection_gap = (t_hi - t_lo) / t_hi;
  res.iterations = iter;
  if (res.bisection_gap > kGapTol)
    throw SolverError("maxmin: bisection did not converge after " +
                      std::to_string(kMaxBisection) + " steps (gap " +
                      std::to_string(res.bisection_gap) + ")");
  if (rho_best.empty())
    throw SolverError("maxmin: no feasible SINR target found");

  // Spend the full budget; uniform up-scaling increases every SINR.
  rho_best *= p_max / arma::accu(rho_best);

  // Polish: normalized fixed-point iteration on the per-unit-SINR powers
  // u_k = (sum_i G(k,i) rho_i - a_k rho_k + sigma2) / a_k. At the fixed
  // point all SINRs coincide and sum(rho) = Pmax exactly.
  arma::vec rho = rho_best;
  for (int i = 0; i < 200; ++i) {
    arma::vec u = (coeffs.G * rho - coeffs.a % rho +
                   arma::vec(K, arma::fill::value(coeffs.sigma2))) /
                  coeffs.a;
    rho = u * (p_max / arma::accu(u));
    const arma::vec gamma = sinr(coeffs, rho);
    const double spread = (gamma.max() - gamma.min()) / gamma.min();
    if (spread <= 1e-12) break;
  }

  const arma::vec gamma = sinr(coeffs, rho);
  res.rho = std::move(rho);
  res.t_star = gamma.min();
  res.sinr_spread = (gamma.max() - gamma.min()) / res.t_star;
  return res;
}

namespace {

struct MaxProdObjective {
  const SinrCoefficients& coeffs;

  // sum_k log gamma_k at rho.
  double value(const arma::vec& rho) const {
    double v = 0.0;
    for (arma::uword k = 0; k < rho.n_elem; ++k) {
      const double denom = arma::dot(coeffs.G.row(k), rho) -
                           rho(k) * coeffs.a(k) + coeffs.sigma2;
      v += std::log(rho(k) * coeffs.a(k) / denom);
    }
    return v;
  }

  // d/dq_j of sum_k log gamma_k(exp(q)).
  arma::vec gradient_q(const arma::vec& rho) const {
    const arma::uword K = rho.n_elem;
    arma::vec inv_denom(K);
    for (arma::uword k = 0; k < K; ++k)
      inv_denom(k) = 1.0 / (arma::dot(coeffs.G.row(k), rho) -
                            rho(k) * coeffs.a(k) + coeffs.sigma2);
    arma::vec g(K);
    for (arma::uword j = 0; j < K; ++j) {
      double t = arma::dot(coeffs.G.col(j), inv_denom) -
                 coeffs.a(j) * inv_denom(j);
      g(j) = 1.0 - rho(j) * t;
    }
    return g;
  }
};

}  // namespace

AllocationResult maxprod_allocation(const SinrCoefficients& coeffs,
                                    double p_max) {
  check_instance(coeffs, p_max);
  const arma::uword K = coeffs.a.n_elem;

  AllocationResult res;
  res.strategy = Strategy::maxprod;
  if (K == 1) {
    res.rho = arma::vec{p_max};
    return res;
  }

  const MaxProdObjective obj{coeffs};
  constexpr int kMaxIter = 10000;
  constexpr double kGradTol = 1e-8;

  auto project = [p_max](arma::vec& q) {
    // Uniform log-shift back onto sum(exp(q)) = Pmax.
    const double shift = std::log(arma::accu(arma::exp(q)) / p_max);
    q -= shift;
  };

  arma::vec q(K, arma::fill::value(std::log(p_max / static_cast<double>(K))));
  arma::vec rho = arma::exp(q);
  double f = obj.value(rho);

  arma::vec q_best = q;
  double f_best = f;
  double grad_best = std::numeric_limits<double>::infinity();

  double step = 1.0;
  int iter = 0;
  bool converged = false;
  for (; iter < kMaxIter; ++iter) {
    const arma::vec g = obj.gradient_q(rho);
    // Tangent component w.r.t. the constraint surface sum(exp(q)) = Pmax,
    // whose normal in q-coordinates is rho.
    const arma::vec g_tan = g - (arma::dot(g, rho) / arma::dot(rho, rho)) * rho;
    const double rel_grad = arma::norm(g_tan) / (1.0 + arma::norm(g));
    if (rel_grad < grad_best) {
      grad_best = rel_grad;
      if (f >= f_best) {
        f_best = f;
        q_best = q;
      }
    }
    if (rel_grad <= kGradTol) {
      converged = true;
      break;
    }

    // Backtracking line search along the unconstrained gradient, with the
    // log-shift projection applied to every trial point.
    step = std::min(step * 2.0, 1e3 / (1.0 + arma::norm(g, "inf")));
    bool accepted = false;
    while (step >= 1e-18) {
      arma::vec q_trial = q + step * g;
      project(q_trial);
      const arma::vec rho_trial = arma::exp(q_trial);
      const double f_trial = obj.value(rho_trial);
      const double predicted = arma::dot(g, q_trial - q);
      if (std::isfinite(f_trial) && f_trial >= f + 1e-4 * predicted) {
        q = std::move(q_trial);
        rho = rho_trial;
        f = f_trial;
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;  // step underflow: no ascent direction left
    if (f > f_best) {
      f_best = f;
      q_best = q;
    }
  }

  rho = arma::exp(q_best);
  // Guard against residual drift off the budget.
  rho *= p_max / arma::accu(rho);

  res.rho = std::move(rho);
  res.iterations = iter;
  res.grad_norm = grad_best;
  res.converged = converged;
  return res;
}

AllocationResult allocate(Strategy s, const SinrCoefficients& coeffs,
                          double p_max) {
  switch (s) {
    case Strategy::equal: return equal_power(coeffs.a.n_elem, p_max);
    case Strategy::maxmin: return maxmin_allocation(coeffs, p_max);
    default: return maxprod_allocation(coeffs, p_max);
  }
}

}  // namespace mimo
