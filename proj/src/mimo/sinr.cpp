#include "mimo/sinr.hpp"

#include <cmath>
#include <stdexcept>

namespace mimo {

RateModel rate_model(const SystemConfig& cfg) {
  return RateModel{cfg.tau, cfg.tau_p(), cfg.B, cfg.Bc, cfg.b};
}

CoefficientAccumulator::CoefficientAccumulator(std::size_t K)
    : K_(K), mean_sum_(K, {0.0L, 0.0L}), sq_sum_(K * K, 0.0L) {
  if (K == 0) throw std::invalid_argument("coefficients: K must be >= 1");
}

void CoefficientAccumulator::add(const arma::cx_mat& h, const arma::cx_mat& w) {
  if (h.n_cols != K_ || w.n_cols != K_ || h.n_rows != w.n_rows)
    throw std::invalid_argument("coefficients: shape mismatch");
  // P(i, k) = w_i^H h_k
  const arma::cx_mat P = w.t() * h;
  for (std::size_t k = 0; k < K_; ++k) {
    const std::complex<double> diag = P(k, k);
    mean_sum_[k] += std::complex<long double>(diag.real(), diag.imag());
    for (std::size_t i = 0; i < K_; ++i) {
      const std::complex<double> z = P(i, k);
      sq_sum_[k * K_ + i] +=
          static_cast<long double>(z.real()) * z.real() +
          static_cast<long double>(z.imag()) * z.imag();
    }
  }
  ++n_;
}

SinrCoefficients CoefficientAccumulator::finalize(double sigma2) const {
  if (n_ == 0) throw std::invalid_argument("coefficients: no realizations");
  SinrCoefficients c;
  c.sigma2 = sigma2;
  c.n_samples = n_;
  c.a = arma::vec(K_);
  c.G = arma::mat(K_, K_);
  const long double n = static_cast<long double>(n_);
  for (std::size_t k = 0; k < K_; ++k) {
    const std::complex<long double> m = mean_sum_[k] / n;
    c.a(k) = static_cast<double>(m.real() * m.real() + m.imag() * m.imag());
    for (std::size_t i = 0; i < K_; ++i)
      c.G(k, i) = static_cast<double>(sq_sum_[k * K_ + i] / n);
  }
  return c;
}

SinrCoefficients estimate_coefficients(const ChannelBatch& ch,
                                       const PrecoderBatch& pr,
                                       double sigma2) {
  if (ch.realizations() != pr.realizations() || ch.realizations() == 0)
    throw std::invalid_argument(
        "estimate_coefficients: batches must share a realization count >= 1");
  CoefficientAccumulator acc(ch.h.front().n_cols);
  for (std::size_t r = 0; r < ch.realizations(); ++r)
    acc.add(ch.h[r], pr.w[r]);
  return acc.finalize(sigma2);
}

arma::vec sinr(const SinrCoefficients& coeffs, const arma::vec& rho) {
  const arma::uword K = coeffs.a.n_elem;
  if (rho.n_elem != K) throw std::invalid_argument("sinr: rho size mismatch");
  if (rho.min() < 0.0) throw std::invalid_argument("sinr: rho must be >= 0");

  arma::vec gamma(K);
  for (arma::uword k = 0; k < K; ++k) {
    const double interference = arma::dot(coeffs.G.row(k), rho);
    const double denom = interference - rho(k) * coeffs.a(k) + coeffs.sigma2;
    gamma(k) = rho(k) * coeffs.a(k) / denom;
  }
  return gamma;
}

arma::vec spectral_efficiency(const arma::vec& gamma, const RateModel& rm) {
  if (rm.tau_p >= rm.tau)
    throw std::invalid_argument("spectral_efficiency: tau_p must be < tau");
  const double prelog =
      static_cast<double>(rm.tau - rm.tau_p) / static_cast<double>(rm.tau);
  arma::vec se(gamma.n_elem);
  for (arma::uword k = 0; k < gamma.n_elem; ++k)
    se(k) = prelog * std::log2(1.0 + gamma(k));
  return se;
}

double rate_threshold(const RateModel& rm) {
  if (rm.tau_p >= rm.tau)
    throw std::invalid_argument("rate_threshold: tau_p must be < tau");
  return rm.Bc * static_cast<double>(rm.b) /
         static_cast<double>(rm.tau - rm.tau_p);
}

double sinr_threshold(const RateModel& rm) {
  const double rt = rate_threshold(rm);
  const double exponent = rt * static_cast<double>(rm.tau) /
                          (rm.B * static_cast<double>(rm.tau - rm.tau_p));
  return std::exp2(exponent) - 1.0;
}

}  // namespace mimo
