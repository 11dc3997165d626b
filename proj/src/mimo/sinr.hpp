#pragma once

#include <armadillo>
#include <complex>
#include <vector>

#include "mimo/config.hpp"
#include "mimo/precoding.hpp"

namespace mimo {

// Sufficient statistic of the hardening-bound SINR as a function of the
// transmit powers: signal gains a_k = |E[w_k^H h_k]|^2, second moments
// G(k,i) = E[|w_i^H h_k|^2], and the noise power. Does not depend on rho,
// so one estimate serves every power allocation strategy.
struct SinrCoefficients {
  arma::vec a;    // K
  arma::mat G;    // K x K, row = victim device k, column = beam i
  double sigma2 = 0.0;
  std::size_t n_samples = 0;
};

struct RateModel {
  int tau;
  int tau_p;
  double B;   // Hz
  double Bc;  // Hz
  int b;      // bits
};

RateModel rate_model(const SystemConfig& cfg);

// Streaming sample-mean estimator for (a, G) over channel realizations.
// Accumulates in extended precision, in insertion order, so a fixed
// realization order gives bit-reproducible coefficients.
class CoefficientAccumulator {
 public:
  explicit CoefficientAccumulator(std::size_t K);

  // One realization: channel h and unit-norm precoders w, both M x K.
  void add(const arma::cx_mat& h, const arma::cx_mat& w);

  std::size_t count() const { return n_; }
  SinrCoefficients finalize(double sigma2) const;

 private:
  std::size_t K_;
  std::size_t n_ = 0;
  std::vector<std::complex<long double>> mean_sum_;  // K, w_k^H h_k
  std::vector<long double> sq_sum_;                  // K*K, |w_i^H h_k|^2
};

SinrCoefficients estimate_coefficients(const ChannelBatch& ch,
                                       const PrecoderBatch& pr, double sigma2);

// gamma_k = rho_k a_k / (sum_i rho_i G(k,i) - rho_k a_k + sigma2).
arma::vec sinr(const SinrCoefficients& coeffs, const arma::vec& rho);

// SE_k = ((tau - tau_p) / tau) log2(1 + gamma_k), bit/s/Hz.
arma::vec spectral_efficiency(const arma::vec& gamma, const RateModel& rm);

// Fixed-packet rate threshold R_T = Bc * b / (tau - tau_p), bit/s.
double rate_threshold(const RateModel& rm);

// SINR equivalent of the rate threshold: device k is in outage iff
// gamma_k < 2^(R_T tau / (B (tau - tau_p))) - 1.
double sinr_threshold(const RateModel& rm);

}  // namespace mimo
