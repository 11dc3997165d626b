#pragma once

#include <armadillo>
#include <vector>

#include "mimo/config.hpp"
#include "mimo/rng.hpp"
#include "mimo/scenario.hpp"

namespace mimo {

// Small-scale channel realizations for one deployment. Each entry is an
// M x K matrix whose column k is h_k ~ CN(0, beta_k I_M).
struct ChannelBatch {
  std::vector<arma::cx_mat> h;

  std::size_t realizations() const { return h.size(); }
};

// Per-device MMSE estimation statistics. With orthogonal pilots the
// de-spread observation for device k is h_k plus noise of per-element
// variance pilot_noise_var = sigma^2 / (tau_p * p), giving the estimate
// scale phi_k / beta_k and the error variance c_k = beta_k - phi_k.
struct EstimationModel {
  arma::vec beta;          // K
  arma::vec phi;           // K, per-element variance of h_hat_k
  arma::vec c;             // K, per-element variance of the estimation error
  double pilot_noise_var;  // sigma^2 / (tau_p * p)
  int tau_p;
};

struct EstimateBatch {
  std::vector<arma::cx_mat> h_hat;  // M x K per realization
  EstimationModel model;

  std::size_t realizations() const { return h_hat.size(); }
};

// n independent realizations, each element CN(0, beta_k). Rejects empty or
// non-positive beta.
ChannelBatch draw_channels(const arma::vec& beta, int M, int n, Rng& rng);
ChannelBatch draw_channels(const Deployment& dep, const SystemConfig& cfg,
                           Rng& rng);

// Closed-form phi_k = beta_k^2 / (beta_k + sigma2 / (tau_p * p)) and
// c_k = beta_k - phi_k. Requires tau_p >= K so orthogonal pilots exist.
EstimationModel estimation_model(const arma::vec& beta, int tau_p, double p,
                                 double sigma2);
EstimationModel estimation_model(const Deployment& dep,
                                 const SystemConfig& cfg);

// MMSE estimates via the statistically equivalent single-vector observation:
// h_hat_k = (beta_k / (beta_k + sigma2/(tau_p p))) * (h_k + e_k) with e_k
// i.i.d. CN(0, sigma2/(tau_p p)).
EstimateBatch estimate_channels(const ChannelBatch& batch,
                                const EstimationModel& model, Rng& rng);

}  // namespace mimo
