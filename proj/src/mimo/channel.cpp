#include "mimo/channel.hpp"

#include <stdexcept>

namespace mimo {

ChannelBatch draw_channels(const arma::vec& beta, int M, int n, Rng& rng) {
  if (beta.empty()) throw std::invalid_argument("draw_channels: empty beta");
  if (beta.min() <= 0.0)
    throw std::invalid_argument("draw_channels: beta must be > 0");
  if (M < 1 || n < 1)
    throw std::invalid_argument("draw_channels: M and n must be >= 1");

  const std::size_t K = beta.n_elem;
  ChannelBatch batch;
  batch.h.reserve(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    arma::cx_mat h(static_cast<arma::uword>(M), K);
    for (std::size_t k = 0; k < K; ++k) {
      const double v = beta(k);
      for (int m = 0; m < M; ++m) h(m, k) = rng.cgaussian(v);
    }
    batch.h.push_back(std::move(h));
  }
  return batch;
}

ChannelBatch draw_channels(const Deployment& dep, const SystemConfig& cfg,
                           Rng& rng) {
  return draw_channels(arma::vec(dep.beta), cfg.M, cfg.n_channel, rng);
}

EstimationModel estimation_model(const arma::vec& beta, int tau_p, double p,
                                 double sigma2) {
  const int K = static_cast<int>(beta.n_elem);
  if (K < 1) throw std::invalid_argument("estimation_model: empty beta");
  if (tau_p < K)
    throw std::invalid_argument(
        "estimation_model: tau_p < K, orthogonal pilots do not exist");
  if (p <= 0.0) throw std::invalid_argument("estimation_model: p must be > 0");
  if (sigma2 < 0.0)
    throw std::invalid_argument("estimation_model: sigma2 must be >= 0");

  EstimationModel model;
  model.beta = beta;
  model.pilot_noise_var = sigma2 / (static_cast<double>(tau_p) * p);
  model.tau_p = tau_p;
  model.phi = arma::vec(beta.n_elem);
  model.c = arma::vec(beta.n_elem);
  for (arma::uword k = 0; k < beta.n_elem; ++k) {
    if (model.pilot_noise_var == 0.0) {
      // Noiseless pilots: the estimate is exact.
      model.phi(k) = beta(k);
      model.c(k) = 0.0;
    } else {
      model.phi(k) = beta(k) * beta(k) / (beta(k) + model.pilot_noise_var);
      model.c(k) = beta(k) - model.phi(k);
    }
  }
  return model;
}

EstimationModel estimation_model(const Deployment& dep,
                                 const SystemConfig& cfg) {
  return estimation_model(arma::vec(dep.beta), cfg.tau_p(), cfg.p,
                          noise_power(cfg.B, cfg.NF));
}

EstimateBatch estimate_channels(const ChannelBatch& batch,
                                const EstimationModel& model, Rng& rng) {
  const std::size_t K = model.beta.n_elem;
  if (batch.realizations() == 0)
    throw std::invalid_argument("estimate_channels: empty batch");
  if (batch.h.front().n_cols != K)
    throw std::invalid_argument("estimate_channels: model/batch K mismatch");

  EstimateBatch est;
  est.model = model;
  est.h_hat.reserve(batch.realizations());
  const double noise_var = model.pilot_noise_var;
  for (const arma::cx_mat& h : batch.h) {
    arma::cx_mat h_hat(h.n_rows, h.n_cols);
    for (arma::uword k = 0; k < K; ++k) {
      const double scale = model.phi(k) / model.beta(k);
      for (arma::uword m = 0; m < h.n_rows; ++m)
        h_hat(m, k) = scale * (h(m, k) + rng.cgaussian(noise_var));
    }
    est.h_hat.push_back(std::move(h_hat));
  }
  return est;
}

}  // namespace mimo
