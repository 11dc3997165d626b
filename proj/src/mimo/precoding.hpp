#pragma once

#include <armadillo>
#include <string_view>
#include <vector>

#include "mimo/channel.hpp"

namespace mimo {

enum class Precoder { mr, mmse };

const char* to_string(Precoder p);
Precoder precoder_from_string(std::string_view s);

// Unit-norm precoding vectors, one M x K matrix per realization. With the
// norm pulled out, the allocated rho_k is the actual transmit power.
struct PrecoderBatch {
  std::vector<arma::cx_mat> w;
  Precoder scheme = Precoder::mr;

  std::size_t realizations() const { return w.size(); }
};

// How the MMSE regularized system is solved. `automatic` picks woodbury
// when M > 2K (identical result up to rounding, much cheaper for M >> K).
enum class MmseSolve { automatic, direct, woodbury };

// w_k = h_hat_k / ||h_hat_k||.
PrecoderBatch mr_precoder(const EstimateBatch& est);

// v_k = (sum_i h_hat_i h_hat_i^H + (sum_i c_i + sigma2/p) I_M)^-1 h_hat_k,
// normalized. The regularizer collapses to a scaled identity because the
// error covariance of each device is c_i * I_M.
PrecoderBatch mmse_precoder(const EstimateBatch& est, double sigma2, double p,
                            MmseSolve solve = MmseSolve::automatic);

}  // namespace mimo
