#include "mimo/precoding.hpp"

#include <stdexcept>
#include <string>

namespace mimo {

const char* to_string(Precoder p) {
  return p == Precoder::mr ? "mr" : "mmse";
}

Precoder precoder_from_string(std::string_view s) {
  if (s == "mr" || s == "MR") return Precoder::mr;
  if (s == "mmse" || s == "MMSE") return Precoder::mmse;
  throw std::invalid_argument("unknown precoder: " + std::string(s));
}

namespace {

void normalize_columns(arma::cx_mat& v, std::size_t realization,
                       const char* scheme) {
  for (arma::uword k = 0; k < v.n_cols; ++k) {
    const double n = arma::norm(v.col(k));
    if (!(n > 0.0) || !std::isfinite(n))
      throw std::runtime_error(std::string(scheme) +
                               " precoder: degenerate vector for device " +
                               std::to_string(k) + " at realization " +
                               std::to_string(realization));
    v.col(k) /= n;
  }
}

}  // namespace

PrecoderBatch mr_precoder(const EstimateBatch& est) {
  PrecoderBatch batch;
  batch.scheme = Precoder::mr;
  batch.w.reserve(est.realizations());
  for (std::size_t r = 0; r < est.realizations(); ++r) {
    arma::cx_mat w = est.h_hat[r];
    normalize_columns(w, r, "mr");
    batch.w.push_back(std::move(w));
  }
  return batch;
}

PrecoderBatch mmse_precoder(const EstimateBatch& est, double sigma2, double p,
                            MmseSolve solve) {
  if (p <= 0.0) throw std::invalid_argument("mmse_precoder: p must be > 0");
  const double lambda = arma::accu(est.model.c) + sigma2 / p;
  if (!(lambda > 0.0))
    throw std::invalid_argument("mmse_precoder: regularizer must be > 0");

  PrecoderBatch batch;
  batch.scheme = Precoder::mmse;
  batch.w.reserve(est.realizations());

  for (std::size_t r = 0; r < est.realizations(); ++r) {
    const arma::cx_mat& hh = est.h_hat[r];
    const arma::uword M = hh.n_rows;
    const arma::uword K = hh.n_cols;
    const bool use_woodbury =
        solve == MmseSolve::woodbury ||
        (solve == MmseSolve::automatic && M > 2 * K);

    arma::cx_mat v;
    bool ok;
    if (use_woodbury) {
      // (H H^H + lambda I_M)^-1 H = H (H^H H + lambda I_K)^-1
      arma::cx_mat gram = hh.t() * hh;
      gram.diag() += arma::cx_double(lambda, 0.0);
      arma::cx_mat s;
      ok = arma::solve(s, gram, arma::cx_mat(arma::eye<arma::cx_mat>(K, K)),
                       arma::solve_opts::likely_sympd);
      if (ok) v = hh * s;
    } else {
      arma::cx_mat a = hh * hh.t();
      a.diag() += arma::cx_double(lambda, 0.0);
      ok = arma::solve(v, a, hh, arma::solve_opts::likely_sympd);
    }
    if (!ok)
      throw std::runtime_error("mmse precoder: solve failed at realization " +
                               std::to_string(r));
    normalize_columns(v, r, "mmse");
    batch.w.push_back(std::move(v));
  }
  return batch;
}

}  // namespace mimo
