#include "mimo/scenario.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>

#include "mimo/units.hpp"

namespace mimo {

double noise_power(double bandwidth_hz, double noise_figure_db) {
  if (bandwidth_hz <= 0.0)
    throw std::invalid_argument("noise_power: bandwidth must be > 0");
  const double dbm = -174.0 + 10.0 * std::log10(bandwidth_hz) + noise_figure_db;
  return dbm_to_watts(dbm);
}

double large_scale_gain(double distance_m, double shadow_db,
                        const SystemConfig& cfg) {
  if (distance_m <= 0.0)
    throw std::invalid_argument("large_scale_gain: distance must be > 0");
  const double beta_db = cfg.Upsilon -
                         10.0 * cfg.alpha * std::log10(distance_m / 1000.0) +
                         shadow_db;
  return db_to_linear(beta_db);
}

Deployment generate_deployment(const SystemConfig& cfg, Rng& rng) {
  cfg.validate();
  const std::size_t K = static_cast<std::size_t>(cfg.K);
  const double half = cfg.cell_side / 2.0;

  Deployment dep;
  dep.x.resize(K);
  dep.y.resize(K);
  dep.d.resize(K);
  dep.shadow_db.resize(K);
  dep.beta.resize(K);

  for (std::size_t k = 0; k < K; ++k) {
    double x, y, d;
    do {
      x = rng.uniform(-half, half);
      y = rng.uniform(-half, half);
      d = std::hypot(x, y);
    } while (d < kMinDistanceM);
    dep.x[k] = x;
    dep.y[k] = y;
    dep.d[k] = d;
  }
  for (std::size_t k = 0; k < K; ++k) {
    dep.shadow_db[k] = cfg.sigma_sf * rng.gaussian();
    dep.beta[k] = large_scale_gain(dep.d[k], dep.shadow_db[k], cfg);
  }
  return dep;
}

std::uint64_t deployment_digest(const Deployment& dep) {
  // FNV-1a over the raw position bits.
  std::uint64_t h = 1469598103934665603ull;
  auto absorb = [&h](double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, sizeof(bits));
    for (int i = 0; i < 8; ++i) {
      h ^= (bits >> (8 * i)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  for (std::size_t k = 0; k < dep.size(); ++k) {
    absorb(dep.x[k]);
    absorb(dep.y[k]);
    absorb(dep.shadow_db[k]);
  }
  return h;
}

}  // namespace mimo
