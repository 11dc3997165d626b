#pragma once

#include <cstdint>
#include <vector>

#include "mimo/config.hpp"
#include "mimo/rng.hpp"

namespace mimo {

// Devices closer than this to the BS are resampled. Standard macro-cell
// exclusion radius; the propagation model diverges as d -> 0.
inline constexpr double kMinDistanceM = 35.0;

// One random device drop: positions relative to the BS at the cell center,
// distances, shadow fading draws and the resulting large-scale coefficients.
struct Deployment {
  std::vector<double> x;          // m
  std::vector<double> y;          // m
  std::vector<double> d;          // m
  std::vector<double> shadow_db;  // F_k, dB
  std::vector<double> beta;       // linear power gain

  std::size_t size() const { return beta.size(); }
};

// Receiver noise power in watts: -174 dBm/Hz thermal floor plus noise figure
// over the transmission bandwidth.
double noise_power(double bandwidth_hz, double noise_figure_db);

// Large-scale fading: median gain at 1 km, log-distance pathloss with
// exponent alpha, log-normal shadowing term in dB. Returns linear gain.
double large_scale_gain(double distance_m, double shadow_db,
                        const SystemConfig& cfg);

// K positions uniform over the square cell (resampled until d >= 35 m),
// i.i.d. shadowing, large-scale coefficients. Deterministic given the rng
// stream.
Deployment generate_deployment(const SystemConfig& cfg, Rng& rng);

// Order-sensitive digest of the device positions; used to verify that runs
// with paired seeds observed identical deployments.
std::uint64_t deployment_digest(const Deployment& dep);

}  // namespace mimo
