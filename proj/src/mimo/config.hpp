#pragma once

#include <cstdint>
#include <string>

#include "mimo/units.hpp"

namespace mimo {

// Full scenario description plus run controls. Field names match the JSON
// configuration schema one to one. Powers and gains are stored linear
// (watts / linear gain); the loader also accepts `Pmax_dbm`, `p_dbm`,
// `NF_db`, `Upsilon_db` and `sigma_sf_db` spellings for the decibel
// quantities.
struct SystemConfig {
  int M = 100;    // BS antennas
  int K = 10;     // devices
  int f = 1;      // pilots per device; pilot length tau_p = f * K
  int tau = 100;  // channel uses per coherence block
  int b = 256;    // packet size, bits

  double B = 20e6;    // transmission bandwidth, Hz
  double Bc = 100e3;  // coherence bandwidth, Hz

  double Pmax = dbm_to_watts(46.0);  // BS power budget, W
  double p = dbm_to_watts(23.0);     // device pilot power, W
  double NF = 7.0;                   // BS noise figure, dB

  double Upsilon = -148.1;  // median channel gain at 1 km, dB
  double alpha = 3.76;      // pathloss exponent
  double sigma_sf = 7.0;    // shadow fading std deviation, dB
  double cell_side = 500.0; // square cell side, m

  int n_deployments = 1000;  // Monte-Carlo device deployments
  int n_channel = 200;       // channel realizations per deployment (B / Bc)
  std::uint64_t seed = 1;

  int tau_p() const { return f * K; }

  // Default realization count: one per coherence block in the bandwidth.
  int derived_n_channel() const;

  // Throws std::invalid_argument when an invariant is violated
  // (tau_p < tau, positive powers and bandwidths, n_channel >= 1, ...).
  void validate() const;

  // Copy with K and f replaced (sweep cells), revalidated.
  SystemConfig with_cell(int K_value, int f_value) const;
};

}  // namespace mimo
