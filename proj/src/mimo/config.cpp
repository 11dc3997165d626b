#include "mimo/config.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mimo {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("config: " + what);
}

}  // namespace

int SystemConfig::derived_n_channel() const {
  return static_cast<int>(std::lround(B / Bc));
}

void SystemConfig::validate() const {
  require(M >= 1, "M must be >= 1");
  require(K >= 1, "K must be >= 1");
  require(f >= 1, "f must be >= 1");
  require(tau >= 1, "tau must be >= 1");
  require(b >= 0, "b must be >= 0");
  require(f * K < tau,
          "tau_p = f*K = " + std::to_string(f * K) +
              " must be < tau = " + std::to_string(tau) +
              " (no data symbols left)");
  require(B > 0.0, "B must be > 0");
  require(Bc > 0.0, "Bc must be > 0");
  require(Pmax > 0.0, "Pmax must be > 0");
  require(p > 0.0, "p must be > 0");
  require(alpha > 0.0, "alpha must be > 0");
  require(sigma_sf >= 0.0, "sigma_sf must be >= 0");
  require(cell_side > 0.0, "cell_side must be > 0");
  require(n_deployments >= 1, "n_deployments must be >= 1");
  require(n_channel >= 1, "n_channel must be >= 1");
}

SystemConfig SystemConfig::with_cell(int K_value, int f_value) const {
  SystemConfig c = *this;
  c.K = K_value;
  c.f = f_value;
  c.validate();
  return c;
}

}  // namespace mimo
