#ifndef GBDP_INSTANCE_HPP
#define GBDP_INSTANCE_HPP

#include <string>
#include <vector>

namespace gbdp {

// Per-slot accumulated orders. Feasible states satisfy 0 <= x <= x_max
// elementwise; out-of-box states stay representable for boundary probes.
using State = std::vector<int>;

// One delivery price per slot.
using Prices = std::vector<double>;

// Full problem definition: state box, price window, horizon, logit
// parameters and the revenue/cost structure.
struct DPInstance {
  int n = 0;                    // slot count
  std::vector<int> x_max;       // per-slot capacity
  int horizon = 0;              // number of decision epochs
  double lambda = 0.0;          // arrival probability per epoch
  double beta_c = 0.0;          // logit constant offset
  double beta_d = 0.0;          // logit price sensitivity, < 0
  std::vector<double> beta_s;   // per-slot popularity
  double price_lo = 0.0;
  double price_hi = 0.0;
  double revenue = 0.0;         // average order revenue r
  double cost_per_order = 0.0;  // marginal delivery cost
  double big_m = 0.0;           // finite stand-in for the infinite out-of-box cost
  double price_grid_step = 0.25;

  bool feasible(const State& x) const {
    if (int(x.size()) != n) return false;
    for (int s = 0; s < n; ++s)
      if (x[s] < 0 || x[s] > x_max[s]) return false;
    return true;
  }

  int total_capacity() const {
    int c = 0;
    for (int v : x_max) c += v;
    return c;
  }

  double default_big_m() const {
    return 2.0 * (price_hi + revenue) * total_capacity();
  }

  // Enforces the documented invariants; strict_lambda additionally requires
  // 0 < lambda (config files always validate strictly, tests may build
  // degenerate lambda = 0 instances directly).
  void validate(bool strict_lambda = false) const;
};

// Parses the key-value instance document. Keys match DPInstance field names
// exactly; unknown keys are rejected. Vector fields (x_max, beta_s) accept
// either n values or a single value broadcast to all slots. big_m and
// price_grid_step are optional (defaults: 2*(price_hi+revenue)*<1,x_max>
// and 0.25).
DPInstance parse_instance(const std::string& text);
DPInstance load_instance(const std::string& path);

}  // namespace gbdp

#endif
