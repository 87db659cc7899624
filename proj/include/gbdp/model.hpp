#ifndef GBDP_MODEL_HPP
#define GBDP_MODEL_HPP

#include <vector>

#include "gbdp/instance.hpp"

namespace gbdp {

// One-step multinomial-logit transition distribution at state x. Transitions
// go to x (no order) or x + 1_s (order in slot s); slots already at capacity
// are removed from the choice set, so their probability is exactly 0.
struct TransitionProbs {
  double stay = 1.0;            // P_{x,x}
  std::vector<double> slot;     // P_{x,x+1_s}, one entry per slot
};

// Throws PreconditionError when x is infeasible or d is out of bounds.
TransitionProbs transition_probs(const State& x, const Prices& d,
                                 const DPInstance& inst);

// Capacity-clipped variant used for boundary probes: accepts any integer
// state and drops every slot with x_s >= x̄_s from the choice set.
TransitionProbs transition_probs_clipped(const State& x, const Prices& d,
                                         const DPInstance& inst);

// Stage revenue g(x, y, d): r + d_s when y = x + 1_s, 0 when y = x.
// Throws PreconditionError when y is not a unit step from x.
double stage_revenue(const State& x, const State& y, const Prices& d,
                     const DPInstance& inst);

// Terminal cost: cost_per_order * <1, x> inside the state box, big_m outside.
double terminal_cost(const State& x, const DPInstance& inst);

// Per-slot price candidates {price_lo, price_lo+step, ..., price_hi} in
// ascending order. Throws PreconditionError when the step exceeds the range.
std::vector<double> decision_grid(const DPInstance& inst);

}  // namespace gbdp

#endif
