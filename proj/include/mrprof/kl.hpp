#pragma once

#include <span>

#include "mrprof/likelihood.hpp"
#include "mrprof/params.hpp"

namespace mrprof {

// KL(Exp(rate_a) || Exp(rate_b)) = log(a/b) + b/a - 1. Nonnegative, zero iff
// the rates coincide. Both rates must be > 0.
double kl_exponential(double rate_a, double rate_b);

// KL distance between the transition distributions out of state i — the
// joint law over (next state, interarrival time):
//   sum_j P_a[i][j] * ( log(P_a[i][j]/P_b[i][j]) + KL(Exp(la_ij) || Exp(lb_ij)) )
// with the RC destination contributing only its probability-ratio term.
// P_b entries are floored at eps; zero P_a entries contribute nothing.
double kl_transition_distribution(int i, const MrpParams& a, const MrpParams& b,
                                  double eps = kProbFloor);

// Mean of kl_transition_distribution over the given source states, normally
// the states the individual sequence actually exits. Zero when empty.
double average_kl(const MrpParams& seq_params, const MrpParams& profile_params,
                  std::span<const int> active_states, double eps = kProbFloor);

// Real states with at least one outgoing transition (RC exits included).
std::vector<int> active_states(const SufficientStats& stats);

}  // namespace mrprof
