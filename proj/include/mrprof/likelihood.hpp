#pragma once

#include <span>

#include "mrprof/params.hpp"
#include "mrprof/types.hpp"

namespace mrprof {

// Floor applied to transition probabilities before taking logs, so scoring a
// sequence against a foreign profile stays finite.
inline constexpr double kProbFloor = 1e-9;

// Censoring-adjusted log-likelihood of one sequence:
//   log P[LC][X_1] + sum_l log P[X_{l-1}][X_l] + log P[X_L][RC]
//   + sum over retained interarrivals of (log lambda_ij - lambda_ij * tau).
// The first and last interarrival never enter, matching the sufficient
// statistics, so perturbing T_1 or T_L (order preserved) cannot change the
// value.
double sequence_log_likelihood(const EventSequence& seq, const MrpParams& params,
                               double eps = kProbFloor);

// Sum over sequences; equals the log of the factorized joint likelihood.
// Deterministic chunked fold, identical for any thread count.
double batch_log_likelihood(std::span<const EventSequence> seqs, const MrpParams& params,
                            int threads = 1, double eps = kProbFloor);

struct Assignment {
    int index = 0;                // argmax profile, ties to the lowest index
    std::vector<double> loglik;   // per-profile log-likelihood
};

// Posterior assignment under equal priors: the profile with the greatest
// log-likelihood wins.
Assignment posterior_assign(const EventSequence& seq, std::span<const MrpParams> profiles,
                            double eps = kProbFloor);

}  // namespace mrprof
