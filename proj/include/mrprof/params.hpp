#pragma once

#include <vector>

#include "mrprof/stats.hpp"

namespace mrprof {

// One profile's fitted model: transition matrix over {LC} u {1..S} sources
// and {1..S} u {RC} destinations, plus an exponential rate per real (i,j)
// pair. Row S of `trans` is the LC row; column S is RC; LC->RC stays 0.
struct MrpParams {
    int S = 0;
    std::vector<double> trans;  // (S+1) x (S+1)
    std::vector<double> rate;   // S x S, 1/month

    MrpParams() = default;
    explicit MrpParams(int states);

    double p(int i, int j) const { return trans[idx(i, j)]; }
    double& p(int i, int j) { return trans[idx(i, j)]; }
    double lambda(int i, int j) const { return rate[idx_rate(i, j)]; }
    double& lambda(int i, int j) { return rate[idx_rate(i, j)]; }

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(S + 1) + static_cast<std::size_t>(j);
    }
    std::size_t idx_rate(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(S) + static_cast<std::size_t>(j);
    }
};

// Throws std::invalid_argument if any row fails to sum to 1 within 1e-9,
// any probability leaves [0,1], or any rate is not strictly positive.
void validate_params(const MrpParams& params);

struct EstimateOptions {
    double alpha = 0.5;        // additive smoothing per destination
    double lambda_max = 1e4;   // rate clamp for zero total interarrival time
    double default_rate = 1.0; // used when no fallback and no observations at all
};

struct EstimateNotes {
    int clamped_cells = 0;  // cells hit by the lambda_max clamp (simultaneous events)
};

// Maximum likelihood estimates from counts. Transition rows get additive
// smoothing alpha over their destinations (S+1 for real rows, S for the LC
// row, LC->RC being disallowed). Rates are n_tau/sum_tau; cells with no
// interarrival observations inherit the fallback rate (the parent or
// population fit) or, with no fallback, 1/global-mean-interarrival.
MrpParams estimate_mle(const SufficientStats& stats, const MrpParams* fallback = nullptr,
                       const EstimateOptions& opts = {}, EstimateNotes* notes = nullptr);

}  // namespace mrprof
