#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "mrprof/profile.hpp"
#include "mrprof/types.hpp"

namespace mrprof {

struct ClusterConfig {
    int n_thresholds = 50;    // split-search grid over the ranked KL distances
    int min_leaf = 0;         // 0 = auto: max(50, ceil(0.01 * R))
    int max_profiles = 32;
    int em_max_iter = 100;
    double em_tol = 1e-6;     // secondary stop: loglik improvement below this
    double alpha = 0.5;       // transition-count smoothing
    double eps = 1e-9;        // probability floor for foreign-sequence scoring
    double lambda_max = 1e4;
    int threads = 1;
    std::uint64_t seed = 0;   // provenance only; the search itself is deterministic
    std::function<void(const std::string&)> log;  // per-split progress lines
};

int effective_min_leaf(const ClusterConfig& cfg, std::int64_t R);

// Sequence's rank-ordered deviation from a profile.
struct RankedDistance {
    int seq = 0;      // corpus index
    double d = 0.0;   // average KL of the per-sequence fit vs the profile
};

// One candidate two-way partition of a leaf at an order-statistic threshold.
struct SplitCandidate {
    int threshold_rank = 0;        // cut position c: below = ranked[0..c)
    double threshold_value = 0.0;  // D_(c), the distance at the cut
    std::vector<int> below, above; // corpus indices
    double bic_alternative = 0.0;  // global BIC if adopted as-is (pre-EM)
};

// Whole-model surroundings of one leaf, needed to score a local split
// globally: the log-likelihood of every other leaf, the current profile
// count, and the corpus size.
struct SplitContext {
    double rest_loglik = 0.0;
    int k_before = 1;
    std::int64_t total_subjects = 0;
};

struct SplitAttempt {
    int parent = 0;
    double bic_before = 0.0;     // BIC_0
    double bic_candidate = 0.0;  // best pre-EM BIC_A
    double bic_after_em = 0.0;   // BIC_A*
    bool accepted = false;
    int k_after = 0;
    int child_left = -1, child_right = -1;  // leaf ids when accepted
};

// Divisive clustering state: the current leaves always partition the corpus
// and global_bic never decreases across accepted splits.
struct ClusterTree {
    std::vector<ProfileModel> leaves;
    std::vector<SplitAttempt> history;
    double global_bic = 0.0;
    std::uint64_t rng_seed = 0;
};

// Single-profile fit of the whole collection: population MLEs and loglik.
ProfileModel fit_null(std::span<const EventSequence> seqs, const StateSpace& space,
                      const ClusterConfig& cfg = {});

// Fits each member sequence on its own (smoothed, profile rates as fallback)
// and orders members by average KL distance from the profile, ascending,
// ties by subject id.
std::vector<RankedDistance> rank_by_kl(const ProfileModel& profile,
                                       std::span<const EventSequence> corpus,
                                       const ClusterConfig& cfg = {});

// Evaluates up to n_thresholds equally spaced cut ranks of the ranked
// distances, fits both sides of each cut, and returns the candidate with the
// greatest global BIC. Returns nullopt when no cut leaves min_leaf members
// on both sides.
std::optional<SplitCandidate> search_split(const ProfileModel& profile,
                                           std::span<const EventSequence> corpus,
                                           const StateSpace& space, const SplitContext& ctx,
                                           const ClusterConfig& cfg);

struct EmResult {
    ProfileModel left, right;
    double bic_after = 0.0;            // BIC_A*
    int iterations = 0;
    std::vector<double> loglik_trace;  // non-decreasing, one entry per iteration
};

// Classification EM from a candidate partition: alternate hard reassignment
// against the two children's parameters with re-estimation, until the
// assignment reaches a fixpoint or max_iter. An iteration that would empty a
// child or lower the total log-likelihood is reverted and the loop stops.
EmResult em_refine(std::vector<int> below, std::vector<int> above,
                   std::span<const EventSequence> corpus, const StateSpace& space,
                   const MrpParams& parent, const SplitContext& ctx, const ClusterConfig& cfg);

// The full divisive loop: FIFO over leaves, rank -> search -> refine per
// leaf, accept iff BIC_A* > BIC_0, children re-enter the queue. Stops when
// no leaf admits an accepted split or max_profiles is reached.
ClusterTree divisive_cluster(std::span<const EventSequence> seqs, const StateSpace& space,
                             const ClusterConfig& cfg = {});

// Total member log-likelihood across leaves.
double tree_loglik(const ClusterTree& tree);

}  // namespace mrprof
