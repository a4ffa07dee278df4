#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mrprof/types.hpp"

namespace mrprof {

// Counting statistics for one set of sequences. All fields are additive,
// so stats of a union of sets is the elementwise sum of the parts.
//
// n_trans rows are real states, columns are real states plus RC (column S).
// n_init is the LC row: one count per sequence at its first event.
// sum_tau / n_tau cover only the retained interarrival observations: the
// first and last interarrival of every sequence are excluded, so a sequence
// of length L contributes L-3 observations (none when L <= 3) while still
// contributing all L-1 transitions plus the LC and RC censor transitions.
struct SufficientStats {
    int S = 0;
    std::int64_t n_seq = 0;
    std::vector<std::int64_t> n_trans;  // S x (S+1)
    std::vector<std::int64_t> n_init;   // S
    std::vector<double> sum_tau;        // S x S
    std::vector<std::int64_t> n_tau;    // S x S

    SufficientStats() = default;
    explicit SufficientStats(int states);

    std::int64_t trans(int i, int j) const { return n_trans[idx_trans(i, j)]; }
    std::int64_t& trans(int i, int j) { return n_trans[idx_trans(i, j)]; }
    std::int64_t init(int j) const { return n_init[static_cast<std::size_t>(j)]; }
    std::int64_t& init(int j) { return n_init[static_cast<std::size_t>(j)]; }
    double tau_sum(int i, int j) const { return sum_tau[idx_rate(i, j)]; }
    double& tau_sum(int i, int j) { return sum_tau[idx_rate(i, j)]; }
    std::int64_t tau_count(int i, int j) const { return n_tau[idx_rate(i, j)]; }
    std::int64_t& tau_count(int i, int j) { return n_tau[idx_rate(i, j)]; }

    // Transitions out of real state i, RC exits included.
    std::int64_t row_total(int i) const;
    // All transition counts incl. censor rows; the linear work unit used by bench.
    std::int64_t total_transitions() const;

    SufficientStats& operator+=(const SufficientStats& other);

private:
    std::size_t idx_trans(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(S + 1) + static_cast<std::size_t>(j);
    }
    std::size_t idx_rate(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(S) + static_cast<std::size_t>(j);
    }
};

// Adds one already-validated sequence.
void add_sequence(SufficientStats& stats, const EventSequence& seq);

// Validates every sequence, then folds. The fold is chunked in a fixed order
// independent of the thread count, so results are identical for any `threads`.
SufficientStats accumulate_stats(std::span<const EventSequence> seqs, const StateSpace& space,
                                 int threads = 1);

// Same fold over a subset of a corpus given by indices (sequences assumed
// already validated).
SufficientStats accumulate_subset(std::span<const EventSequence> corpus, std::span<const int> members,
                                  int S, int threads = 1);

}  // namespace mrprof
