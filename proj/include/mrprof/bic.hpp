#pragma once

#include <cmath>
#include <cstdint>

namespace mrprof {

// Free parameters of a K-profile model over S states: per profile,
// S*(S+1)-1 transition parameters (S real rows with S+1 destinations plus
// the LC row of S entries, minus one normalization constraint per row) and
// S^2 interarrival rates.
inline std::int64_t model_size(int K, int S) {
    const std::int64_t s = S;
    return static_cast<std::int64_t>(K) * (s * (s + 1) - 1 + s * s);
}

// Penalized log-likelihood, maximized: higher is better.
inline double bic_score(double total_loglik, int K, int S, std::int64_t R) {
    return total_loglik - static_cast<double>(model_size(K, S)) * std::log(static_cast<double>(R)) / 2.0;
}

}  // namespace mrprof
