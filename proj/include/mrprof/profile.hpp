#pragma once

#include <vector>

#include "mrprof/params.hpp"

namespace mrprof {

// One fitted profile: parameters, the counting statistics they came from,
// the member set (indices into the corpus, ascending), and the members'
// total log-likelihood under these parameters.
struct ProfileModel {
    MrpParams params;
    SufficientStats stats;
    std::vector<int> members;
    double loglik = 0.0;
};

}  // namespace mrprof
