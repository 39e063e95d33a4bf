#ifndef SESAM_ASSIGN_HPP
#define SESAM_ASSIGN_HPP

#include <map>
#include <string>
#include <vector>

#include "sesam/matrix.hpp"

namespace sesam::assign {

// Total article -> session mapping under exact per-session counts.
struct Assignment {
  std::vector<std::size_t> session_of;  // per matrix row, column index

  double objective(const ScoreMatrix& matrix) const;
  std::map<std::string, std::string> to_labels(const ScoreMatrix& matrix) const;
};

// Throws errc::capacity_violation when the assignment does not meet the
// capacities exactly.
void check_capacities(const Assignment& a, const ScoreMatrix& matrix,
                      const std::map<std::string, int>& capacities);

// Exact maximum of sum(score) subject to one session per article and exact
// session counts. Sessions expand into unit slots and a max-weight perfect
// matching (augmenting paths over potentials) solves the transportation
// instance, whose LP optimum is integral. Throws errc::infeasible_capacities
// when counts do not sum to the article count.
Assignment solve_old(const ScoreMatrix& matrix,
                     const std::map<std::string, int>& capacities);

struct BruteForceResult {
  Assignment best;
  double best_objective = 0.0;
  std::vector<double> all_objectives;  // every feasible assignment's value
};

// Exhaustive oracle, guarded to m <= 8 articles (errc::too_large beyond).
BruteForceResult brute_force_old(const ScoreMatrix& matrix,
                                 const std::map<std::string, int>& capacities);

// Capacity-feasible greedy by descending score; deterministic tie-breaks.
// Serves as the local-search starting point and as the no-optimization
// baseline.
Assignment greedy_capacity_assign(const ScoreMatrix& matrix,
                                  const std::map<std::string, int>& capacities);

// Per-article argmax, ignoring capacities (the "classic" decision rule).
Assignment argmax_assign(const ScoreMatrix& matrix);

std::vector<int> capacity_vector(const ScoreMatrix& matrix,
                                 const std::map<std::string, int>& capacities);

}  // namespace sesam::assign

#endif
