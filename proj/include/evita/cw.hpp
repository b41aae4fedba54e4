#ifndef EVITA_CW_HPP
#define EVITA_CW_HPP

#include <vector>

#include "evita/routing.hpp"

namespace evita {

// Distance saved by serving j directly after i instead of via the depot.
struct Saving {
    int i = 0;
    int j = 0;
    double value = 0.0;  // d(i,depot) + d(depot,j) - d(i,j)
};

// All ordered-pair savings over the given shops, from the distance matrix.
std::vector<Saving> compute_savings(const std::vector<int>& shops, const RoutingProblem& prob);

// Parallel Clarke & Wright construction: start from singleton routes, then
// consume savings in decreasing order (ties by lower i, then lower j),
// merging the route ending at i with the different route starting at j when
// the concatenation stays feasible. Only strictly positive savings are
// considered. Deterministic. Throws InfeasibleError when some shop cannot be
// served even on a dedicated route.
DayPlan clarke_wright(const std::vector<int>& shopsToday, const RoutingProblem& prob);

// Clarke & Wright followed by 2-interchange local search.
DayPlan cwls_solve(const std::vector<int>& shopsToday, const RoutingProblem& prob, Rng& rng,
                   const LocalSearchParams& lsParams = {});

}  // namespace evita

#endif
