#ifndef EVITA_ROUTING_HPP
#define EVITA_ROUTING_HPP

#include <optional>
#include <vector>

#include "evita/instance.hpp"
#include "evita/logistics.hpp"
#include "evita/rng.hpp"

namespace evita {

// A single vehicle tour. The depot is implicit at both ends.
struct Route {
    std::vector<int> shops;   // node indices, visit order
    int load = 0;             // roll containers
    double distanceKm = 0.0;
    double durationH = 0.0;   // travel time + unloading stops
};

// All routes of one weekday.
struct DayPlan {
    std::vector<Route> routes;
    double totalDistanceKm = 0.0;
};

// Everything a day sub-problem needs: distances, per-node demands, vehicle
// limits and the depot node. Demands are indexed by node; the depot's entry
// is unused.
struct RoutingProblem {
    const DistanceMatrix& dm;
    const std::vector<int>& demands;
    const VehicleConfig& vc;
    int depot = 0;

    double dist(int i, int j) const { return dm(i, j); }
};

// Computes load, distance (depot -> s1 -> ... -> sk -> depot) and duration
// (distance/speed + one unloading stop per shop) for a visit sequence.
Route route_metrics(const std::vector<int>& shops, const RoutingProblem& prob);

// load <= capacity and duration <= maximum working time.
bool is_feasible(const Route& r, const VehicleConfig& vc);

bool plan_is_feasible(const DayPlan& plan, const VehicleConfig& vc);

// Recomputes totalDistanceKm from the routes.
void refresh_total(DayPlan& plan);

double plan_cost(const DayPlan& plan);

// Chops a visit sequence into feasible routes, starting a fresh route at the
// earliest position where capacity or working time would be exceeded.
// Returns nullopt when some single shop is infeasible on its own.
std::optional<std::vector<Route>> split_into_feasible_routes(const std::vector<int>& sequence,
                                                             const RoutingProblem& prob);

struct LocalSearchParams {
    int numberOfNeighbors = 10;  // intra-route swap attempts per route (at least route size)
    bool exhaustive = false;     // try every shop pair instead of sampling
};

// 2-interchange improvement. First swaps shop pairs within each route, then
// shop pairs across each pair of routes, keeping a move only when it strictly
// reduces total distance. A move that breaks capacity or time is repaired by
// splitting the offending route at the first violation; if that fails the
// move is rejected. The result never serves a different shop multiset and
// never costs more than the input.
DayPlan local_search(const DayPlan& plan, const RoutingProblem& prob, Rng& rng,
                     const LocalSearchParams& params = {});

}  // namespace evita

#endif
