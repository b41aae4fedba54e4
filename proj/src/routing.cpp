#include "evita/routing.hpp"

#include <algorithm>
#include <utility>

namespace evita {

Route route_metrics(const std::vector<int>& shops, const RoutingProblem& prob) {
    Route r;
    r.shops = shops;
    if (shops.empty()) return r;

    double dist = prob.dist(prob.depot, shops.front());
    for (std::size_t i = 0; i + 1 < shops.size(); ++i) {
        dist += prob.dist(shops[i], shops[i + 1]);
    }
    dist += prob.dist(shops.back(), prob.depot);

    int load = 0;
    for (int s : shops) load += prob.demands[static_cast<std::size_t>(s)];

    r.distanceKm = dist;
    r.load = load;
    r.durationH = dist / prob.vc.speedKmh + static_cast<double>(shops.size()) * prob.vc.unloadTimeH;
    return r;
}

bool is_feasible(const Route& r, const VehicleConfig& vc) {
    return r.load <= vc.capacity && r.durationH <= vc.maxWorkTimeH;
}

bool plan_is_feasible(const DayPlan& plan, const VehicleConfig& vc) {
    return std::all_of(plan.routes.begin(), plan.routes.end(),
                       [&](const Route& r) { return is_feasible(r, vc); });
}

void refresh_total(DayPlan& plan) {
    plan.totalDistanceKm = 0.0;
    for (const auto& r : plan.routes) plan.totalDistanceKm += r.distanceKm;
}

double plan_cost(const DayPlan& plan) {
    return plan.totalDistanceKm;
}

std::optional<std::vector<Route>> split_into_feasible_routes(const std::vector<int>& sequence,
                                                             const RoutingProblem& prob) {
    std::vector<Route> out;
    std::vector<int> current;
    for (int shop : sequence) {
        current.push_back(shop);
        Route r = route_metrics(current, prob);
        if (is_feasible(r, prob.vc)) continue;

        if (current.size() == 1) return std::nullopt;  // shop infeasible on its own
        current.pop_back();
        out.push_back(route_metrics(current, prob));
        current = {shop};
        if (!is_feasible(route_metrics(current, prob), prob.vc)) return std::nullopt;
    }
    if (!current.empty()) out.push_back(route_metrics(current, prob));
    return out;
}

namespace {

// Turns a modified visit sequence into feasible routes: as-is when feasible,
// otherwise split at the first violation.
std::optional<std::vector<Route>> realize(const std::vector<int>& shops, const RoutingProblem& prob) {
    Route whole = route_metrics(shops, prob);
    if (is_feasible(whole, prob.vc)) return std::vector<Route>{std::move(whole)};
    return split_into_feasible_routes(shops, prob);
}

bool try_intra_swap(DayPlan& plan, std::size_t ri, std::size_t a, std::size_t b,
                    const RoutingProblem& prob) {
    const Route& old = plan.routes[ri];
    std::vector<int> shops = old.shops;
    std::swap(shops[a], shops[b]);

    const auto repaired = realize(shops, prob);
    if (!repaired) return false;

    double newDist = 0.0;
    for (const auto& r : *repaired) newDist += r.distanceKm;
    if (newDist >= old.distanceKm) return false;

    plan.totalDistanceKm += newDist - old.distanceKm;
    plan.routes[ri] = (*repaired)[0];
    for (std::size_t k = 1; k < repaired->size(); ++k) plan.routes.push_back((*repaired)[k]);
    return true;
}

bool try_cross_swap(DayPlan& plan, std::size_t r1, std::size_t r2, std::size_t a, std::size_t b,
                    const RoutingProblem& prob) {
    const Route& oldA = plan.routes[r1];
    const Route& oldB = plan.routes[r2];
    std::vector<int> shopsA = oldA.shops;
    std::vector<int> shopsB = oldB.shops;
    std::swap(shopsA[a], shopsB[b]);

    const auto repairedA = realize(shopsA, prob);
    if (!repairedA) return false;
    const auto repairedB = realize(shopsB, prob);
    if (!repairedB) return false;

    double newDist = 0.0;
    for (const auto& r : *repairedA) newDist += r.distanceKm;
    for (const auto& r : *repairedB) newDist += r.distanceKm;
    if (newDist >= oldA.distanceKm + oldB.distanceKm) return false;

    plan.totalDistanceKm += newDist - oldA.distanceKm - oldB.distanceKm;
    plan.routes[r1] = (*repairedA)[0];
    plan.routes[r2] = (*repairedB)[0];
    for (std::size_t k = 1; k < repairedA->size(); ++k) plan.routes.push_back((*repairedA)[k]);
    for (std::size_t k = 1; k < repairedB->size(); ++k) plan.routes.push_back((*repairedB)[k]);
    return true;
}

}  // namespace

DayPlan local_search(const DayPlan& plan, const RoutingProblem& prob, Rng& rng,
                     const LocalSearchParams& params) {
    DayPlan cur = plan;
    refresh_total(cur);

    // Improving each route. An accepted repair can shrink the route, so
    // sizes are re-read before every attempt.
    const std::size_t nIntra = cur.routes.size();
    for (std::size_t ri = 0; ri < nIntra; ++ri) {
        if (params.exhaustive) {
            for (std::size_t a = 0; a + 1 < cur.routes[ri].shops.size(); ++a) {
                for (std::size_t b = a + 1; b < cur.routes[ri].shops.size(); ++b) {
                    try_intra_swap(cur, ri, a, b, prob);
                }
            }
        } else {
            const int attempts =
                std::max<int>(static_cast<int>(cur.routes[ri].shops.size()), params.numberOfNeighbors);
            for (int k = 0; k < attempts; ++k) {
                const std::size_t sz = cur.routes[ri].shops.size();
                if (sz < 2) break;
                const auto a = uniform_index(rng, sz);
                auto b = uniform_index(rng, sz - 1);
                if (b >= a) ++b;
                try_intra_swap(cur, ri, a, b, prob);
            }
        }
    }

    // Improving pairs of routes. Repair may append fresh routes; those are
    // not revisited within this pass, matching the single sweep over the
    // routes of the incoming solution.
    const std::size_t nCross = cur.routes.size();
    for (std::size_t r1 = 0; r1 + 1 < nCross; ++r1) {
        for (std::size_t r2 = r1 + 1; r2 < nCross; ++r2) {
            if (params.exhaustive) {
                for (std::size_t a = 0; a < cur.routes[r1].shops.size(); ++a) {
                    for (std::size_t b = 0; b < cur.routes[r2].shops.size(); ++b) {
                        try_cross_swap(cur, r1, r2, a, b, prob);
                    }
                }
            } else {
                const std::size_t szA = cur.routes[r1].shops.size();
                const std::size_t szB = cur.routes[r2].shops.size();
                if (szA == 0 || szB == 0) continue;
                const auto a = uniform_index(rng, szA);
                const auto b = uniform_index(rng, szB);
                try_cross_swap(cur, r1, r2, a, b, prob);
            }
        }
    }

    return cur;
}

}  // namespace evita
