#include "evita/cw.hpp"

#include <algorithm>
#include <string>

#include "evita/errors.hpp"

namespace evita {

std::vector<Saving> compute_savings(const std::vector<int>& shops, const RoutingProblem& prob) {
    std::vector<Saving> savings;
    savings.reserve(shops.size() * (shops.size() - 1));
    for (int i : shops) {
        for (int j : shops) {
            if (i == j) continue;
            const double value = prob.dist(i, prob.depot) + prob.dist(prob.depot, j) - prob.dist(i, j);
            savings.push_back(Saving{i, j, value});
        }
    }
    return savings;
}

DayPlan clarke_wright(const std::vector<int>& shopsToday, const RoutingProblem& prob) {
    DayPlan plan;
    if (shopsToday.empty()) return plan;

    // One route per shop; routeOf maps node -> route slot.
    std::vector<std::vector<int>> routes;
    std::vector<int> routeOf(static_cast<std::size_t>(prob.dm.size()), -1);
    routes.reserve(shopsToday.size());
    for (int s : shopsToday) {
        Route singleton = route_metrics({s}, prob);
        if (!is_feasible(singleton, prob.vc)) {
            throw InfeasibleError("shop " + std::to_string(s) +
                                  " cannot be served within vehicle capacity/working time");
        }
        routeOf[static_cast<std::size_t>(s)] = static_cast<int>(routes.size());
        routes.push_back({s});
    }

    auto savings = compute_savings(shopsToday, prob);
    std::sort(savings.begin(), savings.end(), [](const Saving& a, const Saving& b) {
        if (a.value != b.value) return a.value > b.value;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    });

    for (const auto& s : savings) {
        if (s.value <= 0.0) break;  // merging on a non-positive saving never helps
        const int ri = routeOf[static_cast<std::size_t>(s.i)];
        const int rj = routeOf[static_cast<std::size_t>(s.j)];
        if (ri == rj) continue;
        if (routes[static_cast<std::size_t>(ri)].back() != s.i) continue;
        if (routes[static_cast<std::size_t>(rj)].front() != s.j) continue;

        std::vector<int> merged = routes[static_cast<std::size_t>(ri)];
        merged.insert(merged.end(), routes[static_cast<std::size_t>(rj)].begin(),
                      routes[static_cast<std::size_t>(rj)].end());
        if (!is_feasible(route_metrics(merged, prob), prob.vc)) continue;

        for (int node : routes[static_cast<std::size_t>(rj)]) {
            routeOf[static_cast<std::size_t>(node)] = ri;
        }
        routes[static_cast<std::size_t>(ri)] = std::move(merged);
        routes[static_cast<std::size_t>(rj)].clear();
    }

    for (auto& shops : routes) {
        if (shops.empty()) continue;
        plan.routes.push_back(route_metrics(shops, prob));
    }
    refresh_total(plan);
    return plan;
}

DayPlan cwls_solve(const std::vector<int>& shopsToday, const RoutingProblem& prob, Rng& rng,
                   const LocalSearchParams& lsParams) {
    return local_search(clarke_wright(shopsToday, prob), prob, rng, lsParams);
}

}  // namespace evita
