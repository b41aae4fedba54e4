#include "evita/tabu.hpp"

#include <algorithm>

#include "evita/cw.hpp"

namespace evita {

int TabuList::max_tenure() const {
    int best = 0;
    for (const auto& [move, tenure] : entries_) best = std::max(best, tenure);
    return best;
}

namespace {

struct ShopPosition {
    std::size_t route;
    std::size_t pos;
};

// node -> (route, position) for every shop in the plan.
std::map<int, ShopPosition> index_plan(const DayPlan& plan) {
    std::map<int, ShopPosition> where;
    for (std::size_t r = 0; r < plan.routes.size(); ++r) {
        for (std::size_t p = 0; p < plan.routes[r].shops.size(); ++p) {
            where[plan.routes[r].shops[p]] = ShopPosition{r, p};
        }
    }
    return where;
}

// Applies a move to a copy of `plan`; returns nullopt when the result is
// infeasible. No repair here: tabu search only visits valid neighbours.
std::optional<DayPlan> apply_move(const DayPlan& plan, const Move& m,
                                  const std::map<int, ShopPosition>& where,
                                  const RoutingProblem& prob) {
    DayPlan next = plan;
    const auto& pi = where.at(m.i);

    switch (m.kind) {
        case Move::Kind::swapIntraRoute: {
            const auto& pj = where.at(m.j);
            auto& shops = next.routes[pi.route].shops;
            std::swap(shops[pi.pos], shops[pj.pos]);
            Route updated = route_metrics(shops, prob);
            if (!is_feasible(updated, prob.vc)) return std::nullopt;
            next.totalDistanceKm += updated.distanceKm - next.routes[pi.route].distanceKm;
            next.routes[pi.route] = std::move(updated);
            break;
        }
        case Move::Kind::swapInterRoute: {
            const auto& pj = where.at(m.j);
            auto& shopsA = next.routes[pi.route].shops;
            auto& shopsB = next.routes[pj.route].shops;
            std::swap(shopsA[pi.pos], shopsB[pj.pos]);
            Route updatedA = route_metrics(shopsA, prob);
            if (!is_feasible(updatedA, prob.vc)) return std::nullopt;
            Route updatedB = route_metrics(shopsB, prob);
            if (!is_feasible(updatedB, prob.vc)) return std::nullopt;
            next.totalDistanceKm += updatedA.distanceKm + updatedB.distanceKm -
                                    next.routes[pi.route].distanceKm -
                                    next.routes[pj.route].distanceKm;
            next.routes[pi.route] = std::move(updatedA);
            next.routes[pj.route] = std::move(updatedB);
            break;
        }
        case Move::Kind::extractToNewRoute: {
            auto shops = next.routes[pi.route].shops;
            shops.erase(shops.begin() + static_cast<std::ptrdiff_t>(pi.pos));
            Route shrunk = route_metrics(shops, prob);
            Route fresh = route_metrics({m.i}, prob);
            if (!is_feasible(shrunk, prob.vc) || !is_feasible(fresh, prob.vc)) return std::nullopt;
            next.totalDistanceKm += shrunk.distanceKm + fresh.distanceKm -
                                    next.routes[pi.route].distanceKm;
            next.routes[pi.route] = std::move(shrunk);
            next.routes.push_back(std::move(fresh));
            break;
        }
    }
    return next;
}

std::vector<Move> enumerate_moves(const DayPlan& plan) {
    std::vector<Move> moves;
    // Swaps within one route.
    for (const auto& route : plan.routes) {
        for (std::size_t a = 0; a < route.shops.size(); ++a) {
            for (std::size_t b = a + 1; b < route.shops.size(); ++b) {
                const int i = std::min(route.shops[a], route.shops[b]);
                const int j = std::max(route.shops[a], route.shops[b]);
                moves.push_back(Move{Move::Kind::swapIntraRoute, i, j});
            }
        }
    }
    // Swaps across different routes.
    for (std::size_t r1 = 0; r1 < plan.routes.size(); ++r1) {
        for (std::size_t r2 = r1 + 1; r2 < plan.routes.size(); ++r2) {
            for (int a : plan.routes[r1].shops) {
                for (int b : plan.routes[r2].shops) {
                    moves.push_back(Move{Move::Kind::swapInterRoute, std::min(a, b), std::max(a, b)});
                }
            }
        }
    }
    // Extraction onto a fresh route. Pulling the only shop of a route out
    // reproduces the same plan, so singleton routes are skipped.
    for (const auto& route : plan.routes) {
        if (route.shops.size() < 2) continue;
        for (int s : route.shops) moves.push_back(Move{Move::Kind::extractToNewRoute, s, -1});
    }
    std::sort(moves.begin(), moves.end());
    return moves;
}

}  // namespace

std::optional<NeighbourResult> best_neighbour(const DayPlan& current, const TabuList& tabu,
                                              double bestKnownCost, const RoutingProblem& prob) {
    const auto where = index_plan(current);
    std::optional<NeighbourResult> best;

    for (const auto& move : enumerate_moves(current)) {
        auto neighbour = apply_move(current, move, where, prob);
        if (!neighbour) continue;
        const double cost = neighbour->totalDistanceKm;

        bool isTabu = tabu.contains(move);
        if (cost < bestKnownCost) isTabu = false;  // aspiration
        if (isTabu) continue;

        if (!best || cost < best->cost) {
            best = NeighbourResult{std::move(*neighbour), move, cost};
        }
    }
    return best;
}

DayPlan tabu_search(const DayPlan& seed, const RoutingProblem& prob, const TabuParams& params) {
    DayPlan current = seed;
    refresh_total(current);
    DayPlan best = current;
    double bestCost = current.totalDistanceKm;

    TabuList tabu;
    int stagnation = 0;
    for (int iter = 0; iter < params.maxIterations && stagnation < params.stagnationLimit; ++iter) {
        auto step = best_neighbour(current, tabu, bestCost, prob);
        if (!step) break;  // search stalled: every neighbour tabu or infeasible

        current = step->plan;
        if (step->cost < bestCost) {
            best = current;
            bestCost = step->cost;
            stagnation = 0;
        } else {
            ++stagnation;
        }
        tabu.tick();
        tabu.insert(step->move, params.tenure);
    }
    return best;
}

DayPlan cwts_solve(const std::vector<int>& shopsToday, const RoutingProblem& prob,
                   const TabuParams& params) {
    return tabu_search(clarke_wright(shopsToday, prob), prob, params);
}

}  // namespace evita
