#ifndef EVITA_TABU_HPP
#define EVITA_TABU_HPP

#include <map>
#include <optional>
#include <tuple>

#include "evita/routing.hpp"

namespace evita {

// The three neighbourhood moves: swap two shops of one route, swap two shops
// of different routes, or move one shop onto a fresh route. A move's identity
// is its kind plus the shop ids involved (swaps are unordered pairs).
struct Move {
    enum class Kind { swapIntraRoute = 0, swapInterRoute = 1, extractToNewRoute = 2 };

    Kind kind = Kind::swapIntraRoute;
    int i = 0;
    int j = -1;  // unused for extractToNewRoute

    friend bool operator<(const Move& a, const Move& b) {
        return std::tie(a.kind, a.i, a.j) < std::tie(b.kind, b.i, b.j);
    }
    friend bool operator==(const Move& a, const Move& b) {
        return a.kind == b.kind && a.i == b.i && a.j == b.j;
    }
};

// Moves currently forbidden, each with its remaining tenure in iterations.
class TabuList {
public:
    bool contains(const Move& m) const { return entries_.count(m) != 0; }

    // (Re)inserts with full tenure; re-applying a move refreshes it.
    void insert(const Move& m, int tenure) { entries_[m] = tenure; }

    // One iteration passes: decrement every tenure, drop expired entries.
    void tick() {
        for (auto it = entries_.begin(); it != entries_.end();) {
            if (--it->second <= 0) {
                it = entries_.erase(it);
            } else {
                ++it;
            }
        }
    }

    std::size_t size() const { return entries_.size(); }
    int max_tenure() const;

private:
    std::map<Move, int> entries_;
};

struct TabuParams {
    int tenure = 12;
    int stagnationLimit = 20;   // stop after this many non-improving iterations
    int maxIterations = 10000;  // hard safety cap
};

struct NeighbourResult {
    DayPlan plan;
    Move move;
    double cost = 0.0;
};

// Evaluates every feasible neighbour of `current`, skipping tabu moves unless
// they beat `bestKnownCost` (aspiration), and returns the cheapest admissible
// one (which may be worse than `current`). Enumeration order is move kind,
// then ascending shop ids, and ties keep the first find, so the search is
// fully deterministic. Returns nullopt when no admissible neighbour exists.
std::optional<NeighbourResult> best_neighbour(const DayPlan& current, const TabuList& tabu,
                                              double bestKnownCost, const RoutingProblem& prob);

// Tabu search from an arbitrary feasible seed plan.
DayPlan tabu_search(const DayPlan& seed, const RoutingProblem& prob, const TabuParams& params = {});

// The production configuration: tabu search seeded with the Clarke & Wright
// solution. The result never costs more than the seed.
DayPlan cwts_solve(const std::vector<int>& shopsToday, const RoutingProblem& prob,
                   const TabuParams& params = {});

}  // namespace evita

#endif
