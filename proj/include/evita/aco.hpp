#ifndef EVITA_ACO_HPP
#define EVITA_ACO_HPP

#include <utility>
#include <vector>

#include "evita/routing.hpp"

namespace evita {

struct AcoParams {
    int nIters = 50;
    int nAnts = 25;
    double alpha = 0.2;   // pheromone weight
    double beta = 0.8;    // heuristic (1/d) weight
    double gamma = 0.3;   // savings weight; the three need not add up to 1
    double tau0 = 0.5;    // initial pheromone
    double rho0 = 1.0;    // reinforcement factor, decays over iterations
    double rhoMin = 0.1;
    double p0 = 0.8;      // probability of the greedy transition, decays too
    double pMin = 0.1;

    void validate() const;  // throws ConfigError
};

// Per-arc pheromone over all nodes (depot included). Kept symmetric: the
// distance matrix is symmetric and arcs are undirected.
class PheromoneMatrix {
public:
    PheromoneMatrix(int n, double tau0) : n_(n), tau_(static_cast<std::size_t>(n) * n, tau0) {}

    int size() const { return n_; }
    double at(int i, int j) const { return tau_[static_cast<std::size_t>(i) * n_ + j]; }

    void set(int i, int j, double v) {
        tau_[static_cast<std::size_t>(i) * n_ + j] = v;
        tau_[static_cast<std::size_t>(j) * n_ + i] = v;
    }
    void add(int i, int j, double v) { set(i, j, at(i, j) + v); }

    double min_value() const;

private:
    int n_;
    std::vector<double> tau_;
};

// eta^beta and mu^gamma per arc, fixed for a whole solve. eta is 1/d (with a
// tiny floor against coincident points) and mu is the Clarke & Wright saving
// d(i,depot) + d(depot,j) - d(i,j).
class HeuristicTables {
public:
    HeuristicTables(const DistanceMatrix& dm, int depot, double beta, double gamma);

    double eta_beta(int i, int j) const { return etaBeta_[static_cast<std::size_t>(i) * n_ + j]; }
    double mu_gamma(int i, int j) const { return muGamma_[static_cast<std::size_t>(i) * n_ + j]; }

private:
    int n_;
    std::vector<double> etaBeta_;
    std::vector<double> muGamma_;
};

using Arc = std::pair<int, int>;  // stored with min node first (undirected)

inline Arc make_arc(int a, int b) { return a < b ? Arc{a, b} : Arc{b, a}; }

// One ant building a solution: its position, pending shops, the route under
// construction and the remaining driver time / vehicle load.
struct AntState {
    int position = 0;
    std::vector<int> shopsNotVisited;
    std::vector<Route> finishedRoutes;
    std::vector<int> currentRoute;
    std::vector<Arc> traversedArcs;
    double remainingTimeH = 0.0;
    int remainingLoad = 0;
    double cost = 0.0;
};

// Picks the ant's next node: with probability pT the argmax of
// tau^alpha * eta^beta * mu^gamma over the unvisited shops, otherwise a
// uniform random unvisited shop. When the chosen shop does not fit the
// remaining time (including its unloading stop and the return leg) or load,
// the depot is returned instead.
int transition(const AntState& ant, const PheromoneMatrix& tau, const HeuristicTables& h,
               const RoutingProblem& prob, double alpha, double pT, Rng& rng);

// Local updating: add 1/d to every traversed arc. Zero-length arcs are
// skipped.
void update_pheromones_local(PheromoneMatrix& tau, const std::vector<Arc>& arcs,
                             const DistanceMatrix& dm);

// A-posteriori updating: the iteration-worst path is reset to tau0 first,
// then every arc of the iteration-best path is multiplied by
// rho + (1-rho)/minCost, so arcs on both paths end up reinforced.
void update_pheromones_posteriori(PheromoneMatrix& tau, const std::vector<Arc>& bestPath,
                                  const std::vector<Arc>& worstPath, double minCost, double rho,
                                  double tau0);

// Self-adjusting parameter schedule: multiply by 0.95 each iteration, never
// below the floor.
double decay_parameter(double previous, double minimum);

// Random shop permutation greedily cut into feasible routes; the starting
// incumbent of the main loop.
DayPlan valid_random_solution(const std::vector<int>& shopsToday, const RoutingProblem& prob,
                              Rng& rng);

// The full colony: nIters iterations of nAnts ants built round-robin with
// shared local updates, 2-interchange improvement per ant, a-posteriori
// update with the iteration best/worst, and decaying rho and p. Returns the
// best feasible plan seen, never worse than the initial random solution.
DayPlan aco_solve(const std::vector<int>& shopsToday, const RoutingProblem& prob,
                  const AcoParams& params, Rng& rng, const LocalSearchParams& lsParams = {});

}  // namespace evita

#endif
