#ifndef EVITA_INSTANCE_HPP
#define EVITA_INSTANCE_HPP

#include <string>
#include <string_view>
#include <vector>

namespace evita {

// How the shops are scattered on the map. A metadata tag taken from the
// experiment configuration, never computed from the coordinates.
enum class Distribution { uniform, clusters, unknown };

const char* to_string(Distribution d);
Distribution distribution_from_string(std::string_view s);

struct Point {
    double x = 0.0;
    double y = 0.0;
};

// A geographic problem instance: one depot plus the shops it serves.
// Immutable after construction; safe to share across threads.
struct Instance {
    std::string id;
    int depotIndex = 0;             // index into points
    std::vector<Point> points;      // file order, depot included
    Distribution distribution = Distribution::unknown;

    int nShops() const { return static_cast<int>(points.size()) - 1; }

    // Node indices of all shops, in file order.
    std::vector<int> shopNodes() const;
};

// Full pairwise Euclidean distances in km, unrounded.
// Symmetric with zero diagonal by construction.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    DistanceMatrix(int n, std::vector<double> d) : n_(n), d_(std::move(d)) {}

    int size() const { return n_; }
    double operator()(int i, int j) const { return d_[static_cast<std::size_t>(i) * n_ + j]; }

private:
    int n_ = 0;
    std::vector<double> d_;
};

// Parses the keyword-header format (NAME/DIMENSION/NODE_COORD_SECTION/
// DEPOT_SECTION; DEMAND_SECTION and CAPACITY are accepted and ignored).
// Throws ParseError naming the offending line.
Instance parse_vrp_instance(std::string_view text);

// Parses the whitespace-delimited customer-table format (name line, VEHICLE
// block, CUSTOMER block with "id x y demand ..." rows; customer 0 is the
// depot). Demands and time windows are ignored.
Instance parse_delimited_instance(std::string_view text);

// Dispatches on content between the two supported formats.
Instance parse_instance_auto(std::string_view text);

// Reads and parses a file; throws ParseError/std::runtime_error on failure.
Instance load_instance(const std::string& path);

DistanceMatrix distance_matrix(const Instance& instance);

// Distance from the depot to the mean position of the shops (depot excluded
// from the mean).
double eccentricity(const Instance& instance);

// Canonical serialization. Coordinates are printed with shortest round-trip
// formatting, so parse(to_tsplib(parse(text))) preserves every coordinate
// bit-exactly.
std::string to_tsplib(const Instance& instance);

// One CSV row: id,n_shops,eccentricity,distribution (with header line).
std::string summary_csv(const Instance& instance);

}  // namespace evita

#endif
