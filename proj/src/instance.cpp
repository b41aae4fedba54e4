#include "evita/instance.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "evita/errors.hpp"

namespace evita {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    return lines;
}

std::optional<long> parse_long(std::string_view tok) {
    long value = 0;
    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (res.ec != std::errc() || res.ptr != tok.data() + tok.size()) return std::nullopt;
    return value;
}

std::optional<double> parse_double(std::string_view tok) {
    double value = 0.0;
    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (res.ec != std::errc() || res.ptr != tok.data() + tok.size()) return std::nullopt;
    return value;
}

// Shortest decimal form that parses back to the same double.
std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

bool is_section_keyword(std::string_view tok) {
    return tok == "NODE_COORD_SECTION" || tok == "DEMAND_SECTION" ||
           tok == "DEPOT_SECTION" || tok == "EOF";
}

}  // namespace

const char* to_string(Distribution d) {
    switch (d) {
        case Distribution::uniform: return "uniform";
        case Distribution::clusters: return "clusters";
        default: return "unknown";
    }
}

Distribution distribution_from_string(std::string_view s) {
    if (s == "uniform") return Distribution::uniform;
    if (s == "clusters") return Distribution::clusters;
    if (s == "unknown" || s.empty()) return Distribution::unknown;
    throw ConfigError("unknown distribution tag: " + std::string(s));
}

std::vector<int> Instance::shopNodes() const {
    std::vector<int> nodes;
    nodes.reserve(points.size() - 1);
    for (int i = 0; i < static_cast<int>(points.size()); ++i) {
        if (i != depotIndex) nodes.push_back(i);
    }
    return nodes;
}

Instance parse_vrp_instance(std::string_view text) {
    const auto lines = split_lines(text);

    Instance inst;
    inst.id = "unnamed";
    long dimension = -1;
    std::vector<std::optional<Point>> coords;
    std::vector<long> depots;
    bool sawCoordSection = false;
    bool sawDepotSection = false;

    enum class Mode { header, coords, demand, depot, done };
    Mode mode = Mode::header;
    std::size_t coordCount = 0;

    for (std::size_t li = 0; li < lines.size(); ++li) {
        const std::size_t lineNo = li + 1;
        const auto line = trim(lines[li]);
        if (line.empty()) continue;
        const auto toks = split_ws(line);

        if (is_section_keyword(toks[0])) {
            if (mode == Mode::coords && coordCount != static_cast<std::size_t>(dimension)) {
                throw ParseError(lineNo, "dimension mismatch: expected " +
                                             std::to_string(dimension) + " coordinate lines, found " +
                                             std::to_string(coordCount));
            }
            if (toks[0] == "NODE_COORD_SECTION") {
                if (dimension <= 0) throw ParseError(lineNo, "NODE_COORD_SECTION before a valid DIMENSION");
                coords.assign(static_cast<std::size_t>(dimension), std::nullopt);
                coordCount = 0;
                sawCoordSection = true;
                mode = Mode::coords;
            } else if (toks[0] == "DEMAND_SECTION") {
                mode = Mode::demand;
            } else if (toks[0] == "DEPOT_SECTION") {
                sawDepotSection = true;
                mode = Mode::depot;
            } else {  // EOF
                mode = Mode::done;
                break;
            }
            continue;
        }

        switch (mode) {
            case Mode::header: {
                // "KEY : value" / "KEY: value" / "KEY :value"
                const auto colon = line.find(':');
                std::string_view key = colon == std::string_view::npos ? line : trim(line.substr(0, colon));
                std::string_view value = colon == std::string_view::npos ? std::string_view{} : trim(line.substr(colon + 1));
                if (key == "NAME") {
                    if (!value.empty()) inst.id = std::string(value);
                } else if (key == "DIMENSION") {
                    const auto d = parse_long(value);
                    if (!d || *d <= 0) throw ParseError(lineNo, "malformed DIMENSION value");
                    dimension = *d;
                }
                // Other header keys (TYPE, COMMENT, CAPACITY, EDGE_WEIGHT_TYPE, ...)
                // carry nothing we use.
                break;
            }
            case Mode::coords: {
                if (toks.size() < 3) throw ParseError(lineNo, "malformed coordinate line");
                const auto idx = parse_long(toks[0]);
                const auto x = parse_double(toks[1]);
                const auto y = parse_double(toks[2]);
                if (!idx || !x || !y) throw ParseError(lineNo, "malformed coordinate line");
                if (*idx < 1 || *idx > dimension) throw ParseError(lineNo, "node index out of range");
                if (!std::isfinite(*x) || !std::isfinite(*y)) throw ParseError(lineNo, "non-finite coordinate");
                auto& slot = coords[static_cast<std::size_t>(*idx - 1)];
                if (slot) throw ParseError(lineNo, "duplicate node index " + std::to_string(*idx));
                slot = Point{*x, *y};
                ++coordCount;
                break;
            }
            case Mode::demand:
                break;  // demands are a function of delivery frequency, not the file
            case Mode::depot: {
                const auto v = parse_long(toks[0]);
                if (!v) throw ParseError(lineNo, "malformed depot line");
                if (*v == -1) {
                    mode = Mode::header;
                } else {
                    if (*v < 1 || *v > dimension) throw ParseError(lineNo, "depot index out of range");
                    depots.push_back(*v);
                }
                break;
            }
            case Mode::done:
                break;
        }
    }

    if (dimension <= 0) throw ParseError("missing DIMENSION header");
    if (!sawCoordSection) throw ParseError("missing NODE_COORD_SECTION");
    if (coordCount != static_cast<std::size_t>(dimension)) {
        throw ParseError("dimension mismatch: expected " + std::to_string(dimension) +
                         " coordinate lines, found " + std::to_string(coordCount));
    }
    if (!sawDepotSection || depots.empty()) throw ParseError("missing or empty DEPOT_SECTION");
    if (depots.size() > 1) throw ParseError("multiple depots are not supported");

    inst.depotIndex = static_cast<int>(depots.front() - 1);
    inst.points.reserve(coords.size());
    for (const auto& c : coords) inst.points.push_back(*c);
    return inst;
}

Instance parse_delimited_instance(std::string_view text) {
    const auto lines = split_lines(text);

    Instance inst;
    bool sawCustomerHeader = false;
    bool named = false;
    std::vector<std::pair<long, Point>> rows;

    for (std::size_t li = 0; li < lines.size(); ++li) {
        const std::size_t lineNo = li + 1;
        const auto line = trim(lines[li]);
        if (line.empty()) continue;
        if (!named) {
            inst.id = std::string(split_ws(line).front());
            named = true;
            continue;
        }
        if (!sawCustomerHeader) {
            if (line.rfind("CUSTOMER", 0) == 0) sawCustomerHeader = true;
            continue;
        }
        const auto toks = split_ws(line);
        if (toks[0] == "CUST" || toks[0].find("NO.") != std::string_view::npos) continue;
        if (toks.size() < 4) throw ParseError(lineNo, "malformed customer row");
        const auto id = parse_long(toks[0]);
        const auto x = parse_double(toks[1]);
        const auto y = parse_double(toks[2]);
        if (!id || !x || !y) throw ParseError(lineNo, "malformed customer row");
        if (!std::isfinite(*x) || !std::isfinite(*y)) throw ParseError(lineNo, "non-finite coordinate");
        for (const auto& r : rows) {
            if (r.first == *id) throw ParseError(lineNo, "duplicate customer id " + std::to_string(*id));
        }
        rows.emplace_back(*id, Point{*x, *y});
    }

    if (!sawCustomerHeader) throw ParseError("missing CUSTOMER section");
    if (rows.size() < 2) throw ParseError("customer table needs a depot and at least one shop");

    int depotIdx = -1;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].first == 0) {
            if (depotIdx >= 0) throw ParseError("multiple depot rows (customer 0)");
            depotIdx = static_cast<int>(i);
        }
    }
    if (depotIdx < 0) throw ParseError("no depot row (customer 0)");

    inst.depotIndex = depotIdx;
    inst.points.reserve(rows.size());
    for (const auto& r : rows) inst.points.push_back(r.second);
    return inst;
}

Instance parse_instance_auto(std::string_view text) {
    if (text.find("NODE_COORD_SECTION") != std::string_view::npos) return parse_vrp_instance(text);
    if (text.find("CUSTOMER") != std::string_view::npos) return parse_delimited_instance(text);
    throw ParseError("unrecognized instance format (no NODE_COORD_SECTION or CUSTOMER section)");
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open instance file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance_auto(buf.str());
}

DistanceMatrix distance_matrix(const Instance& instance) {
    const int n = static_cast<int>(instance.points.size());
    std::vector<double> d(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double dist = std::hypot(instance.points[i].x - instance.points[j].x,
                                           instance.points[i].y - instance.points[j].y);
            d[static_cast<std::size_t>(i) * n + j] = dist;
            d[static_cast<std::size_t>(j) * n + i] = dist;
        }
    }
    return DistanceMatrix(n, std::move(d));
}

double eccentricity(const Instance& instance) {
    double sx = 0.0;
    double sy = 0.0;
    for (int i = 0; i < static_cast<int>(instance.points.size()); ++i) {
        if (i == instance.depotIndex) continue;
        sx += instance.points[i].x;
        sy += instance.points[i].y;
    }
    const double n = instance.nShops();
    const auto& depot = instance.points[instance.depotIndex];
    return std::hypot(depot.x - sx / n, depot.y - sy / n);
}

std::string to_tsplib(const Instance& instance) {
    std::ostringstream out;
    out << "NAME : " << instance.id << "\n"
        << "TYPE : CVRP\n"
        << "DIMENSION : " << instance.points.size() << "\n"
        << "EDGE_WEIGHT_TYPE : EUC_2D\n"
        << "NODE_COORD_SECTION\n";
    for (std::size_t i = 0; i < instance.points.size(); ++i) {
        out << (i + 1) << " " << format_double(instance.points[i].x) << " "
            << format_double(instance.points[i].y) << "\n";
    }
    out << "DEPOT_SECTION\n" << (instance.depotIndex + 1) << "\n-1\nEOF\n";
    return out.str();
}

std::string summary_csv(const Instance& instance) {
    std::ostringstream out;
    out << "id,n_shops,eccentricity,distribution\n"
        << instance.id << "," << instance.nShops() << "," << format_double(eccentricity(instance))
        << "," << to_string(instance.distribution) << "\n";
    return out.str();
}

}  // namespace evita
