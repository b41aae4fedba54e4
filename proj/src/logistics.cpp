#include "evita/logistics.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "evita/errors.hpp"
#include "evita/rng.hpp"

namespace evita {

const char* to_string(Weekday d) {
    switch (d) {
        case Weekday::monday: return "monday";
        case Weekday::tuesday: return "tuesday";
        case Weekday::wednesday: return "wednesday";
        case Weekday::thursday: return "thursday";
        default: return "friday";
    }
}

bool pattern_admissible(int id) {
    return std::find(kAdmissiblePatterns.begin(), kAdmissiblePatterns.end(), id) !=
           kAdmissiblePatterns.end();
}

namespace {
void require_admissible(int id) {
    if (!pattern_admissible(id)) {
        throw std::domain_error("inadmissible pattern id " + std::to_string(id));
    }
}
}  // namespace

std::vector<Weekday> pattern_days(int id) {
    require_admissible(id);
    std::vector<Weekday> days;
    for (int d = 0; d < kWorkdays; ++d) {
        if (pattern_serves(id, static_cast<Weekday>(d))) days.push_back(static_cast<Weekday>(d));
    }
    return days;
}

int pattern_frequency(int id) {
    require_admissible(id);
    return __builtin_popcount(static_cast<unsigned>(id));
}

std::vector<int> patterns_with_frequency(int frequency) {
    std::vector<int> out;
    for (int id : kAdmissiblePatterns) {
        if (__builtin_popcount(static_cast<unsigned>(id)) == frequency) out.push_back(id);
    }
    return out;
}

void InventoryTable::set(int shop, int frequency, InventoryEntry entry) {
    rows_.at(static_cast<std::size_t>(shop))[static_cast<std::size_t>(frequency - 1)] = entry;
}

bool InventoryTable::admissible(int shop, int frequency) const {
    if (shop < 0 || shop >= nShops() || frequency < 1 || frequency > 5) return false;
    return rows_[static_cast<std::size_t>(shop)][static_cast<std::size_t>(frequency - 1)].has_value();
}

const InventoryEntry& InventoryTable::lookup(int shop, int frequency) const {
    if (shop < 0 || shop >= nShops()) {
        throw std::domain_error("shop index out of range: " + std::to_string(shop));
    }
    if (frequency < 1 || frequency > 5 ||
        !rows_[static_cast<std::size_t>(shop)][static_cast<std::size_t>(frequency - 1)]) {
        throw std::domain_error("frequency " + std::to_string(frequency) +
                                " is not admissible for shop " + std::to_string(shop));
    }
    return *rows_[static_cast<std::size_t>(shop)][static_cast<std::size_t>(frequency - 1)];
}

std::vector<int> InventoryTable::admissible_frequencies(int shop) const {
    std::vector<int> out;
    for (int f = 1; f <= 5; ++f) {
        if (admissible(shop, f)) out.push_back(f);
    }
    return out;
}

std::vector<int> InventoryTable::admissible_patterns(int shop) const {
    std::vector<int> out;
    for (int id : kAdmissiblePatterns) {
        if (admissible(shop, __builtin_popcount(static_cast<unsigned>(id)))) out.push_back(id);
    }
    return out;
}

void InventoryTable::validate() const {
    for (int shop = 0; shop < nShops(); ++shop) {
        const auto freqs = admissible_frequencies(shop);
        if (freqs.empty()) {
            throw std::domain_error("shop " + std::to_string(shop) + " has no admissible frequency");
        }
        int prevCost = -1;
        for (int f = 5; f >= 1; --f) {
            if (!admissible(shop, f)) continue;
            const auto& e = lookup(shop, f);
            if (e.deliverySize < 1) {
                throw std::domain_error("shop " + std::to_string(shop) + " has delivery size < 1");
            }
            // Walking frequencies downwards, cost must not decrease.
            if (prevCost >= 0 && e.costEur < prevCost) {
                throw std::domain_error("shop " + std::to_string(shop) +
                                        ": inventory cost increases with frequency");
            }
            prevCost = e.costEur;
        }
    }
}

std::string InventoryTable::to_csv() const {
    std::ostringstream out;
    out << "shop,frequency,cost_eur,delivery_size\n";
    for (int shop = 0; shop < nShops(); ++shop) {
        for (int f = 1; f <= 5; ++f) {
            if (!admissible(shop, f)) continue;
            const auto& e = lookup(shop, f);
            out << (shop + 1) << "," << f << "," << e.costEur << "," << e.deliverySize << "\n";
        }
    }
    return out.str();
}

InventoryTable InventoryTable::from_csv(std::string_view text) {
    struct Row {
        int shop, freq, cost, size;
    };
    std::vector<Row> rows;
    int maxShop = 0;

    std::size_t lineNo = 0;
    std::size_t start = 0;
    while (start < text.size()) {
        auto nl = text.find('\n', start);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(start, nl - start);
        start = nl + 1;
        ++lineNo;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty() || lineNo == 1) continue;  // header

        Row row{};
        int field = 0;
        std::size_t pos = 0;
        int* dst[4] = {&row.shop, &row.freq, &row.cost, &row.size};
        while (field < 4) {
            auto comma = line.find(',', pos);
            if (comma == std::string_view::npos) comma = line.size();
            const auto tok = line.substr(pos, comma - pos);
            const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), *dst[field]);
            if (res.ec != std::errc() || res.ptr != tok.data() + tok.size()) {
                throw ParseError(lineNo, "malformed inventory CSV field");
            }
            ++field;
            pos = comma + 1;
            if (comma == line.size() && field < 4) throw ParseError(lineNo, "missing inventory CSV field");
        }
        if (row.shop < 1 || row.freq < 1 || row.freq > 5) {
            throw ParseError(lineNo, "inventory CSV row out of range");
        }
        maxShop = std::max(maxShop, row.shop);
        rows.push_back(row);
    }

    InventoryTable table(maxShop);
    for (const auto& r : rows) {
        table.set(r.shop - 1, r.freq, InventoryEntry{r.cost, r.size});
    }
    return table;
}

void VehicleConfig::validate() const {
    if (capacity <= 0 || costPerKm <= 0 || speedKmh <= 0 || unloadTimeH <= 0 || maxWorkTimeH <= 0) {
        throw ConfigError("vehicle parameters must be strictly positive");
    }
}

void InventoryProfile::validate() const {
    if (costMinEur <= 0 || costMaxEur < costMinEur) {
        throw ConfigError("inventory cost band must satisfy 0 < min <= max");
    }
    if (capacity < 1) throw ConfigError("inventory profile capacity must be >= 1");
    if (minFrequency < 1 || maxFrequency > 5 || minFrequency > maxFrequency) {
        throw ConfigError("inventory frequency range must lie within [1,5]");
    }
}

InventoryTable synth_inventory_table(std::uint64_t seed, int nShops, const InventoryProfile& profile) {
    profile.validate();
    if (nShops < 1) throw ConfigError("synthetic inventory table needs at least one shop");

    Rng rng(seed);
    InventoryTable table(nShops);
    for (int shop = 0; shop < nShops; ++shop) {
        const int fLo = uniform_int(rng, profile.minFrequency, profile.maxFrequency);
        const int fHi = uniform_int(rng, fLo, profile.maxFrequency);

        std::vector<int> costs;
        for (int f = fLo; f <= fHi; ++f) {
            costs.push_back(uniform_int(rng, profile.costMinEur, profile.costMaxEur));
        }
        std::sort(costs.begin(), costs.end(), std::greater<int>());

        // Weekly volume, split across deliveries. Keeping it at most
        // capacity * fLo guarantees per-delivery size within capacity.
        const int wMax = profile.capacity * fLo;
        const int wMin = std::min(fHi, wMax);
        const int weeklyVolume = uniform_int(rng, wMin, wMax);

        for (int f = fLo; f <= fHi; ++f) {
            const int size = std::max(1, (weeklyVolume + f - 1) / f);
            table.set(shop, f, InventoryEntry{costs[static_cast<std::size_t>(f - fLo)], size});
        }
    }
    table.validate();
    return table;
}

}  // namespace evita
