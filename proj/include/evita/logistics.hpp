#ifndef EVITA_LOGISTICS_HPP
#define EVITA_LOGISTICS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace evita {

// Working week: Monday..Friday.
enum class Weekday { monday = 0, tuesday = 1, wednesday = 2, thursday = 3, friday = 4 };
inline constexpr int kWorkdays = 5;

const char* to_string(Weekday d);

// A weekly delivery pattern is a 5-bit mask over the working week. Monday is
// the most significant of the five bits and Friday the least significant, so
// e.g. pattern 21 = 10101 serves Monday, Wednesday and Friday. Business logic
// admits only 11 of the 31 possible masks.
inline constexpr std::array<int, 11> kAdmissiblePatterns = {5, 9, 10, 11, 13, 17, 18, 21, 23, 29, 31};

bool pattern_admissible(int id);

// Bit test without the admissibility check; callers validate ids up front.
inline bool pattern_serves(int id, Weekday day) {
    return (id >> (kWorkdays - 1 - static_cast<int>(day))) & 1;
}

// Days served by an admissible pattern, Monday first.
// Throws std::domain_error on inadmissible ids.
std::vector<Weekday> pattern_days(int id);

// Deliveries per week of an admissible pattern (= popcount of the mask).
// Throws std::domain_error on inadmissible ids.
int pattern_frequency(int id);

// Admissible pattern ids with the given weekly frequency.
std::vector<int> patterns_with_frequency(int frequency);

// Weekly inventory cost and per-delivery load for one shop at one frequency.
struct InventoryEntry {
    int costEur = 0;
    int deliverySize = 0;  // roll containers

    bool operator==(const InventoryEntry&) const = default;
};

// Per-shop inventory costs and delivery sizes by delivery frequency
// (1..5 days/week). Absent entries mark frequencies that are not admissible
// for that shop. Immutable in practice once built and validated.
class InventoryTable {
public:
    InventoryTable() = default;
    explicit InventoryTable(int nShops) : rows_(static_cast<std::size_t>(nShops)) {}

    int nShops() const { return static_cast<int>(rows_.size()); }

    void set(int shop, int frequency, InventoryEntry entry);
    bool admissible(int shop, int frequency) const;

    // Throws std::domain_error when the frequency is not admissible for the
    // shop (or the shop is out of range).
    const InventoryEntry& lookup(int shop, int frequency) const;

    std::vector<int> admissible_frequencies(int shop) const;

    // Admissible pattern ids for the shop: those whose frequency has a table
    // entry. Never empty for a valid table.
    std::vector<int> admissible_patterns(int shop) const;

    // Enforces the structural invariants: every shop has at least one
    // admissible frequency, costs are non-increasing in frequency, and
    // delivery sizes are positive integers. Throws std::domain_error.
    void validate() const;

    // CSV round-trip: "shop,frequency,cost_eur,delivery_size" with 1-based
    // shop numbers; absent rows mean inadmissible frequencies.
    std::string to_csv() const;
    static InventoryTable from_csv(std::string_view text);

    bool operator==(const InventoryTable&) const = default;

private:
    std::vector<std::array<std::optional<InventoryEntry>, 5>> rows_;
};

// Homogeneous fleet parameters.
struct VehicleConfig {
    int capacity = 12;            // roll containers
    double costPerKm = 0.6;       // euro
    double speedKmh = 60.0;
    double unloadTimeH = 0.25;
    double maxWorkTimeH = 8.0;

    void validate() const;  // all strictly positive, else ConfigError
};

// Knobs for the synthetic inventory-table generator. The cost band is chosen
// so that weekly inventory cost dominates transport cost on the bundled
// layouts; it is an experimental knob, not a calibrated constant.
struct InventoryProfile {
    int costMinEur = 280;
    int costMaxEur = 340;
    int capacity = 12;         // delivery sizes stay within [1, capacity]
    int minFrequency = 2;      // frequency 1 is excluded by default
    int maxFrequency = 5;

    void validate() const;  // throws ConfigError on bad bounds
};

// Deterministic synthetic table: each shop gets a contiguous admissible
// frequency range within [minFrequency, maxFrequency], costs sampled in the
// profile band and non-increasing in frequency, delivery sizes derived from a
// weekly volume so they are non-increasing in frequency and within capacity.
InventoryTable synth_inventory_table(std::uint64_t seed, int nShops, const InventoryProfile& profile);

}  // namespace evita

#endif
