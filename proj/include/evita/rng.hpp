#ifndef EVITA_RNG_HPP
#define EVITA_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace evita {

// All randomized components draw from a std::mt19937_64 through the helpers
// below. The standard pins down the engine's output sequence but not the
// distributions', so the draw functions are hand-rolled: identical seeds give
// identical runs on every platform and standard library.
using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// FNV-1a, used to fold strings (instance ids, solver names) into seeds.
inline std::uint64_t hash_string(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::uint64_t seed_combine(std::uint64_t a, std::uint64_t b) {
    return splitmix64(a ^ (splitmix64(b) + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2)));
}

template <typename... Rest>
std::uint64_t seed_combine(std::uint64_t a, std::uint64_t b, Rest... rest) {
    return seed_combine(seed_combine(a, b), static_cast<std::uint64_t>(rest)...);
}

// Uniform integer in [lo, hi] via Lemire's multiply-shift. The modulo bias of
// a 64-bit engine over these tiny spans is far below anything observable.
inline int uniform_int(Rng& rng, int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    const auto wide = static_cast<unsigned __int128>(rng()) * span;
    return lo + static_cast<int>(wide >> 64);
}

inline std::size_t uniform_index(Rng& rng, std::size_t size) {
    const auto wide = static_cast<unsigned __int128>(rng()) * size;
    return static_cast<std::size_t>(wide >> 64);
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

template <typename T>
void shuffle_vec(std::vector<T>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::swap(v[i - 1], v[uniform_index(rng, i)]);
    }
}

}  // namespace evita

#endif
