#pragma once

#include <cstdint>
#include <string_view>

namespace plcsim {

/// splitmix64 finalizer; also used to derive substream seeds.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 14695981039346656037ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

/// Deterministic 64-bit generator (splitmix64). Substreams are a pure
/// function of (master seed, label), so two simulations that share a master
/// seed hand identical draw sequences to identically-labelled consumers no
/// matter what else runs next to them.
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed) : state_(seed) {}

    static RngStream substream(std::uint64_t master_seed, std::string_view label) {
        return RngStream(mix64(master_seed ^ fnv1a64(label)));
    }

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix64(state_);
    }

    /// Uniform in [0, 1), 53-bit resolution.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    /// Always consumes exactly one draw, regardless of p.
    bool bernoulli(double p) { return next_double() < p; }

  private:
    std::uint64_t state_;
};

}  // namespace plcsim
