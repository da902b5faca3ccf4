#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>

namespace dg {

// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Independent stream key for (key, index). Used for seed fan-out and
// per-step substreams so traces are reproducible at any thread count.
constexpr std::uint64_t derive_stream(std::uint64_t key, std::uint64_t index) {
    return mix64(key + 0x9e3779b97f4a7c15ull * (index + 1));
}

// Counter-based generator: the i-th output is a hash of (stream, i).
class Rng {
  public:
    explicit Rng(std::uint64_t stream) : stream_(stream) {}

    std::uint64_t next_u64() {
        return mix64(stream_ + 0x9e3779b97f4a7c15ull * (++counter_));
    }

    // Uniform on [0, 1).
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller; the spare value is cached.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform(); // (0, 1]
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

    // Index draw by inverse-CDF scan. probs must sum to ~1.
    int categorical(std::span<const double> probs) {
        const double u = uniform();
        double cum = 0.0;
        for (std::size_t i = 0; i + 1 < probs.size(); ++i) {
            cum += probs[i];
            if (u < cum)
                return static_cast<int>(i);
        }
        return static_cast<int>(probs.size()) - 1;
    }

  private:
    std::uint64_t stream_;
    std::uint64_t counter_ = 0;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

} // namespace dg
