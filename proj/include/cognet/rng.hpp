#pragma once

// Seeded random streams with platform-independent draws.
//
// The standard distributions are implementation-defined, so reports would
// differ between standard libraries. Everything here is built on the raw
// 64-bit output of mt19937_64, which is fully specified.

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <utility>

namespace cognet {

// FNV-1a, used wherever a stable (non-std::hash) digest is needed.
constexpr std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 0xcbf29ce484222325ULL) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Independent stream for realization `index` of ensemble `stream`.
    static Rng stream(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                          static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
        Rng r(0);
        r.engine_.seed(seq);
        return r;
    }

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n), n > 0. Rejection sampling, no modulo bias.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = n * (UINT64_MAX / n);
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    bool bernoulli(double p) { return uniform() < p; }

    // Failures before the first success, success probability p in (0, 1].
    std::uint64_t geometric(double p) {
        if (p >= 1.0) return 0;
        const double u = 1.0 - uniform();  // (0, 1]
        const double k = std::floor(std::log(u) / std::log1p(-p));
        return k >= 1.8e19 ? UINT64_MAX : static_cast<std::uint64_t>(k);
    }

    template <typename T>
    void shuffle(std::span<T> items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::swap(items[i - 1], items[below(i)]);
        }
    }

    // Moves a uniform k-subset into items[0..k). Valid whatever the prior order.
    template <typename T>
    void partial_shuffle(std::span<T> items, std::size_t k) {
        const std::size_t n = items.size();
        for (std::size_t i = 0; i < k && i < n; ++i) {
            std::swap(items[i], items[i + below(n - i)]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace cognet
