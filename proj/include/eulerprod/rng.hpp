#pragma once

#include <cstdint>
#include <random>

namespace eulerprod {

// Seeded generator with distribution code of our own, so streams are
// identical across standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed ^ 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next() { return g_(); }

    // Uniform integer in [lo, hi].
    long uniform_int(long lo, long hi)
    {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next() % span);
    }

    // Uniform real in [lo, hi).
    double uniform(double lo, double hi)
    {
        const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

private:
    std::mt19937_64 g_;
};

} // namespace eulerprod
