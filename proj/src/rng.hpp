#pragma once

#include <cstdint>
#include <random>

namespace prefkernel {

/// mt19937_64 with hand-rolled bounded draws. The standard distributions are
/// implementation-defined, so results would differ across toolchains; these
/// helpers keep seeded runs byte-identical everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform on [lo, hi], inclusive.
    int uniform_int(int lo, int hi) {
        std::uint64_t span = std::uint64_t(hi - lo) + 1;
        return lo + int(next() % span);
    }

    /// Uniform on [lo, hi).
    double uniform_real(double lo, double hi) {
        double unit = double(next() >> 11) * 0x1.0p-53;
        return lo + unit * (hi - lo);
    }

    bool chance(double p) { return uniform_real(0.0, 1.0) < p; }

private:
    std::mt19937_64 eng_;
};

}  // namespace prefkernel
