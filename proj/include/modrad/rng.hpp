#pragma once

#include <cstdint>

#include "modrad/matrix.hpp"

namespace modrad {
namespace rng {

// SplitMix64 finalizer; bijective on 64-bit words.
std::uint64_t mix64(std::uint64_t z);

// Deterministic stream splitting: independent-looking seed for a tagged
// sub-stream of a master seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt);

// Counter-based generator: output i of stream `seed` is mix64(seed + i * GAMMA).
// Stateless apart from the counter, so any draw is reproducible from
// (seed, index) alone.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t next_u64();

    // Uniform on [0, 1).
    double next_unit();

    // Standard normal, Box-Muller on two uniform draws.
    double next_gaussian();

    // Complex normal with E|z|^2 = 1 (components N(0, 1/2)).
    Complex next_complex_gaussian();

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

// Matrix with independent standard complex normal entries.
CMatrix random_ginibre(std::size_t rows, std::size_t cols, std::uint64_t seed);

}  // namespace rng
}  // namespace modrad
