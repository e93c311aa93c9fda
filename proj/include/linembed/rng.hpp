#pragma once

#include "linembed/rational.hpp"

#include <cstdint>

namespace linembed {

/// 64-bit linear congruential generator with Knuth's MMIX constants:
///   state <- state * 6364136223846793005 + 1442695040888963407  (mod 2^64)
/// The initial state is the seed; every draw advances once and returns the new state.
class Lcg64
{
public:
    static constexpr std::uint64_t kMultiplier = 6364136223846793005ull;
    static constexpr std::uint64_t kIncrement = 1442695040888963407ull;

    explicit Lcg64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        state_ = state_ * kMultiplier + kIncrement;
        return state_;
    }

    /// Uniform integer in [0, bound) for 1 <= bound <= 2^64: floor(next() * bound / 2^64).
    std::uint64_t below(std::uint64_t bound)
    {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    /// Arbitrary-precision bound. Bounds up to 2^64 use below(); larger ones take
    /// ceil(bits/64) + 1 draws concatenated most-significant first, reduced mod bound.
    Integer below(const Integer& bound);

private:
    std::uint64_t state_;
};

} // namespace linembed
