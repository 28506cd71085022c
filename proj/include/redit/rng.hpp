// Copyright 2026 The redit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#ifndef REDIT_RNG_HPP
#define REDIT_RNG_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace redit {

/// Address of an independent random stream.  Two generators constructed from
/// the same (seed, stream) pair produce identical sequences.
struct RngSeed {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
};

/// Counter-based generator (Philox 4x32-10, Salmon et al. 2011).
///
/// The key holds the seed, the upper counter words hold the stream id and the
/// lower counter words advance per block, so every (seed, stream) pair is an
/// independent, reproducible sequence regardless of how many draws other
/// streams have consumed.
class Philox {
  public:
    Philox() : Philox(RngSeed{}) {}
    Philox(std::uint64_t seed, std::uint64_t stream = 0) : Philox(RngSeed{seed, stream}) {}
    explicit Philox(const RngSeed& s)
        : key0_(static_cast<std::uint32_t>(s.seed)),
          key1_(static_cast<std::uint32_t>(s.seed >> 32)),
          stream_lo_(static_cast<std::uint32_t>(s.stream)),
          stream_hi_(static_cast<std::uint32_t>(s.stream >> 32)) {}

    std::uint32_t next_u32() {
        if (buffer_pos_ == 4) refill();
        return buffer_[buffer_pos_++];
    }

    std::uint64_t next_u64() {
        const std::uint64_t lo = next_u32();
        const std::uint64_t hi = next_u32();
        return lo | (hi << 32);
    }

    /// Uniform double in [0, 1), 53 random bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller; generates pairs and caches the spare.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        // 1 - u lies in (0, 1], keeping the log argument positive.
        const double u = 1.0 - uniform();
        const double v = uniform();
        const double r = std::sqrt(-2.0 * std::log(u));
        const double a = 2.0 * M_PI * v;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    /// Unbiased integer in [0, n) by rejection.
    std::uint64_t index(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("Philox::index: n must be positive");
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % n;
    }

  private:
    static constexpr std::uint32_t kM0 = 0xD2511F53u;
    static constexpr std::uint32_t kM1 = 0xCD9E8D57u;
    static constexpr std::uint32_t kW0 = 0x9E3779B9u;
    static constexpr std::uint32_t kW1 = 0xBB67AE85u;

    static void mul_hi_lo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
        const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
        hi = static_cast<std::uint32_t>(p >> 32);
        lo = static_cast<std::uint32_t>(p);
    }

    void refill() {
        std::uint32_t c0 = pos_lo_, c1 = pos_hi_, c2 = stream_lo_, c3 = stream_hi_;
        std::uint32_t k0 = key0_, k1 = key1_;
        for (int round = 0; round < 10; ++round) {
            std::uint32_t hi0, lo0, hi1, lo1;
            mul_hi_lo(kM0, c0, hi0, lo0);
            mul_hi_lo(kM1, c2, hi1, lo1);
            const std::uint32_t n0 = hi1 ^ c1 ^ k0;
            const std::uint32_t n1 = lo1;
            const std::uint32_t n2 = hi0 ^ c3 ^ k1;
            const std::uint32_t n3 = lo0;
            c0 = n0;
            c1 = n1;
            c2 = n2;
            c3 = n3;
            k0 += kW0;
            k1 += kW1;
        }
        buffer_ = {c0, c1, c2, c3};
        buffer_pos_ = 0;
        if (++pos_lo_ == 0) ++pos_hi_;
    }

    std::uint32_t key0_, key1_;
    std::uint32_t stream_lo_, stream_hi_;
    std::uint32_t pos_lo_ = 0, pos_hi_ = 0;
    std::array<std::uint32_t, 4> buffer_{};
    int buffer_pos_ = 4;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

/// Deterministically derive a sub-stream address, e.g. one per Monte Carlo
/// chunk or worker.  Mixing keeps user-chosen consecutive stream ids and
/// derived ids from colliding.
inline RngSeed substream(const RngSeed& base, std::uint64_t index) {
    std::uint64_t z = base.stream + 0x9E3779B97F4A7C15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return RngSeed{base.seed, z ^ (z >> 31)};
}

}  // namespace redit

#endif  // REDIT_RNG_HPP
