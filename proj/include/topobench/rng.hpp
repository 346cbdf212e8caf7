#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace topobench {

// SplitMix64 (Steele, Lea, Flood 2014). Chosen as the project-wide PRNG
// because the full algorithm fits in three lines and reproduces bit-for-bit
// across platforms and languages; see docs/FORMATS.md for the contract.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1), using the top 53 bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double next_uniform(double lo, double hi) {
        return lo + (hi - lo) * next_unit();
    }

    // Uniform integer in [0, bound) via Lemire's multiply-shift reduction.
    std::uint64_t next_below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

  private:
    std::uint64_t state_;
};

// FNV-1a 64-bit over raw bytes.
std::uint64_t fnv1a64(std::string_view bytes);

// Per-run seed: FNV-1a 64 of "<master>:<city>:<instance>:<run>" with the
// integers in decimal. Documented in docs/FORMATS.md.
std::uint64_t derive_run_seed(std::uint64_t master_seed, std::string_view city,
                              int instance_index, int run_index);

// Seed for the start-node sampling stream of one city:
// FNV-1a 64 of "<master>:<city>:starts".
std::uint64_t derive_start_seed(std::uint64_t master_seed,
                                std::string_view city);

}  // namespace topobench
