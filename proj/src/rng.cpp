#include "topobench/rng.hpp"

namespace topobench {

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 1469598103934665603ULL;  // FNV offset basis
    for (unsigned char c : bytes) {
        h ^= static_cast<std::uint64_t>(c);
        h *= 1099511628211ULL;  // FNV prime
    }
    return h;
}

std::uint64_t derive_run_seed(std::uint64_t master_seed, std::string_view city,
                              int instance_index, int run_index) {
    std::string key = std::to_string(master_seed) + ":" + std::string(city) +
                      ":" + std::to_string(instance_index) + ":" +
                      std::to_string(run_index);
    return fnv1a64(key);
}

std::uint64_t derive_start_seed(std::uint64_t master_seed,
                                std::string_view city) {
    std::string key =
        std::to_string(master_seed) + ":" + std::string(city) + ":starts";
    return fnv1a64(key);
}

}  // namespace topobench
